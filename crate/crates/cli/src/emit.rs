//! Deterministic emitters: CSV, JSON, and LaTeX renderings of class
//! expansions and of full tables. Re-running any command yields
//! byte-identical output.

use comather_core::chow::SchubertClass;
use comather_core::poly::EquivPoly;
use comather_core::weyl::WeylElt;
use serde_json::{json, Value};

use crate::session::Session;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Latex,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(format!("unknown format {other:?} (csv|json|latex)")),
        }
    }
}

pub fn poly_string(session: &Session, p: &EquivPoly) -> String {
    let rank = session.rs.rank;
    p.format_with(&move |i| {
        if i == rank {
            "h".to_string()
        } else {
            format!("a{}", i + 1)
        }
    })
}

/// JSON form of a polynomial: a list of `{exponents, coeff}` terms, with the
/// coefficient as an exact `p/q` string. The last exponent slot is `h`.
pub fn poly_json(p: &EquivPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            json!({
                "exponents": e.iter().map(|&x| x as u32).collect::<Vec<_>>(),
                "coeff": c.to_string(),
            })
        })
        .collect();
    json!(terms)
}

fn space_name(session: &Session) -> String {
    if session.space.is_complete() {
        format!("{}/B", session.rs.name())
    } else {
        let node = session.space.omitted.iter().next().unwrap() + 1;
        format!("{}/P{}", session.rs.name(), node)
    }
}

/// Terms sorted by dimension, largest stratum first.
fn sorted_terms<'a>(
    session: &Session,
    class: &'a SchubertClass,
) -> Vec<(&'a WeylElt, &'a EquivPoly)> {
    let mut terms: Vec<_> = class.terms().collect();
    terms.sort_by_key(|(w, _)| (std::cmp::Reverse(w.length()), session.label_of(w)));
    terms
}

pub fn class_csv(session: &Session, class: &SchubertClass) -> String {
    let mut out = String::from("label,word,coeff\n");
    for (w, c) in sorted_terms(session, class) {
        out.push_str(&format!(
            "{},{},{}\n",
            session.label_of(w),
            session.word_of(w),
            poly_string(session, c)
        ));
    }
    out
}

pub fn class_json(session: &Session, class: &SchubertClass) -> Value {
    let terms: Vec<Value> = sorted_terms(session, class)
        .into_iter()
        .map(|(w, c)| {
            json!({
                "label": session.label_of(w),
                "word": session.word_of(w),
                "coeff": poly_string(session, c),
            })
        })
        .collect();
    json!({
        "space": space_name(session),
        "equivariant": class.equivariant,
        "terms": terms,
    })
}

pub fn class_latex(session: &Session, class: &SchubertClass) -> String {
    let mut parts = Vec::new();
    for (w, c) in sorted_terms(session, class) {
        let coeff = poly_string(session, c);
        let label = session.label_of(w);
        if coeff == "1" {
            parts.push(format!("[{label}]"));
        } else if coeff.contains('+') || coeff.contains(" - ") {
            parts.push(format!("({coeff})\\,[{label}]"));
        } else {
            parts.push(format!("{coeff}\\,[{label}]"));
        }
    }
    parts.join(" + ")
}

/// A rectangular table of integers with labelled rows and columns.
pub struct Table {
    pub space: String,
    pub kind: String,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub cells: Vec<Vec<i64>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push(',');
        out.push_str(&self.col_labels.join(","));
        out.push('\n');
        for (label, row) in self.row_labels.iter().zip(&self.cells) {
            out.push_str(label);
            for v in row {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "space": self.space,
            "kind": self.kind,
            "columns": self.col_labels,
            "rows": self.row_labels,
            "cells": self.cells,
        })
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "\\begin{{tabular}}{{|c|{}|}}\n\\hline\n",
            "c".repeat(self.col_labels.len())
        ));
        out.push_str(&format!(
            " & {} \\\\ \\hline\n",
            self.col_labels.join(" & ")
        ));
        for (label, row) in self.row_labels.iter().zip(&self.cells) {
            let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("{} & {} \\\\\n", label, vals.join(" & ")));
        }
        out.push_str("\\hline\n\\end{tabular}\n");
        out
    }
}
