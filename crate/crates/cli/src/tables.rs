//! Full-table computation: Mather / Euler / CSM tables of a space, with the
//! deterministic row and column orders (Euler tables use the plain
//! lexicographic order on labels; Mather and CSM tables sort by dimension
//! first).

use comather_core::csm::{euler_obstructions, CsmTable};
use comather_core::mather::mather_class;
use comather_core::weyl::WeylElt;
use num_traits::ToPrimitive;

use crate::emit::Table;
use crate::session::{label_sort_key, Session};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Mather,
    Euler,
    Csm,
}

impl std::str::FromStr for TableKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "mather" => Ok(TableKind::Mather),
            "euler" => Ok(TableKind::Euler),
            "csm" => Ok(TableKind::Csm),
            other => Err(format!("unknown table kind {other:?} (mather|euler|csm)")),
        }
    }
}

impl TableKind {
    pub fn name(&self) -> &'static str {
        match self {
            TableKind::Mather => "mather",
            TableKind::Euler => "euler",
            TableKind::Csm => "csm",
        }
    }
}

/// Index elements in the table order for this kind.
pub fn ordered_elements(session: &mut Session, kind: TableKind) -> Result<Vec<WeylElt>, String> {
    let mut reps = session.enumerate()?;
    match &session.quot {
        Some(q) => {
            let rs = session.rs.clone();
            match kind {
                // Euler tables are conventionally laid out lexicographically
                TableKind::Euler => {
                    reps.sort_by_key(|w| label_sort_key(&q.label(&rs, w).unwrap()).1.clone())
                }
                _ => reps.sort_by_key(|w| {
                    let k = label_sort_key(&q.label(&rs, w).unwrap());
                    (k.0, k.1, k.2)
                }),
            }
        }
        None => reps.sort_by_key(|w| (w.length(), w.canonical_word(&session.rs))),
    }
    Ok(reps)
}

fn int_cell(p: &comather_core::poly::EquivPoly) -> i64 {
    assert!(p.is_constant(), "non-constant table cell");
    let r = p.constant_term();
    assert!(r.is_integer());
    r.to_integer().to_i64().expect("cell fits i64")
}

/// Computes the requested table; columns are restricted to `only` when given.
pub fn compute_table(
    session: &mut Session,
    kind: TableKind,
    only: Option<&[WeylElt]>,
) -> Result<Table, String> {
    let space = session.space.clone();
    let rows = ordered_elements(session, kind)?;
    let cols: Vec<WeylElt> = match only {
        Some(list) => list.to_vec(),
        None => rows.clone(),
    };
    let row_labels: Vec<String> = rows.iter().map(|w| session.label_of(w)).collect();
    let col_labels: Vec<String> = cols.iter().map(|w| session.label_of(w)).collect();
    let mut cells = vec![vec![0i64; cols.len()]; rows.len()];

    match kind {
        TableKind::Mather => {
            for (j, w) in cols.iter().enumerate() {
                let m =
                    mather_class(&mut session.wctx, &space, w, false).map_err(|e| e.to_string())?;
                for (i, v) in rows.iter().enumerate() {
                    let c = m.downstairs.coefficient(v);
                    if !c.is_zero() {
                        cells[i][j] = int_cell(&c);
                    }
                }
            }
        }
        TableKind::Csm => {
            let table = CsmTable::build(&mut session.wctx, &space, false, session.cap)
                .map_err(|e| e.to_string())?;
            for (j, w) in cols.iter().enumerate() {
                let class = &table.classes[w];
                for (i, v) in rows.iter().enumerate() {
                    let c = class.coefficient(v);
                    if !c.is_zero() {
                        cells[i][j] = int_cell(&c);
                    }
                }
            }
        }
        TableKind::Euler => {
            let table = CsmTable::build(&mut session.wctx, &space, false, session.cap)
                .map_err(|e| e.to_string())?;
            for (j, w) in cols.iter().enumerate() {
                let e = euler_obstructions(&mut session.wctx, &space, w, &table)
                    .map_err(|e| e.to_string())?;
                for (i, u) in rows.iter().enumerate() {
                    cells[i][j] = e.value(u);
                }
            }
        }
    }

    let space_name = if space.is_complete() {
        format!("{}/B", session.rs.name())
    } else {
        format!(
            "{}/P{}",
            session.rs.name(),
            space.omitted.iter().next().unwrap() + 1
        )
    };
    Ok(Table {
        space: space_name,
        kind: kind.name().to_string(),
        row_labels,
        col_labels,
        cells,
    })
}
