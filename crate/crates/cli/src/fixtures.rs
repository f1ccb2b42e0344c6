//! Golden fixtures: verbatim transcriptions of the published tables, each a
//! CSV block with the printed row and column orders. `golden_diff`
//! recomputes every printed cell, lists mismatches, and checks that
//! re-rendering the computed block reproduces the fixture byte-for-byte.

use std::collections::BTreeMap;

use comather_core::weyl::WeylElt;

use crate::session::Session;
use crate::tables::{compute_table, TableKind};

pub struct FixtureBlock {
    pub name: &'static str,
    pub space: &'static str,
    pub kind: TableKind,
    pub csv: String,
}

pub struct Golden {
    pub id: &'static str,
    pub blocks: Vec<FixtureBlock>,
}

pub fn golden_ids() -> Vec<&'static str> {
    vec![
        "Gr36",
        "Gr37",
        "Gr48",
        "LG48-mather",
        "LG48-euler",
        "E6-mather",
    ]
}

pub fn golden(id: &str) -> Option<Golden> {
    let b = |name, space, kind, csv: &str| FixtureBlock {
        name,
        space,
        kind,
        csv: csv.to_string(),
    };
    let g = match id {
        "Gr36" => Golden {
            id: "Gr36",
            blocks: vec![b(
                "gr36_mather",
                "A5/P3",
                TableKind::Mather,
                include_str!("../fixtures/gr36_mather.csv"),
            )],
        },
        "Gr37" => Golden {
            id: "Gr37",
            blocks: vec![b(
                "gr37_mather",
                "A6/P4",
                TableKind::Mather,
                include_str!("../fixtures/gr37_mather.csv"),
            )],
        },
        "Gr48" => Golden {
            id: "Gr48",
            blocks: vec![
                b(
                    "gr48_mather_a",
                    "A7/P4",
                    TableKind::Mather,
                    include_str!("../fixtures/gr48_mather_a.csv"),
                ),
                b(
                    "gr48_mather_b",
                    "A7/P4",
                    TableKind::Mather,
                    include_str!("../fixtures/gr48_mather_b.csv"),
                ),
                b(
                    "gr48_mather_c",
                    "A7/P4",
                    TableKind::Mather,
                    include_str!("../fixtures/gr48_mather_c.csv"),
                ),
            ],
        },
        "LG48-mather" => Golden {
            id: "LG48-mather",
            blocks: vec![b(
                "lg48_mather",
                "C4/P4",
                TableKind::Mather,
                include_str!("../fixtures/lg48_mather.csv"),
            )],
        },
        "LG48-euler" => Golden {
            id: "LG48-euler",
            blocks: vec![b(
                "lg48_euler",
                "C4/P4",
                TableKind::Euler,
                include_str!("../fixtures/lg48_euler.csv"),
            )],
        },
        "E6-mather" => Golden {
            id: "E6-mather",
            blocks: vec![
                b(
                    "e6_mather_a",
                    "E6/P6",
                    TableKind::Mather,
                    include_str!("../fixtures/e6_mather_a.csv"),
                ),
                b(
                    "e6_mather_b",
                    "E6/P6",
                    TableKind::Mather,
                    include_str!("../fixtures/e6_mather_b.csv"),
                ),
            ],
        },
        _ => return None,
    };
    Some(g)
}

pub struct ParsedBlock {
    pub cols: Vec<String>,
    pub rows: Vec<String>,
    pub cells: Vec<Vec<i64>>,
}

pub fn parse_block(csv: &str) -> ParsedBlock {
    let mut lines = csv.lines();
    let header = lines.next().expect("fixture header");
    let cols: Vec<String> = header.split(',').skip(1).map(str::to_string).collect();
    let mut rows = Vec::new();
    let mut cells = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split(',');
        rows.push(toks.next().unwrap().to_string());
        let row: Vec<i64> = toks
            .map(|t| t.parse().expect("integer fixture cell"))
            .collect();
        assert_eq!(row.len(), cols.len(), "ragged fixture");
        cells.push(row);
    }
    ParsedBlock { cols, rows, cells }
}

pub struct Mismatch {
    pub block: &'static str,
    pub row: String,
    pub col: String,
    pub expected: i64,
    pub got: i64,
}

pub struct DiffReport {
    pub id: String,
    pub cells_checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub byte_identical: bool,
    pub label_sets_valid: bool,
}

/// Recomputes each fixture block and diffs it cell by cell; also re-renders
/// the computed values in the printed order and compares bytes.
pub fn golden_diff(id: &str, cap: usize) -> Result<DiffReport, String> {
    let golden = golden(id).ok_or_else(|| {
        format!(
            "unknown golden id {id:?} (known: {})",
            golden_ids().join(", ")
        )
    })?;
    diff_blocks(id, &golden.blocks, cap)
}

/// Diff machinery over explicit blocks (also used by the harness self-test).
pub fn diff_blocks(id: &str, blocks: &[FixtureBlock], cap: usize) -> Result<DiffReport, String> {
    let mut mismatches = Vec::new();
    let mut cells_checked = 0;
    let mut byte_identical = true;
    let mut label_sets_valid = true;

    for block in blocks {
        let parsed = parse_block(&block.csv);
        let mut session = Session::open(block.space, cap)?;
        // validate labels against the Weyl enumeration
        let reps = session.enumerate()?;
        let all_labels: BTreeMap<String, WeylElt> = reps
            .iter()
            .map(|w| (session.label_of(w), w.clone()))
            .collect();
        for l in parsed.cols.iter().chain(parsed.rows.iter()) {
            if !all_labels.contains_key(l) {
                label_sets_valid = false;
            }
        }
        if !label_sets_valid {
            return Err(format!(
                "fixture {} carries labels outside the {} enumeration",
                block.name, block.space
            ));
        }
        let col_elts: Vec<WeylElt> = parsed.cols.iter().map(|l| all_labels[l].clone()).collect();
        let computed = compute_table(&mut session, block.kind, Some(&col_elts))?;
        let row_index: BTreeMap<&String, usize> = computed
            .row_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();

        let mut rendered = String::new();
        rendered.push(',');
        rendered.push_str(&parsed.cols.join(","));
        rendered.push('\n');
        for (i, row_label) in parsed.rows.iter().enumerate() {
            rendered.push_str(row_label);
            let ri = row_index[&row_label];
            for (j, col_label) in parsed.cols.iter().enumerate() {
                let got = computed.cells[ri][j];
                let expected = parsed.cells[i][j];
                cells_checked += 1;
                if got != expected {
                    mismatches.push(Mismatch {
                        block: block.name,
                        row: row_label.clone(),
                        col: col_label.clone(),
                        expected,
                        got,
                    });
                }
                rendered.push(',');
                rendered.push_str(&got.to_string());
            }
            rendered.push('\n');
        }
        if rendered != block.csv {
            byte_identical = false;
        }
    }

    Ok(DiffReport {
        id: id.to_string(),
        cells_checked,
        mismatches,
        byte_identical,
        label_sets_valid,
    })
}
