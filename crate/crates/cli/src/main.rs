//! comather: exact Chern-Mather / CSM / Kazhdan-Lusztig / conormal-space
//! computations for Schubert varieties in cominuscule flag manifolds.

use clap::{Parser, Subcommand};

use comather_cli::{emit, fixtures, klcache, scan, session, tables};

use comather_core::chow::FlagSpace;
use comather_core::csm::{
    csm_cell_gb, csm_cell_gp, equivariant_residual_check, euler_obstructions, CsmTable,
};
use comather_core::kl::{
    cc_multiplicities, cc_multiplicities_pullback, compare_ordinary_vs_euler, kl_class,
    CCDecomposition,
};
use comather_core::loc::conormal_localize;
use comather_core::mather::{mather_class, segre_mather};

use emit::Format;
use session::Session;
use tables::{compute_table, TableKind};

#[derive(Parser)]
#[command(
    name = "comather",
    about = "Equivariant Mather classes, CSM classes, local Euler obstructions,\n\
             KL classes and conormal-space localizations for cominuscule Schubert varieties",
    version
)]
struct Cli {
    /// Cap on the size of any full Weyl-group enumeration.
    #[arg(long, global = true, default_value_t = 200_000)]
    max_interval: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chern-Mather class of a Schubert variety.
    Mather {
        #[arg(long)]
        space: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        equivariant: bool,
        /// Also print the class c(T_w) cap [X_w^B] upstairs on G/B.
        #[arg(long)]
        upstairs: bool,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// CSM class of a Schubert cell.
    Csm {
        #[arg(long)]
        space: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        equivariant: bool,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Local Euler obstructions of one Schubert variety.
    Euler {
        #[arg(long)]
        space: String,
        #[arg(long)]
        w: String,
        /// Re-run the solve equivariantly and require a zero residual.
        #[arg(long)]
        verify_equivariant: bool,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Kazhdan-Lusztig class in the Schubert basis.
    Klclass {
        #[arg(long)]
        space: String,
        #[arg(long)]
        w: String,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Characteristic-cycle multiplicities of the IH sheaf.
    Cc {
        #[arg(long)]
        space: String,
        #[arg(long)]
        w: String,
        /// Solve on G/B against the pull-back Mather basis instead.
        #[arg(long, value_name = "B")]
        pullback_to: Option<String>,
        /// Also report where ordinary KL polynomials at minimal
        /// representatives disagree with the Euler obstructions.
        #[arg(long)]
        assume_ordinary: bool,
    },
    /// Segre-Mather class (alternating by dimension).
    SegreMather {
        #[arg(long)]
        space: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        equivariant: bool,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Localization of the conormal space T*_{X_w}(G/P) at a fixed point.
    ConormalLoc {
        #[arg(long)]
        space: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        u: String,
    },
    /// Full Mather / Euler / CSM table of a space.
    Table {
        #[arg(long)]
        space: String,
        #[arg(long)]
        kind: TableKind,
        /// Restrict to a single column.
        #[arg(long)]
        w: Option<String>,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Recompute a published table and diff against the embedded fixture.
    GoldenDiff {
        /// One of: Gr36, Gr37, Gr48, LG48-mather, LG48-euler, E6-mather.
        id: String,
    },
    /// Scan spaces for conjecture violations.
    Scan {
        /// Comma-separated spaces, e.g. "A3/P2,C3/P3".
        #[arg(long)]
        spaces: String,
        /// Comma-separated subset of pos,euler-nonneg,unimodal,logconcave-A.
        #[arg(long, default_value = "pos,euler-nonneg,unimodal,logconcave-A")]
        which: String,
    },
}

fn print_class(session: &Session, class: &comather_core::chow::SchubertClass, format: Format) {
    match format {
        Format::Csv => print!("{}", emit::class_csv(session, class)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&emit::class_json(session, class)).unwrap()
        ),
        Format::Latex => println!("{}", emit::class_latex(session, class)),
    }
}

fn run() -> Result<(), String> {
    let cli = Cli::parse();
    let cap = cli.max_interval;
    match cli.command {
        Command::Mather {
            space,
            w,
            equivariant,
            upstairs,
            format,
        } => {
            let mut s = Session::open(&space, cap)?;
            let w = s.parse_w(&w)?;
            let m = mather_class(&mut s.wctx, &s.space.clone(), &w, equivariant)
                .map_err(|e| e.to_string())?;
            if upstairs {
                let rs_name = s.rs.name();
                let gb = Session::open(&format!("{rs_name}/B"), cap)?;
                print_class(&gb, &m.upstairs, format);
            }
            print_class(&s, &m.downstairs, format);
        }
        Command::Csm {
            space,
            w,
            equivariant,
            format,
        } => {
            let mut s = Session::open(&space, cap)?;
            let w = s.parse_w(&w)?;
            let class = if s.space.is_complete() {
                csm_cell_gb(&mut s.wctx, &s.space.clone(), &w, equivariant)
            } else {
                csm_cell_gp(&mut s.wctx, &s.space.clone(), &w, equivariant)
                    .map_err(|e| e.to_string())?
            };
            print_class(&s, &class, format);
        }
        Command::Euler {
            space,
            w,
            verify_equivariant,
            format,
        } => {
            let mut s = Session::open(&space, cap)?;
            let w = s.parse_w(&w)?;
            let sp = s.space.clone();
            let table = CsmTable::build(&mut s.wctx, &sp, false, cap).map_err(|e| e.to_string())?;
            let e = euler_obstructions(&mut s.wctx, &sp, &w, &table).map_err(|e| e.to_string())?;
            if verify_equivariant {
                let table_eq =
                    CsmTable::build(&mut s.wctx, &sp, true, cap).map_err(|e| e.to_string())?;
                let ok = equivariant_residual_check(&mut s.wctx, &sp, &e, &table_eq)
                    .map_err(|e| e.to_string())?;
                if !ok {
                    return Err("equivariant residual check FAILED".to_string());
                }
                eprintln!("equivariant residual check passed");
            }
            let mut rows: Vec<(&comather_core::weyl::WeylElt, i64)> =
                e.values.iter().map(|(v, &x)| (v, x)).collect();
            rows.sort_by_key(|(v, _)| (v.length(), s.label_of(v)));
            match format {
                Format::Json => {
                    let vals: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(v, x)| serde_json::json!({"label": s.label_of(v), "e": x}))
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&serde_json::json!({
                            "space": space, "w": s.label_of(&w), "values": vals
                        }))
                        .unwrap()
                    );
                }
                _ => {
                    println!("label,e");
                    for (v, x) in rows {
                        println!("{},{}", s.label_of(v), x);
                    }
                }
            }
        }
        Command::Klclass { space, w, format } => {
            let mut s = Session::open(&space, cap)?;
            klcache::load(&mut s.kctx, &s.rs);
            let w = s.parse_w(&w)?;
            let sp = s.space.clone();
            let table = CsmTable::build(&mut s.wctx, &sp, false, cap).map_err(|e| e.to_string())?;
            let kl =
                kl_class(&mut s.kctx, &mut s.wctx, &sp, &w, &table).map_err(|e| e.to_string())?;
            klcache::save(&s.kctx, &s.rs);
            print_class(&s, &kl, format);
        }
        Command::Cc {
            space,
            w,
            pullback_to,
            assume_ordinary,
        } => {
            let mut s = Session::open(&space, cap)?;
            klcache::load(&mut s.kctx, &s.rs);
            let w = s.parse_w(&w)?;
            let sp = s.space.clone();
            let cc: CCDecomposition = match pullback_to.as_deref() {
                None => {
                    let table =
                        CsmTable::build(&mut s.wctx, &sp, false, cap).map_err(|e| e.to_string())?;
                    cc_multiplicities(&mut s.kctx, &mut s.wctx, &sp, &w, &table)
                        .map_err(|e| e.to_string())?
                }
                Some(t) if t.eq_ignore_ascii_case("B") => {
                    let gb = FlagSpace::complete(s.rs.clone());
                    let table =
                        CsmTable::build(&mut s.wctx, &gb, false, cap).map_err(|e| e.to_string())?;
                    cc_multiplicities_pullback(&mut s.kctx, &mut s.wctx, &sp, &w, &table)
                        .map_err(|e| e.to_string())?
                }
                Some(other) => return Err(format!("--pullback-to only supports B, got {other:?}")),
            };
            let mut entries: Vec<serde_json::Value> = Vec::new();
            for (v, m) in &cc.multiplicities {
                entries.push(serde_json::json!({
                    "label": s.label_of(v),
                    "word": s.word_of(v),
                    "m": m,
                }));
            }
            let mut report = serde_json::json!({
                "space": space,
                "w": s.label_of(&w),
                "irreducible": cc.is_irreducible(),
                "multiplicities": entries,
            });
            if assume_ordinary {
                let table =
                    CsmTable::build(&mut s.wctx, &sp, false, cap).map_err(|e| e.to_string())?;
                let e =
                    euler_obstructions(&mut s.wctx, &sp, &w, &table).map_err(|e| e.to_string())?;
                let reps = s.enumerate()?;
                let diffs = compare_ordinary_vs_euler(&mut s.kctx, &mut s.wctx, &sp, &w, &e, &reps);
                let diffs_json: Vec<serde_json::Value> = diffs
                    .iter()
                    .map(|(v, e, p)| {
                        serde_json::json!({
                            "label": s.label_of(v), "euler": e, "ordinary_kl_at_min_rep": p
                        })
                    })
                    .collect();
                report["ordinary_vs_euler_discrepancies"] = serde_json::json!(diffs_json);
            }
            klcache::save(&s.kctx, &s.rs);
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
        Command::SegreMather {
            space,
            w,
            equivariant,
            format,
        } => {
            let mut s = Session::open(&space, cap)?;
            let w = s.parse_w(&w)?;
            let class = segre_mather(&mut s.wctx, &s.space.clone(), &w, equivariant)
                .map_err(|e| e.to_string())?;
            print_class(&s, &class, format);
        }
        Command::ConormalLoc { space, w, u } => {
            let mut s = Session::open(&space, cap)?;
            let w = s.parse_w(&w)?;
            let u = s.parse_w(&u)?;
            let sp = s.space.clone();
            let p = conormal_localize(&mut s.lctx, &mut s.wctx, &sp, &w, &u)
                .map_err(|e| e.to_string())?;
            let text = emit::poly_string(&s, &p);
            println!("{text}");
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "space": space,
                    "w": s.label_of(&w),
                    "u": s.label_of(&u),
                    "localization": text,
                    "terms": emit::poly_json(&p),
                }))
                .unwrap()
            );
        }
        Command::Table {
            space,
            kind,
            w,
            format,
        } => {
            let mut s = Session::open(&space, cap)?;
            let only = match w {
                Some(txt) => Some(vec![s.parse_w(&txt)?]),
                None => None,
            };
            let table = compute_table(&mut s, kind, only.as_deref())?;
            match format {
                Format::Csv => print!("{}", table.to_csv()),
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&table.to_json()).unwrap()
                    )
                }
                Format::Latex => print!("{}", table.to_latex()),
            }
        }
        Command::GoldenDiff { id } => {
            let report = fixtures::golden_diff(&id, cap)?;
            println!(
                "{}: {} cells checked, {} mismatches, byte-identical: {}",
                report.id,
                report.cells_checked,
                report.mismatches.len(),
                report.byte_identical
            );
            for m in &report.mismatches {
                println!(
                    "  {}: row {}, column {}: expected {}, got {}",
                    m.block, m.row, m.col, m.expected, m.got
                );
            }
            if !report.mismatches.is_empty() || !report.byte_identical {
                std::process::exit(1);
            }
        }
        Command::Scan { spaces, which } => {
            let checks: Vec<scan::Check> = which
                .split(',')
                .map(|t| t.trim().parse())
                .collect::<Result<_, _>>()?;
            let mut total = 0usize;
            for spec in spaces.split(',') {
                let spec = spec.trim();
                let violations = scan::scan_space(spec, &checks, cap)?;
                if violations.is_empty() {
                    println!("{spec}: ok ({which})");
                } else {
                    for v in &violations {
                        println!("{spec}: VIOLATION [{}] {}", v.check.name(), v.witness);
                    }
                    total += violations.len();
                }
            }
            if total > 0 {
                std::process::exit(1);
            }
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}
