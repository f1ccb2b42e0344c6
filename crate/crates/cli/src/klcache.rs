//! Optional on-disk cache for the Kazhdan-Lusztig memo table, keyed by the
//! `COMATHER_CACHE_DIR` environment variable. KL tables dominate the runtime
//! of rank-4 characteristic-cycle scans, so the memo is persisted between
//! runs. Lines are `x_word;w_word;c0,c1,...` with 1-based canonical words.

use std::fs;
use std::path::PathBuf;

use comather_core::kl::{KLPoly, KlCtx};
use comather_core::roots::RootSystem;
use comather_core::weyl::WeylElt;

pub const ENV_VAR: &str = "COMATHER_CACHE_DIR";

fn cache_path(rs: &RootSystem) -> Option<PathBuf> {
    let dir = std::env::var_os(ENV_VAR)?;
    let mut p = PathBuf::from(dir);
    p.push(format!("kl-{}.txt", rs.name()));
    Some(p)
}

fn word_of(rs: &RootSystem, w: &WeylElt) -> String {
    w.canonical_word(rs)
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_word(rs: &RootSystem, s: &str) -> Option<WeylElt> {
    let mut word = Vec::new();
    for tok in s.split_whitespace() {
        let i: usize = tok.parse().ok()?;
        if i == 0 || i > rs.rank {
            return None;
        }
        word.push(i - 1);
    }
    Some(WeylElt::from_word(rs, &word))
}

/// Loads cached entries into the memo table; silently skips malformed lines.
pub fn load(kctx: &mut KlCtx, rs: &RootSystem) {
    let Some(path) = cache_path(rs) else { return };
    let Ok(content) = fs::read_to_string(&path) else {
        return;
    };
    for line in content.lines() {
        let mut parts = line.split(';');
        let (Some(xs), Some(ws), Some(cs)) = (parts.next(), parts.next(), parts.next()) else {
            continue;
        };
        let (Some(x), Some(w)) = (parse_word(rs, xs), parse_word(rs, ws)) else {
            continue;
        };
        let coeffs: Option<Vec<i64>> = if cs.is_empty() {
            Some(Vec::new())
        } else {
            cs.split(',').map(|t| t.parse().ok()).collect()
        };
        if let Some(coeffs) = coeffs {
            kctx.preload(x, w, KLPoly(coeffs));
        }
    }
}

/// Persists the memo table; errors are reported but not fatal.
pub fn save(kctx: &KlCtx, rs: &RootSystem) {
    let Some(path) = cache_path(rs) else { return };
    if kctx.is_empty() {
        return;
    }
    let mut out = String::new();
    for ((x, w), p) in kctx.entries() {
        let coeffs: Vec<String> = p.0.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!(
            "{};{};{}\n",
            word_of(rs, x),
            word_of(rs, w),
            coeffs.join(",")
        ));
    }
    if let Some(parent) = path.parent() {
        let _ = fs::create_dir_all(parent);
    }
    if let Err(e) = fs::write(&path, out) {
        eprintln!("warning: cannot write KL cache {}: {e}", path.display());
    }
}
