//! Space / element parsing and the per-run computation state: one root
//! system, one flag space, and the memoization contexts shared by all
//! pipelines of a command.

use std::rc::Rc;

use comather_core::chow::FlagSpace;
use comather_core::kl::KlCtx;
use comather_core::loc::LocCtx;
use comather_core::roots::{build_root_system, LieType, RootSystem};
use comather_core::weyl::{enumerate_full, CominLabel, ParabolicQuotient, WeylCtx, WeylElt};

pub struct Session {
    pub rs: Rc<RootSystem>,
    pub space: FlagSpace,
    pub quot: Option<ParabolicQuotient>,
    pub wctx: WeylCtx,
    pub lctx: LocCtx,
    pub kctx: KlCtx,
    pub cap: usize,
}

/// Parses `"<letter><rank>/P<node>"` (maximal parabolic) or
/// `"<letter><rank>/B"` (complete flag manifold).
pub fn parse_space(spec: &str) -> Result<(Rc<RootSystem>, FlagSpace), String> {
    let (rs_part, p_part) = spec
        .split_once('/')
        .ok_or_else(|| format!("space must look like A3/P2 or A3/B, got {spec:?}"))?;
    let mut chars = rs_part.chars();
    let letter = chars.next().ok_or("empty root system name")?;
    let lie_type = match letter.to_ascii_uppercase() {
        'A' => LieType::A,
        'B' => LieType::B,
        'C' => LieType::C,
        'D' => LieType::D,
        'E' => LieType::E,
        other => return Err(format!("unknown Lie type {other}")),
    };
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| format!("bad rank in {rs_part:?}"))?;
    let rs = Rc::new(build_root_system(lie_type, rank).map_err(|e| e.to_string())?);
    let space = if p_part.eq_ignore_ascii_case("B") {
        FlagSpace::complete(rs.clone())
    } else {
        let node: usize = p_part
            .strip_prefix(['P', 'p'])
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| format!("bad parabolic {p_part:?} (use P<node> or B)"))?;
        if node == 0 || node > rank {
            return Err(format!("node {node} out of range 1..={rank}"));
        }
        FlagSpace::maximal_parabolic(rs.clone(), node - 1)
    };
    Ok((rs, space))
}

impl Session {
    pub fn open(spec: &str, cap: usize) -> Result<Session, String> {
        let (rs, space) = parse_space(spec)?;
        // rank-1 spaces are simultaneously G/B and a cominuscule G/P; keep
        // the diagram dictionary whenever a single node is omitted
        let quot = if space.omitted.len() == 1 {
            Some(ParabolicQuotient::new(&rs, &space.omitted, cap).map_err(|e| e.to_string())?)
        } else {
            None
        };
        Ok(Session {
            rs,
            space,
            quot,
            wctx: WeylCtx::new(),
            lctx: LocCtx::new(),
            kctx: KlCtx::new(),
            cap,
        })
    }

    /// All Schubert indices of the space. Cominuscule spaces enumerate
    /// through order ideals; `G/B` through the full Weyl group (capped).
    pub fn enumerate(&mut self) -> Result<Vec<WeylElt>, String> {
        match &self.quot {
            Some(q) => Ok(q.min_reps.clone()),
            None => enumerate_full(&self.rs, self.cap).map_err(|e| e.to_string()),
        }
    }

    /// Accepts a diagram label (`"2,1"`, `"21"`, `"3a"`, `"()"`), a 1-based
    /// reduced word (`"1 3 2"`), or an inversion-set ideal given by root
    /// coordinates (`"ideal:0,1,0;0,1,1;1,1,0"`).
    pub fn parse_w(&self, input: &str) -> Result<WeylElt, String> {
        let s = input.trim();
        if s.is_empty() || s == "()" || s.eq_ignore_ascii_case("id") {
            return Ok(WeylElt::identity(self.rs.rank));
        }
        if let Some(rest) = s.strip_prefix("ideal:") {
            let grid = self
                .quot
                .as_ref()
                .and_then(|q| q.grid())
                .ok_or("ideal input needs a cominuscule space")?;
            let mut ideal = std::collections::BTreeSet::new();
            for root_txt in rest.split(';').filter(|t| !t.trim().is_empty()) {
                let coords: Vec<i64> = root_txt
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse()
                            .map_err(|_| format!("bad root {root_txt:?}"))
                    })
                    .collect::<Result<_, _>>()?;
                if coords.len() != self.rs.rank {
                    return Err(format!("root {root_txt:?} has wrong rank"));
                }
                let root = comather_core::roots::Weight { coords };
                let idx = self
                    .rs
                    .root_index(&root)
                    .ok_or_else(|| format!("{root_txt:?} is not a positive root"))?;
                ideal.insert(idx);
            }
            return grid
                .element_of_ideal(&self.rs, &ideal)
                .map_err(|e| e.to_string());
        }
        if s.contains(' ') {
            let mut word = Vec::new();
            for tok in s.split_whitespace() {
                let i: usize = tok
                    .parse()
                    .map_err(|_| format!("bad word letter {tok:?}"))?;
                if i == 0 || i > self.rs.rank {
                    return Err(format!("letter {i} out of range 1..={}", self.rs.rank));
                }
                word.push(i - 1);
            }
            let w = WeylElt::from_word(&self.rs, &word);
            if w.length() as usize != word.len() {
                return Err(format!("word {s:?} is not reduced"));
            }
            return Ok(w);
        }
        if let Some(q) = &self.quot {
            if q.grid().is_some() {
                let label = parse_label(s)?;
                return q
                    .element_of_label(&self.rs, &label)
                    .map_err(|e| e.to_string());
            }
        }
        // digit string as a reduced word (G/B style)
        let mut word = Vec::new();
        for ch in s.chars() {
            let d = ch
                .to_digit(10)
                .ok_or_else(|| format!("cannot parse {s:?} as label or word"))?
                as usize;
            if d == 0 || d > self.rs.rank {
                return Err(format!("letter {d} out of range 1..={}", self.rs.rank));
            }
            word.push(d - 1);
        }
        let w = WeylElt::from_word(&self.rs, &word);
        if w.length() as usize != word.len() {
            return Err(format!("word {s:?} is not reduced"));
        }
        Ok(w)
    }

    /// Canonical display label: the diagram label on cominuscule spaces,
    /// a 1-based reduced word elsewhere.
    pub fn label_of(&self, w: &WeylElt) -> String {
        if let Some(q) = &self.quot {
            if let Ok(label) = q.label(&self.rs, w) {
                return label.to_string();
            }
        }
        word_string(&self.rs, w)
    }

    /// Canonical 1-based reduced word, concatenated.
    pub fn word_of(&self, w: &WeylElt) -> String {
        word_string(&self.rs, w)
    }
}

pub fn word_string(rs: &RootSystem, w: &WeylElt) -> String {
    if w.is_identity() {
        return "()".to_string();
    }
    w.canonical_word(rs)
        .into_iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join("")
}

/// `"2,1"`, `"21"`, `"3a"`, `"()"` -> CominLabel.
pub fn parse_label(s: &str) -> Result<CominLabel, String> {
    if s.is_empty() || s == "()" {
        return Ok(CominLabel::Parts(Vec::new()));
    }
    let (digits, branch) = match s.chars().last() {
        Some(c @ ('a' | 'b')) => (&s[..s.len() - 1], Some(c)),
        _ => (s, None),
    };
    let parts: Vec<u32> = if digits.contains(',') {
        digits
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| format!("bad part {t:?}")))
            .collect::<Result<_, _>>()?
    } else {
        digits
            .chars()
            .map(|c| c.to_digit(10).ok_or_else(|| format!("bad label {s:?}")))
            .collect::<Result<_, _>>()?
    };
    if let Some(b) = branch {
        if parts.len() != 1 {
            return Err(format!("branch tag needs a single size, got {s:?}"));
        }
        return Ok(CominLabel::Quadric {
            size: parts[0],
            branch: Some(b),
        });
    }
    Ok(CominLabel::Parts(parts))
}

/// Sort key used by the deterministic table orders.
pub fn label_sort_key(label: &CominLabel) -> (u32, Vec<u32>, u8) {
    match label {
        CominLabel::Parts(p) => (p.iter().sum(), p.clone(), 0),
        CominLabel::Quadric { size, branch } => (
            *size,
            vec![*size],
            match branch {
                None => 0,
                Some('a') => 1,
                _ => 2,
            },
        ),
    }
}
