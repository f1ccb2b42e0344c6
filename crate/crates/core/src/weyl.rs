//! Weyl group elements, length, Bruhat order, parabolic quotients, inversion
//! sets, and the cominuscule order-ideal / diagram dictionary.
//!
//! Elements are integer matrices acting on simple-root coordinates, hashable
//! and comparable; words are recovered on demand by descent stripping.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::roots::{LieType, RootSystem, Weight};
use crate::{Error, Result};

/// A Weyl group element. Column `i` of `mat` is `w(alpha_i)` in simple-root
/// coordinates. `len` is the Coxeter length, cached at construction; two
/// elements are equal iff their matrices are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElt {
    len: u32,
    rank: usize,
    mat: Vec<i64>,
}

impl WeylElt {
    pub fn identity(rank: usize) -> Self {
        let mut mat = vec![0; rank * rank];
        for i in 0..rank {
            mat[i * rank + i] = 1;
        }
        WeylElt { len: 0, rank, mat }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        Self::reflection(rs, &rs.simple_root(i))
    }

    /// The reflection `s_alpha` for a (positive) root `alpha`.
    pub fn reflection(rs: &RootSystem, alpha: &Weight) -> Self {
        let rank = rs.rank;
        let mut mat = vec![0i64; rank * rank];
        for j in 0..rank {
            let img = rs.reflect(alpha, &rs.simple_root(j)).expect("root");
            for r in 0..rank {
                mat[r * rank + j] = img.coords[r];
            }
        }
        Self::from_matrix(rs, mat)
    }

    fn from_matrix(rs: &RootSystem, mat: Vec<i64>) -> Self {
        let mut w = WeylElt {
            len: 0,
            rank: rs.rank,
            mat,
        };
        w.len = w.count_inversions(rs);
        w
    }

    fn count_inversions(&self, rs: &RootSystem) -> u32 {
        let mut n = 0;
        for alpha in rs.positive_roots() {
            if self.sends_negative(alpha) {
                n += 1;
            }
        }
        n
    }

    /// Is `w(alpha) < 0` (for alpha a positive root)?
    pub fn sends_negative(&self, alpha: &Weight) -> bool {
        // The image is a root: its nonzero coordinates share a sign.
        let img = self.apply(alpha);
        img.coords
            .iter()
            .find(|&&c| c != 0)
            .map(|&c| c < 0)
            .unwrap_or(false)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn length(&self) -> u32 {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        let r = self.rank;
        let mut out = vec![0i64; r];
        for (c, &x) in lambda.coords.iter().enumerate() {
            if x != 0 {
                for (row, o) in out.iter_mut().enumerate() {
                    *o += self.mat[row * r + c] * x;
                }
            }
        }
        Weight { coords: out }
    }

    pub fn mul(&self, rs: &RootSystem, other: &WeylElt) -> WeylElt {
        assert_eq!(self.rank, other.rank, "mismatched root systems");
        let r = self.rank;
        let mut mat = vec![0i64; r * r];
        for c in 0..r {
            for k in 0..r {
                let x = other.mat[k * r + c];
                if x != 0 {
                    for row in 0..r {
                        mat[row * r + c] += self.mat[row * r + k] * x;
                    }
                }
            }
        }
        Self::from_matrix(rs, mat)
    }

    /// Right multiplication by the simple reflection `s_i`.
    pub fn mul_simple(&self, rs: &RootSystem, i: usize) -> WeylElt {
        self.mul(rs, &WeylElt::simple(rs, i))
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElt {
        let mut word = self.canonical_word(rs);
        word.reverse();
        WeylElt::from_word(rs, &word)
    }

    /// Right descents: simple `i` with `w(alpha_i) < 0`.
    pub fn right_descents(&self, rs: &RootSystem) -> Vec<usize> {
        (0..self.rank)
            .filter(|&i| self.sends_negative(&rs.simple_root(i)))
            .collect()
    }

    /// Smallest left descent of `w`, or None for the identity.
    pub fn first_left_descent(&self, rs: &RootSystem) -> Option<usize> {
        if self.is_identity() {
            return None;
        }
        (0..self.rank).find(|&i| {
            // left descent: row test via s_i w of smaller length
            WeylElt::simple(rs, i).mul(rs, self).len < self.len
        })
    }

    /// Lexicographically least reduced word, by greedy left-descent stripping.
    pub fn canonical_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.len as usize);
        while let Some(i) = w.first_left_descent(rs) {
            word.push(i);
            w = WeylElt::simple(rs, i).mul(rs, &w);
        }
        word
    }

    pub fn from_word(rs: &RootSystem, word: &[usize]) -> WeylElt {
        let mut w = WeylElt::identity(rs.rank);
        for &i in word {
            w = w.mul_simple(rs, i);
        }
        w
    }

    /// Inversion set `I(w) = {alpha > 0 : w(alpha) < 0}` as sorted root indices.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<usize> {
        (0..rs.num_positive_roots())
            .filter(|&i| self.sends_negative(rs.root(i)))
            .collect()
    }
}

/// Memoization caches shared by the Bruhat-order and interval routines.
/// Owned by the caller; one per worker when running concurrently.
#[derive(Default)]
pub struct WeylCtx {
    covers: BTreeMap<WeylElt, Rc<Vec<(usize, WeylElt)>>>,
    bruhat: BTreeMap<(WeylElt, WeylElt), bool>,
    lower: BTreeMap<WeylElt, Rc<Vec<WeylElt>>>,
}

impl WeylCtx {
    pub fn new() -> Self {
        Self::default()
    }

    /// Bruhat co-covers reachable by a right reflection:
    /// all `(alpha, w s_alpha)` with `l(w s_alpha) = l(w) - 1`.
    pub fn chevalley_covers(&mut self, rs: &RootSystem, w: &WeylElt) -> Rc<Vec<(usize, WeylElt)>> {
        if let Some(v) = self.covers.get(w) {
            return Rc::clone(v);
        }
        let mut out = Vec::new();
        for (idx, alpha) in rs.positive_roots().iter().enumerate() {
            if !w.sends_negative(alpha) {
                continue;
            }
            let t = w.mul(rs, &WeylElt::reflection(rs, alpha));
            if t.length() + 1 == w.length() {
                out.push((idx, t));
            }
        }
        let rc = Rc::new(out);
        self.covers.insert(w.clone(), Rc::clone(&rc));
        rc
    }

    /// Bruhat order by the lifting-property recursion.
    pub fn bruhat_leq(&mut self, rs: &RootSystem, v: &WeylElt, w: &WeylElt) -> bool {
        if v.length() > w.length() {
            return false;
        }
        if v.is_identity() || v == w {
            return true;
        }
        let key = (v.clone(), w.clone());
        if let Some(&b) = self.bruhat.get(&key) {
            return b;
        }
        let i = w.first_left_descent(rs).expect("nonidentity");
        let s = WeylElt::simple(rs, i);
        let sw = s.mul(rs, w);
        let sv = s.mul(rs, v);
        let v2 = if sv.length() < v.length() {
            sv
        } else {
            v.clone()
        };
        let b = self.bruhat_leq(rs, &v2, &sw);
        self.bruhat.insert(key, b);
        b
    }

    /// All `v <= w`, via downward closure along Bruhat co-covers.
    pub fn lower_interval(&mut self, rs: &RootSystem, w: &WeylElt) -> Rc<Vec<WeylElt>> {
        if let Some(v) = self.lower.get(w) {
            return Rc::clone(v);
        }
        let mut seen: BTreeSet<WeylElt> = BTreeSet::new();
        let mut stack = vec![w.clone()];
        seen.insert(w.clone());
        while let Some(u) = stack.pop() {
            for (_, t) in self.chevalley_covers(rs, &u).iter() {
                if seen.insert(t.clone()) {
                    stack.push(t.clone());
                }
            }
        }
        let out: Vec<WeylElt> = seen.into_iter().collect();
        let rc = Rc::new(out);
        self.lower.insert(w.clone(), Rc::clone(&rc));
        rc
    }
}

/// `w = w^P . w_P` with `w^P` minimal in its coset and `w_P` in `W_P`.
/// `p_nodes` are the simple nodes generating `W_P` (0-based).
pub fn coset_decompose(
    rs: &RootSystem,
    p_nodes: &BTreeSet<usize>,
    w: &WeylElt,
) -> (WeylElt, WeylElt) {
    let mut min = w.clone();
    let mut wp = WeylElt::identity(rs.rank);
    loop {
        let mut moved = false;
        for &j in p_nodes {
            if min.sends_negative(&rs.simple_root(j)) {
                min = min.mul_simple(rs, j);
                wp = WeylElt::simple(rs, j).mul(rs, &wp);
                moved = true;
                break;
            }
        }
        if !moved {
            break;
        }
    }
    debug_assert_eq!(min.length() + wp.length(), w.length());
    (min, wp)
}

/// Is `w` a minimal-length representative for the parabolic generated by
/// `p_nodes`?
pub fn is_minimal_rep(rs: &RootSystem, p_nodes: &BTreeSet<usize>, w: &WeylElt) -> bool {
    p_nodes
        .iter()
        .all(|&j| !w.sends_negative(&rs.simple_root(j)))
}

/// Longest element of the standard parabolic subgroup generated by `nodes`,
/// by descent saturation.
pub fn longest_element(rs: &RootSystem, nodes: &BTreeSet<usize>) -> WeylElt {
    let mut w = WeylElt::identity(rs.rank);
    loop {
        let mut moved = false;
        for &j in nodes {
            if !w.sends_negative(&rs.simple_root(j)) {
                w = w.mul_simple(rs, j);
                moved = true;
                break;
            }
        }
        if !moved {
            return w;
        }
    }
}

/// Order of the full Weyl group.
pub fn weyl_order(rs: &RootSystem) -> u128 {
    let n = rs.rank as u128;
    let fact = |k: u128| (1..=k).product::<u128>();
    match rs.lie_type {
        LieType::A => fact(n + 1),
        LieType::B | LieType::C => (1u128 << n) * fact(n),
        LieType::D => (1u128 << (n - 1)) * fact(n),
        LieType::E => {
            if rs.rank == 6 {
                51840
            } else {
                2_903_040
            }
        }
    }
}

/// Enumerates the whole Weyl group, sorted by (length, matrix). Guarded by a
/// cap on the group order.
pub fn enumerate_full(rs: &RootSystem, cap: usize) -> Result<Vec<WeylElt>> {
    let order = weyl_order(rs);
    if order > cap as u128 {
        return Err(Error::BadInput(format!(
            "Weyl group of {} has order {order}, above the cap {cap}",
            rs.name()
        )));
    }
    let mut all: BTreeSet<WeylElt> = BTreeSet::new();
    let mut frontier = vec![WeylElt::identity(rs.rank)];
    all.insert(frontier[0].clone());
    while let Some(w) = frontier.pop() {
        for i in 0..rs.rank {
            let t = WeylElt::simple(rs, i).mul(rs, &w);
            if t.length() == w.length() + 1 && all.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    assert_eq!(all.len() as u128, order);
    Ok(all.into_iter().collect())
}

// ---------------------------------------------------------------------------
// Cominuscule diagrams
// ---------------------------------------------------------------------------

/// Diagram label of a cominuscule Schubert class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CominLabel {
    /// Partition-style label: row lengths of the ideal in the Hasse grid.
    Parts(Vec<u32>),
    /// Quadric label: number of boxes plus a branch tag at the fork.
    Quadric { size: u32, branch: Option<char> },
}

impl fmt::Display for CominLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CominLabel::Parts(p) if p.is_empty() => write!(f, "()"),
            CominLabel::Parts(p) => {
                if p.iter().all(|&x| x <= 9) {
                    for x in p {
                        write!(f, "{x}")?;
                    }
                    Ok(())
                } else {
                    let s: Vec<String> = p.iter().map(|x| format!("{x}")).collect();
                    write!(f, "{}", s.join(","))
                }
            }
            CominLabel::Quadric { size, branch } => {
                write!(f, "{size}")?;
                if let Some(b) = branch {
                    write!(f, "{b}")?;
                }
                Ok(())
            }
        }
    }
}

struct GridBox {
    row: usize,
    letter: usize,
    root_idx: usize,
}

/// The Hasse grid of the poset `R_{>= alpha_P}` for a cominuscule node:
/// rows of boxes, each box carrying a simple-reflection letter, with boxes
/// listed in reading order (bottom row first, right to left within a row).
/// Reading an ideal in this order yields a reduced word for its element.
pub struct CominGrid {
    node: usize,
    boxes: Vec<GridBox>,
    /// For the D-type fork at node 1: root indices of the two branch boxes.
    fork: Option<(usize, usize)>,
}

impl CominGrid {
    /// Simple-reflection letters per row, top row first, with each row's
    /// starting column; used to build every supported grid.
    fn rows_for(rs: &RootSystem, node: usize) -> Result<Vec<(usize, Vec<usize>)>> {
        let n = rs.rank;
        let rows: Vec<(usize, Vec<usize>)> = match (rs.lie_type, node) {
            (LieType::A, k) => (0..=k)
                .map(|r| (0, (0..n - k).map(|c| k + c - r).collect()))
                .take(k + 1)
                .collect(),
            (LieType::C, p) if p == n - 1 => (0..n)
                .map(|r| (0, (0..n - r).map(|c| n - 1 - c).collect()))
                .collect(),
            (LieType::D, p) if p == n - 1 || p == n - 2 => {
                // Both spinor nodes; the grid for node n-2 swaps the roles of
                // n-1 and n in the first-column letters.
                let (even0, odd0) = if p == n - 1 {
                    (n - 1, n - 2)
                } else {
                    (n - 2, n - 1)
                };
                (0..n - 1)
                    .map(|r| {
                        let first = if r % 2 == 0 { even0 } else { odd0 };
                        let mut letters = vec![first];
                        // absolute columns r..n-2; letter n-2-(c-r) for c>r
                        for c in r + 1..n - 1 {
                            letters.push(n - 2 - (c - r));
                        }
                        (r, letters)
                    })
                    .collect()
            }
            (LieType::B, 0) => {
                let mut letters: Vec<usize> = (0..n).collect();
                letters.extend((0..n - 1).rev());
                vec![(0, letters)]
            }
            (LieType::D, 0) => {
                let top: Vec<usize> = (0..n - 1).collect();
                let mut bottom: Vec<usize> = vec![n - 1];
                bottom.extend((0..n - 2).rev());
                vec![(0, top), (n - 3, bottom)]
            }
            (LieType::E, 5) if n == 6 => vec![
                (0, vec![5, 4, 3, 2, 0]),
                (2, vec![1, 3, 2]),
                (3, vec![4, 3, 1]),
                (3, vec![5, 4, 3, 2, 0]),
            ],
            (LieType::E, 0) if n == 6 => {
                // Image of the node-6 grid under the diagram automorphism
                // 1 <-> 6, 3 <-> 5.
                let sigma = |i: usize| match i {
                    0 => 5,
                    5 => 0,
                    2 => 4,
                    4 => 2,
                    other => other,
                };
                vec![
                    (0, vec![5, 4, 3, 2, 0].into_iter().map(sigma).collect()),
                    (2, vec![1, 3, 2].into_iter().map(sigma).collect()),
                    (3, vec![4, 3, 1].into_iter().map(sigma).collect()),
                    (3, vec![5, 4, 3, 2, 0].into_iter().map(sigma).collect()),
                ]
            }
            (LieType::E, 6) if n == 7 => vec![
                (0, vec![6, 5, 4, 3, 2, 0]),
                (3, vec![1, 3, 2]),
                (4, vec![4, 3, 1]),
                (4, vec![5, 4, 3, 2, 0]),
                (4, vec![6, 5, 4, 3, 2]),
                (7, vec![1, 3]),
                (8, vec![4]),
                (8, vec![5]),
                (8, vec![6]),
            ],
            _ => return Err(Error::NotCominuscule),
        };
        Ok(rows)
    }

    pub fn new(rs: &RootSystem, node: usize) -> Result<CominGrid> {
        if !rs.cominuscule_nodes().contains(&node) {
            return Err(Error::NotCominuscule);
        }
        let rows = Self::rows_for(rs, node)?;

        // Reading order: bottom row first, right-to-left within each row.
        let mut reading: Vec<(usize, usize)> = Vec::new(); // (row, letter)
        for (r, (_, letters)) in rows.iter().enumerate().rev() {
            for &l in letters.iter().rev() {
                reading.push((r, l));
            }
        }
        // Assign the inversion root of each box from the suffix products of
        // the full reading word.
        let word: Vec<usize> = reading.iter().map(|&(_, l)| l).collect();
        let full = WeylElt::from_word(rs, &word);
        assert_eq!(
            full.length() as usize,
            word.len(),
            "cominuscule grid reading word is not reduced"
        );
        let mut boxes: Vec<GridBox> = Vec::with_capacity(word.len());
        let mut suffix = WeylElt::identity(rs.rank);
        for t in (0..word.len()).rev() {
            let root = suffix.apply(&rs.simple_root(word[t]));
            let root_idx = rs.root_index(&root).expect("inversion root is positive");
            boxes.push(GridBox {
                row: reading[t].0,
                letter: word[t],
                root_idx,
            });
            suffix = suffix.mul_simple(rs, word[t]);
        }
        boxes.reverse(); // back to reading order

        // Sanity: the box roots are exactly R_{>= alpha_P}.
        let alpha_p = rs.simple_root(node);
        let expect: BTreeSet<usize> = (0..rs.num_positive_roots())
            .filter(|&i| rs.root_leq(&alpha_p, rs.root(i)))
            .collect();
        let got: BTreeSet<usize> = boxes.iter().map(|b| b.root_idx).collect();
        assert_eq!(got, expect, "grid does not cover R_{{>= alpha_P}}");

        let fork = if rs.lie_type == LieType::D && node == 0 {
            let n = rs.rank;
            // branch boxes: letters n-1 ('a' side) and n ('b' side)
            let a = boxes
                .iter()
                .find(|b| b.letter == n - 2 && b.row == 0)
                .unwrap()
                .root_idx;
            let b = boxes.iter().find(|b| b.letter == n - 1).unwrap().root_idx;
            Some((a, b))
        } else {
            None
        };

        Ok(CominGrid { node, boxes, fork })
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn num_boxes(&self) -> usize {
        self.boxes.len()
    }

    pub fn root_indices(&self) -> BTreeSet<usize> {
        self.boxes.iter().map(|b| b.root_idx).collect()
    }

    /// Is `ideal` (a set of root indices) a lower order ideal of the poset?
    pub fn is_ideal(&self, rs: &RootSystem, ideal: &BTreeSet<usize>) -> bool {
        let members = self.root_indices();
        if !ideal.iter().all(|i| members.contains(i)) {
            return false;
        }
        for &i in ideal {
            for &j in &members {
                if rs.root_leq(rs.root(j), rs.root(i)) && !ideal.contains(&j) {
                    return false;
                }
            }
        }
        true
    }

    /// The minimal representative whose inversion set is the given ideal.
    pub fn element_of_ideal(&self, rs: &RootSystem, ideal: &BTreeSet<usize>) -> Result<WeylElt> {
        if !self.is_ideal(rs, ideal) {
            return Err(Error::NotAnIdeal);
        }
        let mut w = WeylElt::identity(rs.rank);
        for b in &self.boxes {
            if ideal.contains(&b.root_idx) {
                w = w.mul_simple(rs, b.letter);
            }
        }
        assert_eq!(
            w.length() as usize,
            ideal.len(),
            "ideal reading not reduced"
        );
        Ok(w)
    }

    /// Diagram label from an inversion-set ideal.
    pub fn label_of_ideal(&self, rs: &RootSystem, ideal: &BTreeSet<usize>) -> CominLabel {
        let quadric = matches!((rs.lie_type, self.node), (LieType::B, 0) | (LieType::D, 0));
        if quadric {
            let size = ideal.len() as u32;
            let branch = self.fork.and_then(|(a, b)| {
                let ha = ideal.contains(&a);
                let hb = ideal.contains(&b);
                match (ha, hb) {
                    (true, false) => Some('a'),
                    (false, true) => Some('b'),
                    _ => None,
                }
            });
            CominLabel::Quadric { size, branch }
        } else {
            let nrows = self.boxes.iter().map(|b| b.row).max().unwrap_or(0) + 1;
            let mut counts = vec![0u32; nrows];
            for b in &self.boxes {
                if ideal.contains(&b.root_idx) {
                    counts[b.row] += 1;
                }
            }
            while counts.last() == Some(&0) {
                counts.pop();
            }
            CominLabel::Parts(counts)
        }
    }

    /// Inverse of `label_of_ideal`. On quadrics a bare size parses as the
    /// branchless label.
    pub fn ideal_of_label(&self, rs: &RootSystem, label: &CominLabel) -> Result<BTreeSet<usize>> {
        let quadric = matches!((rs.lie_type, self.node), (LieType::B, 0) | (LieType::D, 0));
        let wanted = match (quadric, label) {
            (true, CominLabel::Parts(p)) if p.len() <= 1 => CominLabel::Quadric {
                size: p.first().copied().unwrap_or(0),
                branch: None,
            },
            _ => label.clone(),
        };
        let ideals = self.all_ideals(rs);
        for ideal in ideals {
            if self.label_of_ideal(rs, &ideal) == wanted {
                return Ok(ideal);
            }
        }
        Err(Error::BadInput(format!(
            "no Schubert class labelled {label}"
        )))
    }

    /// Every lower order ideal of the poset.
    pub fn all_ideals(&self, rs: &RootSystem) -> Vec<BTreeSet<usize>> {
        let members: Vec<usize> = self.root_indices().into_iter().collect();
        let mut result: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut frontier = vec![BTreeSet::new()];
        result.insert(BTreeSet::new());
        while let Some(ideal) = frontier.pop() {
            for &m in &members {
                if ideal.contains(&m) {
                    continue;
                }
                // m addable iff everything below m is already in
                let addable = members
                    .iter()
                    .all(|&j| j == m || !rs.root_leq(rs.root(j), rs.root(m)) || ideal.contains(&j));
                if addable {
                    let mut next = ideal.clone();
                    next.insert(m);
                    if result.insert(next.clone()) {
                        frontier.push(next);
                    }
                }
            }
        }
        result.into_iter().collect()
    }
}

/// A parabolic quotient `W^P`, with the cominuscule diagram dictionary when
/// `P` is a maximal parabolic at a cominuscule node.
pub struct ParabolicQuotient {
    /// Nodes of `Delta` NOT in `P` (0-based). Empty means `P = G`, the whole
    /// set means `P = B`.
    pub omitted: BTreeSet<usize>,
    /// Minimal-length representatives, sorted by (length, matrix).
    pub min_reps: Vec<WeylElt>,
    /// Root indices of `R_P^+`.
    pub rp_plus: Vec<usize>,
    grid: Option<CominGrid>,
}

impl ParabolicQuotient {
    /// Enumerates `W^P`. For a single cominuscule omitted node this goes
    /// through order ideals (no full Weyl group enumeration); otherwise it
    /// filters a full enumeration, guarded by `cap`.
    pub fn new(rs: &RootSystem, omitted: &BTreeSet<usize>, cap: usize) -> Result<Self> {
        let p_nodes: BTreeSet<usize> = (0..rs.rank).filter(|i| !omitted.contains(i)).collect();
        let rp_plus: Vec<usize> = (0..rs.num_positive_roots())
            .filter(|&i| {
                rs.root(i)
                    .coords
                    .iter()
                    .enumerate()
                    .all(|(j, &c)| c == 0 || p_nodes.contains(&j))
            })
            .collect();

        let (min_reps, grid) = if omitted.len() == 1 {
            let node = *omitted.iter().next().unwrap();
            if rs.cominuscule_nodes().contains(&node) {
                let grid = CominGrid::new(rs, node)?;
                let mut reps: Vec<WeylElt> = grid
                    .all_ideals(rs)
                    .into_iter()
                    .map(|ideal| grid.element_of_ideal(rs, &ideal).expect("ideal"))
                    .collect();
                reps.sort();
                (reps, Some(grid))
            } else {
                let reps = full_filter(rs, &p_nodes, cap)?;
                (reps, None)
            }
        } else {
            let reps = full_filter(rs, &p_nodes, cap)?;
            (reps, None)
        };

        Ok(ParabolicQuotient {
            omitted: omitted.clone(),
            min_reps,
            rp_plus,
            grid,
        })
    }

    pub fn p_nodes(&self, rs: &RootSystem) -> BTreeSet<usize> {
        (0..rs.rank).filter(|i| !self.omitted.contains(i)).collect()
    }

    pub fn grid(&self) -> Option<&CominGrid> {
        self.grid.as_ref()
    }

    pub fn contains(&self, w: &WeylElt) -> bool {
        self.min_reps.binary_search(w).is_ok()
    }

    /// Diagram label of a minimal representative.
    pub fn label(&self, rs: &RootSystem, w: &WeylElt) -> Result<CominLabel> {
        let grid = self.grid.as_ref().ok_or(Error::NotCominuscule)?;
        let ideal: BTreeSet<usize> = w.inversion_set(rs).into_iter().collect();
        Ok(grid.label_of_ideal(rs, &ideal))
    }

    /// Minimal representative for a diagram label.
    pub fn element_of_label(&self, rs: &RootSystem, label: &CominLabel) -> Result<WeylElt> {
        let grid = self.grid.as_ref().ok_or(Error::NotCominuscule)?;
        let ideal = grid.ideal_of_label(rs, label)?;
        grid.element_of_ideal(rs, &ideal)
    }
}

fn full_filter(rs: &RootSystem, p_nodes: &BTreeSet<usize>, cap: usize) -> Result<Vec<WeylElt>> {
    let all = enumerate_full(rs, cap)?;
    Ok(all
        .into_iter()
        .filter(|w| is_minimal_rep(rs, p_nodes, w))
        .collect())
}
