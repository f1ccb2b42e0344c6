//! Root systems of types A-D, E6, E7 in Bourbaki numbering: positive roots,
//! coroot pairings, reflections, the highest root, cominuscule nodes, and
//! the partial order on positive roots.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            LieType::A => 'A',
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
            LieType::E => 'E',
        };
        write!(f, "{c}")
    }
}

/// A weight in simple-root coordinates. Every weight used by the pipelines
/// lies in the root lattice, so integer coordinates suffice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Weight { coords }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Sum of coordinates; the height for a positive root.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// All coordinates nonnegative (for roots: positivity test).
    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }
}

/// Cartan data plus the enumerated positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    cartan: Vec<Vec<i64>>,
    /// Symmetrizer: `(alpha_i, alpha_j) = sym[i] * cartan[i][j]`.
    sym: Vec<i64>,
    /// Sorted by (height, coordinates): deterministic indices.
    positive_roots: Vec<Weight>,
    index: BTreeMap<Vec<i64>, usize>,
    highest_root: Weight,
}

/// Builds the Bourbaki-convention root system.
pub fn build_root_system(lie_type: LieType, rank: usize) -> Result<RootSystem> {
    let ok = match lie_type {
        LieType::A => rank >= 1,
        LieType::B | LieType::C => rank >= 2,
        LieType::D => rank >= 3,
        LieType::E => rank == 6 || rank == 7,
    };
    if !ok {
        return Err(Error::UnsupportedRootSystem(format!("{lie_type}{rank}")));
    }

    let mut cartan = vec![vec![0i64; rank]; rank];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
    }
    let edge = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    let mut sym = vec![1i64; rank];
    match lie_type {
        LieType::A => {
            for i in 0..rank - 1 {
                edge(&mut cartan, i, i + 1);
            }
        }
        LieType::B => {
            // alpha_n short: <alpha_n, alpha_{n-1}^vee> = -1, <alpha_{n-1}, alpha_n^vee> = -2
            for i in 0..rank - 2 {
                edge(&mut cartan, i, i + 1);
            }
            cartan[rank - 2][rank - 1] = -1;
            cartan[rank - 1][rank - 2] = -2;
            for s in sym.iter_mut().take(rank - 1) {
                *s = 2;
            }
            sym[rank - 1] = 1;
        }
        LieType::C => {
            // alpha_n long: <alpha_{n-1}, alpha_n^vee> = -1, <alpha_n, alpha_{n-1}^vee> = -2
            for i in 0..rank - 2 {
                edge(&mut cartan, i, i + 1);
            }
            cartan[rank - 2][rank - 1] = -2;
            cartan[rank - 1][rank - 2] = -1;
            sym[rank - 1] = 2;
        }
        LieType::D => {
            for i in 0..rank - 2 {
                edge(&mut cartan, i, i + 1);
            }
            edge(&mut cartan, rank - 3, rank - 1);
        }
        LieType::E => {
            // 1-3-4-5-6(-7) chain, 2 attached to 4.
            edge(&mut cartan, 0, 2);
            edge(&mut cartan, 2, 3);
            edge(&mut cartan, 3, 4);
            edge(&mut cartan, 4, 5);
            if rank == 7 {
                edge(&mut cartan, 5, 6);
            }
            edge(&mut cartan, 1, 3);
        }
    }

    // Enumerate positive roots by closure under simple-root addition.
    let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..rank {
        set.insert(Weight::simple(rank, i).coords);
    }
    let pair_simple = |coords: &[i64], i: usize| -> i64 {
        coords.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum()
    };
    loop {
        let mut added = false;
        let snapshot: Vec<Vec<i64>> = set.iter().cloned().collect();
        for beta in &snapshot {
            for i in 0..rank {
                // Root string through beta in direction alpha_i:
                // beta + alpha_i is a root iff q > 0 where q = p - <beta, alpha_i^vee>.
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down.iter().all(|&c| c == 0) || set.contains(&down) {
                        if down.iter().all(|&c| c == 0) {
                            // beta == alpha_i; the string below is -alpha_i, stop.
                            break;
                        }
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pair_simple(beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if set.insert(up) {
                        added = true;
                    }
                }
            }
        }
        if !added {
            break;
        }
    }

    let mut positive_roots: Vec<Weight> = set.into_iter().map(|coords| Weight { coords }).collect();
    positive_roots.sort_by_key(|r| (r.height(), r.coords.clone()));
    let index: BTreeMap<Vec<i64>, usize> = positive_roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.coords.clone(), i))
        .collect();
    let highest_root = positive_roots.last().unwrap().clone();

    let expected = match lie_type {
        LieType::A => rank * (rank + 1) / 2,
        LieType::B | LieType::C => rank * rank,
        LieType::D => rank * (rank - 1),
        LieType::E => {
            if rank == 6 {
                36
            } else {
                63
            }
        }
    };
    assert_eq!(positive_roots.len(), expected, "positive root count");

    Ok(RootSystem {
        lie_type,
        rank,
        cartan,
        sym,
        positive_roots,
        index,
        highest_root,
    })
}

impl RootSystem {
    pub fn name(&self) -> String {
        format!("{}{}", self.lie_type, self.rank)
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn root(&self, idx: usize) -> &Weight {
        &self.positive_roots[idx]
    }

    pub fn root_index(&self, w: &Weight) -> Option<usize> {
        self.index.get(&w.coords).copied()
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.index.contains_key(&w.coords)
    }

    pub fn highest_root(&self) -> &Weight {
        &self.highest_root
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::simple(self.rank, i)
    }

    /// Inner product in the normalization fixed by `sym`.
    fn inner(&self, a: &Weight, b: &Weight) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a.coords[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a.coords[i] * b.coords[j] * self.sym[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `<lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha)` for a root `alpha`.
    pub fn pair(&self, lambda: &Weight, alpha: &Weight) -> Result<i64> {
        if !self.is_positive_root(alpha) && !self.is_positive_root(&alpha.neg()) {
            return Err(Error::NotARoot);
        }
        let num = 2 * self.inner(lambda, alpha);
        let den = self.inner(alpha, alpha);
        assert!(den != 0 && num % den == 0, "coroot pairing not integral");
        Ok(num / den)
    }

    /// Reflection `s_alpha(lambda) = lambda - <lambda, alpha^vee> alpha`.
    pub fn reflect(&self, alpha: &Weight, lambda: &Weight) -> Result<Weight> {
        let k = self.pair(lambda, alpha)?;
        Ok(lambda.sub(&alpha.scale(k)))
    }

    /// Nodes whose simple root has coefficient 1 in the highest root (1-based
    /// externally; this returns 0-based indices).
    pub fn cominuscule_nodes(&self) -> BTreeSet<usize> {
        (0..self.rank)
            .filter(|&i| self.highest_root.coords[i] == 1)
            .collect()
    }

    /// Partial order on positive roots: `a <= b` iff `b - a` has nonnegative
    /// coordinates.
    pub fn root_leq(&self, a: &Weight, b: &Weight) -> bool {
        b.sub(a).is_nonnegative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // epsilon-coordinate oracles for the classical types. Roots are
    // expressed in an orthonormal-ish basis where pairings can be computed
    // independently of the Cartan matrix route.
    fn eps_of_simple(lt: LieType, rank: usize, i: usize) -> Vec<f64> {
        // dimension rank+1 for A, rank otherwise
        match lt {
            LieType::A => {
                let mut v = vec![0.0; rank + 1];
                v[i] = 1.0;
                v[i + 1] = -1.0;
                v
            }
            LieType::B => {
                let mut v = vec![0.0; rank];
                if i + 1 < rank {
                    v[i] = 1.0;
                    v[i + 1] = -1.0;
                } else {
                    v[i] = 1.0;
                }
                v
            }
            LieType::C => {
                let mut v = vec![0.0; rank];
                if i + 1 < rank {
                    v[i] = 1.0;
                    v[i + 1] = -1.0;
                } else {
                    v[i] = 2.0;
                }
                v
            }
            LieType::D => {
                let mut v = vec![0.0; rank];
                if i + 1 < rank {
                    v[i] = 1.0;
                    v[i + 1] = -1.0;
                } else {
                    v[rank - 2] = 1.0;
                    v[rank - 1] = 1.0;
                }
                v
            }
            LieType::E => unreachable!(),
        }
    }

    fn eps_of(lt: LieType, rank: usize, w: &Weight) -> Vec<f64> {
        let dim = if lt == LieType::A { rank + 1 } else { rank };
        let mut v = vec![0.0; dim];
        for (i, &c) in w.coords.iter().enumerate() {
            let e = eps_of_simple(lt, rank, i);
            for (k, x) in e.iter().enumerate() {
                v[k] += (c as f64) * x;
            }
        }
        v
    }

    fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    fn pair_oracle(lt: LieType, rank: usize, lambda: &Weight, alpha: &Weight) -> i64 {
        let l = eps_of(lt, rank, lambda);
        let a = eps_of(lt, rank, alpha);
        let v = 2.0 * dot(&l, &a) / dot(&a, &a);
        let r = v.round();
        assert!((v - r).abs() < 1e-9);
        r as i64
    }

    #[test]
    fn counts_and_highest_roots() {
        let a3 = build_root_system(LieType::A, 3).unwrap();
        assert_eq!(a3.num_positive_roots(), 6);
        assert_eq!(a3.highest_root().coords, vec![1, 1, 1]);

        let c2 = build_root_system(LieType::C, 2).unwrap();
        assert_eq!(c2.num_positive_roots(), 4);
        assert_eq!(c2.highest_root().coords, vec![2, 1]);

        let e6 = build_root_system(LieType::E, 6).unwrap();
        assert_eq!(e6.num_positive_roots(), 36);
        assert_eq!(e6.highest_root().coords, vec![1, 2, 2, 3, 2, 1]);

        let e7 = build_root_system(LieType::E, 7).unwrap();
        assert_eq!(e7.num_positive_roots(), 63);
        assert_eq!(e7.highest_root().coords, vec![2, 2, 3, 4, 3, 2, 1]);

        assert!(build_root_system(LieType::D, 2).is_err());
        assert!(build_root_system(LieType::E, 8).is_err());
    }

    #[test]
    fn pairings_match_epsilon_oracle() {
        for (lt, rank) in [
            (LieType::A, 3),
            (LieType::B, 3),
            (LieType::C, 2),
            (LieType::C, 3),
            (LieType::D, 4),
        ] {
            let rs = build_root_system(lt, rank).unwrap();
            for a in rs.positive_roots() {
                for b in rs.positive_roots() {
                    assert_eq!(
                        rs.pair(a, b).unwrap(),
                        pair_oracle(lt, rank, a, b),
                        "{lt}{rank}: <{:?},{:?}^v>",
                        a.coords,
                        b.coords
                    );
                }
            }
        }
    }

    #[test]
    fn pair_examples() {
        let a1 = build_root_system(LieType::A, 1).unwrap();
        let al = a1.simple_root(0);
        assert_eq!(a1.pair(&al, &al).unwrap(), 2);

        // C2 convention pins, frozen from the epsilon oracle:
        // alpha_1 = e1-e2 (short), alpha_2 = 2 e2 (long).
        let c2 = build_root_system(LieType::C, 2).unwrap();
        let a1r = c2.simple_root(0);
        let a2r = c2.simple_root(1);
        assert_eq!(c2.pair(&a2r, &a1r).unwrap(), -2);
        assert_eq!(c2.pair(&a1r, &a2r).unwrap(), -1);

        let a3 = build_root_system(LieType::A, 3).unwrap();
        let theta = a3.highest_root().clone();
        assert_eq!(a3.pair(&theta, &a3.simple_root(1)).unwrap(), 0);
    }

    #[test]
    fn reflections() {
        let a1 = build_root_system(LieType::A, 1).unwrap();
        let al = a1.simple_root(0);
        assert_eq!(a1.reflect(&al, &al).unwrap(), al.neg());

        // s_{alpha_2}(alpha_1) = alpha_1 + alpha_2 in A3 (epsilon oracle agrees)
        let a3 = build_root_system(LieType::A, 3).unwrap();
        let got = a3.reflect(&a3.simple_root(1), &a3.simple_root(0)).unwrap();
        assert_eq!(got.coords, vec![1, 1, 0]);

        // s_{alpha_1}(alpha_2) = 2 alpha_1 + alpha_2 in C2
        let c2 = build_root_system(LieType::C, 2).unwrap();
        let got = c2.reflect(&c2.simple_root(0), &c2.simple_root(1)).unwrap();
        assert_eq!(got.coords, vec![2, 1]);

        // reflections permute the root set
        for rs in [&a3, &c2] {
            for alpha in rs.positive_roots() {
                for beta in rs.positive_roots() {
                    let im = rs.reflect(alpha, beta).unwrap();
                    assert!(rs.is_positive_root(&im) || rs.is_positive_root(&im.neg()));
                }
            }
        }
    }

    #[test]
    fn pair_reproduces_cartan_on_simples() {
        for (lt, rank) in [
            (LieType::A, 4),
            (LieType::B, 4),
            (LieType::C, 4),
            (LieType::D, 5),
            (LieType::E, 6),
            (LieType::E, 7),
        ] {
            let rs = build_root_system(lt, rank).unwrap();
            for i in 0..rank {
                for j in 0..rank {
                    assert_eq!(
                        rs.pair(&rs.simple_root(j), &rs.simple_root(i)).unwrap(),
                        rs.cartan(i, j)
                    );
                }
            }
        }
    }

    #[test]
    fn cominuscule_nodes_by_type() {
        let a4 = build_root_system(LieType::A, 4).unwrap();
        assert_eq!(a4.cominuscule_nodes(), (0..4).collect());

        let c4 = build_root_system(LieType::C, 4).unwrap();
        assert_eq!(c4.cominuscule_nodes(), [3].into_iter().collect());

        let b3 = build_root_system(LieType::B, 3).unwrap();
        assert_eq!(b3.cominuscule_nodes(), [0].into_iter().collect());

        let d5 = build_root_system(LieType::D, 5).unwrap();
        assert_eq!(d5.cominuscule_nodes(), [0, 3, 4].into_iter().collect());

        let e6 = build_root_system(LieType::E, 6).unwrap();
        assert_eq!(e6.cominuscule_nodes(), [0, 5].into_iter().collect());

        let e7 = build_root_system(LieType::E, 7).unwrap();
        assert_eq!(e7.cominuscule_nodes(), [6].into_iter().collect());
    }

    #[test]
    fn highest_root_is_maximum() {
        for (lt, rank) in [
            (LieType::A, 3),
            (LieType::C, 3),
            (LieType::D, 4),
            (LieType::E, 6),
        ] {
            let rs = build_root_system(lt, rank).unwrap();
            for r in rs.positive_roots() {
                assert!(rs.root_leq(r, rs.highest_root()));
                assert!(r.is_nonnegative());
            }
        }
    }
}
