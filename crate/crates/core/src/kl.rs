//! Kazhdan-Lusztig polynomials (classical recursion, memoized), KL classes,
//! characteristic-cycle multiplicities, and the irreducibility test
//! `e_{w,v} = P_{w,v}(1)`.
//!
//! Polynomials are computed in the full Weyl group with the ordinary
//! recursion. The parabolic polynomial entering the KL class of `X_w^P` is
//! realized as the ordinary polynomial at coset-maximal representatives,
//! `P(v w_P, w w_P)`: the IC sheaf of `X_w^P` pulls back along the smooth
//! fibration `G/B -> G/P` to the IC sheaf of `X_{w w_P}^B`, so the stalk
//! polynomials agree. On `G/B` the two readings coincide. The naive
//! evaluation at minimal representatives is kept as an exploratory
//! comparison (`compare_ordinary_vs_euler`), not an assertion.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::chow::{FlagSpace, SchubertClass};
use crate::csm::{CsmTable, EulerTable};
use crate::mather::{mather_class, pullback_mather};
use crate::roots::RootSystem;
use crate::weyl::{WeylCtx, WeylElt};
use crate::{Error, Result};

/// A polynomial in `q` with integer coefficients; index = exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KLPoly(pub Vec<i64>);

impl KLPoly {
    pub fn zero() -> Self {
        KLPoly(Vec::new())
    }

    pub fn one() -> Self {
        KLPoly(vec![1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|&c| c != 0)
    }

    pub fn eval_one(&self) -> i64 {
        self.0.iter().sum()
    }

    fn trim(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![0i64; n];
        for (i, v) in out.iter_mut().enumerate() {
            *v = self.coeff(i) + other.coeff(i);
        }
        KLPoly(out).trim()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![0i64; n];
        for (i, v) in out.iter_mut().enumerate() {
            *v = self.coeff(i) - other.coeff(i);
        }
        KLPoly(out).trim()
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0i64; k];
        out.extend_from_slice(&self.0);
        KLPoly(out)
    }

    pub fn scale(&self, c: i64) -> Self {
        KLPoly(self.0.iter().map(|&a| a * c).collect()).trim()
    }
}

/// Memo table for `P_{x,w}`, keyed by the pair.
#[derive(Default)]
pub struct KlCtx {
    memo: BTreeMap<(WeylElt, WeylElt), Rc<KLPoly>>,
}

impl KlCtx {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(WeylElt, WeylElt), &Rc<KLPoly>)> {
        self.memo.iter()
    }

    pub fn preload(&mut self, x: WeylElt, w: WeylElt, p: KLPoly) {
        self.memo.insert((x, w), Rc::new(p));
    }
}

/// `mu(z, v)`: the coefficient of `q^{(l(v)-l(z)-1)/2}` in `P_{z,v}`.
fn mu(kctx: &mut KlCtx, wctx: &mut WeylCtx, rs: &RootSystem, z: &WeylElt, v: &WeylElt) -> i64 {
    let gap = v.length() - z.length();
    if gap.is_multiple_of(2) {
        return 0;
    }
    let p = kl_polynomial(kctx, wctx, rs, z, v);
    p.coeff(((gap - 1) / 2) as usize)
}

/// The Kazhdan-Lusztig polynomial `P_{x,w}` (zero when `x` is not below `w`).
pub fn kl_polynomial(
    kctx: &mut KlCtx,
    wctx: &mut WeylCtx,
    rs: &RootSystem,
    x: &WeylElt,
    w: &WeylElt,
) -> Rc<KLPoly> {
    if !wctx.bruhat_leq(rs, x, w) {
        return Rc::new(KLPoly::zero());
    }
    if x == w || w.length() - x.length() <= 2 {
        // P = 1 whenever l(w) - l(x) <= 2
        return Rc::new(KLPoly::one());
    }
    let key = (x.clone(), w.clone());
    if let Some(p) = kctx.memo.get(&key) {
        return Rc::clone(p);
    }
    let i = w.first_left_descent(rs).expect("nonidentity");
    let s = WeylElt::simple(rs, i);
    let sw = s.mul(rs, w);
    let sx = s.mul(rs, x);
    let c = if sx.length() < x.length() { 1usize } else { 0 };

    let p_sx = kl_polynomial(kctx, wctx, rs, &sx, &sw);
    let p_x = kl_polynomial(kctx, wctx, rs, x, &sw);
    let mut acc = p_sx.shift(1 - c).add(&p_x.shift(c));

    let interval = wctx.lower_interval(rs, &sw);
    for z in interval.iter() {
        let sz = s.mul(rs, z);
        if z == &sw || sz.length() >= z.length() || !wctx.bruhat_leq(rs, x, z) {
            continue;
        }
        let m = mu(kctx, wctx, rs, z, &sw);
        if m == 0 {
            continue;
        }
        let shift = ((w.length() - z.length()) / 2) as usize;
        let p_xz = kl_polynomial(kctx, wctx, rs, x, z);
        acc = acc.sub(&p_xz.scale(m).shift(shift));
    }

    let rc = Rc::new(acc);
    kctx.memo.insert(key, Rc::clone(&rc));
    rc
}

/// The parabolic KL polynomial `P_{w,v}` of the space, as the ordinary
/// polynomial at coset-maximal representatives.
pub fn parabolic_kl_polynomial(
    kctx: &mut KlCtx,
    wctx: &mut WeylCtx,
    space: &FlagSpace,
    v: &WeylElt,
    w: &WeylElt,
) -> Rc<KLPoly> {
    let rs = space.rs.clone();
    let w_p = space.w_p();
    let v_max = v.mul(&rs, &w_p);
    let w_max = w.mul(&rs, &w_p);
    kl_polynomial(kctx, wctx, &rs, &v_max, &w_max)
}

/// The KL class `KL_w^P = sum_v P_{w,v}(1) csm(X_v^{P,o})`, built against a
/// CSM table of the space.
pub fn kl_class(
    kctx: &mut KlCtx,
    wctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    table: &CsmTable,
) -> Result<SchubertClass> {
    assert!(table.space == *space);
    if !space.is_min_rep(w) {
        return Err(Error::NotMinimalRep);
    }
    let mut out = SchubertClass::zero(space.clone(), table.equivariant);
    for (v, cell) in &table.classes {
        let p = parabolic_kl_polynomial(kctx, wctx, space, v, w);
        let val = p.eval_one();
        if val != 0 {
            out = out.add(&cell.scale(&BigRational::from_integer(val.into())));
        }
    }
    Ok(out)
}

/// Characteristic-cycle multiplicities `m_{w,v}` of the IH sheaf of `X_w^P`.
#[derive(Debug, Clone)]
pub struct CCDecomposition {
    pub w: WeylElt,
    pub multiplicities: BTreeMap<WeylElt, i64>,
}

impl CCDecomposition {
    pub fn multiplicity(&self, v: &WeylElt) -> i64 {
        self.multiplicities.get(v).copied().unwrap_or(0)
    }

    pub fn is_irreducible(&self) -> bool {
        self.multiplicities.len() == 1 && self.multiplicity(&self.w) == 1
    }
}

/// Expands a class in a triangular basis indexed by the given elements
/// (leading coefficient 1 on the index), returning the integer coordinates.
fn triangular_expand(
    class: &SchubertClass,
    basis: &BTreeMap<WeylElt, SchubertClass>,
) -> Result<BTreeMap<WeylElt, i64>> {
    let mut residual = class.clone();
    let mut coords = BTreeMap::new();
    let mut order: Vec<&WeylElt> = basis.keys().collect();
    order.sort_by_key(|v| core::cmp::Reverse(v.length()));
    for v in order {
        let c = residual.coefficient(v);
        if c.is_zero() {
            continue;
        }
        if !c.is_constant() || !c.constant_term().is_integer() {
            return Err(Error::NonIntegralSolve(alloc::format!(
                "coordinate at a basis element came out {c}"
            )));
        }
        let b = i64::try_from(c.constant_term().to_integer())
            .map_err(|_| Error::NonIntegralSolve(alloc::string::String::from("overflow")))?;
        coords.insert(v.clone(), b);
        residual = residual.sub(&basis[v].scale(&BigRational::from_integer(b.into())));
    }
    if !residual.is_zero() {
        return Err(Error::NonIntegralSolve(alloc::string::String::from(
            "class is outside the span of the basis",
        )));
    }
    Ok(coords)
}

/// CC multiplicities on a cominuscule `G/P`: triangular solve of `KL_w^P`
/// against the Mather basis, signs per the dehomogenized expansion.
pub fn cc_multiplicities(
    kctx: &mut KlCtx,
    wctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    table: &CsmTable,
) -> Result<CCDecomposition> {
    let kl = kl_class(kctx, wctx, space, w, table)?;
    let mut basis = BTreeMap::new();
    for v in table.classes.keys() {
        if wctx.bruhat_leq(&space.rs, v, w) {
            let m = mather_class(wctx, space, v, table.equivariant)?;
            basis.insert(v.clone(), m.downstairs);
        }
    }
    let coords = triangular_expand(&kl, &basis)?;
    let multiplicities = coords
        .into_iter()
        .map(|(v, b)| {
            let sign = if (w.length() - v.length()).is_multiple_of(2) {
                1
            } else {
                -1
            };
            (v, sign * b)
        })
        .collect();
    Ok(CCDecomposition {
        w: w.clone(),
        multiplicities,
    })
}

/// CC multiplicities of a pull-back `pi^{-1}(X_w^P)` on `G/B`, solved against
/// the pull-back Mather basis `{c_Ma(pi^{-1} X_v^P)}`. Keys of the result are
/// the minimal representatives `v` in `W^P`.
pub fn cc_multiplicities_pullback(
    kctx: &mut KlCtx,
    wctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    gb_table: &CsmTable,
) -> Result<CCDecomposition> {
    let rs = space.rs.clone();
    let gb = FlagSpace::complete(rs.clone());
    assert!(gb_table.space == gb);
    let w_p = space.w_p();
    let w_up = w.mul(&rs, &w_p);
    let kl = kl_class(kctx, wctx, &gb, &w_up, gb_table)?;
    // basis keyed by the coset-maximal element v . w_P
    let mut basis = BTreeMap::new();
    let mut coset_min = BTreeMap::new();
    for v in gb_table.classes.keys() {
        if !space.is_min_rep(v) || !wctx.bruhat_leq(&rs, v, w) {
            continue;
        }
        let key = v.mul(&rs, &w_p);
        basis.insert(
            key.clone(),
            pullback_mather(wctx, space, v, &gb, gb_table.equivariant)?,
        );
        coset_min.insert(key, v.clone());
    }
    let coords = triangular_expand(&kl, &basis)?;
    let multiplicities = coords
        .into_iter()
        .map(|(key, b)| {
            let v = coset_min[&key].clone();
            let sign = if (w_up.length() - key.length()).is_multiple_of(2) {
                1
            } else {
                -1
            };
            (v, sign * b)
        })
        .collect();
    Ok(CCDecomposition {
        w: w.clone(),
        multiplicities,
    })
}

/// `e_{w,v} = P_{w,v}(1)` for every `v <= w` in `W^P`: characteristic-cycle
/// irreducibility, tested through the Euler-obstruction route.
pub fn cc_irreducible_via_euler(
    kctx: &mut KlCtx,
    wctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    euler: &EulerTable,
    reps: &[WeylElt],
) -> bool {
    let rs = space.rs.clone();
    for v in reps {
        if !wctx.bruhat_leq(&rs, v, w) {
            continue;
        }
        let p = parabolic_kl_polynomial(kctx, wctx, space, v, w).eval_one();
        if euler.value(v) != p {
            return false;
        }
    }
    true
}

/// Exploratory comparison of the naive reading (ordinary polynomials at
/// minimal representatives) against the Euler obstructions: returns the
/// triples `(v, e_{w,v}, P_{v,w}(1))` where the two sides disagree.
pub fn compare_ordinary_vs_euler(
    kctx: &mut KlCtx,
    wctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    euler: &EulerTable,
    reps: &[WeylElt],
) -> Vec<(WeylElt, i64, i64)> {
    let rs = space.rs.clone();
    let mut out = Vec::new();
    for v in reps {
        if !wctx.bruhat_leq(&rs, v, w) {
            continue;
        }
        let p = kl_polynomial(kctx, wctx, &rs, v, w).eval_one();
        let e = euler.value(v);
        if p != e {
            out.push((v.clone(), e, p));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csm::euler_obstructions;
    use crate::roots::{build_root_system, LieType};
    use crate::weyl::{enumerate_full, CominLabel, ParabolicQuotient};

    const CAP: usize = 1 << 20;

    // R-polynomial oracle: R_{x,w} by the standard recursion, used to verify
    // the KL functional equation q^{l(w)-l(x)} P_{x,w}(1/q) =
    // sum_{x <= z <= w} R_{x,z} P_{z,w}.
    fn r_poly(
        memo: &mut BTreeMap<(WeylElt, WeylElt), KLPoly>,
        wctx: &mut WeylCtx,
        rs: &RootSystem,
        x: &WeylElt,
        w: &WeylElt,
    ) -> KLPoly {
        if !wctx.bruhat_leq(rs, x, w) {
            return KLPoly::zero();
        }
        if x == w {
            return KLPoly::one();
        }
        if let Some(p) = memo.get(&(x.clone(), w.clone())) {
            return p.clone();
        }
        let i = w.first_left_descent(rs).unwrap();
        let s = WeylElt::simple(rs, i);
        let sw = s.mul(rs, w);
        let sx = s.mul(rs, x);
        let r = if sx.length() < x.length() {
            r_poly(memo, wctx, rs, &sx, &sw)
        } else {
            // (q-1) R_{x,sw} + q R_{sx,sw}
            let a = r_poly(memo, wctx, rs, x, &sw);
            let b = r_poly(memo, wctx, rs, &sx, &sw);
            a.shift(1).sub(&a).add(&b.shift(1))
        };
        memo.insert((x.clone(), w.clone()), r.clone());
        r
    }

    fn check_functional_equation(rs: &RootSystem) {
        let mut wctx = WeylCtx::new();
        let mut kctx = KlCtx::new();
        let mut rmemo = BTreeMap::new();
        let all = enumerate_full(rs, CAP).unwrap();
        for x in &all {
            for w in &all {
                if !wctx.bruhat_leq(rs, x, w) {
                    continue;
                }
                let p = kl_polynomial(&mut kctx, &mut wctx, rs, x, w);
                // degree bound
                if x != w {
                    let bound = ((w.length() - x.length()) as usize).saturating_sub(1) / 2;
                    assert!(p.degree().unwrap_or(0) <= bound);
                }
                assert_eq!(p.coeff(0), 1, "constant term");
                // lhs: q^{l(w)-l(x)} P(1/q)
                let gap = (w.length() - x.length()) as usize;
                let mut lhs = vec![0i64; gap + 1];
                for (k, &c) in p.0.iter().enumerate() {
                    lhs[gap - k] += c;
                }
                // rhs: sum over z in [x, w]
                let mut rhs = KLPoly::zero();
                let interval = wctx.lower_interval(rs, w);
                for z in interval.iter() {
                    if !wctx.bruhat_leq(rs, x, z) {
                        continue;
                    }
                    let r = r_poly(&mut rmemo, &mut wctx, rs, x, z);
                    if r.is_zero() {
                        continue;
                    }
                    let pz = kl_polynomial(&mut kctx, &mut wctx, rs, z, w);
                    // r * pz
                    let mut prod = KLPoly::zero();
                    for (k, &c) in pz.0.iter().enumerate() {
                        prod = prod.add(&r.scale(c).shift(k));
                    }
                    rhs = rhs.add(&prod);
                }
                assert_eq!(KLPoly(lhs).trim(), rhs, "functional equation");
            }
        }
    }

    #[test]
    fn kl_functional_equation_small_groups() {
        for (lt, rank) in [
            (LieType::A, 2),
            (LieType::C, 2),
            (LieType::A, 3),
            (LieType::C, 3),
        ] {
            let rs = build_root_system(lt, rank).unwrap();
            check_functional_equation(&rs);
        }
    }

    #[test]
    fn dihedral_kl_are_one() {
        for (lt, rank) in [(LieType::A, 2), (LieType::B, 2)] {
            let rs = build_root_system(lt, rank).unwrap();
            let mut wctx = WeylCtx::new();
            let mut kctx = KlCtx::new();
            let all = enumerate_full(&rs, CAP).unwrap();
            for x in &all {
                for w in &all {
                    if wctx.bruhat_leq(&rs, x, w) {
                        assert_eq!(
                            *kl_polynomial(&mut kctx, &mut wctx, &rs, x, w),
                            KLPoly::one()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn c2_flag_kl_identity() {
        // KL_{121} - c_Ma(X_{121}) = c_Ma(X_1) on the C2 flag manifold, and
        // CC(X_{121}) = T*_{121} + T*_{1}.
        let rs = alloc::rc::Rc::new(build_root_system(LieType::C, 2).unwrap());
        let sf = FlagSpace::complete(rs.clone());
        let lg = FlagSpace::maximal_parabolic(rs.clone(), 1);
        let mut wctx = WeylCtx::new();
        let mut kctx = KlCtx::new();
        let table = CsmTable::build(&mut wctx, &sf, false, CAP).unwrap();
        let w121 = WeylElt::from_word(&rs, &[0, 1, 0]);
        // P_{121,v} = 1 for all v <= 121
        let interval = wctx.lower_interval(&rs, &w121);
        assert_eq!(interval.len(), 6);
        for v in interval.iter() {
            assert_eq!(
                *kl_polynomial(&mut kctx, &mut wctx, &rs, v, &w121),
                KLPoly::one()
            );
        }
        let kl = kl_class(&mut kctx, &mut wctx, &sf, &w121, &table).unwrap();
        // c_Ma(X_{121}) = pullback Mather of the LG(2,4) divisor
        let quot = ParabolicQuotient::new(&rs, &lg.omitted, CAP).unwrap();
        let wdiv = quot
            .element_of_label(&rs, &CominLabel::Parts(alloc::vec![2]))
            .unwrap();
        let ma121 = pullback_mather(&mut wctx, &lg, &wdiv, &sf, false).unwrap();
        let ma1 = pullback_mather(&mut wctx, &lg, &WeylElt::identity(2), &sf, false).unwrap();
        assert!(kl.sub(&ma121) == ma1);

        // the CC decomposition sees exactly these two conormal spaces
        let cc = cc_multiplicities_pullback(&mut kctx, &mut wctx, &lg, &wdiv, &table).unwrap();
        assert_eq!(cc.multiplicity(&wdiv), 1);
        assert_eq!(cc.multiplicity(&WeylElt::identity(2)), 1);
        assert_eq!(cc.multiplicities.len(), 2);
    }

    #[test]
    fn smooth_classes_have_simple_cc() {
        // in Gr(2,4) every Schubert variety except the divisor is smooth;
        // cc is irreducible for all of them (type A)
        let rs = alloc::rc::Rc::new(build_root_system(LieType::A, 3).unwrap());
        let gp = FlagSpace::maximal_parabolic(rs.clone(), 1);
        let mut wctx = WeylCtx::new();
        let mut kctx = KlCtx::new();
        let table = CsmTable::build(&mut wctx, &gp, false, CAP).unwrap();
        let quot = ParabolicQuotient::new(&rs, &gp.omitted, CAP).unwrap();
        for w in &quot.min_reps {
            let cc = cc_multiplicities(&mut kctx, &mut wctx, &gp, w, &table).unwrap();
            assert!(cc.is_irreducible(), "{:?}", w.canonical_word(&rs));
            let e = euler_obstructions(&mut wctx, &gp, w, &table).unwrap();
            assert!(cc_irreducible_via_euler(
                &mut kctx,
                &mut wctx,
                &gp,
                w,
                &e,
                &quot.min_reps
            ));
        }
    }

    #[test]
    fn lg_reducible_cases() {
        // LG(2,4), w = (2): reducible (m at the point class is 1)
        let rs = alloc::rc::Rc::new(build_root_system(LieType::C, 2).unwrap());
        let lg = FlagSpace::maximal_parabolic(rs.clone(), 1);
        let mut wctx = WeylCtx::new();
        let mut kctx = KlCtx::new();
        let table = CsmTable::build(&mut wctx, &lg, false, CAP).unwrap();
        let quot = ParabolicQuotient::new(&rs, &lg.omitted, CAP).unwrap();
        let w = quot
            .element_of_label(&rs, &CominLabel::Parts(alloc::vec![2]))
            .unwrap();
        let cc = cc_multiplicities(&mut kctx, &mut wctx, &lg, &w, &table).unwrap();
        assert!(!cc.is_irreducible());
        assert_eq!(cc.multiplicity(&w), 1);
        assert_eq!(cc.multiplicity(&WeylElt::identity(2)), 1);
        let e = euler_obstructions(&mut wctx, &lg, &w, &table).unwrap();
        assert!(!cc_irreducible_via_euler(
            &mut kctx,
            &mut wctx,
            &lg,
            &w,
            &e,
            &quot.min_reps
        ));
        // the disagreement is exactly at the point stratum
        let diff = compare_ordinary_vs_euler(&mut kctx, &mut wctx, &lg, &w, &e, &quot.min_reps);
        assert_eq!(diff.len(), 1);
        assert!(diff[0].0.is_identity());

        // LG(3,6), w = (3,2): reducible
        let c3 = alloc::rc::Rc::new(build_root_system(LieType::C, 3).unwrap());
        let lg = FlagSpace::maximal_parabolic(c3.clone(), 2);
        let table = CsmTable::build(&mut wctx, &lg, false, CAP).unwrap();
        let quot = ParabolicQuotient::new(&c3, &lg.omitted, CAP).unwrap();
        let w = quot
            .element_of_label(&c3, &CominLabel::Parts(alloc::vec![3, 2]))
            .unwrap();
        let e = euler_obstructions(&mut wctx, &lg, &w, &table).unwrap();
        assert!(!cc_irreducible_via_euler(
            &mut kctx,
            &mut wctx,
            &lg,
            &w,
            &e,
            &quot.min_reps
        ));
        let cc = cc_multiplicities(&mut kctx, &mut wctx, &lg, &w, &table).unwrap();
        assert!(!cc.is_irreducible());
        // both routes agree: m is supported on the diagonal iff e = P(1)
        for v in &quot.min_reps {
            assert!(cc.multiplicity(v) >= 0);
        }
    }

    #[test]
    fn kl_constant_term_and_zero_convention() {
        let rs = build_root_system(LieType::A, 3).unwrap();
        let mut wctx = WeylCtx::new();
        let mut kctx = KlCtx::new();
        let w = WeylElt::from_word(&rs, &[0, 1, 2]);
        let x = WeylElt::from_word(&rs, &[1, 0]);
        // x not below w here? s2 s1 vs s1 s2 s3: check the convention path
        if !wctx.bruhat_leq(&rs, &x, &w) {
            assert!(kl_polynomial(&mut kctx, &mut wctx, &rs, &x, &w).is_zero());
        }
        // P_{w,w} = 1
        assert_eq!(
            *kl_polynomial(&mut kctx, &mut wctx, &rs, &w, &w),
            KLPoly::one()
        );
    }
}
