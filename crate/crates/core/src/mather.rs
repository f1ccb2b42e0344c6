//! Chern-Mather classes of cominuscule Schubert varieties, dual and
//! pull-back Mather classes, Segre classes of conormal spaces, Segre-Mather
//! classes, Mather polynomials, and the positivity / unimodality checkers.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_rational::BigRational;
use num_traits::Signed;

use crate::chow::{
    inversion_weights, pullback, pushforward, total_chern_inverse_mul, total_chern_mul, FlagSpace,
    SchubertClass,
};
use crate::roots::Weight;
use crate::weyl::{WeylCtx, WeylElt};
use crate::{Error, Result};

/// A Mather-class computation: the class `c(T_w) cap [X_w^B]` upstairs and
/// its push-forward, the Mather class of `X_w^P`.
pub struct MatherResult {
    pub w: WeylElt,
    pub upstairs: SchubertClass,
    pub downstairs: SchubertClass,
    pub equivariant: bool,
}

fn require_cominuscule(space: &FlagSpace) -> Result<usize> {
    if space.omitted.len() != 1 {
        return Err(Error::NotCominuscule);
    }
    let node = *space.omitted.iter().next().unwrap();
    if !space.rs.cominuscule_nodes().contains(&node) {
        return Err(Error::NotCominuscule);
    }
    Ok(node)
}

/// The Mather class of `X_w^P` for a cominuscule `G/P`, as the push-forward
/// of the product of line-bundle Chern classes over the inversion set.
pub fn mather_class(
    ctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    equivariant: bool,
) -> Result<MatherResult> {
    require_cominuscule(space)?;
    if !space.is_min_rep(w) {
        return Err(Error::NotMinimalRep);
    }
    let rs = space.rs.clone();
    let gb = FlagSpace::complete(rs.clone());
    let weights = inversion_weights(&rs, w);
    let start = SchubertClass::schubert(gb, w, equivariant)?;
    let upstairs = total_chern_mul(ctx, &start, &weights);
    let downstairs = pushforward(&upstairs, space);
    Ok(MatherResult {
        w: w.clone(),
        upstairs,
        downstairs,
        equivariant,
    })
}

/// The dual Mather class: the homological-degree-`i` component is scaled by
/// `(-1)^{l(w) - i}`.
pub fn dual_mather(m: &MatherResult) -> SchubertClass {
    dual_of_class(&m.downstairs, m.w.length())
}

/// Sign-flip of each homogeneous component relative to `dim_w`.
pub fn dual_of_class(class: &SchubertClass, dim_w: u32) -> SchubertClass {
    let mut out = SchubertClass::zero(class.space.clone(), class.equivariant);
    for (v, c) in class.terms() {
        let mut acc = crate::poly::EquivPoly::zero(c.nvars());
        for d in 0..=v.length() {
            let part = c.homogeneous_part(d);
            if part.is_zero() {
                continue;
            }
            let hom_deg = v.length() - d;
            let sign = if (dim_w - hom_deg).is_multiple_of(2) {
                1
            } else {
                -1
            };
            acc = acc.add(&part.scalar_mul(&BigRational::from_integer(sign.into())));
        }
        out.add_term(v.clone(), acc);
    }
    out
}

/// Mather class of the pull-back `pi_Q^{-1}(X_w^P)` along `G/Q -> G/P`.
/// For `Q = B` this is `c(T_pi) cap pi^*(c_Ma)` computed upstairs; for
/// intermediate `Q` the upstairs class is pushed down and divided by `|W_Q|`
/// (the fiber Euler characteristic picked up by the constructible
/// push-forward).
pub fn pullback_mather(
    ctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    target: &FlagSpace,
    equivariant: bool,
) -> Result<SchubertClass> {
    let m = mather_class(ctx, space, w, equivariant)?;
    let rs = space.rs.clone();
    let gb = FlagSpace::complete(rs.clone());
    let up = pullback(&m.downstairs, &gb);
    // relative tangent weights of G/B -> G/P: {-alpha : alpha in R_P^+}
    let mut rp = space.rp_plus();
    rp.sort_by_key(|&i| (rs.root(i).height(), rs.root(i).coords.clone()));
    let weights: Vec<Weight> = rp.iter().map(|&i| rs.root(i).neg()).collect();
    let full = total_chern_mul(ctx, &up, &weights);
    if target.is_complete() {
        return Ok(full);
    }
    // Push to G/Q and divide by chi(Q/B) = |W_Q|.
    let pushed = pushforward(&full, target);
    let mut order: u64 = 1;
    let mut frontier = vec![WeylElt::identity(rs.rank)];
    let mut seen: BTreeSet<WeylElt> = frontier.iter().cloned().collect();
    while let Some(u) = frontier.pop() {
        for &j in &target.p_nodes() {
            let t = u.mul_simple(&rs, j);
            if t.length() == u.length() + 1 && seen.insert(t.clone()) {
                frontier.push(t);
                order += 1;
            }
        }
    }
    let _ = order; // |W_Q| counted below via seen
    let inv = BigRational::new(1.into(), (seen.len() as i64).into());
    Ok(pushed.scale(&inv))
}

/// Chern weights of the bundle `U_w` (positive sign): the roots
/// `alpha >= alpha_P` with `w(alpha) > 0`, sorted by height.
fn uw_weights(space: &FlagSpace, w: &WeylElt, sign: i64) -> Vec<Weight> {
    let rs = &space.rs;
    let mut idx: Vec<usize> = space
        .complement_roots()
        .into_iter()
        .filter(|&i| !w.sends_negative(rs.root(i)))
        .collect();
    idx.sort_by_key(|&i| (rs.root(i).height(), rs.root(i).coords.clone()));
    idx.into_iter().map(|i| rs.root(i).scale(sign)).collect()
}

/// Equivariant Segre class of the conormal space `T*_{X_w^P}(G/P)`:
/// `pi_*(c(U_w)^{-1} cap [X_w^B])`, truncated at homological degree zero.
pub fn segre_conormal(
    ctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    equivariant: bool,
) -> Result<SchubertClass> {
    require_cominuscule(space)?;
    if !space.is_min_rep(w) {
        return Err(Error::NotMinimalRep);
    }
    let gb = FlagSpace::complete(space.rs.clone());
    let start = SchubertClass::schubert(gb, w, equivariant)?;
    let weights = uw_weights(space, w, 1);
    let inv = total_chern_inverse_mul(ctx, &start, &weights);
    Ok(pushforward(&inv, space))
}

/// Segre-Mather class `s_Ma(X_w^P) = pi_*(c(U_w^*)^{-1} cap [X_w^B])`.
pub fn segre_mather(
    ctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    equivariant: bool,
) -> Result<SchubertClass> {
    require_cominuscule(space)?;
    if !space.is_min_rep(w) {
        return Err(Error::NotMinimalRep);
    }
    let gb = FlagSpace::complete(space.rs.clone());
    let start = SchubertClass::schubert(gb, w, equivariant)?;
    let weights = uw_weights(space, w, -1);
    let inv = total_chern_inverse_mul(ctx, &start, &weights);
    Ok(pushforward(&inv, space))
}

/// The Mather polynomial `M_w(x) = sum a_{w,v} x^{l(v)}`, by aggregating the
/// non-equivariant Schubert expansion by dimension. Index `i` holds the
/// coefficient of `x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatherPolynomial {
    pub coeffs: Vec<i64>,
}

impl MatherPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Single ascent then descent.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut k = 0;
        while k + 1 < c.len() && c[k] <= c[k + 1] {
            k += 1;
        }
        while k + 1 < c.len() && c[k] >= c[k + 1] {
            k += 1;
        }
        k + 1 == c.len()
    }

    /// `a_i^2 >= a_{i-1} a_{i+1}` with zero boundary.
    pub fn is_log_concave(&self) -> bool {
        let c = &self.coeffs;
        for i in 0..c.len() {
            let prev = if i == 0 { 0 } else { c[i - 1] };
            let next = if i + 1 == c.len() { 0 } else { c[i + 1] };
            if (c[i] as i128) * (c[i] as i128) < (prev as i128) * (next as i128) {
                return false;
            }
        }
        true
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, &a) in self.coeffs.iter().enumerate().rev() {
            if a == 0 {
                continue;
            }
            let coeff = if a == 1 && i > 0 {
                String::new()
            } else {
                format!("{a}")
            };
            let tail = match i {
                0 => String::new(),
                1 => String::from(var),
                _ => format!("{var}^{i}"),
            };
            let sep = if coeff.is_empty() || tail.is_empty() {
                ""
            } else {
                "*"
            };
            parts.push(format!("{coeff}{sep}{tail}"));
        }
        if parts.is_empty() {
            String::from("0")
        } else {
            parts.join("+")
        }
    }
}

pub fn mather_polynomial(
    ctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
) -> Result<MatherPolynomial> {
    let m = mather_class(ctx, space, w, false)?;
    let mut coeffs = vec![0i64; w.length() as usize + 1];
    for (v, c) in m.downstairs.terms() {
        let r = c.constant_term();
        assert!(c.is_constant() && r.is_integer());
        coeffs[v.length() as usize] += i64::try_from(r.to_integer()).unwrap();
    }
    Ok(MatherPolynomial { coeffs })
}

/// A positivity report: the offending terms, if any.
#[derive(Debug, Clone, Default)]
pub struct PositivityReport {
    /// `(violating index word, offending coefficient as text)`
    pub violations: Vec<(Vec<usize>, String)>,
}

impl PositivityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the strong positivity conjecture for one Mather class: every
/// Schubert coefficient (a polynomial in the simple roots when equivariant)
/// must have nonnegative coefficients, strictly positive constant term on
/// the support.
pub fn check_positivity(
    ctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    equivariant: bool,
) -> Result<PositivityReport> {
    let m = mather_class(ctx, space, w, equivariant)?;
    let rs = space.rs.clone();
    let mut report = PositivityReport::default();
    for (v, c) in m.downstairs.terms() {
        let bad = c.terms().any(|(_, coeff)| coeff.is_negative());
        if bad {
            report
                .violations
                .push((v.canonical_word(&rs), format!("{c}")));
        }
    }
    Ok(report)
}

/// Verifies `c^T(T^*(G/P)) cap s^T(T^*_{X_w}(G/P))` equals the dual Mather
/// class, with the cotangent factor applied upstairs before push-forward.
pub fn dual_mather_vs_segre(
    ctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    equivariant: bool,
) -> Result<bool> {
    require_cominuscule(space)?;
    let rs = space.rs.clone();
    let gb = FlagSpace::complete(rs.clone());
    let start = SchubertClass::schubert(gb, w, equivariant)?;
    let inv = total_chern_inverse_mul(ctx, &start, &uw_weights(space, w, 1));
    // cotangent weights: +alpha over R^+ \ R_P^+
    let mut comp = space.complement_roots();
    comp.sort_by_key(|&i| (rs.root(i).height(), rs.root(i).coords.clone()));
    let cot: Vec<Weight> = comp.iter().map(|&i| rs.root(i).clone()).collect();
    let lhs = pushforward(&total_chern_mul(ctx, &inv, &cot), space).truncate_nonnegative();
    let m = mather_class(ctx, space, w, equivariant)?;
    Ok(lhs == dual_mather(&m))
}

/// Non-equivariant alternation of the Segre-Mather class: the component in
/// `A_i` is effective up to the sign `(-1)^{l(w)-i}`.
pub fn segre_mather_alternates(ctx: &mut WeylCtx, space: &FlagSpace, w: &WeylElt) -> Result<bool> {
    let s = segre_mather(ctx, space, w, false)?;
    for (v, c) in s.terms() {
        let r = c.constant_term();
        let sign_ok = if (w.length() - v.length()).is_multiple_of(2) {
            !r.is_negative()
        } else {
            !r.is_positive()
        };
        if !sign_ok {
            return Ok(false);
        }
    }
    Ok(true)
}
