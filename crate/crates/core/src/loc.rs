//! Fixed-point localization: the subword (Billey) formula for restrictions
//! of Schubert classes, point Euler classes, parabolic push-forward of
//! localizations, the closed form for `c(T_w) cap [X_w^B]` at a fixed point,
//! and the localization of conormal spaces.
//!
//! The homology-indexed restriction is realized as
//! `[X_w^B]|_v = w0 . (xi^{w0 w}|_{w0 v})`, with `w0` acting on the root
//! variables; the convention is pinned by the Chevalley-compatibility and
//! point-Euler invariants, not assumed.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec::Vec;

use crate::chow::{FlagSpace, SchubertClass};
use crate::poly::{EquivPoly, RatFun};
use crate::roots::RootSystem;
use crate::weyl::{longest_element, WeylCtx, WeylElt};
use crate::Result;

/// Caches: full Billey restriction vectors per fixed point, and `w0` data.
#[derive(Default)]
pub struct LocCtx {
    billey: BTreeMap<WeylElt, Rc<BTreeMap<WeylElt, EquivPoly>>>,
}

impl LocCtx {
    pub fn new() -> Self {
        Self::default()
    }

    /// All opposite-class restrictions `xi^u|_v` at once, by the subword sum
    /// along the canonical reduced word of `v`: for each reduced subword with
    /// product `u`, the product of the roots
    /// `beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})`.
    pub fn billey_vector(
        &mut self,
        rs: &RootSystem,
        v: &WeylElt,
    ) -> Rc<BTreeMap<WeylElt, EquivPoly>> {
        if let Some(x) = self.billey.get(v) {
            return Rc::clone(x);
        }
        let word = v.canonical_word(rs);
        let out = billey_vector_along_word(rs, &word);
        let rc = Rc::new(out);
        self.billey.insert(v.clone(), Rc::clone(&rc));
        rc
    }
}

/// The subword dynamic program along an explicit reduced word.
pub fn billey_vector_along_word(rs: &RootSystem, word: &[usize]) -> BTreeMap<WeylElt, EquivPoly> {
    let nvars = rs.rank + 1;
    let mut states: BTreeMap<WeylElt, EquivPoly> = BTreeMap::new();
    states.insert(WeylElt::identity(rs.rank), EquivPoly::one(nvars));
    let mut prefix = WeylElt::identity(rs.rank);
    for &i in word {
        let beta = prefix.apply(&rs.simple_root(i));
        let beta_poly = EquivPoly::linear(nvars, &beta.coords);
        let snapshot: Vec<(WeylElt, EquivPoly)> =
            states.iter().map(|(z, p)| (z.clone(), p.clone())).collect();
        for (z, p) in snapshot {
            let t = z.mul_simple(rs, i);
            if t.length() == z.length() + 1 {
                let add = p.mul(&beta_poly);
                use alloc::collections::btree_map::Entry;
                match states.entry(t) {
                    Entry::Vacant(e) => {
                        e.insert(add);
                    }
                    Entry::Occupied(mut e) => {
                        let s = e.get().add(&add);
                        *e.get_mut() = s;
                    }
                }
            }
        }
        prefix = prefix.mul_simple(rs, i);
    }
    states
}

/// Substitutes `alpha_i -> w0(alpha_i)` in a polynomial.
fn twist_by(rs: &RootSystem, w: &WeylElt, p: &EquivPoly) -> EquivPoly {
    let images: Vec<Vec<i64>> = (0..rs.rank)
        .map(|i| w.apply(&rs.simple_root(i)).coords.clone())
        .collect();
    p.substitute_alphas_linear(&images)
}

/// `[X_w^B]|_v`, the restriction of the (homology-indexed) equivariant
/// Schubert class to the fixed point `e_v`. Zero unless `v <= w`.
pub fn billey_localize(lctx: &mut LocCtx, rs: &RootSystem, w: &WeylElt, v: &WeylElt) -> EquivPoly {
    let w0 = longest_element(rs, &(0..rs.rank).collect());
    let ov = w0.mul(rs, v);
    let ow = w0.mul(rs, w);
    let vec = lctx.billey_vector(rs, &ov);
    match vec.get(&ow) {
        None => EquivPoly::zero(rs.rank + 1),
        Some(p) => twist_by(rs, &w0, p),
    }
}

/// Restriction of a `G/B` class: `kappa|_v = sum_x coeff_x . [X_x]|_v`.
/// Coefficients may involve `hbar`.
pub fn localize_class(lctx: &mut LocCtx, class: &SchubertClass, v: &WeylElt) -> EquivPoly {
    assert!(class.space.is_complete());
    let rs = class.space.rs.clone();
    let mut acc = EquivPoly::zero(class.space.nvars());
    for (x, c) in class.terms() {
        let r = billey_localize(lctx, &rs, x, v);
        if !r.is_zero() {
            acc = acc.add(&c.mul(&r));
        }
    }
    acc
}

/// `[e_v]|_v = prod_{alpha in R^+} v(-alpha)` on `G/B`.
pub fn point_euler(rs: &RootSystem, v: &WeylElt) -> EquivPoly {
    let nvars = rs.rank + 1;
    let mut acc = EquivPoly::one(nvars);
    for alpha in rs.positive_roots() {
        let img = v.apply(&alpha.neg());
        acc = acc.mul(&EquivPoly::linear(nvars, &img.coords));
    }
    acc
}

/// `[e_{uW_P}]|_{uW_P} = prod_{alpha in R^+ \ R_P^+} u(-alpha)` on `G/P`.
pub fn point_euler_parabolic(space: &FlagSpace, u: &WeylElt) -> EquivPoly {
    let rs = &space.rs;
    let nvars = space.nvars();
    let mut acc = EquivPoly::one(nvars);
    for idx in space.complement_roots() {
        let img = u.apply(&rs.root(idx).neg());
        acc = acc.mul(&EquivPoly::linear(nvars, &img.coords));
    }
    acc
}

/// Elements of the coset `u W_P` for `u` a minimal representative.
fn coset_elements(space: &FlagSpace, u: &WeylElt) -> Vec<WeylElt> {
    let rs = &space.rs;
    let p_nodes = space.p_nodes();
    let mut all = alloc::vec![WeylElt::identity(rs.rank)];
    let mut seen: alloc::collections::BTreeSet<WeylElt> = all.iter().cloned().collect();
    let mut head = 0;
    while head < all.len() {
        let x = all[head].clone();
        head += 1;
        for &j in &p_nodes {
            let t = x.mul_simple(rs, j);
            if t.length() == x.length() + 1 && seen.insert(t.clone()) {
                all.push(t);
            }
        }
    }
    all.into_iter().map(|x| u.mul(rs, &x)).collect()
}

/// The ratio `[e_{uW_P}]|_{uW_P} / [e_v]|_v` for `v` in the coset `u W_P`
/// reduces exactly: `W_P` permutes `R^+ \ R_P^+`, so those factors of
/// `[e_v]|_v` reproduce `[e_{uW_P}]|_{uW_P}` and the ratio is
/// `1 / prod_{alpha in R_P^+} v(-alpha)`.
fn fiber_euler(space: &FlagSpace, v: &WeylElt) -> EquivPoly {
    let rs = &space.rs;
    let nvars = space.nvars();
    let mut acc = EquivPoly::one(nvars);
    for idx in space.rp_plus() {
        let img = v.apply(&rs.root(idx).neg());
        acc = acc.mul(&EquivPoly::linear(nvars, &img.coords));
    }
    acc
}

/// Localization of a push-forward: for `kappa` on `G/B` and `u` minimal,
/// `pi_*(kappa)|_{uW_P} = sum_{v W_P = u W_P} ([e_u]|_u / [e_v]|_v) kappa|_v`,
/// assembled over a single common denominator per coset.
pub fn parabolic_localize(
    lctx: &mut LocCtx,
    class: &SchubertClass,
    space: &FlagSpace,
    u: &WeylElt,
) -> RatFun {
    let coset = coset_elements(space, u);
    let eulers: Vec<EquivPoly> = coset.iter().map(|v| fiber_euler(space, v)).collect();
    let mut den = EquivPoly::one(space.nvars());
    for e in &eulers {
        den = den.mul(e);
    }
    let mut num = EquivPoly::zero(space.nvars());
    for (k, v) in coset.iter().enumerate() {
        let restriction = localize_class(lctx, class, v);
        if restriction.is_zero() {
            continue;
        }
        let mut cofactor = restriction;
        for (j, e) in eulers.iter().enumerate() {
            if j != k {
                cofactor = cofactor.mul(e);
            }
        }
        num = num.add(&cofactor);
    }
    RatFun::new(num, den)
}

/// The closed form `(-1)^{l(w)} ((c(T_w) cap [X_w^B])^hbar)|_v =
/// prod_{alpha in I(w)} (-hbar + v(alpha)) . [X_w^B]|_v`.
pub fn ctwloc(lctx: &mut LocCtx, rs: &RootSystem, w: &WeylElt, v: &WeylElt) -> EquivPoly {
    let nvars = rs.rank + 1;
    let mut acc = billey_localize(lctx, rs, w, v);
    if acc.is_zero() {
        return acc;
    }
    for idx in w.inversion_set(rs) {
        let img = v.apply(rs.root(idx));
        let factor = EquivPoly::hbar(nvars)
            .neg()
            .add(&EquivPoly::linear(nvars, &img.coords));
        acc = acc.mul(&factor);
    }
    acc
}

/// The localization of the conormal space `T*_{X_w^P}(G/P)` at the fixed
/// point `e_{uW_P}`: the coset sum of Lemma-pf ratios against the closed
/// form, certified polynomial by exact division.
pub fn conormal_localize(
    lctx: &mut LocCtx,
    wctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    u: &WeylElt,
) -> Result<EquivPoly> {
    let rs = space.rs.clone();
    let nvars = space.nvars();
    if !wctx.bruhat_leq(&rs, u, w) {
        return Ok(EquivPoly::zero(nvars));
    }
    let coset = coset_elements(space, u);
    let contributing: Vec<(WeylElt, EquivPoly)> = coset
        .iter()
        .filter(|v| wctx.bruhat_leq(&rs, v, w))
        .map(|v| (v.clone(), fiber_euler(space, v)))
        .collect();
    let mut den = EquivPoly::one(nvars);
    for (_, e) in &contributing {
        den = den.mul(e);
    }
    let mut num = EquivPoly::zero(nvars);
    for (k, (v, _)) in contributing.iter().enumerate() {
        let base = billey_localize(lctx, &rs, w, v);
        if base.is_zero() {
            continue;
        }
        let mut t = base;
        for idx in w.inversion_set(&rs) {
            let img = v.apply(rs.root(idx));
            t = t.mul(
                &EquivPoly::hbar(nvars)
                    .neg()
                    .add(&EquivPoly::linear(nvars, &img.coords)),
            );
        }
        for (j, (_, e)) in contributing.iter().enumerate() {
            if j != k {
                t = t.mul(e);
            }
        }
        num = num.add(&t);
    }
    RatFun::new(num, den).certify_polynomial()
}
