//! CSM classes of Schubert cells in `G/B` and `G/P`, local Euler
//! obstructions via a unitriangular solve, invariance of Euler obstructions
//! under smooth pull-back, and the nonnegativity scanner.
//!
//! The cell recursion: for a right ascent `i` of `w`,
//! `csm(w s_i) = (1 + c_1(L_{-alpha_i})) cap D_i(csm(w)) - csm(w)`,
//! where `D_i` pushes to `G/P_i` and pulls back; on basis classes
//! `D_i [X_v] = [X_{v s_i}]` if `v s_i > v`, else `0`. Base case
//! `csm(id) = [X_id]`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::chow::{chevalley_mul, pushforward, total_chern_mul, FlagSpace, SchubertClass};
use crate::mather::{mather_class, pullback_mather};
use crate::roots::Weight;
use crate::weyl::{coset_decompose, enumerate_full, WeylCtx, WeylElt};
use crate::{Error, Result};

/// `D_i = p_i^* p_{i*}` for the minimal parabolic `P_i`.
fn averaging_op(class: &SchubertClass, rs_simple: usize) -> SchubertClass {
    let rs = class.space.rs.clone();
    let mut out = SchubertClass::zero(class.space.clone(), class.equivariant);
    for (v, c) in class.terms() {
        let t = v.mul_simple(&rs, rs_simple);
        if t.length() > v.length() {
            out.add_term(t, c.clone());
        }
    }
    out
}

/// One recursion step: from `csm(w)` to `csm(w s_i)`, for `i` a right ascent.
fn csm_step(ctx: &mut WeylCtx, csm_w: &SchubertClass, i: usize) -> SchubertClass {
    let rs = csm_w.space.rs.clone();
    let avg = averaging_op(csm_w, i);
    let lambda = rs.simple_root(i).neg();
    let total = avg.add(&chevalley_mul(ctx, &avg, &lambda));
    total.sub(csm_w)
}

/// CSM class of the Schubert cell `X_w^o` in `G/B`, along the canonical
/// reduced word (the result is word-independent).
pub fn csm_cell_gb(
    ctx: &mut WeylCtx,
    gb: &FlagSpace,
    w: &WeylElt,
    equivariant: bool,
) -> SchubertClass {
    assert!(gb.is_complete());
    let word = w.canonical_word(&gb.rs);
    csm_cell_along_word(ctx, gb, &word, equivariant)
}

/// Same recursion along an explicit reduced word (used by the
/// word-independence tests).
pub fn csm_cell_along_word(
    ctx: &mut WeylCtx,
    gb: &FlagSpace,
    word: &[usize],
    equivariant: bool,
) -> SchubertClass {
    let id = WeylElt::identity(gb.rs.rank);
    let mut acc = SchubertClass::schubert(gb.clone(), &id, equivariant).unwrap();
    for &i in word {
        acc = csm_step(ctx, &acc, i);
    }
    acc
}

/// CSM class of the cell `X_v^{P,o}` in `G/P`, for `v` a minimal
/// representative: the push-forward of the `G/B` cell class.
pub fn csm_cell_gp(
    ctx: &mut WeylCtx,
    space: &FlagSpace,
    v: &WeylElt,
    equivariant: bool,
) -> Result<SchubertClass> {
    if !space.is_min_rep(v) {
        return Err(Error::NotMinimalRep);
    }
    let gb = FlagSpace::complete(space.rs.clone());
    Ok(pushforward(&csm_cell_gb(ctx, &gb, v, equivariant), space))
}

/// The table of CSM classes of all Schubert cells of a space.
pub struct CsmTable {
    pub space: FlagSpace,
    pub equivariant: bool,
    pub classes: BTreeMap<WeylElt, SchubertClass>,
}

impl CsmTable {
    /// Builds the whole table by increasing length, reusing previously built
    /// cells. `cap` guards the full Weyl group enumeration.
    pub fn build(
        ctx: &mut WeylCtx,
        space: &FlagSpace,
        equivariant: bool,
        cap: usize,
    ) -> Result<CsmTable> {
        let rs = space.rs.clone();
        let gb = FlagSpace::complete(rs.clone());
        let all = enumerate_full(&rs, cap)?;
        // G/B cells by increasing length, each from a one-step-shorter cell.
        let mut gb_cells: BTreeMap<WeylElt, SchubertClass> = BTreeMap::new();
        let id = WeylElt::identity(rs.rank);
        gb_cells.insert(
            id.clone(),
            SchubertClass::schubert(gb.clone(), &id, equivariant).unwrap(),
        );
        for w in &all {
            if w.is_identity() {
                continue;
            }
            let i = w.right_descents(&rs)[0];
            let shorter = w.mul_simple(&rs, i);
            let prev = gb_cells.get(&shorter).expect("built by length").clone();
            gb_cells.insert(w.clone(), csm_step(ctx, &prev, i));
        }
        let classes = if space.is_complete() {
            gb_cells
        } else {
            gb_cells
                .into_iter()
                .filter(|(w, _)| space.is_min_rep(w))
                .map(|(w, c)| (w, pushforward(&c, space)))
                .collect()
        };
        Ok(CsmTable {
            space: space.clone(),
            equivariant,
            classes,
        })
    }

    /// Unitriangularity: `csm(X_w^o) = [X_w] + lower terms`. Equivariantly
    /// the leading coefficient is `prod (1 + w(alpha))` over the inversions,
    /// so only its constant term is pinned to 1.
    pub fn is_unitriangular(&self) -> bool {
        self.classes.iter().all(|(w, c)| {
            let lead = c.coefficient(w);
            let lead_ok = if self.equivariant {
                lead.constant_term() == BigRational::from_integer(1.into())
            } else {
                lead.is_constant() && lead.constant_term() == BigRational::from_integer(1.into())
            };
            lead_ok && c.terms().all(|(v, _)| v.length() <= w.length())
        })
    }

    /// `sum_w csm(X_w^o) = c(T) cap [X]`, the right side computed
    /// independently from the tangent weights.
    pub fn total_sum_identity(&self, ctx: &mut WeylCtx) -> bool {
        let space = &self.space;
        let rs = space.rs.clone();
        let mut sum = SchubertClass::zero(space.clone(), self.equivariant);
        for c in self.classes.values() {
            sum = sum.add(c);
        }
        let gb = FlagSpace::complete(rs.clone());
        let mut comp = space.complement_roots();
        comp.sort_by_key(|&i| (rs.root(i).height(), rs.root(i).coords.clone()));
        let weights: Vec<Weight> = comp.iter().map(|&i| rs.root(i).neg()).collect();
        let top = crate::weyl::longest_element(&rs, &(0..rs.rank).collect());
        let (top_p, _) = coset_decompose(&rs, &space.p_nodes(), &top);
        let fundamental = SchubertClass::schubert(gb, &top_p, self.equivariant).unwrap();
        let tangent = pushforward(&total_chern_mul(ctx, &fundamental, &weights), space);
        sum == tangent
    }
}

/// Local Euler obstructions `e_{w,v}` of one Schubert variety, from the
/// unitriangular expansion of its Mather class in the CSM basis.
pub struct EulerTable {
    pub w: WeylElt,
    pub values: BTreeMap<WeylElt, i64>,
}

impl EulerTable {
    pub fn value(&self, v: &WeylElt) -> i64 {
        self.values.get(v).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> i64 {
        self.values.values().sum()
    }
}

/// Solves `c_Ma(X_w^P) = sum_v e_{w,v} csm(X_v^{P,o})` by back-substitution
/// against a non-equivariant CSM table, processing `v` by decreasing length.
pub fn euler_obstructions(
    ctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    table: &CsmTable,
) -> Result<EulerTable> {
    assert!(!table.equivariant && table.space == *space);
    let m = mather_class(ctx, space, w, false)?;
    let mut residual = m.downstairs;
    let mut values = BTreeMap::new();
    let mut order: Vec<&WeylElt> = table.classes.keys().collect();
    order.sort_by_key(|v| core::cmp::Reverse(v.length()));
    for v in order {
        let c = residual.coefficient(v);
        if c.is_zero() {
            continue;
        }
        if !c.is_constant() || !c.constant_term().is_integer() {
            return Err(Error::NonIntegralSolve(format!(
                "e at a stratum came out {c}"
            )));
        }
        let e = i64::try_from(c.constant_term().to_integer())
            .map_err(|_| Error::NonIntegralSolve(format!("overflow: {c}")))?;
        values.insert(v.clone(), e);
        residual = residual.sub(&table.classes[v].scale(&BigRational::from_integer(e.into())));
    }
    if !residual.is_zero() {
        return Err(Error::NonIntegralSolve(format!(
            "nonzero residual {residual:?}"
        )));
    }
    Ok(EulerTable {
        w: w.clone(),
        values,
    })
}

/// Re-solves with the equivariant Mather class against the equivariant CSM
/// table and checks the same integers come out with zero residual.
pub fn equivariant_residual_check(
    ctx: &mut WeylCtx,
    space: &FlagSpace,
    euler: &EulerTable,
    table_eq: &CsmTable,
) -> Result<bool> {
    assert!(table_eq.equivariant);
    let m = mather_class(ctx, space, &euler.w, true)?;
    let mut residual = m.downstairs;
    for (v, &e) in &euler.values {
        residual = residual.sub(&table_eq.classes[v].scale(&BigRational::from_integer(e.into())));
    }
    Ok(residual.is_zero())
}

/// Checks that the pull-back Mather class of `X_w^P` along `G/Q -> G/P`
/// expands in the `G/Q` CSM cell basis with the coefficient on cell `u`
/// equal to `e_{w, u^P}` (invariance of Euler obstructions).
pub fn euler_pullback_check(
    ctx: &mut WeylCtx,
    space: &FlagSpace,
    w: &WeylElt,
    target: &FlagSpace,
    euler: &EulerTable,
    target_table: &CsmTable,
) -> Result<bool> {
    let pulled = pullback_mather(ctx, space, w, target, false)?;
    let mut residual = pulled;
    let mut order: Vec<&WeylElt> = target_table.classes.keys().collect();
    order.sort_by_key(|v| core::cmp::Reverse(v.length()));
    let p_nodes = space.p_nodes();
    for u in order {
        let c = residual.coefficient(u);
        if c.is_zero() {
            continue;
        }
        if !c.is_constant() || !c.constant_term().is_integer() {
            return Ok(false);
        }
        let got = i64::try_from(c.constant_term().to_integer()).unwrap();
        let (up, _) = coset_decompose(&space.rs, &p_nodes, u);
        if got != euler.value(&up) {
            return Ok(false);
        }
        residual =
            residual.sub(&target_table.classes[u].scale(&BigRational::from_integer(got.into())));
    }
    Ok(residual.is_zero())
}

/// Scans every `w` of a cominuscule space for negative local Euler
/// obstructions; returns the violations `(w, v, value)`.
pub fn check_euler_nonneg(
    ctx: &mut WeylCtx,
    space: &FlagSpace,
    reps: &[WeylElt],
    table: &CsmTable,
) -> Result<Vec<(WeylElt, WeylElt, i64)>> {
    let mut bad = Vec::new();
    for w in reps {
        let e = euler_obstructions(ctx, space, w, table)?;
        for (v, &val) in &e.values {
            if val < 0 {
                bad.push((w.clone(), v.clone(), val));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::EquivPoly;
    use crate::roots::{build_root_system, LieType};
    use crate::weyl::{CominLabel, ParabolicQuotient};
    use alloc::rc::Rc;
    use alloc::vec;
    use num_traits::Signed;

    const CAP: usize = 1 << 20;

    fn int_of(c: &SchubertClass, w: &WeylElt) -> i64 {
        let p = c.coefficient(w);
        assert!(p.is_constant());
        i64::try_from(p.constant_term().to_integer()).unwrap()
    }

    #[test]
    fn a1_cell() {
        let rs = Rc::new(build_root_system(LieType::A, 1).unwrap());
        let gb = FlagSpace::complete(rs.clone());
        let mut ctx = WeylCtx::new();
        let s = WeylElt::simple(&rs, 0);
        // non-equivariant: [X_s] + [X_id]
        let c = csm_cell_gb(&mut ctx, &gb, &s, false);
        assert_eq!(int_of(&c, &s), 1);
        assert_eq!(int_of(&c, &WeylElt::identity(1)), 1);
        // equivariant: (1+a)[X_s] + [X_id]
        let c = csm_cell_gb(&mut ctx, &gb, &s, true);
        let n = 2;
        assert_eq!(
            c.coefficient(&s),
            EquivPoly::one(n).add(&EquivPoly::alpha(n, 0))
        );
        assert_eq!(c.coefficient(&WeylElt::identity(1)), EquivPoly::one(n));
        // id cell is the point class
        let c = csm_cell_gb(&mut ctx, &gb, &WeylElt::identity(1), true);
        assert_eq!(c.support().len(), 1);
    }

    #[test]
    fn reduced_word_independence_rank3() {
        for (lt, rank) in [(LieType::A, 3), (LieType::B, 2), (LieType::C, 3)] {
            let rs = Rc::new(build_root_system(lt, rank).unwrap());
            let gb = FlagSpace::complete(rs.clone());
            let mut ctx = WeylCtx::new();
            let all = enumerate_full(&rs, CAP).unwrap();
            for w in &all {
                let reference = csm_cell_gb(&mut ctx, &gb, w, true);
                // all words obtained by choosing each right descent at the
                // top level, recursively one alternative path each
                for &i in &w.right_descents(&rs) {
                    let shorter = w.mul_simple(&rs, i);
                    let mut word = shorter.canonical_word(&rs);
                    word.push(i);
                    let alt = csm_cell_along_word(&mut ctx, &gb, &word, true);
                    assert!(alt == reference, "{lt}{rank} w={:?}", w.canonical_word(&rs));
                }
            }
        }
    }

    #[test]
    fn fl4_total_sum_is_24() {
        let rs = Rc::new(build_root_system(LieType::A, 3).unwrap());
        let gb = FlagSpace::complete(rs.clone());
        let mut ctx = WeylCtx::new();
        let table = CsmTable::build(&mut ctx, &gb, false, CAP).unwrap();
        assert!(table.is_unitriangular());
        assert!(table.total_sum_identity(&mut ctx));
        let mut pt = 0;
        for c in table.classes.values() {
            pt += int_of(c, &WeylElt::identity(3));
        }
        assert_eq!(pt, 24);
    }

    #[test]
    fn gr24_cells_sum_and_positivity() {
        let rs = Rc::new(build_root_system(LieType::A, 3).unwrap());
        let gp = FlagSpace::maximal_parabolic(rs.clone(), 1);
        let mut ctx = WeylCtx::new();
        let table = CsmTable::build(&mut ctx, &gp, false, CAP).unwrap();
        assert_eq!(table.classes.len(), 6);
        assert!(table.is_unitriangular());
        assert!(table.total_sum_identity(&mut ctx));
        let mut pt = 0;
        for c in table.classes.values() {
            pt += int_of(c, &WeylElt::identity(3));
            for (_, coeff) in c.terms() {
                assert!(!coeff.constant_term().is_negative());
            }
        }
        assert_eq!(pt, 6);
    }

    #[test]
    fn csm_positive_on_gr36() {
        use num_traits::Signed;
        let rs = Rc::new(build_root_system(LieType::A, 5).unwrap());
        let gp = FlagSpace::maximal_parabolic(rs.clone(), 2);
        let mut ctx = WeylCtx::new();
        let table = CsmTable::build(&mut ctx, &gp, false, CAP).unwrap();
        for c in table.classes.values() {
            for (_, coeff) in c.terms() {
                assert!(!coeff.constant_term().is_negative());
            }
        }
        assert!(table.total_sum_identity(&mut ctx));
    }

    #[test]
    fn gr24_divisor_euler_obstructions() {
        let rs = Rc::new(build_root_system(LieType::A, 3).unwrap());
        let gp = FlagSpace::maximal_parabolic(rs.clone(), 1);
        let mut ctx = WeylCtx::new();
        let table = CsmTable::build(&mut ctx, &gp, false, CAP).unwrap();
        let quot = ParabolicQuotient::new(&rs, &gp.omitted, CAP).unwrap();
        let w = quot
            .element_of_label(&rs, &CominLabel::Parts(vec![2, 1]))
            .unwrap();
        let e = euler_obstructions(&mut ctx, &gp, &w, &table).unwrap();
        // singular only at 1.P: e = 1 on every stratum except e = 2 at the point
        for v in &quot.min_reps {
            if v.length() > w.length() {
                continue;
            }
            let expect = if v.is_identity() { 2 } else { 1 };
            assert_eq!(e.value(v), expect, "{:?}", v.canonical_word(&rs));
        }
        // point-class identity: sum e = [X_id] coefficient of c_Ma = 6
        assert_eq!(e.sum(), 6);
        // equivariant residual is exactly zero
        let table_eq = CsmTable::build(&mut ctx, &gp, true, CAP).unwrap();
        assert!(equivariant_residual_check(&mut ctx, &gp, &e, &table_eq).unwrap());
    }

    #[test]
    fn lg24_divisor_euler_obstructions() {
        let rs = Rc::new(build_root_system(LieType::C, 2).unwrap());
        let lg = FlagSpace::maximal_parabolic(rs.clone(), 1);
        let mut ctx = WeylCtx::new();
        let table = CsmTable::build(&mut ctx, &lg, false, CAP).unwrap();
        let quot = ParabolicQuotient::new(&rs, &lg.omitted, CAP).unwrap();
        let w = quot
            .element_of_label(&rs, &CominLabel::Parts(vec![2]))
            .unwrap();
        let e = euler_obstructions(&mut ctx, &lg, &w, &table).unwrap();
        let at = |parts: &[u32]| {
            let v = quot
                .element_of_label(&rs, &CominLabel::Parts(parts.to_vec()))
                .unwrap();
            e.value(&v)
        };
        assert_eq!(at(&[2]), 1);
        assert_eq!(at(&[1]), 1);
        assert_eq!(at(&[]), 0);
    }

    #[test]
    fn lg36_divisor_euler_obstructions() {
        let rs = Rc::new(build_root_system(LieType::C, 3).unwrap());
        let lg = FlagSpace::maximal_parabolic(rs.clone(), 2);
        let mut ctx = WeylCtx::new();
        let table = CsmTable::build(&mut ctx, &lg, false, CAP).unwrap();
        let quot = ParabolicQuotient::new(&rs, &lg.omitted, CAP).unwrap();
        let w = quot
            .element_of_label(&rs, &CominLabel::Parts(vec![3, 2]))
            .unwrap();
        let e = euler_obstructions(&mut ctx, &lg, &w, &table).unwrap();
        let at = |parts: &[u32]| {
            let v = quot
                .element_of_label(&rs, &CominLabel::Parts(parts.to_vec()))
                .unwrap();
            e.value(&v)
        };
        assert_eq!(at(&[3, 2]), 1);
        assert_eq!(at(&[3, 1]), 1);
        assert_eq!(at(&[2, 1]), 1);
        assert_eq!(at(&[]), 1);
        assert_eq!(at(&[3]), 0);
        assert_eq!(at(&[2]), 0);
        assert_eq!(at(&[1]), 0);
    }

    #[test]
    fn euler_pullback_checks() {
        // Gr(2,4) -> Fl(4), divisor
        let rs = Rc::new(build_root_system(LieType::A, 3).unwrap());
        let gp = FlagSpace::maximal_parabolic(rs.clone(), 1);
        let gb = FlagSpace::complete(rs.clone());
        let mut ctx = WeylCtx::new();
        let gp_table = CsmTable::build(&mut ctx, &gp, false, CAP).unwrap();
        let gb_table = CsmTable::build(&mut ctx, &gb, false, CAP).unwrap();
        let w = WeylElt::from_word(&rs, &[0, 2, 1]);
        let e = euler_obstructions(&mut ctx, &gp, &w, &gp_table).unwrap();
        assert!(euler_pullback_check(&mut ctx, &gp, &w, &gb, &e, &gb_table).unwrap());
        // w = id: all values 1 and the check is trivial
        let id = WeylElt::identity(3);
        let e = euler_obstructions(&mut ctx, &gp, &id, &gp_table).unwrap();
        assert_eq!(e.sum(), 1);
        assert!(euler_pullback_check(&mut ctx, &gp, &id, &gb, &e, &gb_table).unwrap());

        // LG(2,4) -> SF(1,2;4): cells over the point coset carry 0
        let c2 = Rc::new(build_root_system(LieType::C, 2).unwrap());
        let lg = FlagSpace::maximal_parabolic(c2.clone(), 1);
        let sf = FlagSpace::complete(c2.clone());
        let lg_table = CsmTable::build(&mut ctx, &lg, false, CAP).unwrap();
        let sf_table = CsmTable::build(&mut ctx, &sf, false, CAP).unwrap();
        let quot = ParabolicQuotient::new(&c2, &lg.omitted, CAP).unwrap();
        let w = quot
            .element_of_label(&c2, &CominLabel::Parts(vec![2]))
            .unwrap();
        let e = euler_obstructions(&mut ctx, &lg, &w, &lg_table).unwrap();
        assert!(euler_pullback_check(&mut ctx, &lg, &w, &sf, &e, &sf_table).unwrap());
    }

    #[test]
    fn euler_pullback_through_intermediate_parabolic() {
        // Gr(2,4) divisor pulled back along the two-step flag G/Q with
        // W_Q = <s_1>, exercising the fiber Euler-characteristic division.
        let rs = Rc::new(build_root_system(LieType::A, 3).unwrap());
        let gp = FlagSpace::maximal_parabolic(rs.clone(), 1);
        let q_space = FlagSpace {
            rs: rs.clone(),
            omitted: [1usize, 2].into_iter().collect(),
        };
        let mut ctx = WeylCtx::new();
        let gp_table = CsmTable::build(&mut ctx, &gp, false, CAP).unwrap();
        let q_table = CsmTable::build(&mut ctx, &q_space, false, CAP).unwrap();
        let w = WeylElt::from_word(&rs, &[0, 2, 1]);
        let e = euler_obstructions(&mut ctx, &gp, &w, &gp_table).unwrap();
        assert!(euler_pullback_check(&mut ctx, &gp, &w, &q_space, &e, &q_table).unwrap());
        // coefficients of the pulled-back Mather class are integers
        let pulled = pullback_mather(&mut ctx, &gp, &w, &q_space, false).unwrap();
        for (_, c) in pulled.terms() {
            assert!(c.is_constant() && c.constant_term().is_integer());
        }
    }

    #[test]
    fn nonneg_scans() {
        // LG(3,6) and OG-style D4 node 0 quadric: nonnegative
        let c3 = Rc::new(build_root_system(LieType::C, 3).unwrap());
        let lg = FlagSpace::maximal_parabolic(c3.clone(), 2);
        let mut ctx = WeylCtx::new();
        let table = CsmTable::build(&mut ctx, &lg, false, CAP).unwrap();
        let quot = ParabolicQuotient::new(&c3, &lg.omitted, CAP).unwrap();
        let bad = check_euler_nonneg(&mut ctx, &lg, &quot.min_reps, &table).unwrap();
        assert!(bad.is_empty());

        // Gr(3,6): strictly positive
        let a5 = Rc::new(build_root_system(LieType::A, 5).unwrap());
        let gr = FlagSpace::maximal_parabolic(a5.clone(), 2);
        let table = CsmTable::build(&mut ctx, &gr, false, CAP).unwrap();
        let quot = ParabolicQuotient::new(&a5, &gr.omitted, CAP).unwrap();
        for w in &quot.min_reps {
            let e = euler_obstructions(&mut ctx, &gr, w, &table).unwrap();
            let mut ictx = WeylCtx::new();
            for v in &quot.min_reps {
                if ictx.bruhat_leq(&a5, v, w) {
                    assert!(e.value(v) > 0, "e = 0 in type A");
                }
            }
        }
    }

    #[test]
    fn point_class_identity() {
        // sum_v e_{w,v} = [X_id]-coefficient of c_Ma(X_w^P)
        let c3 = Rc::new(build_root_system(LieType::C, 3).unwrap());
        let lg = FlagSpace::maximal_parabolic(c3.clone(), 2);
        let mut ctx = WeylCtx::new();
        let table = CsmTable::build(&mut ctx, &lg, false, CAP).unwrap();
        let quot = ParabolicQuotient::new(&c3, &lg.omitted, CAP).unwrap();
        for w in &quot.min_reps {
            let e = euler_obstructions(&mut ctx, &lg, w, &table).unwrap();
            let m = mather_class(&mut ctx, &lg, w, false).unwrap();
            assert_eq!(e.sum(), int_of(&m.downstairs, &WeylElt::identity(3)));
        }
    }
}
