//! Sparse multivariate polynomials and rational functions in the simple
//! roots `a1..ar` and the dilation parameter `h`, over exact rationals.
//!
//! Exponent vectors have length `rank + 1`; the last slot is reserved for
//! `h` (the dilation weight hbar). Coefficients are `BigRational`; no zero
//! coefficient is ever stored.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use alloc::{collections::BTreeMap, format};
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exponent vector; slot `nvars-1` is the `h` exponent.
pub type Expo = Vec<u8>;

/// Sparse exact polynomial in `a1..ar, h`.
#[derive(Clone, PartialEq, Eq)]
pub struct EquivPoly {
    nvars: usize,
    terms: BTreeMap<Expo, BigRational>,
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl EquivPoly {
    pub fn zero(nvars: usize) -> Self {
        EquivPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn int(nvars: usize, n: i64) -> Self {
        Self::constant(nvars, big(n))
    }

    /// The variable `a(i)` (0-based, `i < nvars - 1`).
    pub fn alpha(nvars: usize, i: usize) -> Self {
        assert!(i + 1 < nvars, "alpha index out of range");
        let mut e = vec![0u8; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, BigRational::one());
        p
    }

    /// The dilation variable `h`.
    pub fn hbar(nvars: usize) -> Self {
        let mut e = vec![0u8; nvars];
        e[nvars - 1] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, BigRational::one());
        p
    }

    /// Linear polynomial with integer coordinates in the alphas.
    pub fn linear(nvars: usize, coords: &[i64]) -> Self {
        assert!(coords.len() < nvars);
        let mut p = Self::zero(nvars);
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                let mut e = vec![0u8; nvars];
                e[i] = 1;
                p.terms.insert(e, big(c));
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn is_one_poly(&self) -> bool {
        self.num_terms() == 1 && self.is_constant() && self.constant_term().is_one()
    }

    /// The constant term.
    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&vec![0u8; self.nvars])
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// Does `h` occur in any term?
    pub fn involves_hbar(&self) -> bool {
        self.terms.keys().any(|e| e[self.nvars - 1] != 0)
    }

    pub fn add_term(&mut self, e: Expo, c: BigRational) {
        assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        EquivPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        EquivPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Expo = e1
                    .iter()
                    .zip(e2.iter())
                    .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                    .collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact evaluation at a rational point (length `nvars`).
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute `h = 1`.
    pub fn substitute_hbar_one(&self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[self.nvars - 1] = 0;
            r.add_term(e, c.clone());
        }
        r
    }

    /// Substitute `a1 = ... = ar = 0`, keeping `h`.
    pub fn substitute_alphas_zero(&self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[..self.nvars - 1].iter().all(|&x| x == 0) {
                r.add_term(e.clone(), c.clone());
            }
        }
        r
    }

    /// Multiply by `h^k`.
    pub fn mul_hbar_pow(&self, k: u8) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[self.nvars - 1] = e[self.nvars - 1].checked_add(k).expect("exponent overflow");
            r.add_term(e, c.clone());
        }
        r
    }

    /// Keep only the terms of total alpha-and-h degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().map(|&x| x as u32).sum::<u32>() == d {
                r.add_term(e.clone(), c.clone());
            }
        }
        r
    }

    /// Drop every term of total degree above `d`.
    pub fn truncate_above_degree(&self, d: u32) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().map(|&x| x as u32).sum::<u32>() <= d {
                r.add_term(e.clone(), c.clone());
            }
        }
        r
    }

    /// Substitute each alpha variable by a linear form; `h` is untouched.
    /// `images[i]` gives integer coordinates of the image of `a(i)`.
    pub fn substitute_alphas_linear(&self, images: &[Vec<i64>]) -> Self {
        assert_eq!(images.len(), self.nvars - 1);
        let lin: Vec<EquivPoly> = images
            .iter()
            .map(|im| EquivPoly::linear(self.nvars, im))
            .collect();
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut t = Self::constant(self.nvars, c.clone());
            for (i, &k) in e[..self.nvars - 1].iter().enumerate() {
                if k > 0 {
                    t = t.mul(&lin[i].pow(k as u32));
                }
            }
            t = t.mul_hbar_pow(e[self.nvars - 1]);
            r = r.add(&t);
        }
        r
    }

    fn grlex_lead(&self) -> Option<(&Expo, &BigRational)> {
        self.terms.iter().max_by(|(e1, _), (e2, _)| {
            let d1: u32 = e1.iter().map(|&x| x as u32).sum();
            let d2: u32 = e2.iter().map(|&x| x as u32).sum();
            d1.cmp(&d2).then_with(|| e1.cmp(e2))
        })
    }

    /// Exact multivariate division in graded-lex order. Fails with the
    /// remainder if `self` is not a polynomial multiple of `d`. The working
    /// remainder is keyed by (total degree, exponent) so the leading term is
    /// a map lookup rather than a scan.
    pub fn exact_divide(&self, d: &Self) -> Result<Self> {
        assert_eq!(self.nvars, d.nvars);
        assert!(!d.is_zero(), "division by zero polynomial");
        let deg = |e: &Expo| e.iter().map(|&x| x as u32).sum::<u32>();
        let (lead_e, lead_c) = d.grlex_lead().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem: BTreeMap<(u32, Expo), BigRational> = self
            .terms
            .iter()
            .map(|(e, c)| ((deg(e), e.clone()), c.clone()))
            .collect();
        let mut quot = Self::zero(self.nvars);
        while let Some(((_, re), rc)) = rem.last_key_value().map(|(k, c)| (k.clone(), c.clone())) {
            if !re.iter().zip(lead_e.iter()).all(|(&a, &b)| a >= b) {
                return Err(Error::NotPolynomial);
            }
            let qe: Expo = re.iter().zip(lead_e.iter()).map(|(&a, &b)| a - b).collect();
            let qc = &rc / &lead_c;
            for (e2, c2) in &d.terms {
                let te: Expo = qe.iter().zip(e2.iter()).map(|(&a, &b)| a + b).collect();
                let key = (deg(&te), te);
                let delta = &qc * c2;
                use alloc::collections::btree_map::Entry;
                match rem.entry(key) {
                    Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    Entry::Occupied(mut o) => {
                        let s = o.get() - &delta;
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                }
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// Display with custom variable names (used by emitters).
    pub fn format_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        // Sort by (total degree, lex) for stable, readable output.
        let mut keys: Vec<&Expo> = self.terms.keys().collect();
        keys.sort_by(|e1, e2| {
            let d1: u32 = e1.iter().map(|&x| x as u32).sum();
            let d2: u32 = e2.iter().map(|&x| x as u32).sum();
            d1.cmp(&d2).then_with(|| e1.cmp(e2))
        });
        let mut out = String::new();
        for (idx, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let mut mono = String::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&names(i));
                if k > 1 {
                    mono.push_str(&format!("^{k}"));
                }
            }
            let abs = c.abs();
            let coeff_str = if abs.is_one() && !mono.is_empty() {
                String::new()
            } else {
                format!("{abs}")
            };
            if idx == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&coeff_str);
            if !mono.is_empty() {
                if !coeff_str.is_empty() {
                    out.push('*');
                }
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Display for EquivPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.nvars;
        let s = self.format_with(&move |i| {
            if i + 1 == n {
                String::from("h")
            } else {
                format!("a{}", i + 1)
            }
        });
        write!(f, "{s}")
    }
}

impl fmt::Debug for EquivPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Quotient of two polynomials; equality by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFun {
    pub num: EquivPoly,
    pub den: EquivPoly,
}

impl RatFun {
    pub fn from_poly(p: EquivPoly) -> Self {
        let n = p.nvars();
        RatFun {
            num: p,
            den: EquivPoly::one(n),
        }
    }

    pub fn new(num: EquivPoly, den: EquivPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFun { num, den }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(EquivPoly::zero(nvars))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        RatFun {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFun {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn scalar_mul(&self, c: &BigRational) -> Self {
        RatFun {
            num: self.num.scalar_mul(c),
            den: self.den.clone(),
        }
    }

    pub fn eq_ratfun(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Certify the quotient is a polynomial and return it.
    pub fn certify_polynomial(&self) -> Result<EquivPoly> {
        self.num.exact_divide(&self.den)
    }
}
