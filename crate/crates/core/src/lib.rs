//! Exact equivariant Schubert calculus on cominuscule flag manifolds.
//!
//! The crate computes Chern-Mather classes, CSM classes of Schubert cells,
//! local Euler obstructions, Kazhdan-Lusztig classes and characteristic-cycle
//! multiplicities, and torus fixed-point localizations of conormal spaces.
//! All arithmetic is exact (arbitrary-precision rationals); there is no
//! floating point anywhere.
//!
//! The crate is `no_std` (with `alloc`): it contains no IO. File formats,
//! golden tables and the command line front end live in `comather-cli`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chow;
pub mod csm;
pub mod kl;
pub mod loc;
pub mod mather;
pub mod poly;
pub mod roots;
pub mod weyl;

use alloc::string::String;
use core::fmt;

/// Errors surfaced on the public API. Internal invariant violations panic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Unsupported Lie type / rank combination.
    UnsupportedRootSystem(String),
    /// A weight was passed where a positive root was required.
    NotARoot,
    /// Operands belong to different root systems or flag spaces.
    Mismatch,
    /// A Weyl group element is not a minimal-length coset representative.
    NotMinimalRep,
    /// The parabolic is not cominuscule, but the operation requires it.
    NotCominuscule,
    /// A set of roots is not a lower order ideal of the cominuscule poset.
    NotAnIdeal,
    /// Exact polynomial division left a nonzero remainder.
    NotPolynomial,
    /// Homogenization was asked of a class that already involves hbar.
    HbarPresent,
    /// A triangular solve produced a non-integer where an integer was forced.
    NonIntegralSolve(String),
    /// Malformed label, word, or other external input.
    BadInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedRootSystem(s) => write!(f, "unsupported root system: {s}"),
            Error::NotARoot => write!(f, "not a positive root of this system"),
            Error::Mismatch => write!(f, "mismatched root systems or flag spaces"),
            Error::NotMinimalRep => write!(
                f,
                "not a minimal-length coset representative (coset_decompose first)"
            ),
            Error::NotCominuscule => write!(f, "parabolic node is not cominuscule"),
            Error::NotAnIdeal => write!(f, "root set is not a lower order ideal"),
            Error::NotPolynomial => write!(f, "exact division failed: result is not polynomial"),
            Error::HbarPresent => write!(f, "class already involves hbar"),
            Error::NonIntegralSolve(s) => write!(f, "non-integral triangular solve: {s}"),
            Error::BadInput(s) => write!(f, "bad input: {s}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
