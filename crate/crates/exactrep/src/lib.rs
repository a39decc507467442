//! Exact-arithmetic combinatorial representation theory.
//!
//! This crate computes dimensions, characters, and explicit matrix
//! constructions for the symmetric group, `GL(n)`, the classical root
//! systems, Iwahori-Hecke algebras of type A, and the Brauer and
//! Temperley-Lieb diagram algebras. Everything runs over exact scalars
//! (arbitrary-precision rationals, Laurent polynomials, multivariate
//! Laurent monomial sums); there is no floating point anywhere.
//!
//! Every closed formula implemented here is paired with an independent
//! combinatorial oracle (exhaustive enumeration, a second character rule,
//! a polynomial identity), and the [`verify`] module packages those
//! cross-checks as runnable suites. The `exactrep` binary exposes the
//! same functionality as a small CLI; the `examples/` directory shows one
//! runnable example per capability.

pub mod cache;
pub mod cli;
pub mod diagram;
pub mod exact;
pub mod glnrep;
pub mod hecke;
pub mod schur;
pub mod shapes;
pub mod symgroup;
pub mod verify;
pub mod weyl;

use std::fmt;

/// Errors shared by all modules.
///
/// Most operations in this crate are total on valid inputs; the error
/// variants distinguish bad input from conditions that indicate an
/// internal inconsistency (for example a dimension formula that fails
/// to divide exactly).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must agree in size (number of boxes, points,
    /// strands) do not.
    SizeMismatch(String),
    /// An enumeration bound was exceeded.
    BoundExceeded(String),
    /// Exact polynomial division was requested but the divisor does not
    /// divide the dividend.
    NotDivisible(String),
    /// A formula that must produce an integer produced a proper fraction.
    InexactQuotient(String),
    /// Malformed input (parse failures, invalid shapes, unsupported type).
    BadInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeMismatch(m) => write!(f, "size mismatch: {m}"),
            Error::BoundExceeded(m) => write!(f, "bound exceeded: {m}"),
            Error::NotDivisible(m) => write!(f, "not divisible: {m}"),
            Error::InexactQuotient(m) => write!(f, "inexact quotient: {m}"),
            Error::BadInput(m) => write!(f, "bad input: {m}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
