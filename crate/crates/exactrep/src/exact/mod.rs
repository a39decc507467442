//! Exact scalar arithmetic and exact linear algebra.
//!
//! Three scalar types underpin the rest of the crate:
//!
//! * [`Rational`] — arbitrary-precision rationals, always reduced with a
//!   positive denominator.
//! * [`LaurentPoly`] — single-variable Laurent polynomials over the
//!   rationals, tagged with their variable.
//! * [`MultiLaurent`] — multivariate Laurent monomial sums on an integer
//!   exponent lattice. Half-integer weight coordinates are stored as
//!   doubled integers by the callers that need them, so every exponent
//!   here is a plain integer.
//!
//! All values are immutable and all operations are pure functions.

mod laurent;
mod matrix;
mod multi;

pub use laurent::{LaurentPoly, Var};
pub use matrix::{mat_identity, mat_is_identity, mat_mul, matrix_rank, Matrix};
pub use multi::{poly_divide_exact, MultiLaurent};

use num::BigInt;

/// Arbitrary-precision rational number.
///
/// `num::BigRational` maintains the invariants this crate relies on:
/// the fraction is always reduced and the denominator is positive.
pub type Rational = num::BigRational;

/// The rational `n`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// True when `r` is an integer, in which case the integer is returned.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}
