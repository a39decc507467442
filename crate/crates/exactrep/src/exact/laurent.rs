//! Single-variable Laurent polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use super::Rational;

/// Variable tag for a [`LaurentPoly`].
///
/// `q` is the Hecke deformation parameter, `x` the diagram-algebra loop
/// parameter, `r` the second BMW parameter. `t` is an auxiliary variable
/// used when `q` and `x` must live in a common ring (`q = t^2`,
/// `x = t + t^-1`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Q,
    X,
    R,
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::Q => "q",
            Var::X => "x",
            Var::R => "r",
            Var::T => "t",
        };
        write!(f, "{s}")
    }
}

/// A Laurent polynomial: a finite map exponent -> nonzero rational
/// coefficient, tagged with its variable.
///
/// Zero coefficients are never stored, so structural equality is exact
/// ring equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    /// The zero polynomial in variable `var`.
    pub fn zero(var: Var) -> Self {
        LaurentPoly {
            var,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(var: Var, c: Rational) -> Self {
        Self::monomial(var, 0, c)
    }

    /// The monomial `c * v^e`.
    pub fn monomial(var: Var, e: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { var, terms }
    }

    /// The variable itself, `v^1`.
    pub fn var(var: Var) -> Self {
        Self::monomial(var, 1, Rational::one())
    }

    pub fn variable(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `v^e` (zero when absent).
    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Iterate over `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(
            self.var, other.var,
            "mixed Laurent variables: {} vs {}",
            self.var, other.var
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_var(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_var(other);
        let mut out = Self::zero(self.var);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.insert(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Substitute a nonzero rational value for the variable.
    pub fn eval(&self, v: &Rational) -> Rational {
        assert!(!v.is_zero(), "Laurent polynomials cannot be evaluated at 0");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut p = Rational::one();
            let mut n = e.unsigned_abs();
            while n > 0 {
                p *= v;
                n -= 1;
            }
            if *e < 0 {
                p = p.recip();
            }
            acc += c * p;
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders like `q^2 - q + 1`, highest exponent first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && *e != 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            if *e != 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.var)?;
                if *e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use proptest::prelude::*;

    fn qpoly(terms: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero(Var::Q);
        for &(e, c) in terms {
            p = p.add(&LaurentPoly::monomial(Var::Q, e, rat(c)));
        }
        p
    }

    #[test]
    fn no_zero_terms_are_stored() {
        let p = qpoly(&[(2, 1), (0, 3)]);
        let q = qpoly(&[(2, -1)]);
        let s = p.add(&q);
        assert_eq!(s.num_terms(), 1);
        assert_eq!(s.coeff(0), rat(3));
        assert_eq!(s.coeff(2), rat(0));
    }

    #[test]
    fn display_matches_expected_format() {
        assert_eq!(qpoly(&[(2, 1), (1, -1), (0, 1)]).to_string(), "q^2 - q + 1");
        assert_eq!(qpoly(&[]).to_string(), "0");
        assert_eq!(qpoly(&[(-1, 2)]).to_string(), "2*q^-1");
        assert_eq!(qpoly(&[(1, -1)]).to_string(), "-q");
        assert_eq!(qpoly(&[(0, 5)]).to_string(), "5");
    }

    #[test]
    fn eval_handles_negative_exponents() {
        // q - q^-1 at q = 2/3 is 2/3 - 3/2 = -5/6.
        let p = qpoly(&[(1, 1), (-1, -1)]);
        assert_eq!(p.eval(&ratio(2, 3)), ratio(-5, 6));
    }

    proptest! {
        #[test]
        fn laurent_ring_axioms(a in proptest::collection::vec((-4i64..5, -9i64..10), 0..5),
                               b in proptest::collection::vec((-4i64..5, -9i64..10), 0..5),
                               c in proptest::collection::vec((-4i64..5, -9i64..10), 0..5)) {
            let (x, y, z) = (qpoly(&a), qpoly(&b), qpoly(&c));
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }
    }
}
