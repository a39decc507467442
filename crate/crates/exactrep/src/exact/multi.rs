//! Multivariate Laurent monomial sums and exact division.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use super::Rational;
use crate::{Error, Result};

/// A finite sum of monomials `c * x1^e1 ... xn^en` with integer exponents
/// (callers storing half-integer weights double them first).
///
/// Invariants: no zero coefficients are stored, and every exponent vector
/// has length `nvars`. Terms sit in a `BTreeMap` under lexicographic
/// exponent order, so equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiLaurent {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl MultiLaurent {
    pub fn zero(nvars: usize) -> Self {
        MultiLaurent {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], Rational::one())
    }

    /// The monomial `c * x^exps`.
    pub fn monomial(exps: Vec<i64>, c: Rational) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiLaurent { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[i64]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    /// Sum of all coefficients (the evaluation at `x1 = ... = xn = 1`).
    pub fn coeff_mass(&self) -> Rational {
        let mut acc = Rational::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    fn insert(&mut self, exps: Vec<i64>, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            let key: Vec<i64> = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("zero entry just created");
            self.terms.remove(&key);
        }
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "mixed variable counts: {} vs {}",
            self.nvars, other.nvars
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiLaurent {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiLaurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Shift every exponent vector by `delta` (multiplication by a monomial).
    pub fn shift(&self, delta: &[i64]) -> Self {
        assert_eq!(delta.len(), self.nvars);
        MultiLaurent {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(delta).map(|(a, b)| a + b).collect(),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Swap variables `i` and `j` in every exponent vector.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        MultiLaurent {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i, j);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// The lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Vec<i64>, &Rational)> {
        self.terms.last_key_value()
    }

    fn min_exponents(&self) -> Vec<i64> {
        let mut min = vec![0i64; self.nvars];
        let mut first = true;
        for e in self.terms.keys() {
            if first {
                min.copy_from_slice(e);
                first = false;
            } else {
                for (m, v) in min.iter_mut().zip(e) {
                    if v < m {
                        *m = *v;
                    }
                }
            }
        }
        min
    }
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, exp) in e.iter().enumerate() {
                if *exp != 0 {
                    write!(f, "*x{}^{}", i + 1, exp)?;
                }
            }
        }
        Ok(())
    }
}

/// Exact division in the multivariate Laurent ring.
///
/// Both operands are shifted so that all exponents are nonnegative, then
/// the quotient is built by iterated leading-term elimination under the
/// lexicographic term order. When `den` divides `num` this terminates
/// with the unique quotient `Q` satisfying `Q * den = num`; otherwise it
/// reports [`Error::NotDivisible`], which in this crate signals either an
/// implementation bug or an invalid weight input.
pub fn poly_divide_exact(num: &MultiLaurent, den: &MultiLaurent) -> Result<MultiLaurent> {
    num.check_vars(den);
    if den.is_zero() {
        return Err(Error::NotDivisible("division by zero polynomial".into()));
    }
    if num.is_zero() {
        return Ok(MultiLaurent::zero(num.nvars));
    }
    let num_min = num.min_exponents();
    let den_min = den.min_exponents();
    let num_shifted = num.shift(&num_min.iter().map(|v| -v).collect::<Vec<_>>());
    let den_shifted = den.shift(&den_min.iter().map(|v| -v).collect::<Vec<_>>());

    let mut rem = num_shifted;
    let mut quot = MultiLaurent::zero(num.nvars);
    let (den_lead_e, den_lead_c) = {
        let (e, c) = den_shifted.leading_term().expect("nonzero divisor");
        (e.clone(), c.clone())
    };
    while !rem.is_zero() {
        let (rem_e, rem_c) = {
            let (e, c) = rem.leading_term().expect("nonzero remainder");
            (e.clone(), c.clone())
        };
        let qe: Vec<i64> = rem_e.iter().zip(&den_lead_e).map(|(a, b)| a - b).collect();
        if qe.iter().any(|v| *v < 0) {
            return Err(Error::NotDivisible(format!(
                "leading term x^{rem_e:?} not divisible by x^{den_lead_e:?}"
            )));
        }
        let qc = &rem_c / &den_lead_c;
        let qterm = MultiLaurent::monomial(qe, qc);
        rem = rem.sub(&qterm.mul(&den_shifted));
        quot = quot.add(&qterm);
    }
    // Undo the two shifts: num = x^num_min * num', den = x^den_min * den',
    // so the true quotient is x^(num_min - den_min) * quot.
    let back: Vec<i64> = num_min.iter().zip(&den_min).map(|(a, b)| a - b).collect();
    Ok(quot.shift(&back))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn poly(nvars: usize, terms: &[(&[i64], i64)]) -> MultiLaurent {
        let mut p = MultiLaurent::zero(nvars);
        for (e, c) in terms {
            p = p.add(&MultiLaurent::monomial(e.to_vec(), rat(*c)));
        }
        p
    }

    #[test]
    fn divide_identity_case() {
        // (x1 - x2) / (x1 - x2) = 1
        let d = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(poly_divide_exact(&d, &d).unwrap(), MultiLaurent::one(2));
    }

    #[test]
    fn divide_factored_difference_of_squares() {
        // (x1^2 - x2^2) / (x1 - x2) = x1 + x2
        let num = poly(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        let den = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let expect = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(poly_divide_exact(&num, &den).unwrap(), expect);
    }

    #[test]
    fn divide_reports_non_divisibility() {
        let num = poly(2, &[(&[1, 0], 1), (&[0, 0], 1)]);
        let den = poly(2, &[(&[0, 1], 1), (&[0, 0], -1)]);
        assert!(poly_divide_exact(&num, &den).is_err());
    }

    #[test]
    fn divide_handles_negative_exponents() {
        // (x1 - x1^-1) / (x1 - x1^-1) and a Laurent multiple.
        let den = poly(1, &[(&[1], 1), (&[-1], -1)]);
        let q = poly(1, &[(&[-3], 5), (&[2], 1)]);
        let num = q.mul(&den);
        assert_eq!(poly_divide_exact(&num, &den).unwrap(), q);
    }

    proptest! {
        #[test]
        fn divide_roundtrip(aterms in proptest::collection::vec(
                                ((-3i64..4, -3i64..4), -5i64..6), 1..6),
                            bterms in proptest::collection::vec(
                                ((-3i64..4, -3i64..4), -5i64..6), 1..6)) {
            let a = poly(2, &aterms.iter()
                .map(|((e1, e2), c)| ([*e1, *e2], *c))
                .collect::<Vec<_>>()
                .iter()
                .map(|(e, c)| (&e[..], *c))
                .collect::<Vec<_>>());
            let b = poly(2, &bterms.iter()
                .map(|((e1, e2), c)| ([*e1, *e2], *c))
                .collect::<Vec<_>>()
                .iter()
                .map(|(e, c)| (&e[..], *c))
                .collect::<Vec<_>>());
            prop_assume!(!a.is_zero() && !b.is_zero());
            let prod = a.mul(&b);
            prop_assert_eq!(poly_divide_exact(&prod, &b).unwrap(), a);
        }

        #[test]
        fn multi_ring_axioms(a in proptest::collection::vec(((-3i64..4, -3i64..4), -5i64..6), 0..5),
                             b in proptest::collection::vec(((-3i64..4, -3i64..4), -5i64..6), 0..5),
                             c in proptest::collection::vec(((-3i64..4, -3i64..4), -5i64..6), 0..5)) {
            let mk = |ts: &Vec<((i64, i64), i64)>| {
                let arrs: Vec<([i64; 2], i64)> =
                    ts.iter().map(|((e1, e2), c)| ([*e1, *e2], *c)).collect();
                poly(2, &arrs.iter().map(|(e, c)| (&e[..], *c)).collect::<Vec<_>>())
            };
            let (x, y, z) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        }
    }
}
