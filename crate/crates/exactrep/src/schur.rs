//! Schur polynomials two ways (tableau sum and bialternant quotient),
//! Kostka numbers, and Littlewood-Richardson coefficients, with a
//! product-expansion oracle that pits the LR filling rule against plain
//! polynomial multiplication.

use std::collections::BTreeMap;
use std::fmt;

use num::One;
use serde::Serialize;

use crate::exact::{poly_divide_exact, MultiLaurent, Rational};
use crate::shapes::{enumerate_cst, is_lattice, word_of, Partition, SkewShape};
use crate::{Error, Result};

/// A nonnegative-integer combination of Schur functions, stored sparsely
/// (only strictly positive coefficients).
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, lambda: Partition, coeff: u64) {
        if coeff > 0 {
            self.coeffs.insert(lambda, coeff);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> u64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &u64)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lambda, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "s[{lambda}]")?;
        }
        Ok(())
    }
}

/// The Schur polynomial of `lambda` in `n` variables as a sum of `x^T`
/// over column strict tableaux. Zero when `lambda` has more than `n`
/// rows.
pub fn schur_tableau_sum(lambda: &Partition, n: usize) -> MultiLaurent {
    let mut out = MultiLaurent::zero(n);
    for t in enumerate_cst(&SkewShape::straight(lambda.clone()), n, None) {
        let exps: Vec<i64> = t.weight().iter().map(|&w| w as i64).collect();
        out = out.add(&MultiLaurent::monomial(exps, Rational::one()));
    }
    out
}

/// The alternant `det(x_i^(mu_j))` for the exponent vector `mu`,
/// expanded as a signed sum over permutations.
fn alternant(mu: &[i64]) -> MultiLaurent {
    let n = mu.len();
    let mut out = MultiLaurent::zero(n);
    for w in crate::symgroup::Permutation::all(n) {
        // Row i takes column w(i): the monomial prod_i x_i^(mu_{w(i)}).
        let exps: Vec<i64> = (0..n).map(|i| mu[w.apply(i)]).collect();
        let sign = if w.sign() > 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        out = out.add(&MultiLaurent::monomial(exps, sign));
    }
    out
}

/// The Schur polynomial as the bialternant quotient
/// `det(x_i^(lambda_j + n - j)) / det(x_i^(n - j))`.
pub fn schur_bialternant(lambda: &Partition, n: usize) -> Result<MultiLaurent> {
    if lambda.rows() > n {
        return Err(Error::BadInput(format!(
            "bialternant needs rows({lambda}) <= n = {n}"
        )));
    }
    let shifted: Vec<i64> = (0..n)
        .map(|j| lambda.part(j) as i64 + (n - 1 - j) as i64)
        .collect();
    let delta: Vec<i64> = (0..n).map(|j| (n - 1 - j) as i64).collect();
    poly_divide_exact(&alternant(&shifted), &alternant(&delta))
}

/// Kostka number: the count of column strict tableaux of shape `lambda`
/// and weight `mu` (a composition).
pub fn kostka(lambda: &Partition, mu: &[usize]) -> Result<u64> {
    if lambda.size() != mu.iter().sum::<usize>() {
        return Err(Error::SizeMismatch(format!(
            "|lambda| = {} vs |mu| = {}",
            lambda.size(),
            mu.iter().sum::<usize>()
        )));
    }
    let n = mu.len().max(1);
    Ok(enumerate_cst(&SkewShape::straight(lambda.clone()), n, Some(mu)).len() as u64)
}

/// Littlewood-Richardson coefficient: the number of column strict
/// fillings of `lambda/mu` with content `nu` whose word is a lattice
/// permutation.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if !mu.contained_in(lambda) {
        return Err(Error::BadInput(format!("{mu} not contained in {lambda}")));
    }
    if lambda.size() != mu.size() + nu.size() {
        return Err(Error::SizeMismatch(format!(
            "|lambda| = {} vs |mu| + |nu| = {}",
            lambda.size(),
            mu.size() + nu.size()
        )));
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    let n = nu.rows().max(1);
    let mut weight = vec![0usize; n];
    for (i, &p) in nu.parts().iter().enumerate() {
        weight[i] = p;
    }
    let count = enumerate_cst(&shape, n, Some(&weight))
        .iter()
        .filter(|t| is_lattice(&word_of(t)))
        .count();
    Ok(count as u64)
}

/// Monomial sums with small nonnegative exponents, packed into `u64`
/// keys (highest variable in the highest nibble, so that integer order
/// on keys is lexicographic order on exponent vectors). This keeps the
/// product-expansion pipeline allocation-free per term.
mod packed {
    use std::collections::BTreeMap;

    /// A variable count and exponent bound the packing supports.
    pub const MAX_VARS: usize = 16;
    pub const MAX_EXP: usize = 15;

    pub fn pack(exps: &[usize]) -> u64 {
        debug_assert!(exps.len() <= MAX_VARS);
        let mut key = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            debug_assert!(e <= MAX_EXP);
            key |= (e as u64) << (4 * (MAX_VARS - 1 - i));
        }
        key
    }

    pub fn unpack(key: u64, n: usize) -> Vec<usize> {
        (0..n)
            .map(|i| ((key >> (4 * (MAX_VARS - 1 - i))) & 0xf) as usize)
            .collect()
    }

    pub type Poly = BTreeMap<u64, i64>;

    pub fn add_term(p: &mut Poly, key: u64, c: i64) {
        let entry = p.entry(key).or_insert(0);
        *entry += c;
        if *entry == 0 {
            p.remove(&key);
        }
    }

    pub fn mul(a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        for (&ka, &ca) in a {
            for (&kb, &cb) in b {
                // Nibbles never overflow: total degree stays <= MAX_EXP
                // per variable for the degrees this pipeline handles.
                add_term(&mut out, ka + kb, ca * cb);
            }
        }
        out
    }
}

/// The tableau-sum Schur polynomial in packed form, cached per
/// `(lambda, n)`: the peeling loop requests the same summands for every
/// product of a given degree.
fn packed_schur(lambda: &Partition, n: usize) -> packed::Poly {
    use std::cell::RefCell;
    use std::collections::HashMap;
    thread_local! {
        static CACHE: RefCell<HashMap<(Partition, usize), packed::Poly>> =
            RefCell::new(HashMap::new());
    }
    CACHE.with(|cache| {
        if let Some(p) = cache.borrow().get(&(lambda.clone(), n)) {
            return p.clone();
        }
        let mut poly = packed::Poly::new();
        for t in enumerate_cst(&SkewShape::straight(lambda.clone()), n, None) {
            packed::add_term(&mut poly, packed::pack(&t.weight()), 1);
        }
        cache
            .borrow_mut()
            .insert((lambda.clone(), n), poly.clone());
        poly
    })
}

/// Expand the product `s_mu * s_nu` in the Schur basis by multiplying
/// the tableau-sum polynomials and greedily peeling leading monomials.
///
/// Requires `n >= |mu| + |nu|` variables so that no Schur function of
/// the product degree truncates to zero. A negative coefficient during
/// peeling signals a bug and is reported as an error.
pub fn schur_product_expand(mu: &Partition, nu: &Partition, n: usize) -> Result<SchurExpansion> {
    let degree = mu.size() + nu.size();
    if n < degree {
        return Err(Error::BadInput(format!(
            "need n >= |mu| + |nu| = {degree}, got {n}"
        )));
    }
    if n > packed::MAX_VARS || degree > packed::MAX_EXP {
        return Err(Error::BoundExceeded(format!(
            "product expansion supports n <= {} and degree <= {}",
            packed::MAX_VARS,
            packed::MAX_EXP
        )));
    }
    let mut rem = packed::mul(&packed_schur(mu, n), &packed_schur(nu, n));
    let mut out = SchurExpansion::new();
    while let Some((&key, &coeff)) = rem.last_key_value() {
        // The lex-leading exponent of a symmetric polynomial is weakly
        // decreasing, hence a partition.
        let exps = packed::unpack(key, n);
        if !exps.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InexactQuotient(format!(
                "leading exponent {exps:?} is not a partition"
            )));
        }
        let lambda = Partition::new(exps.into_iter().take_while(|&v| v > 0).collect())?;
        if coeff < 0 {
            return Err(Error::InexactQuotient(format!(
                "peeling produced negative coefficient {coeff} at {lambda}"
            )));
        }
        for (&k, &c) in packed_schur(&lambda, n).iter() {
            packed::add_term(&mut rem, k, -coeff * c);
        }
        out.insert(lambda, coeff as u64);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::hook_content_dim;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mono(exps: &[i64]) -> MultiLaurent {
        MultiLaurent::monomial(exps.to_vec(), Rational::one())
    }

    #[test]
    fn tableau_sum_small_cases() {
        // s_(1,1)(x1,x2) = x1 x2
        assert_eq!(schur_tableau_sum(&p(&[1, 1]), 2), mono(&[1, 1]));
        // s_(2)(x1,x2) = x1^2 + x1 x2 + x2^2
        let s2 = mono(&[2, 0]).add(&mono(&[1, 1])).add(&mono(&[0, 2]));
        assert_eq!(schur_tableau_sum(&p(&[2]), 2), s2);
        // too many rows: zero
        assert!(schur_tableau_sum(&p(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn bialternant_small_cases() {
        let s1 = schur_bialternant(&p(&[1]), 2).unwrap();
        assert_eq!(s1, mono(&[1, 0]).add(&mono(&[0, 1])));
        // s_(2,1)(x1,x2) = x1^2 x2 + x1 x2^2
        let s21 = schur_bialternant(&p(&[2, 1]), 2).unwrap();
        assert_eq!(s21, mono(&[2, 1]).add(&mono(&[1, 2])));
    }

    #[test]
    fn bialternant_matches_tableau_sum() {
        for n in 1..=3 {
            for size in 0..=6 {
                for lambda in Partition::all(size) {
                    if lambda.rows() > n {
                        continue;
                    }
                    assert_eq!(
                        schur_bialternant(&lambda, n).unwrap(),
                        schur_tableau_sum(&lambda, n),
                        "lambda = {lambda}, n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn bialternant_two_one_in_three_vars_has_mass_eight() {
        let s = schur_bialternant(&p(&[2, 1]), 3).unwrap();
        assert_eq!(s, schur_tableau_sum(&p(&[2, 1]), 3));
        // 8 monomials counted with multiplicity: 7 distinct terms, with
        // x1 x2 x3 appearing twice.
        assert_eq!(s.coeff_mass(), crate::exact::rat(8));
        assert_eq!(s.num_terms(), 7);
        assert_eq!(s.coeff(&[1, 1, 1]), crate::exact::rat(2));
    }

    #[test]
    fn schur_is_symmetric_under_adjacent_swaps() {
        for lambda in [p(&[2, 1]), p(&[3, 1]), p(&[2, 2, 1])] {
            let s = schur_tableau_sum(&lambda, 3);
            for i in 0..2 {
                assert_eq!(s.swap_vars(i, i + 1), s, "swap {i} for {lambda}");
            }
        }
    }

    #[test]
    fn kostka_examples() {
        for lambda in Partition::all(5) {
            assert_eq!(kostka(&lambda, lambda.parts()).unwrap(), 1, "K_(l,l) = 1");
        }
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p(&[1, 1]), &[2]).unwrap(), 0);
        assert!(kostka(&p(&[2]), &[1]).is_err());
        // Weights are compositions: reordering may change nothing for
        // Kostka numbers of straight shapes, but the call accepts any order.
        assert_eq!(kostka(&p(&[2, 1]), &[1, 2]).unwrap(), 1);
    }

    #[test]
    fn large_shape_admits_composition_weight() {
        // The shape (55422211) has column strict fillings of weight
        // (33323122111); weights are compositions, not partitions.
        let lam = Partition::parse("5,5,4,2,2,2,1,1").unwrap();
        let weight = [3, 3, 3, 2, 3, 1, 2, 2, 1, 1, 1];
        assert!(kostka(&lam, &weight).unwrap() >= 1);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(lr_coeff(&p(&[3]), &p(&[1]), &p(&[1, 1])).unwrap(), 0);
        for lambda in Partition::all(4) {
            assert_eq!(
                lr_coeff(&lambda, &Partition::empty(), &lambda).unwrap(),
                1,
                "c^l_(0,l) = 1"
            );
        }
        assert!(lr_coeff(&p(&[1]), &p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn product_expand_examples() {
        let e = schur_product_expand(&p(&[1]), &p(&[1]), 2).unwrap();
        assert_eq!(e.coeff(&p(&[2])), 1);
        assert_eq!(e.coeff(&p(&[1, 1])), 1);
        assert_eq!(e.len(), 2);

        let e = schur_product_expand(&p(&[1]), &p(&[2]), 3).unwrap();
        assert_eq!(e.coeff(&p(&[3])), 1);
        assert_eq!(e.coeff(&p(&[2, 1])), 1);
        assert_eq!(e.len(), 2);

        for lambda in Partition::all(3) {
            let e = schur_product_expand(&lambda, &Partition::empty(), 3).unwrap();
            assert_eq!(e.coeff(&lambda), 1);
            assert_eq!(e.len(), 1);
        }
    }

    #[test]
    fn product_expansion_matches_lr_rule() {
        for a in 0..=3 {
            for b in 0..=3usize {
                let n = (a + b).max(1);
                for mu in Partition::all(a) {
                    for nu in Partition::all(b) {
                        let expansion = schur_product_expand(&mu, &nu, n).unwrap();
                        for lambda in Partition::all(a + b) {
                            let by_rule = if mu.contained_in(&lambda) {
                                lr_coeff(&lambda, &mu, &nu).unwrap()
                            } else {
                                0
                            };
                            assert_eq!(
                                expansion.coeff(&lambda),
                                by_rule,
                                "mu = {mu}, nu = {nu}, lambda = {lambda}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_is_symmetric_in_mu_nu() {
        for a in 0..=3 {
            for b in 0..=3usize {
                for mu in Partition::all(a) {
                    for nu in Partition::all(b) {
                        for lambda in Partition::all(a + b) {
                            let c1 = if mu.contained_in(&lambda) {
                                lr_coeff(&lambda, &mu, &nu).unwrap()
                            } else {
                                0
                            };
                            let c2 = if nu.contained_in(&lambda) {
                                lr_coeff(&lambda, &nu, &mu).unwrap()
                            } else {
                                0
                            };
                            assert_eq!(c1, c2, "lambda = {lambda}, mu = {mu}, nu = {nu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_identity_under_products() {
        // sum_l c^l_(mu,nu) dim_n(l) = dim_n(mu) dim_n(nu)
        let n = 6;
        for (mu, nu) in [(p(&[2]), p(&[1, 1])), (p(&[2, 1]), p(&[1])), (p(&[2]), p(&[2]))] {
            let lhs: num::BigInt = schur_product_expand(&mu, &nu, n)
                .unwrap()
                .iter()
                .map(|(l, c)| hook_content_dim(l, n).unwrap() * num::BigInt::from(*c))
                .sum();
            let rhs = hook_content_dim(&mu, n).unwrap() * hook_content_dim(&nu, n).unwrap();
            assert_eq!(lhs, rhs, "mu = {mu}, nu = {nu}");
        }
    }
}
