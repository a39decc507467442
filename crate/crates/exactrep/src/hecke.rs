//! The Iwahori-Hecke algebra of type A over Laurent polynomials in `q`:
//! exact structural multiplication on the `T_w` basis, the `q`-character
//! formula on standard tableaux, the semisimplicity criterion, and the
//! numeric irreducible data of the complex reflection groups `G(r,p,n)`.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};
use serde::Serialize;

use crate::exact::{LaurentPoly, Rational, Var};
use crate::shapes::{enumerate_syt, factorial, hook_dim, Partition};
use crate::symgroup::{block_boundaries, roichman_profile, Permutation};
use crate::{Error, Result};

pub use crate::symgroup::gamma_permutation;

/// An element of `H_n(q)`: a finite map from permutations to Laurent
/// polynomial coefficients, all on the same `n`, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `T_w`.
    pub fn basis(w: Permutation) -> Self {
        let n = w.size();
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentPoly::one(Var::Q));
        HeckeElement { n, terms }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    /// The generator `T_i = T_(s_i)`.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::basis(Permutation::adjacent(n, i))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, LaurentPoly> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(Var::Q))
    }

    pub fn add_term(&mut self, w: Permutation, c: LaurentPoly) {
        assert_eq!(w.size(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k.mul(c));
        }
        out
    }

    /// Substitute a rational value for `q` in every coefficient,
    /// returning the specialized element as permutation -> rational.
    pub fn specialize(&self, q: &Rational) -> BTreeMap<Permutation, Rational> {
        self.terms
            .iter()
            .filter_map(|(w, c)| {
                let v = c.eval(q);
                (!v.is_zero()).then(|| (w.clone(), v))
            })
            .collect()
    }
}

/// Left multiplication by the generator `T_s`:
/// `T_s T_w = T_{sw}` when the length goes up, and
/// `(q-1) T_w + q T_{sw}` when it goes down.
fn left_mul_generator(n: usize, i: usize, el: &HeckeElement) -> HeckeElement {
    let s = Permutation::adjacent(n, i);
    let q = LaurentPoly::var(Var::Q);
    let q_minus_1 = q.sub(&LaurentPoly::one(Var::Q));
    let mut out = HeckeElement::zero(n);
    for (w, c) in &el.terms {
        let sw = s.compose(w);
        if sw.num_inversions() > w.num_inversions() {
            out.add_term(sw, c.clone());
        } else {
            out.add_term(w.clone(), c.mul(&q_minus_1));
            out.add_term(sw, c.mul(&q));
        }
    }
    out
}

/// Structural product in `H_n(q)`: each `T_u` on the left is decomposed
/// along a reduced word and applied generator by generator. The result
/// is independent of the chosen reduced words.
pub fn hecke_mul(a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    if a.n != b.n {
        return Err(Error::SizeMismatch(format!(
            "H_{}(q) vs H_{}(q)",
            a.n, b.n
        )));
    }
    let mut out = HeckeElement::zero(a.n);
    for (u, cu) in &a.terms {
        let mut acc = b.clone();
        for &i in u.reduced_word().iter().rev() {
            acc = left_mul_generator(a.n, i, &acc);
        }
        for (w, c) in acc.terms {
            out.add_term(w, c.mul(cu));
        }
    }
    Ok(out)
}

/// `T_w` built from a generator word (not necessarily reduced), by
/// repeated left multiplication.
pub fn product_of_generators(n: usize, word: &[usize]) -> Result<HeckeElement> {
    let mut acc = HeckeElement::one(n);
    for &i in word.iter().rev() {
        acc = left_mul_generator(n, i, &acc);
    }
    Ok(acc)
}

/// All reduced words of `w`, by peeling left descents.
pub fn all_reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    let n = w.size();
    let len = w.num_inversions();
    let mut out = Vec::new();
    for i in 1..n {
        let s = Permutation::adjacent(n, i);
        let sw = s.compose(w);
        if sw.num_inversions() < len {
            for mut tail in all_reduced_words(&sw) {
                let mut word = vec![i];
                word.append(&mut tail);
                out.push(word);
            }
        }
    }
    out
}

/// The Roichman `q`-character of `H_k(q)` at `T_{gamma_mu}`: the weight
/// sum over standard tableaux with factors in `{-1, 0, q}`. At `q = 1`
/// it specializes to the symmetric group character.
pub fn hecke_roichman_character(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!(
            "|lambda| = {} vs |mu| = {}",
            lambda.size(),
            mu.size()
        )));
    }
    let b = block_boundaries(mu);
    let mut total = LaurentPoly::zero(Var::Q);
    for t in enumerate_syt(lambda)? {
        if let Some((descents, free)) = roichman_profile(&t, &b) {
            let sign = if descents % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            total = total.add(&LaurentPoly::monomial(Var::Q, free as i64, sign));
        }
    }
    Ok(total)
}

/// The full `q`-character table of `H_k(q)`: rows `lambda`, columns
/// `T_{gamma_mu}`, partitions in reverse-lexicographic order.
pub fn hecke_character_table(k: usize) -> Result<(Vec<Partition>, Vec<Vec<LaurentPoly>>)> {
    let parts = Partition::all(k);
    let mut rows = Vec::with_capacity(parts.len());
    for lambda in &parts {
        let mut row = Vec::with_capacity(parts.len());
        for mu in &parts {
            row.push(hecke_roichman_character(lambda, mu)?);
        }
        rows.push(row);
    }
    Ok((parts, rows))
}

/// An exact deformation-parameter value: either a rational number or a
/// symbolically tagged primitive root of unity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QValue {
    Rational(Rational),
    /// A primitive `j`-th root of unity (`j = 1` means `q = 1`,
    /// `j = 2` means `q = -1`).
    PrimitiveRoot(u64),
}

/// Semisimplicity of `H_n(q)`: fails exactly at `q = 0` and at `q` a
/// primitive `j`-th root of unity with `2 <= j <= n`.
pub fn hecke_semisimple(q: &QValue, n: usize) -> bool {
    match q {
        QValue::Rational(v) => {
            if v.is_zero() {
                return false;
            }
            // The only rational roots of unity are 1 (a primitive 1st
            // root, outside the window) and -1 (a primitive 2nd root).
            !(*v == -Rational::one() && n >= 2)
        }
        QValue::PrimitiveRoot(j) => !(2..=n as u64).contains(j),
    }
}

/// Index of an irreducible of `G(r,1,n)`: an `r`-tuple of partitions
/// with total size `n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct GrpnIrrepIndex(pub Vec<Partition>);

impl std::fmt::Display for GrpnIrrepIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| format!("({p})")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Numeric data for `G(r,p,n)`.
#[derive(Clone, Debug, Serialize)]
pub struct GrpnData {
    pub r: usize,
    pub p: usize,
    pub n: usize,
    pub order: BigInt,
    /// Present only for `p = 1`, where the classification by `r`-tuples
    /// of partitions applies directly.
    pub irreps: Option<Vec<(GrpnIrrepIndex, BigInt)>>,
}

/// Order and (for `p = 1`) irreducible dimensions of `G(r,p,n)`.
///
/// The order is `d r^(n-1) n!` with `d = r/p`. For `p = 1` the
/// irreducibles are indexed by `r`-tuples of partitions of total size
/// `n`, with dimension `n! / prod of all hooks`, i.e. the multinomial
/// coefficient times the product of the tuple's hook dimensions.
pub fn grpn_data(r: usize, p: usize, n: usize) -> Result<GrpnData> {
    if r == 0 || p == 0 || n == 0 {
        return Err(Error::BadInput("r, p, n must be positive".into()));
    }
    if r % p != 0 {
        return Err(Error::BadInput(format!("p = {p} does not divide r = {r}")));
    }
    let d = r / p;
    let mut order = BigInt::from(d);
    for _ in 0..n - 1 {
        order *= BigInt::from(r);
    }
    order *= factorial(n);

    let irreps = if p == 1 {
        let mut list = Vec::new();
        for tuple in partition_tuples(r, n) {
            let mut dim = factorial(n);
            for lam in &tuple {
                // divide by the hooks of this component: n!/prod h =
                // multinomial * prod hook_dim, assembled via exact division
                let size_fact = factorial(lam.size());
                dim = dim / &size_fact * hook_dim(lam)?;
            }
            list.push((GrpnIrrepIndex(tuple), dim));
        }
        list.sort();
        Some(list)
    } else {
        None
    };
    Ok(GrpnData {
        r,
        p,
        n,
        order,
        irreps,
    })
}

/// All `r`-tuples of partitions with total size `n`.
fn partition_tuples(r: usize, n: usize) -> Vec<Vec<Partition>> {
    fn rec(slots: usize, remaining: usize, prefix: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if slots == 1 {
            for lam in Partition::all(remaining) {
                prefix.push(lam);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for size in 0..=remaining {
            for lam in Partition::all(size) {
                prefix.push(lam);
                rec(slots - 1, remaining - size, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(r, n, &mut Vec::new(), &mut out);
    out
}

/// The presentation data of the cyclotomic algebra `H_{r,p,n}`,
/// recorded as documentation: the defining relations of `H_{r,1,n}` and
/// the distinguished subalgebra generators. No normal form is computed.
#[derive(Clone, Debug, Serialize)]
pub struct HrpnPresentation {
    pub r: usize,
    pub p: usize,
    pub n: usize,
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub subalgebra_generators: Vec<String>,
}

pub fn hrpn_presentation(r: usize, p: usize, n: usize) -> Result<HrpnPresentation> {
    if r % p != 0 {
        return Err(Error::BadInput(format!("p = {p} does not divide r = {r}")));
    }
    let generators = (1..=n).map(|i| format!("T{i}")).collect();
    let cyclotomic: String = (0..r)
        .map(|i| format!("(T1 - u{i})"))
        .collect::<Vec<_>>()
        .join("");
    let relations = vec![
        "Ti*Tj = Tj*Ti for |i-j| > 1".to_string(),
        "Ti*T(i+1)*Ti = T(i+1)*Ti*T(i+1) for 2 <= i <= n-1".to_string(),
        "T1*T2*T1*T2 = T2*T1*T2*T1".to_string(),
        format!("{cyclotomic} = 0"),
        "(Ti - q)(Ti + q^-1) = 0 for 2 <= i <= n".to_string(),
    ];
    let mut subalgebra_generators = vec![format!("a0 = T1^{p}"), "a1 = T1^-1*T2*T1".to_string()];
    for i in 2..=n {
        subalgebra_generators.push(format!("a{i} = T{i}"));
    }
    Ok(HrpnPresentation {
        r,
        p,
        n,
        generators,
        relations,
        subalgebra_generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::symgroup::mn_character;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn qp(terms: &[(i64, i64)]) -> LaurentPoly {
        let mut acc = LaurentPoly::zero(Var::Q);
        for &(e, c) in terms {
            acc = acc.add(&LaurentPoly::monomial(Var::Q, e, rat(c)));
        }
        acc
    }

    #[test]
    fn quadratic_relation() {
        // T1 * T1 = (q-1) T1 + q T_id
        let t1 = HeckeElement::generator(3, 1);
        let sq = hecke_mul(&t1, &t1).unwrap();
        assert_eq!(sq.coeff(&Permutation::adjacent(3, 1)), qp(&[(1, 1), (0, -1)]));
        assert_eq!(sq.coeff(&Permutation::identity(3)), qp(&[(1, 1)]));
        assert_eq!(sq.terms().len(), 2);
    }

    #[test]
    fn identity_is_neutral() {
        let t1 = HeckeElement::generator(4, 2);
        let id = HeckeElement::one(4);
        assert_eq!(hecke_mul(&id, &t1).unwrap(), t1);
        assert_eq!(hecke_mul(&t1, &id).unwrap(), t1);
    }

    #[test]
    fn braid_relation_as_elements() {
        let t1 = HeckeElement::generator(3, 1);
        let t2 = HeckeElement::generator(3, 2);
        let lhs = hecke_mul(&hecke_mul(&t1, &t2).unwrap(), &t1).unwrap();
        let rhs = hecke_mul(&hecke_mul(&t2, &t1).unwrap(), &t2).unwrap();
        assert_eq!(lhs, rhs);
        // Both sides are the basis element of the longest element of S_3.
        let w0 = Permutation::from_images(vec![2, 1, 0]).unwrap();
        assert_eq!(lhs, HeckeElement::basis(w0));
    }

    #[test]
    fn reduced_word_independence_n4() {
        for w in Permutation::all(4) {
            let words = all_reduced_words(&w);
            assert!(!words.is_empty());
            let reference = product_of_generators(4, &words[0]).unwrap();
            assert_eq!(reference, HeckeElement::basis(w.clone()));
            for word in &words[1..] {
                assert_eq!(
                    product_of_generators(4, word).unwrap(),
                    reference,
                    "word {word:?} of {w}"
                );
            }
        }
    }

    #[test]
    fn associativity_sampled_n4() {
        let all = Permutation::all(4);
        for (i, u) in all.iter().enumerate().step_by(5) {
            for (j, v) in all.iter().enumerate().step_by(4) {
                for w in all.iter().skip((i + j) % 3).step_by(6) {
                    let (eu, ev, ew) = (
                        HeckeElement::basis(u.clone()),
                        HeckeElement::basis(v.clone()),
                        HeckeElement::basis(w.clone()),
                    );
                    let left = hecke_mul(&hecke_mul(&eu, &ev).unwrap(), &ew).unwrap();
                    let right = hecke_mul(&eu, &hecke_mul(&ev, &ew).unwrap()).unwrap();
                    assert_eq!(left, right, "u = {u}, v = {v}, w = {w}");
                }
            }
        }
    }

    #[test]
    fn q_one_specialization_is_group_multiplication() {
        let all = Permutation::all(4);
        let one = rat(1);
        for u in &all {
            for v in &all {
                let prod = hecke_mul(&HeckeElement::basis(u.clone()), &HeckeElement::basis(v.clone()))
                    .unwrap();
                let spec = prod.specialize(&one);
                assert_eq!(spec.len(), 1, "u = {u}, v = {v}");
                assert_eq!(spec[&u.compose(v)], one, "u = {u}, v = {v}");
            }
        }
    }

    #[test]
    fn q_character_examples() {
        // Single-row shapes give powers of q: lambda = (2), mu = (2) -> q.
        assert_eq!(
            hecke_roichman_character(&p(&[2]), &p(&[2])).unwrap(),
            qp(&[(1, 1)])
        );
        // Sign representation at the 2-cycle: -1.
        assert_eq!(
            hecke_roichman_character(&p(&[1, 1]), &p(&[2])).unwrap(),
            qp(&[(0, -1)])
        );
        // chi^(2,1)(T_(s1)) = q - 1, a classical value.
        assert_eq!(
            hecke_roichman_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(),
            qp(&[(1, 1), (0, -1)])
        );
        // Trivial module: T_(gamma_mu) acts by q^(length).
        for mu in Partition::all(4) {
            let expect = qp(&[(4 - mu.rows() as i64, 1)]);
            assert_eq!(
                hecke_roichman_character(&p(&[4]), &mu).unwrap(),
                expect,
                "mu = {mu}"
            );
        }
    }

    #[test]
    fn q_characters_specialize_to_symmetric_group() {
        for k in 1..=5 {
            for lambda in Partition::all(k) {
                for mu in Partition::all(k) {
                    let at_one = hecke_roichman_character(&lambda, &mu).unwrap().eval(&rat(1));
                    assert_eq!(
                        at_one,
                        rat(mn_character(&lambda, &mu).unwrap()),
                        "lambda = {lambda}, mu = {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn basis_count_is_factorial() {
        // dim H_n(q) = n!: the basis enumeration is the permutation list.
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(5).len(), 120);
    }

    #[test]
    fn semisimplicity_values() {
        use QValue::*;
        assert!(hecke_semisimple(&Rational(rat(1)), 10));
        assert!(!hecke_semisimple(&Rational(rat(0)), 2));
        assert!(!hecke_semisimple(&Rational(rat(-1)), 2));
        assert!(hecke_semisimple(&Rational(rat(-1)), 1));
        assert!(hecke_semisimple(&Rational(rat(2)), 100));
        assert!(hecke_semisimple(&Rational(crate::exact::ratio(3, 7)), 9));
        assert!(hecke_semisimple(&PrimitiveRoot(1), 5));
        assert!(!hecke_semisimple(&PrimitiveRoot(2), 5));
        assert!(!hecke_semisimple(&PrimitiveRoot(5), 5));
        assert!(hecke_semisimple(&PrimitiveRoot(6), 5));
    }

    #[test]
    fn grpn_symmetric_group_case() {
        let data = grpn_data(1, 1, 4).unwrap();
        assert_eq!(data.order, BigInt::from(24));
        let irreps = data.irreps.unwrap();
        assert_eq!(irreps.len(), Partition::all(4).len());
        for (idx, dim) in &irreps {
            assert_eq!(*dim, hook_dim(&idx.0[0]).unwrap());
        }
    }

    #[test]
    fn grpn_hyperoctahedral_case() {
        // G(2,1,2): order 8, five irreps indexed by pairs of partitions
        // of total size 2, dims 1,1,2,1,1.
        let data = grpn_data(2, 1, 2).unwrap();
        assert_eq!(data.order, BigInt::from(8));
        let irreps = data.irreps.unwrap();
        assert_eq!(irreps.len(), 5);
        let sum_sq: BigInt = irreps.iter().map(|(_, d)| d * d).sum();
        assert_eq!(sum_sq, BigInt::from(8));
    }

    #[test]
    fn grpn_dimension_sum_identity() {
        for r in 1..=3 {
            for n in 1..=4 {
                let data = grpn_data(r, 1, n).unwrap();
                let sum_sq: BigInt = data
                    .irreps
                    .as_ref()
                    .unwrap()
                    .iter()
                    .map(|(_, d)| d * d)
                    .sum();
                assert_eq!(sum_sq, data.order, "r = {r}, n = {n}");
            }
        }
    }

    #[test]
    fn grpn_rejects_bad_divisor() {
        assert!(grpn_data(3, 2, 2).is_err());
        let h = grpn_data(4, 2, 2).unwrap();
        assert_eq!(h.order, BigInt::from(2 * 4 * 2));
        assert!(h.irreps.is_none());
    }

    #[test]
    fn hrpn_presentation_is_recorded() {
        let pres = hrpn_presentation(4, 2, 3).unwrap();
        assert_eq!(pres.generators.len(), 3);
        assert_eq!(pres.relations.len(), 5);
        assert_eq!(pres.subalgebra_generators[0], "a0 = T1^2");
        assert!(hrpn_presentation(3, 2, 3).is_err());
    }
}
