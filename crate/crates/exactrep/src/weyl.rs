//! Classical root systems (types A, B, C, D) in ambient coordinates,
//! dominant integral weights, the Weyl dimension formula, and Weyl
//! characters by exact alternant division.
//!
//! All weight coordinates are half-integers stored as doubled integers,
//! so every computation stays in exact integer/rational arithmetic. Weyl
//! group elements are signed coordinate permutations, which compose
//! cheaply and have exact determinants.

use std::collections::HashSet;

use num::{BigInt, One, Signed};
use serde::Serialize;

use crate::exact::{MultiLaurent, Rational};
use crate::shapes::Partition;
use crate::{Error, Result};

/// Largest rank admitted to Weyl group enumeration (and hence to
/// character computation); the dimension formula has no such bound.
pub const WEYL_GROUP_RANK_BOUND: usize = 3;

/// Classical Cartan type.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl CartanType {
    pub fn parse(s: &str) -> Result<CartanType> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(CartanType::A),
            "b" => Ok(CartanType::B),
            "c" => Ok(CartanType::C),
            "d" => Ok(CartanType::D),
            other => Err(Error::BadInput(format!(
                "unsupported type {other:?} (expected one of A, B, C, D)"
            ))),
        }
    }
}

impl std::fmt::Display for CartanType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
        };
        write!(f, "{s}")
    }
}

/// A vector in the ambient Euclidean space, with every coordinate
/// doubled so that half-integer weights stay integral.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Weight {
    doubled: Vec<i64>,
}

impl Weight {
    /// From true (integer) coordinates.
    pub fn from_integers(coords: &[i64]) -> Weight {
        Weight {
            doubled: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    /// From doubled coordinates (half-integers times two).
    pub fn from_doubled(doubled: Vec<i64>) -> Weight {
        Weight { doubled }
    }

    pub fn zero(dim: usize) -> Weight {
        Weight {
            doubled: vec![0; dim],
        }
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn dim(&self) -> usize {
        self.doubled.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            doubled: self
                .doubled
                .iter()
                .zip(&other.doubled)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Four times the true inner product (the doubled-coordinate dot
    /// product); only ratios of these are ever used.
    pub fn dot4(&self, other: &Weight) -> i64 {
        self.doubled
            .iter()
            .zip(&other.doubled)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Render as comma-separated exact coordinates, e.g. `"3/2,1/2"`.
    pub fn display_coords(&self) -> String {
        self.doubled
            .iter()
            .map(|&d| {
                if d % 2 == 0 {
                    format!("{}", d / 2)
                } else {
                    format!("{d}/2")
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// A signed coordinate permutation `w(e_j) = signs[j] * e_{perm[j]}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPerm {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// Apply to a weight in doubled coordinates.
    pub fn apply(&self, w: &Weight) -> Weight {
        let mut out = vec![0i64; w.dim()];
        for (j, &v) in w.doubled.iter().enumerate() {
            out[self.perm[j]] = i64::from(self.signs[j]) * v;
        }
        Weight { doubled: out }
    }

    /// Composition `(self o other)(v) = self(other(v))`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut signs = vec![1i8; n];
        for j in 0..n {
            perm[j] = self.perm[other.perm[j]];
            signs[j] = other.signs[j] * self.signs[other.perm[j]];
        }
        SignedPerm { perm, signs }
    }

    /// Determinant: the permutation sign times the product of the
    /// coordinate signs.
    pub fn det(&self) -> i64 {
        let n = self.perm.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.perm[i] > self.perm[j] {
                    inv += 1;
                }
            }
        }
        let perm_sign = if inv % 2 == 0 { 1i64 } else { -1 };
        let sign_product: i64 = self.signs.iter().map(|&s| i64::from(s)).product();
        perm_sign * sign_product
    }
}

/// A classical root system realized in ambient coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ctype: CartanType,
    rank: usize,
    dim: usize,
    positive_roots: Vec<Weight>,
    simple_roots: Vec<Weight>,
    fundamental_weights: Vec<Weight>,
    rho: Weight,
    simple_reflections: Vec<SignedPerm>,
}

impl RootSystem {
    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Ambient dimension (`rank + 1` for type A, `rank` otherwise).
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn simple_reflections(&self) -> &[SignedPerm] {
        &self.simple_reflections
    }

    /// `<w, alpha_i^vee>` as an exact rational, for the `i`-th simple root
    /// (0-based).
    pub fn pairing(&self, w: &Weight, i: usize) -> Rational {
        let alpha = &self.simple_roots[i];
        Rational::new(
            BigInt::from(2 * w.dot4(alpha)),
            BigInt::from(alpha.dot4(alpha)),
        )
    }

    /// Dominant integral test: all simple pairings are nonnegative
    /// integers.
    pub fn is_dominant_integral(&self, w: &Weight) -> bool {
        (0..self.rank).all(|i| {
            let p = self.pairing(w, i);
            p.is_integer() && !p.is_negative()
        })
    }

    /// The weight with the given fundamental-weight coefficients.
    pub fn weight_from_coefficients(&self, coeffs: &[i64]) -> Result<Weight> {
        if coeffs.len() != self.rank {
            return Err(Error::BadInput(format!(
                "expected {} coefficients, got {}",
                self.rank,
                coeffs.len()
            )));
        }
        let mut w = Weight::zero(self.dim);
        for (c, omega) in coeffs.iter().zip(&self.fundamental_weights) {
            let scaled = Weight {
                doubled: omega.doubled.iter().map(|v| v * c).collect(),
            };
            w = w.add(&scaled);
        }
        Ok(w)
    }
}

fn unit(dim: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; dim];
    v[i] = 1;
    v
}

/// Build the standard ambient-coordinate realization of a classical root
/// system.
pub fn build_root_system(ctype: CartanType, rank: usize) -> Result<RootSystem> {
    if rank < 1 {
        return Err(Error::BadInput("rank must be at least 1".into()));
    }
    if ctype == CartanType::D && rank < 2 {
        return Err(Error::BadInput("type D needs rank >= 2".into()));
    }
    let dim = match ctype {
        CartanType::A => rank + 1,
        _ => rank,
    };
    let e = |i: usize| unit(dim, i);

    let mut positive = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            // e_i - e_j for all types
            let mut diff = e(i);
            diff[j] = -1;
            positive.push(Weight::from_integers(&diff));
            if ctype != CartanType::A {
                let mut sum = e(i);
                sum[j] = 1;
                positive.push(Weight::from_integers(&sum));
            }
        }
    }
    match ctype {
        CartanType::B => {
            for i in 0..dim {
                positive.push(Weight::from_integers(&e(i)));
            }
        }
        CartanType::C => {
            for i in 0..dim {
                let mut v = e(i);
                v[i] = 2;
                positive.push(Weight::from_integers(&v));
            }
        }
        _ => {}
    }

    let mut simple = Vec::new();
    for i in 0..rank.min(dim - 1) {
        let mut v = e(i);
        v[i + 1] = -1;
        simple.push(Weight::from_integers(&v));
    }
    match ctype {
        CartanType::A => {}
        CartanType::B => simple.push(Weight::from_integers(&e(dim - 1))),
        CartanType::C => {
            let mut v = e(dim - 1);
            v[dim - 1] = 2;
            simple.push(Weight::from_integers(&v));
        }
        CartanType::D => {
            let mut v = e(dim - 2);
            v[dim - 1] = 1;
            simple.push(Weight::from_integers(&v));
        }
    }

    // rho = half the sum of the positive roots; in doubled coordinates
    // that is half the (even) doubled sum.
    let mut rho_doubled = vec![0i64; dim];
    for alpha in &positive {
        for (acc, v) in rho_doubled.iter_mut().zip(alpha.doubled()) {
            *acc += v;
        }
    }
    let rho = Weight::from_doubled(rho_doubled.iter().map(|v| v / 2).collect());

    // Fundamental weights omega_i with <omega_i, alpha_j^vee> = delta_ij.
    let mut fundamental = Vec::new();
    let prefix = |i: usize| -> Vec<i64> {
        (0..dim).map(|j| i64::from(j <= i)).collect()
    };
    match ctype {
        CartanType::A => {
            for i in 0..rank {
                fundamental.push(Weight::from_integers(&prefix(i)));
            }
        }
        CartanType::B => {
            for i in 0..rank - 1 {
                fundamental.push(Weight::from_integers(&prefix(i)));
            }
            fundamental.push(Weight::from_doubled(vec![1; dim]));
        }
        CartanType::C => {
            for i in 0..rank {
                fundamental.push(Weight::from_integers(&prefix(i)));
            }
        }
        CartanType::D => {
            for i in 0..rank.saturating_sub(2) {
                fundamental.push(Weight::from_integers(&prefix(i)));
            }
            let mut minus_last = vec![1i64; dim];
            minus_last[dim - 1] = -1;
            fundamental.push(Weight::from_doubled(minus_last));
            fundamental.push(Weight::from_doubled(vec![1; dim]));
        }
    }

    // Simple reflections as signed coordinate permutations.
    let mut reflections = Vec::new();
    for i in 0..rank.min(dim - 1) {
        let mut s = SignedPerm::identity(dim);
        s.perm.swap(i, i + 1);
        reflections.push(s);
    }
    match ctype {
        CartanType::A => {}
        CartanType::B | CartanType::C => {
            let mut s = SignedPerm::identity(dim);
            s.signs[dim - 1] = -1;
            reflections.push(s);
        }
        CartanType::D => {
            let mut s = SignedPerm::identity(dim);
            s.perm.swap(dim - 2, dim - 1);
            s.signs[dim - 2] = -1;
            s.signs[dim - 1] = -1;
            reflections.push(s);
        }
    }

    let rs = RootSystem {
        ctype,
        rank,
        dim,
        positive_roots: positive,
        simple_roots: simple,
        fundamental_weights: fundamental,
        rho,
        simple_reflections: reflections,
    };
    debug_assert!(rs.is_dominant_integral(&rs.rho));
    Ok(rs)
}

/// Enumerate the Weyl group as the closure of the simple reflections,
/// returning each element with its sign `epsilon(w) = det(w)`.
pub fn weyl_group_elements(rs: &RootSystem) -> Result<Vec<(SignedPerm, i64)>> {
    if rs.rank > WEYL_GROUP_RANK_BOUND {
        return Err(Error::BoundExceeded(format!(
            "Weyl group enumeration limited to rank <= {WEYL_GROUP_RANK_BOUND}, got {}",
            rs.rank
        )));
    }
    let id = SignedPerm::identity(rs.dim);
    let mut seen: HashSet<SignedPerm> = HashSet::from([id.clone()]);
    let mut order = vec![id];
    let mut frontier = order.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for s in &rs.simple_reflections {
                let ws = w.compose(s);
                if seen.insert(ws.clone()) {
                    order.push(ws.clone());
                    next.push(ws);
                }
            }
        }
        frontier = next;
    }
    Ok(order.into_iter().map(|w| (w.det(), w)).map(|(d, w)| (w, d)).collect())
}

/// Expected Weyl group order for each classical type.
pub fn weyl_group_order(ctype: CartanType, rank: usize) -> BigInt {
    let fact = crate::shapes::factorial(rank);
    match ctype {
        CartanType::A => crate::shapes::factorial(rank + 1),
        CartanType::B | CartanType::C => fact * BigInt::from(2).pow(rank as u32),
        CartanType::D => fact * BigInt::from(2).pow(rank as u32 - 1),
    }
}

/// Weyl dimension formula: the product over positive roots of
/// `<lambda + rho, alpha> / <rho, alpha>`, which must be a positive
/// integer for dominant integral `lambda`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    if lambda.dim() != rs.dim {
        return Err(Error::BadInput("weight dimension mismatch".into()));
    }
    if !rs.is_dominant_integral(lambda) {
        return Err(Error::BadInput(format!(
            "weight ({}) is not dominant integral",
            lambda.display_coords()
        )));
    }
    let shifted = lambda.add(rs.rho());
    let mut acc = Rational::one();
    for alpha in rs.positive_roots() {
        acc *= Rational::new(
            BigInt::from(shifted.dot4(alpha)),
            BigInt::from(rs.rho().dot4(alpha)),
        );
    }
    crate::exact::as_integer(&acc)
        .filter(|v| v.is_positive())
        .ok_or_else(|| Error::InexactQuotient(format!("Weyl dimension product {acc} not integral")))
}

/// The alternating orbit sum `sum_w epsilon(w) e^(w mu)` in the group
/// algebra of the weight lattice (doubled-coordinate exponents).
pub fn alternating_orbit_sum(
    elements: &[(SignedPerm, i64)],
    mu: &Weight,
    dim: usize,
) -> MultiLaurent {
    let mut out = MultiLaurent::zero(dim);
    for (w, sign) in elements {
        let exp = w.apply(mu);
        let coeff = if *sign > 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        out = out.add(&MultiLaurent::monomial(exp.doubled().to_vec(), coeff));
    }
    out
}

/// Weyl character formula: the exact quotient of the two alternating
/// sums. Exponent vectors of the result are weights of the module in
/// doubled coordinates; all coefficients are the (positive integral)
/// weight multiplicities.
pub fn weyl_character(rs: &RootSystem, lambda: &Weight) -> Result<MultiLaurent> {
    if !rs.is_dominant_integral(lambda) {
        return Err(Error::BadInput(format!(
            "weight ({}) is not dominant integral",
            lambda.display_coords()
        )));
    }
    let elements = weyl_group_elements(rs)?;
    let numerator = alternating_orbit_sum(&elements, &lambda.add(rs.rho()), rs.dim);
    let denominator = alternating_orbit_sum(&elements, rs.rho(), rs.dim);
    crate::exact::poly_divide_exact(&numerator, &denominator)
}

/// The Weyl denominator in product form,
/// `prod_(alpha > 0) (e^(alpha/2) - e^(-alpha/2))`, for the denominator
/// identity check.
pub fn denominator_product_form(rs: &RootSystem) -> MultiLaurent {
    let mut acc = MultiLaurent::one(rs.dim);
    for alpha in rs.positive_roots() {
        // alpha/2 in doubled coordinates is the true coordinate vector.
        let half: Vec<i64> = alpha.doubled().iter().map(|v| v / 2).collect();
        let neg: Vec<i64> = half.iter().map(|v| -v).collect();
        let factor = MultiLaurent::monomial(half, Rational::one())
            .sub(&MultiLaurent::monomial(neg, Rational::one()));
        acc = acc.mul(&factor);
    }
    acc
}

/// Type-A weight for a partition: ambient coordinates
/// `(lambda_1, ..., lambda_n)`.
pub fn weight_from_partition(lambda: &Partition, n: usize) -> Result<Weight> {
    if lambda.rows() > n {
        return Err(Error::BadInput(format!(
            "partition {lambda} has more than {n} rows"
        )));
    }
    let coords: Vec<i64> = (0..n).map(|i| lambda.part(i) as i64).collect();
    Ok(Weight::from_integers(&coords))
}

/// Serializable dump of the root system data (exact coordinate strings).
#[derive(Clone, Debug, Serialize)]
pub struct RootSystemDump {
    pub cartan_type: String,
    pub rank: usize,
    pub ambient_dim: usize,
    pub positive_roots: Vec<String>,
    pub simple_roots: Vec<String>,
    pub fundamental_weights: Vec<String>,
    pub rho: String,
    pub weyl_order: String,
}

pub fn dump_root_system(rs: &RootSystem) -> RootSystemDump {
    RootSystemDump {
        cartan_type: rs.ctype.to_string(),
        rank: rs.rank,
        ambient_dim: rs.dim,
        positive_roots: rs.positive_roots.iter().map(Weight::display_coords).collect(),
        simple_roots: rs.simple_roots.iter().map(Weight::display_coords).collect(),
        fundamental_weights: rs
            .fundamental_weights
            .iter()
            .map(Weight::display_coords)
            .collect(),
        rho: rs.rho.display_coords(),
        weyl_order: weyl_group_order(rs.ctype, rs.rank).to_string(),
    }
}
