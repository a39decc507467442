//! Verification suites: every closed formula in the crate is re-derived
//! from an independent oracle and the comparisons are packaged as
//! machine-readable reports.
//!
//! The known-ambiguity checks (`*.ledger.*`) each evaluate the competing
//! readings of a garbled printed formula and pass only when exactly one
//! reading survives, so the report records which reading is the working
//! one.

use std::time::Instant;

use num::{BigInt, One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{rat, ratio, LaurentPoly, MultiLaurent, Rational, Var};
use crate::shapes::{
    binomial, count_updown, enumerate_cst, enumerate_syt, factorial, hook_content_dim, hook_dim,
    updown_closed_form, Partition, SkewShape,
};
use crate::{diagram, glnrep, hecke, schur, symgroup, weyl};
use crate::{Error, Result};

/// Bounds that scale the suites; `quick` shrinks every default.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub nmax: Option<usize>,
    pub kmax: Option<usize>,
    pub quick: bool,
}

impl Bounds {
    fn n(&self, full: usize, quick: usize) -> usize {
        self.nmax.unwrap_or(if self.quick { quick } else { full })
    }

    fn k(&self, full: usize, quick: usize) -> usize {
        self.kmax.unwrap_or(if self.quick { quick } else { full })
    }
}

/// One verified check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: String,
    pub expected: String,
    pub actual: String,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// A suite report: overall pass iff every check passes.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
    pub wall_ms: u128,
}

struct Outcome {
    pass: bool,
    expected: String,
    actual: String,
}

fn outcome(pass: bool, expected: impl Into<String>, actual: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        expected: expected.into(),
        actual: actual.into(),
    })
}

fn equality_outcome(label: &str, failures: Vec<String>) -> Result<Outcome> {
    if failures.is_empty() {
        outcome(true, label, "all cases agree")
    } else {
        let shown = failures.iter().take(5).cloned().collect::<Vec<_>>().join("; ");
        outcome(
            false,
            label,
            format!("{} failures, e.g. {shown}", failures.len()),
        )
    }
}

type CheckFn = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

/// Worker count for suite execution: the `EXACTREP_WORKERS` environment
/// variable when set, otherwise the available cores. Results never
/// depend on it.
pub fn worker_count() -> usize {
    std::env::var("EXACTREP_WORKERS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

fn run_checks(suite: &str, checks: Vec<(String, CheckFn)>) -> VerifyReport {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count())
        .build()
        .expect("thread pool");
    let results: Vec<CheckResult> = pool.install(|| {
        checks
            .par_iter()
            .map(|(id, f)| match f() {
                Ok(o) => CheckResult {
                    id: id.clone(),
                    status: if o.pass { "pass" } else { "fail" }.into(),
                    expected: o.expected,
                    actual: o.actual,
                },
                Err(e) => CheckResult {
                    id: id.clone(),
                    status: "fail".into(),
                    expected: "no error".into(),
                    actual: format!("error: {e}"),
                },
            })
            .collect()
    });
    let pass = results.iter().all(CheckResult::passed);
    VerifyReport {
        suite: suite.to_string(),
        checks: results,
        pass,
        wall_ms: start.elapsed().as_millis(),
    }
}

fn check(id: &str, f: impl Fn() -> Result<Outcome> + Send + Sync + 'static) -> (String, CheckFn) {
    (id.to_string(), Box::new(f))
}

/// Run a named suite. Valid names: `all`, `sn`, `schur`, `gt`, `weyl`,
/// `hecke`, `diagram`.
pub fn run_suite(name: &str, bounds: Bounds) -> Result<VerifyReport> {
    match name {
        "sn" => Ok(run_checks("sn", sn_checks(bounds))),
        "schur" => Ok(run_checks("schur", schur_checks(bounds))),
        "gt" => Ok(run_checks("gt", gt_checks(bounds))),
        "weyl" => Ok(run_checks("weyl", weyl_checks(bounds))),
        "hecke" => Ok(run_checks("hecke", hecke_checks(bounds))),
        "diagram" => Ok(run_checks("diagram", diagram_checks(bounds))),
        "all" => {
            let start = Instant::now();
            let mut checks = Vec::new();
            checks.extend(sn_checks(bounds));
            checks.extend(schur_checks(bounds));
            checks.extend(gt_checks(bounds));
            checks.extend(weyl_checks(bounds));
            checks.extend(hecke_checks(bounds));
            checks.extend(diagram_checks(bounds));
            let mut report = run_checks("all", checks);
            report.wall_ms = start.elapsed().as_millis();
            Ok(report)
        }
        other => Err(Error::BadInput(format!(
            "unknown suite {other:?} (expected all, sn, schur, gt, weyl, hecke, diagram)"
        ))),
    }
}

// ---- sn ----

fn sn_checks(bounds: Bounds) -> Vec<(String, CheckFn)> {
    let n_dims = bounds.n(10, 8);
    let n_chars = bounds.n(7, 5);
    let n_orth = bounds.n(8, 6);
    let n_semi = bounds.n(7, 5);
    let n_trace = bounds.n(6, 4);
    let n_sym = bounds.n(5, 4).min(symgroup::YOUNG_SYMMETRIZER_BOUND);
    vec![
        check("sn.hook_dim_equals_syt_count", move || {
            let mut failures = Vec::new();
            for n in 0..=n_dims {
                for lam in Partition::all(n) {
                    let dim = hook_dim(&lam)?;
                    let count = enumerate_syt(&lam)?.len();
                    if dim != BigInt::from(count) {
                        failures.push(format!("{lam}: {dim} vs {count}"));
                    }
                }
            }
            equality_outcome(
                &format!("hook formula = SYT enumeration for all |lambda| <= {n_dims}"),
                failures,
            )
        }),
        check("sn.sum_of_squares_is_factorial", move || {
            let mut failures = Vec::new();
            for n in 1..=n_dims {
                let total: BigInt = Partition::all(n)
                    .iter()
                    .map(|lam| {
                        let d = hook_dim(lam).expect("hook dim");
                        &d * &d
                    })
                    .sum();
                if total != factorial(n) {
                    failures.push(format!("n = {n}: {total} != {}", factorial(n)));
                }
            }
            equality_outcome(&format!("sum of dim^2 = n! for n <= {n_dims}"), failures)
        }),
        check("sn.mn_equals_roichman", move || {
            let mut failures = Vec::new();
            for n in 1..=n_chars {
                for lam in Partition::all(n) {
                    for mu in Partition::all(n) {
                        let a = symgroup::mn_character(&lam, &mu)?;
                        let b = symgroup::roichman_character(&lam, &mu)?;
                        if a != b {
                            failures.push(format!("({lam};{mu}): {a} vs {b}"));
                        }
                    }
                }
            }
            equality_outcome(
                &format!("MN = Roichman for all pairs, n <= {n_chars}"),
                failures,
            )
        }),
        check("sn.first_orthogonality", move || {
            let mut failures = Vec::new();
            for n in 1..=n_orth {
                let parts = Partition::all(n);
                // Brute-force class sizes for n <= 6, closed formula above.
                let sizes: Vec<BigInt> = if n <= 6 {
                    let mut counts = std::collections::HashMap::new();
                    for w in symgroup::Permutation::all(n) {
                        *counts.entry(w.cycle_type()).or_insert(0usize) += 1;
                    }
                    parts.iter().map(|mu| BigInt::from(counts[mu])).collect()
                } else {
                    parts.iter().map(symgroup::class_size).collect()
                };
                let table: Vec<Vec<i64>> = parts
                    .iter()
                    .map(|lam| {
                        parts
                            .iter()
                            .map(|mu| symgroup::mn_character(lam, mu).expect("character"))
                            .collect()
                    })
                    .collect();
                let order = factorial(n);
                for (a, row_a) in table.iter().enumerate() {
                    for (b, row_b) in table.iter().enumerate() {
                        let acc: BigInt = sizes
                            .iter()
                            .zip(row_a.iter().zip(row_b))
                            .map(|(size, (x, y))| size * BigInt::from(x * y))
                            .sum();
                        let expect = if a == b { order.clone() } else { BigInt::zero() };
                        if acc != expect {
                            failures.push(format!(
                                "n = {n}, ({}, {}): {acc}",
                                parts[a], parts[b]
                            ));
                        }
                    }
                }
            }
            equality_outcome(
                &format!("sum_mu |C_mu| chi^a chi^b = n! delta_ab for n <= {n_orth}"),
                failures,
            )
        }),
        check("sn.seminormal_coxeter_relations", move || {
            let mut failures = Vec::new();
            for n in 2..=n_semi {
                for lam in Partition::all(n) {
                    let rep = symgroup::seminormal_matrices(&lam)?;
                    let g = n - 1;
                    for i in 1..=g {
                        let m = rep.generator(i);
                        if !crate::exact::mat_is_identity(&crate::exact::mat_mul(m, m)) {
                            failures.push(format!("{lam}: s{i}^2 != 1"));
                        }
                    }
                    for i in 1..=g {
                        for j in i + 2..=g {
                            let (a, b) = (rep.generator(i), rep.generator(j));
                            if crate::exact::mat_mul(a, b) != crate::exact::mat_mul(b, a) {
                                failures.push(format!("{lam}: s{i} s{j} commutation"));
                            }
                        }
                    }
                    for i in 1..g {
                        let (a, b) = (rep.generator(i), rep.generator(i + 1));
                        let lhs = crate::exact::mat_mul(&crate::exact::mat_mul(a, b), a);
                        let rhs = crate::exact::mat_mul(&crate::exact::mat_mul(b, a), b);
                        if lhs != rhs {
                            failures.push(format!("{lam}: braid at {i}"));
                        }
                    }
                }
            }
            equality_outcome(
                &format!("Coxeter presentation on seminormal matrices, n <= {n_semi}"),
                failures,
            )
        }),
        check("sn.seminormal_trace_equals_mn", move || {
            let mut failures = Vec::new();
            for n in 2..=n_trace {
                for lam in Partition::all(n) {
                    let rep = symgroup::seminormal_matrices(&lam)?;
                    for mu in Partition::all(n) {
                        let tr = symgroup::character_from_rep(&rep, &mu)?;
                        let mn = symgroup::mn_character(&lam, &mu)?;
                        if tr != mn {
                            failures.push(format!("({lam};{mu}): {tr} vs {mn}"));
                        }
                    }
                }
            }
            equality_outcome(
                &format!("trace of gamma_mu products = MN character, n <= {n_trace}"),
                failures,
            )
        }),
        check("sn.young_symmetrizer_ranks", move || {
            let mut failures = Vec::new();
            for n in 1..=n_sym {
                for lam in Partition::all(n) {
                    let expect = hook_dim(&lam)?;
                    let tabs = enumerate_syt(&lam)?;
                    for t in tabs.iter().take(2) {
                        let rank = symgroup::young_symmetrizer_dim(&lam, t)?;
                        if BigInt::from(rank) != expect {
                            failures.push(format!("{lam}: rank {rank} vs {expect}"));
                        }
                    }
                }
            }
            equality_outcome(
                &format!("rank of right mult by P(T)N(T) = hook dim, n <= {n_sym}, two tableaux each"),
                failures,
            )
        }),
        check("sn.ledger.a2_1_product_bound", move || {
            // Reading 1: the strip-sign product runs over all strips.
            // Reading 2 (as printed): the product stops one strip short.
            let bound = 5;
            let mut full_ok = true;
            let mut printed_ok = true;
            for n in 1..=bound {
                for lam in Partition::all(n) {
                    for mu in Partition::all(n) {
                        let reference = symgroup::roichman_character(&lam, &mu)?;
                        full_ok &= symgroup::mn_character(&lam, &mu)? == reference;
                        printed_ok &=
                            symgroup::mn_character_printed_bound(&lam, &mu)? == reference;
                    }
                }
            }
            let exactly_one = full_ok != printed_ok;
            outcome(
                exactly_one,
                "exactly one reading matches the independent character rule",
                format!(
                    "product-over-all-strips: {}, printed-bound (stops at l-1): {}",
                    if full_ok { "pass" } else { "fail" },
                    if printed_ok { "pass" } else { "fail" }
                ),
            )
        }),
    ]
}

// ---- schur ----

fn schur_checks(bounds: Bounds) -> Vec<(String, CheckFn)> {
    let size_max = bounds.n(8, 6);
    let prod_max = bounds.n(8, 6);
    vec![
        check("schur.bialternant_equals_tableau_sum", move || {
            let mut failures = Vec::new();
            for n in 1..=4usize {
                for size in 0..=size_max {
                    for lam in Partition::all(size) {
                        if lam.rows() > n {
                            continue;
                        }
                        if schur::schur_bialternant(&lam, n)? != schur::schur_tableau_sum(&lam, n) {
                            failures.push(format!("{lam} in {n} vars"));
                        }
                    }
                }
            }
            equality_outcome(
                &format!("bialternant = tableau sum, |lambda| <= {size_max}, n <= 4"),
                failures,
            )
        }),
        check("schur.products_match_lr_rule", move || {
            let mut failures = Vec::new();
            for a in 0..=prod_max {
                for b in 0..=prod_max - a {
                    let n = (a + b).max(1);
                    for mu in Partition::all(a) {
                        for nu in Partition::all(b) {
                            let expansion = schur::schur_product_expand(&mu, &nu, n)?;
                            for lam in Partition::all(a + b) {
                                let direct = if mu.contained_in(&lam) {
                                    schur::lr_coeff(&lam, &mu, &nu)?
                                } else {
                                    0
                                };
                                if expansion.coeff(&lam) != direct {
                                    failures.push(format!("c^{lam}_({mu};{nu})"));
                                }
                            }
                        }
                    }
                }
            }
            equality_outcome(
                &format!("polynomial expansion = LR filling counts, |mu|+|nu| <= {prod_max}"),
                failures,
            )
        }),
        check("schur.symmetry_under_adjacent_swaps", move || {
            let mut failures = Vec::new();
            for size in 1..=5usize {
                for lam in Partition::all(size) {
                    let s = schur::schur_tableau_sum(&lam, 4);
                    for i in 0..3 {
                        if s.swap_vars(i, i + 1) != s {
                            failures.push(format!("{lam} swap {i}"));
                        }
                    }
                }
            }
            equality_outcome("Schur polynomials invariant under adjacent swaps", failures)
        }),
        check("schur.lr_symmetric_in_mu_nu", move || {
            let mut failures = Vec::new();
            for a in 0..=4usize {
                for b in 0..=4 - a.min(4) {
                    for mu in Partition::all(a) {
                        for nu in Partition::all(b) {
                            for lam in Partition::all(a + b) {
                                let c1 = if mu.contained_in(&lam) {
                                    schur::lr_coeff(&lam, &mu, &nu)?
                                } else {
                                    0
                                };
                                let c2 = if nu.contained_in(&lam) {
                                    schur::lr_coeff(&lam, &nu, &mu)?
                                } else {
                                    0
                                };
                                if c1 != c2 {
                                    failures.push(format!("c^{lam}: {c1} vs {c2}"));
                                }
                            }
                        }
                    }
                }
            }
            equality_outcome("c^lambda_(mu,nu) = c^lambda_(nu,mu)", failures)
        }),
        check("schur.product_dimension_identity", move || {
            let n = 8;
            let mut failures = Vec::new();
            for (mu, nu) in [
                (Partition::parse("2").unwrap(), Partition::parse("1,1").unwrap()),
                (Partition::parse("2,1").unwrap(), Partition::parse("2").unwrap()),
                (Partition::parse("3").unwrap(), Partition::parse("2,1").unwrap()),
                (Partition::parse("2,2").unwrap(), Partition::parse("1,1").unwrap()),
            ] {
                let lhs: BigInt = schur::schur_product_expand(&mu, &nu, n)?
                    .iter()
                    .map(|(l, c)| hook_content_dim(l, n).expect("dim") * BigInt::from(*c))
                    .sum();
                let rhs = hook_content_dim(&mu, n)? * hook_content_dim(&nu, n)?;
                if lhs != rhs {
                    failures.push(format!("({mu};{nu}): {lhs} vs {rhs}"));
                }
            }
            equality_outcome("sum c dim = dim * dim at n = 8", failures)
        }),
        check("schur.empty_factor_is_identity", move || {
            let mut failures = Vec::new();
            for size in 0..=5usize {
                for lam in Partition::all(size) {
                    let e = schur::schur_product_expand(&lam, &Partition::empty(), size.max(1))?;
                    if e.coeff(&lam) != 1 || e.len() != 1 {
                        failures.push(format!("{lam}"));
                    }
                }
            }
            equality_outcome("s_lambda * s_empty = s_lambda", failures)
        }),
    ]
}

// ---- gt ----

fn gt_checks(bounds: Bounds) -> Vec<(String, CheckFn)> {
    let size_max = bounds.n(4, 3);
    vec![
        check("gt.commutator_oracle", move || {
            let mut failures = Vec::new();
            for n in 2..=3usize {
                for size in 1..=size_max {
                    for lam in Partition::all(size) {
                        if lam.rows() > 3 {
                            continue;
                        }
                        for t in glnrep::module_basis(&lam, n) {
                            for k in 2..=n {
                                if !glnrep::commutator_defect(&t, k).is_zero() {
                                    failures.push(format!("{lam}, k = {k}"));
                                }
                            }
                        }
                    }
                }
            }
            equality_outcome(
                "[E_(k-1,k), E_(k,k-1)] acts by #(k-1)-entries - #k-entries",
                failures,
            )
        }),
        check("gt.serre_vanishing", move || {
            let mut failures = Vec::new();
            for size in 1..=size_max {
                for lam in Partition::all(size) {
                    if lam.rows() > 3 {
                        continue;
                    }
                    for t in glnrep::module_basis(&lam, 3) {
                        let v = glnrep::GTVector::basis(t.clone());
                        let e12 = |u: &glnrep::ColumnStrictTableau| glnrep::gt_lower(u, 2);
                        let e23 = |u: &glnrep::ColumnStrictTableau| glnrep::gt_lower(u, 3);
                        let a = v.apply(e23).apply(e12).apply(e12);
                        let b = v.apply(e12).apply(e23).apply(e12).scale(&rat(2));
                        let c = v.apply(e12).apply(e12).apply(e23);
                        if !a.sub(&b).add(&c).is_zero() {
                            failures.push(format!("{lam}"));
                        }
                    }
                }
            }
            equality_outcome("[E12, [E12, E23]] = 0 on V^lambda, n = 3", failures)
        }),
        check("gt.weight_bookkeeping", move || {
            let mut failures = Vec::new();
            for size in 1..=size_max {
                for lam in Partition::all(size) {
                    if lam.rows() > 3 {
                        continue;
                    }
                    for t in glnrep::module_basis(&lam, 3) {
                        for k in 2..=3usize {
                            for (u, _) in glnrep::gt_lower(&t, k).iter() {
                                if u.count_entry(k) + 1 != t.count_entry(k)
                                    || u.count_entry(k - 1) != t.count_entry(k - 1) + 1
                                {
                                    failures.push(format!("{lam} lower k = {k}"));
                                }
                            }
                            for (u, _) in glnrep::gt_raise(&t, k).iter() {
                                if u.count_entry(k) != t.count_entry(k) + 1
                                    || u.count_entry(k - 1) + 1 != t.count_entry(k - 1)
                                {
                                    failures.push(format!("{lam} raise k = {k}"));
                                }
                            }
                        }
                    }
                }
            }
            equality_outcome("lowering/raising moves exactly one entry", failures)
        }),
        check("gt.weights_match_schur_monomials", move || {
            let mut failures = Vec::new();
            for size in 1..=size_max {
                for lam in Partition::all(size) {
                    if lam.rows() > 3 {
                        continue;
                    }
                    let n = 3;
                    let schur_poly = schur::schur_tableau_sum(&lam, n);
                    let mut from_basis = MultiLaurent::zero(n);
                    for t in glnrep::module_basis(&lam, n) {
                        let exps: Vec<i64> = t.weight().iter().map(|&w| w as i64).collect();
                        from_basis =
                            from_basis.add(&MultiLaurent::monomial(exps, Rational::one()));
                    }
                    if from_basis != schur_poly {
                        failures.push(format!("{lam}"));
                    }
                }
            }
            equality_outcome("tableau weight multiset = Schur monomials", failures)
        }),
    ]
}

// ---- weyl ----

fn weyl_checks(bounds: Bounds) -> Vec<(String, CheckFn)> {
    let size_max = bounds.n(6, 4);
    let sw_k = bounds.k(6, 4);
    vec![
        check("weyl.type_a_dimension_bridge", move || {
            let mut failures = Vec::new();
            for n in 1..=5usize {
                for size in 0..=size_max {
                    for lam in Partition::all(size) {
                        if lam.rows() > n {
                            continue;
                        }
                        let by_hooks = hook_content_dim(&lam, n)?;
                        let by_cst =
                            enumerate_cst(&SkewShape::straight(lam.clone()), n, None).len();
                        if by_hooks != BigInt::from(by_cst) {
                            failures.push(format!("{lam}, n = {n}: hooks vs CST"));
                        }
                        if n >= 2 {
                            let rs = weyl::build_root_system(weyl::CartanType::A, n - 1)?;
                            let w = weyl::weight_from_partition(&lam, n)?;
                            if weyl::weyl_dim(&rs, &w)? != by_hooks {
                                failures.push(format!("{lam}, n = {n}: Weyl vs hooks"));
                            }
                        }
                    }
                }
            }
            equality_outcome(
                &format!("hook-content = CST count = Weyl dim, |lambda| <= {size_max}, n <= 5"),
                failures,
            )
        }),
        check("weyl.a2_adjoint_character", move || {
            let rs = weyl::build_root_system(weyl::CartanType::A, 2)?;
            let lam = Partition::parse("2,1")?;
            let w = weyl::weight_from_partition(&lam, 3)?;
            let ch = weyl::weyl_character(&rs, &w)?;
            let mass_ok = ch.coeff_mass() == rat(8);
            let schur_poly = schur::schur_tableau_sum(&lam, 3);
            let mut doubled = MultiLaurent::zero(3);
            for (e, c) in schur_poly.iter() {
                let exps: Vec<i64> = e.iter().map(|v| 2 * v).collect();
                doubled = doubled.add(&MultiLaurent::monomial(exps, c.clone()));
            }
            outcome(
                mass_ok && ch == doubled,
                "coefficient mass 8 and equality with s_(2,1)(x1,x2,x3)",
                format!(
                    "mass = {}, schur match = {}",
                    ch.coeff_mass(),
                    ch == doubled
                ),
            )
        }),
        check("weyl.schur_weyl_identity", move || {
            let mut failures = Vec::new();
            for n in 1..=4usize {
                for k in 1..=sw_k {
                    let r = glnrep::schur_weyl_check(n, k)?;
                    if !r.holds {
                        failures.push(format!("n = {n}, k = {k}: {} vs {}", r.tensor_dim, r.sum));
                    }
                }
            }
            equality_outcome(
                &format!("n^k = sum dim V * dim S for n <= 4, k <= {sw_k}"),
                failures,
            )
        }),
        check("weyl.group_orders", move || {
            let mut failures = Vec::new();
            for (t, rank) in [
                (weyl::CartanType::A, 1),
                (weyl::CartanType::A, 2),
                (weyl::CartanType::A, 3),
                (weyl::CartanType::B, 2),
                (weyl::CartanType::B, 3),
                (weyl::CartanType::C, 2),
                (weyl::CartanType::C, 3),
                (weyl::CartanType::D, 2),
                (weyl::CartanType::D, 3),
            ] {
                let rs = weyl::build_root_system(t, rank)?;
                let n = weyl::weyl_group_elements(&rs)?.len();
                if BigInt::from(n) != weyl::weyl_group_order(t, rank) {
                    failures.push(format!("{t}{rank}: {n}"));
                }
            }
            equality_outcome("closure size matches |W| formulas", failures)
        }),
        check("weyl.characters_are_w_invariant", move || {
            let mut failures = Vec::new();
            for (t, rank, coeffs) in [
                (weyl::CartanType::A, 2, vec![1i64, 1]),
                (weyl::CartanType::B, 2, vec![1, 1]),
                (weyl::CartanType::C, 2, vec![0, 1]),
                (weyl::CartanType::D, 3, vec![0, 1, 1]),
            ] {
                let rs = weyl::build_root_system(t, rank)?;
                let w = rs.weight_from_coefficients(&coeffs)?;
                let ch = weyl::weyl_character(&rs, &w)?;
                for s in rs.simple_reflections() {
                    let mut reflected = MultiLaurent::zero(rs.ambient_dim());
                    for (e, c) in ch.iter() {
                        let moved = s.apply(&weyl::Weight::from_doubled(e.clone()));
                        reflected = reflected
                            .add(&MultiLaurent::monomial(moved.doubled().to_vec(), c.clone()));
                    }
                    if reflected != ch {
                        failures.push(format!("{t}{rank}"));
                    }
                }
            }
            equality_outcome("simple reflections fix every character", failures)
        }),
        check("weyl.denominator_identity", move || {
            let mut failures = Vec::new();
            for (t, rank) in [
                (weyl::CartanType::A, 1),
                (weyl::CartanType::A, 2),
                (weyl::CartanType::A, 3),
                (weyl::CartanType::B, 2),
                (weyl::CartanType::B, 3),
                (weyl::CartanType::C, 3),
                (weyl::CartanType::D, 3),
            ] {
                let rs = weyl::build_root_system(t, rank)?;
                let elements = weyl::weyl_group_elements(&rs)?;
                let sum = weyl::alternating_orbit_sum(&elements, rs.rho(), rs.ambient_dim());
                if sum != weyl::denominator_product_form(&rs) {
                    failures.push(format!("{t}{rank}"));
                }
            }
            equality_outcome(
                "sum_w eps(w) e^(w rho) = prod (e^(a/2) - e^(-a/2))",
                failures,
            )
        }),
        check("weyl.character_mass_equals_dimension", move || {
            let mut failures = Vec::new();
            for (t, rank, coeffs) in [
                (weyl::CartanType::B, 2, vec![1i64, 0]),
                (weyl::CartanType::B, 2, vec![0, 1]),
                (weyl::CartanType::B, 3, vec![0, 0, 1]),
                (weyl::CartanType::C, 3, vec![1, 0, 0]),
                (weyl::CartanType::D, 3, vec![1, 0, 0]),
                (weyl::CartanType::D, 3, vec![0, 1, 0]),
            ] {
                let rs = weyl::build_root_system(t, rank)?;
                let w = rs.weight_from_coefficients(&coeffs)?;
                let mass = weyl::weyl_character(&rs, &w)?.coeff_mass();
                let dim = weyl::weyl_dim(&rs, &w)?;
                if mass != Rational::from_integer(dim.clone()) {
                    failures.push(format!("{t}{rank} {coeffs:?}: {mass} vs {dim}"));
                }
            }
            equality_outcome("character coefficient mass = Weyl dimension", failures)
        }),
    ]
}

// ---- hecke ----

fn hecke_checks(bounds: Bounds) -> Vec<(String, CheckFn)> {
    let char_k = bounds.k(6, 5);
    vec![
        check("hecke.associativity_symbolic_n4", move || {
            let all = symgroup::Permutation::all(4);
            let mut failures = Vec::new();
            // Deterministic stride sampling over the 24^3 basis triples.
            for (i, u) in all.iter().enumerate().step_by(3) {
                for (j, v) in all.iter().enumerate().step_by(2) {
                    for w in all.iter().skip((i * 7 + j) % 5).step_by(5) {
                        let eu = hecke::HeckeElement::basis(u.clone());
                        let ev = hecke::HeckeElement::basis(v.clone());
                        let ew = hecke::HeckeElement::basis(w.clone());
                        let lhs = hecke::hecke_mul(&hecke::hecke_mul(&eu, &ev)?, &ew)?;
                        let rhs = hecke::hecke_mul(&eu, &hecke::hecke_mul(&ev, &ew)?)?;
                        if lhs != rhs {
                            failures.push(format!("({u}, {v}, {w})"));
                        }
                    }
                }
            }
            equality_outcome("(T_u T_v) T_w = T_u (T_v T_w), sampled over S_4", failures)
        }),
        check("hecke.reduced_word_independence_n4", move || {
            let mut failures = Vec::new();
            for w in symgroup::Permutation::all(4) {
                let words = hecke::all_reduced_words(&w);
                let expect = hecke::HeckeElement::basis(w.clone());
                for word in &words {
                    if hecke::product_of_generators(4, word)? != expect {
                        failures.push(format!("{w} via {word:?}"));
                    }
                }
            }
            equality_outcome("every reduced word rebuilds T_w", failures)
        }),
        check("hecke.q1_structure_constants_n4", move || {
            let all = symgroup::Permutation::all(4);
            let one = rat(1);
            let mut failures = Vec::new();
            for u in &all {
                for v in &all {
                    let prod = hecke::hecke_mul(
                        &hecke::HeckeElement::basis(u.clone()),
                        &hecke::HeckeElement::basis(v.clone()),
                    )?;
                    let spec = prod.specialize(&one);
                    if spec.len() != 1 || spec.get(&u.compose(v)) != Some(&one) {
                        failures.push(format!("({u}, {v})"));
                    }
                }
            }
            equality_outcome("q -> 1 reproduces S_4 group multiplication", failures)
        }),
        check("hecke.q_characters_specialize_to_mn", move || {
            let mut failures = Vec::new();
            for k in 1..=char_k {
                for lam in Partition::all(k) {
                    for mu in Partition::all(k) {
                        let at_one = hecke::hecke_roichman_character(&lam, &mu)?.eval(&rat(1));
                        if at_one != rat(symgroup::mn_character(&lam, &mu)?) {
                            failures.push(format!("({lam};{mu})"));
                        }
                    }
                }
            }
            equality_outcome(
                &format!("q-characters at q = 1 equal MN characters, k <= {char_k}"),
                failures,
            )
        }),
        check("hecke.basis_cardinality", move || {
            let mut failures = Vec::new();
            for n in 1..=5usize {
                let count = symgroup::Permutation::all(n).len();
                if BigInt::from(count) != factorial(n) {
                    failures.push(format!("n = {n}"));
                }
            }
            equality_outcome("dim H_n(q) = n!", failures)
        }),
        check("hecke.semisimplicity_grid", move || {
            use hecke::QValue;
            let mut failures = Vec::new();
            let n = 6;
            let cases: Vec<(QValue, bool)> = vec![
                (QValue::Rational(rat(0)), false),
                (QValue::Rational(rat(1)), true),
                (QValue::Rational(rat(-1)), false),
                (QValue::Rational(rat(2)), true),
                (QValue::Rational(rat(-2)), true),
                (QValue::Rational(rat(3)), true),
                (QValue::Rational(rat(5)), true),
                (QValue::Rational(rat(7)), true),
                (QValue::Rational(ratio(1, 2)), true),
                (QValue::Rational(ratio(-1, 2)), true),
                (QValue::Rational(ratio(2, 3)), true),
                (QValue::Rational(ratio(22, 7)), true),
                (QValue::PrimitiveRoot(1), true),
                (QValue::PrimitiveRoot(2), false),
                (QValue::PrimitiveRoot(3), false),
                (QValue::PrimitiveRoot(4), false),
                (QValue::PrimitiveRoot(5), false),
                (QValue::PrimitiveRoot(6), false),
                (QValue::PrimitiveRoot(7), true),
                (QValue::PrimitiveRoot(8), true),
                (QValue::PrimitiveRoot(100), true),
            ];
            let total = cases.len();
            for (q, expect) in cases {
                if hecke::hecke_semisimple(&q, n) != expect {
                    failures.push(format!("{q:?}"));
                }
            }
            equality_outcome(
                &format!("root-of-unity window at n = {n} on a {total}-point grid"),
                failures,
            )
        }),
        check("hecke.grpn_dimension_identities", move || {
            let mut failures = Vec::new();
            for r in 1..=3usize {
                for n in 1..=4usize {
                    let data = hecke::grpn_data(r, 1, n)?;
                    let sum_sq: BigInt = data
                        .irreps
                        .as_ref()
                        .expect("p = 1 data")
                        .iter()
                        .map(|(_, d)| d * d)
                        .sum();
                    if sum_sq != data.order {
                        failures.push(format!("G({r},1,{n})"));
                    }
                }
            }
            equality_outcome("sum of dim^2 = |G(r,1,n)| for r <= 3, n <= 4", failures)
        }),
    ]
}

// ---- diagram ----

fn diagram_checks(bounds: Bounds) -> Vec<(String, CheckFn)> {
    let pres_k = bounds.k(8, 6);
    let dims_k = bounds.k(6, 5);
    let tl_k = bounds.k(10, 8);
    let trace_k = bounds.k(8, 6);
    vec![
        check("diagram.brauer_presentation", move || {
            let mut failures = Vec::new();
            for k in 2..=pres_k {
                let report = diagram::brauer_presentation_check(k)?;
                for r in report.relations.iter().filter(|r| !r.holds) {
                    failures.push(format!("k = {k}: {}", r.relation));
                }
            }
            equality_outcome(
                &format!("all Brauer relations hold for k <= {pres_k}"),
                failures,
            )
        }),
        check("diagram.brauer_dims_vs_diagram_count", move || {
            let mut failures = Vec::new();
            for k in 1..=dims_k {
                let report = diagram::brauer_dims(k)?;
                if !report.consistent {
                    failures.push(format!(
                        "k = {k}: {} vs {}",
                        report.sum_of_squares, report.diagram_count
                    ));
                }
                if k <= 5 {
                    let enumerated = diagram::BrauerDiagram::enumerate(k)?.len();
                    if BigInt::from(enumerated) != report.diagram_count {
                        failures.push(format!("k = {k}: enumeration {enumerated}"));
                    }
                }
            }
            equality_outcome(
                &format!("sum dim^2 = (2k-1)!! = #diagrams for k <= {dims_k}"),
                failures,
            )
        }),
        check("diagram.permutations_embed", move || {
            let mut failures = Vec::new();
            for u in symgroup::Permutation::all(4) {
                for i in 1..4 {
                    let v = symgroup::Permutation::adjacent(4, i);
                    let (d, c) = diagram::brauer_mul(
                        &diagram::BrauerDiagram::from_permutation(&u),
                        &diagram::BrauerDiagram::from_permutation(&v),
                    )?;
                    if c != 0 || d != diagram::BrauerDiagram::from_permutation(&v.compose(&u)) {
                        failures.push(format!("{u} * s{i}"));
                    }
                }
            }
            equality_outcome("permutation diagrams multiply as permutations", failures)
        }),
        check("diagram.associativity_sampled", move || {
            let x = LaurentPoly::var(Var::X);
            let mut failures = Vec::new();
            for k in 2..=6usize {
                let all = diagram::BrauerDiagram::enumerate(k)?;
                // Deterministic pseudo-random triples via an LCG.
                let mut state = 0x2545f4914f6cdd1du64 ^ (k as u64);
                for _ in 0..30 {
                    let mut pick = || {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        (state >> 33) as usize % all.len()
                    };
                    let (a, b, c) = (all[pick()].clone(), all[pick()].clone(), all[pick()].clone());
                    let ea = diagram::DiagramElement::basis(a, Var::X);
                    let eb = diagram::DiagramElement::basis(b, Var::X);
                    let ec = diagram::DiagramElement::basis(c, Var::X);
                    let lhs = ea.mul(&eb, &x)?.mul(&ec, &x)?;
                    let rhs = ea.mul(&eb.mul(&ec, &x)?, &x)?;
                    if lhs != rhs {
                        failures.push(format!("k = {k}"));
                    }
                }
            }
            equality_outcome("diagram products associate with loop weights, k <= 6", failures)
        }),
        check("diagram.tl_dims_are_ballot_numbers", move || {
            let mut failures = Vec::new();
            for k in 1..=tl_k {
                let mut total = BigInt::zero();
                for l in 0..=k / 2 {
                    let d = BigInt::from(diagram::tl_half_basis(k, k - 2 * l)?.len());
                    let expect = binomial(k, l) - crate::shapes::binomial_signed(k, l as i64 - 1);
                    if d != expect {
                        failures.push(format!("k = {k}, l = {l}: {d} vs {expect}"));
                    }
                    total += &d * &d;
                }
                let catalan = binomial(2 * k, k) / BigInt::from(k + 1);
                if total != catalan {
                    failures.push(format!("k = {k}: sum dim^2 = {total} vs Catalan {catalan}"));
                }
            }
            equality_outcome(
                &format!("TL module dims = ballot numbers, sum of squares = Catalan, k <= {tl_k}"),
                failures,
            )
        }),
        check("diagram.tl_enumeration_is_catalan", move || {
            let mut failures = Vec::new();
            for k in 1..=tl_k.min(9) {
                let count = diagram::tl_enumerate(k)?.len();
                let catalan = binomial(2 * k, k) / BigInt::from(k + 1);
                if BigInt::from(count) != catalan {
                    failures.push(format!("k = {k}: {count}"));
                }
            }
            equality_outcome("planar diagram count = Catalan(k)", failures)
        }),
        check("diagram.tl_trace_matches_closed_form", move || {
            let mut failures = Vec::new();
            for k in 1..=trace_k {
                for l in 0..=k / 2 {
                    for h in 0..=k / 2 {
                        let d = diagram::DiagramElement::basis(
                            diagram::BrauerDiagram::d2h(k, h)?,
                            Var::X,
                        );
                        let trace = diagram::tl_character_general(&d, l, Var::X)?;
                        let closed = diagram::tl_character_closed(k, l, h)?;
                        // Trace carries the loop normalization x^h.
                        let expect = LaurentPoly::monomial(
                            Var::X,
                            h as i64,
                            Rational::from_integer(closed),
                        );
                        if trace != expect {
                            failures.push(format!("k = {k}, l = {l}, h = {h}"));
                        }
                    }
                }
            }
            equality_outcome(
                &format!("trace on d_2h = x^h * ballot closed form, k <= {trace_k}"),
                failures,
            )
        }),
        check("diagram.hecke_to_tl_homomorphism", move || {
            // Standard reading x^2 = q + q^-1 + 2, realized as q = t^2,
            // x = t + t^-1, image coefficient a = (q+1)/x = t.
            let a = LaurentPoly::var(Var::T);
            let q = LaurentPoly::monomial(Var::T, 2, rat(1));
            let x = LaurentPoly::monomial(Var::T, 1, rat(1))
                .add(&LaurentPoly::monomial(Var::T, -1, rat(1)));
            let mut failures = Vec::new();
            for k in 2..=4usize {
                let report = diagram::hecke_to_tl_check(k, &a, &q, &x)?;
                if !report.all_hold {
                    failures.push(format!("k = {k}: {report:?}"));
                }
            }
            equality_outcome(
                "Hecke relations and kernel annihilation under x^2 = q + q^-1 + 2, k <= 4",
                failures,
            )
        }),
        check("diagram.semisimplicity_grids", move || {
            let mut failures = Vec::new();
            // Brauer integer window at k = 3: {-3..1}.
            let brauer_cases: Vec<(Rational, bool)> = vec![
                (rat(10), true),
                (rat(2), true),
                (rat(1), false),
                (rat(0), false),
                (rat(-1), false),
                (rat(-2), false),
                (rat(-3), false),
                (rat(-4), true),
                (ratio(1, 2), true),
                (ratio(-5, 2), true),
            ];
            for (x, expect) in &brauer_cases {
                if diagram::brauer_semisimple(x, 3) != *expect {
                    failures.push(format!("brauer x = {x}"));
                }
            }
            // TL: only 1/x^2 = 1 = 4cos^2(pi/3) is rationally reachable.
            let tl_cases: Vec<(Rational, usize, bool)> = vec![
                (rat(1), 3, false),
                (rat(-1), 3, false),
                (rat(1), 2, true),
                (rat(-1), 2, true),
                (rat(2), 10, true),
                (rat(-2), 10, true),
                (ratio(1, 2), 10, true),
                (ratio(3, 2), 10, true),
                (rat(5), 10, true),
                (ratio(-7, 3), 10, true),
            ];
            for (x, k, expect) in &tl_cases {
                if diagram::tl_semisimple(x, *k) != *expect {
                    failures.push(format!("tl x = {x}, k = {k}"));
                }
            }
            // BMW: power-of-q values of r are always flagged.
            use diagram::{BmwQ, BmwR};
            let bmw_cases: Vec<(BmwR, BmwQ, bool)> = vec![
                (BmwR::Generic, BmwQ::Generic, true),
                (BmwR::PowerOfQ(5), BmwQ::Generic, false),
                (BmwR::PowerOfQ(0), BmwQ::Generic, false),
                (BmwR::PowerOfQ(-3), BmwQ::Generic, false),
                (BmwR::Generic, BmwQ::PrimitiveRoot(2), false),
                (BmwR::Generic, BmwQ::PrimitiveRoot(7), false),
                (BmwR::Generic, BmwQ::Rational(rat(1)), false),
                (BmwR::Generic, BmwQ::Rational(rat(-1)), false),
                (BmwR::Generic, BmwQ::Rational(rat(3)), true),
                (BmwR::Rational(rat(5)), BmwQ::Rational(rat(2)), true),
                (BmwR::Rational(rat(8)), BmwQ::Rational(rat(2)), false),
                (BmwR::Rational(ratio(1, 4)), BmwQ::Rational(rat(2)), false),
                (BmwR::Rational(ratio(2, 3)), BmwQ::Rational(ratio(3, 2)), false),
                (BmwR::Rational(rat(7)), BmwQ::Rational(ratio(3, 2)), true),
            ];
            let total = brauer_cases.len() + tl_cases.len() + bmw_cases.len();
            for (r, q, expect) in &bmw_cases {
                if diagram::bmw_semisimple(r, q) != *expect {
                    failures.push(format!("bmw {r:?}, {q:?}"));
                }
            }
            equality_outcome(
                &format!("stated semisimplicity boundaries on a {total}-point grid"),
                failures,
            )
        }),
        check("diagram.ledger.b6_updown_closed_form", move || {
            // Reading 1: the printed binomial formula is correct as it
            // stands. Reading 2: the formula is a typo and disagrees with
            // the exhaustive walk (the walk is ground truth either way).
            let bound = if bounds.quick { 6 } else { 8 };
            let mut printed_ok = true;
            for k in 0..=bound {
                let mut size = k % 2;
                while size <= k {
                    for lam in Partition::all(size) {
                        printed_ok &= updown_closed_form(&lam, k)? == count_updown(&lam, k)?;
                    }
                    size += 2;
                }
            }
            let typo_suspected_ok = !printed_ok;
            outcome(
                printed_ok != typo_suspected_ok,
                "exactly one reading passes against the exhaustive walk",
                format!(
                    "printed-formula: {}, typo-suspected: {} (k <= {bound})",
                    if printed_ok { "pass" } else { "fail" },
                    if typo_suspected_ok { "pass" } else { "fail" }
                ),
            )
        }),
        check("diagram.ledger.b8_2_parameter_relation", move || {
            // Reading A (printed): q + q^-1 + 2 = 1/x^2. Reading B
            // (standard): x^2 = q + q^-1 + 2. The homomorphism check is
            // run under both; exactly one must pass.
            let a_sym = LaurentPoly::var(Var::T);
            let q_sym = LaurentPoly::monomial(Var::T, 2, rat(1));
            let x_sym = LaurentPoly::monomial(Var::T, 1, rat(1))
                .add(&LaurentPoly::monomial(Var::T, -1, rat(1)));
            let mut reading_b = true;
            for k in 2..=4usize {
                reading_b &= diagram::hecke_to_tl_check(k, &a_sym, &q_sym, &x_sym)?.all_hold;
            }
            // Reading A at exact rational points: q = 4 gives
            // 1/x^2 = 25/4, x = +-2/5; q = 9 gives 1/x^2 = 100/9,
            // x = +-3/10.
            let mut reading_a = true;
            for (qv, xv) in [
                (rat(4), ratio(2, 5)),
                (rat(4), ratio(-2, 5)),
                (rat(9), ratio(3, 10)),
                (rat(9), ratio(-3, 10)),
            ] {
                let a = LaurentPoly::constant(Var::T, (&qv + rat(1)) / &xv);
                let q = LaurentPoly::constant(Var::T, qv);
                let x = LaurentPoly::constant(Var::T, xv);
                for k in 2..=4usize {
                    reading_a &= diagram::hecke_to_tl_check(k, &a, &q, &x)?.all_hold;
                }
            }
            outcome(
                reading_a != reading_b,
                "exactly one parameter reading admits the homomorphism",
                format!(
                    "printed (q+q^-1+2 = 1/x^2): {}, standard (x^2 = q+q^-1+2): {}",
                    if reading_a { "pass" } else { "fail" },
                    if reading_b { "pass" } else { "fail" }
                ),
            )
        }),
    ]
}
