//! Dimension formulas and the identities that pin them down: the hook
//! length formula against brute-force tableau enumeration, the
//! sum-of-squares identity, and the Schur-Weyl dimension table.

use exactrep::glnrep::schur_weyl_check;
use exactrep::shapes::{enumerate_syt, factorial, hook_content_dim, hook_dim, Partition};
use num::BigInt;

fn main() {
    println!("hook length formula vs standard tableau enumeration (n = 6):");
    for lambda in Partition::all(6) {
        let by_formula = hook_dim(&lambda).unwrap();
        let by_count = enumerate_syt(&lambda).unwrap().len();
        println!("  dim S^({lambda}) = {by_formula}  (enumerated {by_count})");
        assert_eq!(by_formula, BigInt::from(by_count));
    }

    let n = 6;
    let total: BigInt = Partition::all(n)
        .iter()
        .map(|l| {
            let d = hook_dim(l).unwrap();
            &d * &d
        })
        .sum();
    println!("\nsum of dim^2 over partitions of {n} = {total} = {n}! = {}", factorial(n));

    println!("\nhook content formula for GL(4), partitions of 3:");
    for lambda in Partition::all(3) {
        println!(
            "  dim V^({lambda}) over GL(4) = {}",
            hook_content_dim(&lambda, 4).unwrap()
        );
    }

    let report = schur_weyl_check(3, 3).unwrap();
    println!("\nSchur-Weyl identity for V = C^3, k = 3 tensor factors:");
    for row in &report.rows {
        println!(
            "  lambda = ({}): {} x {}",
            row.lambda, row.gl_dim, row.sn_dim
        );
    }
    println!(
        "  total {} = 3^3 = {} -> identity holds: {}",
        report.sum, report.tensor_dim, report.holds
    );
}
