//! Restriction, induction, tensor products, and Kronecker coefficients,
//! with the dimension bookkeeping that certifies each expansion.

use exactrep::glnrep::tensor_decompose;
use exactrep::shapes::{hook_content_dim, hook_dim, Partition};
use exactrep::symgroup::{induce_trivial_decompose, kronecker, restrict_decompose};
use num::BigInt;

fn main() {
    let lambda = Partition::parse("3,2").unwrap();
    println!("restriction of S^(3,2) to S_3 x S_2:");
    let restriction = restrict_decompose(&lambda, 3, 2).unwrap();
    let mut total = BigInt::from(0);
    for ((mu, nu), c) in &restriction {
        println!("  ({mu}) x ({nu}) with multiplicity {c}");
        total += BigInt::from(*c) * hook_dim(mu).unwrap() * hook_dim(nu).unwrap();
    }
    println!("  dimension check: {total} = {}", hook_dim(&lambda).unwrap());

    let mu = Partition::parse("2,1").unwrap();
    println!("\ninduction of the trivial module from S_(2,1) to S_3:");
    for (lam, c) in induce_trivial_decompose(&mu).unwrap() {
        println!("  S^({lam}) with multiplicity {c} (Kostka number)");
    }

    println!("\nGL tensor product V^(2) (x) V^(1,1):");
    let a = Partition::parse("2").unwrap();
    let b = Partition::parse("1,1").unwrap();
    let expansion = tensor_decompose(&a, &b).unwrap();
    let n = 4;
    let mut total = BigInt::from(0);
    for (lam, c) in expansion.iter() {
        let dim = hook_content_dim(lam, n).unwrap();
        println!("  V^({lam}) with multiplicity {c} (dim over GL({n}): {dim})");
        total += dim * BigInt::from(*c);
    }
    println!(
        "  dimension check over GL({n}): {total} = {} * {}",
        hook_content_dim(&a, n).unwrap(),
        hook_content_dim(&b, n).unwrap()
    );

    println!("\nKronecker coefficients for n = 4:");
    let shapes = [
        Partition::parse("2,2").unwrap(),
        Partition::parse("3,1").unwrap(),
        Partition::parse("2,1,1").unwrap(),
    ];
    for m in &shapes {
        for nn in &shapes {
            for l in &shapes {
                let g = kronecker(m, nn, l).unwrap();
                if g > 0 {
                    println!("  gamma(({m}),({nn}),({l})) = {g}");
                }
            }
        }
    }
}
