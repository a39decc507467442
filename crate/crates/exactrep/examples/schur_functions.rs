//! Schur polynomials two ways, Kostka numbers, and
//! Littlewood-Richardson coefficients against the product oracle.

use exactrep::schur::{
    kostka, lr_coeff, schur_bialternant, schur_product_expand, schur_tableau_sum,
};
use exactrep::shapes::Partition;

fn main() {
    let lambda = Partition::parse("2,1").unwrap();
    let n = 3;
    let by_tableaux = schur_tableau_sum(&lambda, n);
    let by_quotient = schur_bialternant(&lambda, n).unwrap();
    println!("s_(2,1)(x1,x2,x3) as a tableau sum:   {by_tableaux}");
    println!("s_(2,1)(x1,x2,x3) as an alternant quotient: {by_quotient}");
    assert_eq!(by_tableaux, by_quotient);

    println!("\nKostka numbers for lambda = (3,2):");
    let l32 = Partition::parse("3,2").unwrap();
    for mu in Partition::all(5) {
        println!("  K_((3,2),({mu})) = {}", kostka(&l32, mu.parts()).unwrap());
    }

    let mu = Partition::parse("2,1").unwrap();
    let nu = Partition::parse("2,1").unwrap();
    println!("\ns_(2,1) * s_(2,1) = {}", schur_product_expand(&mu, &nu, 6).unwrap());

    println!("\nthe same coefficients by lattice-word fillings:");
    for lambda in Partition::all(6) {
        if !mu.contained_in(&lambda) {
            continue;
        }
        let c = lr_coeff(&lambda, &mu, &nu).unwrap();
        if c > 0 {
            println!("  c^({lambda})_((2,1),(2,1)) = {c}");
        }
    }
}
