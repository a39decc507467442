//! Classical root systems and Weyl's formulas: the B2 root data, exact
//! dimension products, and a character computed by alternant division.

use exactrep::weyl::{
    build_root_system, dump_root_system, weyl_character, weyl_dim, weyl_group_elements, CartanType,
};

fn main() {
    let rs = build_root_system(CartanType::B, 2).unwrap();
    let dump = dump_root_system(&rs);
    println!("root system B2:");
    println!("  positive roots: {:?}", dump.positive_roots);
    println!("  simple roots:   {:?}", dump.simple_roots);
    println!("  fundamental weights: {:?}", dump.fundamental_weights);
    println!("  rho = ({})", dump.rho);
    println!(
        "  |W| = {} (enumerated {})",
        dump.weyl_order,
        weyl_group_elements(&rs).unwrap().len()
    );

    println!("\ndimensions of small B2 irreducibles:");
    for coeffs in [[0i64, 0], [1, 0], [0, 1], [1, 1], [2, 0], [0, 2]] {
        let w = rs.weight_from_coefficients(&coeffs).unwrap();
        println!(
            "  m = {coeffs:?} (weight {}): dim = {}",
            w.display_coords(),
            weyl_dim(&rs, &w).unwrap()
        );
    }

    // The spin representation's character: exponents are doubled, so
    // half-integer weights print as odd doubled coordinates.
    let spin = rs.weight_from_coefficients(&[0, 1]).unwrap();
    let ch = weyl_character(&rs, &spin).unwrap();
    println!("\ncharacter of the B2 spin module (weights in doubled coordinates):");
    for (e, c) in ch.iter() {
        println!("  weight {e:?} with multiplicity {c}");
    }
    println!("  coefficient mass {}", ch.coeff_mass());
}
