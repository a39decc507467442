//! The Iwahori-Hecke algebra of type A: structural products on the T_w
//! basis, the q-character table, the semisimplicity window, and the
//! G(r,1,n) dimension data.

use exactrep::exact::rat;
use exactrep::hecke::{
    grpn_data, hecke_character_table, hecke_mul, hecke_semisimple, HeckeElement, QValue,
};
use exactrep::shapes::Partition;

fn main() {
    // T_1^2 = (q-1) T_1 + q in H_3(q).
    let t1 = HeckeElement::generator(3, 1);
    let square = hecke_mul(&t1, &t1).unwrap();
    println!("T_1 * T_1 in H_3(q):");
    for (w, c) in square.terms() {
        println!("  ({c}) T_{w}");
    }

    // The braid relation as an identity of elements.
    let t2 = HeckeElement::generator(3, 2);
    let lhs = hecke_mul(&hecke_mul(&t1, &t2).unwrap(), &t1).unwrap();
    let rhs = hecke_mul(&hecke_mul(&t2, &t1).unwrap(), &t2).unwrap();
    assert_eq!(lhs, rhs);
    println!("\nT_1 T_2 T_1 = T_2 T_1 T_2 = T_w0 for the longest element");

    let (parts, table) = hecke_character_table(3).unwrap();
    println!("\nq-character table of H_3(q) at the elements T_(gamma_mu):");
    for (lam, row) in parts.iter().zip(&table) {
        let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        println!("  ({lam}): {}", cells.join(" | "));
    }
    // At q = 1 the first column is the dimension.
    for (lam, row) in parts.iter().zip(&table) {
        let dim = row[parts.len() - 1].eval(&rat(1));
        println!("  dim at q=1 from mu = (1,1,1): ({lam}) -> {dim}");
    }

    println!("\nsemisimplicity of H_6(q):");
    for q in [
        QValue::Rational(rat(1)),
        QValue::Rational(rat(-1)),
        QValue::Rational(rat(2)),
        QValue::PrimitiveRoot(5),
        QValue::PrimitiveRoot(7),
    ] {
        println!("  {q:?}: {}", hecke_semisimple(&q, 6));
    }

    let data = grpn_data(2, 1, 2).unwrap();
    println!("\nG(2,1,2): order {}", data.order);
    for (idx, dim) in data.irreps.unwrap() {
        println!("  irrep {idx}: dim {dim}");
    }

    // gamma_mu reduced words drive the character evaluation.
    let gamma = exactrep::symgroup::gamma_permutation(&Partition::parse("3,2").unwrap());
    println!(
        "\ngamma_(3,2) = {gamma} with reduced word {:?}",
        gamma.reduced_word()
    );
    assert_eq!(gamma.cycle_type(), Partition::parse("3,2").unwrap());
}
