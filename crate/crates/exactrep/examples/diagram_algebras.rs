//! Brauer and Temperley-Lieb diagram calculus: products with loop
//! factors, the defining relations, cell module traces, and the
//! semisimplicity parameter windows.

use exactrep::diagram::{
    brauer_dims, brauer_mul, brauer_presentation_check, brauer_semisimple, tl_character_closed,
    tl_character_general, tl_enumerate, tl_half_basis, tl_semisimple, BrauerDiagram,
    DiagramElement,
};
use exactrep::exact::{rat, Var};

fn main() {
    // e_1 e_1 = x e_1: composing the cap/cup diagram with itself closes
    // one loop.
    let e1 = BrauerDiagram::e(3, 1);
    let (d, loops) = brauer_mul(&e1, &e1).unwrap();
    println!("e_1 * e_1 on 3 dots: result edges {:?}, {loops} closed loop(s)", d.edges());

    let report = brauer_presentation_check(5).unwrap();
    println!(
        "\nBrauer presentation on 5 dots: {} relations, all hold: {}",
        report.relations.len(),
        report.all_hold
    );

    let dims = brauer_dims(4).unwrap();
    println!("\nBrauer algebra B_4 irreducible dimensions (up-down walks):");
    for (lam, dim) in &dims.dims {
        println!("  lambda = ({lam}): {dim}");
    }
    println!(
        "  sum of squares {} = (2k-1)!! = {}",
        dims.sum_of_squares, dims.diagram_count
    );

    println!(
        "\nplanar diagrams on 4 dots: {} (Catalan number)",
        tl_enumerate(4).unwrap().len()
    );
    for l in 0..=2usize {
        println!(
            "  TL cell module with {} through strands has dimension {}",
            4 - 2 * l,
            tl_half_basis(4, 4 - 2 * l).unwrap().len()
        );
    }

    println!("\nTL traces of d_2h on the l = 1 module (k = 4):");
    for h in 0..=2usize {
        let d = DiagramElement::basis(BrauerDiagram::d2h(4, h).unwrap(), Var::X);
        let trace = tl_character_general(&d, 1, Var::X).unwrap();
        let closed = tl_character_closed(4, 1, h).unwrap();
        println!("  trace(d_{}) = {trace}  (closed form {closed}, normalization x^{h})", 2 * h);
    }

    println!("\nsemisimplicity windows:");
    for x in [-3i64, -1, 0, 1, 2, 10] {
        println!(
            "  B_3({x}) guaranteed semisimple: {}",
            brauer_semisimple(&rat(x), 3)
        );
    }
    for x in [1i64, 2, 3] {
        println!("  TL_5({x}) semisimple: {}", tl_semisimple(&rat(x), 5));
    }
}
