//! The Gelfand-Tsetlin basis of a GL(3) irreducible: raising and
//! lowering operators with exact rational coefficients, the commutator
//! identity, and the truncated-exponential unipotent action.

use exactrep::exact::ratio;
use exactrep::glnrep::{
    commutator_defect, gt_lower, gt_raise, module_basis, torus_act, unipotent_act, GTVector,
    UnipotentDirection,
};
use exactrep::shapes::Partition;

fn main() {
    let lambda = Partition::parse("2,1").unwrap();
    let n = 3;
    let basis = module_basis(&lambda, n);
    println!(
        "V^(2,1) over GL(3) has dimension {} with column strict tableau basis:",
        basis.len()
    );
    for (i, t) in basis.iter().enumerate() {
        println!("  v{}: weight {:?}", i + 1, t.weight());
    }

    println!("\nlowering operator E_12 on each basis vector:");
    for (i, t) in basis.iter().enumerate() {
        let image = gt_lower(t, 2);
        let rendered: Vec<String> = image
            .iter()
            .map(|(u, c)| {
                let j = basis.iter().position(|b| b == u).unwrap() + 1;
                format!("{c} v{j}")
            })
            .collect();
        println!(
            "  E_12 v{} = {}",
            i + 1,
            if rendered.is_empty() {
                "0".to_string()
            } else {
                rendered.join(" + ")
            }
        );
    }

    println!("\ncommutator check [E_12, E_21] = E_11 - E_22 on every vector:");
    for t in &basis {
        assert!(commutator_defect(t, 2).is_zero());
        assert!(commutator_defect(t, 3).is_zero());
    }
    println!("  holds for k = 2 and k = 3");

    let t = &basis[0];
    let z = ratio(1, 2);
    println!("\ntorus action g_1(1/2) scales v1 by {}", torus_act(t, 1, &z));
    let moved = unipotent_act(UnipotentDirection::Lower, 2, &z, &GTVector::basis(t.clone()));
    println!(
        "unipotent action exp((1/2) E_12) v1 has {} terms",
        moved.iter().count()
    );

    // Raising then asking for the coefficient back.
    let raised = gt_raise(t, 2);
    println!("E_21 v1 = sum of {} basis terms", raised.iter().count());
}
