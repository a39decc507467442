//! Young's seminormal construction: exact rational matrices for the
//! adjacent transpositions, the Coxeter relations, and character values
//! recovered as traces.

use exactrep::exact::{mat_is_identity, mat_mul};
use exactrep::shapes::Partition;
use exactrep::symgroup::{character_from_rep, mn_character, seminormal_matrices};

fn main() {
    let lambda = Partition::parse("3,2").unwrap();
    let rep = seminormal_matrices(&lambda).unwrap();
    println!(
        "seminormal representation for lambda = ({lambda}): dimension {}",
        rep.dimension()
    );
    println!("basis tableaux (row reading words):");
    for t in rep.tableaux() {
        println!("  {:?}", t.reading_word());
    }

    for i in 1..=rep.num_generators() {
        println!("\nmatrix of s_{i}:");
        for row in rep.generator(i) {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>6}")).collect();
            println!("  [{}]", cells.join(" "));
        }
        assert!(mat_is_identity(&mat_mul(rep.generator(i), rep.generator(i))));
    }
    println!("\nall generators square to the identity");

    println!("\ntraces at gamma_mu recover the characters:");
    for mu in Partition::all(lambda.size()) {
        let trace = character_from_rep(&rep, &mu).unwrap();
        let mn = mn_character(&lambda, &mu).unwrap();
        println!("  chi at cycle type ({mu}): trace {trace}, border-strip rule {mn}");
        assert_eq!(trace, mn);
    }
}
