//! The character table of the symmetric group two ways: the
//! Murnaghan-Nakayama border-strip rule and the standard-tableau weight
//! sum, which must agree entry by entry.

use exactrep::symgroup::{character_table, roichman_character};

fn main() {
    let n = 5;
    let (parts, table) = character_table(n).unwrap();

    let header: Vec<String> = parts.iter().map(|p| format!("({p})")).collect();
    println!("character table of S_{n} (columns are cycle types):");
    println!("{:>12} {}", "", header.join("  "));
    for (lambda, row) in parts.iter().zip(&table) {
        let values: Vec<String> = row.iter().map(|v| format!("{v:>7}")).collect();
        println!("{:>12} {}", format!("({lambda})"), values.join("  "));
    }

    // Cross-check every entry against the independent tableau rule.
    for (lambda, row) in parts.iter().zip(&table) {
        for (mu, &value) in parts.iter().zip(row) {
            assert_eq!(roichman_character(lambda, mu).unwrap(), value);
        }
    }
    println!("\nevery entry agrees with the standard-tableau weight rule");
}
