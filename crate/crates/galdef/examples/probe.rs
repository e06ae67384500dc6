//! Scratch probe for debugging derivation mismatches.

use galdef::charts::{build_gauge, Weight, ZLabel};
use galdef::monodromy::{derive_le_ideal, le30_table, specialize_ideal};
use polyring::TermOrder;

fn main() {
    let assign: Vec<(&str, i64)> = vec![("p", 23), ("k", 8)];
    for label in galdef::charts::ALL_GAUGES {
        let chart = build_gauge(label, Weight::W30).unwrap();
        let derived = specialize_ideal(&derive_le_ideal(&chart, Weight::W30, "k").unwrap(), &assign)
            .unwrap();
        let table = specialize_ideal(&le30_table(label, "k"), &assign).unwrap();
        let ord = TermOrder::grevlex(derived.roster());
        println!("== {label}");
        for g in table.generators() {
            let nf = derived.normal_form(g, &ord).unwrap();
            if !nf.is_zero() {
                println!("  table gen NOT in derived: {}", g.render(&ord));
            }
        }
        for g in derived.generators() {
            let nf = table.normal_form(g, &ord).unwrap();
            if !nf.is_zero() {
                println!("  derived gen NOT in table: {}  (nf: {})", g.render(&ord), nf.render(&ord));
            }
        }
    }
}
