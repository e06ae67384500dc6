//! Timing probe for the symbolic ledger pipeline.
use galdef::charts::{build_multichart, Weight, ZLabel};
use galdef::monodromy::k_ideal;
use galdef::verify::{check_arm_cyclicity, check_higherweight, check_wchi3_ledger, RunConfig};
use std::time::Instant;

fn main() {
    let chart = build_multichart(ZLabel::T21).unwrap();
    for (z, lambda, name) in [
        (ZLabel::T21, Weight::W21, "ku"),
        (ZLabel::T30, Weight::W30, "kp"),
        (ZLabel::T12, Weight::W30, "km"),
        (ZLabel::T30, Weight::W21, "kp"),
        (ZLabel::T12, Weight::W21, "km"),
    ] {
        let t = Instant::now();
        let ideal = k_ideal(&chart, z, lambda, name).unwrap();
        println!(
            "k_ideal({z}, {lambda}, {name}): {} gens in {:?}",
            ideal.generators().len(),
            t.elapsed()
        );
    }
    let cfg = RunConfig::default_at(23, 1);
    let t = Instant::now();
    let e = check_higherweight(&cfg, 0, ZLabel::T21, 1);
    println!("higherweight T21: {} entries in {:?}", e.len(), t.elapsed());
    let t = Instant::now();
    let e = check_higherweight(&cfg, 0, ZLabel::T12, 1);
    println!("higherweight T12: {} entries in {:?}", e.len(), t.elapsed());
    let t = Instant::now();
    let e = check_arm_cyclicity(&cfg, 0, ZLabel::T21, 1);
    println!("arm T21+: {} entries in {:?}", e.len(), t.elapsed());
    let t = Instant::now();
    let e = check_arm_cyclicity(&cfg, 0, ZLabel::T12s, -1);
    println!("arm T12s-: {} entries in {:?}", e.len(), t.elapsed());
    let t = Instant::now();
    let e = check_wchi3_ledger(&cfg, 0, ZLabel::T21);
    println!("wchi3 T21: {} entries in {:?}", e.len(), t.elapsed());
    let t = Instant::now();
    let e = check_wchi3_ledger(&cfg, 0, ZLabel::T12s);
    println!("wchi3 T12s: {} entries in {:?}", e.len(), t.elapsed());
}
