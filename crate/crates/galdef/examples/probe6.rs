//! Scaling probe for the distortion checks at the run seed.
use galdef::verify::{check_distortion_lemmas, Verdict};
use std::time::Instant;

fn main() {
    for n in [10usize, 25, 50] {
        let t = Instant::now();
        let e = check_distortion_lemmas(n, 7);
        let fails = e.iter().filter(|x| x.verdict == Verdict::Fail).count();
        println!(
            "trials={n}: {} entries, {fails} failures, {:?}",
            e.len(),
            t.elapsed()
        );
    }
}
