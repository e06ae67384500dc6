//! Per-instance timing for the distortion randomized checks.
use polyring::{Ideal, Poly, Roster};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7 ^ 0xd15);
    let roster = Roster::parse("x,y,z,p");
    let rand_linear = |rng: &mut ChaCha8Rng| -> Poly {
        let mut acc = Poly::int(&roster, rng.gen_range(-2i64..=2));
        for v in 0..3usize {
            let c = rng.gen_range(-2i64..=2);
            if c != 0 && rng.gen_bool(0.6) {
                let mut e = vec![0u32; roster.len()];
                e[v] = 1;
                acc = &acc + &Poly::monomial(&roster, polyring::Mono(e), polyring::rat(c));
            }
        }
        acc
    };
    for i in 0..30 {
        let t = Instant::now();
        let pvar = Poly::var(&roster, "p");
        let x = rand_linear(&mut rng);
        let y = rand_linear(&mut rng);
        let al = rand_linear(&mut rng);
        let be = rand_linear(&mut rng);
        let ga = rand_linear(&mut rng);
        let de = rand_linear(&mut rng);
        let i1 = Ideal::new(&roster, vec![&x + &(&pvar * &al), &y + &(&pvar * &be)]).unwrap();
        let i2 = Ideal::new(&roster, vec![&x + &(&pvar * &ga), &y + &(&pvar * &de)]).unwrap();
        let conclusion = &(&(&de - &be) * &x) + &(&(&al - &ga) * &y);
        let target = i1.intersect(&i2).unwrap().plus(&[pvar.clone()]).unwrap();
        let ok = target.contains(&conclusion).unwrap();
        println!("instance {i}: ok={ok} in {:?} | x={x} y={y}", t.elapsed());
    }
}
