//! Randomized property suites for the polynomial/ideal engine.

use polyring::{buchberger, is_groebner_basis, Ideal, Mono, Poly, Rat, RingMap, Roster, TermOrder};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::sync::Arc;

fn random_poly(rng: &mut StdRng, roster: &Arc<Roster>, max_deg: u32, max_terms: usize) -> Poly {
    let nterms = rng.gen_range(0..=max_terms);
    let mut p = Poly::zero(roster);
    for _ in 0..nterms {
        let mut e = vec![0u32; roster.len()];
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            let i = rng.gen_range(0..roster.len());
            e[i] += 1;
        }
        let c = rng.gen_range(-6i64..=6);
        let t = Poly::monomial(roster, Mono(e), Rat::from(polyring::Int::from(c)));
        p = &p + &t;
    }
    p
}

fn random_ideal(rng: &mut StdRng, roster: &Arc<Roster>, ngens: usize) -> Ideal {
    let gens = (0..ngens)
        .map(|_| random_poly(rng, roster, 3, 3))
        .collect();
    Ideal::new(roster, gens).unwrap()
}

#[test]
fn membership_is_linear_over_the_ring() {
    // member(f, I) and member(g, I) imply member(a*f + b*g, I) for random
    // polynomial multipliers a, b. 200 randomized instances.
    let mut rng = StdRng::seed_from_u64(17);
    let roster = Roster::parse("x,y,z,w");
    for _ in 0..200 {
        let ideal = random_ideal(&mut rng, &roster, 2);
        // f, g constructed inside I by combining generators
        let gens = ideal.generators();
        if gens.is_empty() {
            continue;
        }
        let mk = |rng: &mut StdRng| {
            let mut acc = Poly::zero(&roster);
            for g in gens {
                let c = random_poly(rng, &roster, 2, 2);
                acc = &acc + &(&c * g);
            }
            acc
        };
        let f = mk(&mut rng);
        let g = mk(&mut rng);
        assert!(ideal.contains(&f).unwrap());
        assert!(ideal.contains(&g).unwrap());
        let a = random_poly(&mut rng, &roster, 3, 3);
        let b = random_poly(&mut rng, &roster, 3, 3);
        let combo = &(&a * &f) + &(&b * &g);
        assert!(ideal.contains(&combo).unwrap());
    }
}

#[test]
fn groebner_is_deterministic_and_certified() {
    // Identical output across repeated runs and generator permutations,
    // and the result passes the S-polynomial certificate.
    let mut rng = StdRng::seed_from_u64(23);
    let roster = Roster::parse("x,y,z");
    let order = TermOrder::grevlex(&roster);
    for _ in 0..60 {
        let mut gens: Vec<Poly> = (0..3).map(|_| random_poly(&mut rng, &roster, 3, 3)).collect();
        let b1 = buchberger(&gens, &order);
        let again = buchberger(&gens, &order);
        assert_eq!(b1, again);
        // permute
        gens.reverse();
        let b2 = buchberger(&gens, &order);
        assert_eq!(b1, b2);
        assert!(is_groebner_basis(&b1, &order));
    }
}

#[test]
fn intersection_contained_in_both_sides() {
    let mut rng = StdRng::seed_from_u64(31);
    let roster = Roster::parse("x,y,z");
    for _ in 0..40 {
        let a = random_ideal(&mut rng, &roster, 2);
        let b = random_ideal(&mut rng, &roster, 2);
        let c = a.intersect(&b).unwrap();
        assert!(a.contains_ideal(&c).unwrap());
        assert!(b.contains_ideal(&c).unwrap());
    }
}

#[test]
fn saturation_grows_and_is_idempotent() {
    let mut rng = StdRng::seed_from_u64(37);
    let roster = Roster::parse("x,y,z");
    for _ in 0..40 {
        let a = random_ideal(&mut rng, &roster, 2);
        let mut f = random_poly(&mut rng, &roster, 2, 2);
        if f.is_zero() {
            f = Poly::var(&roster, "x");
        }
        let s = a.saturate(&f).unwrap();
        assert!(s.contains_ideal(&a).unwrap());
        let ss = s.saturate(&f).unwrap();
        assert!(ss.equals(&s).unwrap());
    }
}

#[test]
fn preimage_respects_membership() {
    // member(f, preimage(I)) iff member(pr(f), I), for random f.
    let mut rng = StdRng::seed_from_u64(41);
    let src = Roster::parse("x,y,z");
    let dst = Roster::parse("a,b");
    for _ in 0..25 {
        // random surjective-ish map: send x -> a, y -> b, z -> random
        let images = vec![
            Poly::var(&dst, "a"),
            Poly::var(&dst, "b"),
            random_poly(&mut rng, &dst, 2, 2),
        ];
        let pr = RingMap::new(&src, &dst, images).unwrap();
        assert!(pr.is_surjective());
        let ideal = random_ideal(&mut rng, &dst, 2);
        let pre = pr.preimage(&ideal).unwrap();
        for _ in 0..8 {
            let f = random_poly(&mut rng, &src, 3, 3);
            let lhs = pre.contains(&f).unwrap();
            let rhs = ideal.contains(&pr.apply(&f).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "preimage membership mismatch for {f}");
        }
    }
}

#[test]
fn normal_form_is_canonical_modulo_ideal() {
    // f - NF(f) lies in the ideal, and NF(f + g) = NF(f) for g in I.
    let mut rng = StdRng::seed_from_u64(43);
    let roster = Roster::parse("x,y,z");
    let order = TermOrder::grevlex(&roster);
    for _ in 0..60 {
        let ideal = random_ideal(&mut rng, &roster, 2);
        let f = random_poly(&mut rng, &roster, 3, 4);
        let nf = ideal.normal_form(&f, &order).unwrap();
        assert!(ideal.contains(&(&f - &nf)).unwrap());
        if let Some(g) = ideal.generators().first() {
            let h = random_poly(&mut rng, &roster, 2, 2);
            let shifted = &f + &(&h * g);
            let nf2 = ideal.normal_form(&shifted, &order).unwrap();
            assert_eq!(nf, nf2);
        }
    }
}
