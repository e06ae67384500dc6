//! Probe operator-normalization variants against the transcribed tables.

use galdef::charts::{build_gauge, Weight};
use galdef::monodromy::{gauge_kappa_roster, le30_table, specialize_ideal};
use polyring::{Ideal, Mat2, Poly, RingMap, UPoly};

fn main() {
    let assign: Vec<(&str, i64)> = vec![("p", 23), ("k", 8)];
    for label in galdef::charts::ALL_GAUGES {
        let chart = build_gauge(label, Weight::W30).unwrap();
        let roster = gauge_kappa_roster(label, "k");
        let table = specialize_ideal(&le30_table(label, "k"), &assign).unwrap();
        let a = {
            let images: Vec<Poly> = chart
                .roster
                .names()
                .iter()
                .map(|n| Poly::var(&roster, n))
                .collect();
            let emb = RingMap::new(&chart.roster, &roster, images).unwrap();
            chart.matrix.map_coeffs(&emb).unwrap()
        };
        let p = Poly::var(&roster, "p");
        let v = UPoly::v(&roster, &p);
        let kvar = Poly::var(&roster, "k");
        let da = a.derivative();
        let vda = Mat2::new(
            &v * &da.e[0][0],
            &v * &da.e[0][1],
            &v * &da.e[1][0],
            &v * &da.e[1][1],
        );
        let det = a.det();
        let mut found = Vec::new();
        for shift in -4i64..=4 {
            for sign in [1i64, -1] {
                // kappa_eff = sign*k + shift
                let keff = &kvar.scale(&polyring::rat(sign)) + &Poly::int(&roster, shift);
                let kc = UPoly::constant(keff);
                for right in [true, false] {
                    let b = if right {
                        // B = vA' - A diag(keff, 0)
                        vda.sub(&Mat2::new(
                            &a.e[0][0] * &kc,
                            UPoly::zero(&roster),
                            &a.e[1][0] * &kc,
                            UPoly::zero(&roster),
                        ))
                    } else {
                        // B = vA' - diag(keff, 0) A
                        vda.sub(&Mat2::new(
                            &a.e[0][0] * &kc,
                            &a.e[0][1] * &kc,
                            UPoly::zero(&roster),
                            UPoly::zero(&roster),
                        ))
                    };
                    for adj_right in [true, false] {
                        let m = if adj_right {
                            b.mul(&a.adjugate())
                        } else {
                            a.adjugate().mul(&b)
                        };
                        // conditions
                        let mut gens = vec![det.coeff(0), det.coeff(1), det.coeff(2)];
                        let mut ok = true;
                        for i in 0..2 {
                            for kcol in 0..2 {
                                let e = if (i, kcol) == (1, 0) {
                                    match m.entry(i, kcol).div_linear(&p) {
                                        Ok(x) => x,
                                        Err(_) => {
                                            ok = false;
                                            break;
                                        }
                                    }
                                } else {
                                    m.entry(i, kcol).clone()
                                };
                                gens.push(e.coeff(0));
                                gens.push(e.coeff(1));
                            }
                        }
                        if !ok {
                            continue;
                        }
                        let ideal = Ideal::new(&roster, gens).unwrap();
                        let spec = specialize_ideal(&ideal, &assign).unwrap();
                        if spec.equals(&table).unwrap() {
                            found.push(format!(
                                "keff={}k{}{} B-{} adj-{}",
                                if sign > 0 { "+" } else { "-" },
                                if shift >= 0 { "+" } else { "" },
                                shift,
                                if right { "right" } else { "left" },
                                if adj_right { "right" } else { "left" }
                            ));
                        }
                    }
                }
            }
        }
        println!("{label}: {:?}", found);
    }
}
