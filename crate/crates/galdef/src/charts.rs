//! Constructors for the universal gauge matrices and the multi-type
//! charts: the seven single-shape gauges, the three ten-variable charts
//! with their projection tables, and conjugation by the normalizer of the
//! Iwahori.
//!
//! Everything is built symbolically over a roster that carries the chart
//! variables plus the prime `p` as a formal variable; numeric runs
//! specialize `p` afterwards. Unit variables (the diagonal unit factors of
//! the displayed matrices) are dropped throughout: no ideal in scope
//! mentions them.

use crate::weyl::WeylFactor;
use polyring::{parse_poly, Mat2, Poly, Result, RingMap, Roster, UPoly};
use std::fmt;
use std::sync::Arc;

/// Labels for the seven gauge shapes (translation-first notation).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZLabel {
    T21,
    T12,
    T12s,
    T30,
    T03,
    T03s,
    T21s,
}

pub const ALL_GAUGES: [ZLabel; 7] = [
    ZLabel::T21,
    ZLabel::T12,
    ZLabel::T12s,
    ZLabel::T30,
    ZLabel::T03,
    ZLabel::T03s,
    ZLabel::T21s,
];

pub const MULTICHART_LABELS: [ZLabel; 3] = [ZLabel::T21, ZLabel::T12, ZLabel::T12s];

impl ZLabel {
    pub fn weyl_factor(&self) -> WeylFactor {
        match self {
            ZLabel::T21 => WeylFactor::translation((2, 1)),
            ZLabel::T12 => WeylFactor::translation((1, 2)),
            ZLabel::T12s => WeylFactor::translation_flip((1, 2)),
            ZLabel::T30 => WeylFactor::translation((3, 0)),
            ZLabel::T03 => WeylFactor::translation((0, 3)),
            ZLabel::T03s => WeylFactor::translation_flip((0, 3)),
            ZLabel::T21s => WeylFactor::translation_flip((2, 1)),
        }
    }

    pub fn from_weyl_factor(w: &WeylFactor) -> Option<ZLabel> {
        ALL_GAUGES.iter().copied().find(|l| l.weyl_factor() == *w)
    }

    pub fn parse(s: &str) -> Option<ZLabel> {
        crate::weyl::parse_factor(s).and_then(|w| ZLabel::from_weyl_factor(&w))
    }

    /// Is the shape admissible for the small weight (2,1)?
    pub fn in_adm_21(&self) -> bool {
        matches!(self, ZLabel::T21 | ZLabel::T12 | ZLabel::T12s)
    }

    /// Partner under conjugation by the Iwahori normalizer.
    pub fn conjugate(&self) -> ZLabel {
        match self {
            ZLabel::T21 => ZLabel::T12,
            ZLabel::T12 => ZLabel::T21,
            ZLabel::T12s => ZLabel::T12s,
            ZLabel::T30 => ZLabel::T03,
            ZLabel::T03 => ZLabel::T30,
            ZLabel::T03s => ZLabel::T21s,
            ZLabel::T21s => ZLabel::T03s,
        }
    }
}

impl fmt::Display for ZLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.weyl_factor())
    }
}

/// Dominant weights in scope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    W21,
    W30,
}

impl Weight {
    pub fn pair(&self) -> (i64, i64) {
        match self {
            Weight::W21 => (2, 1),
            Weight::W30 => (3, 0),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.pair();
        write!(f, "({a},{b})")
    }
}

/// A single-shape universal gauge: the polynomial ring of the chart (unit
/// variables dropped, `p` formal) and the 2x2 matrix in `u = v + p`.
#[derive(Debug, Clone)]
pub struct GaugeChart {
    pub label: ZLabel,
    pub roster: Arc<Roster>,
    pub matrix: Mat2,
    /// declared weight bound of the chart
    pub weight_bound: Weight,
}

fn pm(roster: &Arc<Roster>, src: &str) -> Poly {
    parse_poly(roster, src).unwrap_or_else(|e| panic!("bad entry `{src}`: {e}"))
}

/// u-polynomial from constant coefficients listed low to high.
fn up(roster: &Arc<Roster>, coeffs: &[&str]) -> UPoly {
    UPoly::from_coeffs(roster, coeffs.iter().map(|c| pm(roster, c)).collect())
}

/// `v * q(u)` with `v = u - p`.
fn v_times(roster: &Arc<Roster>, q: UPoly) -> UPoly {
    let p = pm(roster, "p");
    &UPoly::v(roster, &p) * &q
}

/// Chart variables of each gauge (unit variables dropped), in the listed
/// order, which also fixes the default term-order priority.
pub fn gauge_vars(label: ZLabel) -> Vec<&'static str> {
    match label {
        ZLabel::T21 => vec!["a0", "a1", "b0", "c0", "c1", "d0"],
        ZLabel::T12 => vec!["a0", "b0", "b1", "c0", "d0", "d1"],
        ZLabel::T12s => vec!["a0", "a1", "b0", "c0", "d0", "d1"],
        ZLabel::T30 => vec!["a0", "a1", "a2", "c0", "c1", "c2"],
        ZLabel::T03 => vec!["b0", "b1", "b2", "d0", "d1", "d2"],
        ZLabel::T03s => vec!["a0", "a1", "a2", "c0", "c1", "d0"],
        ZLabel::T21s => vec!["a0", "b0", "b1", "d0", "d1", "d2"],
    }
}

pub fn gauge_roster(label: ZLabel) -> Arc<Roster> {
    let mut names: Vec<String> = gauge_vars(label).iter().map(|s| s.to_string()).collect();
    names.push("p".to_string());
    Roster::new(names)
}

/// Builds the universal gauge matrix of a shape. The weight bound must be
/// (3,0), or (2,1) for the three shapes admissible at that weight.
pub fn build_gauge(label: ZLabel, weight_bound: Weight) -> Result<GaugeChart> {
    if weight_bound == Weight::W21 && !label.in_adm_21() {
        return Err(polyring::Error::Structural(format!(
            "shape {label} is not admissible for weight (2,1)"
        )));
    }
    let r = gauge_roster(label);
    let matrix = match label {
        ZLabel::T21 => Mat2::new(
            up(&r, &["a0", "a1", "1"]),
            up(&r, &["b0"]),
            v_times(&r, up(&r, &["c0", "c1"])),
            up(&r, &["d0", "1"]),
        ),
        ZLabel::T12 => Mat2::new(
            up(&r, &["a0", "1"]),
            up(&r, &["b0", "b1"]),
            v_times(&r, up(&r, &["c0"])),
            up(&r, &["d0", "d1", "1"]),
        ),
        ZLabel::T12s => Mat2::new(
            up(&r, &["a0", "a1"]),
            up(&r, &["b0", "1"]),
            v_times(&r, up(&r, &["c0", "1"])),
            up(&r, &["d0", "d1"]),
        ),
        ZLabel::T30 => Mat2::new(
            up(&r, &["a0", "a1", "a2", "1"]),
            UPoly::zero(&r),
            v_times(&r, up(&r, &["c0", "c1", "c2"])),
            up(&r, &["1"]),
        ),
        ZLabel::T03 => Mat2::new(
            up(&r, &["1"]),
            up(&r, &["b0", "b1", "b2"]),
            UPoly::zero(&r),
            up(&r, &["d0", "d1", "d2", "1"]),
        ),
        ZLabel::T03s => Mat2::new(
            up(&r, &["a0", "a1", "a2"]),
            up(&r, &["1"]),
            v_times(&r, up(&r, &["c0", "c1", "1"])),
            up(&r, &["d0"]),
        ),
        ZLabel::T21s => Mat2::new(
            up(&r, &["a0"]),
            up(&r, &["b0", "b1", "1"]),
            v_times(&r, up(&r, &["1"])),
            up(&r, &["d0", "d1", "d2"]),
        ),
    };
    Ok(GaugeChart {
        label,
        roster: r,
        matrix,
        weight_bound,
    })
}

impl GaugeChart {
    pub fn p(&self) -> Poly {
        pm(&self.roster, "p")
    }

    /// Degree-bound validation: writing the shape as `z t_nu`, the entry
    /// at position (i,k) has degree at most nu_k - [i < z(k)], with a
    /// monic entry of degree exactly nu_k at i = z(k); the lower-left
    /// entry is divisible by v.
    pub fn check_degree_bounds(&self) -> Result<()> {
        let w = self.label.weyl_factor();
        let nu = w.nu;
        let z = |k: usize| -> usize {
            if w.flip {
                1 - k
            } else {
                k
            }
        };
        let nuk = [nu.0, nu.1];
        for i in 0..2 {
            for k in 0..2 {
                let e = self.matrix.entry(i, k);
                let bound = nuk[k] - if (i as i64) < (z(k) as i64) { 1 } else { 0 };
                if i == z(k) {
                    let deg = e.degree().ok_or_else(|| {
                        polyring::Error::Structural(format!(
                            "pivot entry ({i},{k}) of {} is zero",
                            self.label
                        ))
                    })?;
                    if deg as i64 != nuk[k] || *e.leading_coeff().unwrap() != Poly::one(&self.roster)
                    {
                        return Err(polyring::Error::Structural(format!(
                            "pivot entry ({i},{k}) of {} is not monic of degree {}",
                            self.label, nuk[k]
                        )));
                    }
                } else if let Some(deg) = e.degree() {
                    if deg as i64 > bound {
                        return Err(polyring::Error::Structural(format!(
                            "entry ({i},{k}) of {} exceeds degree bound {bound}",
                            self.label
                        )));
                    }
                }
            }
        }
        if !self.matrix.entry(1, 0).divisible_by_v(&self.p()) {
            return Err(polyring::Error::Structural(format!(
                "lower-left entry of {} is not divisible by v",
                self.label
            )));
        }
        Ok(())
    }

    /// `A * z^{-1} * v^3` as a polynomial matrix: for the shape `z t_nu`
    /// this scales column k by `v^(3 - nu_k)` and then swaps the columns
    /// when the shape carries the flip.
    pub fn times_zinv_v3(&self) -> Mat2 {
        let w = self.label.weyl_factor();
        let nu = w.nu;
        let p = self.p();
        let v = UPoly::v(&self.roster, &p);
        let vpow = |e: i64| -> UPoly {
            let mut acc = UPoly::from_coeffs(&self.roster, vec![Poly::one(&self.roster)]);
            for _ in 0..e {
                acc = &acc * &v;
            }
            acc
        };
        let c0 = vpow(3 - nu.0);
        let c1 = vpow(3 - nu.1);
        let scaled = Mat2::new(
            &self.matrix.e[0][0] * &c0,
            &self.matrix.e[0][1] * &c1,
            &self.matrix.e[1][0] * &c0,
            &self.matrix.e[1][1] * &c1,
        );
        if w.flip {
            Mat2::new(
                scaled.e[0][1].clone(),
                scaled.e[0][0].clone(),
                scaled.e[1][1].clone(),
                scaled.e[1][0].clone(),
            )
        } else {
            scaled
        }
    }

    /// Specializes `p` to a numeric prime, dropping it from the roster.
    pub fn specialize(&self, p: i64) -> GaugeChart {
        let target = Roster::new(gauge_vars(self.label));
        let spec = specialize_p(&self.roster, &target, p);
        GaugeChart {
            label: self.label,
            roster: target,
            matrix: self.matrix.map_coeffs(&spec).expect("specialization total"),
            weight_bound: self.weight_bound,
        }
    }
}

/// Ring map sending `p` to a constant and every other variable to itself.
pub fn specialize_p(src: &Arc<Roster>, dst: &Arc<Roster>, p: i64) -> RingMap {
    let images = src
        .names()
        .iter()
        .map(|n| {
            if n == "p" {
                Poly::int(dst, p)
            } else {
                Poly::var(dst, n)
            }
        })
        .collect();
    RingMap::new(src, dst, images).expect("specialization map")
}

/// Conjugation of a 2x2 matrix by the Iwahori normalizer:
/// entries move as [[m22, m21/v], [v*m12, m11]].
pub fn iwahori_conjugate_mat(m: &Mat2, p: &Poly) -> Result<Mat2> {
    let roster = m.roster().clone();
    let v = UPoly::v(&roster, p);
    Ok(Mat2::new(
        m.e[1][1].clone(),
        m.e[1][0].div_linear(p)?,
        &v * &m.e[0][1],
        m.e[0][0].clone(),
    ))
}

/// Variable relabeling realizing the conjugation on chart coordinates:
/// a ring map from the chart of `label` onto the chart of its partner.
pub fn gauge_relabel(label: ZLabel) -> RingMap {
    let src = gauge_roster(label);
    let dst = gauge_roster(label.conjugate());
    let table: Vec<(&str, &str)> = match label {
        ZLabel::T21 => vec![
            ("a0", "d0"),
            ("a1", "d1"),
            ("b0", "c0"),
            ("c0", "b0"),
            ("c1", "b1"),
            ("d0", "a0"),
        ],
        ZLabel::T12 => vec![
            ("a0", "d0"),
            ("b0", "c0"),
            ("b1", "c1"),
            ("c0", "b0"),
            ("d0", "a0"),
            ("d1", "a1"),
        ],
        ZLabel::T12s => vec![
            ("a0", "d0"),
            ("a1", "d1"),
            ("b0", "c0"),
            ("c0", "b0"),
            ("d0", "a0"),
            ("d1", "a1"),
        ],
        ZLabel::T30 => vec![
            ("a0", "d0"),
            ("a1", "d1"),
            ("a2", "d2"),
            ("c0", "b0"),
            ("c1", "b1"),
            ("c2", "b2"),
        ],
        ZLabel::T03 => vec![
            ("b0", "c0"),
            ("b1", "c1"),
            ("b2", "c2"),
            ("d0", "a0"),
            ("d1", "a1"),
            ("d2", "a2"),
        ],
        ZLabel::T03s => vec![
            ("a0", "d0"),
            ("a1", "d1"),
            ("a2", "d2"),
            ("c0", "b0"),
            ("c1", "b1"),
            ("d0", "a0"),
        ],
        ZLabel::T21s => vec![
            ("a0", "d0"),
            ("b0", "c0"),
            ("b1", "c1"),
            ("d0", "a0"),
            ("d1", "a1"),
            ("d2", "a2"),
        ],
    };
    let mut pairs: Vec<(&str, Poly)> = table
        .into_iter()
        .map(|(a, b)| (a, Poly::var(&dst, b)))
        .collect();
    pairs.push(("p", Poly::var(&dst, "p")));
    RingMap::from_table(&src, &dst, &pairs).expect("relabeling map")
}

/// Conjugated gauge: the matrix moved by the normalizer and relabeled
/// onto the partner shape's chart.
pub fn conjugate_gauge(chart: &GaugeChart) -> Result<GaugeChart> {
    let conj = iwahori_conjugate_mat(&chart.matrix, &chart.p())?;
    let relabel = gauge_relabel(chart.label);
    Ok(GaugeChart {
        label: chart.label.conjugate(),
        roster: relabel.dst().clone(),
        matrix: conj.map_coeffs(&relabel)?,
        weight_bound: chart.weight_bound,
    })
}

/// A multi-type chart: ten chart variables (unit diagonals dropped), the
/// matrix `Psi * v^3`, and the projection table onto the three gauge
/// shapes it covers.
#[derive(Debug, Clone)]
pub struct MultiChart {
    pub label: ZLabel,
    pub roster: Arc<Roster>,
    pub psi_v3: Mat2,
    /// projections onto `z` in {u, u t_alpha, u t_-alpha}; the second
    /// component of each entry records which of the three positions the
    /// target occupies: 0 => z = u, +1 => z = u t_alpha, -1 => z = u t_-alpha
    pub projections: Vec<(ZLabel, i32, RingMap)>,
}

pub fn multichart_vars(label: ZLabel) -> Vec<&'static str> {
    match label {
        ZLabel::T21 => vec![
            "A0", "A1", "A2", "B0", "B1", "G0", "G1", "G2", "D0", "D1",
        ],
        ZLabel::T12s => vec![
            "A0", "A1", "B0", "B1", "B2", "G0", "G1", "G2", "D0", "D1",
        ],
        ZLabel::T12 => vec![
            "A0", "A1", "B0", "B1", "B2", "G0", "G1", "D0", "D1", "D2",
        ],
        _ => panic!("no multi-type chart for shape {label}"),
    }
}

pub fn multichart_roster(label: ZLabel) -> Arc<Roster> {
    let mut names: Vec<String> = multichart_vars(label).iter().map(|s| s.to_string()).collect();
    names.push("p".to_string());
    Roster::new(names)
}

/// The translate `u * t_{sign * alpha}` of a multichart label.
pub fn translate_label(label: ZLabel, sign: i32) -> ZLabel {
    let alpha = WeylFactor::translation((sign as i64, -(sign as i64)));
    let moved = label.weyl_factor().mul(&alpha);
    ZLabel::from_weyl_factor(&moved)
        .unwrap_or_else(|| panic!("translate of {label} by {sign} left the seven shapes"))
}

fn projection_map(src: &Arc<Roster>, dst_label: ZLabel, table: &[(&str, &str)]) -> RingMap {
    let dst = gauge_roster(dst_label);
    let mut pairs: Vec<(&str, Poly)> = table
        .iter()
        .map(|(greek, expr)| (*greek, pm(&dst, expr)))
        .collect();
    pairs.push(("p", Poly::var(&dst, "p")));
    RingMap::from_table(src, &dst, &pairs).expect("projection map")
}

/// Builds the multi-type chart of a shape. The two displayed shapes are
/// transcribed; the third is generated by conjugation and certified by
/// the same projection identities.
pub fn build_multichart(label: ZLabel) -> Result<MultiChart> {
    match label {
        ZLabel::T21 => {
            let r = multichart_roster(label);
            let psi_v3 = Mat2::new(
                up(&r, &["A0", "A1", "A2", "1"]),
                v_times(&r, up(&r, &["B0", "B1"])),
                v_times(&r, up(&r, &["G0", "G1", "G2"])),
                v_times(&r, up(&r, &["D0", "D1", "1"])),
            );
            let projections = vec![
                (
                    ZLabel::T21,
                    0,
                    projection_map(
                        &r,
                        ZLabel::T21,
                        &[
                            ("A2", "a1 - p"),
                            ("A1", "a0 - p*a1"),
                            ("A0", "-p*a0"),
                            ("B1", "b0"),
                            ("B0", "-p*b0"),
                            ("G2", "c1"),
                            ("G1", "c0 - p*c1"),
                            ("G0", "-p*c0"),
                            ("D1", "d0 - p"),
                            ("D0", "-p*d0"),
                        ],
                    ),
                ),
                (
                    ZLabel::T30,
                    1,
                    projection_map(
                        &r,
                        ZLabel::T30,
                        &[
                            ("A2", "a2"),
                            ("A1", "a1"),
                            ("A0", "a0"),
                            ("B1", "0"),
                            ("B0", "0"),
                            ("G2", "c2"),
                            ("G1", "c1"),
                            ("G0", "c0"),
                            ("D1", "-2*p"),
                            ("D0", "p^2"),
                        ],
                    ),
                ),
                (
                    ZLabel::T12,
                    -1,
                    projection_map(
                        &r,
                        ZLabel::T12,
                        &[
                            ("A2", "a0 - 2*p"),
                            ("A1", "-2*p*a0 + p^2"),
                            ("A0", "p^2*a0"),
                            ("B1", "b1"),
                            ("B0", "b0"),
                            ("G2", "c0"),
                            ("G1", "-2*p*c0"),
                            ("G0", "p^2*c0"),
                            ("D1", "d1"),
                            ("D0", "d0"),
                        ],
                    ),
                ),
            ];
            Ok(MultiChart {
                label,
                roster: r,
                psi_v3,
                projections,
            })
        }
        ZLabel::T12s => {
            let r = multichart_roster(label);
            let psi_v3 = Mat2::new(
                v_times(&r, up(&r, &["A0", "A1", "1"])),
                up(&r, &["B0", "B1", "B2"]),
                v_times(&r, up(&r, &["G0", "G1", "G2"])),
                v_times(&r, up(&r, &["D0", "D1", "1"])),
            );
            let projections = vec![
                (
                    ZLabel::T12s,
                    0,
                    projection_map(
                        &r,
                        ZLabel::T12s,
                        &[
                            ("A0", "-p*b0"),
                            ("A1", "b0 - p"),
                            ("B0", "-p*a0"),
                            ("B1", "a0 - p*a1"),
                            ("B2", "a1"),
                            ("G0", "-p*d0"),
                            ("G1", "d0 - p*d1"),
                            ("G2", "d1"),
                            ("D0", "-p*c0"),
                            ("D1", "c0 - p"),
                        ],
                    ),
                ),
                (
                    ZLabel::T03s,
                    1,
                    projection_map(
                        &r,
                        ZLabel::T03s,
                        &[
                            ("A0", "p^2"),
                            ("A1", "-2*p"),
                            ("B0", "a0"),
                            ("B1", "a1"),
                            ("B2", "a2"),
                            ("G0", "p^2*d0"),
                            ("G1", "-2*d0*p"),
                            ("G2", "d0"),
                            ("D0", "c0"),
                            ("D1", "c1"),
                        ],
                    ),
                ),
                (
                    ZLabel::T21s,
                    -1,
                    projection_map(
                        &r,
                        ZLabel::T21s,
                        &[
                            ("A0", "b0"),
                            ("A1", "b1"),
                            ("B0", "p^2*a0"),
                            ("B1", "-2*p*a0"),
                            ("B2", "a0"),
                            ("G0", "d0"),
                            ("G1", "d1"),
                            ("G2", "d2"),
                            ("D0", "p^2"),
                            ("D1", "-2*p"),
                        ],
                    ),
                ),
            ];
            Ok(MultiChart {
                label,
                roster: r,
                psi_v3,
                projections,
            })
        }
        ZLabel::T12 => conjugate_multichart(&build_multichart(ZLabel::T21)?),
        other => Err(polyring::Error::Structural(format!(
            "no multi-type chart for shape {other}"
        ))),
    }
}

/// Greek-coordinate relabeling for the conjugated chart.
fn multichart_relabel(from: ZLabel) -> RingMap {
    match from {
        ZLabel::T21 => {
            let src = multichart_roster(ZLabel::T21);
            let dst = multichart_roster(ZLabel::T12);
            let pairs: Vec<(&str, Poly)> = vec![
                ("A2", Poly::var(&dst, "D2")),
                ("A1", Poly::var(&dst, "D1")),
                ("A0", Poly::var(&dst, "D0")),
                ("B1", Poly::var(&dst, "G1")),
                ("B0", Poly::var(&dst, "G0")),
                ("G2", Poly::var(&dst, "B2")),
                ("G1", Poly::var(&dst, "B1")),
                ("G0", Poly::var(&dst, "B0")),
                ("D1", Poly::var(&dst, "A1")),
                ("D0", Poly::var(&dst, "A0")),
                ("p", Poly::var(&dst, "p")),
            ];
            RingMap::from_table(&src, &dst, &pairs).expect("chart relabeling")
        }
        _ => panic!("only the transcribed chart is conjugated"),
    }
}

/// Conjugation of a multi-type chart by the Iwahori normalizer: moves the
/// matrix, relabels the coordinates, and transports every projection to
/// the conjugated gauge target.
pub fn conjugate_multichart(chart: &MultiChart) -> Result<MultiChart> {
    let relabel = multichart_relabel(chart.label);
    let p = pm(&chart.roster, "p");
    let conj = iwahori_conjugate_mat(&chart.psi_v3, &p)?;
    let psi_v3 = conj.map_coeffs(&relabel)?;
    let inverse_relabel = invert_renaming(&relabel);
    let mut projections = Vec::new();
    for (z, pos, pr) in &chart.projections {
        let gauge_move = gauge_relabel(*z);
        // new projection = gauge relabel ∘ old pr ∘ inverse chart relabel
        let composed = inverse_relabel.then(pr)?.then(&gauge_move)?;
        // conjugation swaps the two root directions
        projections.push((z.conjugate(), -pos, composed));
    }
    Ok(MultiChart {
        label: chart.label.conjugate(),
        roster: relabel.dst().clone(),
        psi_v3,
        projections,
    })
}

/// Inverse of a variable-renaming map.
fn invert_renaming(m: &RingMap) -> RingMap {
    let src = m.dst().clone();
    let dst = m.src().clone();
    let mut images = vec![None; src.len()];
    for name in dst.names() {
        let img = m.image_of(name).expect("renaming is total");
        let target: Vec<&str> = img
            .terms()
            .map(|(mono, _)| {
                let i = (0..src.len()).find(|&i| mono.exp(i) == 1).unwrap();
                src.name(i)
            })
            .collect();
        assert_eq!(target.len(), 1, "not a renaming");
        let idx = src.index_of(target[0]).unwrap();
        images[idx] = Some(Poly::var(&dst, name));
    }
    let images: Vec<Poly> = images.into_iter().map(|o| o.expect("bijective")).collect();
    RingMap::new(&src, &dst, images).expect("inverse renaming")
}

impl MultiChart {
    pub fn p(&self) -> Poly {
        pm(&self.roster, "p")
    }

    /// The defining identity of the chart: every projection sends
    /// `Psi v^3` to `A^z z^{-1} v^3` exactly.
    pub fn check_projection_identities(&self) -> Result<()> {
        for (z, _, pr) in &self.projections {
            let gauge = build_gauge(*z, Weight::W30)?;
            let lhs = self.psi_v3.map_coeffs(pr)?;
            let rhs = gauge.times_zinv_v3();
            if lhs != rhs {
                return Err(polyring::Error::Structural(format!(
                    "projection identity fails for chart {} onto {}",
                    self.label, z
                )));
            }
        }
        Ok(())
    }

    pub fn projection(&self, z: ZLabel) -> Option<&RingMap> {
        self.projections
            .iter()
            .find(|(l, _, _)| *l == z)
            .map(|(_, _, pr)| pr)
    }

    /// Projection target at a signed position: 0 the chart's own shape,
    /// ±1 the root translates.
    pub fn projection_at(&self, pos: i32) -> (&ZLabel, &RingMap) {
        self.projections
            .iter()
            .find(|(_, q, _)| *q == pos)
            .map(|(l, _, pr)| (l, pr))
            .expect("all three positions are present")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_roundtrip() {
        for l in ALL_GAUGES {
            assert_eq!(ZLabel::parse(&l.to_string()), Some(l));
            assert_eq!(l.conjugate().conjugate(), l);
        }
        assert_eq!(ZLabel::parse("t(2,1)"), Some(ZLabel::T21));
        assert_eq!(ZLabel::parse("t(1,2)s"), Some(ZLabel::T12s));
    }

    #[test]
    fn translates() {
        assert_eq!(translate_label(ZLabel::T21, 1), ZLabel::T30);
        assert_eq!(translate_label(ZLabel::T21, -1), ZLabel::T12);
        assert_eq!(translate_label(ZLabel::T12s, 1), ZLabel::T03s);
        assert_eq!(translate_label(ZLabel::T12s, -1), ZLabel::T21s);
        assert_eq!(translate_label(ZLabel::T12, 1), ZLabel::T21);
        assert_eq!(translate_label(ZLabel::T12, -1), ZLabel::T03);
    }

    #[test]
    fn gauges_satisfy_degree_bounds() {
        for l in ALL_GAUGES {
            let g = build_gauge(l, Weight::W30).unwrap();
            g.check_degree_bounds().unwrap();
        }
    }

    #[test]
    fn t21_entries_match_display() {
        let g = build_gauge(ZLabel::T21, Weight::W30).unwrap();
        let r = &g.roster;
        // (1,1) entry is u^2 + a1 u + a0
        assert_eq!(g.matrix.entry(0, 0).coeff(0), pm(r, "a0"));
        assert_eq!(g.matrix.entry(0, 0).coeff(1), pm(r, "a1"));
        assert_eq!(g.matrix.entry(0, 0).coeff(2), pm(r, "1"));
        // (2,1) entry v(c1 u + c0) expands to c1 u^2 + (c0 - p c1) u - p c0
        assert_eq!(g.matrix.entry(1, 0).coeff(2), pm(r, "c1"));
        assert_eq!(g.matrix.entry(1, 0).coeff(1), pm(r, "c0 - p*c1"));
        assert_eq!(g.matrix.entry(1, 0).coeff(0), pm(r, "-p*c0"));
    }

    #[test]
    fn t30_has_zero_corner_and_unit() {
        let g = build_gauge(ZLabel::T30, Weight::W30).unwrap();
        assert!(g.matrix.entry(0, 1).is_zero());
        assert_eq!(g.matrix.entry(1, 1).coeff(0), Poly::one(&g.roster));
        assert_eq!(g.matrix.entry(1, 1).degree(), Some(0));
    }

    #[test]
    fn weight_21_rejected_off_small_admissible_set() {
        assert!(build_gauge(ZLabel::T30, Weight::W21).is_err());
        assert!(build_gauge(ZLabel::T21, Weight::W21).is_ok());
    }

    #[test]
    fn projection_identities_hold_for_all_charts() {
        for l in MULTICHART_LABELS {
            let chart = build_multichart(l).unwrap();
            chart.check_projection_identities().unwrap();
        }
    }

    #[test]
    fn conjugation_is_involutive_on_gauges() {
        for l in ALL_GAUGES {
            let g = build_gauge(l, Weight::W30).unwrap();
            let once = conjugate_gauge(&g).unwrap();
            let twice = conjugate_gauge(&once).unwrap();
            assert_eq!(twice.label, g.label);
            assert_eq!(twice.matrix, g.matrix);
        }
    }

    #[test]
    fn conjugation_matches_partner_shape() {
        for l in ALL_GAUGES {
            let g = build_gauge(l, Weight::W30).unwrap();
            let conj = conjugate_gauge(&g).unwrap();
            let partner = build_gauge(l.conjugate(), Weight::W30).unwrap();
            assert_eq!(conj.matrix, partner.matrix, "conjugate of {l}");
        }
    }

    #[test]
    fn conjugation_preserves_determinant_and_swaps_diagonal() {
        for l in ALL_GAUGES {
            let g = build_gauge(l, Weight::W30).unwrap();
            let p = g.p();
            let c = iwahori_conjugate_mat(&g.matrix, &p).unwrap();
            assert_eq!(c.det(), g.matrix.det());
            assert_eq!(c.e[0][0], g.matrix.e[1][1]);
            assert_eq!(c.e[1][1], g.matrix.e[0][0]);
        }
    }

    #[test]
    fn multichart_rosters_have_ten_vars() {
        for l in MULTICHART_LABELS {
            let chart = build_multichart(l).unwrap();
            assert_eq!(chart.roster.len(), 11); // 10 chart vars + p
            assert_eq!(chart.projections.len(), 3);
            for (z, pos, pr) in &chart.projections {
                assert!(pr.is_surjective(), "{l} -> {z} (pos {pos})");
                assert_eq!(translate_label(l, *pos), *z);
            }
        }
    }

    #[test]
    fn t21_chart_psi_entry() {
        let chart = build_multichart(ZLabel::T21).unwrap();
        let r = &chart.roster;
        // (1,1) entry of Psi v^3 is u^3 + A2 u^2 + A1 u + A0
        assert_eq!(chart.psi_v3.entry(0, 0).coeff(3), pm(r, "1"));
        assert_eq!(chart.psi_v3.entry(0, 0).coeff(2), pm(r, "A2"));
    }

    #[test]
    fn specialization_drops_p() {
        let g = build_gauge(ZLabel::T21, Weight::W30).unwrap();
        let s = g.specialize(23);
        assert!(s.roster.index_of("p").is_none());
        // v(c1 u + c0) at p=23: u^0 coefficient is -23 c0
        assert_eq!(s.matrix.entry(1, 0).coeff(0), pm(&s.roster, "-23*c0"));
    }
}
