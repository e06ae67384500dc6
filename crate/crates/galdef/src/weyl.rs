//! Extended affine Weyl group combinatorics for GL2 across `f` embeddings:
//! Bruhat order (dual convention), admissible sets, their filtered variants,
//! and the group elements attached to lowest alcove presentations.

use serde::{Deserialize, Serialize};
use std::fmt;

/// One embedding factor `z * t_nu` of the extended affine Weyl group of
/// GL2: `z` is trivial or the flip, `nu` an integer translation.
///
/// Group law: `(z1 t_a)(z2 t_b) = z1 z2 t_{z2^{-1}(a) + b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylFactor {
    pub flip: bool,
    pub nu: (i64, i64),
}

impl WeylFactor {
    pub const IDENTITY: WeylFactor = WeylFactor {
        flip: false,
        nu: (0, 0),
    };

    pub fn translation(nu: (i64, i64)) -> WeylFactor {
        WeylFactor { flip: false, nu }
    }

    /// The element written `t_mu s` in translation-first form.
    pub fn translation_flip(mu: (i64, i64)) -> WeylFactor {
        // t_mu s = s t_{s(mu)}
        WeylFactor {
            flip: true,
            nu: (mu.1, mu.0),
        }
    }

    pub fn flip_only() -> WeylFactor {
        WeylFactor {
            flip: true,
            nu: (0, 0),
        }
    }

    fn apply_z(flip: bool, v: (i64, i64)) -> (i64, i64) {
        if flip {
            (v.1, v.0)
        } else {
            v
        }
    }

    pub fn mul(&self, rhs: &WeylFactor) -> WeylFactor {
        WeylFactor {
            flip: self.flip ^ rhs.flip,
            nu: {
                let a = Self::apply_z(rhs.flip, self.nu);
                (a.0 + rhs.nu.0, a.1 + rhs.nu.1)
            },
        }
    }

    pub fn inverse(&self) -> WeylFactor {
        // (z t_nu)^{-1} = z t_{z(-nu)}
        let m = Self::apply_z(self.flip, (-self.nu.0, -self.nu.1));
        WeylFactor {
            flip: self.flip,
            nu: m,
        }
    }

    /// Image in the length-0 coset group: the total translation degree.
    pub fn omega_degree(&self) -> i64 {
        self.nu.0 + self.nu.1
    }

    /// Length for the dual Bruhat order (opposite Borel convention).
    pub fn dual_length(&self) -> i64 {
        if self.flip {
            (self.nu.0 - self.nu.1 - 1).abs()
        } else {
            (self.nu.1 - self.nu.0).abs()
        }
    }

    /// Translation part in the `t_mu z` normal form used for display.
    pub fn display_translation(&self) -> (i64, i64) {
        if self.flip {
            (self.nu.1, self.nu.0)
        } else {
            self.nu
        }
    }
}

impl fmt::Display for WeylFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.display_translation();
        if *self == WeylFactor::IDENTITY {
            return write!(f, "e");
        }
        if t == (0, 0) && self.flip {
            return write!(f, "s");
        }
        write!(f, "t({},{})", t.0, t.1)?;
        if self.flip {
            write!(f, "s")?;
        }
        Ok(())
    }
}

/// Parses `t(a,b)`, `t(a,b)s`, `s`, `e`.
pub fn parse_factor(s: &str) -> Option<WeylFactor> {
    let s = s.trim();
    if s == "e" {
        return Some(WeylFactor::IDENTITY);
    }
    if s == "s" {
        return Some(WeylFactor::flip_only());
    }
    let (body, flip) = match s.strip_suffix('s') {
        Some(b) => (b, true),
        None => (s, false),
    };
    let body = body.strip_prefix('t')?.trim();
    let body = body.strip_prefix('(')?.strip_suffix(')')?;
    let mut it = body.split(',');
    let a: i64 = it.next()?.trim().parse().ok()?;
    let b: i64 = it.next()?.trim().parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some(if flip {
        WeylFactor::translation_flip((a, b))
    } else {
        WeylFactor::translation((a, b))
    })
}

/// Element of the extended affine Weyl group across `f` embeddings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    pub factors: Vec<WeylFactor>,
}

impl AffineWeylElement {
    pub fn identity(f: usize) -> AffineWeylElement {
        AffineWeylElement {
            factors: vec![WeylFactor::IDENTITY; f],
        }
    }

    pub fn mul(&self, rhs: &AffineWeylElement) -> AffineWeylElement {
        assert_eq!(self.factors.len(), rhs.factors.len());
        AffineWeylElement {
            factors: self
                .factors
                .iter()
                .zip(&rhs.factors)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn inverse(&self) -> AffineWeylElement {
        AffineWeylElement {
            factors: self.factors.iter().map(|x| x.inverse()).collect(),
        }
    }

    /// Translation by the root `±alpha_j` (nonzero only at embedding j).
    pub fn root_translation(f: usize, j: usize, sign: i64) -> AffineWeylElement {
        let mut e = AffineWeylElement::identity(f);
        e.factors[j] = WeylFactor::translation((sign, -sign));
        e
    }
}

impl fmt::Display for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// Generators of the affine Weyl part in the dual convention and the
/// length-0 rotation.
fn sigma1() -> WeylFactor {
    WeylFactor::flip_only()
}
fn sigma0() -> WeylFactor {
    WeylFactor {
        flip: true,
        nu: (1, -1),
    }
}
fn xi() -> WeylFactor {
    // t(0,1)s: dual length 0, omega degree 1
    WeylFactor::translation_flip((0, 1))
}

/// Reduced word of the affine part of a factor, as a list of generator
/// tags (false = sigma1, true = sigma0), computed by greedy left descent
/// on the dual length.
fn reduced_word(x: &WeylFactor) -> Vec<bool> {
    // peel off the omega power first
    let d = x.omega_degree();
    let mut w = *x;
    let xisv = xi().inverse();
    if d >= 0 {
        for _ in 0..d {
            w = w.mul(&xisv);
        }
    } else {
        for _ in 0..(-d) {
            w = w.mul(&xi());
        }
    }
    debug_assert_eq!(w.omega_degree(), 0);
    let mut word = Vec::new();
    let mut cur = w;
    while cur != WeylFactor::IDENTITY {
        let l = cur.dual_length();
        let c1 = sigma1().mul(&cur);
        let c0 = sigma0().mul(&cur);
        if c1.dual_length() < l {
            word.push(false);
            cur = c1;
        } else if c0.dual_length() < l {
            word.push(true);
            cur = c0;
        } else {
            unreachable!("no descent for {cur:?} at dual length {l}");
        }
    }
    word
}

/// Subword test: does `u` occur as a subsequence of `w`?
fn is_subword(u: &[bool], w: &[bool]) -> bool {
    let mut i = 0;
    for &g in w {
        if i < u.len() && u[i] == g {
            i += 1;
        }
    }
    i == u.len()
}

/// Bruhat order on single factors, in the dual convention. Elements in
/// different length-0 cosets are incomparable; within a coset the subword
/// criterion on reduced expressions decides.
pub fn bruhat_leq(x: &WeylFactor, y: &WeylFactor) -> bool {
    if x == y {
        return true;
    }
    if x.omega_degree() != y.omega_degree() {
        return false;
    }
    let wx = reduced_word(x);
    let wy = reduced_word(y);
    wx.len() < wy.len() && is_subword(&wx, &wy)
}

/// Errors from the combinatorial layer.
#[derive(Debug, thiserror::Error)]
pub enum WeylError {
    #[error("unsupported weight ({0},{1}) for admissible set")]
    UnsupportedWeight(i64, i64),
    #[error("alcove violation: <nu+eta, alpha^> = {0} is not strictly between {1} and {2}")]
    AlcoveViolation(i64, i64, i64),
    #[error("shape invariant violated: {0}")]
    BadShape(String),
}

/// The per-embedding admissible set of a dominant weight: all factors
/// below some `t_{w(lambda)}` in the dual Bruhat order.
pub fn admissible_set(lambda: (i64, i64)) -> Result<Vec<WeylFactor>, WeylError> {
    match lambda {
        (2, 1) | (3, 0) | (0, 0) => {}
        (a, b) => return Err(WeylError::UnsupportedWeight(a, b)),
    }
    let tops = [
        WeylFactor::translation(lambda),
        WeylFactor::translation((lambda.1, lambda.0)),
    ];
    let deg = lambda.0 + lambda.1;
    let mut out = Vec::new();
    let lo = lambda.1 - 2;
    let hi = lambda.0 + 2;
    for n1 in lo..=hi {
        let n2 = deg - n1;
        for flip in [false, true] {
            let cand = WeylFactor { flip, nu: (n1, n2) };
            if tops.iter().any(|t| bruhat_leq(&cand, t)) && !out.contains(&cand) {
                out.push(cand);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The unipotent/presentation data of a fixed mod-p representation, as far
/// as the combinatorics needs it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoBarShape {
    /// per embedding: is the unipotent part nontrivial?
    pub n_nontrivial: Vec<bool>,
    /// presentation flips (identity required when some N_j is nontrivial)
    pub w_flips: Vec<bool>,
    /// presentation weight, per embedding
    pub mu: Vec<(i64, i64)>,
    /// declared genericity depth
    pub depth: i64,
}

impl RhoBarShape {
    pub fn new(
        n_nontrivial: Vec<bool>,
        w_flips: Vec<bool>,
        mu: Vec<(i64, i64)>,
        depth: i64,
        p: i64,
    ) -> Result<RhoBarShape, WeylError> {
        let f = n_nontrivial.len();
        if w_flips.len() != f || mu.len() != f {
            return Err(WeylError::BadShape("length mismatch among fields".into()));
        }
        if n_nontrivial.iter().any(|&b| b) && w_flips.iter().any(|&w| w) {
            return Err(WeylError::BadShape(
                "presentation flip must be trivial when the unipotent part is nontrivial".into(),
            ));
        }
        let shape = RhoBarShape {
            n_nontrivial,
            w_flips,
            mu,
            depth,
        };
        shape.check_depth(p)?;
        Ok(shape)
    }

    pub fn f(&self) -> usize {
        self.n_nontrivial.len()
    }

    /// mu is `depth`-deep in the lowest alcove:
    /// depth < <mu+eta, alpha^> < p - depth at every embedding.
    pub fn check_depth(&self, p: i64) -> Result<(), WeylError> {
        for &(a, b) in &self.mu {
            let pairing = a + 1 - b;
            if !(self.depth < pairing && pairing < p - self.depth) {
                return Err(WeylError::AlcoveViolation(pairing, self.depth, p - self.depth));
            }
        }
        Ok(())
    }

    pub fn w_star(&self) -> AffineWeylElement {
        AffineWeylElement {
            factors: self
                .mu
                .iter()
                .zip(&self.w_flips)
                .map(|(&(a, b), &flip)| {
                    let winv = WeylFactor {
                        flip,
                        nu: (0, 0),
                    };
                    winv.mul(&WeylFactor::translation((a + 1, b)))
                })
                .collect(),
        }
    }
}

/// Per-embedding filtered admissible set: drops `t(1,2)` (weight (2,1))
/// or `t(0,3)` (weight (3,0)) where the unipotent part is nontrivial.
pub fn adm_rho_factor(
    lambda: (i64, i64),
    n_nontrivial: bool,
) -> Result<Vec<WeylFactor>, WeylError> {
    let mut set = admissible_set(lambda)?;
    if n_nontrivial {
        let banned = match lambda {
            (2, 1) => WeylFactor::translation((1, 2)),
            (3, 0) => WeylFactor::translation((0, 3)),
            _ => return Ok(set),
        };
        set.retain(|x| *x != banned);
    }
    Ok(set)
}

/// Cartesian product of per-embedding sets.
pub fn product_set(per_embedding: &[Vec<WeylFactor>]) -> Vec<AffineWeylElement> {
    let mut out = vec![AffineWeylElement { factors: vec![] }];
    for set in per_embedding {
        let mut next = Vec::with_capacity(out.len() * set.len());
        for e in &out {
            for x in set {
                let mut fs = e.factors.clone();
                fs.push(*x);
                next.push(AffineWeylElement { factors: fs });
            }
        }
        out = next;
    }
    out
}

/// Full filtered admissible set across embeddings.
pub fn adm_rho(lambda: (i64, i64), shape: &RhoBarShape) -> Result<Vec<AffineWeylElement>, WeylError> {
    let per: Result<Vec<_>, _> = shape
        .n_nontrivial
        .iter()
        .map(|&n| adm_rho_factor(lambda, n))
        .collect();
    Ok(product_set(&per?))
}

/// Group element of a lowest alcove presentation: `w^{-1} t_{nu+eta}`.
/// The alcove condition on `nu` is checked to the declared depth.
pub fn w_star(
    w_flips: &[bool],
    nu: &[(i64, i64)],
    depth: i64,
    p: i64,
) -> Result<AffineWeylElement, WeylError> {
    assert_eq!(w_flips.len(), nu.len());
    for &(a, b) in nu {
        let pairing = a + 1 - b;
        if !(depth < pairing && pairing < p - depth) {
            return Err(WeylError::AlcoveViolation(pairing, depth, p - depth));
        }
    }
    Ok(AffineWeylElement {
        factors: w_flips
            .iter()
            .zip(nu)
            .map(|(&flip, &(a, b))| {
                let winv = WeylFactor { flip, nu: (0, 0) };
                winv.mul(&WeylFactor::translation((a + 1, b)))
            })
            .collect(),
    })
}

/// `w_star(rho) * w_star(tau)^{-1}`, the element whose admissibility
/// detects which types and weights can see the representation.
pub fn w_star_rho_tau(
    shape: &RhoBarShape,
    tau_flips: &[bool],
    tau_nu: &[(i64, i64)],
    p: i64,
) -> Result<AffineWeylElement, WeylError> {
    let a = shape.w_star();
    let b = w_star(tau_flips, tau_nu, 0, p)?;
    Ok(a.mul(&b.inverse()))
}

/// Hypercube-style coherence of the filtered admissible set of weight
/// (2,1): doubling a root translation always leaves the set, and a mixed
/// double step factors through its two single steps. Pure enumeration.
pub struct HypercubeOutcome {
    pub checked_pairs: usize,
    pub violations: Vec<String>,
}

pub fn hypercube_check(f: usize, shape: &RhoBarShape) -> Result<HypercubeOutcome, WeylError> {
    assert_eq!(shape.f(), f);
    let adm = adm_rho((2, 1), shape)?;
    let mut violations = Vec::new();
    let mut checked = 0usize;
    let member = |e: &AffineWeylElement| adm.contains(e);
    let roots: Vec<(usize, i64)> = (0..f).flat_map(|j| [(j, 1i64), (j, -1i64)]).collect();
    for u in &adm {
        // part 1: u * t_{2 alpha} never admissible
        for &(j, sign) in &roots {
            let t2 = AffineWeylElement::root_translation(f, j, sign)
                .mul(&AffineWeylElement::root_translation(f, j, sign));
            let moved = u.mul(&t2);
            checked += 1;
            if member(&moved) {
                violations.push(format!("{u} * t(2a[{j}],{sign}) stayed admissible"));
            }
        }
        // part 2: linearly independent pair
        for &(j1, s1) in &roots {
            for &(j2, s2) in &roots {
                if j1 >= j2 {
                    continue; // independent <=> different embeddings
                }
                let ta = AffineWeylElement::root_translation(f, j1, s1);
                let tb = AffineWeylElement::root_translation(f, j2, s2);
                let both = u.mul(&ta).mul(&tb);
                checked += 1;
                if member(&both) && !(member(&u.mul(&ta)) && member(&u.mul(&tb))) {
                    violations.push(format!(
                        "{u}: double step ({j1},{s1})+({j2},{s2}) admissible but a single step is not"
                    ));
                }
            }
        }
    }
    Ok(HypercubeOutcome {
        checked_pairs: checked,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64) -> WeylFactor {
        WeylFactor::translation((a, b))
    }
    fn ts(a: i64, b: i64) -> WeylFactor {
        WeylFactor::translation_flip((a, b))
    }

    #[test]
    fn group_law_matches_convention() {
        // t(1,2)s stored as s * t(2,1)
        let x = ts(1, 2);
        assert_eq!(x.flip, true);
        assert_eq!(x.nu, (2, 1));
        // s^2 = e, (t_a s)(t_b s) = t_{a + s(b)}
        assert_eq!(ts(0, 0).mul(&ts(0, 0)), WeylFactor::IDENTITY);
        assert_eq!(ts(1, 0).mul(&ts(0, 1)), t(2, 0));
        // inverse
        let y = ts(3, -1);
        assert_eq!(y.mul(&y.inverse()), WeylFactor::IDENTITY);
        assert_eq!(y.inverse().mul(&y), WeylFactor::IDENTITY);
    }

    #[test]
    fn display_roundtrip() {
        for s in ["t(2,1)", "t(1,2)s", "t(0,3)", "s", "e", "t(-1,2)s"] {
            let x = parse_factor(s).unwrap();
            assert_eq!(x.to_string(), s.to_string().replace("t(0,0)s", "s"));
            assert_eq!(parse_factor(&x.to_string()), Some(x));
        }
    }

    #[test]
    fn dual_lengths() {
        assert_eq!(t(2, 1).dual_length(), 1);
        assert_eq!(t(1, 2).dual_length(), 1);
        assert_eq!(ts(1, 2).dual_length(), 0);
        assert_eq!(ts(2, 1).dual_length(), 2);
        assert_eq!(t(3, 0).dual_length(), 3);
        assert_eq!(ts(0, 3).dual_length(), 2);
        assert_eq!(ts(3, 0).dual_length(), 4);
        assert_eq!(xi().dual_length(), 0);
        assert_eq!(sigma0().dual_length(), 1);
        assert_eq!(sigma1().dual_length(), 1);
    }

    #[test]
    fn bruhat_examples() {
        // reflexivity
        assert!(bruhat_leq(&t(2, 1), &t(2, 1)));
        // t(1,2)s <= t(2,1): the length-0 element sits below both tops
        assert!(bruhat_leq(&ts(1, 2), &t(2, 1)));
        assert!(bruhat_leq(&ts(1, 2), &t(1, 2)));
        // t(3,0) is NOT below t(2,1)
        assert!(!bruhat_leq(&t(3, 0), &t(2, 1)));
        // different omega cosets are incomparable
        assert!(!bruhat_leq(&t(1, 1), &t(2, 1)));
        assert!(!bruhat_leq(&WeylFactor::IDENTITY, &t(2, 1)));
    }

    #[test]
    fn admissible_sets_match_displays() {
        let a21 = admissible_set((2, 1)).unwrap();
        let want21 = vec![t(2, 1), t(1, 2), ts(1, 2)];
        assert_eq!(a21.len(), 3);
        for w in &want21 {
            assert!(a21.contains(w), "missing {w}");
        }
        let a30 = admissible_set((3, 0)).unwrap();
        let want30 = vec![t(2, 1), t(1, 2), ts(1, 2), t(3, 0), ts(0, 3), t(0, 3), ts(2, 1)];
        assert_eq!(a30.len(), 7);
        for w in &want30 {
            assert!(a30.contains(w), "missing {w}");
        }
        // only the identity below weight zero
        let a00 = admissible_set((0, 0)).unwrap();
        assert_eq!(a00, vec![WeylFactor::IDENTITY]);
        // unsupported weights are rejected
        assert!(admissible_set((4, 0)).is_err());
    }

    #[test]
    fn bruhat_is_partial_order_exhaustively() {
        // antisymmetry + transitivity over all factors with coordinates
        // bounded by 4
        let mut all = Vec::new();
        for a in -4..=4 {
            for b in -4..=4 {
                for flip in [false, true] {
                    all.push(WeylFactor { flip, nu: (a, b) });
                }
            }
        }
        for x in &all {
            for y in &all {
                if bruhat_leq(x, y) && bruhat_leq(y, x) {
                    assert_eq!(x, y, "antisymmetry failed");
                }
            }
        }
        // transitivity on the same-degree classes only (others vacuous)
        for x in &all {
            for y in &all {
                if !bruhat_leq(x, y) {
                    continue;
                }
                for z in &all {
                    if bruhat_leq(y, z) {
                        assert!(bruhat_leq(x, z), "transitivity failed: {x} {y} {z}");
                    }
                }
            }
        }
    }

    #[test]
    fn group_axioms_random() {
        use rand::Rng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        use rand::SeedableRng;
        for _ in 0..500 {
            let r = |rng: &mut rand::rngs::StdRng| WeylFactor {
                flip: rng.gen_bool(0.5),
                nu: (rng.gen_range(-5..=5), rng.gen_range(-5..=5)),
            };
            let (a, b, c) = (r(&mut rng), r(&mut rng), r(&mut rng));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&a.inverse()), WeylFactor::IDENTITY);
            assert_eq!(a.inverse().mul(&a), WeylFactor::IDENTITY);
        }
    }

    #[test]
    fn filtered_sets() {
        assert_eq!(
            adm_rho_factor((2, 1), true).unwrap(),
            {
                let mut v = vec![t(2, 1), ts(1, 2)];
                v.sort();
                v
            }
        );
        assert_eq!(adm_rho_factor((2, 1), false).unwrap().len(), 3);
        let f30 = adm_rho_factor((3, 0), true).unwrap();
        assert_eq!(f30.len(), 6);
        assert!(!f30.contains(&t(0, 3)));
    }

    #[test]
    fn w_star_examples() {
        // identity flips, nu = 0: t_eta
        let e = w_star(&[false], &[(0, 0)], 0, 23).unwrap();
        assert_eq!(e.factors[0], t(1, 0));
        // inverse composition cancels
        let ws = w_star(&[true], &[(3, 1)], 0, 23).unwrap();
        assert_eq!(
            ws.mul(&ws.inverse()),
            AffineWeylElement::identity(1)
        );
        // alcove violation rejected
        assert!(w_star(&[false], &[(22, 0)], 0, 23).is_err());
    }

    #[test]
    fn hypercube_passes_for_all_shapes_f2() {
        for n0 in [false, true] {
            for n1 in [false, true] {
                let shape = RhoBarShape::new(
                    vec![n0, n1],
                    vec![false, false],
                    vec![(5, 0), (7, 2)],
                    1,
                    23,
                )
                .unwrap();
                let out = hypercube_check(2, &shape).unwrap();
                assert!(out.violations.is_empty(), "{:?}", out.violations);
                assert!(out.checked_pairs > 0);
            }
        }
    }

    #[test]
    fn hypercube_f1_part2_vacuous() {
        let shape =
            RhoBarShape::new(vec![true], vec![false], vec![(4, 0)], 1, 23).unwrap();
        let out = hypercube_check(1, &shape).unwrap();
        assert!(out.violations.is_empty());
    }
}
