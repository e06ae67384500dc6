//! Character-lattice arithmetic for the two compact groups in play: the
//! Iwahori subgroup (split case) and the unit group of the quaternionic
//! order (nonsplit case).
//!
//! Weights live in `(Z^2)^f`. A weight is collapsed to its canonical
//! residue by walking the slots `(embedding, torus position)` in the
//! orbit of the twisted Frobenius and accumulating p-power digits; the
//! split case gives a pair of residues mod q-1, the nonsplit case a
//! single residue mod q^2-1 (q = p^f). Tame inertial types are handled by
//! the same walk for an arbitrary flip pattern, and compared up to
//! simultaneous Frobenius twist of their exponents.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Which compact group the characters live on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    Split,
    Nonsplit,
}

impl Case {
    /// Flip pattern of the distinguished Weyl element: trivial for the
    /// split case, a single flip at the distinguished embedding otherwise.
    pub fn w_h_flips(&self, f: usize) -> Vec<bool> {
        match self {
            Case::Split => vec![false; f],
            Case::Nonsplit => {
                let mut v = vec![false; f];
                v[0] = true;
                v
            }
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::Split => write!(f, "split"),
            Case::Nonsplit => write!(f, "nonsplit"),
        }
    }
}

/// A weight in `(Z^2)^f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(pub Vec<(i64, i64)>);

impl WeightVector {
    pub fn zero(f: usize) -> WeightVector {
        WeightVector(vec![(0, 0); f])
    }

    /// The positive root supported at embedding j.
    pub fn root(f: usize, j: usize) -> WeightVector {
        let mut w = WeightVector::zero(f);
        w.0[j] = (1, -1);
        w
    }

    pub fn f(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a.0 + b.0, a.1 + b.1))
                .collect(),
        )
    }

    pub fn neg(&self) -> WeightVector {
        WeightVector(self.0.iter().map(|a| (-a.0, -a.1)).collect())
    }

    pub fn scale(&self, c: i64) -> WeightVector {
        WeightVector(self.0.iter().map(|a| (c * a.0, c * a.1)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&(a, b)| a == 0 && b == 0)
    }

    fn slot(&self, j: usize, k: usize) -> i64 {
        let (a, b) = self.0[j];
        if k == 0 {
            a
        } else {
            b
        }
    }
}

/// All roots, positive then negative, ordered by embedding.
pub fn all_roots(f: usize) -> Vec<WeightVector> {
    let mut v: Vec<WeightVector> = (0..f).map(|j| WeightVector::root(f, j)).collect();
    v.extend((0..f).map(|j| WeightVector::root(f, j).neg()));
    v
}

/// The slot walk of the twisted Frobenius attached to a flip pattern:
/// step from (j, k) to (j+1 mod f, s_{j+1}(k)).
fn walk_step(f: usize, flips: &[bool], j: usize, k: usize) -> (usize, usize) {
    let jn = (j + 1) % f;
    let kn = if flips[jn] { 1 - k } else { k };
    (jn, kn)
}

fn pow_mod(p: i128, e: u32, m: i128) -> i128 {
    let mut acc = 1i128;
    for _ in 0..e {
        acc = acc * p % m;
    }
    acc
}

/// Canonical residue of a weight under the quotient by `(twisted
/// Frobenius - 1)`: the split case keeps the two torus slots separate,
/// the nonsplit case fuses them into one residue mod q^2-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CharacterClass {
    Split { a: i128, b: i128 },
    Nonsplit { e: i128 },
}

impl CharacterClass {
    pub fn zero(case: Case) -> CharacterClass {
        match case {
            Case::Split => CharacterClass::Split { a: 0, b: 0 },
            Case::Nonsplit => CharacterClass::Nonsplit { e: 0 },
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(
            self,
            CharacterClass::Split { a: 0, b: 0 } | CharacterClass::Nonsplit { e: 0 }
        )
    }

    pub fn add(&self, other: &CharacterClass, p: i64, f: usize) -> CharacterClass {
        let q = pow_mod(p as i128, f as u32, i128::MAX);
        match (self, other) {
            (CharacterClass::Split { a, b }, CharacterClass::Split { a: c, b: d }) => {
                CharacterClass::Split {
                    a: (a + c).rem_euclid(q - 1),
                    b: (b + d).rem_euclid(q - 1),
                }
            }
            (CharacterClass::Nonsplit { e }, CharacterClass::Nonsplit { e: g }) => {
                CharacterClass::Nonsplit {
                    e: (e + g).rem_euclid(q * q - 1),
                }
            }
            _ => panic!("cannot add character classes across cases"),
        }
    }
}

impl fmt::Display for CharacterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterClass::Split { a, b } => write!(f, "split({a},{b})"),
            CharacterClass::Nonsplit { e } => write!(f, "nonsplit({e})"),
        }
    }
}

/// Canonical form of a weight: p-power digit expansion along the slot
/// walk starting at the distinguished embedding.
pub fn char_class(mu: &WeightVector, case: Case, p: i64, f: usize) -> CharacterClass {
    assert_eq!(mu.f(), f);
    let p = p as i128;
    match case {
        Case::Split => {
            let q1 = pow_mod(p, f as u32, i128::MAX) - 1;
            let mut a = 0i128;
            let mut b = 0i128;
            for i in 0..f {
                a += pow_mod(p, i as u32, q1) * (mu.slot(i, 0) as i128);
                b += pow_mod(p, i as u32, q1) * (mu.slot(i, 1) as i128);
            }
            CharacterClass::Split {
                a: a.rem_euclid(q1),
                b: b.rem_euclid(q1),
            }
        }
        Case::Nonsplit => {
            let flips = case.w_h_flips(f);
            let m = pow_mod(p, 2 * f as u32, i128::MAX) - 1;
            let mut e = 0i128;
            let (mut j, mut k) = (0usize, 0usize);
            for i in 0..(2 * f) {
                e += pow_mod(p, i as u32, m) * (mu.slot(j, k) as i128);
                let n = walk_step(f, &flips, j, k);
                j = n.0;
                k = n.1;
            }
            CharacterClass::Nonsplit { e: e.rem_euclid(m) }
        }
    }
}

/// The twisted Frobenius on weights whose quotient the canonical form
/// computes: reads through the walk and multiplies by p.
pub fn twisted_frobenius(mu: &WeightVector, case: Case, p: i64, f: usize) -> WeightVector {
    let flips = case.w_h_flips(f);
    let mut out = WeightVector::zero(f);
    for j in 0..f {
        for k in 0..2 {
            let (js, ks) = walk_step(f, &flips, j, k);
            let v = p * mu.slot(js, ks);
            if k == 0 {
                out.0[j].0 = v;
            } else {
                out.0[j].1 = v;
            }
        }
    }
    out
}

/// Regularity: the character does not factor through the determinant
/// (split) or the reduced norm (nonsplit).
pub fn is_regular(class: &CharacterClass, p: i64, f: usize) -> bool {
    let q = pow_mod(p as i128, f as u32, i128::MAX);
    match class {
        CharacterClass::Split { a, b } => (a - b).rem_euclid(q - 1) != 0,
        CharacterClass::Nonsplit { e } => (e * (q - 1)).rem_euclid(q * q - 1) != 0,
    }
}

/// Exponent data of a tame inertial type: the order `d` of the twisted
/// shift and the two exponents mod `p^d - 1` read off at the
/// distinguished embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeExponents {
    pub d: u32,
    pub e: [i128; 2],
}

/// Smallest d with the s-twisted slot walk returning every slot to
/// itself, and the exponent vector of the type summed along the walk.
pub fn tau_exponents(s_flips: &[bool], mu: &WeightVector, p: i64, f: usize) -> TypeExponents {
    assert_eq!(s_flips.len(), f);
    assert_eq!(mu.f(), f);
    // order of the walk permutation
    let mut d = 0u32;
    let (mut j, mut k) = (0usize, 0usize);
    loop {
        let n = walk_step(f, s_flips, j, k);
        j = n.0;
        k = n.1;
        d += 1;
        if (j, k) == (0, 0) {
            break;
        }
    }
    // the walk is a union of cycles of equal length through (0,0) and
    // (0,1); d is the cycle length, the full order over both slots
    let modulus = pow_mod(p as i128, d, i128::MAX) - 1;
    let mut e = [0i128; 2];
    for (slot, exp) in e.iter_mut().enumerate() {
        let (mut j, mut k) = (0usize, slot);
        for i in 0..d {
            *exp += pow_mod(p as i128, i, modulus) * (mu.slot(j, k) as i128);
            let n = walk_step(f, s_flips, j, k);
            j = n.0;
            k = n.1;
        }
        *exp = exp.rem_euclid(modulus);
    }
    TypeExponents { d, e }
}

/// Isomorphism of tame types at the exponent level: after inflating both
/// to a common level, the unordered exponent pairs agree up to a
/// simultaneous p-power twist.
pub fn type_eq(t1: &TypeExponents, t2: &TypeExponents, p: i64) -> bool {
    let d = num::integer::lcm(t1.d as u64, t2.d as u64) as u32;
    let m = pow_mod(p as i128, d, i128::MAX) - 1;
    let inflate = |t: &TypeExponents| -> [i128; 2] {
        let md = pow_mod(p as i128, t.d, i128::MAX) - 1;
        let scale = m / md;
        [
            (t.e[0] * scale).rem_euclid(m),
            (t.e[1] * scale).rem_euclid(m),
        ]
    };
    let a = inflate(t1);
    let b = inflate(t2);
    let pair = |x: [i128; 2]| {
        let mut v = [x[0], x[1]];
        v.sort();
        v
    };
    let target = pair(b);
    let mut twisted = a;
    for _ in 0..d {
        if pair(twisted) == target {
            return true;
        }
        twisted = [
            (twisted[0] * p as i128).rem_euclid(m),
            (twisted[1] * p as i128).rem_euclid(m),
        ];
    }
    false
}

pub fn tau_trivial(t: &TypeExponents) -> bool {
    t.e == [0, 0]
}

/// Exhaustive test of the small-combination injectivity of the canonical
/// form: over all choices of coefficients in {0,±1,±2} per positive root,
/// the class vanishes only for the zero weight. Returns the violations.
pub fn check_products_of_embeddings(p: i64, f: usize, case: Case) -> Vec<WeightVector> {
    let mut violations = Vec::new();
    let mut coeffs = vec![-2i64; f];
    loop {
        let mut mu = WeightVector::zero(f);
        for j in 0..f {
            mu = mu.add(&WeightVector::root(f, j).scale(coeffs[j]));
        }
        if char_class(&mu, case, p, f).is_zero() && !mu.is_zero() {
            violations.push(mu);
        }
        // next tuple
        let mut i = 0;
        loop {
            if i == f {
                return violations;
            }
            coeffs[i] += 1;
            if coeffs[i] > 2 {
                coeffs[i] = -2;
                i += 1;
            } else {
                break;
            }
        }
    }
}

/// The three graded pieces of the truncated projective envelope, as
/// character multisets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPieces {
    pub deg0: BTreeMap<CharacterClass, usize>,
    pub deg1: BTreeMap<CharacterClass, usize>,
    pub deg2: BTreeMap<CharacterClass, usize>,
}

fn bump(m: &mut BTreeMap<CharacterClass, usize>, c: CharacterClass, k: usize) {
    *m.entry(c).or_insert(0) += k;
}

pub fn graded_pieces(chi: &CharacterClass, case: Case, p: i64, f: usize) -> GradedPieces {
    let roots = all_roots(f);
    let class = |w: &WeightVector| char_class(w, case, p, f);
    let mut deg0 = BTreeMap::new();
    bump(&mut deg0, *chi, 1);
    let mut deg1 = BTreeMap::new();
    for a in &roots {
        bump(&mut deg1, chi.add(&class(a), p, f), 1);
    }
    let mut deg2 = BTreeMap::new();
    // 2f copies of chi itself
    bump(&mut deg2, *chi, 2 * f);
    // chi * alpha^2
    for a in &roots {
        bump(&mut deg2, chi.add(&class(&a.scale(2)), p, f), 1);
    }
    // chi * alpha * beta over unordered pairs with alpha != ±beta
    for (i, a) in roots.iter().enumerate() {
        for b in roots.iter().skip(i + 1) {
            if a.add(b).is_zero() {
                continue; // beta = -alpha
            }
            bump(&mut deg2, chi.add(&class(&a.add(b)), p, f), 1);
        }
    }
    GradedPieces { deg0, deg1, deg2 }
}

impl GradedPieces {
    pub fn sizes(&self) -> (usize, usize, usize) {
        let s = |m: &BTreeMap<CharacterClass, usize>| m.values().sum::<usize>();
        (s(&self.deg0), s(&self.deg1), s(&self.deg2))
    }
}

/// Outcome of the multiplicity audit on the graded pieces.
#[derive(Debug, Clone)]
pub struct MultiplicityAudit {
    /// degree-2 component at chi itself has size exactly 2f
    pub chi_isotypic_ok: bool,
    /// the rest of degree 2 is multiplicity-free
    pub complement_multiplicity_free: bool,
    /// every chi*alpha has total multiplicity one in the semisimplification
    pub alpha_multiplicity_one: bool,
    pub failures: Vec<String>,
}

pub fn multiplicity_audit(
    chi: &CharacterClass,
    case: Case,
    p: i64,
    f: usize,
) -> MultiplicityAudit {
    let gp = graded_pieces(chi, case, p, f);
    let mut failures = Vec::new();
    let chi_count = gp.deg2.get(chi).copied().unwrap_or(0);
    let chi_isotypic_ok = chi_count == 2 * f;
    if !chi_isotypic_ok {
        failures.push(format!(
            "chi-isotypic size in degree 2 is {chi_count}, expected {}",
            2 * f
        ));
    }
    let mut complement_multiplicity_free = true;
    for (c, &k) in &gp.deg2 {
        if c != chi && k != 1 {
            complement_multiplicity_free = false;
            failures.push(format!("class {c} has multiplicity {k} in degree 2"));
        }
    }
    // total multiplicity of each chi*alpha across all three pieces
    let mut alpha_multiplicity_one = true;
    for a in all_roots(f) {
        let ca = chi.add(&char_class(&a, case, p, f), p, f);
        let total = gp.deg0.get(&ca).copied().unwrap_or(0)
            + gp.deg1.get(&ca).copied().unwrap_or(0)
            + gp.deg2.get(&ca).copied().unwrap_or(0);
        if total != 1 {
            alpha_multiplicity_one = false;
            failures.push(format!(
                "chi*alpha class {ca} has total multiplicity {total}"
            ));
        }
    }
    MultiplicityAudit {
        chi_isotypic_ok,
        complement_multiplicity_free,
        alpha_multiplicity_one,
        failures,
    }
}

/// Result of the sign determination for shifting a type presentation by a
/// root: the sign and the exponent data backing it.
#[derive(Debug, Clone)]
pub struct JlShift {
    pub epsilon: i32,
    pub wh_exponents: TypeExponents,
    pub w_plus: TypeExponents,
    pub w_minus: TypeExponents,
}

#[derive(Debug, thiserror::Error)]
pub enum CharsError {
    #[error("no valid sign: neither shift matches the distinguished type")]
    NoValidSign,
    #[error("presentation is not in the lowest alcove")]
    AlcoveViolation,
}

/// Finds the sign making the shifted presentation match the distinguished
/// type on the root, by direct exponent comparison. The zero root returns
/// +1 by convention.
pub fn inertial_jl_shift(
    case: Case,
    w_flips: &[bool],
    nu: &[(i64, i64)],
    alpha: &WeightVector,
    p: i64,
    f: usize,
) -> Result<JlShift, CharsError> {
    for &(a, b) in nu {
        let pairing = a + 1 - b;
        if !(0 < pairing && pairing < p) {
            return Err(CharsError::AlcoveViolation);
        }
    }
    let wh = case.w_h_flips(f);
    let wh_exponents = tau_exponents(&wh, alpha, p, f);
    let w_plus = tau_exponents(w_flips, alpha, p, f);
    let w_minus = tau_exponents(w_flips, &alpha.neg(), p, f);
    let plus_ok = type_eq(&wh_exponents, &w_plus, p);
    let minus_ok = type_eq(&wh_exponents, &w_minus, p);
    let epsilon = if alpha.is_zero() || plus_ok {
        1
    } else if minus_ok {
        -1
    } else {
        return Err(CharsError::NoValidSign);
    };
    Ok(JlShift {
        epsilon,
        wh_exponents,
        w_plus,
        w_minus,
    })
}

/// Determinant of the matrix of `twisted_frobenius - 1` on the weight
/// lattice, used by tests to pin the size of the canonical quotient.
pub fn quotient_order(case: Case, p: i64, f: usize) -> i128 {
    let n = 2 * f;
    // build the integer matrix column by column
    let mut m = vec![vec![0i128; n]; n];
    for j in 0..f {
        for k in 0..2 {
            let col = 2 * j + k;
            let mut basis = WeightVector::zero(f);
            if k == 0 {
                basis.0[j].0 = 1;
            } else {
                basis.0[j].1 = 1;
            }
            let img = twisted_frobenius(&basis, case, p, f);
            for jj in 0..f {
                m[2 * jj][col] = img.slot(jj, 0) as i128;
                m[2 * jj + 1][col] = img.slot(jj, 1) as i128;
            }
            m[col][col] -= 1;
        }
    }
    // fraction-free Gaussian elimination (Bareiss)
    let mut prev = 1i128;
    let mut sign = 1i128;
    let mut a = m;
    for k in 0..n {
        if a[k][k] == 0 {
            let swap = (k + 1..n).find(|&r| a[r][k] != 0);
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_weight_maps_to_zero() {
        for case in [Case::Split, Case::Nonsplit] {
            let c = char_class(&WeightVector::zero(2), case, 7, 2);
            assert!(c.is_zero());
        }
    }

    #[test]
    fn split_f1_is_componentwise_residue() {
        // f = 1: the quotient is (Z/(p-1))^2 and the class is the residue
        // pair; brute-force the kernel.
        let p = 7;
        for a in -10..10 {
            for b in -10..10 {
                let mu = WeightVector(vec![(a, b)]);
                let c = char_class(&mu, Case::Split, p, 1);
                assert_eq!(
                    c,
                    CharacterClass::Split {
                        a: (a as i128).rem_euclid(6),
                        b: (b as i128).rem_euclid(6)
                    }
                );
            }
        }
    }

    #[test]
    fn defining_relation_maps_to_zero() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for case in [Case::Split, Case::Nonsplit] {
            for f in 1..=3usize {
                for p in [5i64, 7, 11] {
                    for _ in 0..30 {
                        let nu = WeightVector(
                            (0..f)
                                .map(|_| (rng.gen_range(-9..9), rng.gen_range(-9..9)))
                                .collect(),
                        );
                        let l_nu = twisted_frobenius(&nu, case, p, f);
                        let diff = l_nu.add(&nu.neg());
                        assert!(
                            char_class(&diff, case, p, f).is_zero(),
                            "relation failed at p={p} f={f} {case}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_has_expected_order() {
        for f in 1..=3usize {
            for p in [5i64, 7, 11, 23] {
                let q = (p as i128).pow(f as u32);
                assert_eq!(quotient_order(Case::Split, p, f), (q - 1) * (q - 1));
                assert_eq!(quotient_order(Case::Nonsplit, p, f), q * q - 1);
            }
        }
    }

    #[test]
    fn surjectivity_by_enumeration_small() {
        // image sizes match the quotient order at f <= 2, small p
        use std::collections::HashSet;
        for case in [Case::Split, Case::Nonsplit] {
            for (p, f) in [(5i64, 1usize), (7, 1), (5, 2)] {
                let q1 = (p as i128).pow(f as u32) - 1;
                let span = match case {
                    Case::Split => q1,
                    Case::Nonsplit => (p as i128).pow(2 * f as u32) - 1,
                };
                let mut seen = HashSet::new();
                // weights supported at embedding 0 with digits up to span
                for a in 0..span.min(2000) {
                    for b in [0i128, 1, 2, 3] {
                        let mu = WeightVector({
                            let mut v = vec![(0i64, 0i64); f];
                            v[0] = (a as i64, b as i64);
                            v
                        });
                        seen.insert(char_class(&mu, case, p, f));
                    }
                }
                let order = quotient_order(case, p, f);
                if span <= 2000 {
                    let full: HashSet<_> = (0..span)
                        .flat_map(|a| {
                            (0..if case == Case::Split { q1 } else { 1 }).map(move |b| (a, b))
                        })
                        .map(|(a, b)| match case {
                            Case::Split => CharacterClass::Split { a, b },
                            Case::Nonsplit => CharacterClass::Nonsplit { e: a },
                        })
                        .collect();
                    // every canonical residue is achieved by some weight
                    let mut all = HashSet::new();
                    for x in &full {
                        let mu = match x {
                            CharacterClass::Split { a, b } => WeightVector({
                                let mut v = vec![(0i64, 0i64); f];
                                v[0] = (*a as i64, *b as i64);
                                v
                            }),
                            CharacterClass::Nonsplit { e } => WeightVector({
                                let mut v = vec![(0i64, 0i64); f];
                                v[0] = (*e as i64, 0);
                                v
                            }),
                        };
                        all.insert(char_class(&mu, case, p, f));
                    }
                    assert_eq!(all.len() as i128, order, "p={p} f={f} {case}");
                }
                let _ = seen;
            }
        }
    }

    #[test]
    fn products_of_embeddings_pass_and_fail() {
        // passes for p > 3
        for p in [5i64, 7, 11, 23] {
            for f in 1..=3usize {
                for case in [Case::Split, Case::Nonsplit] {
                    let v = check_products_of_embeddings(p, f, case);
                    assert!(v.is_empty(), "violation at p={p} f={f} {case}: {v:?}");
                }
            }
        }
        // documented failure outside the hypothesis: p = 3
        let v = check_products_of_embeddings(3, 1, Case::Split);
        assert!(!v.is_empty());
    }

    #[test]
    fn graded_sizes() {
        let chi = CharacterClass::zero(Case::Split);
        for f in 1..=3usize {
            let gp = graded_pieces(&chi, Case::Split, 23, f);
            let (s0, s1, s2) = gp.sizes();
            assert_eq!(s0, 1);
            assert_eq!(s1, 2 * f);
            let pairs = (2 * f) * (2 * f - 1) / 2 - f;
            assert_eq!(s2, 2 * f + 2 * f + pairs);
        }
    }

    #[test]
    fn audit_passes_at_generic_points() {
        for (p, f, case) in [
            (7i64, 2usize, Case::Split),
            (23, 3, Case::Nonsplit),
            (7, 1, Case::Split),
            (5, 2, Case::Nonsplit),
        ] {
            // generic chi: distinct residues
            let chi = char_class(&WeightVector({
                let mut v = vec![(0, 0); f];
                v[0] = (1, 3);
                v
            }), case, p, f);
            let audit = multiplicity_audit(&chi, case, p, f);
            assert!(audit.failures.is_empty(), "p={p} f={f}: {:?}", audit.failures);
        }
    }

    #[test]
    fn audit_boundary_at_five_one() {
        // at p = 5, f = 1 the squares of the two roots collide
        // (4*alpha vanishes mod p-1), so the complement is not
        // multiplicity-free; this is why p > 5 is fixed globally
        let chi = char_class(&WeightVector(vec![(1, 3)]), Case::Split, 5, 1);
        let audit = multiplicity_audit(&chi, Case::Split, 5, 1);
        assert!(!audit.complement_multiplicity_free);
        assert!(audit.alpha_multiplicity_one);
    }

    #[test]
    fn tau_exponents_basics() {
        // f = 1, no flip: d = 1, exponents are the weight mod p-1
        let t = tau_exponents(&[false], &WeightVector(vec![(4, 9)]), 7, 1);
        assert_eq!(t.d, 1);
        assert_eq!(t.e, [4 % 6, 9 % 6]);
        // zero weight gives the trivial type
        let z = tau_exponents(&[true], &WeightVector::zero(1), 7, 1);
        assert!(tau_trivial(&z));
        // additivity
        let a = WeightVector(vec![(2, 1), (0, 3)]);
        let b = WeightVector(vec![(1, 1), (2, 0)]);
        for flips in [[false, false], [true, false], [false, true]] {
            let ta = tau_exponents(&flips, &a, 7, 2);
            let tb = tau_exponents(&flips, &b, 7, 2);
            let tsum = tau_exponents(&flips, &a.add(&b), 7, 2);
            let m = (7i128).pow(ta.d) - 1;
            assert_eq!(ta.d, tb.d);
            assert_eq!(
                [(ta.e[0] + tb.e[0]).rem_euclid(m), (ta.e[1] + tb.e[1]).rem_euclid(m)],
                tsum.e
            );
        }
    }

    #[test]
    fn class_equals_type_exponents_of_distinguished_element() {
        // the canonical form and the type walk are the same bookkeeping
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for case in [Case::Split, Case::Nonsplit] {
            for f in 1..=3usize {
                let p = 11;
                for _ in 0..20 {
                    let mu = WeightVector(
                        (0..f)
                            .map(|_| (rng.gen_range(-8..8), rng.gen_range(-8..8)))
                            .collect(),
                    );
                    let t = tau_exponents(&case.w_h_flips(f), &mu, p, f);
                    match (case, char_class(&mu, case, p, f)) {
                        (Case::Split, CharacterClass::Split { a, b }) => {
                            assert_eq!(t.e, [a, b]);
                        }
                        (Case::Nonsplit, CharacterClass::Nonsplit { e }) => {
                            assert_eq!(t.e[0], e);
                        }
                        _ => unreachable!(),
                    }
                }
            }
        }
    }

    #[test]
    fn jl_shift_examples() {
        // zero root: +1 by convention
        let out = inertial_jl_shift(
            Case::Split,
            &[false],
            &[(3, 0)],
            &WeightVector::zero(1),
            7,
            1,
        )
        .unwrap();
        assert_eq!(out.epsilon, 1);
        // w = w_H: identical formulas, +1
        let out = inertial_jl_shift(
            Case::Split,
            &[false, false],
            &[(3, 0), (5, 1)],
            &WeightVector::root(2, 0),
            11,
            2,
        )
        .unwrap();
        assert_eq!(out.epsilon, 1);
        // nonsplit vs flipped presentation: a sign exists
        let out = inertial_jl_shift(
            Case::Nonsplit,
            &[false, true],
            &[(3, 0), (5, 1)],
            &WeightVector::root(2, 0),
            11,
            2,
        )
        .unwrap();
        assert!(out.epsilon == 1 || out.epsilon == -1);
        // alcove violation rejected
        assert!(inertial_jl_shift(
            Case::Split,
            &[false],
            &[(11, 0)],
            &WeightVector::root(1, 0),
            11,
            1
        )
        .is_err());
    }

    #[test]
    fn regularity_stable_under_root_shifts() {
        let p = 11;
        let f = 2;
        for case in [Case::Split, Case::Nonsplit] {
            let chi = char_class(&WeightVector(vec![(1, 4), (0, 2)]), case, p, f);
            assert!(is_regular(&chi, p, f));
            for a in all_roots(f) {
                let shifted = chi.add(&char_class(&a, case, p, f), p, f);
                assert!(is_regular(&shifted, p, f));
            }
            // the trivial class is not regular
            assert!(!is_regular(&CharacterClass::zero(case), p, f));
        }
    }
}
