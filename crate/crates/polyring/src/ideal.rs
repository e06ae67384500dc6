use crate::monomial::Mono;
use crate::order::TermOrder;
use crate::poly::Poly;
use crate::ring::{same_roster, Roster};
use crate::{Error, Rat, Result};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// An ideal of a polynomial ring, carried by a generator list with a
/// lazily computed cache of reduced Gröbner bases per term order.
#[derive(Debug)]
pub struct Ideal {
    roster: Arc<Roster>,
    gens: Vec<Poly>,
    cache: RwLock<HashMap<String, Arc<Vec<Poly>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            roster: self.roster.clone(),
            gens: self.gens.clone(),
            cache: RwLock::new(self.cache.read().unwrap().clone()),
        }
    }
}

impl Ideal {
    pub fn new(roster: &Arc<Roster>, gens: Vec<Poly>) -> Result<Ideal> {
        for g in &gens {
            if !same_roster(g.roster(), roster) {
                return Err(Error::RosterMismatch(
                    roster.to_string(),
                    g.roster().to_string(),
                ));
            }
        }
        Ok(Ideal {
            roster: roster.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn zero(roster: &Arc<Roster>) -> Ideal {
        Ideal::new(roster, vec![]).unwrap()
    }

    pub fn roster(&self) -> &Arc<Roster> {
        &self.roster
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn default_order(&self) -> TermOrder {
        TermOrder::grevlex(&self.roster)
    }

    /// The reduced Gröbner basis for the given order (cached).
    pub fn groebner(&self, order: &TermOrder) -> Arc<Vec<Poly>> {
        let key = order.describe(&self.roster);
        if let Some(b) = self.cache.read().unwrap().get(&key) {
            return b.clone();
        }
        let basis = Arc::new(buchberger(&self.gens, order));
        self.cache
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| basis.clone())
            .clone()
    }

    /// Normal form of `f` against the reduced basis.
    pub fn normal_form(&self, f: &Poly, order: &TermOrder) -> Result<Poly> {
        if !same_roster(f.roster(), &self.roster) {
            return Err(Error::RosterMismatch(
                self.roster.to_string(),
                f.roster().to_string(),
            ));
        }
        let basis = self.groebner(order);
        Ok(reduce_full(f, &basis, order))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f, &self.default_order())?.is_zero())
    }

    /// Membership after localizing at the given polynomials: true when
    /// `u^k * f` lies in the ideal for some product `u` of the declared
    /// units and some `k <= max_pow`.
    pub fn contains_localized(&self, f: &Poly, units: &[Poly], max_pow: u32) -> Result<bool> {
        let mut g = f.clone();
        let unit: Poly = units
            .iter()
            .fold(Poly::one(&self.roster), |acc, u| &acc * u);
        for _ in 0..=max_pow {
            if self.contains(&g)? {
                return Ok(true);
            }
            g = &g * &unit;
        }
        Ok(false)
    }

    pub fn is_unit_ideal(&self) -> bool {
        let basis = self.groebner(&self.default_order());
        basis.len() == 1 && basis[0].is_constant() && !basis[0].is_zero()
    }

    /// Equality via mutual membership of the generators.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if !same_roster(&self.roster, &other.roster) {
            return Err(Error::RosterMismatch(
                self.roster.to_string(),
                other.roster.to_string(),
            ));
        }
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality after localization at the declared unit polynomials.
    pub fn equals_localized(&self, other: &Ideal, units: &[Poly], max_pow: u32) -> Result<bool> {
        for g in &other.gens {
            if !self.contains_localized(g, units, max_pow)? {
                return Ok(false);
            }
        }
        for g in &self.gens {
            if !other.contains_localized(g, units, max_pow)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal sum; keeps both generator lists.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_roster(&self.roster, &other.roster) {
            return Err(Error::RosterMismatch(
                self.roster.to_string(),
                other.roster.to_string(),
            ));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.roster, gens)
    }

    pub fn plus(&self, extra: &[Poly]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.roster, gens)
    }

    /// Exact intersection by the one-tag elimination method: adjoin t,
    /// form t*I + (1-t)*J, eliminate t.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if !same_roster(&self.roster, &other.roster) {
            return Err(Error::RosterMismatch(
                self.roster.to_string(),
                other.roster.to_string(),
            ));
        }
        let tname = self.roster.fresh_name("t#");
        let big = self.roster.extend(vec![tname.clone()]);
        let t = Poly::var(&big, &tname);
        let one_minus_t = &Poly::one(&big) - &t;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&g.embed(&big) * &t);
        }
        for g in &other.gens {
            gens.push(&g.embed(&big) * &one_minus_t);
        }
        let extended = Ideal::new(&big, gens)?;
        extended.eliminate(&[big.len() - 1], &self.roster)
    }

    /// Saturation `I : f^∞` by the Rabinowitsch method: adjoin t, compute
    /// (I + <t*f - 1>) ∩ original ring.
    pub fn saturate(&self, f: &Poly) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::SaturateByZero);
        }
        if !same_roster(f.roster(), &self.roster) {
            return Err(Error::RosterMismatch(
                self.roster.to_string(),
                f.roster().to_string(),
            ));
        }
        let tname = self.roster.fresh_name("t#");
        let big = self.roster.extend(vec![tname.clone()]);
        let t = Poly::var(&big, &tname);
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| g.embed(&big)).collect();
        gens.push(&(&f.embed(&big) * &t) - &Poly::one(&big));
        let extended = Ideal::new(&big, gens)?;
        extended.eliminate(&[big.len() - 1], &self.roster)
    }

    /// Elimination ideal: intersect with the subring omitting the given
    /// variables, expressed over `target` (the roster without them).
    pub fn eliminate(&self, drop: &[usize], target: &Arc<Roster>) -> Result<Ideal> {
        let order = TermOrder::eliminate(&self.roster, drop);
        let basis = self.groebner(&order);
        let keep: Vec<usize> = (0..self.roster.len()).filter(|i| !drop.contains(i)).collect();
        let mut gens = Vec::new();
        for g in basis.iter() {
            if g.terms().all(|(m, _)| m.supported_on(&keep)) {
                gens.push(g.restrict(target));
            }
        }
        Ideal::new(target, gens)
    }

    /// Cache soundness check: the cached basis and the generator list
    /// produce the same ideal (mutual membership both ways, computed from
    /// scratch).
    pub fn validate_cache(&self, order: &TermOrder) -> Result<bool> {
        let basis = self.groebner(order);
        let fresh = buchberger(&self.gens, order);
        for g in basis.iter() {
            if !reduce_full(g, &fresh, order).is_zero() {
                return Ok(false);
            }
        }
        for g in &self.gens {
            if !reduce_full(g, &basis, order).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Full reduction: every term of the remainder is irreducible against the
/// basis. Divisor selection is deterministic (first match in basis order).
pub fn reduce_full(f: &Poly, basis: &[Poly], order: &TermOrder) -> Poly {
    let roster = f.roster().clone();
    let mut work = f.clone();
    let mut remainder = Poly::zero(&roster);
    let lts: Vec<(Mono, Rat)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(order).expect("zero divisor in basis");
            (m.clone(), c.clone())
        })
        .collect();
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        for (i, (gm, gc)) in lts.iter().enumerate() {
            if gm.divides(&lm) {
                let q = lm.try_div(gm).unwrap();
                let coef = &lc / gc;
                work = &work - &basis[i].mul_mono(&q, &coef);
                continue 'outer;
            }
        }
        // move leading term to remainder
        remainder = &remainder + &Poly::monomial(&roster, lm.clone(), lc.clone());
        work = &work - &Poly::monomial(&roster, lm, lc);
    }
    remainder
}

fn s_poly(f: &Poly, g: &Poly, order: &TermOrder) -> Poly {
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let l = fm.lcm(gm);
    let a = l.try_div(fm).unwrap();
    let b = l.try_div(gm).unwrap();
    let inv_f = Rat::from_integer(1.into()) / fc.clone();
    let inv_g = Rat::from_integer(1.into()) / gc.clone();
    &f.mul_mono(&a, &inv_f) - &g.mul_mono(&b, &inv_g)
}

/// Buchberger's algorithm returning the unique reduced Gröbner basis,
/// sorted descending by leading monomial. Deterministic across generator
/// permutations.
pub fn buchberger(gens: &[Poly], order: &TermOrder) -> Vec<Poly> {
    let mut basis: Vec<Poly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.make_monic(order))
        .collect();
    if basis.is_empty() {
        return vec![];
    }
    // Deterministic starting point independent of generator permutation.
    basis.sort_by(|a, b| {
        order.cmp(
            a.leading_term(order).unwrap().0,
            b.leading_term(order).unwrap().0,
        )
    });
    basis.dedup();

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }

    let lt = |basis: &Vec<Poly>, i: usize| -> Mono {
        basis[i].leading_term(order).unwrap().0.clone()
    };

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first (by the order, then by index)
        let mut best = 0usize;
        let mut best_lcm = lt(&basis, pairs[0].0).lcm(&lt(&basis, pairs[0].1));
        for (k, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let l = lt(&basis, i).lcm(&lt(&basis, j));
            if order.cmp(&l, &best_lcm) == std::cmp::Ordering::Less {
                best = k;
                best_lcm = l;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        let (mi, mj) = (lt(&basis, i), lt(&basis, j));
        if mi.coprime(&mj) {
            continue; // Buchberger's first criterion
        }
        // chain criterion: some k with LT(k) | lcm and both pairs done
        let l = mi.lcm(&mj);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lt(&basis, k).divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let r = reduce_full(&s, &basis, order);
        if !r.is_zero() {
            let r = r.make_monic(order);
            let new_idx = basis.len();
            basis.push(r);
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
        }
    }

    // Minimalize: drop elements whose LT is divisible by another LT.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j && keep[j] {
                let (mi, mj) = (
                    basis[i].leading_term(order).unwrap().0.clone(),
                    basis[j].leading_term(order).unwrap().0.clone(),
                );
                if mj.divides(&mi) && (mi != mj || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<Poly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();

    // Reduce: each element fully reduced against the others.
    let mut reduced: Vec<Poly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = if others.is_empty() {
            minimal[i].clone()
        } else {
            reduce_full(&minimal[i], &others, order)
        };
        if !r.is_zero() {
            reduced.push(r.make_monic(order));
        }
    }
    reduced.sort_by(|a, b| {
        order.cmp(
            b.leading_term(order).unwrap().0,
            a.leading_term(order).unwrap().0,
        )
    });
    reduced
}

/// Verifies that every S-polynomial of the basis reduces to zero: used by
/// tests as an independent certificate that a basis is a Gröbner basis.
pub fn is_groebner_basis(basis: &[Poly], order: &TermOrder) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_poly(&basis[i], &basis[j], order);
            if !reduce_full(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        same_roster(&self.roster, &other.roster) && self.equals(other).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ideal(roster: &Arc<Roster>, gens: &[&str]) -> Ideal {
        Ideal::new(
            roster,
            gens.iter().map(|s| parse_poly(roster, s).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn groebner_already_reduced() {
        let r = Roster::parse("x,y");
        let i = ideal(&r, &["x", "y"]);
        let order = TermOrder::lex(&r);
        let b = i.groebner(&order);
        assert_eq!(b.len(), 2);
        assert_eq!(b[0], parse_poly(&r, "x").unwrap());
        assert_eq!(b[1], parse_poly(&r, "y").unwrap());
    }

    #[test]
    fn groebner_unit_ideal_from_constant() {
        // {x*y - 23, x} forces the constant into the ideal: unit ideal.
        let r = Roster::parse("x,y");
        let i = ideal(&r, &["x*y - 23", "x"]);
        let b = i.groebner(&TermOrder::lex(&r));
        assert_eq!(b.len(), 1);
        assert!(b[0].is_constant());
        assert!(i.is_unit_ideal());
    }

    #[test]
    fn groebner_textbook_example() {
        // <x^2 - y, x^3 - z> in lex x>y>z: the twisted cubic. Reduced
        // basis is {x^2 - y, x*y - z, x*z - y^2, y^3 - z^2}.
        let r = Roster::parse("x,y,z");
        let i = ideal(&r, &["x^2 - y", "x^3 - z"]);
        let order = TermOrder::lex(&r);
        let b = i.groebner(&order);
        let expect = [
            "x^2 - y",
            "x*y - z",
            "x*z - y^2",
            "y^3 - z^2",
        ];
        assert_eq!(b.len(), expect.len());
        let set: Vec<Poly> = expect.iter().map(|s| parse_poly(&r, s).unwrap()).collect();
        for e in &set {
            assert!(b.contains(e), "missing {e}");
        }
        assert!(is_groebner_basis(&b, &order));
    }

    #[test]
    fn membership_basics() {
        let r = Roster::parse("x,y");
        let i = ideal(&r, &["x"]);
        assert!(i.contains(&parse_poly(&r, "0").unwrap()).unwrap());
        assert!(i.contains(&parse_poly(&r, "x*y + 7*x").unwrap()).unwrap());
        assert!(!i.contains(&parse_poly(&r, "1").unwrap()).unwrap());
        assert!(!i.contains(&parse_poly(&r, "y").unwrap()).unwrap());
    }

    #[test]
    fn equality_examples() {
        let r = Roster::parse("x,y");
        let a = ideal(&r, &["x", "y"]);
        let b = ideal(&r, &["x + y", "y"]);
        assert!(a.equals(&b).unwrap());
        let c = ideal(&r, &["x"]);
        let d = ideal(&r, &["x^2"]);
        assert!(!c.equals(&d).unwrap());
    }

    #[test]
    fn intersect_examples() {
        let r = Roster::parse("x,y");
        let a = ideal(&r, &["x"]);
        let b = ideal(&r, &["y"]);
        let c = a.intersect(&b).unwrap();
        assert!(c.equals(&ideal(&r, &["x*y"])).unwrap());
        // idempotence
        let d = a.intersect(&a).unwrap();
        assert!(d.equals(&a).unwrap());
    }

    #[test]
    fn saturate_examples() {
        let r = Roster::parse("x,y");
        let a = ideal(&r, &["x*y"]);
        let s = a.saturate(&parse_poly(&r, "y").unwrap()).unwrap();
        assert!(s.equals(&ideal(&r, &["x"])).unwrap());
        // saturating the unit ideal stays the unit ideal
        let u = ideal(&r, &["1"]);
        let su = u.saturate(&parse_poly(&r, "x").unwrap()).unwrap();
        assert!(su.is_unit_ideal());
        // constant scaling: <23*x> : 23^∞ = <x>
        let c = ideal(&r, &["23 x"]);
        let sc = c.saturate(&parse_poly(&r, "23").unwrap()).unwrap();
        assert!(sc.equals(&ideal(&r, &["x"])).unwrap());
        // zero divisor is rejected
        assert!(a.saturate(&Poly::zero(&r)).is_err());
    }

    #[test]
    fn roster_mismatch_rejected() {
        let r1 = Roster::parse("x,y");
        let r2 = Roster::parse("x,z");
        let a = ideal(&r1, &["x"]);
        let f = parse_poly(&r2, "x").unwrap();
        assert!(a.contains(&f).is_err());
    }

    #[test]
    fn determinism_under_permutation() {
        let r = Roster::parse("x,y,z");
        let order = TermOrder::grevlex(&r);
        let g1 = ideal(&r, &["x^2 + y", "y^2 + z", "x + y + z"]);
        let g2 = ideal(&r, &["y^2 + z", "x + y + z", "x^2 + y"]);
        let b1 = g1.groebner(&order);
        let b2 = g2.groebner(&order);
        assert_eq!(*b1, *b2);
    }

    #[test]
    fn localized_membership() {
        // x*(k-1) ∈ <x> localized at k-1, but x ∉ <x*(k-1)> plainly while
        // it is after localization.
        let r = Roster::parse("x,k");
        let i = ideal(&r, &["x*k - x"]);
        let x = parse_poly(&r, "x").unwrap();
        let unit = parse_poly(&r, "k - 1").unwrap();
        assert!(!i.contains(&x).unwrap());
        assert!(i.contains_localized(&x, &[unit], 3).unwrap());
    }

    #[test]
    fn cache_validates() {
        let r = Roster::parse("x,y");
        let i = ideal(&r, &["x^2 - y", "x*y - 1"]);
        let order = TermOrder::grevlex(&r);
        let _ = i.groebner(&order);
        assert!(i.validate_cache(&order).unwrap());
    }
}
