use crate::monomial::Mono;
use crate::order::TermOrder;
use crate::ring::{same_roster, Roster};
use crate::{rat, Error, Int, Rat, Result};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Sparse multivariate polynomial with rational coefficients over a fixed
/// roster. No zero coefficients are stored. Polynomials over different
/// rosters cannot be combined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    roster: Arc<Roster>,
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero(roster: &Arc<Roster>) -> Poly {
        Poly {
            roster: roster.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(roster: &Arc<Roster>, c: Rat) -> Poly {
        let mut p = Poly::zero(roster);
        if !c.is_zero() {
            p.terms.insert(Mono::one(roster.len()), c);
        }
        p
    }

    pub fn one(roster: &Arc<Roster>) -> Poly {
        Poly::constant(roster, rat(1))
    }

    pub fn int(roster: &Arc<Roster>, n: i64) -> Poly {
        Poly::constant(roster, rat(n))
    }

    pub fn var(roster: &Arc<Roster>, name: &str) -> Poly {
        let i = roster
            .index_of(name)
            .unwrap_or_else(|| panic!("variable `{name}` not in roster {roster}"));
        let mut p = Poly::zero(roster);
        p.terms.insert(Mono::var(roster.len(), i), rat(1));
        p
    }

    pub fn monomial(roster: &Arc<Roster>, m: Mono, c: Rat) -> Poly {
        assert_eq!(m.0.len(), roster.len());
        let mut p = Poly::zero(roster);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn roster(&self) -> &Arc<Roster> {
        &self.roster
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(rat(0));
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Largest exponent of the given variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    pub fn coefficient(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(|| rat(0))
    }

    fn insert_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn check_same_roster(&self, other: &Poly) -> Result<()> {
        if same_roster(&self.roster, &other.roster) {
            Ok(())
        } else {
            Err(Error::RosterMismatch(
                self.roster.to_string(),
                other.roster.to_string(),
            ))
        }
    }

    fn assert_same_roster(&self, other: &Poly) {
        assert!(
            same_roster(&self.roster, &other.roster),
            "roster mismatch: {} vs {}",
            self.roster,
            other.roster
        );
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.roster);
        }
        Poly {
            roster: self.roster.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.roster);
        }
        Poly {
            roster: self.roster.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.roster);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Leading term under the given order.
    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Mono, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    pub fn make_monic(&self, order: &TermOrder) -> Poly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rat::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    /// Divides out the rational content, leaving an integer-coefficient
    /// polynomial with positive leading coefficient (under the order) and
    /// coprime coefficients. Deterministic normal form for display.
    pub fn primitive_part(&self, order: &TermOrder) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = Int::one();
        let mut numer_gcd = Int::zero();
        for c in self.terms.values() {
            denom_lcm = num::integer::lcm(denom_lcm.clone(), c.denom().clone());
            numer_gcd = num::integer::gcd(numer_gcd.clone(), c.numer().clone());
        }
        let scale = Rat::new(denom_lcm, numer_gcd.abs());
        let mut out = self.scale(&scale);
        if let Some((_, c)) = out.leading_term(order) {
            if c.is_negative() {
                out = out.neg();
            }
        }
        out
    }

    /// Largest power of the given variable dividing every monomial.
    pub fn var_content(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).min().unwrap_or(0)
    }

    /// Exact division by `var^k`.
    pub fn div_var_power(&self, var: usize, k: u32) -> Poly {
        assert!(self.var_content(var) >= k, "inexact division by variable power");
        Poly {
            roster: self.roster.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e[var] -= k;
                    (Mono(e), c.clone())
                })
                .collect(),
        }
    }

    /// Homomorphic image under `var -> images[var]`, all over the target
    /// roster. The map must be total on the variables actually used.
    pub fn substitute(&self, target: &Arc<Roster>, images: &[Option<Poly>]) -> Result<Poly> {
        assert_eq!(images.len(), self.roster.len());
        let mut acc = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images[i].as_ref().ok_or_else(|| {
                    Error::UnmappedVariable(self.roster.name(i).to_string())
                })?;
                term = &term * &img.pow(e);
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Re-express over an extended/permuted roster; every variable of
    /// `self` must appear in `target`.
    pub fn embed(&self, target: &Arc<Roster>) -> Poly {
        let map: Vec<usize> = self
            .roster
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .unwrap_or_else(|| panic!("variable `{n}` missing from target roster"))
            })
            .collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &ex) in m.0.iter().enumerate() {
                e[map[i]] = ex;
            }
            out.insert_term(Mono(e), c.clone());
        }
        out
    }

    /// Drops unused variables, projecting onto the smaller roster. Panics
    /// if the polynomial actually uses a dropped variable.
    pub fn restrict(&self, target: &Arc<Roster>) -> Poly {
        let map: Vec<Option<usize>> = self
            .roster
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &ex) in m.0.iter().enumerate() {
                if ex > 0 {
                    match map[i] {
                        Some(j) => e[j] = ex,
                        None => panic!(
                            "cannot restrict: variable `{}` is used",
                            self.roster.name(i)
                        ),
                    }
                }
            }
            out.insert_term(Mono(e), c.clone());
        }
        out
    }

    /// Terms sorted descending under the order, rendered canonically.
    pub fn render(&self, order: &TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut ts: Vec<(&Mono, &Rat)> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut out = String::new();
        for (i, (m, c)) in ts.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coef_one = abs.is_one();
            if m.is_one() {
                out.push_str(&format_rat(&abs));
            } else {
                if !coef_one {
                    out.push_str(&format_rat(&abs));
                    out.push('*');
                }
                out.push_str(&m.render(self.roster.names()));
            }
        }
        out
    }
}

pub(crate) fn format_rat(c: &Rat) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.assert_same_roster(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.assert_same_roster(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            roster: self.roster.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        (&self).neg()
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.assert_same_roster(rhs);
        let mut out = Poly::zero(&self.roster);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&TermOrder::grevlex(&self.roster)))
    }
}

/// Small expression parser for tests and the CLI: `+ - * ^`, parentheses,
/// integer and `num/den` literals, variable names from the roster.
pub fn parse_poly(roster: &Arc<Roster>, src: &str) -> Result<Poly> {
    Parser {
        roster: roster.clone(),
        chars: src.chars().collect(),
        pos: 0,
    }
    .parse_top()
}

struct Parser {
    roster: Arc<Roster>,
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn parse_top(&mut self) -> Result<Poly> {
        let p = self.parse_expr()?;
        self.skip_ws();
        if self.pos != self.chars.len() {
            return Err(Error::Structural(format!(
                "trailing input at position {}",
                self.pos
            )));
        }
        Ok(p)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse_expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.parse_term()?.neg()
            }
            _ => self.parse_term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.parse_term()?;
                    acc = &acc + &t;
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.parse_term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Poly> {
        let mut acc = self.parse_power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let t = self.parse_power()?;
                    acc = &acc * &t;
                }
                // implicit multiplication before '(' or an identifier
                Some(c) if c == '(' || c.is_alphabetic() => {
                    let t = self.parse_power()?;
                    acc = &acc * &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_power(&mut self) -> Result<Poly> {
        let base = self.parse_atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = self.chars[start..self.pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Structural("bad exponent".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.parse_expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Structural("expected )".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: i64 = self.chars[start..self.pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Structural("bad integer".into()))?;
                if self.chars.get(self.pos) == Some(&'/') {
                    self.pos += 1;
                    let dstart = self.pos;
                    while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let d: i64 = self.chars[dstart..self.pos]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| Error::Structural("bad denominator".into()))?;
                    return Ok(Poly::constant(&self.roster, crate::ratio(n, d)));
                }
                Ok(Poly::int(&self.roster, n))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                if self.roster.index_of(&name).is_none() {
                    return Err(Error::UnmappedVariable(name));
                }
                Ok(Poly::var(&self.roster, &name))
            }
            other => Err(Error::Structural(format!("unexpected input: {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_parse() {
        let r = Roster::parse("x,y");
        let f = parse_poly(&r, "(x + y)^2 - x^2 - 2*x*y").unwrap();
        let want = parse_poly(&r, "y^2").unwrap();
        assert_eq!(f, want);
        let g = parse_poly(&r, "1/2 x - 1/2 x").unwrap();
        assert!(g.is_zero());
    }

    #[test]
    fn no_zero_terms_stored() {
        let r = Roster::parse("x,y");
        let f = parse_poly(&r, "x - x + y").unwrap();
        assert_eq!(f.num_terms(), 1);
    }

    #[test]
    #[should_panic]
    fn roster_mismatch_is_hard_error() {
        let r1 = Roster::parse("x,y");
        let r2 = Roster::parse("x,z");
        let a = Poly::var(&r1, "x");
        let b = Poly::var(&r2, "x");
        let _ = &a + &b;
    }

    #[test]
    fn render_canonical() {
        let r = Roster::parse("x,y");
        let f = parse_poly(&r, "y + x^2 - 3").unwrap();
        assert_eq!(f.render(&TermOrder::grevlex(&r)), "x^2 + y - 3");
        let g = parse_poly(&r, "2/3 x y - y").unwrap();
        assert_eq!(g.render(&TermOrder::grevlex(&r)), "2/3*x*y - y");
    }

    #[test]
    fn primitive_part_normalizes() {
        let r = Roster::parse("x,y");
        let ord = TermOrder::grevlex(&r);
        let f = parse_poly(&r, "2/3 x - 4 y").unwrap();
        let g = f.primitive_part(&ord);
        assert_eq!(g, parse_poly(&r, "x - 6 y").unwrap());
        let h = parse_poly(&r, "0").unwrap().primitive_part(&ord);
        assert!(h.is_zero());
    }

    #[test]
    fn substitution() {
        let r = Roster::parse("x,y");
        let t = Roster::parse("u");
        let f = parse_poly(&r, "x^2 + y").unwrap();
        let images = vec![
            Some(parse_poly(&t, "u").unwrap()),
            Some(parse_poly(&t, "u^2 - 1").unwrap()),
        ];
        let g = f.substitute(&t, &images).unwrap();
        assert_eq!(g, parse_poly(&t, "2 u^2 - 1").unwrap());
    }
}
