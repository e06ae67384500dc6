use crate::poly::Poly;
use crate::ring::Roster;
use crate::ringmap::RingMap;
use crate::{Error, Result};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Polynomial in one distinguished formal variable `u` with coefficients
/// in a multivariate polynomial ring. In the gauge matrices `u = v + p`;
/// `v` itself is represented as `u - p` on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    roster: Arc<Roster>,
    /// coefficient of u^k at index k; trailing zeros trimmed
    coeffs: Vec<Poly>,
}

impl UPoly {
    pub fn zero(roster: &Arc<Roster>) -> UPoly {
        UPoly {
            roster: roster.clone(),
            coeffs: vec![],
        }
    }

    pub fn from_coeffs(roster: &Arc<Roster>, coeffs: Vec<Poly>) -> UPoly {
        let mut u = UPoly {
            roster: roster.clone(),
            coeffs,
        };
        u.trim();
        u
    }

    pub fn constant(c: Poly) -> UPoly {
        let roster = c.roster().clone();
        UPoly::from_coeffs(&roster, vec![c])
    }

    pub fn u(roster: &Arc<Roster>) -> UPoly {
        UPoly::from_coeffs(roster, vec![Poly::zero(roster), Poly::one(roster)])
    }

    /// `v = u - p` for the given representation of the constant p.
    pub fn v(roster: &Arc<Roster>, p: &Poly) -> UPoly {
        UPoly::from_coeffs(roster, vec![p.neg(), Poly::one(roster)])
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn roster(&self) -> &Arc<Roster> {
        &self.roster
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of u^k.
    pub fn coeff(&self, k: usize) -> Poly {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Poly::zero(&self.roster))
    }

    pub fn leading_coeff(&self) -> Option<&Poly> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero(&self.roster);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&crate::rat(k as i64)))
            .collect();
        UPoly::from_coeffs(&self.roster, coeffs)
    }

    /// Evaluation at u = value (a base-ring element).
    pub fn eval(&self, value: &Poly) -> Poly {
        let mut acc = Poly::zero(&self.roster);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Exact division by the linear factor `u - r`; errors when the
    /// remainder is nonzero.
    pub fn div_linear(&self, r: &Poly) -> Result<UPoly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let n = self.coeffs.len();
        let mut quot = vec![Poly::zero(&self.roster); n.saturating_sub(1)];
        let mut carry = Poly::zero(&self.roster);
        // synthetic division from the top coefficient down
        for k in (0..n).rev() {
            let cur = &self.coeffs[k] + &carry;
            if k == 0 {
                if !cur.is_zero() {
                    return Err(Error::InexactDivision(format!(
                        "remainder {cur} dividing by linear factor"
                    )));
                }
            } else {
                carry = &cur * r;
                quot[k - 1] = cur;
            }
        }
        Ok(UPoly::from_coeffs(&self.roster, quot))
    }

    /// Divisibility by `v = u - p`.
    pub fn divisible_by_v(&self, p: &Poly) -> bool {
        self.eval(p).is_zero()
    }

    pub fn scale(&self, c: &Poly) -> UPoly {
        UPoly::from_coeffs(
            &self.roster,
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    /// Push every coefficient through a ring map (u is untouched).
    pub fn map_coeffs(&self, m: &RingMap) -> Result<UPoly> {
        let coeffs: Result<Vec<Poly>> = self.coeffs.iter().map(|c| m.apply(c)).collect();
        Ok(UPoly::from_coeffs(m.dst(), coeffs?))
    }

    /// Rendered with terms from the top degree down.
    pub fn render(&self, order: &crate::TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.render(order);
            let upow = match k {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{k}"),
            };
            let body = if k == 0 {
                cs
            } else if cs == "1" {
                upow
            } else if c.num_terms() == 1 && !cs.contains(' ') {
                format!("{cs}*{upow}")
            } else {
                format!("({cs})*{upow}")
            };
            parts.push(body);
        }
        parts.join(" + ")
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        UPoly::from_coeffs(&self.roster, coeffs)
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect();
        UPoly::from_coeffs(&self.roster, coeffs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::from_coeffs(&self.roster, self.coeffs.iter().map(|c| c.neg()).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero(&self.roster);
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut coeffs = vec![Poly::zero(&self.roster); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UPoly::from_coeffs(&self.roster, coeffs)
    }
}

/// 2x2 matrix with `UPoly` entries: the universal gauge matrices and the
/// monodromy operator live here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub e: [[UPoly; 2]; 2],
}

impl Mat2 {
    pub fn new(e11: UPoly, e12: UPoly, e21: UPoly, e22: UPoly) -> Mat2 {
        Mat2 {
            e: [[e11, e12], [e21, e22]],
        }
    }

    pub fn roster(&self) -> &Arc<Roster> {
        self.e[0][0].roster()
    }

    pub fn entry(&self, i: usize, k: usize) -> &UPoly {
        &self.e[i][k]
    }

    pub fn det(&self) -> UPoly {
        &(&self.e[0][0] * &self.e[1][1]) - &(&self.e[0][1] * &self.e[1][0])
    }

    /// Adjugate (transposed cofactor matrix): A * adj(A) = det(A) * Id.
    pub fn adjugate(&self) -> Mat2 {
        Mat2::new(
            self.e[1][1].clone(),
            (&self.e[0][1]).neg(),
            (&self.e[1][0]).neg(),
            self.e[0][0].clone(),
        )
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let p = |i: usize, k: usize| -> UPoly {
            &(&self.e[i][0] * &rhs.e[0][k]) + &(&self.e[i][1] * &rhs.e[1][k])
        };
        Mat2::new(p(0, 0), p(0, 1), p(1, 0), p(1, 1))
    }

    pub fn sub(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.e[0][0] - &rhs.e[0][0],
            &self.e[0][1] - &rhs.e[0][1],
            &self.e[1][0] - &rhs.e[1][0],
            &self.e[1][1] - &rhs.e[1][1],
        )
    }

    pub fn scale(&self, c: &UPoly) -> Mat2 {
        Mat2::new(
            &self.e[0][0] * c,
            &self.e[0][1] * c,
            &self.e[1][0] * c,
            &self.e[1][1] * c,
        )
    }

    pub fn derivative(&self) -> Mat2 {
        Mat2::new(
            self.e[0][0].derivative(),
            self.e[0][1].derivative(),
            self.e[1][0].derivative(),
            self.e[1][1].derivative(),
        )
    }

    pub fn map_coeffs(&self, m: &RingMap) -> Result<Mat2> {
        Ok(Mat2::new(
            self.e[0][0].map_coeffs(m)?,
            self.e[0][1].map_coeffs(m)?,
            self.e[1][0].map_coeffs(m)?,
            self.e[1][1].map_coeffs(m)?,
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn upoly_arith_and_division() {
        let r = Roster::parse("p,a");
        let p = Poly::var(&r, "p");
        let u = UPoly::u(&r);
        let v = UPoly::v(&r, &p);
        // v = u - p so u*v = u^2 - p*u
        let uv = &u * &v;
        assert_eq!(uv.coeff(2), Poly::one(&r));
        assert_eq!(uv.coeff(1), parse_poly(&r, "-p").unwrap());
        assert!(uv.coeff(0).is_zero());
        // (u - p)(u + a) / (u - p) = u + a exactly
        let f = &v * &(&u + &UPoly::constant(Poly::var(&r, "a")));
        let q = f.div_linear(&p).unwrap();
        assert_eq!(q.coeff(0), Poly::var(&r, "a"));
        assert_eq!(q.coeff(1), Poly::one(&r));
        assert!(f.divisible_by_v(&p));
        // u + a is not divisible by v
        assert!(q.div_linear(&p).is_err());
    }

    #[test]
    fn det_and_adjugate() {
        let r = Roster::parse("a,b");
        let a = UPoly::constant(Poly::var(&r, "a"));
        let b = UPoly::constant(Poly::var(&r, "b"));
        let u = UPoly::u(&r);
        let m = Mat2::new(u.clone(), b.clone(), a.clone(), u.clone());
        let d = m.det();
        // u^2 - a*b
        assert_eq!(d.coeff(2), Poly::one(&r));
        assert_eq!(d.coeff(0), parse_poly(&r, "-a*b").unwrap());
        // A * adj(A) = det * Id
        let prod = m.mul(&m.adjugate());
        assert_eq!(prod.e[0][0], d);
        assert_eq!(prod.e[1][1], d);
        assert!(prod.e[0][1].is_zero());
        assert!(prod.e[1][0].is_zero());
    }

    #[test]
    fn derivative_rule() {
        let r = Roster::parse("c");
        let c = Poly::var(&r, "c");
        let u = UPoly::u(&r);
        // d/du (c*u^3) = 3c u^2
        let f = (&(&u * &u) * &u).scale(&c);
        let df = f.derivative();
        assert_eq!(df.coeff(2), c.scale(&crate::rat(3)));
    }
}
