//! Exact multivariate polynomial arithmetic and ideal operations over the
//! rationals.
//!
//! The crate provides sparse polynomials with named variables, term orders
//! (lex / graded-reverse-lex with explicit variable priorities, plus block
//! orders for elimination), Buchberger's algorithm with reduced bases, and
//! the ideal operations built on top of it: membership, equality, sum,
//! intersection, saturation, elimination and preimages under ring maps.
//!
//! Polynomials over different variable rosters are never coerced; mixing
//! them is a hard error.

mod dump;
mod ideal;
mod matrix;
mod monomial;
mod order;
mod poly;
mod ring;
mod ringmap;

pub use dump::{dump_ideal, DumpHeader};
pub use ideal::{buchberger, is_groebner_basis, reduce_full, Ideal};
pub use matrix::{Mat2, UPoly};
pub use monomial::Mono;
pub use order::TermOrder;
pub use poly::{parse_poly, Poly};
pub use ring::Roster;
pub use ringmap::RingMap;

use num::BigInt;
use num::BigRational;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator by the underlying implementation.
pub type Rat = BigRational;
/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Build a rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from(Int::from(n))
}

/// Build a rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(Int::from(n), Int::from(d))
}

/// Errors reported by roster-checked operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("roster mismatch: {0} vs {1}")]
    RosterMismatch(String, String),
    #[error("unmapped variable `{0}` in substitution")]
    UnmappedVariable(String),
    #[error("saturation by the zero polynomial")]
    SaturateByZero,
    #[error("ring map is not surjective: variable `{0}` is not reached")]
    NotSurjective(String),
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("{0}")]
    Structural(String),
}

pub type Result<T> = std::result::Result<T, Error>;
