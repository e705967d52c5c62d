//! Exact rationals used for coefficients and exponents.
//!
//! `Rational` is a re-export of [`num_rational::BigRational`]; this module adds
//! the parsing, printing and floating-point helpers the rest of the crate needs.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as Rational;

/// Builds `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form: `p/q`, with `/q` omitted when `q == 1`.
pub struct RatDisplay<'a>(pub &'a Rational);

impl fmt::Display for RatDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

pub fn fmt_rat(q: &Rational) -> String {
    RatDisplay(q).to_string()
}

/// Parses `int` or `int/nat` (optional leading sign, nonzero denominator).
pub fn parse_rat(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() || d.is_negative() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Nearest `f64`, correct for numerators and denominators far outside the
/// `f64` range.
pub fn to_f64(q: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && n.abs() < 9.0e15 && d < 9.0e15 {
            return n / d;
        }
    }
    if q.is_zero() {
        return 0.0;
    }
    let sign = if q.is_negative() { -1.0 } else { 1.0 };
    sign * ln_abs(q).exp()
}

/// `ln|q|` for nonzero `q`, accurate even when `|q|` is outside the `f64` range.
pub fn ln_abs(q: &Rational) -> f64 {
    debug_assert!(!q.is_zero());
    ln_bigint(&q.numer().abs()) - ln_bigint(q.denom())
}

fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top: BigInt = n >> shift;
    top.to_f64().unwrap().ln() + (shift as f64) * std::f64::consts::LN_2
}

pub fn floor(q: &Rational) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn ceil(q: &Rational) -> BigInt {
    -((-q.numer()).div_floor(q.denom()))
}

pub fn lcm_denominators<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Exact `p`th root of a positive rational if it is itself rational.
pub fn exact_root(q: &Rational, p: u32) -> Option<Rational> {
    if q.is_negative() || p == 0 {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let n = q.numer().nth_root(p);
    let d = q.denom().nth_root(p);
    if n.pow(p) == *q.numer() && d.pow(p) == *q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Rational approximation of `q^(1/p)` (q > 0) with relative error below
/// `2^-bits`, rounded down.
pub fn approx_root(q: &Rational, p: u32, bits: u32) -> Rational {
    assert!(q.is_positive() && p > 0);
    if let Some(r) = exact_root(q, p) {
        return r;
    }
    // q^(1/p) = (n d^(p-1))^(1/p) / d
    let n = q.numer();
    let d = q.denom();
    let scale = BigInt::one() << (bits as usize);
    let radicand = n * d.pow(p - 1) * scale.pow(p);
    let root = radicand.nth_root(p);
    // keep enough significant bits when the radicand is small
    Rational::new(root, d * scale)
}
