//! Multi-precision evaluation backend.
//!
//! Sampled nets built from `sin`/`cos`/`exp`/`log` need their arguments to
//! far more than 53 bits: at `ε = 2^-200` the phase `1/(ει)` is about `2^200`,
//! so reducing it modulo `2π` requires roughly 260 correct bits of `π`.
//! Grid scans run at [`FAST_BITS`]; witnesses are re-checked at [`FULL_BITS`].

use std::cell::RefCell;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Rational;
use crate::value::NetValue;

pub const FAST_BITS: usize = 512;
pub const FULL_BITS: usize = 1024;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

/// Arithmetic context at a fixed binary precision.
#[derive(Debug, Clone, Copy)]
pub struct Hp {
    pub bits: usize,
}

impl Hp {
    pub fn new(bits: usize) -> Self {
        Hp { bits }
    }

    fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
        CONSTS.with(|c| f(&mut c.borrow_mut()))
    }

    pub fn rational(&self, q: &Rational) -> BigFloat {
        if q.is_zero() {
            return BigFloat::from_u8(0, self.bits);
        }
        let p = self.bits + 64;
        let num = Self::with_cc(|cc| BigFloat::parse(&q.numer().to_string(), Radix::Dec, p, RM, cc));
        if q.denom().is_one() {
            return num;
        }
        let den = Self::with_cc(|cc| BigFloat::parse(&q.denom().to_string(), Radix::Dec, p, RM, cc));
        num.div(&den, self.bits, RM)
    }

    /// `2^-j`, exact.
    pub fn dyadic(&self, j: u32) -> BigFloat {
        BigFloat::from_u8(2, self.bits).powi(j as usize, self.bits, RM).reciprocal(self.bits, RM)
    }

    pub fn pi(&self) -> BigFloat {
        Self::with_cc(|cc| cc.pi(self.bits, RM))
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, RM)
    }

    pub fn sin(&self, a: &BigFloat) -> BigFloat {
        Self::with_cc(|cc| a.sin(self.bits, RM, cc))
    }

    pub fn cos(&self, a: &BigFloat) -> BigFloat {
        Self::with_cc(|cc| a.cos(self.bits, RM, cc))
    }

    pub fn exp(&self, a: &BigFloat) -> BigFloat {
        Self::with_cc(|cc| a.exp(self.bits, RM, cc))
    }

    pub fn ln(&self, a: &BigFloat) -> BigFloat {
        Self::with_cc(|cc| a.ln(self.bits, RM, cc))
    }

    /// `base^q` for positive `base`; small integer powers are exact.
    pub fn pow(&self, base: &BigFloat, q: &Rational) -> BigFloat {
        if q.is_integer() {
            if let Some(n) = q.to_integer().abs().to_usize().filter(|&n| n <= 4096) {
                let v = base.powi(n, self.bits, RM);
                return if q.is_negative() { v.reciprocal(self.bits, RM) } else { v };
            }
        }
        let e = self.mul(&self.rational(q), &self.ln(base));
        self.exp(&e)
    }

    /// `(2^-j)^q` without forming `2^-j` first.
    pub fn dyadic_pow(&self, j: u32, q: &Rational) -> BigFloat {
        let jq = q * Rational::from_integer(j.into());
        if jq.is_integer() {
            if let Some(n) = jq.to_integer().to_i64() {
                let mut v = BigFloat::from_u8(1, self.bits);
                let two = BigFloat::from_u8(2, self.bits);
                let p = two.powi(n.unsigned_abs() as usize, self.bits, RM);
                v = if n >= 0 { v.div(&p, self.bits, RM) } else { v.mul(&p, self.bits, RM) };
                return v;
            }
        }
        let ln2 = Self::with_cc(|cc| cc.ln_2(self.bits, RM));
        self.exp(&self.mul(&self.rational(&-jq), &ln2))
    }
}

/// Converts to the log-domain representation. NaN (a domain error such as the
/// logarithm of a negative number) maps to zero.
pub fn to_value(x: &BigFloat) -> NetValue {
    if x.is_nan() || x.is_zero() {
        return NetValue::ZERO;
    }
    let sign: i8 = if x.is_negative() { -1 } else { 1 };
    if x.is_inf() {
        return NetValue::from_log(sign, f64::INFINITY);
    }
    let Some((words, _, s, e, _)) = x.as_raw_parts() else {
        return NetValue::ZERO;
    };
    debug_assert_eq!(s == Sign::Neg, sign < 0);
    // value = 0.m * 2^e with the most significant word last
    let top = words.last().copied().unwrap_or(0);
    let next = if words.len() > 1 { words[words.len() - 2] } else { 0 };
    let frac = (top as f64 + next as f64 / 18446744073709551616.0) / 18446744073709551616.0;
    NetValue::from_log(sign, frac.ln() + f64::from(e) * std::f64::consts::LN_2)
}
