//! Log-domain real values.
//!
//! Nets are sampled down to `eps = 2^-200` and beyond, well past the range of
//! `f64`. A [`NetValue`] keeps the sign and `ln|v|` separately so that products
//! and powers never underflow; `value` is the (possibly underflowed or
//! overflowed) plain `f64` for display.

use std::cmp::Ordering;

/// Relative size below which a sum is treated as exact cancellation.
pub const CANCEL_TOL: f64 = 1.0 / (1u64 << 46) as f64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetValue {
    pub value: f64,
    pub log_abs: f64,
    pub sign: i8,
}

impl NetValue {
    pub const ZERO: NetValue = NetValue {
        value: 0.0,
        log_abs: f64::NEG_INFINITY,
        sign: 0,
    };

    pub fn from_log(sign: i8, log_abs: f64) -> Self {
        if sign == 0 || log_abs == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        let sign = sign.signum();
        NetValue {
            value: f64::from(sign) * log_abs.exp(),
            log_abs,
            sign,
        }
    }

    pub fn from_f64(v: f64) -> Self {
        if v == 0.0 {
            return Self::ZERO;
        }
        let sign = if v < 0.0 { -1 } else { 1 };
        NetValue {
            value: v,
            log_abs: v.abs().ln(),
            sign,
        }
    }

    /// `2^-j`, the dyadic grid point.
    pub fn dyadic(j: u32) -> Self {
        Self::from_log(1, -f64::from(j) * std::f64::consts::LN_2)
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// True when the plain `f64` field saturated to zero or infinity.
    pub fn out_of_range(&self) -> bool {
        self.sign != 0 && (self.value == 0.0 || self.value.is_infinite())
    }

    pub fn neg(self) -> Self {
        NetValue {
            value: -self.value,
            log_abs: self.log_abs,
            sign: -self.sign,
        }
    }

    pub fn abs(self) -> Self {
        NetValue {
            value: self.value.abs(),
            log_abs: self.log_abs,
            sign: self.sign.abs(),
        }
    }

    pub fn mul(self, other: Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::ZERO;
        }
        Self::from_log(self.sign * other.sign, self.log_abs + other.log_abs)
    }

    /// Real power of a nonnegative value.
    pub fn powf(self, p: f64) -> Self {
        debug_assert!(self.sign >= 0);
        if self.is_zero() {
            return if p == 0.0 { Self::from_log(1, 0.0) } else { Self::ZERO };
        }
        Self::from_log(1, self.log_abs * p)
    }

    pub fn powi(self, n: u32) -> Self {
        if n == 0 {
            return Self::from_log(1, 0.0);
        }
        if self.is_zero() {
            return Self::ZERO;
        }
        let sign = if n.is_multiple_of(2) { 1 } else { self.sign };
        Self::from_log(sign, self.log_abs * f64::from(n))
    }

    pub fn max0(self) -> Self {
        if self.sign < 0 {
            Self::ZERO
        } else {
            self
        }
    }

    pub fn add(self, other: Self) -> Self {
        sum_values(&[self, other])
    }

    pub fn sub(self, other: Self) -> Self {
        sum_values(&[self, other.neg()])
    }

    /// Total order on the real line.
    pub fn cmp_real(&self, other: &Self) -> Ordering {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => {}
            o => return o,
        }
        match self.sign {
            0 => Ordering::Equal,
            1 => self.log_abs.total_cmp(&other.log_abs),
            _ => other.log_abs.total_cmp(&self.log_abs),
        }
    }

    pub fn lt(&self, other: &Self) -> bool {
        self.cmp_real(other) == Ordering::Less
    }

    pub fn gt(&self, other: &Self) -> bool {
        self.cmp_real(other) == Ordering::Greater
    }
}

/// Sums log-domain values in fixed index order.
///
/// The result is relative to the largest magnitude: the remaining terms are
/// scaled by it and accumulated with Neumaier compensation, then `ln_1p`
/// restores the logarithm so that tiny relative corrections are not lost.
pub fn sum_values(values: &[NetValue]) -> NetValue {
    let mut lead: Option<usize> = None;
    for (k, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        match lead {
            Some(l) if values[l].log_abs >= v.log_abs => {}
            _ => lead = Some(k),
        }
    }
    let Some(lead) = lead else {
        return NetValue::ZERO;
    };
    let top = values[lead];
    let lead_sign = f64::from(top.sign);
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut mass = 1.0f64;
    for (k, v) in values.iter().enumerate() {
        if k == lead || v.is_zero() {
            continue;
        }
        let t = f64::from(v.sign) * (v.log_abs - top.log_abs).exp();
        mass += t.abs();
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
    }
    let rest = (sum + comp) * lead_sign;
    // total = lead_sign * |top| * (1 + rest)
    let scaled = 1.0 + rest;
    if scaled.abs() <= CANCEL_TOL * mass {
        return NetValue::ZERO;
    }
    if scaled > 0.0 {
        NetValue::from_log(top.sign, top.log_abs + rest.ln_1p())
    } else {
        NetValue::from_log(-top.sign, top.log_abs + (-scaled).ln())
    }
}
