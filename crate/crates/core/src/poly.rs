//! Univariate polynomials over the rationals with exact real-root machinery.
//!
//! Root isolation uses Sturm sequences on the square-free part; isolating
//! intervals are open with rational endpoints at which the defining
//! polynomial does not vanish. On top of that sit exact sign queries at real
//! algebraic points, exact nonnegativity on closed intervals, and certified
//! enclosures of `sup |p|` over a compact interval.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{fmt_rat, to_f64, Rational};

/// Dense coefficient vector, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign(&self.eval(x))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Poly {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Poly {
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / Rational::from_integer(BigInt::from(k + 1))),
        );
        Self::from_coeffs(coeffs)
    }

    pub fn integrate(&self, a: &Rational, b: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.lead().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &lead;
            for (i, c) in d.coeffs.iter().enumerate() {
                let t = &q * c;
                rem[k - dd + i] -= t;
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Square-free part: same distinct roots, all simple.
    pub fn square_free(&self) -> Poly {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            self.monic()
        } else {
            self.div_rem(&g).0.monic()
        }
    }

    /// Sturm sequence of a square-free polynomial.
    fn sturm(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            // rescale by a positive constant to keep coefficients small
            let l = r.lead().unwrap().abs();
            seq.push((-r).scale(&l.recip()));
        }
        seq
    }

    /// Largest absolute value of any real root is below this bound.
    pub fn root_bound(&self) -> Rational {
        let lead = self.lead().expect("root bound of the zero polynomial").abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        m + Rational::one()
    }

    /// Isolates every distinct real root, in increasing order.
    pub fn real_roots(&self) -> Vec<RealRoot> {
        if self.is_constant() {
            return Vec::new();
        }
        let sf = self.square_free();
        let b = sf.root_bound();
        isolate(&sf, &(-b.clone()), &b)
    }

    /// Distinct real roots in the closed interval `[a, b]`.
    pub fn roots_in(&self, a: &Rational, b: &Rational) -> Vec<RealRoot> {
        let mut out = Vec::new();
        for mut r in self.real_roots() {
            if r.split_at(a) == Ordering::Less || r.split_at(b) == Ordering::Greater {
                continue;
            }
            out.push(r);
        }
        out
    }

    /// Distinct roots in the open half-line `(0, ∞)`.
    pub fn positive_roots(&self) -> Vec<RealRoot> {
        if sign_changes(&self.coeffs) == 0 {
            return Vec::new();
        }
        let zero = Rational::zero();
        let mut out = Vec::new();
        for mut r in self.real_roots() {
            if r.split_at(&zero) == Ordering::Greater {
                out.push(r);
            }
        }
        out
    }

    /// Exact test of `p(x) >= 0` for all `x` in `[a, b]`.
    pub fn is_nonneg_on(&self, a: &Rational, b: &Rational) -> bool {
        self.sample_points(a, b).iter().all(|x| self.sign_at(x) >= 0)
    }

    /// Rational points hitting every sign region of `p` on `[a, b]`.
    fn sample_points(&self, a: &Rational, b: &Rational) -> Vec<Rational> {
        let mut marks = vec![a.clone()];
        for r in self.roots_in(a, b) {
            match r.loc {
                RootLoc::Exact(x) => marks.push(x),
                RootLoc::Open(lo, hi) => {
                    marks.push(lo);
                    marks.push(hi);
                }
            }
        }
        marks.push(b.clone());
        let two = Rational::from_integer(BigInt::from(2));
        let mut pts = Vec::with_capacity(marks.len() * 2);
        for w in marks.windows(2) {
            pts.push(w[0].clone());
            pts.push((&w[0] + &w[1]) / &two);
        }
        pts.push(b.clone());
        pts
    }

    /// Exact comparison of `max_{[a,b]} |p|` with `c >= 0`.
    pub fn sup_abs_cmp(&self, a: &Rational, b: &Rational, c: &Rational) -> Ordering {
        let cp = Poly::constant(c.clone());
        let upper = &cp - self;
        let lower = &cp + self;
        if !upper.is_nonneg_on(a, b) || !lower.is_nonneg_on(a, b) {
            return Ordering::Greater;
        }
        let touches = |q: &Poly| q.is_zero() || !q.roots_in(a, b).is_empty();
        if touches(&upper) || touches(&lower) {
            Ordering::Equal
        } else {
            Ordering::Less
        }
    }

    /// Points of `[a, b]` where `|p| = c`, paired with the sign of `p` there.
    /// Returns `None` when `|p| = c` on the whole interval.
    pub fn level_points(&self, a: &Rational, b: &Rational, c: &Rational) -> Option<Vec<(RealRoot, i8)>> {
        let cp = Poly::constant(c.clone());
        let mut out = Vec::new();
        for (q, s) in [(&cp - self, 1i8), (&cp + self, -1i8)] {
            if q.is_zero() {
                return None;
            }
            if c.is_zero() && s < 0 {
                break;
            }
            out.extend(q.roots_in(a, b).into_iter().map(|r| (r, s)));
        }
        Some(out)
    }

    /// Certified enclosure of `max_{[a,b]} |p|` with width at most `tol`.
    pub fn sup_abs(&self, a: &Rational, b: &Rational, tol: &Rational) -> SupEnclosure {
        let mut lo = self.eval(a).abs().max(self.eval(b).abs());
        let mut hi = lo.clone();
        let d = self.derivative();
        if !d.is_constant() {
            for mut r in d.roots_in(a, b) {
                let (l, h) = r.value_enclosure(self, tol);
                let (l, h) = abs_enclosure(&l, &h);
                lo = lo.max(l);
                hi = hi.max(h);
            }
        }
        SupEnclosure { lo, hi }
    }

    /// Rigorous enclosure of `p` over `[lo, hi]` by a Taylor form at the midpoint.
    pub fn range_on(&self, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
        let two = Rational::from_integer(BigInt::from(2));
        let mid = (lo + hi) / &two;
        let rad = (hi - lo) / &two;
        let center = self.eval(&mid);
        let mut spread = Rational::zero();
        let mut deriv = self.derivative();
        let mut fact = Rational::one();
        let mut rpow = rad.clone();
        let mut k = 1u32;
        while !deriv.is_zero() {
            fact *= Rational::from_integer(BigInt::from(k));
            spread += deriv.eval(&mid).abs() / &fact * &rpow;
            deriv = deriv.derivative();
            rpow *= &rad;
            k += 1;
        }
        (&center - &spread, center + spread)
    }
}

fn abs_enclosure(l: &Rational, h: &Rational) -> (Rational, Rational) {
    if l.is_negative() && h.is_positive() {
        (Rational::zero(), l.abs().max(h.abs()))
    } else {
        let (a, b) = (l.abs(), h.abs());
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

pub fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(coeffs: &[Rational]) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for c in coeffs {
        let s = sign(c);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn variations(seq: &[Poly], x: &Rational) -> usize {
    let signs: Vec<Rational> = seq.iter().map(|p| p.eval(x)).collect();
    sign_changes(&signs)
}

/// Enclosure `[lo, hi]` of a supremum.
#[derive(Debug, Clone, PartialEq)]
pub struct SupEnclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl SupEnclosure {
    pub fn mid_f64(&self) -> f64 {
        (to_f64(&self.lo) + to_f64(&self.hi)) / 2.0
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Location of a single simple root of a square-free polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLoc {
    Exact(Rational),
    /// Open interval containing exactly one root; the polynomial is nonzero
    /// at both endpoints.
    Open(Rational, Rational),
}

/// A real algebraic number given by a square-free defining polynomial and an
/// isolating location.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRoot {
    pub poly: Poly,
    pub loc: RootLoc,
}

impl RealRoot {
    pub fn as_rational(&self) -> Option<&Rational> {
        match &self.loc {
            RootLoc::Exact(x) => Some(x),
            RootLoc::Open(..) => None,
        }
    }

    pub fn approx(&self) -> f64 {
        match &self.loc {
            RootLoc::Exact(x) => to_f64(x),
            RootLoc::Open(lo, hi) => (to_f64(lo) + to_f64(hi)) / 2.0,
        }
    }

    /// Halves the isolating interval (or pins the root exactly).
    pub fn bisect(&mut self) {
        let RootLoc::Open(lo, hi) = &self.loc else {
            return;
        };
        let two = Rational::from_integer(BigInt::from(2));
        let mid = (lo + hi) / two;
        let sm = self.poly.sign_at(&mid);
        if sm == 0 {
            self.loc = RootLoc::Exact(mid);
        } else if sm != self.poly.sign_at(lo) {
            self.loc = RootLoc::Open(lo.clone(), mid);
        } else {
            self.loc = RootLoc::Open(mid, hi.clone());
        }
    }

    /// Positions the root relative to `x`, refining the interval so that it
    /// no longer straddles `x`.
    pub fn split_at(&mut self, x: &Rational) -> Ordering {
        let RootLoc::Open(lo, hi) = &self.loc else {
            let RootLoc::Exact(r) = &self.loc else { unreachable!() };
            return r.cmp(x);
        };
        if x <= lo {
            return Ordering::Greater;
        }
        if x >= hi {
            return Ordering::Less;
        }
        let sx = self.poly.sign_at(x);
        if sx == 0 {
            self.loc = RootLoc::Exact(x.clone());
            return Ordering::Equal;
        }
        let (lo, hi) = (lo.clone(), hi.clone());
        if sx != self.poly.sign_at(&lo) {
            self.loc = RootLoc::Open(lo, x.clone());
            Ordering::Less
        } else {
            self.loc = RootLoc::Open(x.clone(), hi);
            Ordering::Greater
        }
    }

    /// Exact sign of `q` at this root.
    pub fn sign_of(&self, q: &Poly) -> i8 {
        if q.is_zero() {
            return 0;
        }
        if let RootLoc::Exact(x) = &self.loc {
            return q.sign_at(x);
        }
        let g = self.poly.gcd(q);
        let mut me = self.clone();
        if !g.is_constant() {
            // roots of g are roots of the defining polynomial; at most one
            // lies in the isolating interval
            let RootLoc::Open(lo, hi) = &me.loc else { unreachable!() };
            let seq = g.sturm();
            if variations(&seq, lo) != variations(&seq, hi) {
                return 0;
            }
        }
        let qs = q.square_free();
        let seq = qs.sturm();
        loop {
            match &me.loc {
                RootLoc::Exact(x) => return q.sign_at(x),
                RootLoc::Open(lo, hi) => {
                    if qs.sign_at(lo) != 0
                        && qs.sign_at(hi) != 0
                        && variations(&seq, lo) == variations(&seq, hi)
                    {
                        let two = Rational::from_integer(BigInt::from(2));
                        return q.sign_at(&((lo + hi) / two));
                    }
                }
            }
            me.bisect();
        }
    }

    /// Enclosure of `p(root)` with width at most `tol`.
    pub fn value_enclosure(&mut self, p: &Poly, tol: &Rational) -> (Rational, Rational) {
        loop {
            match &self.loc {
                RootLoc::Exact(x) => {
                    let v = p.eval(x);
                    return (v.clone(), v);
                }
                RootLoc::Open(lo, hi) => {
                    let (l, h) = p.range_on(lo, hi);
                    if &h - &l <= *tol {
                        return (l, h);
                    }
                }
            }
            self.bisect();
        }
    }
}

/// Isolates the roots of square-free `p` in `(a, b)`; `p(a)`, `p(b)` nonzero.
fn isolate(p: &Poly, a: &Rational, b: &Rational) -> Vec<RealRoot> {
    let seq = p.sturm();
    let mut out = Vec::new();
    let mut stack = vec![(a.clone(), b.clone(), variations(&seq, a), variations(&seq, b))];
    let two = Rational::from_integer(BigInt::from(2));
    while let Some((lo, hi, vlo, vhi)) = stack.pop() {
        let n = vlo - vhi;
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(RealRoot {
                poly: p.clone(),
                loc: RootLoc::Open(lo, hi),
            });
            continue;
        }
        let mut mid = (&lo + &hi) / &two;
        let mut k = 3i64;
        // nudge the split point off a root
        while p.sign_at(&mid).is_zero_sign() {
            mid = &lo + (&hi - &lo) * Rational::new(BigInt::one(), BigInt::from(k));
            k += 1;
        }
        let vm = variations(&seq, &mid);
        stack.push((mid.clone(), hi, vm, vhi));
        stack.push((lo, mid, vlo, vm));
    }
    out.sort_by(|x, y| {
        let (RootLoc::Open(a, _), RootLoc::Open(b, _)) = (&x.loc, &y.loc) else {
            unreachable!()
        };
        a.cmp(b)
    });
    out
}

trait ZeroSign {
    fn is_zero_sign(self) -> bool;
}

impl ZeroSign for i8 {
    fn is_zero_sign(self) -> bool {
        self == 0
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly> for Poly {
            type Output = Poly;

            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}*x^{}", fmt_rat(c), k)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn calculus() {
        let q = p(&[0, 0, 1]); // x^2
        assert_eq!(q.derivative(), p(&[0, 2]));
        assert_eq!(q.nth_derivative(3), Poly::zero());
        assert_eq!(p(&[0, 1]).integrate(&int(0), &int(1)), rat(1, 2));
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[1, 1]); // x + 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        let sq = &a * &a;
        assert_eq!(sq.square_free(), a);
        assert_eq!(a.gcd(&p(&[-1, 1])), p(&[-1, 1]));
    }

    #[test]
    fn isolates_simple_and_repeated_roots() {
        // (x - 1)^2 (x + 2)(x^2 - 2)
        let q = &(&p(&[1, -2, 1]) * &p(&[2, 1])) * &p(&[-2, 0, 1]);
        let roots = q.real_roots();
        assert_eq!(roots.len(), 4);
        let approx: Vec<f64> = roots.iter().map(|r| r.approx()).collect();
        let expected = [-2.0, -(2f64.sqrt()), 1.0, 2f64.sqrt()];
        for (r, e) in roots.iter().zip(expected) {
            let mut r = r.clone();
            for _ in 0..60 {
                r.bisect();
            }
            assert!((r.approx() - e).abs() < 1e-12, "{approx:?}");
        }
    }

    #[test]
    fn sign_at_algebraic_points() {
        let q = p(&[-2, 0, 1]); // roots ±sqrt 2
        let roots = q.real_roots();
        let sqrt2 = &roots[1];
        assert_eq!(sqrt2.sign_of(&p(&[-1, 1])), 1); // sqrt2 - 1 > 0
        assert_eq!(sqrt2.sign_of(&p(&[-3, 2])), -1); // 2 sqrt2 - 3 < 0
        assert_eq!(sqrt2.sign_of(&p(&[-4, 0, 2])), 0); // 2x^2 - 4
        assert_eq!(sqrt2.sign_of(&p(&[-2, 0, 0, 0, 1])), 1); // x^4 - 2 = 2 > 0
    }

    #[test]
    fn nonnegativity_on_intervals() {
        let q = p(&[1, -2, 1]); // (x-1)^2
        assert!(q.is_nonneg_on(&int(-5), &int(5)));
        let r = p(&[0, -1, 1]); // x^2 - x, negative on (0,1)
        assert!(!r.is_nonneg_on(&int(-1), &int(2)));
        assert!(r.is_nonneg_on(&int(1), &int(3)));
        assert!(r.is_nonneg_on(&int(-3), &int(0)));
        // touching zero at an endpoint
        assert!(p(&[0, 1]).is_nonneg_on(&int(0), &int(1)));
        assert!(!p(&[0, -1]).is_nonneg_on(&int(0), &int(1)));
    }

    #[test]
    fn sup_comparisons() {
        let q = p(&[0, 0, 1]); // x^2 on [-3/2, 3/2]
        let (a, b) = (rat(-3, 2), rat(3, 2));
        assert_eq!(q.sup_abs_cmp(&a, &b, &rat(9, 4)), Ordering::Equal);
        assert_eq!(q.sup_abs_cmp(&a, &b, &int(3)), Ordering::Less);
        assert_eq!(q.sup_abs_cmp(&a, &b, &int(2)), Ordering::Greater);
        let e = q.sup_abs(&a, &b, &rat(1, 1_000_000_000_000));
        assert_eq!(e.lo, rat(9, 4));
        // interior maximum at an irrational point: x - x^3 on [0, 1]
        let c = p(&[0, 1, 0, -1]);
        let e = c.sup_abs(&int(0), &int(1), &rat(1, 1_000_000_000_000));
        let exact = 2.0 / (3.0 * 3f64.sqrt());
        assert!(to_f64(&e.lo) <= exact + 1e-15 && to_f64(&e.hi) >= exact - 1e-15);
        assert!(to_f64(&e.width()) <= 1e-12);
    }

    #[test]
    fn level_points_found() {
        let q = p(&[0, 1]); // x on [-1, 1], |x| = 1 at both ends
        let pts = q.level_points(&int(-1), &int(1), &int(1)).unwrap();
        let mut found: Vec<(f64, i8)> = pts.iter().map(|(r, s)| (r.approx(), *s)).collect();
        found.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        assert_eq!(found, vec![(-1.0, -1), (1.0, 1)]);
        assert!(Poly::one().level_points(&int(0), &int(1), &int(1)).is_none());
    }

    #[test]
    fn positive_roots_only() {
        let q = p(&[-1, 0, 1]);
        let r = q.positive_roots();
        assert_eq!(r.len(), 1);
        let mut one = r[0].clone();
        while one.as_rational().is_none() {
            one.bisect();
        }
        assert_eq!(one.as_rational(), Some(&int(1)));
        assert!(p(&[1, 2, 3]).positive_roots().is_empty());
    }

    #[test]
    fn display_sparse() {
        assert_eq!(p(&[0, 2]).to_string(), "2*x^1");
        assert_eq!(Poly::from_coeffs(vec![int(1), int(0), rat(-3, 2)]).to_string(), "1*x^0 + -3/2*x^2");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
