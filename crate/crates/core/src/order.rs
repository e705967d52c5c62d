//! Valuation, the q-positivity order, absolute values, roots and scalar balls.
//!
//! Every decision here is exact. A simplified net is q-positive iff its
//! leading coefficient is positive. A full net is grouped by `ε`-exponent;
//! each group is a generalized polynomial `g_k(ι)`, and the net is q-positive
//! iff for every `ι > 0` the first nonvanishing `g_k(ι)` is positive. After the
//! substitution `ι = t^D` the groups become polynomials in `t`, so the test
//! reduces to real-root isolation plus exact sign evaluation of later groups
//! at the (algebraic) touching zeros of the first nonzero group.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::net::{ExactNet, Model, Term};
use crate::poly::{sign, Poly, RealRoot, RootLoc};
use crate::rational::{approx_root, exact_root, fmt_rat, lcm_denominators, Rational};
use crate::sampled::SampledNet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(Rational),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Valuation::Finite(q) => Some(q),
            Valuation::Infinite => None,
        }
    }

    /// `exp(-v)`, the sharp norm attached to this valuation.
    pub fn norm(&self) -> f64 {
        match self {
            Valuation::Finite(q) => (-crate::rational::to_f64(q)).exp(),
            Valuation::Infinite => 0.0,
        }
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(q) => f.write_str(&fmt_rat(q)),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderVerdict {
    Positive,
    NotPositive,
    Unknown,
}

impl fmt::Display for OrderVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderVerdict::Positive => "positive",
            OrderVerdict::NotPositive => "not-positive",
            OrderVerdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparison {
    Leq,
    Geq,
    Eq,
    Incomparable,
    Unknown,
}

impl Comparison {
    /// Combines the verdicts for `y - x >= 0` and `x - y >= 0`.
    pub fn from_verdicts(y_minus_x: OrderVerdict, x_minus_y: OrderVerdict) -> Self {
        use OrderVerdict::*;
        match (y_minus_x, x_minus_y) {
            (Positive, Positive) => Comparison::Eq,
            (Positive, NotPositive) => Comparison::Leq,
            (NotPositive, Positive) => Comparison::Geq,
            (NotPositive, NotPositive) => Comparison::Incomparable,
            _ => Comparison::Unknown,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Leq => "leq",
            Comparison::Geq => "geq",
            Comparison::Eq => "eq",
            Comparison::Incomparable => "incomparable",
            Comparison::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Membership {
    Member,
    NotMember,
    Unknown,
}

impl Membership {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Membership::Member
        } else {
            Membership::NotMember
        }
    }

    /// Conjunction; `NotMember` dominates `Unknown`.
    pub fn and(self, other: Membership) -> Membership {
        use Membership::*;
        match (self, other) {
            (NotMember, _) | (_, NotMember) => NotMember,
            (Unknown, _) | (_, Unknown) => Unknown,
            _ => Member,
        }
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Member => "member",
            Membership::NotMember => "not-member",
            Membership::Unknown => "unknown",
        })
    }
}

/// The closed ball `V_r[0]` (scalar balls are the only variant at this level).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BallSpec {
    pub model: Model,
    pub radius_exp: Rational,
}

impl BallSpec {
    pub fn new(model: Model, radius_exp: Rational) -> Self {
        BallSpec { model, radius_exp }
    }
}

/// Converts groups `Σ c·ι^b` to polynomials in `t` under `ι = t^D`, each
/// divided by its lowest power of `t` (a positive factor on `t > 0`).
fn group_polys(groups: &[Vec<(Rational, Rational)>]) -> Vec<Poly> {
    let d = lcm_denominators(groups.iter().flatten().map(|(_, b)| b));
    let d = Rational::from_integer(d);
    groups
        .iter()
        .map(|g| {
            let exps: Vec<BigInt> = g.iter().map(|(_, b)| (b * &d).to_integer()).collect();
            let min = exps.iter().min().cloned().unwrap_or_default();
            let shifted: Vec<usize> = exps.iter().map(|e| (e - &min).to_usize().expect("exponent span")).collect();
            let step = shifted.iter().fold(0usize, |acc, &e| gcd(acc, e)).max(1);
            let mut coeffs = vec![Rational::zero(); shifted.iter().max().map_or(1, |m| m / step + 1)];
            for ((c, _), e) in g.iter().zip(&shifted) {
                coeffs[e / step] += c;
            }
            Poly::from_coeffs(coeffs)
        })
        .collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Compressing by `step` differs per group, so group polynomials that must
/// be evaluated at a common point are built without compression.
fn group_polys_common(groups: &[Vec<(Rational, Rational)>]) -> Vec<Poly> {
    let d = Rational::from_integer(lcm_denominators(groups.iter().flatten().map(|(_, b)| b)));
    groups
        .iter()
        .map(|g| {
            let exps: Vec<BigInt> = g.iter().map(|(_, b)| (b * &d).to_integer()).collect();
            let min = exps.iter().min().cloned().unwrap_or_default();
            let mut coeffs = Vec::new();
            for ((c, _), e) in g.iter().zip(&exps) {
                let k = (e - &min).to_usize().expect("exponent span");
                if coeffs.len() <= k {
                    coeffs.resize(k + 1, Rational::zero());
                }
                coeffs[k] += c;
            }
            Poly::from_coeffs(coeffs)
        })
        .collect()
}

/// Sample points of `(0, ∞)` hitting every sign region of `p`, and its
/// positive roots.
fn positive_profile(p: &Poly) -> (Vec<RealRoot>, Vec<Rational>) {
    let mut roots = p.positive_roots();
    for r in &mut roots {
        while matches!(&r.loc, RootLoc::Open(lo, _) if lo.is_zero()) {
            r.bisect();
        }
    }
    let mut marks: Vec<Rational> = vec![Rational::zero()];
    for r in &roots {
        match &r.loc {
            RootLoc::Exact(x) => marks.push(x.clone()),
            RootLoc::Open(lo, hi) => {
                marks.push(lo.clone());
                marks.push(hi.clone());
            }
        }
    }
    let top = if p.is_constant() { Rational::one() } else { p.root_bound() };
    marks.push(top.clone().max(marks.last().unwrap().clone() + Rational::one()));
    let two = Rational::from_integer(BigInt::from(2));
    let mut pts = Vec::new();
    for w in marks.windows(2) {
        pts.push((&w[0] + &w[1]) / &two);
        pts.push(w[1].clone());
    }
    (roots, pts)
}

/// Exact lexicographic sign test on `(0, ∞)`: true iff for every `ι > 0`
/// the first nonvanishing group is positive (or all vanish).
pub fn lex_nonneg(groups: &[Vec<(Rational, Rational)>]) -> bool {
    let polys = group_polys(groups);
    let Some(first) = polys.iter().position(|p| !p.is_zero()) else {
        return true;
    };
    let (roots, samples) = positive_profile(&polys[first]);
    if samples.iter().any(|x| polys[first].sign_at(x) < 0) {
        return false;
    }
    if roots.is_empty() {
        return true;
    }
    // touching zeros: evaluate later groups there, in a common variable
    let common = group_polys_common(&groups[first..]);
    let base = {
        let sf = common[0].square_free();
        let mut r = sf.positive_roots();
        for z in &mut r {
            while matches!(&z.loc, RootLoc::Open(lo, _) if lo.is_zero()) {
                z.bisect();
            }
        }
        r
    };
    base.iter().all(|z| {
        for q in &common[1..] {
            match z.sign_of(q) {
                0 => continue,
                s => return s > 0,
            }
        }
        true
    })
}

/// True iff `Σ c·ι^b > 0` for every `ι > 0`.
pub fn strictly_positive_profile(coeffs: &[(Rational, Rational)]) -> bool {
    let p = &group_polys(&[coeffs.to_vec()])[0];
    !p.is_zero() && p.positive_roots().is_empty() && p.sign_at(&Rational::one()) > 0
}

/// q-positivity of an exact net; never `Unknown`.
pub fn q_positivity(x: &ExactNet) -> OrderVerdict {
    let ok = match x.model() {
        Model::Simplified => x.leading().is_none_or(|t| t.coeff.is_positive()),
        Model::Full => {
            let groups: Vec<_> = x.eps_groups().into_iter().map(|(_, g)| g).collect();
            lex_nonneg(&groups)
        }
    };
    if ok {
        OrderVerdict::Positive
    } else {
        OrderVerdict::NotPositive
    }
}

pub fn is_q_positive(x: &ExactNet) -> bool {
    q_positivity(x) == OrderVerdict::Positive
}

pub fn order_compare(x: &ExactNet, y: &ExactNet) -> Result<Comparison> {
    let d = y.try_sub(x)?;
    Ok(Comparison::from_verdicts(q_positivity(&d), q_positivity(&-&d)))
}

/// Either an exact net or a sampled evaluator, for operations whose result is
/// not always exactly representable.
#[derive(Clone)]
pub enum NetOrSampled {
    Exact(ExactNet),
    Sampled(SampledNet),
}

impl NetOrSampled {
    pub fn exact(&self) -> Option<&ExactNet> {
        match self {
            NetOrSampled::Exact(x) => Some(x),
            NetOrSampled::Sampled(_) => None,
        }
    }

    pub fn to_sampled(&self) -> SampledNet {
        match self {
            NetOrSampled::Exact(x) => SampledNet::from_exact(x),
            NetOrSampled::Sampled(s) => s.clone(),
        }
    }
}

impl fmt::Debug for NetOrSampled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetOrSampled::Exact(x) => write!(f, "Exact({x})"),
            NetOrSampled::Sampled(s) => write!(f, "Sampled({})", s.label()),
        }
    }
}

/// `|x|` under eventual-sign identification.
pub fn abs(x: &ExactNet) -> NetOrSampled {
    if is_q_positive(x) {
        NetOrSampled::Exact(x.clone())
    } else {
        let neg = -x;
        if is_q_positive(&neg) {
            NetOrSampled::Exact(neg)
        } else {
            NetOrSampled::Sampled(SampledNet::abs_of(x))
        }
    }
}

/// Exact `|x|` for simplified nets.
pub fn abs_simplified(x: &ExactNet) -> ExactNet {
    match x.leading() {
        Some(t) if t.coeff.is_negative() => -x,
        _ => x.clone(),
    }
}

/// Result of a `p`-th root: exact when single-term, with a flag telling
/// whether the coefficient root is exact or a 128-bit rational approximation.
#[derive(Clone, Debug)]
pub enum Root {
    Exact { net: ExactNet, exact_coeff: bool },
    Sampled(SampledNet),
}

/// The q-positive `p`-th root.
pub fn proot(x: &ExactNet, p: u32) -> Result<Root> {
    if p == 0 {
        return Err(Error::SideCondition("root order must be positive".into()));
    }
    if !is_q_positive(x) {
        return Err(Error::NotQPositive(x.to_string()));
    }
    let pr = Rational::from_integer(BigInt::from(p));
    match x.terms() {
        [] => Ok(Root::Exact {
            net: x.clone(),
            exact_coeff: true,
        }),
        [t] => {
            let (c, exact_coeff) = match exact_root(&t.coeff, p) {
                Some(c) => (c, true),
                None => (approx_root(&t.coeff, p, 128), false),
            };
            let term = Term::new(c, &t.eps / &pr, &t.iota / &pr);
            Ok(Root::Exact {
                net: ExactNet::normalize(x.model(), vec![term]),
                exact_coeff,
            })
        }
        _ => Ok(Root::Sampled(SampledNet::proot_of(x, p))),
    }
}

/// `ε ↦ max(0, x(ε))`, a pointwise nonnegative representative of a
/// q-positive net.
pub fn nonneg_representative(x: &ExactNet) -> Result<SampledNet> {
    if !is_q_positive(x) {
        return Err(Error::NotQPositive(x.to_string()));
    }
    Ok(SampledNet::clamp_of(x))
}

/// Exact membership in `V_r[0]`: `|x| <= α_r` in the q-order, i.e. both
/// `α_r - x` and `α_r + x` are q-positive.
pub fn scalar_ball_member(x: &ExactNet, ball: &BallSpec) -> Result<Membership> {
    if x.model() != ball.model {
        return Err(Error::ModelMismatch {
            left: x.model(),
            right: ball.model,
        });
    }
    Ok(Membership::from_bool(within_alpha(x, &ball.radius_exp)))
}

pub(crate) fn within_alpha(x: &ExactNet, r: &Rational) -> bool {
    if x.is_zero() {
        return true;
    }
    match x.model() {
        Model::Simplified => {
            let t = x.leading().unwrap();
            match t.eps.cmp(r) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => {
                    let c = t.coeff.abs();
                    match c.cmp(&Rational::one()) {
                        Ordering::Less => true,
                        Ordering::Greater => false,
                        // |c| = 1: the sign of the next term decides
                        Ordering::Equal => x
                            .terms()
                            .get(1)
                            .is_none_or(|n| sign(&n.coeff) != sign(&t.coeff)),
                    }
                }
            }
        }
        Model::Full => {
            let a = ExactNet::alpha(r.clone(), Model::Full);
            is_q_positive(&(&a - x)) && is_q_positive(&(&a + x))
        }
    }
}

pub fn sharp_dist(x: &ExactNet, y: &ExactNet) -> Result<f64> {
    for n in [x, y] {
        if n.model() != Model::Simplified {
            return Err(Error::WrongModel {
                expected: Model::Simplified,
                got: n.model(),
            });
        }
    }
    Ok(x.try_sub(y)?.valuation().norm())
}

pub fn sharp_norm(x: &ExactNet) -> Result<f64> {
    sharp_dist(x, &ExactNet::zero(Model::Simplified))
}
