//! Black-box nets on the dyadic grid `ε_j = 2^-j` and the semi-decision
//! procedures built on them.
//!
//! The oracle refutes but never certifies: a witness shows that a bound fails
//! at a concrete tail point, while `NotFalsified`/`Consistent` only say that
//! no such point was found. Searches are restricted to the tail window, the
//! part of the grid taken to represent "sufficiently small ε".

use std::fmt;
use std::sync::Arc;

use astro_float::BigFloat;
use num_traits::Zero;
use rayon::prelude::*;

use crate::hp::{to_value, Hp, FAST_BITS, FULL_BITS};
use crate::net::{ExactNet, Model};
use crate::rational::{approx_root, exact_root, fmt_rat, int, ln_abs, to_f64, Rational};
use crate::value::{sum_values, NetValue};

const LN_PI: f64 = 1.1447298858494002;

/// A value of the diameter variable `ι`: a rational, or a rational over `π`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Iota {
    Value(Rational),
    OverPi(Rational),
}

impl Iota {
    pub fn ln(&self) -> f64 {
        match self {
            Iota::Value(q) => ln_abs(q),
            Iota::OverPi(q) => ln_abs(q) - LN_PI,
        }
    }

    pub fn hp(&self, hp: &Hp) -> BigFloat {
        match self {
            Iota::Value(q) => hp.rational(q),
            Iota::OverPi(q) => hp.div(&hp.rational(q), &hp.pi()),
        }
    }

    pub fn one() -> Self {
        Iota::Value(int(1))
    }
}

impl fmt::Display for Iota {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Iota::Value(q) => f.write_str(&fmt_rat(q)),
            Iota::OverPi(q) if q.is_integer() => write!(f, "{}/pi", fmt_rat(q)),
            Iota::OverPi(q) => write!(f, "({})/pi", fmt_rat(q)),
        }
    }
}

/// A grid point: `ε = 2^-j`, plus `ι` for full-model nets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SamplePoint {
    pub j: u32,
    pub iota: Option<Iota>,
}

impl SamplePoint {
    pub fn ln_eps(&self) -> f64 {
        -f64::from(self.j) * std::f64::consts::LN_2
    }

    pub fn ln_iota(&self) -> Option<f64> {
        self.iota.as_ref().map(Iota::ln)
    }
}

impl fmt::Display for SamplePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eps=2^-{}", self.j)?;
        if let Some(i) = &self.iota {
            write!(f, " iota={i}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// Grid scans: `f64` log domain for exact nets, 512 bits otherwise.
    Fast,
    /// Witness re-checks: 1024-bit evaluation throughout.
    Full,
}

impl Precision {
    fn bits(self) -> usize {
        match self {
            Precision::Fast => FAST_BITS,
            Precision::Full => FULL_BITS,
        }
    }
}

/// Exact leading data carried by producers that know it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadData {
    pub coeff: Rational,
    pub coeff_exact: bool,
    pub eps_exp: Rational,
    pub iota_exp: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Log,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Log => "log",
        }
    }
}

/// Closed-form scalar expression in `ε` and `ι` with transcendental functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SymExpr {
    Const(Rational),
    EpsPow(Rational),
    IotaPow(Rational),
    Sum(Vec<SymExpr>),
    Product(Vec<SymExpr>),
    Neg(Box<SymExpr>),
    Apply(Func, Box<SymExpr>),
}

impl SymExpr {
    pub fn uses_iota(&self) -> bool {
        match self {
            SymExpr::Const(_) | SymExpr::EpsPow(_) => false,
            SymExpr::IotaPow(b) => !b.is_zero(),
            SymExpr::Sum(v) | SymExpr::Product(v) => v.iter().any(SymExpr::uses_iota),
            SymExpr::Neg(e) | SymExpr::Apply(_, e) => e.uses_iota(),
        }
    }

    pub fn eval_hp(&self, hp: &Hp, j: u32, iota: Option<&BigFloat>) -> BigFloat {
        match self {
            SymExpr::Const(c) => hp.rational(c),
            SymExpr::EpsPow(q) => hp.dyadic_pow(j, q),
            SymExpr::IotaPow(b) => match iota {
                Some(i) => hp.pow(i, b),
                None => hp.rational(&int(1)),
            },
            SymExpr::Sum(v) => {
                let mut acc = hp.rational(&Rational::zero());
                for e in v {
                    acc = hp.add(&acc, &e.eval_hp(hp, j, iota));
                }
                acc
            }
            SymExpr::Product(v) => {
                let mut acc = hp.rational(&int(1));
                for e in v {
                    acc = hp.mul(&acc, &e.eval_hp(hp, j, iota));
                }
                acc
            }
            SymExpr::Neg(e) => e.eval_hp(hp, j, iota).neg(),
            SymExpr::Apply(func, e) => {
                let a = e.eval_hp(hp, j, iota);
                match func {
                    Func::Sin => hp.sin(&a),
                    Func::Cos => hp.cos(&a),
                    Func::Exp => hp.exp(&a),
                    Func::Log => hp.ln(&a),
                }
            }
        }
    }
}

type EvalFn = dyn Fn(&SamplePoint, Precision) -> NetValue + Send + Sync;

/// A net known only through its values on grid points.
#[derive(Clone)]
pub struct SampledNet {
    f: Arc<EvalFn>,
    full: bool,
    lead: Option<LeadData>,
    label: String,
}

impl fmt::Debug for SampledNet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SampledNet")
            .field("label", &self.label)
            .field("full", &self.full)
            .field("lead", &self.lead)
            .finish()
    }
}

fn exact_hp(x: &ExactNet, pt: &SamplePoint, bits: usize) -> NetValue {
    let hp = Hp::new(bits);
    let iota = pt.iota.as_ref().map(|i| i.hp(&hp));
    let mut acc = hp.rational(&Rational::zero());
    for t in x.terms() {
        let mut v = hp.mul(&hp.rational(&t.coeff), &hp.dyadic_pow(pt.j, &t.eps));
        if let (Some(i), false) = (&iota, t.iota.is_zero()) {
            v = hp.mul(&v, &hp.pow(i, &t.iota));
        }
        acc = hp.add(&acc, &v);
    }
    to_value(&acc)
}

fn exact_value(x: &ExactNet, pt: &SamplePoint, prec: Precision) -> NetValue {
    match prec {
        Precision::Fast => {
            let ln_iota = pt.ln_iota().or(if x.model() == Model::Full { Some(0.0) } else { None });
            x.eval_log(pt.ln_eps(), ln_iota).expect("iota supplied")
        }
        Precision::Full => {
            let pt = match (x.model(), &pt.iota) {
                (Model::Full, None) => SamplePoint {
                    j: pt.j,
                    iota: Some(Iota::one()),
                },
                _ => pt.clone(),
            };
            exact_hp(x, &pt, prec.bits())
        }
    }
}

impl SampledNet {
    pub fn new<F>(label: impl Into<String>, full: bool, f: F) -> Self
    where
        F: Fn(&SamplePoint, Precision) -> NetValue + Send + Sync + 'static,
    {
        SampledNet {
            f: Arc::new(f),
            full,
            lead: None,
            label: label.into(),
        }
    }

    pub fn with_lead(mut self, lead: LeadData) -> Self {
        self.lead = Some(lead);
        self
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn lead(&self) -> Option<&LeadData> {
        self.lead.as_ref()
    }

    pub fn eval(&self, pt: &SamplePoint, prec: Precision) -> NetValue {
        (self.f)(pt, prec)
    }

    pub fn zero(full: bool) -> Self {
        Self::new("0", full, |_, _| NetValue::ZERO)
    }

    pub fn from_exact(x: &ExactNet) -> Self {
        let net = x.clone();
        let lead = x.leading().map(|t| LeadData {
            coeff: t.coeff.clone(),
            coeff_exact: true,
            eps_exp: t.eps.clone(),
            iota_exp: t.iota.clone(),
        });
        let s = Self::new(x.to_string(), x.model() == Model::Full, move |pt, prec| exact_value(&net, pt, prec));
        match lead {
            Some(l) => s.with_lead(l),
            None => s,
        }
    }

    pub fn from_expr(label: impl Into<String>, e: SymExpr) -> Self {
        let full = e.uses_iota();
        Self::new(label, full, move |pt, prec| {
            let hp = Hp::new(prec.bits());
            let iota = pt.iota.as_ref().map(|i| i.hp(&hp));
            to_value(&e.eval_hp(&hp, pt.j, iota.as_ref()))
        })
    }

    /// `|x|` pointwise.
    pub fn abs_of(x: &ExactNet) -> Self {
        let net = x.clone();
        Self::new(format!("|{x}|"), x.model() == Model::Full, move |pt, prec| exact_value(&net, pt, prec).abs())
    }

    /// `max(0, x)` pointwise.
    pub fn clamp_of(x: &ExactNet) -> Self {
        let net = x.clone();
        Self::new(format!("max(0, {x})"), x.model() == Model::Full, move |pt, prec| {
            exact_value(&net, pt, prec).max0()
        })
    }

    /// `max(0, x)^(1/p)` pointwise, with leading data `(c^(1/p), q/p)`.
    pub fn proot_of(x: &ExactNet, p: u32) -> Self {
        let net = x.clone();
        let pf = f64::from(p);
        let s = Self::new(format!("root{p}({x})"), x.model() == Model::Full, move |pt, prec| {
            exact_value(&net, pt, prec).max0().powf(1.0 / pf)
        });
        match x.leading() {
            Some(t) => {
                let pr = int(i64::from(p));
                let (coeff, coeff_exact) = match exact_root(&t.coeff, p) {
                    Some(c) => (c, true),
                    None => (approx_root(&t.coeff, p, 128), false),
                };
                s.with_lead(LeadData {
                    coeff,
                    coeff_exact,
                    eps_exp: &t.eps / &pr,
                    iota_exp: &t.iota / &pr,
                })
            }
            None => s,
        }
    }

    pub fn map<G>(&self, label: impl Into<String>, g: G) -> Self
    where
        G: Fn(NetValue) -> NetValue + Send + Sync + 'static,
    {
        let a = self.clone();
        Self::new(label, self.full, move |pt, prec| g(a.eval(pt, prec)))
    }

    pub fn zip<G>(&self, other: &SampledNet, label: impl Into<String>, g: G) -> Self
    where
        G: Fn(NetValue, NetValue) -> NetValue + Send + Sync + 'static,
    {
        let (a, b) = (self.clone(), other.clone());
        Self::new(label, self.full || other.full, move |pt, prec| g(a.eval(pt, prec), b.eval(pt, prec)))
    }

    pub fn sub(&self, other: &SampledNet) -> Self {
        self.zip(other, format!("({}) - ({})", self.label, other.label), |a, b| a.sub(b))
    }

    pub fn add(&self, other: &SampledNet) -> Self {
        self.zip(other, format!("({}) + ({})", self.label, other.label), |a, b| a.add(b))
    }

    pub fn mul(&self, other: &SampledNet) -> Self {
        self.zip(other, format!("({}) * ({})", self.label, other.label), |a, b| a.mul(b))
    }

    pub fn powi(&self, n: u32) -> Self {
        self.map(format!("({})^{n}", self.label), move |a| a.powi(n))
    }
}

/// Grid and probe configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct GridConfig {
    pub j0: u32,
    pub j_max: u32,
    pub tail: usize,
    /// Exponent `B` of the null probe `|v| <= ε^B`.
    pub null_exp: Rational,
    pub b_list: Vec<Rational>,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            j0: 4,
            j_max: 200,
            tail: 64,
            null_exp: int(50),
            b_list: [1, 2, 3, 5, 10].into_iter().map(int).collect(),
        }
    }
}

impl GridConfig {
    pub fn tail_start(&self) -> u32 {
        let len = self.tail.min((self.j_max - self.j0 + 1) as usize) as u32;
        self.j_max + 1 - len
    }

    pub fn tail_indices(&self) -> std::ops::RangeInclusive<u32> {
        self.tail_start()..=self.j_max
    }
}

/// `ι` values probed for full nets when the caller supplies none.
pub fn default_iota_schedule() -> Vec<Iota> {
    vec![Iota::Value(crate::rational::rat(1, 2)), Iota::one(), Iota::Value(int(2))]
}

fn schedule_for(net: &SampledNet, schedule: &[Iota]) -> Vec<Option<Iota>> {
    if !net.is_full() {
        vec![None]
    } else if schedule.is_empty() {
        default_iota_schedule().into_iter().map(Some).collect()
    } else {
        schedule.iter().cloned().map(Some).collect()
    }
}

/// Tail values in (schedule, j) order, computed in parallel.
fn tail_values(net: &SampledNet, grid: &GridConfig, iotas: &[Option<Iota>]) -> Vec<(SamplePoint, NetValue)> {
    let pts: Vec<SamplePoint> = iotas
        .iter()
        .flat_map(|i| grid.tail_indices().map(move |j| SamplePoint { j, iota: i.clone() }))
        .collect();
    pts.into_par_iter()
        .map(|pt| {
            let v = net.eval(&pt, Precision::Fast);
            (pt, v)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub enum EstimateVerdict {
    Finite(f64),
    PlausiblyInfinite,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValuationEstimate {
    pub slope: f64,
    pub half_width: f64,
    pub window: (u32, u32),
    pub verdict: EstimateVerdict,
}

/// Least-squares slope of `ln|v|` against `ln ε` over the tail window.
pub fn estimate_valuation(net: &SampledNet, grid: &GridConfig, iota: Option<&Iota>) -> ValuationEstimate {
    let iotas = [if net.is_full() { Some(iota.cloned().unwrap_or_else(Iota::one)) } else { None }];
    let vals = tail_values(net, grid, &iotas);
    let window = (grid.tail_start(), grid.j_max);
    let b = to_f64(&grid.null_exp);
    let negligible = vals.iter().all(|(pt, v)| v.is_zero() || v.log_abs <= b * pt.ln_eps());
    let pts: Vec<(f64, f64)> = vals
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(pt, v)| (pt.ln_eps(), v.log_abs))
        .collect();
    if negligible || pts.len() < 2 {
        return ValuationEstimate {
            slope: f64::INFINITY,
            half_width: 0.0,
            window,
            verdict: EstimateVerdict::PlausiblyInfinite,
        };
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let resid: f64 = pts.iter().map(|p| (p.1 - my - slope * (p.0 - mx)).powi(2)).sum();
    let se = if pts.len() > 2 { (resid / (n - 2.0) / sxx).sqrt() } else { 0.0 };
    ValuationEstimate {
        slope,
        half_width: 3.0 * se,
        window,
        verdict: EstimateVerdict::Finite(slope),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Test `x >= 0`: look for `v < -ε^b`.
    Geq0,
    /// Test `x <= 0`: look for `v > ε^b`.
    Leq0,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Geq0 => "geq0",
            Direction::Leq0 => "leq0",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub point: SamplePoint,
    pub b: Rational,
    pub value: NetValue,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} b={} value={:e}", self.point, fmt_rat(&self.b), self.value.value)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Falsification {
    Falsified(Witness),
    NotFalsified,
}

fn violates_order(v: &NetValue, pt: &SamplePoint, b: &Rational, dir: Direction) -> bool {
    let want = match dir {
        Direction::Geq0 => -1,
        Direction::Leq0 => 1,
    };
    v.sign == want && v.log_abs > to_f64(b) * pt.ln_eps()
}

/// A fast-path witness is accepted only if the 1024-bit re-evaluation agrees
/// in sign and magnitude and still violates the bound.
fn confirmed<P>(net: &SampledNet, pt: &SamplePoint, fast: &NetValue, violates: P) -> Option<NetValue>
where
    P: Fn(&NetValue) -> bool,
{
    let full = net.eval(pt, Precision::Full);
    let agree = full.sign == fast.sign && (full.log_abs - fast.log_abs).abs() <= 1e-6 * (1.0 + fast.log_abs.abs());
    (agree && violates(&full)).then_some(full)
}

pub fn falsify_order(
    net: &SampledNet,
    dir: Direction,
    b_probe: &[Rational],
    schedule: &[Iota],
    grid: &GridConfig,
) -> Falsification {
    assert!(!b_probe.is_empty(), "b probe list must be nonempty");
    let vals = tail_values(net, grid, &schedule_for(net, schedule));
    for (pt, v) in &vals {
        for b in b_probe {
            if violates_order(v, pt, b, dir) {
                if let Some(full) = confirmed(net, pt, v, |w| violates_order(w, pt, b, dir)) {
                    return Falsification::Falsified(Witness {
                        point: pt.clone(),
                        b: b.clone(),
                        value: full,
                    });
                }
            }
        }
    }
    Falsification::NotFalsified
}

/// True iff `|v| <= ε^B` on the whole tail window.
pub fn null_estimate(net: &SampledNet, b: &Rational, grid: &GridConfig, schedule: &[Iota]) -> bool {
    let bf = to_f64(b);
    tail_values(net, grid, &schedule_for(net, schedule))
        .iter()
        .all(|(pt, v)| v.is_zero() || v.log_abs <= bf * pt.ln_eps())
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleVerdict {
    Consistent,
    Refuted(Witness),
}

fn exceeds_ball(v: &NetValue, pt: &SamplePoint, r: &Rational, b: &Rational, full: bool) -> bool {
    if v.is_zero() {
        return false;
    }
    let model = if full { Model::Full } else { Model::Simplified };
    let alpha = ExactNet::alpha(r.clone(), model);
    let ln_iota = if full { Some(pt.ln_iota().unwrap_or(0.0)) } else { None };
    let radius = alpha.eval_log(pt.ln_eps(), ln_iota).expect("iota supplied");
    let bound = sum_values(&[radius, NetValue::from_log(1, to_f64(b) * pt.ln_eps())]);
    v.log_abs > bound.log_abs
}

/// Semi-decision of `|x(ε)| <= ι^r ε^r + ε^b` on the tail.
pub fn oracle_ball_member(
    net: &SampledNet,
    r: &Rational,
    b_probe: &[Rational],
    schedule: &[Iota],
    grid: &GridConfig,
) -> OracleVerdict {
    let full = net.is_full();
    let vals = tail_values(net, grid, &schedule_for(net, schedule));
    for (pt, v) in &vals {
        for b in b_probe {
            if exceeds_ball(v, pt, r, b, full) {
                if let Some(w) = confirmed(net, pt, v, |w| exceeds_ball(w, pt, r, b, full)) {
                    return OracleVerdict::Refuted(Witness {
                        point: pt.clone(),
                        b: b.clone(),
                        value: w,
                    });
                }
            }
        }
    }
    OracleVerdict::Consistent
}

/// The oscillating net `ει·sin(1/(ει))`, neither `>= 0` nor `<= 0`, with
/// an `ι` schedule on which its sign alternates along the dyadic grid.
///
/// At `ι = 3/π` the phase is `2^j π/3`, giving `sin = ±sqrt(3)/2` by the
/// parity of `j`. Diameters `2/((2k+1)π)` are avoided: they put every grid
/// phase on a multiple of `π`, where the net vanishes identically.
pub fn oscillating_preset() -> (SampledNet, Vec<Iota>) {
    let e = SymExpr::Product(vec![
        SymExpr::EpsPow(int(1)),
        SymExpr::IotaPow(int(1)),
        SymExpr::Apply(
            Func::Sin,
            Box::new(SymExpr::Product(vec![SymExpr::EpsPow(int(-1)), SymExpr::IotaPow(int(-1))])),
        ),
    ]);
    let net = SampledNet::from_expr("e^(1)*i^(1)*sin(e^(-1)*i^(-1))", e);
    let schedule = vec![
        Iota::OverPi(int(3)),
        Iota::OverPi(crate::rational::rat(3, 4)),
        Iota::one(),
        Iota::Value(crate::rational::rat(1, 2)),
    ];
    (net, schedule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn s(terms: &[(i64, i64, i64, i64)]) -> ExactNet {
        ExactNet::simplified(terms.iter().map(|&(cn, cd, qn, qd)| (rat(cn, cd), rat(qn, qd))))
    }

    fn grid() -> GridConfig {
        GridConfig::default()
    }

    fn finite(e: &ValuationEstimate) -> f64 {
        match e.verdict {
            EstimateVerdict::Finite(v) => v,
            EstimateVerdict::PlausiblyInfinite => f64::INFINITY,
        }
    }

    #[test]
    fn valuation_estimates() {
        let x = SampledNet::from_exact(&s(&[(3, 1, 1, 2), (-2, 1, 3, 1)]));
        assert!((finite(&estimate_valuation(&x, &grid(), None)) - 0.5).abs() < 1e-3);
        let a2 = SampledNet::from_exact(&ExactNet::alpha(int(2), Model::Simplified));
        assert!((finite(&estimate_valuation(&a2, &grid(), None)) - 2.0).abs() < 1e-3);
        let z = SampledNet::zero(false);
        assert_eq!(estimate_valuation(&z, &grid(), None).verdict, EstimateVerdict::PlausiblyInfinite);
    }

    #[test]
    fn order_falsification() {
        let b2 = [int(2)];
        let sq = SampledNet::from_exact(&s(&[(1, 1, 2, 1)]));
        assert_eq!(falsify_order(&sq, Direction::Geq0, &b2, &[], &grid()), Falsification::NotFalsified);
        let neg = SampledNet::from_exact(&s(&[(-1, 1, 1, 1), (1, 1, 2, 1)]));
        assert!(matches!(falsify_order(&neg, Direction::Geq0, &b2, &[], &grid()), Falsification::Falsified(_)));
    }

    #[test]
    fn oscillating_net_is_incomparable_with_zero() {
        let (net, sched) = oscillating_preset();
        let b = GridConfig::default().b_list;
        for dir in [Direction::Geq0, Direction::Leq0] {
            let r = falsify_order(&net, dir, &b, &sched, &grid());
            assert!(matches!(r, Falsification::Falsified(_)), "{dir}: {r:?}");
        }
    }

    #[test]
    fn null_probe() {
        assert!(null_estimate(&SampledNet::zero(false), &int(50), &grid(), &[]));
        let e3 = SampledNet::from_exact(&s(&[(1, 1, 3, 1)]));
        assert!(!null_estimate(&e3, &int(50), &grid(), &[]));
        let h = SampledNet::clamp_of(&s(&[(1, 1, 2, 1), (-1, 1, 5, 1)])).sub(&SampledNet::from_exact(&s(&[(1, 1, 2, 1), (-1, 1, 5, 1)])));
        assert!(null_estimate(&h, &int(50), &grid(), &[]));
    }

    #[test]
    fn oracle_balls() {
        let b3 = [int(3)];
        let two = SampledNet::from_exact(&s(&[(2, 1, 2, 1)]));
        assert!(matches!(oracle_ball_member(&two, &int(2), &b3, &[], &grid()), OracleVerdict::Refuted(_)));
        let e3 = SampledNet::from_exact(&s(&[(1, 1, 3, 1)]));
        assert_eq!(oracle_ball_member(&e3, &int(2), &b3, &[], &grid()), OracleVerdict::Consistent);
        let e2 = SampledNet::from_exact(&s(&[(1, 1, 2, 1)]));
        assert_eq!(oracle_ball_member(&e2, &int(2), &[int(3), int(10)], &[], &grid()), OracleVerdict::Consistent);
        assert_eq!(oracle_ball_member(&SampledNet::zero(false), &int(2), &b3, &[], &grid()), OracleVerdict::Consistent);
    }
}
