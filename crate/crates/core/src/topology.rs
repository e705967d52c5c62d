//! Randomized verifiers for the neighbourhood bases of the sharp topologies.
//!
//! Four bases are covered: scalar balls `V_r` in the full model (`B`) and the
//! simplified model (`B_s`), and function balls `W^β_{l,r}` in the full
//! (`B_Omega`) and simplified (`B_sOmega`) model. Each check draws random
//! members of an inner ball with a seeded generator and decides membership of
//! the result in an outer ball with the exact deciders. Samples are
//! independent and run in parallel; sample `i` uses [`sample_rng`]`(seed, i)`,
//! so reports do not depend on scheduling.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::genfun::{embed_const, lpdo_apply, GenFun, GfTerm, IntervalDomain};
use crate::net::{ExactNet, Model};
use crate::order::{order_compare, scalar_ball_member, BallSpec, Comparison, Membership, Valuation};
use crate::poly::Poly;
use crate::random::{sample_rng, NetGen, Rng8};
use crate::rational::{ceil, fmt_rat, rat, to_f64, Rational};

/// A family of balls around zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `V_r[0]`, full scalars.
    B,
    /// `V_r(0)`, simplified scalars.
    Bs,
    /// `W^β_{l,r}[0]`, full generalized functions.
    BOmega,
    /// `W^β_{l,r}(0)`, simplified generalized functions.
    BsOmega,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::B, Basis::Bs, Basis::BOmega, Basis::BsOmega];

    pub fn model(self) -> Model {
        match self {
            Basis::B | Basis::BOmega => Model::Full,
            Basis::Bs | Basis::BsOmega => Model::Simplified,
        }
    }

    pub fn is_function(self) -> bool {
        matches!(self, Basis::BOmega | Basis::BsOmega)
    }

    /// The scalar basis of the same model.
    pub fn scalars(self) -> Basis {
        match self.model() {
            Model::Full => Basis::B,
            Model::Simplified => Basis::Bs,
        }
    }

    pub fn parse(s: &str) -> Option<Basis> {
        match s {
            "B" => Some(Basis::B),
            "B_s" | "Bs" => Some(Basis::Bs),
            "B_Omega" | "B_Ω" | "BOmega" => Some(Basis::BOmega),
            "B_sOmega" | "B_sΩ" | "BsOmega" => Some(Basis::BsOmega),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::B => "B",
            Basis::Bs => "B_s",
            Basis::BOmega => "B_Omega",
            Basis::BsOmega => "B_sOmega",
        })
    }
}

/// Filter-basis axioms of a topological ring (`GA`, `AV`) and module (`MV`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `V + V ⊂ U`.
    GaI,
    /// `−V ⊂ U`.
    GaII,
    /// `a·V ⊂ U` for a fixed element `a`.
    AvI,
    /// `V·V ⊂ U`.
    AvII,
    /// `S·x0 ⊂ V` for a fixed element `x0` and a scalar neighbourhood `S`.
    MvI,
    /// `λ0·W ⊂ V` for a fixed scalar `λ0`.
    MvII,
    /// `S·W ⊂ V`.
    MvIII,
}

impl Axiom {
    /// The axioms run by default; the module axioms follow from these.
    pub const DEFAULT: [Axiom; 4] = [Axiom::GaI, Axiom::GaII, Axiom::AvI, Axiom::AvII];
    pub const ALL: [Axiom; 7] = [
        Axiom::GaI,
        Axiom::GaII,
        Axiom::AvI,
        Axiom::AvII,
        Axiom::MvI,
        Axiom::MvII,
        Axiom::MvIII,
    ];

    pub fn parse(s: &str) -> Option<Axiom> {
        Self::ALL.into_iter().find(|a| a.to_string() == s)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::GaI => "GA'_I",
            Axiom::GaII => "GA'_II",
            Axiom::AvI => "AV'_I",
            Axiom::AvII => "AV'_II",
            Axiom::MvI => "MV'_I",
            Axiom::MvII => "MV'_II",
            Axiom::MvIII => "MV'_III",
        })
    }
}

/// One failing or undecided sample.
#[derive(Debug, Clone, PartialEq)]
pub struct Finding {
    pub index: u64,
    pub detail: String,
}

/// Outcome of a randomized check.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub check: String,
    pub basis: String,
    pub samples: u64,
    pub seed: u64,
    pub failures: Vec<Finding>,
    pub unknowns: Vec<Finding>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `check basis samples failures unknowns seed`.
    pub fn line(&self) -> String {
        format!(
            "{} {} {} {} {} {}",
            self.check,
            self.basis,
            self.samples,
            self.failures.len(),
            self.unknowns.len(),
            self.seed
        )
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

/// Result of a single sample.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Unknown(String),
}

impl Outcome {
    /// Outcome of an implication whose conclusion is a membership verdict.
    pub fn expect_member(m: Membership, detail: impl FnOnce() -> String) -> Outcome {
        match m {
            Membership::Member => Outcome::Pass,
            Membership::NotMember => Outcome::Fail(detail()),
            Membership::Unknown => Outcome::Unknown(detail()),
        }
    }

    /// Outcome of an equivalence between two verdicts.
    pub fn expect_equal(a: Membership, b: Membership, detail: impl FnOnce() -> String) -> Outcome {
        if a == Membership::Unknown || b == Membership::Unknown {
            Outcome::Unknown(detail())
        } else if a == b {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }

    pub fn check(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }
}

/// Runs `samples` independent samples of `f` in parallel and collects the
/// findings in index order.
pub fn run_samples<F>(check: impl Into<String>, basis: impl Into<String>, samples: u64, seed: u64, f: F) -> AxiomReport
where
    F: Fn(&mut Rng8) -> Outcome + Sync,
{
    let outcomes: Vec<(u64, Outcome)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample_rng(seed, i);
            (i, f(&mut rng))
        })
        .collect();
    let mut failures = Vec::new();
    let mut unknowns = Vec::new();
    for (index, o) in outcomes {
        match o {
            Outcome::Pass => {}
            Outcome::Fail(detail) => failures.push(Finding { index, detail }),
            Outcome::Unknown(detail) => unknowns.push(Finding { index, detail }),
        }
    }
    AxiomReport {
        check: check.into(),
        basis: basis.into(),
        samples,
        seed,
        failures,
        unknowns,
    }
}

/// A generalized number or generalized function.
#[derive(Debug, Clone, PartialEq)]
pub enum Element {
    Scalar(ExactNet),
    Function(GenFun),
}

impl Element {
    pub fn add(&self, other: &Element) -> Result<Element> {
        match (self, other) {
            (Element::Scalar(a), Element::Scalar(b)) => Ok(Element::Scalar(a.try_add(b)?)),
            (Element::Function(f), Element::Function(g)) => Ok(Element::Function(f.try_add(g)?)),
            _ => Err(Error::SideCondition("cannot add a scalar and a function".into())),
        }
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        match self {
            Element::Scalar(a) => Element::Scalar(-a),
            Element::Function(f) => Element::Function(f.neg()),
        }
    }

    /// Ring product; a scalar times a function embeds the scalar as a constant.
    pub fn mul(&self, other: &Element) -> Result<Element> {
        match (self, other) {
            (Element::Scalar(a), Element::Scalar(b)) => Ok(Element::Scalar(a.try_mul(b)?)),
            (Element::Function(f), Element::Function(g)) => Ok(Element::Function(f.try_mul(g)?)),
            (Element::Scalar(a), Element::Function(f)) | (Element::Function(f), Element::Scalar(a)) => {
                Ok(Element::Function(f.scale_by(a)?))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Scalar(a) => a.is_zero(),
            Element::Function(f) => f.is_zero(),
        }
    }

    /// Membership in the ball of radius `α_r` (`β`, `l` apply to functions).
    pub fn member(&self, ball: &Ball) -> Membership {
        match self {
            Element::Scalar(a) => scalar_ball_member(a, &BallSpec::new(a.model(), ball.r.clone()))
                .unwrap_or(Membership::Unknown),
            Element::Function(f) => f.ball_member(ball.beta, ball.l, &ball.r),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Scalar(a) => write!(f, "{a}"),
            Element::Function(g) => write!(f, "{g} on {}", g.domain()),
        }
    }
}

/// Ball parameters: radius exponent `r`, derivative order `β` and exhaustion
/// index `l` (the last two unused for scalars).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ball {
    pub r: Rational,
    pub beta: usize,
    pub l: u64,
}

impl Ball {
    pub fn scalar(r: Rational) -> Self {
        Ball { r, beta: 0, l: 0 }
    }

    pub fn with_radius(&self, r: Rational) -> Ball {
        Ball { r, ..self.clone() }
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={} beta={} l={}", fmt_rat(&self.r), self.beta, self.l)
    }
}

/// Domains drawn for function samples.
fn random_domain(rng: &mut Rng8) -> IntervalDomain {
    match rng.gen_range(0..4) {
        0 => IntervalDomain::bounded(rat(-2, 1), rat(2, 1)),
        1 => IntervalDomain::bounded(rat(-1, 1), rat(3, 1)),
        2 => IntervalDomain::bounded(rat(0, 1), rat(1, 1)),
        _ => Ok(IntervalDomain::real_line()),
    }
    .expect("valid interval")
}

/// Sampling context shared by every element of one sample.
#[derive(Debug, Clone)]
pub struct Sampler {
    pub basis: Basis,
    pub domain: IntervalDomain,
    pub gen: NetGen,
}

impl Sampler {
    pub fn new(basis: Basis, rng: &mut Rng8) -> Self {
        Sampler {
            basis,
            domain: random_domain(rng),
            gen: NetGen::default(),
        }
    }

    pub fn model(&self) -> Model {
        self.basis.model()
    }

    /// Random ball parameters: `r` in `[-5, 5]`, `β <= 2`, `l <= 3`.
    pub fn ball(&self, rng: &mut Rng8) -> Ball {
        Ball {
            r: self.gen.exponent(rng),
            beta: if self.basis.is_function() { rng.gen_range(0..=2) } else { 0 },
            l: if self.basis.is_function() { rng.gen_range(0..=3) } else { 0 },
        }
    }

    /// Random element of the basis' space, unconstrained.
    pub fn element(&self, rng: &mut Rng8) -> Element {
        if self.basis.is_function() {
            Element::Function(self.genfun(rng))
        } else {
            Element::Scalar(self.gen.net(rng, self.model()))
        }
    }

    /// Random scalar of the basis' model.
    pub fn scalar(&self, rng: &mut Rng8) -> ExactNet {
        self.gen.net(rng, self.model())
    }

    pub fn genfun(&self, rng: &mut Rng8) -> GenFun {
        let n = rng.gen_range(1..=self.gen.max_terms);
        let raw = (0..n)
            .map(|_| {
                let p = self.gen.nonzero_poly(rng);
                let a = self.gen.exponent(rng);
                let b = match self.model() {
                    Model::Simplified => Rational::zero(),
                    Model::Full => self.gen.exponent(rng),
                };
                GfTerm::new(p, a, b)
            })
            .collect();
        GenFun::normalize(self.model(), self.domain.clone(), raw)
    }

    /// Random member of the ball `ball` (or of `V_r` for scalar elements when
    /// `scalar` is set). About half the draws sit on the boundary, with a
    /// leading term of exponent exactly `r`.
    pub fn member(&self, rng: &mut Rng8, ball: &Ball, scalar: bool) -> Element {
        let function = self.basis.is_function() && !scalar;
        for _ in 0..32 {
            let e = self.member_candidate(rng, ball, function);
            if e.member(ball) == Membership::Member {
                return e;
            }
        }
        // tail only: always a member
        self.tail(rng, &ball.r, function)
    }

    fn member_candidate(&self, rng: &mut Rng8, ball: &Ball, function: bool) -> Element {
        if rng.gen_bool(0.05) {
            return self.zero(function);
        }
        let tail = self.tail(rng, &ball.r, function);
        if rng.gen_bool(0.5) {
            return tail;
        }
        let lead = self.boundary_term(rng, ball, function);
        lead.add(&tail).expect("same space")
    }

    fn zero(&self, function: bool) -> Element {
        if function {
            Element::Function(GenFun::zero(self.model(), self.domain.clone()))
        } else {
            Element::Scalar(ExactNet::zero(self.model()))
        }
    }

    /// Random element with leading exponent in `(r, r + 2]`.
    fn tail(&self, rng: &mut Rng8, r: &Rational, function: bool) -> Element {
        let delta = loop {
            let d = self.gen.rational(rng, 2).abs();
            if !d.is_zero() {
                break d;
            }
        };
        if function {
            let f = self.genfun(rng);
            let v = f.valuation();
            let Some(v) = v.finite() else {
                return Element::Function(f);
            };
            let t = r + &delta - v;
            let raw = f
                .terms()
                .iter()
                .map(|term| GfTerm::new(term.poly.clone(), &term.eps + &t, term.iota.clone()))
                .collect();
            Element::Function(GenFun::normalize(self.model(), self.domain.clone(), raw))
        } else {
            let x = self.gen.net(rng, self.model());
            match x.valuation().finite() {
                Some(v) => {
                    let t = r + &delta - v;
                    Element::Scalar(x.shift(&t, &Rational::zero()))
                }
                None => Element::Scalar(x),
            }
        }
    }

    /// `c·α_r` with `|c| <= 1` (scalars), or `p(x)·α_r` with every
    /// `sup |∂^σ p| <= 1`, `σ <= β`, on the ball's compact set (functions).
    fn boundary_term(&self, rng: &mut Rng8, ball: &Ball, function: bool) -> Element {
        let c = loop {
            let d = rng.gen_range(1..=self.gen.max_den);
            let n = rng.gen_range(-d..=d);
            if n != 0 {
                break rat(n, d);
            }
        };
        let alpha = ExactNet::alpha(ball.r.clone(), self.model());
        if !function {
            return Element::Scalar(alpha.scale(&c));
        }
        let p = if rng.gen_bool(0.3) {
            Poly::constant(c)
        } else {
            let p = self.gen.nonzero_poly(rng);
            let (lo, hi) = self.domain.exhaustion(ball.l);
            let bound = derivative_bound(&p, ball.beta, &lo, &hi);
            p.scale(&(c / bound))
        };
        let a = alpha.terms()[0].clone();
        Element::Function(GenFun::normalize(
            self.model(),
            self.domain.clone(),
            vec![GfTerm::new(p, a.eps, a.iota)],
        ))
    }
}

/// Rational upper bound of `sup_{[lo, hi]} |∂^σ p|` over `σ <= beta`
/// (at least 1).
fn derivative_bound(p: &Poly, beta: usize, lo: &Rational, hi: &Rational) -> Rational {
    let m = lo.abs().max(hi.abs()).max(Rational::one());
    (0..=beta)
        .map(|s| {
            let d = p.nth_derivative(s);
            let mut acc = Rational::zero();
            let mut pw = Rational::one();
            for c in d.coeffs() {
                acc += c.abs() * &pw;
                pw *= &m;
            }
            acc
        })
        .fold(Rational::one(), |a, b| a.max(b))
}

/// `sup S_np`: the least leading exponent of `∂^σ f`, `σ <= p`, over the
/// `n`-th exhaustion set. Nonzero polynomial coefficients have nonzero
/// suprema on every compact interval, so the exhaustion index does not move
/// the value for polynomial representatives.
pub fn vnp(f: &GenFun, n: u64, p: usize) -> Valuation {
    let _ = n;
    (0..=p).map(|s| f.derive(s).valuation()).min().unwrap_or(Valuation::Infinite)
}

/// `exp(−vnp(f − g))`.
pub fn dnp(f: &GenFun, g: &GenFun, n: u64, p: usize) -> Result<f64> {
    Ok(vnp(&f.try_sub(g)?, n, p).norm())
}

/// Random check of one axiom on one basis with the explicit radii: `s = r+1`
/// for sums, `s = r` for negation, `s = r+N+1` for a fixed scalar of
/// valuation at least `−N`, `s = r−r'+1` for a fixed function with
/// `vnp >= r'`, and `s = (r+1)/2` for products.
pub fn axiom_check(basis: Basis, axiom: Axiom, samples: u64, seed: u64) -> AxiomReport {
    run_samples(axiom.to_string(), basis.to_string(), samples, seed, |rng| {
        axiom_sample(basis, axiom, rng).unwrap_or_else(|e| Outcome::Fail(e.to_string()))
    })
}

/// Exponent `r' <= 0` with `‖∂^σ f‖ = O(ε^{r'})` for all `σ <= β`: `−N` for
/// scalars, `min(vnp, 0)` for functions.
fn coefficient_bound_exponent(f: &Element, beta: usize) -> Rational {
    match f {
        Element::Scalar(a) => -Rational::from_integer(moderateness_order(a)),
        Element::Function(g) => match vnp(g, 0, beta) {
            Valuation::Finite(q) => q.min(Rational::zero()),
            Valuation::Infinite => Rational::zero(),
        },
    }
}

fn axiom_sample(basis: Basis, axiom: Axiom, rng: &mut Rng8) -> Result<Outcome> {
    // a ring is a module over itself: on scalars the module axioms are ring axioms
    let axiom = match (basis.is_function(), axiom) {
        (false, Axiom::MvI | Axiom::MvII) => Axiom::AvI,
        (false, Axiom::MvIII) => Axiom::AvII,
        (_, a) => a,
    };
    let smp = Sampler::new(basis, rng);
    let outer = smp.ball(rng);
    let r = outer.r.clone();
    let one = Rational::one();
    let shown = outer.to_string();
    let fail = |what: String| {
        let shown = shown.clone();
        move || format!("{what} outer {shown}")
    };
    let out = match axiom {
        Axiom::GaI => {
            let inner = outer.with_radius(&r + &one);
            let x = smp.member(rng, &inner, false);
            let y = smp.member(rng, &inner, false);
            let z = x.add(&y)?;
            Outcome::expect_member(z.member(&outer), fail(format!("x={x} y={y}")))
        }
        Axiom::GaII => {
            let x = smp.member(rng, &outer, false);
            Outcome::expect_member(x.neg().member(&outer), fail(format!("x={x}")))
        }
        Axiom::AvI => {
            let a = smp.element(rng);
            let s = &r - coefficient_bound_exponent(&a, outer.beta) + &one;
            let x = smp.member(rng, &outer.with_radius(s), false);
            let z = a.mul(&x)?;
            Outcome::expect_member(z.member(&outer), fail(format!("a={a} x={x}")))
        }
        Axiom::AvII => {
            let inner = outer.with_radius((&r + &one) / Rational::from_integer(BigInt::from(2)));
            let x = smp.member(rng, &inner, false);
            let y = smp.member(rng, &inner, false);
            let z = x.mul(&y)?;
            Outcome::expect_member(z.member(&outer), fail(format!("x={x} y={y}")))
        }
        Axiom::MvI => {
            // fixed x0, scalars λ ∈ V_s with s = r − r' + 1
            let x0 = smp.element(rng);
            let s = &r - coefficient_bound_exponent(&x0, outer.beta) + &one;
            let lambda = smp.member(rng, &Ball::scalar(s), true);
            let z = lambda.mul(&x0)?;
            Outcome::expect_member(z.member(&outer), fail(format!("lambda={lambda} x0={x0}")))
        }
        Axiom::MvII => {
            let lambda0 = Element::Scalar(smp.scalar(rng));
            let s = &r - coefficient_bound_exponent(&lambda0, 0) + &one;
            let w = smp.member(rng, &outer.with_radius(s), false);
            let z = lambda0.mul(&w)?;
            Outcome::expect_member(z.member(&outer), fail(format!("lambda0={lambda0} w={w}")))
        }
        Axiom::MvIII => {
            let s = (&r + &one) / Rational::from_integer(BigInt::from(2));
            let lambda = smp.member(rng, &Ball::scalar(s.clone()), true);
            let w = smp.member(rng, &outer.with_radius(s), false);
            let z = lambda.mul(&w)?;
            Outcome::expect_member(z.member(&outer), fail(format!("lambda={lambda} w={w}")))
        }
    };
    Ok(out)
}

/// Radius of a norm or pseudometric ball: `e^{−t}` (exact exponent) or a
/// positive real.
#[derive(Debug, Clone, PartialEq)]
pub enum Radius {
    ExpNeg(Rational),
    Value(f64),
}

impl Radius {
    /// `−ln ρ`.
    pub fn neg_ln(&self) -> f64 {
        match self {
            Radius::ExpNeg(t) => to_f64(t),
            Radius::Value(a) => -a.ln(),
        }
    }

    fn positive(&self) -> bool {
        match self {
            Radius::ExpNeg(_) => true,
            Radius::Value(a) => *a > 0.0,
        }
    }

    /// `e^{−v} < ρ`, i.e. `v > −ln ρ`.
    pub fn norm_below(&self, v: &Valuation) -> bool {
        match (v, self) {
            (Valuation::Infinite, _) => true,
            (Valuation::Finite(q), Radius::ExpNeg(t)) => q > t,
            (Valuation::Finite(q), Radius::Value(_)) => to_f64(q) > self.neg_ln(),
        }
    }

    /// `e^{−v} <= ρ`, i.e. `v >= −ln ρ`.
    pub fn norm_at_most(&self, v: &Valuation) -> bool {
        match (v, self) {
            (Valuation::Infinite, _) => true,
            (Valuation::Finite(q), Radius::ExpNeg(t)) => q >= t,
            (Valuation::Finite(q), Radius::Value(_)) => to_f64(q) >= self.neg_ln(),
        }
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radius::ExpNeg(t) => write!(f, "exp(-({}))", fmt_rat(t)),
            Radius::Value(a) => write!(f, "{a}"),
        }
    }
}

/// Inclusions between the sharp norm / pseudometric balls and the `V`/`W`
/// balls.
#[derive(Debug, Clone, PartialEq)]
pub enum MetricInclusion {
    /// `B_ρ(0) ⊂ V_r(0)` for `ρ <= e^{−r}`.
    NormBallInScalarBall { r: Rational, rho: Radius },
    /// `V_r(0) ⊂ B_ρ(0)` for `e^{−r} < ρ`.
    ScalarBallInNormBall { r: Rational, rho: Radius },
    /// `W^p_{n,r}(0) ⊂ B̄_a(d_np)` for `r >= −ln a + 1`.
    FunctionBallInMetricBall { n: u64, p: usize, r: Rational, a: Radius },
    /// `B̄_a(d_lβ) ⊂ W^β_{l,r}(0)` for `0 < a < e^{−r}`.
    MetricBallInFunctionBall { l: u64, beta: usize, r: Rational, a: Radius },
}

impl MetricInclusion {
    fn name(&self) -> &'static str {
        match self {
            MetricInclusion::NormBallInScalarBall { .. } => "norm-ball-in-V",
            MetricInclusion::ScalarBallInNormBall { .. } => "V-in-norm-ball",
            MetricInclusion::FunctionBallInMetricBall { .. } => "W-in-d-ball",
            MetricInclusion::MetricBallInFunctionBall { .. } => "d-ball-in-W",
        }
    }

    fn side_condition(&self) -> Result<()> {
        let bad = |s: String| Err(Error::SideCondition(s));
        match self {
            MetricInclusion::NormBallInScalarBall { r, rho } => {
                let ok = rho.positive()
                    && match rho {
                        Radius::ExpNeg(t) => t >= r,
                        Radius::Value(_) => rho.neg_ln() >= to_f64(r),
                    };
                if !ok {
                    return bad(format!("need 0 < rho <= exp(-r), got rho={rho} r={}", fmt_rat(r)));
                }
            }
            MetricInclusion::ScalarBallInNormBall { r, rho } => {
                let ok = rho.positive()
                    && match rho {
                        Radius::ExpNeg(t) => t < r,
                        Radius::Value(_) => rho.neg_ln() < to_f64(r),
                    };
                if !ok {
                    return bad(format!("need exp(-r) < rho, got rho={rho} r={}", fmt_rat(r)));
                }
            }
            MetricInclusion::FunctionBallInMetricBall { r, a, .. } => {
                if !a.positive() || to_f64(r) < a.neg_ln() + 1.0 {
                    return bad(format!("need r >= -ln a + 1, got a={a} r={}", fmt_rat(r)));
                }
            }
            MetricInclusion::MetricBallInFunctionBall { r, a, .. } => {
                let ok = a.positive()
                    && match a {
                        Radius::ExpNeg(t) => t > r,
                        Radius::Value(_) => a.neg_ln() > to_f64(r),
                    };
                if !ok {
                    return bad(format!("need 0 < a < exp(-r), got a={a} r={}", fmt_rat(r)));
                }
            }
        }
        Ok(())
    }
}

/// Random membership implications for one inclusion. Samples are drawn
/// around the boundary of the inner ball so that both sides are exercised.
pub fn metric_ball_equivalence(inc: &MetricInclusion, samples: u64, seed: u64) -> Result<AxiomReport> {
    inc.side_condition()?;
    let basis = match inc {
        MetricInclusion::NormBallInScalarBall { .. } | MetricInclusion::ScalarBallInNormBall { .. } => Basis::Bs,
        _ => Basis::BsOmega,
    };
    Ok(run_samples(inc.name(), basis.to_string(), samples, seed, |rng| {
        let smp = Sampler::new(basis, rng);
        match inc {
            MetricInclusion::NormBallInScalarBall { r, rho } => {
                let x = near_valuation(&smp, rng, rho.neg_ln());
                let Element::Scalar(ref n) = x else { unreachable!() };
                if !rho.norm_below(&n.valuation()) {
                    return Outcome::Pass;
                }
                Outcome::expect_member(x.member(&Ball::scalar(r.clone())), || format!("x={x}"))
            }
            MetricInclusion::ScalarBallInNormBall { r, rho } => {
                let x = if rng.gen_bool(0.5) {
                    smp.member(rng, &Ball::scalar(r.clone()), false)
                } else {
                    near_valuation(&smp, rng, to_f64(r))
                };
                if x.member(&Ball::scalar(r.clone())) != Membership::Member {
                    return Outcome::Pass;
                }
                let Element::Scalar(ref n) = x else { unreachable!() };
                Outcome::check(rho.norm_below(&n.valuation()), || format!("x={x}"))
            }
            MetricInclusion::FunctionBallInMetricBall { n, p, r, a } => {
                let ball = Ball {
                    r: r.clone(),
                    beta: *p,
                    l: *n,
                };
                let f = if rng.gen_bool(0.5) {
                    smp.member(rng, &ball, false)
                } else {
                    near_valuation(&smp, rng, to_f64(r))
                };
                match f.member(&ball) {
                    Membership::Member => {}
                    Membership::NotMember => return Outcome::Pass,
                    Membership::Unknown => return Outcome::Unknown(format!("f={f} {ball}")),
                }
                let Element::Function(ref g) = f else { unreachable!() };
                Outcome::check(a.norm_at_most(&vnp(g, *n, *p)), || format!("f={f}"))
            }
            MetricInclusion::MetricBallInFunctionBall { l, beta, r, a } => {
                let f = near_valuation(&smp, rng, a.neg_ln());
                let Element::Function(ref g) = f else { unreachable!() };
                if !a.norm_at_most(&vnp(g, *l, *beta)) {
                    return Outcome::Pass;
                }
                let ball = Ball {
                    r: r.clone(),
                    beta: *beta,
                    l: *l,
                };
                Outcome::expect_member(f.member(&ball), || format!("f={f} {ball}"))
            }
        }
    }))
}

/// Random element whose valuation lies within about one unit of `v`
/// (rounded to a rational with denominator at most 4).
fn near_valuation(smp: &Sampler, rng: &mut Rng8, v: f64) -> Element {
    let centre = Rational::new(BigInt::from((v * 4.0).round() as i64), BigInt::from(4));
    let offset = smp.gen.rational(rng, 1);
    smp.tail(rng, &(centre + offset - rat(1, 4)), smp.basis.is_function())
}

/// Scalar / function ball equivalences across embeddings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equivalence {
    /// `λ ∈ V_r ⇔ λ* ∈ W^β_{l,r}` for the constant embedding (either model).
    ConstantEmbedding(Model),
    /// `f ∈ W^β_{l,r}(0) ⇔ Ψ(f) ∈ W^β_{l,r}[0]`.
    FunctionEmbedding,
    /// `x ∈ V_r(0) ⇔ j(x) ∈ V_r[0]`.
    ScalarEmbedding,
}

impl Equivalence {
    fn name(self) -> String {
        match self {
            Equivalence::ConstantEmbedding(m) => format!("const-embed-{m}"),
            Equivalence::FunctionEmbedding => "psi-embed".into(),
            Equivalence::ScalarEmbedding => "jm-embed".into(),
        }
    }
}

pub fn equivalence_check(kind: Equivalence, samples: u64, seed: u64) -> AxiomReport {
    let basis = match kind {
        Equivalence::ConstantEmbedding(Model::Full) => Basis::BOmega,
        Equivalence::ConstantEmbedding(Model::Simplified) | Equivalence::FunctionEmbedding => Basis::BsOmega,
        Equivalence::ScalarEmbedding => Basis::Bs,
    };
    run_samples(kind.name(), basis.to_string(), samples, seed, |rng| {
        let smp = Sampler::new(basis, rng);
        let ball = smp.ball(rng);
        let near = rng.gen_bool(0.7);
        match kind {
            Equivalence::ConstantEmbedding(_) => {
                let lambda = if near {
                    smp.member(rng, &ball, true)
                } else {
                    Element::Scalar(smp.scalar(rng))
                };
                let Element::Scalar(ref l) = lambda else { unreachable!() };
                let star = Element::Function(embed_const(l, &smp.domain));
                Outcome::expect_equal(lambda.member(&ball), star.member(&ball), || format!("lambda={lambda} {ball}"))
            }
            Equivalence::FunctionEmbedding => {
                let f = if near { smp.member(rng, &ball, false) } else { smp.element(rng) };
                let Element::Function(ref g) = f else { unreachable!() };
                let psi = Element::Function(g.psi_embed().expect("simplified"));
                Outcome::expect_equal(f.member(&ball), psi.member(&ball), || format!("f={f} {ball}"))
            }
            Equivalence::ScalarEmbedding => {
                let x = if near { smp.member(rng, &ball, false) } else { smp.element(rng) };
                let Element::Scalar(ref n) = x else { unreachable!() };
                let j = Element::Scalar(n.jm_embed().expect("simplified"));
                Outcome::expect_equal(x.member(&ball), j.member(&ball), || format!("x={x} {ball}"))
            }
        }
    })
}

/// Continuity of integration and differentiation as ball inclusions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Continuity {
    /// `f ∈ W^0_{l,r+1}`, `M ⊂ K_l` ⇒ `∫_M f ∈ V_r`.
    Integration,
    /// `f ∈ W^{α+β}_{l,r}` ⇒ `∂^α f ∈ W^β_{l,r}`.
    Differentiation,
}

pub fn continuity_check(kind: Continuity, basis: Basis, samples: u64, seed: u64) -> AxiomReport {
    let name = match kind {
        Continuity::Integration => "integration",
        Continuity::Differentiation => "differentiation",
    };
    run_samples(name, basis.to_string(), samples, seed, |rng| {
        let smp = Sampler::new(basis, rng);
        let ball = smp.ball(rng);
        match kind {
            Continuity::Integration => {
                let inner = Ball {
                    r: &ball.r + Rational::one(),
                    beta: 0,
                    l: ball.l,
                };
                let f = smp.member(rng, &inner, false);
                let Element::Function(ref g) = f else { unreachable!() };
                let (lo, hi) = smp.domain.exhaustion(ball.l);
                let (a, b) = random_subinterval(rng, &lo, &hi);
                match g.integrate(&a, &b) {
                    Ok(v) => Outcome::expect_member(Element::Scalar(v).member(&Ball::scalar(ball.r.clone())), || {
                        format!("f={f} M=[{}, {}] {ball}", fmt_rat(&a), fmt_rat(&b))
                    }),
                    Err(e) => Outcome::Fail(e.to_string()),
                }
            }
            Continuity::Differentiation => {
                let alpha = rng.gen_range(0..=2);
                let inner = Ball {
                    beta: ball.beta + alpha,
                    ..ball.clone()
                };
                let f = smp.member(rng, &inner, false);
                let Element::Function(ref g) = f else { unreachable!() };
                let d = Element::Function(g.derive(alpha));
                Outcome::expect_member(d.member(&ball), || format!("f={f} alpha={alpha} {ball}"))
            }
        }
    })
}

fn random_subinterval(rng: &mut Rng8, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let w = hi - lo;
    let mut t: Vec<Rational> = (0..2).map(|_| rat(rng.gen_range(0..=8), 8)).collect();
    t.sort();
    (lo + &w * &t[0], lo + &w * &t[1])
}

/// Table of valuations `n ↦ V(x_n − x)` and its verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceCertificate {
    pub table: Vec<(usize, Valuation)>,
    pub converges: bool,
}

impl ConvergenceCertificate {
    /// Verdict from a finite table: the valuations end at infinity, or are
    /// nondecreasing over the second half of the table and increase there.
    fn from_table(table: Vec<(usize, Valuation)>) -> Self {
        let half = &table[table.len() / 2..];
        let ends_null = half.last().is_some_and(|(_, v)| v.is_infinite());
        let monotone = half.windows(2).all(|w| w[0].1 <= w[1].1);
        let grows = half.first().zip(half.last()).is_some_and(|(a, b)| a.1 < b.1);
        let converges = ends_null || (monotone && grows);
        ConvergenceCertificate { table, converges }
    }

    pub fn strictly_increasing(&self) -> bool {
        self.table.windows(2).all(|w| w[0].1 < w[1].1)
    }
}

impl fmt::Display for ConvergenceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, v) in &self.table {
            writeln!(f, "{n} {v}")?;
        }
        write!(f, "{}", if self.converges { "converges" } else { "not-certified" })
    }
}

/// Sharp convergence of scalars, certified by `V(x_n − x)` for `n <= upto`.
pub fn converges_scalar(seq: impl Fn(usize) -> ExactNet, limit: &ExactNet, upto: usize) -> Result<ConvergenceCertificate> {
    let table = (0..=upto)
        .map(|n| Ok((n, seq(n).try_sub(limit)?.valuation())))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceCertificate::from_table(table))
}

/// Convergence in every pseudometric `d_np` of `probes`; the table holds the
/// least `vnp(f_n − f)` over the probes.
pub fn converges_genfun(
    seq: impl Fn(usize) -> GenFun,
    limit: &GenFun,
    probes: &[(u64, usize)],
    upto: usize,
) -> Result<ConvergenceCertificate> {
    let table = (0..=upto)
        .map(|n| {
            let d = seq(n).try_sub(limit)?;
            let v = probes
                .iter()
                .map(|&(k, p)| vnp(&d, k, p))
                .min()
                .unwrap_or(Valuation::Infinite);
            Ok((n, v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceCertificate::from_table(table))
}

/// Image of `f_n = α_n^•·g` under `P = x∂ + 1`, a sequence tending to zero
/// together with `f_n`.
pub fn lpdo_sequence(g: &GenFun, n: usize) -> Result<GenFun> {
    let dom = g.domain().clone();
    let m = g.model();
    let alpha = ExactNet::alpha(Rational::from_integer(BigInt::from(n)), m);
    let f_n = g.scale_by(&alpha)?;
    let x = GenFun::normalize(m, dom.clone(), vec![GfTerm::new(Poly::x(), Rational::zero(), Rational::zero())]);
    let one = embed_const(&ExactNet::one(m), &dom);
    lpdo_apply(&[(x, 1), (one, 0)], &f_n)
}

/// Seminorm laws checked on leading data of `‖·‖_{β,l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeminormLaw {
    /// `p(f + g) <= p(f) + p(g)`.
    Subadditive,
    /// `p(a·f) = |a|·p(f)`.
    Homogeneous,
    /// `|p(f) − p(g)| <= p(f − g)`, as ball implications both ways.
    ReverseTriangle,
    /// `B_q·B_q ⊂ B_p` with `q = (p + 1)/2`.
    MultiplicativeBalls,
}

impl SeminormLaw {
    pub const ALL: [SeminormLaw; 4] = [
        SeminormLaw::Subadditive,
        SeminormLaw::Homogeneous,
        SeminormLaw::ReverseTriangle,
        SeminormLaw::MultiplicativeBalls,
    ];
}

impl fmt::Display for SeminormLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeminormLaw::Subadditive => "GSN1",
            SeminormLaw::Homogeneous => "GSN2",
            SeminormLaw::ReverseTriangle => "reverse-triangle",
            SeminormLaw::MultiplicativeBalls => "m-convex-i",
        })
    }
}

pub fn gseminorm_axiom_check(law: SeminormLaw, basis: Basis, samples: u64, seed: u64) -> Result<AxiomReport> {
    if !basis.is_function() {
        return Err(Error::SideCondition(format!("seminorm laws need a function basis, got {basis}")));
    }
    Ok(run_samples(law.to_string(), basis.to_string(), samples, seed, |rng| {
        gseminorm_sample(law, basis, rng).unwrap_or_else(|e| Outcome::Fail(e.to_string()))
    }))
}

fn gseminorm_sample(law: SeminormLaw, basis: Basis, rng: &mut Rng8) -> Result<Outcome> {
    let smp = Sampler::new(basis, rng);
    let ball = smp.ball(rng);
    let (beta, l) = (ball.beta, ball.l);
    Ok(match law {
        SeminormLaw::Subadditive => {
            let f = smp.genfun(rng);
            // g shares the leading exponent of f half of the time
            let g = if rng.gen_bool(0.5) { smp.genfun(rng) } else { same_lead(&smp, rng, &f) };
            let (pf, pg, ps) = (f.seminorm(beta, l), g.seminorm(beta, l), f.try_add(&g)?.seminorm(beta, l));
            let least = pf.lead_exp.clone().min(pg.lead_exp.clone());
            let mut ok = ps.lead_exp >= least;
            if ok && ps.lead_exp == least {
                let part = |d: &crate::genfun::SeminormDescriptor| {
                    if d.lead_exp == least {
                        d.lead_sup.as_ref().map_or(Rational::zero(), |s| s.hi.clone())
                    } else {
                        Rational::zero()
                    }
                };
                let lo = ps.lead_sup.as_ref().map_or(Rational::zero(), |s| s.lo.clone());
                ok = lo <= part(&pf) + part(&pg);
            }
            Outcome::check(ok, || format!("f={f} g={g} beta={beta} l={l}"))
        }
        SeminormLaw::Homogeneous => {
            let f = smp.genfun(rng);
            let a = smp.gen.nonzero_net(rng, smp.model());
            let af = f.scale_by(&a)?;
            let (pf, paf) = (f.seminorm(beta, l), af.seminorm(beta, l));
            let ok = match (&pf.lead_exp, &paf.lead_exp) {
                (Valuation::Infinite, Valuation::Infinite) => true,
                (Valuation::Finite(v), Valuation::Finite(w)) => {
                    let va = a.valuation().finite().cloned().expect("nonzero");
                    // leading coefficient of a at ι = 1
                    let c: Rational = a.terms().iter().filter(|t| t.eps == va).map(|t| t.coeff.clone()).sum();
                    if c.is_zero() {
                        *w == &va + v
                    } else {
                        let (s, t) = (pf.lead_sup.expect("finite"), paf.lead_sup.expect("finite"));
                        let c = c.abs();
                        *w == &va + v && &c * &s.lo <= t.hi && t.lo <= &c * &s.hi
                    }
                }
                _ => false,
            };
            Outcome::check(ok, || format!("a={a} f={f} beta={beta} l={l}"))
        }
        SeminormLaw::ReverseTriangle => {
            let inner = ball.with_radius(&ball.r + Rational::one());
            let y = smp.member(rng, &inner, false);
            let d = smp.member(rng, &inner, false);
            let x = d.add(&y)?;
            // p(x) <= p(x − y) + p(y) and p(x − y) <= p(x) + p(y)
            let first = x.member(&ball);
            let second = x.sub(&y)?.member(&ball);
            let x_in = smp.member(rng, &inner, false);
            let third = x_in.sub(&y)?.member(&ball);
            let all = first.and(second).and(third);
            Outcome::expect_member(all, || format!("x={x} y={y} x'={x_in} {ball}"))
        }
        SeminormLaw::MultiplicativeBalls => {
            let inner = ball.with_radius((&ball.r + Rational::one()) / Rational::from_integer(BigInt::from(2)));
            let x = smp.member(rng, &inner, false);
            let y = smp.member(rng, &inner, false);
            Outcome::expect_member(x.mul(&y)?.member(&ball), || format!("x={x} y={y} {ball}"))
        }
    })
}

/// Random function whose leading exponent equals that of `f`.
fn same_lead(smp: &Sampler, rng: &mut Rng8, f: &GenFun) -> GenFun {
    let g = smp.genfun(rng);
    match (f.valuation().finite(), g.valuation().finite()) {
        (Some(v), Some(w)) => {
            let t = v - w;
            let raw = g
                .terms()
                .iter()
                .map(|term| GfTerm::new(term.poly.clone(), &term.eps + &t, term.iota.clone()))
                .collect();
            GenFun::normalize(g.model(), g.domain().clone(), raw)
        }
        _ => g,
    }
}

/// A generalized scalar `λ` with `0 <= λ <= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentScalar(ExactNet);

impl SegmentScalar {
    pub fn new(lambda: ExactNet) -> Result<Self> {
        let m = lambda.model();
        let le = |a: &ExactNet, b: &ExactNet| {
            matches!(order_compare(a, b), Ok(Comparison::Leq) | Ok(Comparison::Eq))
        };
        if le(&ExactNet::zero(m), &lambda) && le(&lambda, &ExactNet::one(m)) {
            Ok(SegmentScalar(lambda))
        } else {
            Err(Error::InvalidSegmentScalar(lambda.to_string()))
        }
    }

    pub fn value(&self) -> &ExactNet {
        &self.0
    }
}

/// Membership of `λx + (1 − λ)y` in `ball`.
pub fn gconvex_probe(x: &Element, y: &Element, lambda: &SegmentScalar, ball: &Ball) -> Result<Membership> {
    let l = Element::Scalar(lambda.0.clone());
    let rest = Element::Scalar(ExactNet::one(lambda.0.model()).try_sub(&lambda.0)?);
    let z = l.mul(x)?.add(&rest.mul(y)?)?;
    Ok(z.member(ball))
}

/// Random pairs of members of one ball, combined with each of the segment
/// scalars `0`, `1`, `1/2` and `α_1`.
pub fn gconvex_check(basis: Basis, samples: u64, seed: u64) -> AxiomReport {
    let m = basis.model();
    let lambdas: Vec<SegmentScalar> = [
        ExactNet::zero(m),
        ExactNet::one(m),
        ExactNet::constant(rat(1, 2), m),
        ExactNet::alpha(Rational::one(), m),
    ]
    .into_iter()
    .map(|l| SegmentScalar::new(l).expect("segment scalar"))
    .collect();
    run_samples("G-convex", basis.to_string(), samples, seed, |rng| {
        let smp = Sampler::new(basis, rng);
        let ball = smp.ball(rng);
        let x = smp.member(rng, &ball, false);
        let y = smp.member(rng, &ball, false);
        let mut verdict = Membership::Member;
        for l in &lambdas {
            match gconvex_probe(&x, &y, l, &ball) {
                Ok(v) => verdict = verdict.and(v),
                Err(e) => return Outcome::Fail(e.to_string()),
            }
        }
        Outcome::expect_member(verdict, || format!("x={x} y={y} {ball}"))
    })
}

/// Smallest integer `N >= 0` with `V(a) >= −N`.
pub fn moderateness_order(a: &ExactNet) -> BigInt {
    match a.valuation() {
        Valuation::Finite(v) => ceil(&-v).max(BigInt::zero()),
        Valuation::Infinite => BigInt::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::default_domain;
    use crate::rational::int;

    fn xe(k: usize, q: i64) -> GenFun {
        GenFun::simplified(default_domain(), [(Poly::monomial(int(1), k), int(q))])
    }

    #[test]
    fn vnp_and_dnp() {
        let f = xe(1, 2).try_add(&GenFun::simplified(default_domain(), [(Poly::one(), int(5))])).unwrap();
        assert_eq!(vnp(&f, 1, 0), Valuation::Finite(int(2)));
        assert_eq!(vnp(&GenFun::zero(Model::Simplified, default_domain()), 1, 3), Valuation::Infinite);
        assert_eq!(dnp(&f, &f, 1, 2).unwrap(), 0.0);
        let z = GenFun::zero(Model::Simplified, default_domain());
        assert!((dnp(&xe(1, 2), &z, 1, 0).unwrap() - (-2f64).exp()).abs() < 1e-15);
        // derivatives of x·ε² vanish beyond order one
        assert_eq!(vnp(&xe(1, 2), 1, 4), Valuation::Finite(int(2)));
    }

    #[test]
    fn axioms_hold_on_small_runs() {
        for basis in Basis::ALL {
            for axiom in Axiom::ALL {
                let rep = axiom_check(basis, axiom, 20, 3);
                assert!(rep.passed(), "{rep}: {:?}", rep.failures);
            }
        }
    }

    #[test]
    fn report_line_format() {
        let rep = axiom_check(Basis::Bs, Axiom::GaII, 1, 9);
        assert_eq!(rep.line(), "GA'_II B_s 1 0 0 9");
    }

    #[test]
    fn side_conditions() {
        let bad = MetricInclusion::NormBallInScalarBall {
            r: int(1),
            rho: Radius::Value(1.0),
        };
        assert!(metric_ball_equivalence(&bad, 1, 0).is_err());
        let ok = MetricInclusion::MetricBallInFunctionBall {
            l: 1,
            beta: 2,
            r: int(0),
            a: Radius::Value(0.5),
        };
        assert!(metric_ball_equivalence(&ok, 50, 1).unwrap().passed());
    }

    #[test]
    fn segment_scalars() {
        assert!(SegmentScalar::new(ExactNet::alpha(int(1), Model::Full)).is_ok());
        assert!(SegmentScalar::new(ExactNet::constant(int(2), Model::Simplified)).is_err());
        assert!(SegmentScalar::new(ExactNet::alpha(int(-1), Model::Simplified)).is_err());
    }

    #[test]
    fn convex_combination_endpoints() {
        let ball = Ball::scalar(int(2));
        let x = Element::Scalar(ExactNet::simplified([(rat(1, 2), int(2))]));
        let y = Element::Scalar(ExactNet::simplified([(int(1), int(3))]));
        let one = SegmentScalar::new(ExactNet::one(Model::Simplified)).unwrap();
        assert_eq!(gconvex_probe(&x, &y, &one, &ball).unwrap(), x.member(&ball));
    }

    #[test]
    fn lpdo_sequence_valuations() {
        let g = GenFun::full(
            default_domain(),
            [(Poly::monomial(int(1), 2), int(0), int(0)), (Poly::x(), int(1), int(0))],
        );
        let cert = converges_genfun(|n| lpdo_sequence(&g, n).unwrap(), &GenFun::zero(Model::Full, default_domain()), &[(1, 1)], 20)
            .unwrap();
        assert!(cert.converges && cert.strictly_increasing());
        assert_eq!(cert.table[20].1, Valuation::Finite(int(20)));
    }
}
