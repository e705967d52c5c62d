//! Generalized functions on an open interval with polynomial coefficients.
//!
//! A representative is `Σ p_k(x)·ε^{q_k}` (simplified) or
//! `Σ p_k(x)·ε^{a_k}·ι^{b_k}` (full). Seminorms `sup_{K_l} |∂^β f|` over the
//! closures `K_l` of a fixed exhaustion are computed from exact polynomial
//! suprema, and ball membership is decided from exact leading data.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::net::{ExactNet, Model, Term};
use crate::order::{lex_nonneg, strictly_positive_profile, within_alpha, Membership, Valuation};
use crate::poly::{Poly, SupEnclosure};
use crate::rational::{fmt_rat, rat, Rational};

/// Certified width of every polynomial supremum enclosure.
pub fn sup_tolerance() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u64.pow(13)))
}

/// Open interval `(lower, upper)`; `None` stands for an infinite end.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalDomain {
    lower: Option<Rational>,
    upper: Option<Rational>,
}

impl IntervalDomain {
    pub fn new(lower: Option<Rational>, upper: Option<Rational>) -> Result<Self> {
        if let (Some(a), Some(b)) = (&lower, &upper) {
            if a >= b {
                return Err(Error::InvalidDomain(format!("({}, {})", fmt_rat(a), fmt_rat(b))));
            }
        }
        Ok(IntervalDomain { lower, upper })
    }

    pub fn bounded(a: Rational, b: Rational) -> Result<Self> {
        Self::new(Some(a), Some(b))
    }

    pub fn real_line() -> Self {
        IntervalDomain {
            lower: None,
            upper: None,
        }
    }

    pub fn lower(&self) -> Option<&Rational> {
        self.lower.as_ref()
    }

    pub fn upper(&self) -> Option<&Rational> {
        self.upper.as_ref()
    }

    fn level(&self, m: &Rational) -> (Rational, Rational) {
        let inv = m.recip();
        let lo = match &self.lower {
            Some(a) => (a + &inv).max(-m.clone()),
            None => -m.clone(),
        };
        let hi = match &self.upper {
            Some(b) => (b - &inv).min(m.clone()),
            None => m.clone(),
        };
        (lo, hi)
    }

    /// Least offset `l0 >= 1` for which `Ω_0` is nonempty.
    pub fn exhaustion_offset(&self) -> u64 {
        (1u64..)
            .find(|&m| {
                let (lo, hi) = self.level(&Rational::from_integer(BigInt::from(m)));
                lo < hi
            })
            .expect("an open interval has a nonempty exhaustion level")
    }

    /// Closure of `Ω_l = {x ∈ Ω : |x| < l + l0, dist(x, ∂Ω) > 1/(l + l0)}`.
    pub fn exhaustion(&self, l: u64) -> (Rational, Rational) {
        let m = Rational::from_integer(BigInt::from(l + self.exhaustion_offset()));
        self.level(&m)
    }

    /// True iff the closed interval `[a, b]` is a compact subset of the domain.
    pub fn contains_compact(&self, a: &Rational, b: &Rational) -> bool {
        a <= b && self.lower.as_ref().is_none_or(|l| l < a) && self.upper.as_ref().is_none_or(|u| b < u)
    }
}

impl fmt::Display for IntervalDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.lower.as_ref().map_or("-inf".to_string(), fmt_rat);
        let hi = self.upper.as_ref().map_or("inf".to_string(), fmt_rat);
        write!(f, "({lo}, {hi})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GfTerm {
    pub poly: Poly,
    pub eps: Rational,
    pub iota: Rational,
}

impl GfTerm {
    pub fn new(poly: Poly, eps: Rational, iota: Rational) -> Self {
        GfTerm { poly, eps, iota }
    }
}

/// Canonical representative: nonzero polynomials, keys `(eps, iota)`
/// strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenFun {
    model: Model,
    domain: IntervalDomain,
    terms: Vec<GfTerm>,
}

impl GenFun {
    pub fn zero(model: Model, domain: IntervalDomain) -> Self {
        GenFun {
            model,
            domain,
            terms: Vec::new(),
        }
    }

    pub fn normalize(model: Model, domain: IntervalDomain, raw: Vec<GfTerm>) -> Self {
        let mut map: BTreeMap<(Rational, Rational), Poly> = BTreeMap::new();
        for t in raw {
            let iota = match model {
                Model::Simplified => Rational::zero(),
                Model::Full => t.iota,
            };
            let e = map.entry((t.eps, iota)).or_default();
            *e = &*e + &t.poly;
        }
        let terms = map
            .into_iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|((eps, iota), poly)| GfTerm { poly, eps, iota })
            .collect();
        GenFun { model, domain, terms }
    }

    /// Simplified representative from `(poly, eps_exp)` pairs.
    pub fn simplified(domain: IntervalDomain, raw: impl IntoIterator<Item = (Poly, Rational)>) -> Self {
        Self::normalize(
            Model::Simplified,
            domain,
            raw.into_iter().map(|(p, q)| GfTerm::new(p, q, Rational::zero())).collect(),
        )
    }

    pub fn full(domain: IntervalDomain, raw: impl IntoIterator<Item = (Poly, Rational, Rational)>) -> Self {
        Self::normalize(Model::Full, domain, raw.into_iter().map(|(p, a, b)| GfTerm::new(p, a, b)).collect())
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn domain(&self) -> &IntervalDomain {
        &self.domain
    }

    pub fn terms(&self) -> &[GfTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Replaces the domain (the representative's formula is unchanged).
    pub fn on_domain(&self, domain: IntervalDomain) -> Self {
        GenFun {
            domain,
            ..self.clone()
        }
    }

    fn check(&self, other: &GenFun) -> Result<()> {
        if self.model != other.model {
            return Err(Error::ModelMismatch {
                left: self.model,
                right: other.model,
            });
        }
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(self.domain.to_string(), other.domain.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &GenFun) -> Result<GenFun> {
        self.check(other)?;
        let raw = self.terms.iter().chain(&other.terms).cloned().collect();
        Ok(Self::normalize(self.model, self.domain.clone(), raw))
    }

    pub fn try_sub(&self, other: &GenFun) -> Result<GenFun> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &GenFun) -> Result<GenFun> {
        self.check(other)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                raw.push(GfTerm::new(&a.poly * &b.poly, &a.eps + &b.eps, &a.iota + &b.iota));
            }
        }
        Ok(Self::normalize(self.model, self.domain.clone(), raw))
    }

    pub fn neg(&self) -> GenFun {
        GenFun {
            terms: self
                .terms
                .iter()
                .map(|t| GfTerm::new(-&t.poly, t.eps.clone(), t.iota.clone()))
                .collect(),
            ..self.clone()
        }
    }

    /// Product with a generalized constant.
    pub fn scale_by(&self, a: &ExactNet) -> Result<GenFun> {
        self.try_mul(&embed_const(a, &self.domain))
    }

    /// `∂^β f`, termwise.
    pub fn derive(&self, beta: usize) -> GenFun {
        let raw = self
            .terms
            .iter()
            .map(|t| GfTerm::new(t.poly.nth_derivative(beta), t.eps.clone(), t.iota.clone()))
            .collect();
        Self::normalize(self.model, self.domain.clone(), raw)
    }

    /// `∫_M f` over `M = [a, b]` with `M` compactly contained in the domain.
    pub fn integrate(&self, a: &Rational, b: &Rational) -> Result<ExactNet> {
        if !self.domain.contains_compact(a, b) {
            return Err(Error::NotCompactlyContained(
                format!("[{}, {}]", fmt_rat(a), fmt_rat(b)),
                self.domain.to_string(),
            ));
        }
        Ok(ExactNet::normalize(
            self.model,
            self.terms
                .iter()
                .map(|t| Term::new(t.poly.integrate(a, b), t.eps.clone(), t.iota.clone()))
                .collect(),
        ))
    }

    /// The embedding `u ↦ [(φ, x) ↦ u(min(1, i(φ)), x)]`: `(p, q) ↦ (p, q, q)`.
    pub fn psi_embed(&self) -> Result<GenFun> {
        if self.model != Model::Simplified {
            return Err(Error::WrongModel {
                expected: Model::Simplified,
                got: self.model,
            });
        }
        Ok(GenFun {
            model: Model::Full,
            domain: self.domain.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| GfTerm::new(t.poly.clone(), t.eps.clone(), t.eps.clone()))
                .collect(),
        })
    }

    /// Least `ε`-exponent with a nonzero coefficient (infinite for zero).
    pub fn valuation(&self) -> Valuation {
        self.terms
            .first()
            .map_or(Valuation::Infinite, |t| Valuation::Finite(t.eps.clone()))
    }

    /// Descriptor of `‖f‖_{β,l}`.
    pub fn seminorm(&self, beta: usize, l: u64) -> SeminormDescriptor {
        let (lo, hi) = self.domain.exhaustion(l);
        let tol = sup_tolerance();
        let d = self.derive(beta);
        let terms: Vec<SeminormTerm> = d
            .terms
            .par_iter()
            .map(|t| SeminormTerm {
                sup: t.poly.sup_abs(&lo, &hi, &tol),
                eps: t.eps.clone(),
                iota: t.iota.clone(),
            })
            .collect();
        let lead_exp = d.valuation();
        let lead_sup = d.terms.first().map(|first| {
            let group = d
                .terms
                .iter()
                .filter(|t| t.eps == first.eps)
                .fold(Poly::zero(), |acc, t| &acc + &t.poly);
            group.sup_abs(&lo, &hi, &tol)
        });
        SeminormDescriptor {
            lead_exp,
            lead_sup,
            terms,
            compact: (lo, hi),
        }
    }

    /// Exact membership in `W^β_{l,r}`: the bound holds for every `σ <= β`.
    pub fn ball_member(&self, beta: usize, l: u64, r: &Rational) -> Membership {
        let (lo, hi) = self.domain.exhaustion(l);
        (0..=beta).fold(Membership::Member, |acc, sigma| {
            if acc == Membership::NotMember {
                return acc;
            }
            acc.and(seminorm_within(&self.derive(sigma), &lo, &hi, r))
        })
    }
}

/// Decides `sup_K |g(ε, x)| <= ι^r ε^r + ε^b` for all `b`, eventually in `ε`
/// and for every `ι > 0`.
fn seminorm_within(g: &GenFun, lo: &Rational, hi: &Rational, r: &Rational) -> Membership {
    let Some(first) = g.terms.first() else {
        return Membership::Member;
    };
    // x-independent: the supremum is the absolute value of a scalar net
    if g.terms.iter().all(|t| t.poly.is_constant()) {
        let lambda = ExactNet::normalize(
            g.model,
            g.terms.iter().map(|t| Term::new(t.poly.coeff(0), t.eps.clone(), t.iota.clone())).collect(),
        );
        return Membership::from_bool(within_alpha(&lambda, r));
    }
    match first.eps.cmp(r) {
        Ordering::Greater => return Membership::Member,
        Ordering::Less => return Membership::NotMember,
        Ordering::Equal => {}
    }
    // groups: (eps, [(iota_exp - r, poly)]) ; simplified nets use iota 0 = r - r
    let shift = match g.model {
        Model::Simplified => Rational::zero(),
        Model::Full => r.clone(),
    };
    let mut groups: Vec<Vec<(Rational, Poly)>> = Vec::new();
    let mut last: Option<&Rational> = None;
    for t in &g.terms {
        if last != Some(&t.eps) {
            groups.push(Vec::new());
            last = Some(&t.eps);
        }
        groups.last_mut().unwrap().push((&t.iota - &shift, t.poly.clone()));
    }
    let lead = &groups[0];
    // a lead group carrying any ι-power other than ι^r is unbounded relative
    // to ι^r as ι → 0 or ι → ∞ at all but finitely many x
    if lead.len() != 1 || !lead[0].0.is_zero() {
        return Membership::NotMember;
    }
    let p = &lead[0].1;
    match p.sup_abs_cmp(lo, hi, &Rational::one()) {
        Ordering::Less => Membership::Member,
        Ordering::Greater => Membership::NotMember,
        Ordering::Equal => boundary(p, &groups[1..], lo, hi),
    }
}

/// Behaviour of an ι-profile `Σ c_b ι^b` (times the sign of the lead) at a
/// maximizer of the lead polynomial.
enum Profile {
    PositiveSomewhere,
    NegativeEverywhere,
    Vanishes,
    Undecided,
}

fn profile_at(group: &[(Rational, Poly)], s: i8, point: &crate::poly::RealRoot) -> Profile {
    let sign_s = Rational::from_integer(BigInt::from(s));
    if let Some(x) = point.as_rational() {
        let coeffs: Vec<(Rational, Rational)> = group
            .iter()
            .map(|(b, p)| (&sign_s * p.eval(x), b.clone()))
            .filter(|(c, _)| !c.is_zero())
            .collect();
        return classify_profile(&coeffs);
    }
    let signs: Vec<i8> = group.iter().map(|(_, p)| s * point.sign_of(p)).filter(|&v| v != 0).collect();
    if signs.is_empty() {
        Profile::Vanishes
    } else if signs.iter().all(|&v| v < 0) {
        Profile::NegativeEverywhere
    } else if signs.iter().all(|&v| v > 0) {
        Profile::PositiveSomewhere
    } else {
        Profile::Undecided
    }
}

fn classify_profile(coeffs: &[(Rational, Rational)]) -> Profile {
    if coeffs.is_empty() {
        return Profile::Vanishes;
    }
    let neg: Vec<(Rational, Rational)> = coeffs.iter().map(|(c, b)| (-c, b.clone())).collect();
    if !lex_nonneg(std::slice::from_ref(&neg)) {
        Profile::PositiveSomewhere
    } else if strictly_positive_profile(&neg) {
        Profile::NegativeEverywhere
    } else {
        Profile::Undecided
    }
}

/// Boundary case `sup_K |p| = 1`: the tail decides at the maximizers.
fn boundary(p: &Poly, tail: &[Vec<(Rational, Poly)>], lo: &Rational, hi: &Rational) -> Membership {
    if tail.is_empty() {
        return Membership::Member;
    }
    match p.level_points(lo, hi, &Rational::one()) {
        // |p| ≡ 1: every point maximizes; need sup_x s·T(x) <= 0 eventually
        None => {
            let s = if p.coeff(0).is_positive() { 1i8 } else { -1 };
            constant_lead_tail(s, tail, lo, hi)
        }
        Some(points) => {
            let mut verdict = Membership::Member;
            for (z, s) in &points {
                let here = match profile_at(&tail[0], *s, z) {
                    Profile::PositiveSomewhere => Membership::NotMember,
                    Profile::NegativeEverywhere => Membership::Member,
                    Profile::Undecided => Membership::Unknown,
                    // the value at z still exceeds the radius if a later group
                    // is positive there; otherwise first-order effects decide
                    Profile::Vanishes => tail[1..]
                        .iter()
                        .map(|g| profile_at(g, *s, z))
                        .find(|p| !matches!(p, Profile::Vanishes))
                        .map_or(Membership::Unknown, |p| match p {
                            Profile::PositiveSomewhere => Membership::NotMember,
                            _ => Membership::Unknown,
                        }),
                };
                verdict = verdict.and(here);
                if verdict == Membership::NotMember {
                    break;
                }
            }
            verdict
        }
    }
}

/// Lead `±1·ε^r` constant on `K`: compare `sup_x s·T(x, ε)` with zero.
fn constant_lead_tail(s: i8, tail: &[Vec<(Rational, Poly)>], lo: &Rational, hi: &Rational) -> Membership {
    let first = &tail[0];
    if first.len() != 1 {
        return Membership::Unknown;
    }
    let q = first[0].1.scale(&Rational::from_integer(BigInt::from(s)));
    if !(-&q).is_nonneg_on(lo, hi) {
        return Membership::NotMember;
    }
    let zeros = q.roots_in(lo, hi);
    if zeros.is_empty() {
        return Membership::Member;
    }
    let Some(next) = tail.get(1) else {
        return Membership::Member;
    };
    let mut verdict = Membership::Member;
    for z in &zeros {
        let here = match profile_at(next, s, z) {
            Profile::PositiveSomewhere => Membership::NotMember,
            Profile::NegativeEverywhere => Membership::Member,
            Profile::Vanishes | Profile::Undecided => Membership::Unknown,
        };
        verdict = verdict.and(here);
    }
    verdict
}

/// The constant generalized function `x ↦ λ`.
pub fn embed_const(lambda: &ExactNet, domain: &IntervalDomain) -> GenFun {
    GenFun::normalize(
        lambda.model(),
        domain.clone(),
        lambda
            .terms()
            .iter()
            .map(|t| GfTerm::new(Poly::constant(t.coeff.clone()), t.eps.clone(), t.iota.clone()))
            .collect(),
    )
}

/// `P f = Σ a_α ∂^α f`.
pub fn lpdo_apply(coeffs: &[(GenFun, usize)], f: &GenFun) -> Result<GenFun> {
    let mut acc = GenFun::zero(f.model, f.domain.clone());
    for (a, alpha) in coeffs {
        acc = acc.try_add(&a.try_mul(&f.derive(*alpha))?)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeminormTerm {
    pub sup: SupEnclosure,
    pub eps: Rational,
    pub iota: Rational,
}

/// Leading data and term bounds of `ε ↦ sup_{K_l} |∂^β f(ε, ·)|`.
///
/// For full representatives `lead_sup` is the supremum of the leading
/// `ε`-group evaluated at `ι = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeminormDescriptor {
    pub lead_exp: Valuation,
    pub lead_sup: Option<SupEnclosure>,
    pub terms: Vec<SeminormTerm>,
    pub compact: (Rational, Rational),
}

impl SeminormDescriptor {
    pub fn is_infinite(&self) -> bool {
        self.lead_exp.is_infinite()
    }
}

impl fmt::Display for SeminormDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lead_exp {}", self.lead_exp)?;
        if let Some(s) = &self.lead_sup {
            write!(f, " lead_sup {:.15}", s.mid_f64())?;
        }
        write!(f, " on [{}, {}]", fmt_rat(&self.compact.0), fmt_rat(&self.compact.1))
    }
}

impl fmt::Display for GenFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*e^({})", t.poly, fmt_rat(&t.eps))?;
            if self.model == Model::Full {
                write!(f, "*i^({})", fmt_rat(&t.iota))?;
            }
        }
        Ok(())
    }
}

/// `(−2, 2)`, a convenient default domain.
pub fn default_domain() -> IntervalDomain {
    IntervalDomain::bounded(rat(-2, 1), rat(2, 1)).expect("valid interval")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn x_pow(k: usize) -> Poly {
        Poly::monomial(int(1), k)
    }

    fn dom(a: i64, b: i64) -> IntervalDomain {
        IntervalDomain::bounded(int(a), int(b)).unwrap()
    }

    fn gf(d: &IntervalDomain, terms: Vec<(Poly, i64)>) -> GenFun {
        GenFun::simplified(d.clone(), terms.into_iter().map(|(p, q)| (p, int(q))))
    }

    #[test]
    fn exhaustion_rule() {
        let half_line = IntervalDomain::new(Some(int(0)), None).unwrap();
        assert_eq!(half_line.exhaustion_offset(), 2);
        assert_eq!(half_line.exhaustion(0), (rat(1, 2), int(2)));
        let unit = dom(-1, 1);
        assert_eq!(unit.exhaustion_offset(), 2);
        assert_eq!(unit.exhaustion(3), (rat(-4, 5), rat(4, 5)));
        assert_eq!(dom(-2, 2).exhaustion(1), (rat(-3, 2), rat(3, 2)));
        for l in 0..10 {
            let (a, b) = unit.exhaustion(l);
            let (c, d) = unit.exhaustion(l + 1);
            assert!(c < a && b < d);
        }
    }

    #[test]
    fn calculus() {
        let d = dom(-2, 2);
        let f = gf(&d, vec![(x_pow(2), 1)]);
        assert_eq!(f.derive(1), gf(&d, vec![(x_pow(1).scale(&int(2)), 1)]));
        let g = gf(&d, vec![(x_pow(1), 1)]);
        assert_eq!(g.try_mul(&g).unwrap(), gf(&d, vec![(x_pow(2), 2)]));
        let h = gf(&d, vec![(x_pow(1), 2)]);
        assert_eq!(h.integrate(&int(0), &int(1)).unwrap(), ExactNet::simplified([(rat(1, 2), int(2))]));
        assert!(h.integrate(&int(0), &int(2)).is_err());
        assert!(GenFun::zero(Model::Simplified, d.clone()).integrate(&int(0), &int(1)).unwrap().is_zero());
    }

    #[test]
    fn lpdo() {
        let d = dom(-2, 2);
        let f = gf(&d, vec![(x_pow(1), 1)]);
        let p = vec![(gf(&d, vec![(x_pow(1), 0)]), 1), (gf(&d, vec![(Poly::one(), 0)]), 0)];
        assert_eq!(lpdo_apply(&p, &f).unwrap(), gf(&d, vec![(x_pow(1).scale(&int(2)), 1)]));
        assert!(lpdo_apply(&[], &f).unwrap().is_zero());
    }

    #[test]
    fn seminorm_data() {
        let d = dom(-2, 2);
        let f = gf(&d, vec![(x_pow(2), 1)]);
        let s = f.seminorm(0, 1);
        assert_eq!(s.lead_exp, Valuation::Finite(int(1)));
        let sup = s.lead_sup.unwrap();
        assert!(sup.lo <= rat(9, 4) && rat(9, 4) <= sup.hi);
        assert!(GenFun::zero(Model::Simplified, d.clone()).seminorm(0, 1).is_infinite());
        let c = embed_const(&ExactNet::simplified([(int(3), int(1))]), &d);
        assert!(c.seminorm(1, 1).is_infinite());
    }

    #[test]
    fn ball_membership() {
        let d = dom(-2, 2);
        assert_eq!(gf(&d, vec![(x_pow(1), 3)]).ball_member(0, 1, &int(2)), Membership::Member);
        let f = gf(&d, vec![(x_pow(1), 2)]);
        assert_eq!(f.derive(1).ball_member(0, 1, &int(2)), Membership::Member);
        assert_eq!(f.ball_member(1, 1, &int(2)), Membership::NotMember);
        assert_eq!(GenFun::zero(Model::Simplified, d.clone()).ball_member(3, 2, &int(-4)), Membership::Member);
    }

    #[test]
    fn boundary_cases() {
        let d = dom(-2, 2); // K_1 = [-3/2, 3/2]
        // constant lead 1·ε^2 with tail -x^2 ε^3: sup = ε^2, member
        let f = gf(&d, vec![(Poly::one(), 2), (x_pow(2).scale(&int(-1)), 3)]);
        assert_eq!(f.ball_member(0, 1, &int(2)), Membership::Member);
        // tail x ε^3 is positive somewhere: exceeds the radius
        let g = gf(&d, vec![(Poly::one(), 2), (x_pow(1), 3)]);
        assert_eq!(g.ball_member(0, 1, &int(2)), Membership::NotMember);
        // lead (2/3)x reaches |.| = 1 at both endpoints; the tail -x^3 pulls
        // the value back toward zero at each of them
        let h = gf(&d, vec![(x_pow(1).scale(&rat(2, 3)), 2), (x_pow(3).scale(&int(-1)), 3)]);
        assert_eq!(h.ball_member(0, 1, &int(2)), Membership::Member);
        let k = gf(&d, vec![(x_pow(1).scale(&rat(2, 3)), 2), (x_pow(3), 3)]);
        assert_eq!(k.ball_member(0, 1, &int(2)), Membership::NotMember);
        // -x^2 helps at x = 3/2 but pushes past the radius at x = -3/2
        let m = gf(&d, vec![(x_pow(1).scale(&rat(2, 3)), 2), (x_pow(2).scale(&int(-1)), 3)]);
        assert_eq!(m.ball_member(0, 1, &int(2)), Membership::NotMember);
    }

    #[test]
    fn full_model_balls() {
        let d = dom(-2, 2);
        let f = gf(&d, vec![(x_pow(1), 2)]);
        let pf = f.psi_embed().unwrap();
        for (beta, r) in [(0, 2), (1, 2), (0, 1), (2, 3)] {
            assert_eq!(pf.ball_member(beta, 1, &int(r)), f.ball_member(beta, 1, &int(r)));
        }
        // ι-power other than ι^r in the lead group is not bounded by ι^r
        let g = GenFun::full(d.clone(), [(Poly::constant(rat(1, 2)), int(2), int(1))]);
        assert_eq!(g.ball_member(0, 1, &int(2)), Membership::NotMember);
    }

    #[test]
    fn text_form() {
        let d = dom(-2, 2);
        let f = gf(&d, vec![(x_pow(2), 1)]);
        assert_eq!(f.to_string(), "(1*x^2)*e^(1)");
        assert_eq!(f.psi_embed().unwrap().to_string(), "(1*x^2)*e^(1)*i^(1)");
        assert_eq!(d.to_string(), "(-2, 2)");
        assert_eq!(IntervalDomain::real_line().to_string(), "(-inf, inf)");
    }
}
