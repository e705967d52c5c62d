//! Canonical exact representatives of generalized numbers.
//!
//! A simplified net is a finite sum `Σ c·ε^q`; a full net is a finite sum
//! `Σ c·ε^a·ι^b`, where `ι` is the diameter `i(φ)` of the mollifier whose
//! dilates `φ_ε` the net is evaluated on. Both live in one type, [`ExactNet`],
//! tagged with a [`Model`]; simplified terms carry `ι`-exponent zero.
//!
//! Nets are identified when they agree for all sufficiently small `ε`, so the
//! only null exact net is the empty sum.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::Valuation;
use crate::rational::{fmt_rat, ln_abs, Rational};
use crate::value::{sum_values, NetValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    Simplified,
    Full,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Simplified => "simplified",
            Model::Full => "full",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub eps: Rational,
    pub iota: Rational,
}

impl Term {
    pub fn new(coeff: Rational, eps: Rational, iota: Rational) -> Self {
        Term { coeff, eps, iota }
    }

    fn key_cmp(&self, other: &Term) -> Ordering {
        self.eps.cmp(&other.eps).then_with(|| self.iota.cmp(&other.iota))
    }
}

/// Exact representative in canonical form: nonzero coefficients, keys
/// `(eps, iota)` strictly increasing in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactNet {
    model: Model,
    terms: Vec<Term>,
}

impl ExactNet {
    pub fn zero(model: Model) -> Self {
        ExactNet {
            model,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: Rational, model: Model) -> Self {
        Self::normalize(model, vec![Term::new(c, Rational::zero(), Rational::zero())])
    }

    pub fn one(model: Model) -> Self {
        Self::constant(Rational::one(), model)
    }

    /// Canonicalizes a raw term list: merges equal keys, drops zero
    /// coefficients and sorts. For the simplified model the `ι`-exponents are
    /// ignored (forced to zero).
    pub fn normalize(model: Model, raw: Vec<Term>) -> Self {
        let mut merged: BTreeMap<(Rational, Rational), Rational> = BTreeMap::new();
        for t in raw {
            let iota = match model {
                Model::Simplified => Rational::zero(),
                Model::Full => t.iota,
            };
            *merged.entry((t.eps, iota)).or_insert_with(Rational::zero) += t.coeff;
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((eps, iota), coeff)| Term { coeff, eps, iota })
            .collect();
        ExactNet { model, terms }
    }

    /// Simplified net from `(coeff, eps_exp)` pairs.
    pub fn simplified<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        Self::normalize(
            Model::Simplified,
            raw.into_iter()
                .map(|(c, q)| Term::new(c, q, Rational::zero()))
                .collect(),
        )
    }

    /// Full net from `(coeff, eps_exp, iota_exp)` triples.
    pub fn full<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational, Rational)>,
    {
        Self::normalize(
            Model::Full,
            raw.into_iter().map(|(c, a, b)| Term::new(c, a, b)).collect(),
        )
    }

    /// The canonical unit `α_r`: `ε^r` (simplified) or `ε^r·ι^r` (full),
    /// the latter being `i(φ_ε)^r = (ε·i(φ))^r`.
    pub fn alpha(r: Rational, model: Model) -> Self {
        let iota = match model {
            Model::Simplified => Rational::zero(),
            Model::Full => r.clone(),
        };
        ExactNet {
            model,
            terms: vec![Term::new(Rational::one(), r, iota)],
        }
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Least `ε`-exponent; infinite exactly for the zero net.
    pub fn valuation(&self) -> Valuation {
        match self.terms.first() {
            Some(t) => Valuation::Finite(t.eps.clone()),
            None => Valuation::Infinite,
        }
    }

    /// Terms grouped by `ε`-exponent, ascending; each group lists
    /// `(coeff, iota_exp)` ascending in `iota_exp`.
    pub fn eps_groups(&self) -> Vec<(Rational, Vec<(Rational, Rational)>)> {
        let mut out: Vec<(Rational, Vec<(Rational, Rational)>)> = Vec::new();
        for t in &self.terms {
            match out.last_mut() {
                Some((e, g)) if *e == t.eps => g.push((t.coeff.clone(), t.iota.clone())),
                _ => out.push((t.eps.clone(), vec![(t.coeff.clone(), t.iota.clone())])),
            }
        }
        out
    }

    fn check_model(&self, other: &ExactNet) -> Result<()> {
        if self.model != other.model {
            return Err(Error::ModelMismatch {
                left: self.model,
                right: other.model,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ExactNet) -> Result<ExactNet> {
        self.check_model(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &ExactNet) -> Result<ExactNet> {
        self.check_model(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &ExactNet, negate_other: bool) -> ExactNet {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let take_other = |t: &Term| {
            if negate_other {
                Term::new(-&t.coeff, t.eps.clone(), t.iota.clone())
            } else {
                t.clone()
            }
        };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.key_cmp(b) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(take_other(b));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a.coeff - &b.coeff
                    } else {
                        &a.coeff + &b.coeff
                    };
                    if !c.is_zero() {
                        out.push(Term::new(c, a.eps.clone(), a.iota.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(take_other));
        ExactNet {
            model: self.model,
            terms: out,
        }
    }

    pub fn try_mul(&self, other: &ExactNet) -> Result<ExactNet> {
        self.check_model(other)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                raw.push(Term::new(
                    &a.coeff * &b.coeff,
                    &a.eps + &b.eps,
                    &a.iota + &b.iota,
                ));
            }
        }
        Ok(Self::normalize(self.model, raw))
    }

    pub fn scale(&self, c: &Rational) -> ExactNet {
        if c.is_zero() {
            return Self::zero(self.model);
        }
        ExactNet {
            model: self.model,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.eps.clone(), t.iota.clone()))
                .collect(),
        }
    }

    /// Multiplies by `ε^a·ι^b` (`b` ignored for simplified nets).
    pub fn shift(&self, a: &Rational, b: &Rational) -> ExactNet {
        let b = match self.model {
            Model::Simplified => Rational::zero(),
            Model::Full => b.clone(),
        };
        ExactNet {
            model: self.model,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.coeff.clone(), &t.eps + a, &t.iota + &b))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> ExactNet {
        let mut acc = Self::one(self.model);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse of a single-term net.
    pub fn term_inverse(&self) -> Option<ExactNet> {
        match self.terms.as_slice() {
            [t] => Some(ExactNet {
                model: self.model,
                terms: vec![Term::new(t.coeff.recip(), -&t.eps, -&t.iota)],
            }),
            _ => None,
        }
    }

    /// Canonical embedding of simplified numbers into the full model:
    /// `λ ↦ [φ ↦ λ(min(1, i(φ)))]`. Along `φ_ε` with `i(φ) = ι` and
    /// `ε < 1/ι` this is `Σ c·(ει)^q`, so `(c, q) ↦ (c, q, q)`.
    pub fn jm_embed(&self) -> Result<ExactNet> {
        if self.model != Model::Simplified {
            return Err(Error::WrongModel {
                expected: Model::Simplified,
                got: self.model,
            });
        }
        Ok(ExactNet {
            model: Model::Full,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.coeff.clone(), t.eps.clone(), t.eps.clone()))
                .collect(),
        })
    }

    /// Log-domain evaluation at `ε = exp(ln_eps)` (and `ι = exp(ln_iota)`).
    pub fn eval_log(&self, ln_eps: f64, ln_iota: Option<f64>) -> Result<NetValue> {
        let ln_iota = match (self.model, ln_iota) {
            (Model::Full, None) => return Err(Error::MissingIota),
            (Model::Full, Some(l)) => l,
            (Model::Simplified, _) => 0.0,
        };
        let vals: Vec<NetValue> = self
            .terms
            .iter()
            .map(|t| {
                let sign = if t.coeff.is_negative() { -1 } else { 1 };
                let mut log = ln_abs(&t.coeff) + crate::rational::to_f64(&t.eps) * ln_eps;
                if !t.iota.is_zero() {
                    log += crate::rational::to_f64(&t.iota) * ln_iota;
                }
                NetValue::from_log(sign, log)
            })
            .collect();
        Ok(sum_values(&vals))
    }

    pub fn eval(&self, eps: &NetValue, iota: Option<&NetValue>) -> Result<NetValue> {
        if eps.sign <= 0 || iota.is_some_and(|i| i.sign <= 0) {
            return Err(Error::NonPositiveParameter);
        }
        self.eval_log(eps.log_abs, iota.map(|i| i.log_abs))
    }
}

impl Neg for &ExactNet {
    type Output = ExactNet;

    fn neg(self) -> ExactNet {
        ExactNet {
            model: self.model,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-&t.coeff, t.eps.clone(), t.iota.clone()))
                .collect(),
        }
    }
}

impl Neg for ExactNet {
    type Output = ExactNet;

    fn neg(self) -> ExactNet {
        -&self
    }
}

// Operator forms panic on a model mismatch; use the `try_*` methods when the
// models are not known to agree.
macro_rules! net_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&ExactNet> for &ExactNet {
            type Output = ExactNet;

            fn $method(self, rhs: &ExactNet) -> ExactNet {
                self.$try(rhs).expect("exact net operands of different models")
            }
        }

        impl $trait<ExactNet> for ExactNet {
            type Output = ExactNet;

            fn $method(self, rhs: ExactNet) -> ExactNet {
                (&self).$method(&rhs)
            }
        }
    };
}

net_binop!(Add, add, try_add);
net_binop!(Sub, sub, try_sub);
net_binop!(Mul, mul, try_mul);

impl fmt::Display for ExactNet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*e^({})", fmt_rat(&t.coeff), fmt_rat(&t.eps))?;
            if self.model == Model::Full {
                write!(f, "*i^({})", fmt_rat(&t.iota))?;
            }
        }
        Ok(())
    }
}
