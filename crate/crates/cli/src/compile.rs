//! Lowering of parsed expressions to exact nets, generalized functions or
//! sampled evaluators.

use std::fmt;

use num_traits::{One, Zero};
use sharp_core::genfun::{embed_const, GenFun, GfTerm, IntervalDomain};
use sharp_core::sampled::SymExpr;
use sharp_core::{ExactNet, Model, Poly, Rational, SampledNet};

use crate::dsl::Expr;

#[derive(Clone)]
pub enum Value {
    Exact(ExactNet),
    Fun(GenFun),
    Sampled(SampledNet),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(x) => write!(f, "{x}"),
            Value::Fun(g) => write!(f, "{g}"),
            Value::Sampled(s) => f.write_str(s.label()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompileError(pub String);

impl fmt::Display for CompileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CompileError {}

impl From<sharp_core::Error> for CompileError {
    fn from(e: sharp_core::Error) -> Self {
        CompileError(e.to_string())
    }
}

pub fn compile(e: &Expr, domain: &IntervalDomain) -> Result<Value, CompileError> {
    compile_in(e, domain, e.has_iota())
}

/// Like [`compile`], but exact results use the full model when `full` is set
/// even if `e` never mentions `i` (so `e^(q)` reads as `ε^q·ι^0`).
pub fn compile_in(e: &Expr, domain: &IntervalDomain, full: bool) -> Result<Value, CompileError> {
    if e.has_func() {
        if e.has_x() {
            return Err(CompileError(
                "'x' cannot be combined with sin/cos/exp/log: sampled generalized functions are not supported".into(),
            ));
        }
        return Ok(Value::Sampled(SampledNet::from_expr(e.to_string(), symbolic(e))));
    }
    let model = if full || e.has_iota() { Model::Full } else { Model::Simplified };
    if e.has_x() {
        Ok(Value::Fun(genfun(e, model, domain)?))
    } else {
        Ok(Value::Exact(exact(e, model)?))
    }
}

fn symbolic(e: &Expr) -> SymExpr {
    match e {
        Expr::Num(q) => SymExpr::Const(q.clone()),
        Expr::Eps(q) => SymExpr::EpsPow(q.clone()),
        Expr::Iota(q) => SymExpr::IotaPow(q.clone()),
        Expr::X(_) => unreachable!("rejected before lowering"),
        Expr::Apply(f, a) => SymExpr::Apply(*f, Box::new(symbolic(a))),
        Expr::Group(a) => symbolic(a),
        Expr::Sum(first, rest) => {
            let mut v = vec![symbolic(first)];
            for (neg, t) in rest {
                let s = symbolic(t);
                v.push(if *neg { SymExpr::Neg(Box::new(s)) } else { s });
            }
            SymExpr::Sum(v)
        }
        Expr::Product(v) => SymExpr::Product(v.iter().map(symbolic).collect()),
    }
}

fn exact(e: &Expr, m: Model) -> Result<ExactNet, CompileError> {
    Ok(match e {
        Expr::Num(q) => ExactNet::constant(q.clone(), m),
        Expr::Eps(q) => ExactNet::normalize(m, vec![sharp_core::Term::new(Rational::one(), q.clone(), Rational::zero())]),
        Expr::Iota(q) => ExactNet::normalize(m, vec![sharp_core::Term::new(Rational::one(), Rational::zero(), q.clone())]),
        Expr::Group(a) => exact(a, m)?,
        Expr::Sum(first, rest) => {
            let mut acc = exact(first, m)?;
            for (neg, t) in rest {
                let t = exact(t, m)?;
                acc = if *neg { acc.try_sub(&t)? } else { acc.try_add(&t)? };
            }
            acc
        }
        Expr::Product(v) => {
            let mut acc = ExactNet::one(m);
            for t in v {
                acc = acc.try_mul(&exact(t, m)?)?;
            }
            acc
        }
        Expr::X(_) | Expr::Apply(..) => unreachable!("routed elsewhere"),
    })
}

fn genfun(e: &Expr, m: Model, d: &IntervalDomain) -> Result<GenFun, CompileError> {
    let single = |p: Poly, a: Rational, b: Rational| GenFun::normalize(m, d.clone(), vec![GfTerm::new(p, a, b)]);
    Ok(match e {
        Expr::Num(q) => single(Poly::constant(q.clone()), Rational::zero(), Rational::zero()),
        Expr::Eps(q) => single(Poly::one(), q.clone(), Rational::zero()),
        Expr::Iota(q) => single(Poly::one(), Rational::zero(), q.clone()),
        Expr::X(k) => single(Poly::monomial(Rational::one(), k.unwrap_or(1) as usize), Rational::zero(), Rational::zero()),
        Expr::Group(a) => genfun(a, m, d)?,
        Expr::Sum(first, rest) => {
            let mut acc = genfun(first, m, d)?;
            for (neg, t) in rest {
                let t = genfun(t, m, d)?;
                acc = if *neg { acc.try_sub(&t)? } else { acc.try_add(&t)? };
            }
            acc
        }
        Expr::Product(v) => {
            let mut acc = single(Poly::one(), Rational::zero(), Rational::zero());
            for t in v {
                acc = acc.try_mul(&genfun(t, m, d)?)?;
            }
            acc
        }
        Expr::Apply(..) => unreachable!("routed elsewhere"),
    })
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Exact(_) => "generalized number",
            Value::Fun(_) => "generalized function",
            Value::Sampled(_) => "sampled net",
        }
    }

    pub fn exact(&self) -> Result<&ExactNet, CompileError> {
        match self {
            Value::Exact(x) => Ok(x),
            other => Err(CompileError(format!("expected an exact generalized number, got a {}", other.kind()))),
        }
    }

    /// Exact scalars are embedded as constant functions on `domain`.
    pub fn genfun(&self, domain: &IntervalDomain) -> Result<GenFun, CompileError> {
        match self {
            Value::Exact(x) => Ok(embed_const(x, domain)),
            Value::Fun(g) => Ok(g.clone()),
            Value::Sampled(_) => Err(CompileError("expected a generalized function, got a sampled net".into())),
        }
    }

    pub fn sampled(&self) -> Result<SampledNet, CompileError> {
        match self {
            Value::Exact(x) => Ok(SampledNet::from_exact(x)),
            Value::Sampled(s) => Ok(s.clone()),
            Value::Fun(_) => Err(CompileError("expected a generalized number, got a generalized function".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;
    use sharp_core::genfun::default_domain;
    use sharp_core::rational::{int, rat};

    fn c(s: &str) -> Value {
        compile(&parse(s).unwrap(), &default_domain()).unwrap()
    }

    #[test]
    fn exact_numbers() {
        let Value::Exact(x) = c("3*e^(1/2) - 2*e^(3)") else { panic!() };
        assert_eq!(x, ExactNet::simplified([(int(3), rat(1, 2)), (int(-2), int(3))]));
        let Value::Exact(y) = c("(e^(1) + 1)*i^(1)") else { panic!() };
        assert_eq!(y, ExactNet::full([(int(1), int(1), int(1)), (int(1), int(0), int(1))]));
        let Value::Exact(z) = c("0") else { panic!() };
        assert!(z.is_zero());
    }

    #[test]
    fn functions_and_sampled() {
        let Value::Fun(g) = c("x^2*e^(1)") else { panic!() };
        assert_eq!(g, GenFun::simplified(default_domain(), [(Poly::monomial(int(1), 2), int(1))]));
        let Value::Sampled(s) = c("i^(1)*sin(i^(-1))") else { panic!() };
        assert!(s.is_full());
        assert!(compile(&parse("x*sin(e^(1))").unwrap(), &default_domain()).is_err());
    }
}
