//! Worked examples for each public operation.

use num_traits::{One, Zero};

use sharp_core::genfun::{default_domain, embed_const, lpdo_apply, GenFun, IntervalDomain};
use sharp_core::net::{ExactNet, Model, Term};
use sharp_core::order::{
    abs, abs_simplified, nonneg_representative, order_compare, proot, q_positivity, scalar_ball_member, sharp_dist,
    sharp_norm, BallSpec, Comparison, Membership, OrderVerdict, Root, Valuation,
};
use sharp_core::poly::Poly;
use sharp_core::rational::{int, rat, Rational};
use sharp_core::sampled::{
    estimate_valuation, falsify_order, null_estimate, oracle_ball_member, Direction, EstimateVerdict, Falsification,
    GridConfig, Iota, OracleVerdict, SampledNet,
};
use sharp_core::topology::{converges_scalar, dnp, vnp};
use sharp_core::value::NetValue;

fn s(terms: &[(Rational, Rational)]) -> ExactNet {
    ExactNet::simplified(terms.iter().cloned())
}

fn xe(c: Rational, k: usize, q: Rational) -> GenFun {
    GenFun::simplified(default_domain(), [(Poly::monomial(c, k), q)])
}

fn ball(model: Model, r: Rational) -> BallSpec {
    BallSpec::new(model, r)
}

#[test]
fn normalize_merges_and_cancels() {
    let x = s(&[(int(1), int(2)), (int(2), int(2)), (int(0), int(5))]);
    assert_eq!(x, s(&[(int(3), int(2))]));
    assert!(s(&[]).is_zero());
    assert!(s(&[(int(1), int(3)), (int(-1), int(3))]).is_zero());
}

#[test]
fn ring_operations() {
    let e = s(&[(int(1), int(1))]);
    assert_eq!(&e + &e, s(&[(int(2), int(1))]));
    let a = s(&[(int(2), rat(1, 2))]);
    let b = s(&[(int(3), rat(1, 2))]);
    assert_eq!(&a * &b, s(&[(int(6), int(1))]));
    let p = ExactNet::alpha(int(1), Model::Full) * ExactNet::alpha(int(2), Model::Full);
    assert_eq!(p, ExactNet::alpha(int(3), Model::Full));
    assert_eq!(p.terms(), &[Term::new(int(1), int(3), int(3))]);
    assert!(e.try_add(&ExactNet::one(Model::Full)).is_err());
}

#[test]
fn alpha_product_matches_sampled_values() {
    let lhs = ExactNet::alpha(int(1), Model::Full) * ExactNet::alpha(int(2), Model::Full);
    let rhs = ExactNet::alpha(int(3), Model::Full);
    for (le, li) in [(-3.0f64, 0.5f64), (-20.0, -1.0), (-100.0, 2.0)] {
        let a = lhs.eval_log(le, Some(li)).unwrap();
        let b = rhs.eval_log(le, Some(li)).unwrap();
        assert!((a.log_abs - b.log_abs).abs() < 1e-12);
        assert!((a.log_abs - 3.0 * (le + li)).abs() < 1e-12);
    }
}

#[test]
fn alpha_forms() {
    assert_eq!(ExactNet::alpha(int(0), Model::Simplified), ExactNet::one(Model::Simplified));
    assert_eq!(ExactNet::alpha(int(2), Model::Full).terms(), &[Term::new(int(1), int(2), int(2))]);
    assert_eq!(ExactNet::alpha(int(-1), Model::Simplified).terms(), &[Term::new(int(1), int(-1), int(0))]);
}

#[test]
fn evaluation() {
    let half = NetValue::from_f64(0.5);
    let v = s(&[(int(1), int(2))]).eval(&half, None).unwrap();
    assert!((v.value - 0.25).abs() < 1e-15);
    assert!(ExactNet::zero(Model::Simplified).eval(&half, None).unwrap().is_zero());
    let x = s(&[(int(3), rat(1, 2)), (int(-2), int(3))]);
    let v = x.eval(&NetValue::from_f64(1e-4), None).unwrap();
    let direct = 3.0 * 1e-4f64.sqrt() - 2.0 * 1e-12;
    assert!((v.value - direct).abs() <= 1e-15 * direct);
    assert!(ExactNet::alpha(int(1), Model::Full).eval(&half, None).is_err());
}

#[test]
fn jm_embedding() {
    assert_eq!(
        ExactNet::alpha(int(3), Model::Simplified).jm_embed().unwrap(),
        ExactNet::alpha(int(3), Model::Full)
    );
    assert!(ExactNet::zero(Model::Simplified).jm_embed().unwrap().is_zero());
    let x = s(&[(int(2), int(1)), (int(1), int(2))]);
    let j = x.jm_embed().unwrap();
    assert_eq!(j.terms(), &[Term::new(int(2), int(1), int(1)), Term::new(int(1), int(2), int(2))]);
    // λ(min(1, ε·ι)) at ε = 10^-3, ι = 1/2
    let (eps, iota) = (1e-3f64, 0.5f64);
    let t = (eps * iota).min(1.0);
    let direct = 2.0 * t + t * t;
    let v = j.eval(&NetValue::from_f64(eps), Some(&NetValue::from_f64(iota))).unwrap();
    assert!((v.value - direct).abs() < 1e-15);
}

#[test]
fn valuations_and_distances() {
    let grid = GridConfig::default();
    assert_eq!(ExactNet::zero(Model::Simplified).valuation(), Valuation::Infinite);
    let x = s(&[(int(3), rat(1, 2)), (int(-2), int(3))]);
    assert_eq!(x.valuation(), Valuation::Finite(rat(1, 2)));
    let EstimateVerdict::Finite(slope) = estimate_valuation(&SampledNet::from_exact(&x), &grid, None).verdict else {
        panic!("finite estimate expected");
    };
    assert!((slope - 0.5).abs() < 1e-3);
    assert_eq!(ExactNet::alpha(int(-2), Model::Simplified).valuation(), Valuation::Finite(int(-2)));
    assert_eq!(sharp_dist(&x, &x).unwrap(), 0.0);
    assert!((sharp_norm(&ExactNet::alpha(int(3), Model::Simplified)).unwrap() - (-3f64).exp()).abs() < 1e-15);
    let e = s(&[(int(1), int(1))]);
    let e4 = s(&[(int(1), int(1)), (int(1), int(4))]);
    assert!((sharp_dist(&e, &e4).unwrap() - (-4f64).exp()).abs() < 1e-15);
}

#[test]
fn q_positivity_examples() {
    assert_eq!(q_positivity(&s(&[(int(1), int(2))])), OrderVerdict::Positive);
    let x = s(&[(int(-1), int(1)), (int(1), int(2))]);
    assert_eq!(q_positivity(&x), OrderVerdict::NotPositive);
    let grid = GridConfig::default();
    assert!(matches!(
        falsify_order(&SampledNet::from_exact(&x), Direction::Geq0, &[int(2)], &[], &grid),
        Falsification::Falsified(_)
    ));
    let g = ExactNet::full([(int(1), int(1), int(0)), (int(-1), int(1), int(1))]);
    assert_eq!(q_positivity(&g), OrderVerdict::NotPositive);
    assert!(matches!(
        falsify_order(&SampledNet::from_exact(&g), Direction::Geq0, &[int(2)], &[Iota::Value(int(2))], &grid),
        Falsification::Falsified(_)
    ));
}

#[test]
fn comparisons() {
    let a2 = ExactNet::alpha(int(2), Model::Full);
    let a1 = ExactNet::alpha(int(1), Model::Full);
    assert_eq!(order_compare(&a2, &a1).unwrap(), Comparison::Leq);
    assert_eq!(order_compare(&a1, &a1).unwrap(), Comparison::Eq);
    assert!(order_compare(&a1, &ExactNet::one(Model::Simplified)).is_err());
}

#[test]
fn absolute_values() {
    assert_eq!(abs_simplified(&s(&[(int(-2), int(3))])), s(&[(int(2), int(3))]));
    assert!(abs_simplified(&ExactNet::zero(Model::Simplified)).is_zero());
    let x = s(&[(int(1), int(1)), (int(-3), int(2))]);
    assert_eq!(abs(&x).exact(), Some(&x));
    // |eval| equals eval on the tail where ε < 1/3
    let grid = GridConfig::default();
    let ax = SampledNet::abs_of(&x);
    let diff = ax.sub(&SampledNet::from_exact(&x));
    assert!(null_estimate(&diff, &int(50), &grid, &[]));
    // a full net that is neither sign is kept as a sampled evaluator
    let g = ExactNet::full([(int(1), int(1), int(0)), (int(-1), int(1), int(1))]);
    assert!(abs(&g).exact().is_none());
}

#[test]
fn roots() {
    let Root::Exact { net, exact_coeff } = proot(&s(&[(int(4), int(2))]), 2).unwrap() else {
        panic!("exact root expected");
    };
    assert!(exact_coeff);
    assert_eq!(net, s(&[(int(2), int(1))]));
    let Root::Exact { net, .. } = proot(&s(&[(int(1), int(3))]), 3).unwrap() else {
        panic!("exact root expected");
    };
    assert_eq!(net, s(&[(int(1), int(1))]));
    let x = s(&[(int(1), int(1)), (int(1), int(2))]);
    let Root::Sampled(r) = proot(&x, 2).unwrap() else {
        panic!("sampled root expected");
    };
    let lead = r.lead().unwrap();
    assert_eq!((lead.coeff.clone(), lead.eps_exp.clone()), (int(1), rat(1, 2)));
    let err = r.powi(2).sub(&SampledNet::from_exact(&x));
    match estimate_valuation(&err, &GridConfig::default(), None).verdict {
        EstimateVerdict::Finite(v) => assert!(v > 1.5),
        EstimateVerdict::PlausiblyInfinite => {}
    }
    assert!(proot(&s(&[(int(-1), int(1))]), 2).is_err());
}

#[test]
fn nonnegative_representatives() {
    let grid = GridConfig::default();
    let x = s(&[(int(1), int(2)), (int(-1), int(5))]);
    let h = nonneg_representative(&x).unwrap().sub(&SampledNet::from_exact(&x));
    assert!(null_estimate(&h, &int(50), &grid, &[]));
    let z = nonneg_representative(&ExactNet::zero(Model::Simplified)).unwrap();
    assert!(null_estimate(&z, &int(50), &grid, &[]));
    assert!(nonneg_representative(&s(&[(int(-1), int(1))])).is_err());
}

#[test]
fn scalar_balls() {
    let m = Model::Simplified;
    assert_eq!(scalar_ball_member(&s(&[(int(1), int(3))]), &ball(m, int(2))).unwrap(), Membership::Member);
    assert_eq!(scalar_ball_member(&s(&[(int(2), int(2))]), &ball(m, int(2))).unwrap(), Membership::NotMember);
    assert_eq!(scalar_ball_member(&s(&[(int(1), int(2))]), &ball(m, int(2))).unwrap(), Membership::Member);
    assert!(scalar_ball_member(&s(&[(int(1), int(2))]), &ball(Model::Full, int(2))).is_err());
}

#[test]
fn scalar_balls_agree_with_sampled_bound() {
    let grid = GridConfig::default();
    let refuted = oracle_ball_member(&SampledNet::from_exact(&s(&[(int(2), int(2))])), &int(2), &[int(3)], &[], &grid);
    assert!(matches!(refuted, OracleVerdict::Refuted(_)));
    let zero = SampledNet::from_exact(&ExactNet::zero(Model::Simplified));
    assert_eq!(oracle_ball_member(&zero, &int(2), &grid.b_list, &[], &grid), OracleVerdict::Consistent);
    let e3 = SampledNet::from_exact(&s(&[(int(1), int(3))]));
    assert_eq!(oracle_ball_member(&e3, &int(2), &grid.b_list, &[], &grid), OracleVerdict::Consistent);
}

#[test]
fn exhaustion_sets() {
    let half_line = IntervalDomain::new(Some(int(0)), None).unwrap();
    assert_eq!(half_line.exhaustion_offset(), 2);
    assert_eq!(half_line.exhaustion(0), (rat(1, 2), int(2)));
    let unit = IntervalDomain::bounded(int(-1), int(1)).unwrap();
    assert_eq!(unit.exhaustion(3), (rat(-4, 5), rat(4, 5)));
    assert_eq!(default_domain().exhaustion(1), (rat(-3, 2), rat(3, 2)));
}

#[test]
fn function_arithmetic() {
    let f = xe(int(1), 2, int(1));
    assert_eq!(f.derive(1), xe(int(2), 1, int(1)));
    let g = xe(int(1), 1, int(1));
    assert_eq!(g.try_mul(&g).unwrap(), xe(int(1), 2, int(2)));
    let other = g.on_domain(IntervalDomain::real_line());
    assert!(g.try_add(&other).is_err());
}

#[test]
fn seminorms() {
    let d = xe(int(1), 2, int(1)).seminorm(0, 1);
    assert_eq!(d.lead_exp, Valuation::Finite(int(1)));
    let sup = d.lead_sup.unwrap();
    assert!(sup.lo <= rat(9, 4) && rat(9, 4) <= sup.hi);
    assert!(GenFun::zero(Model::Simplified, default_domain()).seminorm(0, 1).is_infinite());
    let lambda = s(&[(rat(-3, 2), int(1))]);
    let star = embed_const(&lambda, &default_domain());
    assert!(star.seminorm(2, 1).is_infinite());
    let s0 = star.seminorm(0, 1).lead_sup.unwrap();
    assert!(s0.lo <= rat(3, 2) && rat(3, 2) <= s0.hi);
}

#[test]
fn function_balls() {
    assert_eq!(xe(int(1), 1, int(3)).ball_member(0, 1, &int(2)), Membership::Member);
    let f = xe(int(1), 1, int(2));
    assert_eq!(f.derive(1).ball_member(0, 1, &int(2)), Membership::Member);
    assert_eq!(f.ball_member(1, 1, &int(2)), Membership::NotMember);
    let z = GenFun::zero(Model::Simplified, default_domain());
    assert_eq!(z.ball_member(3, 2, &int(-4)), Membership::Member);
}

#[test]
fn integration() {
    let f = xe(int(1), 1, int(2));
    assert_eq!(f.integrate(&int(0), &int(1)).unwrap(), s(&[(rat(1, 2), int(2))]));
    let z = GenFun::zero(Model::Simplified, default_domain());
    assert!(z.integrate(&int(0), &int(1)).unwrap().is_zero());
    assert!(f.integrate(&int(-2), &int(1)).is_err());
}

#[test]
fn differential_operators() {
    let dom = default_domain();
    let one = embed_const(&ExactNet::one(Model::Simplified), &dom);
    let x = GenFun::simplified(dom.clone(), [(Poly::x(), Rational::zero())]);
    let f = xe(int(1), 2, int(1));
    assert_eq!(lpdo_apply(&[(one.clone(), 1)], &f).unwrap(), xe(int(2), 1, int(1)));
    let g = xe(int(1), 1, int(1));
    assert_eq!(lpdo_apply(&[(x, 1), (one.clone(), 0)], &g).unwrap(), xe(int(2), 1, int(1)));
    let z = GenFun::zero(Model::Simplified, dom);
    assert!(lpdo_apply(&[(one, 1)], &z).unwrap().is_zero());
}

#[test]
fn constant_embedding() {
    let dom = default_domain();
    let a3 = ExactNet::alpha(int(3), Model::Simplified);
    assert_eq!(embed_const(&a3, &dom).ball_member(2, 1, &int(2)), Membership::Member);
    assert_eq!(scalar_ball_member(&a3, &ball(Model::Simplified, int(2))).unwrap(), Membership::Member);
    assert!(embed_const(&ExactNet::zero(Model::Simplified), &dom).is_zero());
}

#[test]
fn function_embedding() {
    let f = xe(int(1), 1, int(2));
    let psi = f.psi_embed().unwrap();
    assert!(GenFun::zero(Model::Simplified, default_domain()).psi_embed().unwrap().is_zero());
    let (a, b) = (f.seminorm(0, 1), psi.seminorm(0, 1));
    assert_eq!(a.lead_exp, b.lead_exp);
    assert_eq!(a.lead_sup, b.lead_sup);
    for r in [int(1), int(2), int(3)] {
        assert_eq!(f.ball_member(1, 1, &r), psi.ball_member(1, 1, &r));
    }
}

#[test]
fn pseudometrics() {
    let f = xe(int(1), 1, int(2)).try_add(&xe(int(1), 0, int(5))).unwrap();
    assert_eq!(vnp(&f, 1, 0), Valuation::Finite(int(2)));
    let z = GenFun::zero(Model::Simplified, default_domain());
    assert_eq!(vnp(&z, 1, 0), Valuation::Infinite);
    assert_eq!(dnp(&f, &f, 1, 1).unwrap(), 0.0);
    assert!((dnp(&xe(int(1), 1, int(2)), &z, 1, 0).unwrap() - (-2f64).exp()).abs() < 1e-15);
}

#[test]
fn scalar_sequences() {
    let c = converges_scalar(|n| ExactNet::alpha(int(n as i64), Model::Simplified), &ExactNet::zero(Model::Simplified), 10)
        .unwrap();
    assert!(c.converges && c.strictly_increasing());
    let x = s(&[(int(5), rat(1, 3))]);
    assert!(converges_scalar(|_| x.clone(), &x, 5).unwrap().converges);
    let away = converges_scalar(|_| ExactNet::one(Model::Simplified), &ExactNet::zero(Model::Simplified), 5).unwrap();
    assert!(!away.converges);
}

#[test]
fn sampled_examples() {
    let grid = GridConfig::default();
    let zero = SampledNet::zero(false);
    assert_eq!(estimate_valuation(&zero, &grid, None).verdict, EstimateVerdict::PlausiblyInfinite);
    let a2 = SampledNet::from_exact(&ExactNet::alpha(int(2), Model::Simplified));
    let EstimateVerdict::Finite(v) = estimate_valuation(&a2, &grid, None).verdict else {
        panic!("finite estimate expected");
    };
    assert!((v - 2.0).abs() < 1e-3);
    assert_eq!(
        falsify_order(&SampledNet::from_exact(&s(&[(int(1), int(2))])), Direction::Geq0, &grid.b_list, &[], &grid),
        Falsification::NotFalsified
    );
    assert!(null_estimate(&zero, &int(50), &grid, &[]));
    assert!(!null_estimate(&SampledNet::from_exact(&s(&[(int(1), int(3))])), &int(50), &grid, &[]));
    assert!(Rational::one() > Rational::zero());
}
