//! Algebraic and order-theoretic invariants over seeded random nets.

use num_traits::{Signed, Zero};
use proptest::prelude::*;

use sharp_core::genfun::{default_domain, GenFun, GfTerm};
use sharp_core::net::{ExactNet, Model};
use sharp_core::order::{
    order_compare, proot, q_positivity, scalar_ball_member, sharp_dist, BallSpec, Comparison, Membership,
    OrderVerdict, Root, Valuation,
};
use sharp_core::random::{rng, NetGen, Rng8};
use sharp_core::rational::{int, rat, Rational};
use sharp_core::topology::{dnp, vnp};

fn gen() -> NetGen {
    NetGen::default()
}

fn model(full: bool) -> Model {
    if full {
        Model::Full
    } else {
        Model::Simplified
    }
}

fn nets(seed: u64, full: bool) -> (ExactNet, ExactNet, ExactNet) {
    let g = gen();
    let mut r = rng(seed);
    let m = model(full);
    (g.net(&mut r, m), g.net(&mut r, m), g.net(&mut r, m))
}

fn radius(r: &mut Rng8) -> Rational {
    gen().rational(r, 5)
}

fn genfun(r: &mut Rng8) -> GenFun {
    let g = gen();
    let n = rand::Rng::gen_range(r, 1..=3);
    let terms = (0..n).map(|_| (g.poly(r), g.exponent(r))).collect::<Vec<_>>();
    GenFun::simplified(default_domain(), terms)
}

fn member(x: &ExactNet, r: &Rational) -> bool {
    scalar_ball_member(x, &BallSpec::new(x.model(), r.clone())).unwrap() == Membership::Member
}

fn nonneg(x: &ExactNet) -> bool {
    q_positivity(x) == OrderVerdict::Positive
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(seed in any::<u64>(), full in any::<bool>()) {
        let (x, y, z) = nets(seed, full);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &ExactNet::one(x.model()), x.clone());
    }

    #[test]
    fn normalize_is_idempotent(seed in any::<u64>(), full in any::<bool>()) {
        let (x, _, _) = nets(seed, full);
        prop_assert_eq!(ExactNet::normalize(x.model(), x.terms().to_vec()), x.clone());
    }

    #[test]
    fn jm_embedding_is_a_ring_homomorphism(seed in any::<u64>()) {
        let (x, y, _) = nets(seed, false);
        let (jx, jy) = (x.jm_embed().unwrap(), y.jm_embed().unwrap());
        prop_assert_eq!((&x + &y).jm_embed().unwrap(), &jx + &jy);
        prop_assert_eq!((&x * &y).jm_embed().unwrap(), &jx * &jy);
        prop_assert_eq!(x.valuation(), jx.valuation());
    }

    #[test]
    fn valuation_is_multiplicative_and_ultrametric(seed in any::<u64>(), full in any::<bool>()) {
        let (x, y, _) = nets(seed, full);
        let prod = (&x * &y).valuation();
        match (x.valuation(), y.valuation()) {
            (Valuation::Finite(a), Valuation::Finite(b)) => prop_assert_eq!(prod, Valuation::Finite(a + b)),
            _ => prop_assert_eq!(prod, Valuation::Infinite),
        }
        prop_assert!((&x + &y).valuation() >= x.valuation().min(y.valuation()));
        if full {
            return Ok(());
        }
        let (z, w) = (ExactNet::zero(x.model()), &x + &y);
        let dxy = sharp_dist(&x, &y).unwrap();
        prop_assert!(dxy <= sharp_dist(&x, &z).unwrap().max(sharp_dist(&z, &y).unwrap()) + 1e-300);
        prop_assert!(sharp_dist(&w, &x).unwrap() == sharp_dist(&y, &z).unwrap());
    }

    #[test]
    fn order_is_a_compatible_partial_order(seed in any::<u64>(), full in any::<bool>()) {
        let (x, y, z) = nets(seed, full);
        let sq = &x * &x;
        prop_assert!(nonneg(&sq));
        if nonneg(&x) && nonneg(&y) {
            prop_assert!(nonneg(&(&x + &y)));
            prop_assert!(nonneg(&(&x * &y)));
        }
        if nonneg(&x) && nonneg(&-&x) {
            prop_assert!(x.is_zero());
        }
        let xy = order_compare(&x, &y).unwrap();
        let yz = order_compare(&y, &z).unwrap();
        let le = |c: Comparison| matches!(c, Comparison::Leq | Comparison::Eq);
        if le(xy) && le(yz) {
            prop_assert!(le(order_compare(&x, &z).unwrap()));
        }
        if le(xy) {
            prop_assert!(le(order_compare(&(&x + &z), &(&y + &z)).unwrap()));
        }
    }

    #[test]
    fn radii_are_monotone(seed in any::<u64>(), full in any::<bool>()) {
        let (x, _, _) = nets(seed, full);
        let mut r = rng(seed ^ 0x5a5a);
        let (a, b) = (radius(&mut r), radius(&mut r));
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if member(&x, &hi) {
            prop_assert!(member(&x, &lo));
        }
    }

    #[test]
    fn balls_are_closed_under_ring_operations(seed in any::<u64>(), full in any::<bool>()) {
        let (x, y, _) = nets(seed, full);
        let mut rr = rng(seed ^ 0xa5a5);
        let (r, s) = (radius(&mut rr), radius(&mut rr));
        if member(&x, &(&r + &int(1))) && member(&y, &(&r + &int(1))) {
            prop_assert!(member(&(&x + &y), &r));
        }
        if member(&x, &r) && member(&y, &s) && r >= Rational::zero() && s >= Rational::zero() {
            prop_assert!(member(&(&x * &y), &(&r + &s)));
        }
        prop_assert!(member(&ExactNet::zero(x.model()), &r));
    }

    #[test]
    fn distinct_nets_are_separated(seed in any::<u64>(), full in any::<bool>()) {
        let (x, y, _) = nets(seed, full);
        if x != y {
            let d = &x - &y;
            let Valuation::Finite(v) = d.valuation() else { unreachable!() };
            let r = v + int(1);
            prop_assert!(!member(&d, &r));
        }
    }

    #[test]
    fn unit_ball_lies_in_the_closed_valuation_half_space(seed in any::<u64>(), full in any::<bool>()) {
        let (x, _, _) = nets(seed, full);
        if member(&x, &Rational::zero()) {
            prop_assert!(x.valuation() >= Valuation::Finite(Rational::zero()));
        }
    }

    #[test]
    fn exact_roots_invert_powers(seed in any::<u64>(), p in 1u32..4) {
        let g = gen();
        let mut r = rng(seed);
        let c = g.nonzero_rational(&mut r, 4).abs();
        let q = g.exponent(&mut r);
        let y = ExactNet::simplified([(c, q)]);
        let Root::Exact { net, exact_coeff } = proot(&y.pow(p), p).unwrap() else {
            return Err(TestCaseError::fail("single-term root not exact"));
        };
        prop_assert!(exact_coeff);
        prop_assert_eq!(net, y);
    }

    #[test]
    fn derivative_obeys_leibniz(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, g) = (genfun(&mut r), genfun(&mut r));
        let lhs = f.try_mul(&g).unwrap().derive(1);
        let rhs = f.derive(1).try_mul(&g).unwrap().try_add(&f.try_mul(&g.derive(1)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn seminorm_leads_satisfy_the_triangle_inequality(seed in any::<u64>(), l in 1u64..3) {
        let mut r = rng(seed);
        let (f, g) = (genfun(&mut r), genfun(&mut r));
        let h = f.try_add(&g).unwrap();
        let (a, b, c) = (f.seminorm(0, l), g.seminorm(0, l), h.seminorm(0, l));
        prop_assert!(c.lead_exp >= a.lead_exp.clone().min(b.lead_exp.clone()));
        if let (Valuation::Finite(va), Valuation::Finite(vb), Valuation::Finite(vc)) = (&a.lead_exp, &b.lead_exp, &c.lead_exp) {
            if va == vb && vc == va {
                let bound = a.lead_sup.unwrap().hi + b.lead_sup.unwrap().hi;
                prop_assert!(c.lead_sup.unwrap().lo <= bound);
            }
        }
    }

    #[test]
    fn function_balls_shrink_with_parameters(seed in any::<u64>(), beta in 0usize..3, l in 1u64..3) {
        let mut rr = rng(seed);
        let f = genfun(&mut rr);
        let r = radius(&mut rr);
        let m = |b: usize, l: u64, r: &Rational| f.ball_member(b, l, r) == Membership::Member;
        if m(beta + 1, l, &r) {
            prop_assert!(m(beta, l, &r));
        }
        if m(beta, l + 1, &r) {
            prop_assert!(m(beta, l, &r));
        }
        if m(beta, l, &(&r + &rat(1, 2))) {
            prop_assert!(m(beta, l, &r));
        }
    }

    #[test]
    fn vnp_and_dnp(seed in any::<u64>(), n in 1u64..3, p in 0usize..3) {
        let mut r = rng(seed);
        let (f, g, h) = (genfun(&mut r), genfun(&mut r), genfun(&mut r));
        prop_assert!(vnp(&f, n, p + 1) <= vnp(&f, n, p));
        let d = |a: &GenFun, b: &GenFun| dnp(a, b, n, p).unwrap();
        prop_assert!(d(&f, &h) <= d(&f, &g).max(d(&g, &h)) + 1e-300);
        prop_assert_eq!(d(&f, &g), d(&g, &f));
        prop_assert_eq!(d(&f, &f), 0.0);
    }
}

#[test]
fn normalized_terms_are_sorted_and_nonzero() {
    let g = gen();
    let mut r = rng(11);
    for _ in 0..200 {
        let f = genfun(&mut r);
        prop_assert_sorted(f.terms());
        let x = g.net(&mut r, Model::Full);
        assert!(x.terms().iter().all(|t| !t.coeff.is_zero()));
        assert!(x.terms().windows(2).all(|w| (&w[0].eps, &w[0].iota) < (&w[1].eps, &w[1].iota)));
    }
}

fn prop_assert_sorted(terms: &[GfTerm]) {
    assert!(terms.iter().all(|t| !t.poly.is_zero()));
    assert!(terms.windows(2).all(|w| (&w[0].eps, &w[0].iota) < (&w[1].eps, &w[1].iota)));
}
