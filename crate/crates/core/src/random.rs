//! Seeded generators for random nets, polynomials and generalized functions.
//!
//! Defaults: at most 5 terms, exponents uniform rationals in `[-5, 5]` with
//! denominator at most 4, coefficients likewise in `[-10, 10]`, polynomial
//! degree at most 6. All draws go through a caller-supplied [`ChaCha8Rng`] so
//! that a seed reproduces every sample.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::net::{ExactNet, Model, Term};
use crate::poly::Poly;
use crate::rational::{rat, Rational};

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Per-sample generator derived from a run seed and a sample index, so that
/// parallel runs draw the same samples regardless of scheduling.
pub fn sample_rng(seed: u64, index: u64) -> Rng8 {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index);
    r
}

#[derive(Debug, Clone, PartialEq)]
pub struct NetGen {
    pub max_terms: usize,
    pub exp_bound: i64,
    pub coeff_bound: i64,
    pub max_den: i64,
    pub max_degree: usize,
}

impl Default for NetGen {
    fn default() -> Self {
        NetGen {
            max_terms: 5,
            exp_bound: 5,
            coeff_bound: 10,
            max_den: 4,
            max_degree: 6,
        }
    }
}

impl NetGen {
    /// Uniform rational in `[-bound, bound]` with denominator at most `max_den`.
    pub fn rational(&self, rng: &mut Rng8, bound: i64) -> Rational {
        let d = rng.gen_range(1..=self.max_den);
        let n = rng.gen_range(-bound * d..=bound * d);
        rat(n, d)
    }

    pub fn nonzero_rational(&self, rng: &mut Rng8, bound: i64) -> Rational {
        loop {
            let q = self.rational(rng, bound);
            if !q.is_zero() {
                return q;
            }
        }
    }

    pub fn exponent(&self, rng: &mut Rng8) -> Rational {
        self.rational(rng, self.exp_bound)
    }

    pub fn coeff(&self, rng: &mut Rng8) -> Rational {
        self.nonzero_rational(rng, self.coeff_bound)
    }

    /// Random net with 1 to `max_terms` raw terms (may cancel to fewer).
    pub fn net(&self, rng: &mut Rng8, model: Model) -> ExactNet {
        let n = rng.gen_range(1..=self.max_terms);
        self.net_with_terms(rng, model, n)
    }

    pub fn net_with_terms(&self, rng: &mut Rng8, model: Model, n: usize) -> ExactNet {
        let terms = (0..n)
            .map(|_| {
                let c = self.coeff(rng);
                let a = self.exponent(rng);
                let b = match model {
                    Model::Simplified => Rational::zero(),
                    Model::Full => self.exponent(rng),
                };
                Term::new(c, a, b)
            })
            .collect();
        ExactNet::normalize(model, terms)
    }

    /// Random nonzero net.
    pub fn nonzero_net(&self, rng: &mut Rng8, model: Model) -> ExactNet {
        loop {
            let x = self.net(rng, model);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Random polynomial of degree at most `max_degree` (possibly zero).
    pub fn poly(&self, rng: &mut Rng8) -> Poly {
        let deg = rng.gen_range(0..=self.max_degree);
        Poly::from_coeffs(
            (0..=deg)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        Rational::zero()
                    } else {
                        self.coeff(rng)
                    }
                })
                .collect(),
        )
    }

    pub fn nonzero_poly(&self, rng: &mut Rng8) -> Poly {
        loop {
            let p = self.poly(rng);
            if !p.is_zero() {
                return p;
            }
        }
    }
}
