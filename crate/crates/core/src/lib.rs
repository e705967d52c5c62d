//! Exact generalized numbers and one-dimensional generalized functions with
//! decision procedures for their sharp topologies.
//!
//! Representatives are finite sums `Σ c·ε^q` (simplified model) or
//! `Σ c·ε^a·ι^b` (full model, `ι` the mollifier diameter) with rational data,
//! so valuations, the q-positivity order and ball membership are decided
//! exactly. Nets outside that class live in [`sampled`] as evaluators on the
//! dyadic grid `ε = 2^-j`.

pub mod error;
pub mod genfun;
pub mod hp;
pub mod net;
pub mod order;
pub mod poly;
pub mod random;
pub mod rational;
pub mod sampled;
pub mod topology;
pub mod value;

pub use error::{Error, Result};
pub use net::{ExactNet, Model, Term};
pub use order::{
    abs, nonneg_representative, order_compare, proot, q_positivity, scalar_ball_member, sharp_dist,
    sharp_norm, BallSpec, Comparison, Membership, NetOrSampled, OrderVerdict, Root, Valuation,
};
pub use poly::Poly;
pub use rational::Rational;
pub use sampled::{GridConfig, Iota, SampledNet};
pub use topology::{axiom_check, Axiom, AxiomReport, Basis};
pub use value::NetValue;
