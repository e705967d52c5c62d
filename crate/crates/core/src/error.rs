use thiserror::Error;

use crate::net::Model;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("model mismatch: {left} vs {right}")]
    ModelMismatch { left: Model, right: Model },
    #[error("operation requires a {expected} net, got {got}")]
    WrongModel { expected: Model, got: Model },
    #[error("full-model net evaluated without an iota value")]
    MissingIota,
    #[error("evaluation parameter must be positive")]
    NonPositiveParameter,
    #[error("net is not q-positive: {0}")]
    NotQPositive(String),
    #[error("order of {0} is undecided; refusing to guess")]
    Undecided(String),
    #[error("domains differ: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("invalid interval domain: {0}")]
    InvalidDomain(String),
    #[error("integration set {0} is not compactly contained in {1}")]
    NotCompactlyContained(String, String),
    #[error("generalized segment scalar must satisfy 0 <= lambda <= 1: {0}")]
    InvalidSegmentScalar(String),
    #[error("side condition violated: {0}")]
    SideCondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
