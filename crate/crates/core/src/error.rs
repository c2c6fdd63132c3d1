use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),
    #[error("beta-number count {count} is smaller than the number of parts {parts}")]
    BetaCountTooSmall { parts: usize, count: usize },
    #[error("beta set is not strictly decreasing or has no staircase tail for charge {0}")]
    NotStaircase(i64),
    #[error("partition {nu} does not have the core of charge {charge}")]
    WrongCore { nu: String, charge: String },
    #[error("partition {0} is not a {1}-core")]
    NotCore(String, usize),
    #[error("charge entries must sum to zero, got {0}")]
    ChargeSum(i64),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("residue {0} out of range for level {1}")]
    ResidueRange(usize, usize),
    #[error("level 1 has no simple reflections")]
    NoReflections,
    #[error("theta·delta = 0: no classification on this locus")]
    ZeroDelta,
    #[error("the a-function is only defined for h > 0")]
    NonPositiveH,
    #[error("point {0} lies on a G.I.T. wall")]
    NotRegular(String),
    #[error("alcove reduction exceeded {0} steps")]
    ReductionCap(usize),
    #[error("relation is not a partial order: {0}")]
    NotAnOrder(String),
    #[error("grid ({0}, {1}) exceeds the resource guard")]
    ResourceGuard(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
