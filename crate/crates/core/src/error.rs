use thiserror::Error;

use crate::mask::SubsetMask;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("invalid label `{0}` (expected letters, digits or underscore)")]
    InvalidLabel(String),
    #[error("Moore family does not contain the full ground set")]
    MissingFullSet,
    #[error("Moore family is not closed under intersection: {a:?} and {b:?}")]
    NotIntersectionClosed { a: SubsetMask, b: SubsetMask },
    #[error("ground of size {size} exceeds the limit of {max}")]
    GroundTooLarge { size: usize, max: usize },
    #[error("search needs {needed} evaluations but the budget is {budget}")]
    LimitExceeded { needed: u64, budget: u64 },
    #[error("set {0:?} is not closed")]
    NotClosed(SubsetMask),
    #[error("set {0:?} is not within the ground set")]
    OutOfGround(SubsetMask),
    #[error("closure system is not topological")]
    NotTopological,
    #[error("set is not independent: element {0} lies in the closure of the others")]
    NotIndependent(usize),
    #[error("relation is not a quasi-order: {0}")]
    NotQuasiOrder(String),
    #[error("quasi-order is not antisymmetric: {0} and {1} are equivalent")]
    NotAntisymmetric(usize, usize),
    #[error("set {0:?} is not an initial segment")]
    NotInitialSegment(SubsetMask),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("chain needs at least {needed} members, got {got}")]
    ChainTooShort { needed: usize, got: usize },
    #[error("invalid enumeration order: {0}")]
    InvalidOrder(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("decomposition fails the generating-set condition at {0:?}")]
    ConditionFails(SubsetMask),
    #[error("block {0} meets the closure of the other blocks; normalize first")]
    NotNormalized(usize),
}
