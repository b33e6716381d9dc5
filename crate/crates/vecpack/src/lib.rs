//! Constructive reductions and embeddings for multidimensional packing:
//! packing-dimension embeddings of set families, gap reductions into
//! Vector Bin Packing, Vector Scheduling, and Vector Bin Covering, and
//! exact small-scale solvers that make each reduction's completeness
//! and soundness machine-checkable.

pub mod embed;
pub mod graphs;
pub mod hypergraphs;
pub mod instance;
pub mod labelcover;
pub mod rational;
pub mod reduce;
pub mod schema;
pub mod setsys;
pub mod solve;
pub mod suite;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("not a canonical rational: {0}")]
    BadRational(String),
    #[error("coordinate outside [0,1]: {0}")]
    CoordinateOutOfRange(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("part index {part} out of range for {count} parts")]
    PartOutOfRange { part: usize, count: usize },
    #[error("element {element} out of range for universe {universe}")]
    ElementOutOfRange { element: usize, universe: usize },
    #[error("core must be non-empty")]
    EmptyCore,
    #[error("family is not simple (an inclusion between distinct sets)")]
    NotSimple,
    #[error("family is trivial (no non-empty set)")]
    TrivialFamily,
    #[error("family is not a sunflower-bouquet over the given core")]
    NotBouquet,
    #[error("k must be at least 2, got {0}")]
    KTooSmall(usize),
    #[error("element domains differ: {left} vs {right}")]
    DomainMismatch { left: usize, right: usize },
    #[error("verification size cap {cap} below required {needed}")]
    SizeCapTooSmall { cap: usize, needed: usize },
    #[error("instance exceeds exact-solver cap: {0}")]
    CapExceeded(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(usize),
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("edge set must be non-empty")]
    EmptyEdgeSet,
    #[error("malformed clause: {0}")]
    MalformedClause(String),
    #[error("set system admits no cover of the universe")]
    NoCover,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
