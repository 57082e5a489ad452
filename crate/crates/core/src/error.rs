use thiserror::Error;

use crate::graph::Diamond;

/// Crate-wide error type. Every fallible operation reports the offending
/// token, vertex or walk so the CLI can surface it verbatim.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("duplicate edge {a} {b}")]
    DuplicateEdge { a: String, b: String },

    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),

    #[error("edge references undeclared vertex {0}")]
    UndeclaredVertex(String),

    #[error("graph is disconnected ({0} is not reachable from {1})")]
    Disconnected(String, String),

    #[error("isolated vertex {0}")]
    IsolatedVertex(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("vertices {a} and {b} are not adjacent")]
    NotAdjacent { a: String, b: String },

    #[error("walk is empty")]
    EmptyWalk,

    #[error("walks live in different graphs")]
    BaseMismatch,

    #[error("walk endpoints do not match ({0} vs {1})")]
    EndpointMismatch(String, String),

    #[error("nothing prunable at index {0}")]
    NotPrunable(usize),

    #[error("spider move position {0} is not interior to the walk")]
    SpiderPosition(usize),

    #[error("out-of-range parameter for family {family}: {msg}")]
    FamilyParameter { family: String, msg: String },

    #[error("unknown graph family {0}")]
    UnknownFamily(String),

    #[error("morphism domain/codomain mismatch")]
    DomainMismatch,

    #[error("not a graph homomorphism: {count} edge(s) violated, first is {a} {b}")]
    NotAHomomorphism { count: usize, a: String, b: String },

    #[error("morphism does not cover every domain vertex (missing {0})")]
    IncompleteMorphism(String),

    #[error("map is not a covering map")]
    NotACover,

    #[error("map is not a homotopy covering map")]
    NotAHomotopyCover,

    #[error("vertex {vertex} is not in the fibre over {target}")]
    NotInFibre { vertex: String, target: String },

    #[error("homotopy chain is empty")]
    EmptyChain,

    #[error("entries {0} and {1} of the chain are not one step apart")]
    ChainStepInvalid(usize, usize),

    #[error("given lift does not project to the first chain entry (at {0})")]
    LiftMismatch(String),

    #[error("lifted map is inconsistent: {0}")]
    LiftInconsistent(String),

    #[error("walk does not start at the basepoint {0}")]
    WalkNotFromBasepoint(String),

    #[error("walk of reduced length {len} exceeds the safe depth {safe} (cover built at depth {depth})")]
    WalkTooDeep { len: usize, safe: usize, depth: usize },

    #[error("cover is not stabilized at depth {0}")]
    NotStabilized(usize),

    #[error("deck transformation failed verification: {0}")]
    DeckVerification(String),

    #[error("group order {order} exceeds the bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },

    #[error("subgroup is not closed under composition")]
    SubgroupNotClosed,

    #[error("quotient failed verification: {0}")]
    QuotientNotVerified(String),

    #[error("diamond {0:?} present in the base does not lift")]
    DiamondDoesNotLift(Diamond),

    #[error("shift generator must be a non-trivial loop at the basepoint")]
    InvalidShiftGenerator,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
