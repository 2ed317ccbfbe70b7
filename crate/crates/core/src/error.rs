use thiserror::Error;

/// Errors raised by the analysis library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity {0} is out of range (expected 1..=16)")]
    ArityOutOfRange(usize),

    #[error("value does not fit in a truth table of arity {arity}")]
    ValueTooLarge { arity: usize },

    #[error("bitstring length {0} is not a power of two >= 2")]
    BadBitstringLength(usize),

    #[error("invalid character {found:?} at position {position} in bitstring")]
    BadBitstringChar { found: char, position: usize },

    #[error("variable x{index} is out of range for arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },

    #[error("expected an assignment of {expected} bits, got {found}")]
    AssignmentLength { expected: usize, found: usize },

    #[error("fixed variable set must not be empty")]
    EmptyFixedSet,

    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("rule {node} has arity {found}, network has {expected} nodes")]
    RuleArity {
        node: usize,
        expected: usize,
        found: usize,
    },

    #[error("network must have at least one node")]
    EmptyNetwork,

    #[error("vertex {vertex} is out of range for a graph on {size} vertices")]
    VertexOutOfRange { vertex: usize, size: usize },

    #[error("invalid function literal {0:?}")]
    Literal(String),

    #[error("network file line {line}: {message}")]
    NetworkFile { line: usize, message: String },

    #[error("census arity {arity} exceeds the limit of {limit}")]
    CensusLimit { arity: usize, limit: usize },

    #[error("state space of {size} nodes exceeds the limit of {limit}")]
    StateSpaceLimit { size: usize, limit: usize },
}

impl Error {
    /// True for errors caused by a resource cap rather than malformed input.
    pub fn is_resource_limit(&self) -> bool {
        match self {
            Error::CensusLimit { .. } | Error::StateSpaceLimit { .. } => true,
            Error::ArityOutOfRange(arity) => *arity > crate::function::MAX_ARITY,
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
