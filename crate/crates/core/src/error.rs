use crate::graph::VertexId;

/// Errors raised by the decomposition, embedding, symmetry and group layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph is not connected")]
    NotConnected,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("family is not nested: elements {0} and {1} cross")]
    NotNested(usize, usize),
    #[error("family is not closed under complement: element {0} has no complement")]
    NotClosed(usize),
    #[error("no 2-separation contains vertex {0}")]
    NoSeparationExists(VertexId),
    #[error("tree vertex {0} corresponds to a hinge and has no torso")]
    HingeVertex(usize),
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("bad exponent {0}: power relator exponents must be at least 2")]
    BadExponent(i64),
    #[error("coset enumeration exceeded {0} cosets")]
    Overflow(usize),
    #[error("invalid separation: {0}")]
    InvalidSeparation(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedInput(_) => "MalformedInput",
            Error::Parse { .. } => "ParseError",
            Error::NotConnected => "NotConnected",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::NotNested(..) => "NotNested",
            Error::NotClosed(_) => "NotClosed",
            Error::NoSeparationExists(_) => "NoSeparationExists",
            Error::HingeVertex(_) => "HingeVertex",
            Error::NotAnAutomorphism(_) => "NotAnAutomorphism",
            Error::TooLarge(_) => "TooLarge",
            Error::BadExponent(_) => "BadExponent",
            Error::Overflow(_) => "Overflow",
            Error::InvalidSeparation(_) => "InvalidSeparation",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
