use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: &'static str, id: String },

    #[error("arrow `{arrow}` references undeclared vertex `{vertex}`")]
    DanglingEndpoint { arrow: String, vertex: String },

    #[error("oriented cycle: {}", .cycle.join(" -> "))]
    OrientedCycle { cycle: Vec<String> },

    #[error("{kind} map of involution `{involution}` is not self-inverse at `{at}`")]
    NotSelfInverse {
        involution: String,
        kind: &'static str,
        at: String,
    },

    #[error("involution `{involution}` violates the head/tail exchange axiom at arrow `{arrow}`")]
    AxiomViolation { involution: String, arrow: String },

    #[error("unknown {kind} `{id}`")]
    Unknown { kind: &'static str, id: String },

    #[error("vector has {got} entries, quiver has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("integer overflow")]
    Overflow,

    #[error("dimension vector is not fixed by the involution")]
    NotSymmetricDimension,

    #[error("weight is not anti-symmetric under the involution")]
    NotAntiSymmetric,

    #[error("inequality system has ambient dimension {dim}, limit is {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },

    #[error("LP invariant violated: {0}")]
    LpInvariant(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("{0}")]
    Syntax(String),

    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        match self {
            e @ Error::AtLine { .. } => e,
            e => Error::AtLine {
                line,
                source: Box::new(e),
            },
        }
    }

    /// Innermost error, stripped of line context.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            e => e,
        }
    }
}
