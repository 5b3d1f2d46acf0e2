use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Variants split into two families that the command-line front end maps to
/// different exit codes: domain errors (a hypothesis does not hold, a set of
/// variables is not a reduction, ...) and input errors (parse failures,
/// malformed contexts, bad flags).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("improper ideal: the unit monomial generates the whole ring")]
    ImproperIdeal,

    #[error("context mismatch: expected {expected} variables, found {found}")]
    ContextMismatch { expected: usize, found: usize },

    #[error("invalid ring context: {0}")]
    InvalidContext(String),

    #[error("binomial coefficient undefined for negative upper argument {0}")]
    UndefinedBinomial(i64),

    #[error("infinite colength: the quotient has Krull dimension {dim} > 0")]
    InfiniteColength { dim: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("not a reduction: no pure power of x{variable} lies in the ideal")]
    NotAReduction { variable: usize },

    #[error("not a reduction: the quotient by the forms keeps dimension {dim} (Hilbert defect {defect} in degree {degree})")]
    FormsNotAReduction {
        dim: usize,
        defect: u64,
        degree: u64,
    },

    #[error("no s-reduction exists for s = {s}: the quotient has dimension {dim}")]
    NoSReduction { s: usize, dim: usize },

    #[error("s = {s} exceeds the number of variables {n}")]
    TooManyForms { s: usize, n: usize },

    #[error("not a Hilbert function: {0}")]
    NotHilbertFunction(String),

    #[error("cap exceeded: {what} not settled by degree {cap}")]
    CapExceeded { what: String, cap: u64 },

    #[error("Hilbert table ends at degree {last} and is not marked eventually polynomial (requested degree {requested})")]
    TableExhausted { last: u64, requested: u64 },

    #[error("non-generic sample: {0}; retry with a larger entry bound")]
    NonGeneric(String),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for errors caused by malformed input rather than by mathematics.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::Usage(_)
                | Error::InvalidContext(_)
                | Error::ContextMismatch { .. }
                | Error::ImproperIdeal
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
