use thiserror::Error;

/// Crate-wide error type.
///
/// Every operation that can fail names its failure mode here; callers match
/// on variants to map them to exit codes or report verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Composition or comparison of maps whose endpoints do not line up.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    /// An index (vertex, face, degeneracy, cell) outside the valid range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// An enumeration or search exceeded its configured budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Free-composition closure failed to stabilize within the step budget.
    #[error("closure did not terminate within budget: {0}")]
    NonTerminating(String),

    /// Structurally invalid input (failed validation).
    #[error("invalid {kind}: {detail}")]
    Invalid { kind: &'static str, detail: String },

    /// A quotient whose induced structure maps fail to descend.
    #[error("ill-formed quotient: {0}")]
    IllFormedQuotient(String),

    /// An operation requiring the strict Segal condition was handed a
    /// complex or space that fails it.
    #[error("not Segal: {0}")]
    NotSegal(String),

    /// A homotopy-category composition lift that is absent or ambiguous.
    #[error("ill-defined composition: {0}")]
    IllDefinedComposition(String),

    /// A check mode whose side conditions do not hold for the given input
    /// (for example nerve-equivalence mode on non-nerve levels).
    #[error("oracle unavailable: {0}")]
    OracleUnavailable(String),
}

impl Error {
    pub fn invalid(kind: &'static str, detail: impl Into<String>) -> Self {
        Error::Invalid { kind, detail: detail.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
