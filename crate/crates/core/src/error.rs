use thiserror::Error;

/// Errors produced anywhere in the engine.
///
/// Each variant maps onto a coarse [`ErrorCategory`] that the command-line
/// driver reports as a machine-readable tag.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("singular matrix")]
    SingularMatrix,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("not a group action: {0}")]
    NotAnAction(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("degenerate pairing on the component of `{0}`")]
    DegeneratePairing(String),

    #[error("coproduct formulas disagree for ({g}, {h})")]
    CoproductMismatch { g: String, h: String },

    #[error("parse error at {line}:{column}: expected {expected}, found {found}")]
    Parse {
        line: usize,
        column: usize,
        expected: String,
        found: String,
    },

    #[error("type error: {0}")]
    Type(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("invariant subspace is not closed: {0}")]
    NotClosed(String),

    #[error("labels are not flat: commutator product is `{0}`")]
    FlatnessViolation(String),

    #[error("enumeration of {required} tuples exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("handle formula and word evaluation disagree: {formula} vs {word}")]
    InvariantMismatch { formula: String, word: String },

    #[error("i/o error: {0}")]
    Io(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Parse,
    Type,
    DegeneratePairing,
    CheckFailure,
    Input,
    Internal,
}

impl ErrorCategory {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCategory::Parse => "parse",
            ErrorCategory::Type => "type",
            ErrorCategory::DegeneratePairing => "degenerate-pairing",
            ErrorCategory::CheckFailure => "check-failure",
            ErrorCategory::Input => "input",
            ErrorCategory::Internal => "internal",
        }
    }
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Parse { .. } | Error::Schema(_) => ErrorCategory::Parse,
            Error::Type(_) | Error::UnknownElement(_) | Error::FlatnessViolation(_) => {
                ErrorCategory::Type
            }
            Error::DegeneratePairing(_) | Error::SingularMatrix => {
                ErrorCategory::DegeneratePairing
            }
            Error::NotAGroup(_)
            | Error::UnknownGroup(_)
            | Error::NotAnAction(_)
            | Error::Shape(_)
            | Error::BudgetExceeded { .. }
            | Error::Io(_) => ErrorCategory::Input,
            Error::CoproductMismatch { .. }
            | Error::NotClosed(_)
            | Error::InvariantMismatch { .. } => ErrorCategory::CheckFailure,
            Error::DimensionMismatch(_) => ErrorCategory::Internal,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
