use thiserror::Error;

/// Errors are reserved for shape and precondition violations; semantic
/// failures of an identity are reported through [`crate::report::Report`]
/// witnesses instead of being raised.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimMismatch {
        context: &'static str,
        expected: String,
        found: String,
    },

    #[error("singular bilinear form: determinant is zero")]
    SingularForm,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unresolved reference `{name}` among {kind}")]
    UnresolvedRef { kind: &'static str, name: String },
}

impl Error {
    pub fn dims(context: &'static str, expected: impl ToString, found: impl ToString) -> Self {
        Error::DimMismatch {
            context,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
