use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("{0}")]
    Domain(String),
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid [p]-map: {0}")]
    InvalidPMap(String),
    #[error("not nilpotent")]
    NotNilpotent,
    #[error("not [p]-nilpotent")]
    NotPNilpotent,
    #[error("{algebra} is not restrictable in characteristic {p}")]
    NotRestrictable { algebra: String, p: u32 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not a catalog algebra; use recognize first")]
    NotCatalog,
    #[error("search space too large: {case} needs {required} {unit}, budget is {budget}")]
    BudgetExceeded {
        case: String,
        unit: &'static str,
        required: u128,
        budget: u128,
    },
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
