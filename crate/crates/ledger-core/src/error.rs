use alloc::string::String;

/// Failure modes shared by every engine in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate instance: {0}")]
    Degenerate(String),
    #[error("criticality error: {0}")]
    Criticality(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("symbol table: {0}")]
    Symbol(String),
    #[error("class lattice: {0}")]
    Classes(String),
}

pub type Result<T> = core::result::Result<T, Error>;
