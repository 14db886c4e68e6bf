use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at line {line}, column {col}: expected {expected}")]
    Syntax { line: usize, col: usize, expected: String },

    #[error("unknown construction '{0}'")]
    UnknownConstruction(String),

    #[error("'{name}' takes {expected}, got {got} argument(s)")]
    ArityMismatch { name: String, expected: String, got: usize },

    #[error("while evaluating `{expr}`: {source}")]
    Eval {
        expr: String,
        #[source]
        source: eqorder_core::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] eqorder_core::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub(crate) fn eval(expr: impl std::fmt::Display, source: eqorder_core::Error) -> CliError {
        CliError::Eval { expr: expr.to_string(), source }
    }
}
