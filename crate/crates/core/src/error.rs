use thiserror::Error;

/// Which computation limit was hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BudgetResource {
    Pairs,
    BasisSize,
    Degree,
    WallClock,
}

impl std::fmt::Display for BudgetResource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BudgetResource::Pairs => "pair count",
            BudgetResource::BasisSize => "basis size",
            BudgetResource::Degree => "total degree",
            BudgetResource::WallClock => "wall clock",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("budget exceeded: {resource} limit {limit}")]
    BudgetExceeded { resource: BudgetResource, limit: u64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable name collision: `{0}`")]
    NameCollision(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
