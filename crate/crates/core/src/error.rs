use thiserror::Error;

/// Everything that can go wrong while building groups, parsing words or
/// running a verification workflow.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordlabError {
    #[error("invalid input: {0}")]
    Validation(String),

    #[error("group closure exceeds the order cap of {cap}")]
    SizeLimit { cap: usize },

    #[error("unknown group spec `{0}`")]
    UnknownGroup(String),

    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("enumeration needs {needed} evaluations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("no binding for variable {0}")]
    MissingBinding(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("word is not a multilinear commutator: {0}")]
    Classification(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = WordlabError> = std::result::Result<T, E>;

impl From<std::io::Error> for WordlabError {
    fn from(e: std::io::Error) -> Self {
        WordlabError::Io(e.to_string())
    }
}
