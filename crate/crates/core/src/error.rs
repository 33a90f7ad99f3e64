use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: argument `{name}` declared twice")]
    DuplicateArgument { line: usize, name: String },

    #[error("line {line}: attack refers to undeclared argument `{name}`")]
    UndeclaredArgument { line: usize, name: String },

    #[error("unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("dimension mismatch in {op}: {left} vs {right}")]
    DimensionMismatch {
        op: &'static str,
        left: String,
        right: String,
    },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("walk length must be at least 1")]
    ZeroLength,

    #[error("walk enumeration would exceed the cap of {cap} walks")]
    WalkCapExceeded { cap: usize },

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("automata have different alphabets: {left:?} vs {right:?}")]
    AlphabetMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("invalid rational weight `{0}`")]
    InvalidWeight(String),
}
