use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("graph has {n} vertices; at most {max} supported here")]
    TooLarge { n: usize, max: usize },
    #[error("vertex set is not independent")]
    NotIndependent,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("operation undefined on the void complex")]
    VoidComplex,
    #[error("complex is not pure")]
    NotPure,
    #[error("vertex set is not a face of the complex")]
    NotAFace,
    #[error("boundary index {index} outside -1..={max}")]
    IndexOutOfRange { index: isize, max: isize },
    #[error("independence number is {found}, expected {expected}")]
    WrongAlpha { expected: usize, found: usize },
    #[error("inconsistent search spec: {0}")]
    InconsistentSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
