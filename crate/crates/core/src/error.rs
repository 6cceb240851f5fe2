use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    BadPermutation(String),
    #[error("malformed partition: {0}")]
    BadPartition(String),
    #[error("malformed q-element: {0}")]
    BadQElement(String),
    #[error("malformed operator word: {0}")]
    BadWord(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("partition {0} does not fit in a {1} x {2} rectangle")]
    OutsideRectangle(String, usize, usize),
    #[error("polynomial is not in the span of Schubert polynomials of S_{0}")]
    NotInSpan(usize),
    #[error("endpoints are incomparable")]
    Incomparable,
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
