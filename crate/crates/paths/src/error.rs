use thiserror::Error;

/// Errors raised while building slopes, paths and their alternative views.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("slope parameters must be positive, got a={a}, b={b}")]
    ZeroParameter { a: usize, b: usize },
    #[error("path size n must be at least 1")]
    ZeroSize,
    #[error("a={a} and b={b} are not coprime")]
    NotCoprime { a: usize, b: usize },
    #[error("expected {expected} up steps, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("step sequence is not strictly increasing at index {index}")]
    NotIncreasing { index: usize },
    #[error("step {value} lies outside [1, {max}]")]
    OutOfRange { value: usize, max: usize },
    #[error("the first step must be an up step")]
    FirstStepNotUp,
    #[error("up step {index} sits at position {value}, beyond the bound {bound}")]
    BoundViolation {
        index: usize,
        value: usize,
        bound: usize,
    },
    #[error("the path drops below the line y = {a}x/{b} at ({x}, {y})")]
    BelowLine {
        a: usize,
        b: usize,
        x: usize,
        y: usize,
    },
    #[error("invalid letter {0:?} in a path word (expected U or R)")]
    BadLetter(char),
    #[error("path word has length {found}, expected {expected}")]
    WordLength { expected: usize, found: usize },
    #[error("expected {expected} Young rows, found {found}")]
    RowsLength { expected: usize, found: usize },
    #[error("Young rows increase at index {index}")]
    RowsNotDecreasing { index: usize },
    #[error("Young row {row} has {len} boxes but at most {max} fit")]
    RowTooLong { row: usize, len: usize, max: usize },
    #[error("tableau rows do not partition [1, {0}]")]
    BadTableau(usize),
    #[error("cannot parse {0:?} as a path")]
    Parse(String),
}
