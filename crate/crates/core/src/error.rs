use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("sign vectors of different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("covector axiom violated: {0}")]
    Axiom(String),
    #[error("degenerate arrangement: normal vector {0} is zero")]
    Degenerate(usize),
    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    TooLarge(usize),
    #[error("not a flag of flats: {0}")]
    NotAFlag(String),
    #[error("tope {0} is not in the tope set of the flag")]
    TopeNotInFlag(String),
    #[error("chain is not in {space} for degree {p}")]
    NotInFiltration { space: &'static str, p: usize },
    #[error("subset has size {found}, expected {expected}")]
    WrongDegree { expected: usize, found: usize },
    #[error("invalid ordering: {0}")]
    Ordering(String),
    #[error("{0}")]
    Usage(String),
    #[error("unknown corpus entry or input: {0}")]
    UnknownInput(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
