use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined resultant: zero polynomial input")]
    UndefinedResultant,
    #[error("phi undefined: j = {j} >= alpha = {alpha}")]
    PhiUndefined { alpha: u32, j: u32 },
    #[error("invalid system: {0}")]
    InvalidSpec(String),
    #[error("inadmissible parameters: tau({witness}) = 0")]
    Inadmissible { witness: i64 },
    #[error("u-parameters not determined: singular orthogonality system")]
    UParametersNotDetermined,
    #[error("no basis rule given for singular matrix A")]
    UnsupportedSingularA,
    #[error("negative argument to gamma moment")]
    NegativeMoment,
    #[error("operator order {found:?} differs from the expected {expected}")]
    OrderMismatch { expected: usize, found: Option<usize> },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
