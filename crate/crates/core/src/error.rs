use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent {0} is below 2")]
    ExponentTooSmall(u64),
    #[error("a singularity needs at least one variable")]
    NoVariables,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("weight system has a non-positive weight")]
    NonPositiveWeight,
    #[error("variable index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{what} of size {size} exceeds the cap {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: String,
        cap: u64,
    },
    #[error("companion matrix needs a >= 2, got {0}")]
    InvalidCompanion(u64),
    #[error("link classification needs dimension m >= 3, got m = {0}")]
    DimensionTooLow(usize),
    #[error("degenerate crossing of coordinate {coordinate} at t = {time}")]
    DegenerateCrossing { coordinate: usize, time: String },
    #[error("invalid angle path: {0}")]
    InvalidPath(String),
    #[error("coordinate {0} does not close up to a loop")]
    NotALoop(usize),
    #[error("ratio a_{j}/a_{k} is an integer: degenerate orbit", j = .0 + 1, k = .1 + 1)]
    DegenerateRatio(usize, usize),
    #[error("invalid ellipsoid data: {0}")]
    InvalidEllipsoid(String),
    #[error("sum of 1/a_i is at most 1; an explicit b0 bound is required")]
    MissingB0Bound,
    #[error("invalid degree window {lo}:{hi}")]
    InvalidWindow { lo: i64, hi: i64 },
    #[error("invalid scale: {0}")]
    InvalidScale(String),
    #[error("repeated factor in plane curve: not an isolated singularity")]
    NonIsolated,
    #[error("invalid du Val type: {0}")]
    InvalidDuVal(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, size: impl ToString, cap: u64) -> Self {
        Error::SizeCapExceeded {
            what,
            size: size.to_string(),
            cap,
        }
    }
}
