use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the library.
///
/// Input errors describe malformed data (bad files, unknown labels, shape
/// mismatches). Contract errors describe a call whose precondition does not
/// hold, such as asking for an order witness for a pair that is ordered.
#[derive(Debug, Error)]
pub enum Error {
    #[error("algebra has no elements")]
    EmptyAlgebra,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("element index {index} out of range for algebra of size {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("sum `{x} + {y}` given twice with different results `{first}` and `{second}`")]
    ConflictingSum {
        x: String,
        y: String,
        first: String,
        second: String,
    },
    #[error("unit coincides with zero in an algebra with more than one element")]
    UnitIsZero,
    #[error("operation requires a unit element")]
    MissingUnit,
    #[error("table is not a generalized effect algebra ({0} axiom violations)")]
    NotGea(usize),
    #[error("invalid generalized state: {0}")]
    InvalidState(String),
    #[error("generalized state is trivial on the unit")]
    TrivialOnUnit,
    #[error("witness set is empty")]
    EmptyWitnessSet,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("matrix is not Hermitian: |a[{row}][{col}] - conj(a[{col}][{row}])| = {deviation:e}")]
    NotHermitian {
        row: usize,
        col: usize,
        deviation: f64,
    },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is not positive (minimum eigenvalue {0:e})")]
    NotPositive(f64),
    #[error("matrix is not an effect (spectrum [{0:e}, {1:e}] leaves [0, 1])")]
    NotEffect(f64, f64),
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("contract violated: {0}")]
    Contract(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for precondition failures, false for bad input data.
    pub fn is_contract(&self) -> bool {
        matches!(self, Error::Contract(_) | Error::NotGea(_) | Error::MissingUnit)
    }
}
