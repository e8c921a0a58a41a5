use std::path::PathBuf;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count {0} outside supported range 1..={max}", max = crate::qsim::MAX_QUBITS)]
    QubitCount(usize),

    #[error("qubit index {qubit} out of range for a {n_qubits}-qubit register")]
    QubitIndex { qubit: usize, n_qubits: usize },

    #[error("CNOT control and target are both qubit {0}")]
    CnotOverlap(usize),

    #[error("circuit binds {expected} external angles, got {got}")]
    AngleArity { expected: usize, got: usize },

    #[error("rotation angle is not finite")]
    NonFiniteAngle,

    #[error("pixel value {0} outside [0, 1]")]
    PixelRange(f64),

    #[error("image shape {width}x{height} unsupported: {reason}")]
    ImageShape {
        width: usize,
        height: usize,
        reason: &'static str,
    },

    #[error("circuit has no closed form: {0}")]
    NotClosedForm(&'static str),

    #[error("{path}: {detail}")]
    Format { path: PathBuf, detail: String },

    #[error("labels and samples disagree: {0}")]
    LabelMismatch(String),

    #[error("class {class} out of range for {n_classes} classes")]
    ClassRange { class: u32, n_classes: u32 },

    #[error("pair classes must differ, got ({0}, {0})")]
    SamePair(u32),

    #[error("class {class} has no samples in the {partition} partition")]
    EmptyClass { class: u32, partition: &'static str },

    #[error("class {class} has {available} {partition} samples, need {needed}")]
    InsufficientSamples {
        class: u32,
        partition: &'static str,
        available: usize,
        needed: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("conflicting result rows: {0}")]
    ConflictingRows(String),

    #[error("no results found under {0}")]
    EmptyResults(PathBuf),

    #[error("dataset file missing: {0}")]
    MissingData(PathBuf),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Classifies errors for process exit codes: data/format problems versus
    /// numerical failures (NaN loss and friends).
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NumericalFailure(_))
    }

    pub(crate) fn format(path: impl Into<PathBuf>, detail: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            detail: detail.into(),
        }
    }
}
