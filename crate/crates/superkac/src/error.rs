//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("reflection index {index} is not an isotropic odd simple root")]
    NotIsotropicIndex { index: usize },

    #[error("matrix entry a[{i}][{j}] has no odd-reflection case (a_jj must be 0 or 2)")]
    UnclassifiableEntry { i: usize, j: usize },

    #[error("matrix is not symmetrizable: inconsistent cycle through index {index}")]
    NotSymmetrizable { index: usize },

    #[error("matrix is not a generalized Cartan matrix: {0}")]
    NotGcm(String),

    #[error("operation requires affine type, got {found}")]
    NotAffine { found: String },

    #[error("imaginary root data unsupported for indefinite type")]
    IndefiniteImaginary,

    #[error("imaginary root multiplicities unavailable: {0}")]
    MissingImaginaryMults(String),

    #[error("reflection through an isotropic root has no well-defined coroot action")]
    IsotropicReflection,

    #[error("series anchors differ by more than a rational root-lattice shift")]
    AnchorMismatch,

    #[error("leading coefficient {0} is not a unit of Z[eps]/(eps^2-1)")]
    NonUnitLeading(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("base enumeration exhausted the bound of {bound} bases without closing")]
    BaseBoundExceeded { bound: usize },

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
