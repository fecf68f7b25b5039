//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Tensor or matrix operands do not conform.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A tensor brought back from the transform domain carried a significant
    /// imaginary part, which means conjugate symmetry was broken upstream.
    #[error("imaginary residue {residue:.3e} exceeds {limit:.1e} after inverse transform")]
    ImaginaryResidueTooLarge { residue: f64, limit: f64 },

    /// The underlying SVD kernel did not converge.
    #[error("singular value decomposition failed to converge")]
    SvdFailure,

    /// Schatten exponent outside (0, 1].
    #[error("invalid Schatten exponent p = {0}; expected 0 < p <= 1")]
    InvalidP(f64),

    /// Not enough distinct rows to seed the requested number of centroids.
    #[error("degenerate data: {0}")]
    DegenerateData(String),

    /// A non-finite value (NaN or infinity) was found where the contract
    /// requires finite entries.
    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    /// Parameter outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    /// Two label vectors of differing lengths were compared.
    #[error("label vectors have mismatched lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}
