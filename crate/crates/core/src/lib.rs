//! Elimination of dissipative bosonic modes from open quantum systems.
//!
//! The library solves the operator-valued effective-field equation for a set
//! of damped bosonic modes driven by system operators, assembles the
//! resulting effective Lindblad master equation for the remaining system,
//! and provides the numerical machinery to validate the construction on the
//! dissipative Dicke model: Liouvillian spectra, steady states, mean-field
//! analysis and semiclassical stochastic trajectories.
//!
//! Units: all energies and rates are expressed in units of a reference decay
//! rate `kappa`, times in `1/kappa`. Operators are dense complex matrices on
//! finite Hilbert spaces; the spin sector always refers to the symmetric
//! (maximal-spin) subspace with basis ascending in the `Sz` quantum number,
//! bosonic modes use the Fock basis ascending in occupation, and composite
//! spaces are ordered spin (x) field.

pub mod dicke;
pub mod elimination;
pub mod liouvillian;
pub mod meanfield;
pub mod operators;
pub mod semiclassical;
pub(crate) mod sparse;

pub use num_complex::Complex64 as C64;

/// Error classes shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("integration failure: {0}")]
    IntegrationFailure(String),
    #[error("degenerate steady state: {0}")]
    DegenerateSteadyState(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),
    #[error("internal consistency: {0}")]
    InternalConsistency(String),
    #[error("ensemble failure: {0}")]
    EnsembleFailure(String),
    #[error("linear algebra backend: {0}")]
    Linalg(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        Error::Linalg(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
