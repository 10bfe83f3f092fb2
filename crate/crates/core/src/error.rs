//! Error type shared by the fallible numerical routines.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the library.
///
/// `NonConvergence` carries the frequency (or the dimensionless `omega*a`)
/// at which a quadrature or cubature refused to certify its result, so a
/// caller can report the offending point or switch to a fit mode.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside a routine's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A susceptibility variant used where it is not meaningful.
    #[error("unsupported susceptibility variant: {0}")]
    UnsupportedVariant(String),

    /// Cubature or quadrature did not converge, or was refused because the
    /// integrand oscillates too quickly for the configured budget.
    #[error("nonconvergence at omega*a = {omega_a}: {context}")]
    NonConvergence {
        /// The dimensionless frequency (omega times the body scale) at fault.
        omega_a: f64,
        /// What was being computed and what to do about it.
        context: String,
    },

    /// A request that needs a singular-point evaluation (e.g. the radiation
    /// kernel at zero separation).
    #[error("singular point: {0}")]
    SingularPoint(String),

    /// Invalid geometry or sampling input (overlapping Monte Carlo clouds,
    /// nonpositive dimensions, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Shorthand for a domain error.
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Shorthand for a nonconvergence error at a given omega*a.
    pub fn nonconvergence(omega_a: f64, context: impl Into<String>) -> Self {
        Error::NonConvergence {
            omega_a,
            context: context.into(),
        }
    }
}
