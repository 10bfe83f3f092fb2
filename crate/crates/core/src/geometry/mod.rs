//! Body geometries and their pair integrals.
//!
//! For each supported two-material body this module evaluates the geometric
//! pair integral `I_AB(omega)`: the double volume integral of the kernel
//! `(omega^8 / 16 pi^2) (z - z') V(omega |r - r'|)` over material A (upper,
//! +z) and material B (lower, -z). The force module folds `I_AB` against the
//! material response and thermal occupation factors.
//!
//! All evaluators return an [`IabResult`] carrying the value, the route that
//! produced it, an absolute error estimate, and the dimensionless size
//! `omega * (body scale)` at which it was evaluated.

pub mod janus;
pub mod montecarlo;
pub mod needle;
pub mod plate;
pub mod shell;

pub use janus::{
    i_ab_janus, i_ab_janus_series, i_ab_janus_terms, JANUS_SERIES_SWITCH, JANUS_TAIL_COEF,
};
pub use montecarlo::{i_ab_generic, MonteCarloSettings, SampleRegion};
pub use needle::i_ab_needle;
pub use plate::{i_ab_plate, PLATE_THIN_FILM_LIMIT};
pub use shell::{i_ab_shell, shell_tail_slope, SHELL_TAIL_SLOPE_REF};

use serde::{Deserialize, Serialize};

/// Route that produced (or is requested to produce) a pair-integral value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalMode {
    /// Closed-form expression (possibly containing special functions).
    ClosedForm,
    /// Deterministic tensor-product cubature with convergence certificate.
    Cubature,
    /// Fitted large-size power law (`s x^-4` for the shell, `-0.927 x^4` for
    /// the ball).
    LargeUFit,
    /// Leading small-size power law (`-(2 pi / 27) x^8` for the ball).
    SmallUFit,
    /// Monte Carlo volume sampling.
    MonteCarlo,
}

/// Value of a geometric pair integral at one frequency.
#[derive(Debug, Clone, Copy)]
pub struct IabResult {
    /// Integral value in natural units (eV powers set by the geometry).
    pub value: f64,
    /// Evaluation route.
    pub mode: EvalMode,
    /// Absolute error estimate: quadrature resolution difference, Monte
    /// Carlo standard error, or rounding-level for closed forms.
    pub error_estimate: f64,
    /// Dimensionless size `omega * a` the evaluation ran at.
    pub omega_a: f64,
}

/// Geometric description of a two-material body.
///
/// Material A occupies the upper (+z) part, material B the lower (-z) part;
/// a negative axial force points from A toward B. Lengths in 1/eV.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BodyGeometry {
    /// Thin rod on the z axis: A fills (0, length_a), B fills (-length_b, 0),
    /// shared cross-section radius much smaller than both lengths.
    Needle {
        /// Upper (A) segment length.
        length_a: f64,
        /// Lower (B) segment length.
        length_b: f64,
        /// Cross-section radius.
        radius: f64,
    },
    /// Thin spherical shell, A on the upper hemisphere, B on the lower.
    SphericalShell {
        /// Shell radius.
        radius: f64,
        /// Shell thickness (much smaller than the radius).
        thickness: f64,
    },
    /// Solid ball, A in the upper half, B in the lower half.
    JanusBall {
        /// Ball radius.
        radius: f64,
    },
    /// Two stacked thin films of common area: A above, B below.
    Plate {
        /// Common film area.
        area: f64,
        /// Upper film thickness.
        thickness_a: f64,
        /// Lower film thickness.
        thickness_b: f64,
    },
}

impl BodyGeometry {
    /// Characteristic size used for `omega * a` bookkeeping.
    pub fn characteristic_size(&self) -> f64 {
        match *self {
            BodyGeometry::Needle {
                length_a, length_b, ..
            } => length_a + length_b,
            BodyGeometry::SphericalShell { radius, .. } => radius,
            BodyGeometry::JanusBall { radius } => radius,
            BodyGeometry::Plate {
                thickness_a,
                thickness_b,
                ..
            } => thickness_a.max(thickness_b),
        }
    }
}
