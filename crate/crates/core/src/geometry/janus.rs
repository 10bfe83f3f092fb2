//! Pair integral for the two-material solid ball.
//!
//! The hemisphere pair integral reduces to the dimensionless four-fold
//! cubature of [`crate::cubature::janus_terms_with`]:
//!
//! `I_AB = J(omega a) / (8 pi a)`
//!
//! where `J` is the difference of the two four-fold terms. Its small-size
//! series starts at the eighth power, `J = -(2 pi/27) x^8 [1 - ...]`, because
//! the constant part of the kernel cancels point-wise between the terms; at
//! large size it crosses over to a `-0.927 x^4` tail.

use crate::cubature::{
    janus_merged_converged, janus_small_x_series, janus_terms_with, JANUS_FINE, JANUS_SMALL_COEF,
};
use crate::error::{Error, Result};
use crate::kernel::w_kernel;

use super::{EvalMode, IabResult};

/// Fitted coefficient of the large-size `x^4` tail of the ball integral.
pub const JANUS_TAIL_COEF: f64 = -0.927;

/// Relative error adopted for the large-size fit route.
const TAIL_FIT_RELATIVE_SCATTER: f64 = 0.1;

/// Size below which the high-order series is preferred over cubature when a
/// caller asks for the best available evaluation.
pub const JANUS_SERIES_SWITCH: f64 = 0.25;

fn check(omega: f64, radius: f64) -> Result<()> {
    if !(omega > 0.0) {
        return Err(Error::domain(format!(
            "ball pair integral needs omega > 0, got {omega}"
        )));
    }
    if !(radius > 0.0) {
        return Err(Error::domain(format!(
            "ball radius must be positive, got {radius}"
        )));
    }
    Ok(())
}

/// Pair integral of a half-and-half ball of radius `radius` at `omega` (eV).
///
/// `mode` selects the route: [`EvalMode::Cubature`] evaluates the merged
/// four-fold integral with a convergence certificate (bounded size range);
/// [`EvalMode::SmallUFit`] uses the leading power law
/// `J = -(2 pi / 27) (omega a)^8`, accurate for `omega a < 1`;
/// [`EvalMode::LargeUFit`] uses the fitted tail `J = -0.927 (omega a)^4`,
/// representative for `omega a > 10`.
pub fn i_ab_janus(omega: f64, radius: f64, mode: EvalMode) -> Result<IabResult> {
    check(omega, radius)?;
    let x = omega * radius;
    let pref = 1.0 / (8.0 * std::f64::consts::PI * radius);
    match mode {
        EvalMode::Cubature => {
            let (merged, err) = janus_merged_converged(x)?;
            Ok(IabResult {
                value: pref * merged,
                mode: EvalMode::Cubature,
                error_estimate: pref * err,
                omega_a: x,
            })
        }
        EvalMode::SmallUFit => {
            let value = pref * JANUS_SMALL_COEF * x.powi(8);
            Ok(IabResult {
                value,
                mode: EvalMode::SmallUFit,
                // First omitted correction of the series, (7/15) x^2.
                error_estimate: value.abs() * x * x * (7.0 / 15.0),
                omega_a: x,
            })
        }
        EvalMode::LargeUFit => {
            let value = pref * JANUS_TAIL_COEF * x.powi(4);
            Ok(IabResult {
                value,
                mode: EvalMode::LargeUFit,
                error_estimate: value.abs() * TAIL_FIT_RELATIVE_SCATTER,
                omega_a: x,
            })
        }
        other => Err(Error::UnsupportedVariant(format!(
            "ball pair integral supports cubature, small_u_fit, or large_u_fit, not {other:?}"
        ))),
    }
}

/// High-order small-size series of the same integral: the eighth-power law
/// of the small_u_fit route plus the next two corrections. Preferred over
/// cubature for `omega a` below [`JANUS_SERIES_SWITCH`].
pub fn i_ab_janus_series(omega: f64, radius: f64) -> Result<f64> {
    check(omega, radius)?;
    Ok(janus_small_x_series(omega * radius) / (8.0 * std::f64::consts::PI * radius))
}

/// The two four-fold pieces of the ball integral, separately, with the
/// physical kernel and fine cubature (their difference is the pair
/// integral before the `1/(8 pi a)` normalization is applied to each).
pub fn i_ab_janus_terms(omega: f64, radius: f64) -> Result<(f64, f64)> {
    check(omega, radius)?;
    let x = omega * radius;
    if x > crate::cubature::OMEGA_A_MAX {
        return Err(Error::nonconvergence(
            x,
            format!("ball term evaluation: omega*a = {x} exceeds the cubature range"),
        ));
    }
    let norm = 1.0 / (8.0 * std::f64::consts::PI * radius);
    let (t1, t2) = janus_terms_with(x, &JANUS_FINE, &w_kernel);
    Ok((norm * t1, norm * t2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn series_and_cubature_agree_at_small_size() {
        let radius = 2.0;
        let omega = 0.3 / radius;
        let cub = i_ab_janus(omega, radius, EvalMode::Cubature).unwrap();
        assert_eq!(cub.mode, EvalMode::Cubature);
        let ser = i_ab_janus_series(omega, radius).unwrap();
        assert_relative_eq!(cub.value, ser, max_relative = 1e-3);
        // The leading-power route differs from the full series only by the
        // first correction, (7/15) x^2, about 1 percent here.
        let fit = i_ab_janus(0.15 / radius, radius, EvalMode::SmallUFit).unwrap();
        assert_eq!(fit.mode, EvalMode::SmallUFit);
        let ser_small = i_ab_janus_series(0.15 / radius, radius).unwrap();
        assert_relative_eq!(fit.value, ser_small, max_relative = 2e-2);
        assert!(fit.value < 0.0);
    }

    #[test]
    fn tail_fit_route_tracks_frozen_cubature() {
        // Frozen converged merged integral at x = 20: -1.468554e5. The
        // adopted -0.927 x^4 tail sits about one percent above it.
        let radius = 2.0;
        let fit = i_ab_janus(10.0, radius, EvalMode::LargeUFit).unwrap();
        let frozen = -1.468_554e5 / (8.0 * std::f64::consts::PI * radius);
        assert_relative_eq!(fit.value, frozen, max_relative = 2e-2);
        assert_eq!(fit.mode, EvalMode::LargeUFit);
    }

    #[test]
    fn terms_difference_equals_merged() {
        let omega = 1.5;
        let radius = 2.0; // x = 3
        let (t1, t2) = i_ab_janus_terms(omega, radius).unwrap();
        let merged = i_ab_janus(omega, radius, EvalMode::Cubature).unwrap();
        // Same grids, same arithmetic: the difference of the parts must
        // reproduce the merged value to rounding.
        assert_relative_eq!(t1 - t2, merged.value, max_relative = 1e-9);
        assert!(t1 > 0.0 && t2 > 0.0, "both terms are positive integrals");
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(i_ab_janus(0.0, 1.0, EvalMode::Cubature).is_err());
        assert!(i_ab_janus(1.0, -1.0, EvalMode::Cubature).is_err());
        assert!(i_ab_janus(60.0, 1.0, EvalMode::Cubature).is_err()); // beyond cubature range
        assert!(i_ab_janus(1.0, 1.0, EvalMode::ClosedForm).is_err()); // unsupported route
    }
}
