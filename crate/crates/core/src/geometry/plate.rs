//! Pair integral for two stacked thin films.
//!
//! For laterally infinite films the transverse directions integrate the
//! kernel down to the even antiderivative `w_kernel`, giving per total area
//! `S`:
//!
//! `I_AB = -(S omega^6 / 8 pi) int_0^{tA} dz int_{-tB}^0 dz' (z - z') W(omega (z - z'))`
//!
//! In the thin-film regime `omega * t << 1` the kernel is constant (2/3) and
//! the integral collapses to the closed form
//!
//! `I_AB = -(S / 24 pi) tA tB (tA + tB) omega^6`,
//!
//! which is what this module evaluates. The evaluation is meaningful for
//! `omega * max(t) < 0.3` ([`PLATE_THIN_FILM_LIMIT`]); callers decide how to
//! surface that validity bound.

use crate::error::{Error, Result};

use super::{EvalMode, IabResult};

/// Upper edge of the thin-film validity window in `omega * max(t)`.
pub const PLATE_THIN_FILM_LIMIT: f64 = 0.3;

/// Thin-film pair integral: film thicknesses `t_a` (upper) and `t_b`
/// (lower), common area `area`, frequency `omega` (eV).
pub fn i_ab_plate(omega: f64, area: f64, t_a: f64, t_b: f64) -> Result<IabResult> {
    if !(omega > 0.0) {
        return Err(Error::domain(format!(
            "plate pair integral needs omega > 0, got {omega}"
        )));
    }
    if !(area > 0.0 && t_a > 0.0 && t_b > 0.0) {
        return Err(Error::domain(format!(
            "plate dimensions must be positive (area={area}, t_a={t_a}, t_b={t_b})"
        )));
    }
    let omega_a = omega * t_a.max(t_b);
    let value = -(area / (24.0 * std::f64::consts::PI))
        * t_a
        * t_b
        * (t_a + t_b)
        * omega.powi(6);
    Ok(IabResult {
        value,
        mode: EvalMode::ClosedForm,
        // Leading correction to the constant-kernel approximation is
        // quadratic in the dimensionless thickness.
        error_estimate: value.abs() * omega_a * omega_a / 3.0,
        omega_a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::w_kernel;
    use crate::quad::{gauss_panels, integrate_panels};
    use approx::assert_relative_eq;

    /// Position-space double integral with the full kernel.
    fn brute_force(omega: f64, area: f64, t_a: f64, t_b: f64) -> f64 {
        let za = gauss_panels(0.0, t_a, 12, 8);
        let zb = gauss_panels(-t_b, 0.0, 12, 8);
        let double = integrate_panels(&za, |z| {
            integrate_panels(&zb, |zp| (z - zp) * w_kernel(omega * (z - zp)))
        });
        -(area * omega.powi(6) / (8.0 * std::f64::consts::PI)) * double
    }

    #[test]
    fn closed_form_matches_full_kernel_when_thin() {
        let area = 10.0;
        // omega * t = 0.01: the constant-kernel error is ~(wt)^2/30.
        let closed = i_ab_plate(1.0, area, 0.01, 0.01).unwrap();
        let brute = brute_force(1.0, area, 0.01, 0.01);
        assert_relative_eq!(closed.value, brute, max_relative = 1e-4);
        // Thicker films drift away quadratically.
        let closed2 = i_ab_plate(1.0, area, 0.2, 0.2).unwrap();
        let brute2 = brute_force(1.0, area, 0.2, 0.2);
        let rel = ((closed2.value - brute2) / brute2).abs();
        assert!(rel > 1e-4 && rel < 0.05, "rel = {rel}");
    }

    #[test]
    fn symmetry_and_sign() {
        let ab = i_ab_plate(0.5, 3.0, 0.02, 0.07).unwrap();
        let ba = i_ab_plate(0.5, 3.0, 0.07, 0.02).unwrap();
        assert_relative_eq!(ab.value, ba.value, max_relative = 1e-15);
        assert!(ab.value < 0.0);
        assert_eq!(ab.mode, EvalMode::ClosedForm);
        assert_relative_eq!(ab.omega_a, 0.035, max_relative = 1e-15);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(i_ab_plate(0.0, 1.0, 0.1, 0.1).is_err());
        assert!(i_ab_plate(1.0, -1.0, 0.1, 0.1).is_err());
        assert!(i_ab_plate(1.0, 1.0, 0.0, 0.1).is_err());
    }
}
