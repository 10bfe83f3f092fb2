//! Pair integral for the thin two-material rod.
//!
//! In the thin-rod limit the transverse directions integrate out and the
//! double line integral of the `delta_deriv` kernel collapses to a closed
//! combination of the antiderivative `needle_f`:
//!
//! `I_AB = C^2 omega^5 / (16 pi^2) [f(w(a+b)) - f(wa) - f(wb)]`
//!
//! with `C` the cross-section area. The combination is evaluated by
//! [`crate::kernel::needle_f_comb`], which keeps full accuracy through the
//! exact cancellation of the leading Taylor term.

use crate::error::{Error, Result};
use crate::kernel::needle_f_comb;

use super::{EvalMode, IabResult};

/// Pair integral of a thin rod: segment lengths `length_a` (upper) and
/// `length_b` (lower), cross-section area `area`, frequency `omega` (eV).
pub fn i_ab_needle(omega: f64, length_a: f64, length_b: f64, area: f64) -> Result<IabResult> {
    if !(omega > 0.0) {
        return Err(Error::domain(format!(
            "needle pair integral needs omega > 0, got {omega}"
        )));
    }
    if !(length_a > 0.0 && length_b > 0.0 && area > 0.0) {
        return Err(Error::domain(format!(
            "needle dimensions must be positive (a={length_a}, b={length_b}, area={area})"
        )));
    }
    let xa = omega * length_a;
    let xb = omega * length_b;
    let comb = needle_f_comb(xa, xb);
    let value = area * area * omega.powi(5) / (16.0 * std::f64::consts::PI.powi(2)) * comb;
    Ok(IabResult {
        value,
        mode: EvalMode::ClosedForm,
        error_estimate: 1e-14 * value.abs(),
        omega_a: xa + xb,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::delta_deriv;
    use crate::quad::{gauss_panels, integrate_panels};
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Direct two-dimensional quadrature of the line-line kernel:
    /// `I = C^2 w^5/(16 pi^2) int_0^{xa} dz int_{-xb}^0 dz' D(z - z')`.
    fn brute_force(omega: f64, xa: f64, xb: f64, area: f64) -> f64 {
        let n_out = (2.0 * xa).ceil() as usize + 8;
        let outer = gauss_panels(0.0, xa, n_out, 8);
        let n_in = (2.0 * xb).ceil() as usize + 8;
        let inner = gauss_panels(-xb, 0.0, n_in, 8);
        let double = integrate_panels(&outer, |z| {
            integrate_panels(&inner, |zp| delta_deriv(z - zp))
        });
        area * area * omega.powi(5) / (16.0 * std::f64::consts::PI.powi(2)) * double
    }

    #[test]
    fn closed_form_matches_2d_quadrature() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let omega = 1.0;
        let area = 2.5;
        for _ in 0..20 {
            let xa = rng.gen_range(0.1..30.0);
            let xb = rng.gen_range(0.1..30.0);
            let closed = i_ab_needle(omega, xa, xb, area).unwrap();
            let brute = brute_force(omega, xa, xb, area);
            assert_relative_eq!(closed.value, brute, max_relative = 1e-6);
        }
    }

    #[test]
    fn scaling_and_mode() {
        // I scales as omega^5 at fixed dimensionless sizes.
        let base = i_ab_needle(1.0, 2.0, 3.0, 1.0).unwrap();
        let scaled = i_ab_needle(2.0, 1.0, 1.5, 1.0).unwrap();
        assert_relative_eq!(scaled.value, base.value * 32.0, max_relative = 1e-12);
        assert_eq!(base.mode, EvalMode::ClosedForm);
        assert_eq!(base.omega_a, 5.0);
        let tiny = i_ab_needle(0.01, 2.0, 3.0, 1.0).unwrap();
        assert_eq!(tiny.mode, EvalMode::ClosedForm);
        // Negative value: the kernel combination is negative definite here.
        assert!(base.value < 0.0 && tiny.value < 0.0);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(i_ab_needle(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(i_ab_needle(1.0, -1.0, 1.0, 1.0).is_err());
        assert!(i_ab_needle(1.0, 1.0, 1.0, 0.0).is_err());
    }
}
