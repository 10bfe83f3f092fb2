//! Dynamics of a self-propelled body: quantum friction, radiated power,
//! cooling trajectories, and the terminal velocities they produce.
//!
//! Two balance mechanisms set a terminal velocity. If the temperature
//! imbalance is maintained, the propulsive force grows the velocity until
//! friction cancels it (`v_T = -F / F'_f`). If the body is left to cool, the
//! force dies with the temperature difference and the velocity accumulated
//! along the cooling trajectory is the terminal velocity
//! (`v_T = (1/m) Integral F dt`).

mod cooling;
mod friction;

pub use cooling::{
    ballistic_velocity, body_metal_mass, cooling_time, radiated_power, terminal_velocity_cooling,
    CoolingModel, CoolingSample, CoolingTrajectory,
};
pub use friction::{
    einstein_hopf_derivative, fpsf_x_integral, friction_derivative_needle, friction_first_order,
    friction_second_order_needle, friction_second_order_point, friction_time_constant,
    needle_r_kernel, needle_r_kernel_asymptotic, relaxation_velocity, terminal_velocity_friction,
    Polarization, R_KERNEL_ASYMPTOTIC_SWITCH,
};

use crate::error::{Error, Result};
use crate::materials::{eval_chi, SusceptibilityModel};
use crate::quad::{compensated_sum, gauss_panels_edges, log_edges};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Refining frequency quadrature on a logarithmic grid: doubles the panel
/// count until two levels agree to 1e-9 relative (or 384 panels), returning
/// the last value and the last level difference. Deterministic: ordered
/// compensated summation regardless of rayon scheduling.
pub(crate) fn spectral_ladder(
    lo: f64,
    hi: f64,
    integrand: &(dyn Fn(f64) -> Result<f64> + Sync),
) -> Result<(f64, f64)> {
    let level = |n: usize| -> Result<f64> {
        let panels = gauss_panels_edges(&log_edges(lo, hi, n), 8);
        let terms: Result<Vec<f64>> = panels
            .nodes
            .par_iter()
            .zip(panels.weights.par_iter())
            .map(|(&x, &w)| Ok(w * integrand(x)?))
            .collect();
        Ok(compensated_sum(terms?.into_iter()))
    };
    let mut n = 48;
    let mut prev = level(n)?;
    loop {
        n *= 2;
        let cur = level(n)?;
        let diff = (cur - prev).abs();
        if diff <= 1e-9 * cur.abs().max(1e-300) || n >= 384 {
            return Ok((cur, diff));
        }
        prev = cur;
    }
}

/// Mean polarizability spectrum `Im alpha(omega)` of a body, in units of
/// volume (eV^-3).
///
/// Friction and radiated power depend on the body only through this
/// spectrum. `Im alpha(omega) >= 0` for `omega > 0` in every variant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PolarizabilitySpectrum {
    /// Weak-susceptibility (volume-integrated) polarizability:
    /// `Im alpha = volume * Im chi(omega)`.
    VolumeChi {
        /// Body volume in eV^-3.
        volume: f64,
        /// Bulk susceptibility model of the dissipative material.
        model: SusceptibilityModel,
    },
    /// Dressed low-frequency Lorenz-Lorentz polarizability of a Drude metal:
    /// `Im alpha = 9 volume nu omega / omega_p^2`.
    LorenzLorentz {
        /// Body volume in eV^-3.
        volume: f64,
        /// Plasma frequency in eV.
        omega_p: f64,
        /// Drude damping rate in eV.
        nu: f64,
    },
    /// Perfectly absorbing (blackbody) surface of the given area:
    /// `Im alpha = area / (4 omega)`.
    BlackbodySurface {
        /// Surface area in eV^-2.
        area: f64,
    },
}

impl PolarizabilitySpectrum {
    /// `Im alpha(omega)` at a positive frequency, in eV^-3.
    pub fn alpha_im(&self, omega: f64) -> Result<f64> {
        if !(omega > 0.0) {
            return Err(Error::domain(format!(
                "polarizability spectrum needs omega > 0, got {omega}"
            )));
        }
        match *self {
            PolarizabilitySpectrum::VolumeChi { volume, ref model } => {
                Ok(volume * eval_chi(model, omega)?.im)
            }
            PolarizabilitySpectrum::LorenzLorentz {
                volume,
                omega_p,
                nu,
            } => Ok(9.0 * volume * nu * omega / (omega_p * omega_p)),
            PolarizabilitySpectrum::BlackbodySurface { area } => Ok(area / (4.0 * omega)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn spectra_are_nonnegative_and_match_models() {
        let gold = PolarizabilitySpectrum::VolumeChi {
            volume: 2.0,
            model: crate::materials::gold(),
        };
        let ll = PolarizabilitySpectrum::LorenzLorentz {
            volume: 2.0,
            omega_p: 9.0,
            nu: 0.035,
        };
        let bb = PolarizabilitySpectrum::BlackbodySurface { area: 4.0 };
        for omega in [1e-3, 0.1, 1.0, 20.0] {
            assert!(gold.alpha_im(omega).unwrap() > 0.0);
            assert!(ll.alpha_im(omega).unwrap() > 0.0);
            assert!(bb.alpha_im(omega).unwrap() > 0.0);
        }
        // Drude: volume * omega_p^2 nu / (omega (omega^2 + nu^2)).
        let omega = 0.5;
        assert_relative_eq!(
            gold.alpha_im(omega).unwrap(),
            2.0 * 81.0 * 0.035 / (omega * (omega * omega + 0.035 * 0.035)),
            max_relative = 1e-12
        );
        assert_relative_eq!(
            ll.alpha_im(omega).unwrap(),
            2.0 * 9.0 * 0.035 * omega / 81.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(bb.alpha_im(omega).unwrap(), 2.0, max_relative = 1e-12);
        assert!(gold.alpha_im(0.0).is_err());
    }
}
