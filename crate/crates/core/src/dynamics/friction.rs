//! Drag on a small body moving through a photon gas.
//!
//! A dipole moving with velocity `v` (units of c) through an environment at
//! temperature `t_env` sees a Doppler-shifted photon distribution and absorbs
//! net momentum opposing its motion. To first order in the susceptibility the
//! drag is linear in `v` for small speeds, with slope given by the
//! Einstein-Hopf derivative; the quadratic-response correction enters at
//! second order in the susceptibility and is suppressed by many orders of
//! magnitude for laboratory parameters.
//!
//! Conventions: natural units (hbar = c = k_B = 1), frequencies and
//! temperatures in eV, forces in eV^2, velocities in units of c. Negative
//! drag opposes positive velocity.

use super::{spectral_ladder, PolarizabilitySpectrum};
use crate::error::{Error, Result};
use crate::forces::ForceResult;
use crate::geometry::BodyGeometry;
use crate::materials::SusceptibilityModel;
use crate::quad::{compensated_sum, gauss_legendre, gauss_panels, integrate_refining};
use crate::specfun::occupation;
use crate::units::ThermalPair;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Orientation average applied to the dipole response in the drag integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarization {
    /// Isotropic response: all three dipole axes contribute equally.
    Iso,
    /// Response along the motion axis only.
    Zz,
}

impl Polarization {
    /// Angular weight g(s) for the Doppler window written over
    /// s = (y - gamma) / (gamma v), normalised so that the window integral
    /// of g alone is 2 (iso) or 1 (zz not normalised the same way; the
    /// weights below are the exact kernels, not renormalised).
    fn angular_weight(self, s: f64) -> f64 {
        match self {
            Polarization::Iso => 1.5,
            Polarization::Zz => 0.75 * (1.0 - s * s),
        }
    }
}

/// First-order drag force (eV^2) on a moving dipole with the given
/// polarizability spectrum.
///
/// The force is odd in `v` and negative for positive velocity (drag). The
/// body-temperature term of the photon-number bracket is even across the
/// Doppler window and drops out exactly: the result depends on the body
/// temperature not at all, only on the environment.
///
/// Errors: |v| >= 1 is out of domain; `v == 0` returns exactly 0.
pub fn friction_first_order(
    spec: &PolarizabilitySpectrum,
    thermal: ThermalPair,
    v: f64,
    polarization: Polarization,
) -> Result<f64> {
    if !v.is_finite() || v.abs() >= 1.0 {
        return Err(Error::domain("friction velocity must satisfy |v| < 1 (units of c)"));
    }
    if v == 0.0 {
        return Ok(0.0);
    }
    let gamma = 1.0 / (1.0 - v * v).sqrt();
    let t_env = thermal.t_env;
    let t_body = thermal.t_body;
    // Upper cutoff: the environment term is felt up to the blue edge of the
    // Doppler window, the body term up to its own Wien tail.
    let t_ref = t_env.max(t_body);
    let hi = 50.0 * (t_body.max(t_env / (gamma * (1.0 - v.abs()))));
    let lo = 1e-4 * t_ref;
    let integrand = |omega: f64| -> Result<f64> {
        let alpha = spec.alpha_im(omega)?;
        if alpha == 0.0 {
            return Ok(0.0);
        }
        let (window, _) = integrate_refining(-1.0, 1.0, 8, 8, 1e-12, 5, |s| {
            let bracket = occupation(omega * gamma * (1.0 + v * s), t_env)
                - occupation(omega, t_body);
            s * polarization.angular_weight(s) * bracket
        });
        Ok(omega.powi(4) * alpha * window)
    };
    let (value, _) = spectral_ladder(lo, hi, &integrand)?;
    Ok(value / (3.0 * PI * PI))
}

/// Velocity derivative dF/dv at v = 0 (eV^2 per unit c): the Einstein-Hopf
/// drag coefficient
///
///   F' = -(beta / 12 pi^2) Int domega omega^5 Im alpha(omega) / sinh^2(beta omega / 2).
///
/// Always negative for a dissipative spectrum; zero for a lossless one.
pub fn einstein_hopf_derivative(spec: &PolarizabilitySpectrum, t_env: f64) -> Result<f64> {
    if !(t_env > 0.0) {
        return Err(Error::domain("Einstein-Hopf derivative needs t_env > 0"));
    }
    let beta = 1.0 / t_env;
    let integrand = |omega: f64| -> Result<f64> {
        let sh = (0.5 * beta * omega).sinh();
        Ok(omega.powi(5) * spec.alpha_im(omega)? / (sh * sh))
    };
    let (value, _) = spectral_ladder(1e-4 * t_env, 50.0 * t_env, &integrand)?;
    Ok(-beta * value / (12.0 * PI * PI))
}

/// Dimensionless Drude drag moment
///
///   I(h) = Int_0^inf dx x^4 / ((x^2 + h^2) sinh^2 x),
///
/// the frequency integral left over when the Einstein-Hopf derivative is
/// specialised to a Drude volume susceptibility with h = beta nu / 2.
/// I(0.7) = 0.9006 for gold at room temperature.
pub fn fpsf_x_integral(h: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::domain("Drude drag moment needs h > 0"));
    }
    // sinh^2 x underflows the integrand far below any tolerance past x ~ 40.
    let (value, _) = integrate_refining(0.0, 45.0, 96, 8, 1e-13, 5, |x| {
        let sh = x.sinh();
        x.powi(4) / ((x * x + h * h) * sh * sh)
    });
    Ok(value)
}

/// Closed form of the Einstein-Hopf derivative for a thin metal needle
/// of cross-section C = pi r^2 and metal-half length `length_b`:
///
///   F' = -(2 C b omega_p^2 nu t_env^2 / 3 pi^2) I(nu / 2 t_env).
///
/// Agrees with `einstein_hopf_derivative` over a Drude volume spectrum of
/// volume C * b; exposed separately because the CLI reports the factorised
/// pieces.
pub fn friction_derivative_needle(
    geometry: &BodyGeometry,
    metal: &SusceptibilityModel,
    t_env: f64,
) -> Result<f64> {
    let (_, length_b, radius) = match geometry {
        BodyGeometry::Needle {
            length_a,
            length_b,
            radius,
        } => (*length_a, *length_b, *radius),
        other => {
            return Err(Error::InvalidInput(format!(
                "needle friction derivative needs a needle geometry, got {other:?}"
            )))
        }
    };
    let (omega_p, nu) = match metal {
        SusceptibilityModel::Drude { omega_p, nu } => (*omega_p, *nu),
        other => {
            return Err(Error::InvalidInput(format!(
                "needle friction derivative needs a Drude metal, got {other:?}"
            )))
        }
    };
    if !(t_env > 0.0) {
        return Err(Error::domain("needle friction derivative needs t_env > 0"));
    }
    let cross_section = PI * radius * radius;
    let moment = fpsf_x_integral(0.5 * nu / t_env)?;
    Ok(-(2.0 * cross_section * length_b * omega_p * omega_p * nu * t_env * t_env)
        / (3.0 * PI * PI)
        * moment)
}

/// Terminal velocity (units of c) where the propulsive force balances the
/// linear drag: v_T = -F / F'. Requires a strictly negative drag slope.
pub fn terminal_velocity_friction(propulsive: &ForceResult, fprime: f64) -> Result<f64> {
    if !(fprime < 0.0) {
        return Err(Error::domain(
            "terminal velocity needs a negative drag derivative dF/dv",
        ));
    }
    Ok(-propulsive.force_natural / fprime)
}

/// Momentum relaxation time t0 = m / |F'| in natural units (1/eV). The
/// approach to terminal velocity is exponential with this constant:
/// v(t) = v_T (1 - exp(-t / t0)).
pub fn friction_time_constant(mass: f64, fprime: f64) -> Result<f64> {
    if !(mass > 0.0) {
        return Err(Error::domain("relaxation time needs mass > 0"));
    }
    if !(fprime < 0.0) {
        return Err(Error::domain(
            "relaxation time needs a negative drag derivative dF/dv",
        ));
    }
    Ok(mass / fprime.abs())
}

/// Velocity on the exponential relaxation curve at time `t` (same units as
/// `t0`): v_T (1 - exp(-t / t0)).
pub fn relaxation_velocity(v_terminal: f64, t: f64, t0: f64) -> f64 {
    v_terminal * (1.0 - (-t / t0).exp())
}

/// Switch point for the needle pair-correlation kernel: above this argument
/// `needle_r_kernel_asymptotic` is accurate to well under a percent and the
/// oscillatory quadrature is skipped.
pub const R_KERNEL_ASYMPTOTIC_SWITCH: f64 = 50.0;

/// Weight of axial separations at offset w (overlap of the two uniform
/// current distributions): degree-6 polynomial integral over the common
/// support, exactly evaluated by a single 4-point Gauss panel.
fn needle_pair_weight(w: f64) -> f64 {
    if !(0.0..2.0).contains(&w) {
        return 0.0;
    }
    let lo = w - 1.0;
    let hi = 1.0;
    let rule = gauss_legendre(4);
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    let mut sum = 0.0;
    for (&x, &wt) in rule.0.iter().zip(rule.1.iter()) {
        let u = mid + half * x;
        let shifted = u - w;
        sum += wt * u * u * (1.0 - u * u) * (1.0 - shifted * shifted);
    }
    half * sum
}

/// Geometric correlation kernel of the needle's quadratic response:
///
///   r(t) = 2 Int_0^2 dw rho(w) sin^2(w t) / w^2,
///
/// where rho is the axial pair weight. Grows linearly for large t (see
/// `needle_r_kernel_asymptotic`) and like t^2 for small t.
pub fn needle_r_kernel(t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let t = t.abs();
    let integrand = |w: f64| {
        if w == 0.0 {
            // sin^2(wt)/w^2 -> t^2 as w -> 0.
            return needle_pair_weight(0.0) * t * t;
        }
        let s = (w * t).sin();
        needle_pair_weight(w) * s * s / (w * w)
    };
    if t < 1.0 {
        let (value, _) = integrate_refining(0.0, 2.0, 64, 8, 1e-12, 4, integrand);
        return 2.0 * value;
    }
    // Oscillatory regime: resolve the small-w rise finely, then march across
    // the oscillations with half-period panels.
    let split = (20.0 / t).min(2.0);
    let mut total = vec![integrate_panels_sum(0.0, split, 64, 8, &integrand)];
    if split < 2.0 {
        let half_period = 0.5 * PI / t;
        let n = (((2.0 - split) / half_period).ceil() as usize).clamp(1, 400_000);
        total.push(integrate_panels_sum(split, 2.0, n, 6, &integrand));
    }
    2.0 * compensated_sum(total.into_iter())
}

/// Large-argument form of the correlation kernel: r(t) -> 16 pi t / 105,
/// accurate to about a percent by t ~ 1e3 and used above
/// `R_KERNEL_ASYMPTOTIC_SWITCH`.
pub fn needle_r_kernel_asymptotic(t: f64) -> f64 {
    16.0 * PI * t.abs() / 105.0
}

fn r_kernel_auto(t: f64) -> f64 {
    if t >= R_KERNEL_ASYMPTOTIC_SWITCH {
        needle_r_kernel_asymptotic(t)
    } else {
        needle_r_kernel(t)
    }
}

fn integrate_panels_sum(
    lo: f64,
    hi: f64,
    n_panels: usize,
    order: usize,
    f: &dyn Fn(f64) -> f64,
) -> f64 {
    let panels = gauss_panels(lo, hi, n_panels, order);
    compensated_sum(
        panels
            .nodes
            .iter()
            .zip(panels.weights.iter())
            .map(|(&x, &w)| w * f(x)),
    )
}

/// Second-order (quadratic-response) drag estimate for a thin needle with
/// static susceptibility `chi0` and metal-half length taken from the
/// geometry:
///
///   F2 = (4 / pi^3) C^2 v T^6 chi0^2 Int_0^inf dz z^6 r(z b T) / sinh^2 z.
///
/// Linear in v by construction (leading order of the odd response); the
/// magnitude is what matters for comparing against the first-order drag.
pub fn friction_second_order_needle(
    geometry: &BodyGeometry,
    chi0: f64,
    t_env: f64,
    v: f64,
) -> Result<f64> {
    let (length_b, radius) = match geometry {
        BodyGeometry::Needle {
            length_b, radius, ..
        } => (*length_b, *radius),
        other => {
            return Err(Error::InvalidInput(format!(
                "second-order needle drag needs a needle geometry, got {other:?}"
            )))
        }
    };
    if !(t_env > 0.0) {
        return Err(Error::domain("second-order needle drag needs t_env > 0"));
    }
    if !v.is_finite() || v.abs() >= 1.0 {
        return Err(Error::domain("drag velocity must satisfy |v| < 1 (units of c)"));
    }
    if v == 0.0 {
        return Ok(0.0);
    }
    let cross_section = PI * radius * radius;
    let bt = length_b * t_env;
    let (moment, _) = integrate_refining(0.0, 45.0, 96, 8, 1e-11, 4, |z| {
        if z == 0.0 {
            return 0.0;
        }
        let sh = z.sinh();
        z.powi(6) * r_kernel_auto(z * bt) / (sh * sh)
    });
    Ok(4.0 / PI.powi(3) * cross_section * cross_section * v * t_env.powi(6) * chi0 * chi0 * moment)
}

/// Second-order drag on a point dipole with real polarizability `alpha(omega)`:
///
///   F2 = (1 / 24 pi^3) Int domega alpha^2 omega^7
///        Int_{-1}^{1} ds s (1 - s^2) n(omega gamma (1 + s v), t_env),
///
/// after the inner emission integral is done in closed form (its odd part
/// cancels by symmetry; the node check below guards the rule used).
pub fn friction_second_order_point(
    alpha: &(dyn Fn(f64) -> f64 + Sync),
    t_env: f64,
    v: f64,
) -> Result<f64> {
    if !(t_env > 0.0) {
        return Err(Error::domain("second-order point drag needs t_env > 0"));
    }
    if !v.is_finite() || v.abs() >= 1.0 {
        return Err(Error::domain("drag velocity must satisfy |v| < 1 (units of c)"));
    }
    if v == 0.0 {
        return Ok(0.0);
    }
    // The emitted-photon direction integral reduces to 4 omega^3 / 3 because
    // its odd moment vanishes on any symmetric rule; verify for the rule in
    // use once per call.
    let rule = gauss_legendre(8);
    let odd: f64 = rule
        .0
        .iter()
        .zip(rule.1.iter())
        .map(|(&s, &w)| w * s * (1.0 - s * s))
        .sum();
    assert!(
        odd.abs() < 1e-10,
        "odd emission moment must cancel on a symmetric rule"
    );
    let gamma = 1.0 / (1.0 - v * v).sqrt();
    let hi = 50.0 * t_env / (gamma * (1.0 - v.abs()));
    let integrand = |omega: f64| -> Result<f64> {
        let a = alpha(omega);
        if a == 0.0 {
            return Ok(0.0);
        }
        let (window, _) = integrate_refining(-1.0, 1.0, 8, 8, 1e-12, 5, |s| {
            s * (1.0 - s * s) * occupation(omega * gamma * (1.0 + v * s), t_env)
        });
        Ok(a * a * omega.powi(7) * window)
    };
    let (value, _) = spectral_ladder(1e-4 * t_env, hi, &integrand)?;
    Ok(value / (24.0 * PI.powi(3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::materials::gold;
    use crate::units::{C_M_PER_S, CM, EV_INV_TO_S, NM, T_ROOM};
    use approx::assert_relative_eq;

    fn gold_volume_spectrum(volume: f64) -> PolarizabilitySpectrum {
        PolarizabilitySpectrum::VolumeChi {
            volume,
            model: gold(),
        }
    }

    #[test]
    fn drude_drag_moment_anchor() {
        let i = fpsf_x_integral(0.7).unwrap();
        assert_relative_eq!(i, 0.900_595_981_5, max_relative = 1e-8);
        assert_relative_eq!(i, 0.90, max_relative = 1e-2);
        assert!(fpsf_x_integral(0.0).is_err());
    }

    #[test]
    fn einstein_hopf_is_negative_and_linear_in_volume() {
        let f1 = einstein_hopf_derivative(&gold_volume_spectrum(1.0), T_ROOM).unwrap();
        let f2 = einstein_hopf_derivative(&gold_volume_spectrum(2.0), T_ROOM).unwrap();
        assert!(f1 < 0.0);
        assert_eq!(2.0 * f1, f2);
        let lossless = PolarizabilitySpectrum::VolumeChi {
            volume: 1.0,
            model: SusceptibilityModel::Constant { chi: 1.5 },
        };
        assert_eq!(einstein_hopf_derivative(&lossless, T_ROOM).unwrap(), 0.0);
    }

    #[test]
    fn needle_derivative_matches_einstein_hopf() {
        let geometry = BodyGeometry::Needle {
            length_a: CM,
            length_b: CM,
            radius: 10.0 * NM,
        };
        let closed = friction_derivative_needle(&geometry, &gold(), T_ROOM).unwrap();
        let spectrum = gold_volume_spectrum(PI * (10.0 * NM).powi(2) * CM);
        let quad = einstein_hopf_derivative(&spectrum, T_ROOM).unwrap();
        assert!(closed < 0.0);
        assert_relative_eq!(closed, quad, max_relative = 1e-8);
        // Frozen value for the reference needle.
        assert_relative_eq!(closed, -4.232_48e-2, max_relative = 1e-3);
    }

    #[test]
    fn first_order_drag_reduces_to_einstein_hopf() {
        let spec = gold_volume_spectrum(1.0);
        let thermal = ThermalPair::new(T_ROOM, 2.0 * T_ROOM);
        let v = 1e-3;
        let slope = einstein_hopf_derivative(&spec, T_ROOM).unwrap();
        let iso = friction_first_order(&spec, thermal, v, Polarization::Iso).unwrap();
        let zz = friction_first_order(&spec, thermal, v, Polarization::Zz).unwrap();
        assert_relative_eq!(iso / v, slope, max_relative = 1e-4);
        assert_relative_eq!(zz / v, slope / 5.0, max_relative = 1e-4);
        assert!(iso < 0.0 && zz < 0.0);
    }

    #[test]
    fn first_order_drag_is_odd_and_ignores_body_temperature() {
        let spec = gold_volume_spectrum(1.0);
        let thermal = ThermalPair::new(T_ROOM, 2.0 * T_ROOM);
        let plus = friction_first_order(&spec, thermal, 0.01, Polarization::Iso).unwrap();
        let minus = friction_first_order(&spec, thermal, -0.01, Polarization::Iso).unwrap();
        assert_relative_eq!(minus, -plus, max_relative = 1e-12);
        // The dipole's own temperature enters through a term odd across the
        // Doppler window and integrates away exactly.
        let hotter = ThermalPair::new(T_ROOM, 4.0 * T_ROOM);
        let same = friction_first_order(&spec, hotter, 0.1, Polarization::Iso).unwrap();
        let base = friction_first_order(&spec, thermal, 0.1, Polarization::Iso).unwrap();
        assert_relative_eq!(same, base, max_relative = 1e-10);
    }

    #[test]
    fn first_order_drag_domain_and_zero() {
        let spec = gold_volume_spectrum(1.0);
        let thermal = ThermalPair::new(T_ROOM, 2.0 * T_ROOM);
        for pol in [Polarization::Iso, Polarization::Zz] {
            assert_eq!(friction_first_order(&spec, thermal, 0.0, pol).unwrap(), 0.0);
            assert!(friction_first_order(&spec, thermal, 1.0, pol).is_err());
        }
    }

    #[test]
    fn reference_needle_terminal_velocity_and_relaxation_time() {
        // Hot gold needle, insulator half polystyrene-like chi = 1.5,
        // a = b = 1 cm, r = 10 nm, environment 300 K, body 600 K.
        let geometry = BodyGeometry::Needle {
            length_a: CM,
            length_b: CM,
            radius: 10.0 * NM,
        };
        let thermal = ThermalPair::new(T_ROOM, 2.0 * T_ROOM);
        let force = crate::forces::force_needle(&geometry, 1.5, &gold(), thermal).unwrap();
        let fprime = friction_derivative_needle(&geometry, &gold(), T_ROOM).unwrap();
        let v_t = terminal_velocity_friction(&force, fprime).unwrap();
        // Drifts toward the metal side at about four metres per second
        // (1.3e-8 in units of c).
        assert_relative_eq!(v_t * C_M_PER_S, -3.919, max_relative = 1e-2);
        assert_relative_eq!(v_t, -1.307e-8, max_relative = 1e-2);

        let mass = PI * (10.0 * NM).powi(2) * CM * crate::materials::gold_density_ev4();
        let t0 = friction_time_constant(mass, fprime).unwrap();
        assert_relative_eq!(t0 * EV_INV_TO_S, 5.289e8, max_relative = 1e-2);

        // Relaxation curve: 63% of terminal velocity after one time constant.
        let v63 = relaxation_velocity(v_t, t0, t0);
        assert_relative_eq!(v63 / v_t, 0.632_120_558_8, max_relative = 1e-9);

        let zero = ForceResult::zero_with_prefactor(1.0);
        assert_eq!(terminal_velocity_friction(&zero, fprime).unwrap(), 0.0);
        assert!(terminal_velocity_friction(&force, 0.0).is_err());
        assert!(friction_time_constant(-1.0, fprime).is_err());
    }

    #[test]
    fn pair_weight_and_kernel_shape() {
        assert_relative_eq!(needle_pair_weight(0.0), 16.0 / 105.0, max_relative = 1e-14);
        assert_eq!(needle_pair_weight(2.5), 0.0);
        assert_eq!(needle_r_kernel(0.0), 0.0);
        let small = needle_r_kernel(1e-3);
        assert!(small > 0.0 && small < 1e-4);
        // Linear growth at large argument, about 1% accurate by t = 1e3.
        let t = 1e3;
        assert_relative_eq!(
            needle_r_kernel(t),
            needle_r_kernel_asymptotic(t),
            max_relative = 1e-2
        );
        // The branch switch does not jump.
        let t = R_KERNEL_ASYMPTOTIC_SWITCH;
        assert_relative_eq!(
            needle_r_kernel(t),
            needle_r_kernel_asymptotic(t),
            max_relative = 5e-2
        );
    }

    #[test]
    fn second_order_needle_scalings() {
        let geometry = BodyGeometry::Needle {
            length_a: CM,
            length_b: CM,
            radius: 50.0 * NM,
        };
        assert_eq!(
            friction_second_order_needle(&geometry, 1.0, T_ROOM, 0.0).unwrap(),
            0.0
        );
        let f1 = friction_second_order_needle(&geometry, 1.0, T_ROOM, 1e-3).unwrap();
        let f2 = friction_second_order_needle(&geometry, 1.0, T_ROOM, 2e-3).unwrap();
        let f4 = friction_second_order_needle(&geometry, 2.0, T_ROOM, 1e-3).unwrap();
        assert!(f1 > 0.0);
        assert_eq!(f2, 2.0 * f1);
        assert_eq!(f4, 4.0 * f1);
    }

    #[test]
    fn second_order_is_far_below_first_order() {
        // chi0 = 1 needle, r = 50 nm, metal half 1 cm: the quadratic response
        // is eight orders of magnitude below the linear drag at any v.
        let geometry = BodyGeometry::Needle {
            length_a: CM,
            length_b: CM,
            radius: 50.0 * NM,
        };
        let v = 1e-3;
        let second = friction_second_order_needle(&geometry, 1.0, T_ROOM, v).unwrap();
        let first = friction_derivative_needle(&geometry, &gold(), T_ROOM).unwrap();
        let ratio = second / (v * first.abs());
        assert_relative_eq!(ratio, 5.452_8e-8, max_relative = 2e-2);
    }

    #[test]
    fn second_order_point_scalings() {
        let alpha = |omega: f64| 1.0 / (1.0 + omega * omega);
        let alpha2 = |omega: f64| 2.0 / (1.0 + omega * omega);
        assert_eq!(
            friction_second_order_point(&alpha, T_ROOM, 0.0).unwrap(),
            0.0
        );
        let f1 = friction_second_order_point(&alpha, T_ROOM, 1e-3).unwrap();
        let f2 = friction_second_order_point(&alpha, T_ROOM, 2e-3).unwrap();
        let f4 = friction_second_order_point(&alpha2, T_ROOM, 1e-3).unwrap();
        // Drag sign and leading linearity in v; exact quadratic in alpha.
        assert!(f1 < 0.0);
        assert_relative_eq!(f2, 2.0 * f1, max_relative = 1e-3);
        assert_relative_eq!(f4, 4.0 * f1, max_relative = 1e-12);
        assert!(friction_second_order_point(&alpha, T_ROOM, 1.0).is_err());
    }
}
