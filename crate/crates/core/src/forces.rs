//! Assembly of the self-propulsive force: the frequency quadrature of the
//! master formula and the per-geometry closed forms.
//!
//! Everything here evaluates the same object,
//!
//! `F = (4/pi) Integral_0^inf domega X_AB(omega) [b(beta omega) - b(beta' omega)] I_AB(omega)`
//!
//! with `X_AB = Im chi_A Re chi_B - Re chi_A Im chi_B`, `b` the Bose
//! occupation at the environment (`beta`) and body (`beta'`) temperatures,
//! and `I_AB` the geometric pair integral. Material A sits on the +z side,
//! B on the -z side; a negative force points from A toward B. For a
//! transparent dielectric A and a Drude metal B the force on a body hotter
//! than its environment is negative: the body is pushed toward the metal
//! side, for every geometry supported here.
//!
//! Closed-form paths factor the result as `force = prefactor * fhat` with a
//! dimensionless thermal factor `fhat`; direct quadrature paths report
//! `prefactor = 1` and put the whole force into `fhat`. Forces are in eV^2
//! (natural units) with a parallel newton conversion.

use rayon::prelude::*;

use crate::cubature::{
    janus_merged_converged, JANUS_SERIES_C2, JANUS_SERIES_C4, JANUS_SMALL_COEF, OMEGA_A_MAX,
};
use crate::error::{Error, Result};
use crate::geometry::{
    i_ab_janus, i_ab_janus_series, i_ab_needle, i_ab_plate, i_ab_shell, BodyGeometry, EvalMode,
    IabResult, JANUS_SERIES_SWITCH, SHELL_TAIL_SLOPE_REF,
};
use crate::materials::{x_ab, SusceptibilityModel};
use crate::quad::{
    compensated_sum, gauss_panels, gauss_panels_edges, integrate_refining, log_edges, ChebyshevFit,
    Panels,
};
use crate::specfun::{bose_diff, occupation, thermal_moment_diff};
use crate::units::{force_ev2_to_newton, ThermalPair, A0, BETA0};

use std::f64::consts::PI;

/// Highest Bose argument kept in frequency quadratures: occupation numbers
/// beyond `omega / T = 50` are below 2e-22 and cannot move any digit.
const BOSE_CUTOFF: f64 = 50.0;

/// Relative agreement between refinement levels at which the frequency
/// ladder stops.
const SPECTRAL_REL_TOL: f64 = 1e-9;

/// A force evaluation: natural units, newtons, and the factorization into a
/// dimensional prefactor (eV^2) and a dimensionless thermal factor.
#[derive(Debug, Clone, Copy)]
pub struct ForceResult {
    /// Axial force in eV^2; negative points from material A toward B.
    pub force_natural: f64,
    /// The same force in newtons.
    pub force_newtons: f64,
    /// Dimensionless thermal factor; `force_natural = prefactor * fhat`
    /// exactly.
    pub fhat: f64,
    /// Dimensional prefactor in eV^2 (1 for direct-quadrature routes).
    pub prefactor: f64,
    /// Absolute quadrature error estimate on `force_natural`, eV^2.
    pub quadrature_error: f64,
}

impl ForceResult {
    fn from_parts(prefactor: f64, fhat: f64, fhat_error: f64) -> Self {
        let force_natural = prefactor * fhat;
        ForceResult {
            force_natural,
            force_newtons: force_ev2_to_newton(force_natural),
            fhat,
            prefactor,
            quadrature_error: prefactor.abs() * fhat_error,
        }
    }

    /// Equilibrium (or identical-material) result: exactly zero force with
    /// the physically meaningful prefactor preserved for reporting.
    pub(crate) fn zero_with_prefactor(prefactor: f64) -> Self {
        ForceResult {
            force_natural: 0.0,
            force_newtons: 0.0,
            fhat: 0.0,
            prefactor,
            quadrature_error: 0.0,
        }
    }
}

// ---------------------------------------------------------------------------
// Generic spectral route
// ---------------------------------------------------------------------------

/// One resolution level of the master quadrature: returns the raw integral
/// (without the 4/pi) and the accumulated pair-integral error bound.
fn spectral_level(
    panels: &Panels,
    model_a: &SusceptibilityModel,
    model_b: &SusceptibilityModel,
    thermal: ThermalPair,
    iab: &(dyn Fn(f64) -> Result<IabResult> + Sync),
) -> Result<(f64, f64)> {
    let terms: Result<Vec<(f64, f64)>> = panels
        .nodes
        .par_iter()
        .zip(panels.weights.par_iter())
        .map(|(&omega, &w)| {
            let x = x_ab(model_a, model_b, omega)?;
            let weight = w * x * bose_diff(omega, thermal);
            let pair = iab(omega)?;
            Ok((weight * pair.value, weight.abs() * pair.error_estimate))
        })
        .collect();
    let terms = terms?;
    // Ordered compensated sums keep the result independent of the rayon
    // scheduling, so identical inputs give identical bits.
    let value = compensated_sum(terms.iter().map(|t| t.0));
    let err = compensated_sum(terms.iter().map(|t| t.1));
    Ok((value, err))
}

/// Master-formula force for arbitrary bulk materials and a caller-supplied
/// pair integral `I_AB(omega)`.
///
/// The frequency grid is logarithmic from `1e-4 T_max` to `50 T_max`
/// (`T_max` the larger temperature), which bounds both the infrared and the
/// Bose-tail truncation below 1e-8 relative for every kernel whose
/// low-frequency behavior is a positive power. The grid is doubled until two
/// levels agree to 1e-9 relative; the reported error is the last level
/// difference plus the propagated `I_AB` error estimates. Errors from the
/// pair integral (for example cubature refusals at large `omega a`)
/// propagate out unchanged.
pub fn force_spectral(
    model_a: &SusceptibilityModel,
    model_b: &SusceptibilityModel,
    thermal: ThermalPair,
    iab: &(dyn Fn(f64) -> Result<IabResult> + Sync),
) -> Result<ForceResult> {
    if thermal.is_equilibrium() || model_a == model_b {
        return Ok(ForceResult::zero_with_prefactor(1.0));
    }
    let t_max = thermal.t_env.max(thermal.t_body);
    let lo = 1e-4 * t_max;
    let hi = BOSE_CUTOFF * t_max;
    let norm = 4.0 / PI;

    let mut n_panels = 48;
    let level = |n: usize| -> Result<(f64, f64)> {
        let panels = gauss_panels_edges(&log_edges(lo, hi, n), 8);
        spectral_level(&panels, model_a, model_b, thermal, iab)
    };
    let (mut prev, _) = level(n_panels)?;
    let mut cur;
    let mut cur_iab_err;
    loop {
        n_panels *= 2;
        let (v, e) = level(n_panels)?;
        cur = v;
        cur_iab_err = e;
        let diff = (cur - prev).abs();
        if diff <= SPECTRAL_REL_TOL * cur.abs().max(1e-300) || n_panels >= 384 {
            let force = norm * cur;
            return Ok(ForceResult {
                force_natural: force,
                force_newtons: force_ev2_to_newton(force),
                fhat: force,
                prefactor: 1.0,
                quadrature_error: norm * (diff + cur_iab_err),
            });
        }
        prev = cur;
    }
}

/// Master-formula force with the pair integral chosen by the geometry.
///
/// Uses the converged evaluation for each body: the closed form for needle
/// and thin plates, convergence-certified cubature for shell and ball (the
/// ball switches to its high-order series below `omega a = 0.25`, where
/// cubature would waste effort). Geometries whose cubature range `omega a <=
/// 50` cannot cover the thermal spectrum fail with a non-convergence error
/// naming the offending size; the fitted-tail force routes remain available
/// for those.
pub fn force_generic(
    geometry: &BodyGeometry,
    model_a: &SusceptibilityModel,
    model_b: &SusceptibilityModel,
    thermal: ThermalPair,
) -> Result<ForceResult> {
    match *geometry {
        BodyGeometry::Needle {
            length_a,
            length_b,
            radius,
        } => {
            let area = PI * radius * radius;
            force_spectral(model_a, model_b, thermal, &move |omega| {
                i_ab_needle(omega, length_a, length_b, area)
            })
        }
        BodyGeometry::SphericalShell { radius, thickness } => {
            force_spectral(model_a, model_b, thermal, &move |omega| {
                i_ab_shell(omega, radius, thickness, EvalMode::Cubature)
            })
        }
        BodyGeometry::JanusBall { radius } => {
            force_spectral(model_a, model_b, thermal, &move |omega| {
                if omega * radius < JANUS_SERIES_SWITCH {
                    let value = i_ab_janus_series(omega, radius)?;
                    let x = omega * radius;
                    Ok(IabResult {
                        value,
                        mode: EvalMode::SmallUFit,
                        error_estimate: value.abs() * x.powi(6) * 0.1,
                        omega_a: x,
                    })
                } else {
                    i_ab_janus(omega, radius, EvalMode::Cubature)
                }
            })
        }
        BodyGeometry::Plate {
            area,
            thickness_a,
            thickness_b,
        } => force_spectral(model_a, model_b, thermal, &move |omega| {
            i_ab_plate(omega, area, thickness_a, thickness_b)
        }),
    }
}

// ---------------------------------------------------------------------------
// Geometry/material extraction helpers
// ---------------------------------------------------------------------------

fn as_needle(geometry: &BodyGeometry) -> Result<(f64, f64, f64)> {
    match *geometry {
        BodyGeometry::Needle {
            length_a,
            length_b,
            radius,
        } => {
            if !(length_a > 0.0 && length_b > 0.0 && radius > 0.0) {
                return Err(Error::domain(format!(
                    "needle dimensions must be positive (a={length_a}, b={length_b}, r={radius})"
                )));
            }
            Ok((length_a, length_b, radius))
        }
        ref g => Err(Error::InvalidInput(format!(
            "needle force requires a needle geometry, got {g:?}"
        ))),
    }
}

fn as_shell(geometry: &BodyGeometry) -> Result<(f64, f64)> {
    match *geometry {
        BodyGeometry::SphericalShell { radius, thickness } => {
            if !(radius > 0.0 && thickness > 0.0) {
                return Err(Error::domain(format!(
                    "shell dimensions must be positive (a={radius}, t={thickness})"
                )));
            }
            if thickness > 0.2 * radius {
                return Err(Error::domain(format!(
                    "thin-shell force needs thickness << radius (got t/a = {})",
                    thickness / radius
                )));
            }
            Ok((radius, thickness))
        }
        ref g => Err(Error::InvalidInput(format!(
            "shell force requires a spherical shell geometry, got {g:?}"
        ))),
    }
}

fn as_janus(geometry: &BodyGeometry) -> Result<f64> {
    match *geometry {
        BodyGeometry::JanusBall { radius } => {
            if !(radius > 0.0) {
                return Err(Error::domain(format!(
                    "ball radius must be positive, got {radius}"
                )));
            }
            Ok(radius)
        }
        ref g => Err(Error::InvalidInput(format!(
            "ball force requires a janus_ball geometry, got {g:?}"
        ))),
    }
}

fn as_plate(geometry: &BodyGeometry) -> Result<(f64, f64, f64)> {
    match *geometry {
        BodyGeometry::Plate {
            area,
            thickness_a,
            thickness_b,
        } => {
            if !(area > 0.0 && thickness_a > 0.0 && thickness_b > 0.0) {
                return Err(Error::domain(format!(
                    "plate dimensions must be positive (S={area}, tA={thickness_a}, tB={thickness_b})"
                )));
            }
            Ok((area, thickness_a, thickness_b))
        }
        ref g => Err(Error::InvalidInput(format!(
            "plate force requires a plate geometry, got {g:?}"
        ))),
    }
}

fn as_drude(model: &SusceptibilityModel) -> Result<(f64, f64)> {
    match *model {
        SusceptibilityModel::Drude { omega_p, nu } => {
            if !(omega_p > 0.0 && nu > 0.0) {
                return Err(Error::domain(format!(
                    "Drude parameters must be positive (omega_p={omega_p}, nu={nu})"
                )));
            }
            Ok((omega_p, nu))
        }
        ref m => Err(Error::InvalidInput(format!(
            "this route requires a Drude metal for material B, got {m:?}"
        ))),
    }
}

fn as_lorentz(model: &SusceptibilityModel) -> Result<(f64, f64, f64)> {
    match *model {
        SusceptibilityModel::Lorentz {
            omega_s,
            omega0,
            gamma,
        } => {
            if !(omega_s > 0.0 && omega0 > 0.0 && gamma > 0.0) {
                return Err(Error::domain(format!(
                    "Lorentz parameters must be positive (omega_s={omega_s}, omega0={omega0}, gamma={gamma})"
                )));
            }
            Ok((omega_s, omega0, gamma))
        }
        ref m => Err(Error::InvalidInput(format!(
            "the dispersive ball route requires a Lorentz dielectric for material A, got {m:?}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Needle
// ---------------------------------------------------------------------------

/// Dimensionless needle force factor.
///
/// In the scaled frequency `y = beta_0 omega`, with `lambda = beta_0 nu` and
/// segment ratios `alpha = length / beta_0`:
///
/// `fhat = 30 (a_0/beta_0)^5 Integral_0^inf dy y^4 / (y^2 + lambda^2)
///         [f(y alpha_a + y alpha_b) - f(y alpha_a) - f(y alpha_b)]
///         [b(y/T_hat) - b(y/T_hat')]`
///
/// where `T_hat = beta_0 T`. Positive for a body hotter than its
/// environment. The quadrature uses half-period panels against the `2 omega
/// (a + b)` kernel oscillation and reports the coarse/fine difference as its
/// error.
pub fn needle_fhat(
    length_a: f64,
    length_b: f64,
    nu: f64,
    thermal: ThermalPair,
) -> Result<(f64, f64)> {
    if !(length_a > 0.0 && length_b > 0.0 && nu > 0.0) {
        return Err(Error::domain(format!(
            "needle factor needs positive lengths and damping (a={length_a}, b={length_b}, nu={nu})"
        )));
    }
    if thermal.is_equilibrium() {
        return Ok((0.0, 0.0));
    }
    let lam = BETA0 * nu;
    let alpha_a = length_a / BETA0;
    let alpha_b = length_b / BETA0;
    let scaled = ThermalPair::new(BETA0 * thermal.t_env, BETA0 * thermal.t_body);
    let t_hat_max = scaled.t_env.max(scaled.t_body);
    let y_max = BOSE_CUTOFF * t_hat_max + 20.0;
    // Half-period panels for the oscillation of the combined kernel.
    let half_period = PI / (2.0 * (alpha_a + alpha_b));
    let n_panels = ((y_max / half_period).ceil() as usize).clamp(48, 4_000_000);

    let integrand = |y: f64| {
        let comb = crate::kernel::needle_f_comb(y * alpha_a, y * alpha_b);
        y.powi(4) / (y * y + lam * lam) * comb * bose_diff(y, scaled)
    };
    let quad = |n: usize| -> f64 {
        let panels = gauss_panels(0.0, y_max, n, 7);
        let terms: Vec<f64> = panels
            .nodes
            .par_iter()
            .zip(panels.weights.par_iter())
            .map(|(&y, &w)| w * integrand(y))
            .collect();
        compensated_sum(terms.into_iter())
    };
    let coarse = quad(n_panels);
    let fine = quad(2 * n_panels);
    let scale = 30.0 * (A0 / BETA0).powi(5);
    Ok((scale * fine, scale * (fine - coarse).abs()))
}

/// Saturation value of [`needle_fhat`] for segment lengths much longer than
/// the thermal wavelength, where only the interface region contributes:
///
/// `fhat_sat = 11 pi (a_0/beta_0)^5 [J(T_hat') - J(T_hat)]`,
/// `J(T_hat) = Integral dy y^4 / ((y^2 + lambda^2)(e^{y/T_hat} - 1))`.
pub fn needle_fhat_saturation(nu: f64, thermal: ThermalPair) -> Result<f64> {
    if !(nu > 0.0) {
        return Err(Error::domain(format!(
            "needle saturation needs nu > 0, got {nu}"
        )));
    }
    let lam = BETA0 * nu;
    let tail = |t_hat: f64| -> f64 {
        if t_hat <= 0.0 {
            return 0.0;
        }
        let y_max = BOSE_CUTOFF * t_hat + 20.0;
        let (value, _) = integrate_refining(0.0, y_max, 64, 8, 1e-12, 5, |y| {
            y.powi(4) / (y * y + lam * lam) * occupation(y, t_hat)
        });
        value
    };
    Ok(11.0 * PI * (A0 / BETA0).powi(5)
        * (tail(BETA0 * thermal.t_body) - tail(BETA0 * thermal.t_env)))
}

/// Needle force: transparent dielectric A (`chi_a`, constant), Drude metal
/// B, cross-section radius and segment lengths from the geometry.
///
/// `force = prefactor * fhat` with
/// `prefactor = -(C^2 omega_p^2 nu chi_a / 120 pi^3)(beta_0^2 / a_0^5)`
/// (`C` the cross-section area). The prefactor is negative for `chi_a > 0`,
/// and `fhat > 0` for a hot body, so a hot needle is pulled toward its metal
/// half.
pub fn force_needle(
    geometry: &BodyGeometry,
    chi_a: f64,
    metal: &SusceptibilityModel,
    thermal: ThermalPair,
) -> Result<ForceResult> {
    let (length_a, length_b, radius) = as_needle(geometry)?;
    let (omega_p, nu) = as_drude(metal)?;
    let area = PI * radius * radius;
    let prefactor = -(area * area * omega_p * omega_p * nu * chi_a / (120.0 * PI.powi(3)))
        * BETA0 * BETA0 / A0.powi(5);
    if thermal.is_equilibrium() {
        return Ok(ForceResult::zero_with_prefactor(prefactor));
    }
    let (fhat, fhat_err) = needle_fhat(length_a, length_b, nu, thermal)?;
    Ok(ForceResult::from_parts(prefactor, fhat, fhat_err))
}

// ---------------------------------------------------------------------------
// Spherical shell
// ---------------------------------------------------------------------------

/// Shell force: dielectric upper hemisphere (`chi_a`), Drude lower.
///
/// `EvalMode::LargeUFit` is the closed form built on the fitted tail of the
/// shell integral: `prefactor = -(omega_p^2 t^2 a / 16 pi^2) chi_a nu^3 s`
/// with `s` = [`SHELL_TAIL_SLOPE_REF`], and
/// `fhat = M_3(nu/T) - M_3(nu/T')`, negative for a hot body, so the force
/// points toward the metal hemisphere. `EvalMode::Cubature` runs the full
/// frequency quadrature over the converged surface cubature instead, which
/// is only feasible while `omega a` stays within the cubature range (small
/// shells); it reports `prefactor = 1`.
pub fn force_shell(
    geometry: &BodyGeometry,
    chi_a: f64,
    metal: &SusceptibilityModel,
    thermal: ThermalPair,
    mode: EvalMode,
) -> Result<ForceResult> {
    let (radius, thickness) = as_shell(geometry)?;
    let (omega_p, nu) = as_drude(metal)?;
    match mode {
        EvalMode::LargeUFit => {
            let prefactor = -(omega_p * omega_p * thickness * thickness * radius
                / (16.0 * PI * PI))
                * chi_a
                * nu.powi(3)
                * SHELL_TAIL_SLOPE_REF;
            let fhat = thermal_moment_diff(3, nu, thermal)?;
            Ok(ForceResult::from_parts(prefactor, fhat, 1e-14 * fhat.abs()))
        }
        EvalMode::Cubature => {
            let dielectric = SusceptibilityModel::Constant { chi: chi_a };
            force_spectral(&dielectric, metal, thermal, &move |omega| {
                i_ab_shell(omega, radius, thickness, EvalMode::Cubature)
            })
        }
        other => Err(Error::UnsupportedVariant(format!(
            "shell force supports large_u_fit (closed form) or cubature, not {other:?}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Janus ball
// ---------------------------------------------------------------------------

/// Ball force: dielectric upper half (`chi_a`), Drude lower half.
///
/// `EvalMode::SmallUFit` is the closed small-ball form
/// `prefactor = chi_a omega_p^2 (nu a)^7 / (27 pi)`,
/// `fhat = M_7(nu/T) - M_7(nu/T')` (negative for a hot body: the ball is
/// pushed toward the metal side). Valid while the thermal spectrum satisfies
/// `omega a << 1`.
///
/// `EvalMode::Cubature` evaluates the full frequency quadrature; the smooth
/// reduced integral `J(u)/u^8` is cached on a Chebyshev grid (series below
/// `u = 0.25`, converged cubature above) so the frequency ladder stays
/// cheap. Sizes with `50 T_max a` beyond the cubature range are refused with
/// a non-convergence error. `EvalMode::LargeUFit` integrates over the fitted
/// `-0.927 (omega a)^4` tail instead (meaningful when the thermal support
/// lies at `omega a > 10`). Both quadrature routes report `prefactor = 1`.
pub fn force_janus(
    geometry: &BodyGeometry,
    chi_a: f64,
    metal: &SusceptibilityModel,
    thermal: ThermalPair,
    mode: EvalMode,
) -> Result<ForceResult> {
    let radius = as_janus(geometry)?;
    let (omega_p, nu) = as_drude(metal)?;
    match mode {
        EvalMode::SmallUFit => {
            let prefactor = chi_a * omega_p * omega_p * (nu * radius).powi(7) / (27.0 * PI);
            let fhat = thermal_moment_diff(7, nu, thermal)?;
            Ok(ForceResult::from_parts(prefactor, fhat, 1e-14 * fhat.abs()))
        }
        EvalMode::Cubature => {
            if thermal.is_equilibrium() {
                return Ok(ForceResult::zero_with_prefactor(1.0));
            }
            let t_max = thermal.t_env.max(thermal.t_body);
            let u_max = BOSE_CUTOFF * t_max * radius;
            if u_max > OMEGA_A_MAX {
                return Err(Error::nonconvergence(
                    u_max,
                    format!(
                        "ball spectral quadrature needs omega*a up to {u_max:.3}, beyond the \
                         cubature range {OMEGA_A_MAX}; use the small_u_fit closed form or a \
                         smaller ball"
                    ),
                ));
            }
            // Reduced integral J(u)/u^8: smooth, order -2 pi/27 at u = 0.
            let phi = |u: f64| -> Result<f64> {
                if u < JANUS_SERIES_SWITCH {
                    let u2 = u * u;
                    Ok(JANUS_SMALL_COEF * (1.0 - JANUS_SERIES_C2 * u2 + JANUS_SERIES_C4 * u2 * u2))
                } else {
                    let (merged, _) = janus_merged_converged(u)?;
                    Ok(merged / u.powi(8))
                }
            };
            let n_nodes = (16 + (4.0 * u_max).ceil() as usize).min(64);
            let fit = ChebyshevFit::try_new(0.0, u_max, n_nodes, phi)?;
            let dielectric = SusceptibilityModel::Constant { chi: chi_a };
            let fit_tail = fit.tail_estimate();
            force_spectral(&dielectric, metal, thermal, &move |omega| {
                let u = omega * radius;
                let value = fit.eval(u) * u.powi(8) / (8.0 * PI * radius);
                Ok(IabResult {
                    value,
                    mode: EvalMode::Cubature,
                    error_estimate: fit_tail * u.powi(8) / (8.0 * PI * radius),
                    omega_a: u,
                })
            })
        }
        EvalMode::LargeUFit => {
            let dielectric = SusceptibilityModel::Constant { chi: chi_a };
            force_spectral(&dielectric, metal, thermal, &move |omega| {
                i_ab_janus(omega, radius, EvalMode::LargeUFit)
            })
        }
        other => Err(Error::UnsupportedVariant(format!(
            "ball force supports small_u_fit, cubature, or large_u_fit, not {other:?}"
        ))),
    }
}

/// Ball force with a dispersive (Lorentz) dielectric half.
///
/// `force = prefactor * fhat` with
/// `prefactor = omega_p^2 omega_s^2 a^7 / (27 pi beta_0^5)` and, in scaled
/// frequency `y = beta_0 omega` (`lambda = beta_0 nu`, `mu = beta_0 gamma`,
/// `y_0 = beta_0 omega_0`, `T_hat = beta_0 T`):
///
/// `fhat = Integral_0^inf dy y^7 [y_0^2 lambda + y^2 (mu - lambda)] /
///         {[(y_0^2 - y^2)^2 + y^2 mu^2][y^2 + lambda^2]}
///         [b(y/T_hat) - b(y/T_hat')]`
///
/// In the dispersionless limit (`omega_0` far above the thermal window) this
/// reduces exactly to the small-ball closed form with
/// `chi_a = omega_s^2 / omega_0^2`.
pub fn force_janus_dispersive(
    geometry: &BodyGeometry,
    dielectric: &SusceptibilityModel,
    metal: &SusceptibilityModel,
    thermal: ThermalPair,
) -> Result<ForceResult> {
    let radius = as_janus(geometry)?;
    let (omega_s, omega0, gamma) = as_lorentz(dielectric)?;
    let (omega_p, nu) = as_drude(metal)?;
    let prefactor =
        omega_p * omega_p * omega_s * omega_s * radius.powi(7) / (27.0 * PI * BETA0.powi(5));
    if thermal.is_equilibrium() {
        return Ok(ForceResult::zero_with_prefactor(prefactor));
    }
    let lam = BETA0 * nu;
    let mu = BETA0 * gamma;
    let y0 = BETA0 * omega0;
    let scaled = ThermalPair::new(BETA0 * thermal.t_env, BETA0 * thermal.t_body);
    let t_hat_max = scaled.t_env.max(scaled.t_body);
    let y_hi = BOSE_CUTOFF * t_hat_max + 20.0;

    let integrand = |y: f64| {
        let num = y0 * y0 * lam + y * y * (mu - lam);
        let res = y0 * y0 - y * y;
        let den = (res * res + y * y * mu * mu) * (y * y + lam * lam);
        y.powi(7) * num / den * bose_diff(y, scaled)
    };
    // Split around the oscillator resonance when it lies inside the thermal
    // window, so the refinement ladder resolves the Lorentzian peak.
    let band = 6.0 * mu.max(1.0);
    let mut cuts = vec![0.0, y_hi];
    for edge in [y0 - band, y0 + band] {
        if edge > 0.0 && edge < y_hi {
            cuts.push(edge);
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut fhat = 0.0;
    let mut err = 0.0;
    for pair in cuts.windows(2) {
        let (v, e) = integrate_refining(pair[0], pair[1], 64, 8, 1e-11, 6, integrand);
        fhat += v;
        err += e;
    }
    Ok(ForceResult::from_parts(prefactor, fhat, err))
}

// ---------------------------------------------------------------------------
// Plate
// ---------------------------------------------------------------------------

/// Stacked-film force: blackbody film A (upper) over a Drude-metal film B.
///
/// The blackbody surface enters through `t_A Im chi_A = 1/(4 omega)`, so the
/// cross response is `X_AB = Re chi_B / (4 omega t_A)` and the thin-film
/// closed form is
///
/// `force = prefactor * fhat`,
/// `prefactor = S t_B (t_A + t_B) omega_p^2 nu^4 / (24 pi^2)`,
/// `fhat = M_5(nu/T) - M_5(nu/T')`.
///
/// `fhat < 0` for a hot body: the films accelerate toward the metal side,
/// with the same orientation convention as every other geometry here. Valid
/// in the thin-film window `omega_thermal * max(t) <`
/// [`crate::geometry::PLATE_THIN_FILM_LIMIT`]; callers surface that check.
pub fn force_plate(
    geometry: &BodyGeometry,
    metal: &SusceptibilityModel,
    thermal: ThermalPair,
) -> Result<ForceResult> {
    let (area, t_a, t_b) = as_plate(geometry)?;
    let (omega_p, nu) = as_drude(metal)?;
    let prefactor =
        area * t_b * (t_a + t_b) * omega_p * omega_p * nu.powi(4) / (24.0 * PI * PI);
    let fhat = thermal_moment_diff(5, nu, thermal)?;
    Ok(ForceResult::from_parts(prefactor, fhat, 1e-14 * fhat.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{CM, NM, T_ROOM, UM};
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn gold() -> SusceptibilityModel {
        crate::materials::gold()
    }

    fn room_hot() -> ThermalPair {
        ThermalPair::new(0.025, 0.05)
    }

    #[test]
    fn needle_prefactor_anchor() {
        // Cross-section radius 1 mm, chi_a = 1, gold: |prefactor| frozen from
        // an independent high-precision evaluation.
        let geom = BodyGeometry::Needle {
            length_a: CM,
            length_b: CM,
            radius: 0.1 * CM,
        };
        let f = force_needle(&geom, 1.0, &gold(), ThermalPair::new(0.025, 0.025)).unwrap();
        assert_relative_eq!(f.prefactor, -2.406_43e-8, max_relative = 1e-4);
        assert_relative_eq!(
            force_ev2_to_newton(f.prefactor.abs()),
            1.927_55e-20,
            max_relative = 1e-3
        );
        // Equilibrium input: exactly zero force.
        assert_eq!(f.force_natural, 0.0);
        assert_eq!(f.fhat, 0.0);
    }

    #[test]
    fn needle_fhat_long_needle_anchor() {
        // a = b = 1 cm, T = 300 K (0.025 eV), T' = 600 K (0.05 eV).
        let (fhat, err) = needle_fhat(CM, CM, 0.035, room_hot()).unwrap();
        assert_relative_eq!(fhat, 1.532_844_2e18, max_relative = 1e-4);
        assert!(err < 1e-4 * fhat.abs());
        // The saturation value sits just above the 1 cm result.
        let sat = needle_fhat_saturation(0.035, room_hot()).unwrap();
        assert_relative_eq!(sat, 1.533_023_8e18, max_relative = 1e-5);
        assert!(sat > fhat);
    }

    #[test]
    fn needle_closed_and_spectral_routes_agree() {
        let thermal = room_hot();
        for half in [100.0 * NM, UM] {
            let geom = BodyGeometry::Needle {
                length_a: half,
                length_b: half,
                radius: half / 50.0,
            };
            let closed = force_needle(&geom, 1.5, &gold(), thermal).unwrap();
            let dielectric = SusceptibilityModel::Constant { chi: 1.5 };
            let spectral = force_generic(&geom, &dielectric, &gold(), thermal).unwrap();
            assert_relative_eq!(
                closed.force_natural,
                spectral.force_natural,
                max_relative = 1e-6
            );
            assert!(closed.force_natural < 0.0, "hot needle pulled toward metal");
        }
    }

    #[test]
    fn force_factorization_is_exact() {
        let geom = BodyGeometry::Needle {
            length_a: UM,
            length_b: 2.0 * UM,
            radius: 10.0 * NM,
        };
        let f = force_needle(&geom, 2.0, &gold(), room_hot()).unwrap();
        assert_abs_diff_eq!(
            f.force_natural,
            f.prefactor * f.fhat,
            epsilon = 1e-12 * f.force_natural.abs()
        );
        assert_relative_eq!(
            f.force_newtons,
            f.force_natural * crate::units::EV2_TO_NEWTON,
            max_relative = 1e-15
        );
    }

    #[test]
    fn material_swap_flips_sign() {
        let geom = BodyGeometry::Needle {
            length_a: UM,
            length_b: UM,
            radius: 20.0 * NM,
        };
        let a = SusceptibilityModel::Constant { chi: 1.5 };
        let b = gold();
        let ab = force_generic(&geom, &a, &b, room_hot()).unwrap();
        let ba = force_generic(&geom, &b, &a, room_hot()).unwrap();
        assert_relative_eq!(ab.force_natural, -ba.force_natural, max_relative = 1e-10);

        // Two distinct Drude metals on a symmetric plate: same antisymmetry.
        let plate = BodyGeometry::Plate {
            area: UM * UM,
            thickness_a: 5.0 * NM,
            thickness_b: 5.0 * NM,
        };
        let m1 = SusceptibilityModel::Drude {
            omega_p: 9.0,
            nu: 0.035,
        };
        let m2 = SusceptibilityModel::Drude {
            omega_p: 4.0,
            nu: 0.1,
        };
        let p12 = force_generic(&plate, &m1, &m2, room_hot()).unwrap();
        let p21 = force_generic(&plate, &m2, &m1, room_hot()).unwrap();
        assert_relative_eq!(p12.force_natural, -p21.force_natural, max_relative = 1e-10);
    }

    #[test]
    fn identical_materials_give_exact_zero() {
        let geom = BodyGeometry::JanusBall { radius: 10.0 * NM };
        let f = force_generic(&geom, &gold(), &gold(), room_hot()).unwrap();
        assert_eq!(f.force_natural, 0.0);
    }

    #[test]
    fn spectral_route_is_deterministic() {
        let geom = BodyGeometry::Needle {
            length_a: UM,
            length_b: UM,
            radius: 20.0 * NM,
        };
        let a = SusceptibilityModel::Constant { chi: 1.5 };
        let f1 = force_generic(&geom, &a, &gold(), room_hot()).unwrap();
        let f2 = force_generic(&geom, &a, &gold(), room_hot()).unwrap();
        assert_eq!(f1.force_natural.to_bits(), f2.force_natural.to_bits());
    }

    #[test]
    fn shell_closed_form_anchors() {
        // Gold shell, radius 1 cm, thickness at the minimum skin depth
        // 2/omega_p; chi_a = 1; 300 K environment, 600 K body.
        let geom = BodyGeometry::SphericalShell {
            radius: CM,
            thickness: 2.0 / 9.0,
        };
        let f = force_shell(&geom, 1.0, &gold(), room_hot(), EvalMode::LargeUFit).unwrap();
        assert_relative_eq!(f.prefactor, 1.459_632_7, max_relative = 1e-4);
        assert_relative_eq!(f.fhat, -1.668_821_162_226_355_8, max_relative = 1e-12);
        assert!(f.force_natural < 0.0);
        assert_relative_eq!(
            force_ev2_to_newton(f.prefactor),
            1.169_2e-12,
            max_relative = 1e-3
        );
    }

    #[test]
    fn shell_cubature_route_small_shell() {
        // Small enough that 50 T_max a stays inside the cubature range.
        let geom = BodyGeometry::SphericalShell {
            radius: 100.0 * NM,
            thickness: 2.0 * NM,
        };
        let f = force_shell(&geom, 1.0, &gold(), room_hot(), EvalMode::Cubature).unwrap();
        assert!(f.force_natural < 0.0, "hot shell pulled toward metal half");
        assert_eq!(f.prefactor, 1.0);
        assert!(f.quadrature_error < 1e-3 * f.force_natural.abs());
        // Closed-form route refuses other modes.
        assert!(force_shell(&geom, 1.0, &gold(), room_hot(), EvalMode::MonteCarlo).is_err());
    }

    #[test]
    fn janus_closed_form_anchors() {
        let geom = BodyGeometry::JanusBall { radius: UM };
        let f = force_janus(&geom, 1.0, &gold(), room_hot(), EvalMode::SmallUFit).unwrap();
        assert_relative_eq!(f.prefactor, 4.799_96e-6, max_relative = 1e-4);
        assert_relative_eq!(f.fhat, -997.771_599_630_353_84, max_relative = 1e-12);
        assert!(f.force_natural < 0.0);

        // Body at 300 K radiating into a zero-temperature environment.
        let cold_env = ThermalPair::new(0.0, 0.025);
        let f0 = force_janus(&geom, 1.0, &gold(), cold_env, EvalMode::SmallUFit).unwrap();
        assert_relative_eq!(f0.fhat, -14.860_918_589_139_523, max_relative = 1e-12);
    }

    #[test]
    fn janus_closed_vs_spectral_small_ball() {
        // 10 nm ball: thermal window tops out at omega a ~ 0.125, where the
        // eighth-power law holds to a few 1e-4.
        let geom = BodyGeometry::JanusBall { radius: 10.0 * NM };
        let closed = force_janus(&geom, 1.0, &gold(), room_hot(), EvalMode::SmallUFit).unwrap();
        let spectral = force_janus(&geom, 1.0, &gold(), room_hot(), EvalMode::Cubature).unwrap();
        assert_relative_eq!(
            closed.force_natural,
            spectral.force_natural,
            max_relative = 2e-3
        );
        // Oversized ball: the spectral route refuses rather than extrapolate.
        let big = BodyGeometry::JanusBall { radius: CM };
        let err = force_janus(&big, 1.0, &gold(), room_hot(), EvalMode::Cubature).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }));
    }

    #[test]
    fn dispersive_ball_reduces_to_constant_chi() {
        // Resonance far above the thermal window: chi_a -> omega_s^2/omega_0^2.
        let geom = BodyGeometry::JanusBall { radius: 50.0 * NM };
        let omega0 = 600.0;
        let chi_a: f64 = 1.5;
        let lorentz = SusceptibilityModel::Lorentz {
            omega_s: omega0 * chi_a.sqrt(),
            omega0,
            gamma: 0.65,
        };
        let disp = force_janus_dispersive(&geom, &lorentz, &gold(), room_hot()).unwrap();
        let fixed = force_janus(&geom, chi_a, &gold(), room_hot(), EvalMode::SmallUFit).unwrap();
        assert_relative_eq!(disp.force_natural, fixed.force_natural, max_relative = 1e-3);
        assert!(disp.force_natural < 0.0);
    }

    #[test]
    fn dispersive_ball_with_thermal_resonance_overlap() {
        // Hot enough that the quadrature window reaches the resonance; the
        // split integration must stay finite and negative.
        let geom = BodyGeometry::JanusBall { radius: 10.0 * NM };
        let f = force_janus_dispersive(
            &geom,
            &crate::materials::polystyrene(),
            &gold(),
            ThermalPair::new(0.025, 0.3),
        )
        .unwrap();
        assert!(f.force_natural.is_finite() && f.force_natural < 0.0);
    }

    #[test]
    fn plate_closed_form_anchors() {
        // 1 cm^2 films, both 10 nm thick, gold lower film.
        let geom = BodyGeometry::Plate {
            area: CM * CM,
            thickness_a: 10.0 * NM,
            thickness_b: 10.0 * NM,
        };
        let f = force_plate(&geom, &gold(), room_hot()).unwrap();
        assert_relative_eq!(f.prefactor, 6.414_40, max_relative = 1e-4);
        assert_relative_eq!(f.fhat, -23.687_564_467_199_518, max_relative = 1e-12);
        assert!(f.force_natural < 0.0, "hot films accelerate toward the metal");
    }

    #[test]
    fn plate_fhat_matches_direct_quadrature() {
        // M_5 difference vs direct integration of x^5/(x^2+1) between the
        // Bose factors, at the working temperatures.
        let nu = 0.035;
        let thermal = room_hot();
        let closed = thermal_moment_diff(5, nu, thermal).unwrap();
        let (quad, _) = integrate_refining(0.0, 4000.0, 512, 8, 1e-12, 6, |x| {
            x.powi(5) / (x * x + 1.0) * bose_diff(nu * x, thermal)
        });
        assert_relative_eq!(closed, quad, max_relative = 1e-8);
    }

    #[test]
    fn wrong_geometry_kinds_are_rejected() {
        let ball = BodyGeometry::JanusBall { radius: UM };
        assert!(force_needle(&ball, 1.0, &gold(), room_hot()).is_err());
        assert!(force_plate(&ball, &gold(), room_hot()).is_err());
        let needle = BodyGeometry::Needle {
            length_a: UM,
            length_b: UM,
            radius: NM,
        };
        assert!(force_shell(&needle, 1.0, &gold(), room_hot(), EvalMode::LargeUFit).is_err());
        assert!(force_janus(&needle, 1.0, &gold(), room_hot(), EvalMode::SmallUFit).is_err());
        // Non-Drude metal is rejected by the closed routes.
        let diel = SusceptibilityModel::Constant { chi: 1.0 };
        assert!(force_needle(&needle, 1.0, &diel, room_hot()).is_err());
        // Temperature convention sanity: equilibrium at any T is zero force.
        let eq = ThermalPair::new(T_ROOM, T_ROOM);
        let f = force_needle(&needle, 1.0, &gold(), eq).unwrap();
        assert_eq!(f.force_natural, 0.0);
    }
}
