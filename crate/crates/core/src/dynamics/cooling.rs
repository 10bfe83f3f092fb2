//! Radiative cooling and the velocity accumulated while a body cools.
//!
//! A hot body radiates, cools toward the environment temperature, and feels
//! the self-propulsive force only while the temperature imbalance lasts. With
//! drag negligible on the cooling time scale the momentum kick integrates to
//! a terminal velocity
//!
//!   v_T = (t_scale * prefactor / m) Int du fhat(u) measure(u),
//!
//! where u = T_body / T_env runs from the initial ratio down to 1, `measure`
//! converts temperature loss into elapsed time for the chosen cooling model,
//! and `prefactor * fhat` is the closed-form propulsive force of the janus
//! ball or the thin spherical shell.
//!
//! Two cooling models are supported, both with a Dulong-Petit heat capacity
//! of 3 per atom: a Lorenz-Lorentz dressed radiator (strong, T^6 energy loss)
//! and the bare weak-susceptibility Drude radiator. Units: temperatures and
//! frequencies in eV, times in 1/eV internally (converted to seconds in
//! reported samples), velocities in m/s.

use super::{spectral_ladder, PolarizabilitySpectrum};
use crate::error::{Error, Result};
use crate::forces::{force_janus, force_shell};
use crate::geometry::{BodyGeometry, EvalMode};
use crate::materials::SusceptibilityModel;
use crate::quad::{gauss_legendre, log_edges, NeumaierSum};
use crate::specfun::{bose_diff, thermal_moment_closed, thermal_moment_diff, ThermalMomentSpec};
use crate::units::{ThermalPair, C_M_PER_S, EV_INV_TO_S};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// How the body sheds heat while it cools.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum CoolingModel {
    /// Lorenz-Lorentz dressed metal radiator: Im alpha = 9 V nu omega /
    /// omega_p^2, giving a T^6 - T'^6 energy loss and the slow cooling scale
    /// t_c = (21 / 8 pi^4) n omega_p^2 / (nu T^5).
    DebyeLorenzLorentz {
        /// Atom number density of the metal (eV^3).
        n_density: f64,
        /// Plasma frequency (eV).
        omega_p: f64,
        /// Drude damping rate (eV).
        nu: f64,
    },
    /// Bare Drude volume radiator (weak-susceptibility limit), giving the
    /// fast scale t_c = 6 pi^2 n / (nu^2 omega_p^2).
    WeakSusceptibility {
        /// Atom number density of the metal (eV^3).
        n_density: f64,
        /// Plasma frequency (eV).
        omega_p: f64,
        /// Drude damping rate (eV).
        nu: f64,
    },
}

impl CoolingModel {
    fn parts(&self) -> Result<(f64, f64, f64)> {
        let (n, wp, nu) = match *self {
            CoolingModel::DebyeLorenzLorentz {
                n_density,
                omega_p,
                nu,
            }
            | CoolingModel::WeakSusceptibility {
                n_density,
                omega_p,
                nu,
            } => (n_density, omega_p, nu),
        };
        if !(n > 0.0 && wp > 0.0 && nu > 0.0) {
            return Err(Error::domain(
                "cooling model needs positive n_density, omega_p, and nu",
            ));
        }
        Ok((n, wp, nu))
    }

    /// Characteristic cooling time in natural units (1/eV); multiply by
    /// `EV_INV_TO_S` for seconds. About 2000 s for gold at room temperature
    /// in the Lorenz-Lorentz model and 2e-4 s in the weak model.
    pub fn time_scale(&self, t_env: f64) -> Result<f64> {
        if !(t_env > 0.0) {
            return Err(Error::domain("cooling time scale needs t_env > 0"));
        }
        let (n, wp, nu) = self.parts()?;
        Ok(match self {
            CoolingModel::DebyeLorenzLorentz { .. } => {
                21.0 / (8.0 * PI.powi(4)) * n * wp * wp / (nu * t_env.powi(5))
            }
            CoolingModel::WeakSusceptibility { .. } => 6.0 * PI * PI * n / (nu * nu * wp * wp),
        })
    }

    /// Jacobian of time against temperature ratio: dt = t_scale * measure(u) du
    /// while the body cools through u = T_body / T_env > 1. Diverges
    /// logarithmically as u -> 1; equilibrium is never reached exactly.
    pub fn measure(&self, u: f64, t_env: f64) -> Result<f64> {
        if !(u > 1.0) {
            return Err(Error::domain(format!(
                "cooling measure is defined for u = T_body/T_env > 1, got {u}"
            )));
        }
        if !(t_env > 0.0) {
            return Err(Error::domain("cooling measure needs t_env > 0"));
        }
        let (_, _, nu) = self.parts()?;
        match self {
            CoolingModel::DebyeLorenzLorentz { .. } => Ok(1.0 / (u.powi(6) - 1.0)),
            CoolingModel::WeakSusceptibility { .. } => {
                let lambda = nu / t_env;
                let m3 = |y: f64| {
                    thermal_moment_closed(ThermalMomentSpec {
                        power_n: 3,
                        scale_y: y,
                    })
                };
                let delta = m3(lambda / u)? - m3(lambda)?;
                Ok(1.0 / (2.0 * lambda * delta))
            }
        }
    }
}

/// Net power absorbed by a small body (eV^2): positive when the environment
/// is hotter than the body, negative while the body cools.
///
///   P = (1 / pi^2) Int domega omega^4 Im alpha(omega) [n(omega,T) - n(omega,T')].
///
/// For a blackbody patch this reproduces the Stefan-Boltzmann law
/// S (pi^2/60)(T^4 - T'^4) exactly.
pub fn radiated_power(spec: &PolarizabilitySpectrum, thermal: ThermalPair) -> Result<f64> {
    if thermal.is_equilibrium() {
        return Ok(0.0);
    }
    let t_ref = thermal.t_env.max(thermal.t_body);
    let integrand =
        |omega: f64| -> Result<f64> { Ok(omega.powi(4) * spec.alpha_im(omega)? * bose_diff(omega, thermal)) };
    let (value, _) = spectral_ladder(1e-4 * t_ref, 50.0 * t_ref, &integrand)?;
    Ok(value / (PI * PI))
}

/// Time (1/eV) for the body to cool from `t_from` to `t_to` in an environment
/// at `t_env`. Requires t_from > t_to > t_env > 0 strictly: the approach to
/// equilibrium is logarithmic, so `t_to == t_env` would take forever.
pub fn cooling_time(model: &CoolingModel, t_env: f64, t_from: f64, t_to: f64) -> Result<f64> {
    if !(t_env > 0.0) {
        return Err(Error::domain("cooling needs t_env > 0"));
    }
    if !(t_to > t_env) {
        return Err(Error::domain(
            "cooling target must stay strictly above t_env: equilibrium is reached only logarithmically",
        ));
    }
    if !(t_from > t_to) {
        return Err(Error::domain("cooling needs t_from > t_to"));
    }
    let w_lo = t_to / t_env - 1.0;
    let w_hi = t_from / t_env - 1.0;
    let (value, _) = spectral_ladder(w_lo, w_hi, &|w| model.measure(1.0 + w, t_env))?;
    Ok(model.time_scale(t_env)? * value)
}

/// Mass (eV) of the metal half of a two-material body, given the metal's
/// mass density in eV^4: half ball for the janus geometry, half shell for
/// the spherical shell, the full metal arm for the needle, and the metal
/// film for the plate.
pub fn body_metal_mass(geometry: &BodyGeometry, density_ev4: f64) -> Result<f64> {
    if !(density_ev4 > 0.0) {
        return Err(Error::domain("metal mass needs density > 0"));
    }
    Ok(match *geometry {
        BodyGeometry::JanusBall { radius } => 2.0 * PI / 3.0 * radius.powi(3) * density_ev4,
        BodyGeometry::SphericalShell { radius, thickness } => {
            2.0 * PI * radius * radius * thickness * density_ev4
        }
        BodyGeometry::Needle {
            length_b, radius, ..
        } => PI * radius * radius * length_b * density_ev4,
        BodyGeometry::Plate {
            area, thickness_b, ..
        } => area * thickness_b * density_ev4,
    })
}

/// Straight-line velocity estimate (m/s) if the force were held constant for
/// `t_seconds`: v = F t / m. Used as the no-cooling comparison point for the
/// trajectory integrals.
pub fn ballistic_velocity(force_natural: f64, mass: f64, t_seconds: f64) -> Result<f64> {
    if !(mass > 0.0) {
        return Err(Error::domain("ballistic velocity needs mass > 0"));
    }
    if !(t_seconds >= 0.0) {
        return Err(Error::domain("ballistic velocity needs t >= 0"));
    }
    Ok(force_natural * (t_seconds / EV_INV_TO_S) / mass * C_M_PER_S)
}

/// One point on a cooling trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoolingSample {
    /// Elapsed time since the start of the cooldown, seconds.
    pub time_s: f64,
    /// Body temperature at this time, eV.
    pub t_body: f64,
    /// Instantaneous propulsive force, eV^2.
    pub force_natural: f64,
    /// Accumulated velocity, m/s.
    pub velocity_m_s: f64,
}

/// Full cooldown of a self-propelled body: sampled trajectory plus the
/// converged terminal velocity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoolingTrajectory {
    /// Trajectory samples ordered hot to cold (time increasing).
    pub samples: Vec<CoolingSample>,
    /// Velocity as t -> infinity, m/s (negative: toward the metal side).
    pub terminal_velocity_m_s: f64,
    /// Body mass used for the momentum balance, eV.
    pub mass_ev: f64,
    /// Cooling time scale of the model at this environment, seconds.
    pub time_scale_s: f64,
    /// Cooling model the trajectory was integrated under.
    pub model: CoolingModel,
    /// Body geometry.
    pub geometry: BodyGeometry,
    /// Absolute error estimate on the terminal velocity, m/s.
    pub quadrature_error_m_s: f64,
}

impl CoolingTrajectory {
    /// Accumulated velocity (m/s) at `t_s` seconds, interpolating the sampled
    /// trajectory linearly and clamping to the terminal velocity beyond it.
    pub fn velocity_at(&self, t_s: f64) -> f64 {
        if t_s <= 0.0 || self.samples.is_empty() {
            return 0.0;
        }
        let last = self.samples.last().unwrap();
        if t_s >= last.time_s {
            return self.terminal_velocity_m_s;
        }
        match self.lookup(t_s) {
            Some((a, b, frac)) => a.velocity_m_s + frac * (b.velocity_m_s - a.velocity_m_s),
            None => last.velocity_m_s,
        }
    }

    /// Body temperature (eV) at `t_s` seconds, clamped to the sampled range.
    pub fn temperature_at(&self, t_s: f64) -> f64 {
        if self.samples.is_empty() {
            return f64::NAN;
        }
        if t_s <= 0.0 {
            return self.samples[0].t_body;
        }
        let last = self.samples.last().unwrap();
        if t_s >= last.time_s {
            return last.t_body;
        }
        match self.lookup(t_s) {
            Some((a, b, frac)) => a.t_body + frac * (b.t_body - a.t_body),
            None => last.t_body,
        }
    }

    /// First time (seconds) at which the speed reaches `frac` of the terminal
    /// speed, for 0 < frac < 1. Errors if the sampled trajectory stops short
    /// of that fraction.
    pub fn time_to_fraction(&self, frac: f64) -> Result<f64> {
        if !(frac > 0.0 && frac < 1.0) {
            return Err(Error::domain("fraction must lie in (0, 1)"));
        }
        let target = frac * self.terminal_velocity_m_s.abs();
        let mut prev = match self.samples.first() {
            Some(s) => s,
            None => return Err(Error::domain("empty trajectory")),
        };
        for s in &self.samples[1..] {
            if s.velocity_m_s.abs() >= target {
                let lo = prev.velocity_m_s.abs();
                let hi = s.velocity_m_s.abs();
                let frac_in = if hi > lo { (target - lo) / (hi - lo) } else { 1.0 };
                return Ok(prev.time_s + frac_in * (s.time_s - prev.time_s));
            }
            prev = s;
        }
        Err(Error::domain(format!(
            "trajectory reaches only {:.4} of the terminal speed",
            prev.velocity_m_s.abs() / self.terminal_velocity_m_s.abs()
        )))
    }

    fn lookup(&self, t_s: f64) -> Option<(&CoolingSample, &CoolingSample, f64)> {
        let idx = self.samples.partition_point(|s| s.time_s <= t_s);
        if idx == 0 || idx >= self.samples.len() {
            return None;
        }
        let a = &self.samples[idx - 1];
        let b = &self.samples[idx];
        let dt = b.time_s - a.time_s;
        let frac = if dt > 0.0 { (t_s - a.time_s) / dt } else { 0.0 };
        Some((a, b, frac))
    }
}

/// Closed-form force factorisation used along a cooling trajectory: the
/// temperature-independent prefactor (eV^2) and the thermal-moment power of
/// the dimensionless core. Only geometries with a closed form participate.
fn closed_force_parts(
    geometry: &BodyGeometry,
    chi_a: f64,
    metal: &SusceptibilityModel,
    pair: ThermalPair,
) -> Result<(f64, f64, u32)> {
    let nu = match metal {
        SusceptibilityModel::Drude { nu, .. } => *nu,
        other => {
            return Err(Error::InvalidInput(format!(
                "cooling trajectories need a Drude metal, got {other:?}"
            )))
        }
    };
    match geometry {
        BodyGeometry::JanusBall { .. } => {
            let probe = force_janus(geometry, chi_a, metal, pair, EvalMode::SmallUFit)?;
            Ok((probe.prefactor, nu, 7))
        }
        BodyGeometry::SphericalShell { .. } => {
            let probe = force_shell(geometry, chi_a, metal, pair, EvalMode::LargeUFit)?;
            Ok((probe.prefactor, nu, 3))
        }
        other => Err(Error::UnsupportedVariant(format!(
            "cooling trajectories support janus balls and spherical shells, got {other:?}"
        ))),
    }
}

/// Integrate the propulsive force over a full cooldown from `t_body_start`
/// to the environment temperature and return the trajectory.
///
/// The lower endpoint u = 1 is a logarithmic time singularity with zero
/// force; the integral is cut at u = 1 + eps and eps halved (from 1% of the
/// span, floored at 1e-10) until the terminal velocity is stable to 0.1%.
pub fn terminal_velocity_cooling(
    geometry: &BodyGeometry,
    chi_a: f64,
    metal: &SusceptibilityModel,
    model: &CoolingModel,
    mass: f64,
    t_env: f64,
    t_body_start: f64,
) -> Result<CoolingTrajectory> {
    if !(mass > 0.0) {
        return Err(Error::domain("cooling trajectory needs mass > 0"));
    }
    if !(t_env > 0.0 && t_body_start > t_env) {
        return Err(Error::domain(
            "cooling trajectory needs t_body_start > t_env > 0",
        ));
    }
    let pair0 = ThermalPair::new(t_env, t_body_start);
    let (prefactor, nu, power) = closed_force_parts(geometry, chi_a, metal, pair0)?;
    let t_scale = model.time_scale(t_env)?;
    let u0 = t_body_start / t_env;
    let fhat = |u: f64| thermal_moment_diff(power, nu, ThermalPair::new(t_env, u * t_env));
    let weighted = |w: f64| -> Result<f64> { Ok(fhat(1.0 + w)? * model.measure(1.0 + w, t_env)?) };

    // Epsilon policy: shrink the cut toward u = 1 until v_T stops moving.
    let span = u0 - 1.0;
    let mut eps = 0.01 * span;
    let (mut value, _) = spectral_ladder(eps, span, &weighted)?;
    let mut err;
    loop {
        let next = 0.5 * eps;
        let (v2, e2) = spectral_ladder(next, span, &weighted)?;
        let drift = (v2 - value).abs();
        value = v2;
        err = e2.max(drift);
        eps = next;
        if drift <= 1e-3 * v2.abs() || eps <= 1e-10 {
            break;
        }
    }
    let vel_per_unit = t_scale * prefactor / mass * C_M_PER_S;
    let terminal_velocity_m_s = vel_per_unit * value;

    // Sampled trajectory, hot to cold, on a logarithmic grid in u - 1.
    let edges = log_edges(eps, span, 96);
    let rule = gauss_legendre(8);
    let mut samples = Vec::with_capacity(edges.len());
    samples.push(CoolingSample {
        time_s: 0.0,
        t_body: t_body_start,
        force_natural: prefactor * fhat(u0)?,
        velocity_m_s: 0.0,
    });
    let mut cum_time = NeumaierSum::new();
    let mut cum_vel = NeumaierSum::new();
    for k in (1..edges.len()).rev() {
        let (lo, hi) = (edges[k - 1], edges[k]);
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        for (&x, &wt) in rule.0.iter().zip(rule.1.iter()) {
            let w = mid + half * x;
            let m = model.measure(1.0 + w, t_env)?;
            let f = fhat(1.0 + w)?;
            cum_time.add(wt * half * m);
            cum_vel.add(wt * half * m * f);
        }
        samples.push(CoolingSample {
            time_s: t_scale * cum_time.total() * EV_INV_TO_S,
            t_body: t_env * (1.0 + edges[k - 1]),
            force_natural: prefactor * fhat(1.0 + edges[k - 1])?,
            velocity_m_s: vel_per_unit * cum_vel.total(),
        });
    }

    Ok(CoolingTrajectory {
        samples,
        terminal_velocity_m_s,
        mass_ev: mass,
        time_scale_s: t_scale * EV_INV_TO_S,
        model: *model,
        geometry: *geometry,
        quadrature_error_m_s: vel_per_unit.abs() * err,
    })
}
