//! Independent cross-checks of the production routes.
//!
//! Each function here re-derives a quantity computed elsewhere in the crate
//! through a structurally different representation: the drag force through a
//! momentum-space window instead of the coordinate-space angular average, the
//! film pair integral through an explicit Fourier kernel instead of the
//! thin-film limit, and the mirror emission through a detector-screen flux
//! profile instead of the closed angular result. Agreement between routes is
//! asserted by the test suite and exposed through the CLI so a user can rerun
//! the checks on their own build.
//!
//! Everything is in natural units (`hbar = c = k_B = 1`, energies in eV).

use crate::dynamics::{spectral_ladder, PolarizabilitySpectrum};
use crate::error::{Error, Result};
use crate::quad::{gauss_panels, integrate_panels, integrate_refining};
use crate::specfun::{bose_diff, occupation};
use crate::units::ThermalPair;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Inputs for the momentum-space drag evaluation.
///
/// The body moves with velocity `v` (units of `c`) through an environment at
/// temperature `t_env` (eV); its own temperature never enters because the
/// comoving emission term integrates to zero by parity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MomentumForceSpec {
    /// Dipole absorption spectrum of the body.
    pub spectrum: PolarizabilitySpectrum,
    /// Velocity along z in units of the speed of light, |v| < 1.
    pub v: f64,
    /// Environment temperature (eV), > 0.
    pub t_env: f64,
}

/// First-order drag force from the photon-momentum window.
///
/// Evaluates
///
/// `F = (1/4 pi^2) int_0^inf domega Im alpha(omega)
///      int_{-omega}^{omega} dk_z k_z (omega^2 - k_z^2)
///      n(gamma (omega + k_z v), T)`
///
/// with `n` the thermal occupation at the environment temperature. The inner
/// integral runs over the z-component of the absorbed photon momentum, so the
/// anisotropy weight of the coordinate route never appears; the two routes
/// must nevertheless agree because they describe the same exchange of
/// momentum. Returns the force in eV^2, negative for motion along +z.
pub fn momentum_friction_first_order(spec: &MomentumForceSpec) -> Result<f64> {
    let v = spec.v;
    let t_env = spec.t_env;
    if !v.is_finite() || v.abs() >= 1.0 {
        return Err(Error::domain(format!(
            "momentum drag needs |v| < 1 in units of c, got {v}"
        )));
    }
    if !(t_env > 0.0) {
        return Err(Error::domain(format!(
            "momentum drag needs t_env > 0, got {t_env}"
        )));
    }
    if v == 0.0 {
        return Ok(0.0);
    }
    let gamma = 1.0 / (1.0 - v * v).sqrt();
    // The occupation is evaluated at gamma * omega * (1 + s v) with
    // s in [-1, 1]; the slowest decay is at s = -sign(v).
    let hi = 50.0 * t_env / (gamma * (1.0 - v.abs()));
    let lo = 1e-4 * t_env;
    let integrand = |omega: f64| -> Result<f64> {
        let alpha = spec.spectrum.alpha_im(omega)?;
        if alpha == 0.0 {
            return Ok(0.0);
        }
        let w2 = omega * omega;
        let (window, _) = integrate_refining(-omega, omega, 16, 8, 1e-11, 4, |kz| {
            kz * (w2 - kz * kz) * occupation(gamma * (omega + kz * v), t_env)
        });
        Ok(alpha * window)
    };
    let (value, _) = spectral_ladder(lo, hi, &integrand)?;
    Ok(value / (4.0 * PI * PI))
}

/// Closed form of the x-momentum integral over the free photon spectral
/// density at fixed `(k_y, k_z, omega)`.
///
/// The on-shell delta function concentrates the integral at
/// `k_x = +-sqrt(omega^2 - k_y^2 - k_z^2)`, giving
///
/// `pi sgn(omega) (omega^2 - k_z^2) / sqrt(omega^2 - k_y^2 - k_z^2)`
///
/// inside the light cone and exactly zero outside it. At
/// `k_y = k_z = 0` this reduces to `pi omega`.
pub fn imgamma_kx_integral(k_y: f64, k_z: f64, omega: f64) -> f64 {
    let disc = omega * omega - k_y * k_y - k_z * k_z;
    if disc <= 0.0 {
        return 0.0;
    }
    PI * omega.signum() * (omega * omega - k_z * k_z) / disc.sqrt()
}

/// Same integral with the on-shell delta smeared into a Lorentzian of half
/// width `eps` in `k^2 - omega^2`. Converges to [`imgamma_kx_integral`] as
/// `eps -> 0`; a two-point Richardson step `2 L(eps/2) - L(eps)` suppresses
/// the leading smearing error well below the percent level.
pub fn imgamma_kx_lorentzian(k_y: f64, k_z: f64, omega: f64, eps: f64) -> f64 {
    assert!(eps > 0.0, "Lorentzian width must be positive");
    let k_perp2 = k_y * k_y + k_z * k_z;
    let weight = omega.signum() * (omega * omega - k_z * k_z);
    let disc = omega * omega - k_perp2;
    // The integrand decays like 1/k_x^4; truncating at many light-cone radii
    // keeps the tail far below the Richardson target.
    let k_max = 40.0 * (omega.abs() + k_y.abs() + k_z.abs() + 1.0);
    let f = |kx: f64| {
        let x = kx * kx + k_perp2 - omega * omega;
        weight * eps / (x * x + eps * eps)
    };
    // Inside the light cone the Lorentzian peaks sharply at the on-shell
    // momentum; give that neighbourhood its own refinement bracket so the
    // peak, not the broad tails, sets the resolution.
    let mut edges = vec![0.0, k_max];
    if disc > 0.0 {
        let peak = disc.sqrt();
        for edge in [peak - 0.5, peak + 0.5] {
            if edge > 0.0 && edge < k_max {
                edges.push(edge);
            }
        }
        edges.sort_by(|a, b| a.partial_cmp(b).unwrap());
    }
    let mut half = 0.0;
    for pair in edges.windows(2) {
        let (seg, _) = integrate_refining(pair[0], pair[1], 64, 8, 1e-12, 6, f);
        half += seg;
    }
    2.0 * half
}

/// Film pair integral through the explicit transverse-momentum kernel.
///
/// For two stacked films of thicknesses `t_a` and `t_b` and common area
/// `area`, the z-momentum representation gives
///
/// `I = (area / 64 pi) int_0^omega dk_z
///      [omega^4 + (omega^2 - 2 k_z^2)^2] S3(2 k_z) / k_z^2`
///
/// with `S3(q) = sin(q (t_a + t_b)) - sin(q t_a) - sin(q t_b)`. The three
/// sines cancel to cubic order, so for small `q (t_a + t_b)` the difference
/// is summed as a series to avoid catastrophic cancellation. The thin-film
/// closed form used by the production route is the leading term of this
/// integral; agreement is first order in `(omega t)^2`.
pub fn plate_fourier_iab(omega: f64, area: f64, t_a: f64, t_b: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::domain(format!(
            "film pair integral needs omega > 0, got {omega}"
        )));
    }
    if !(area > 0.0 && t_a > 0.0 && t_b > 0.0) {
        return Err(Error::domain(format!(
            "film dimensions must be positive (area={area}, t_a={t_a}, t_b={t_b})"
        )));
    }
    let t_sum = t_a + t_b;
    let s3 = |q: f64| -> f64 {
        if (q * t_sum).abs() < 0.5 {
            // sum_{odd n >= 3} (-1)^((n-1)/2) q^n [(ta+tb)^n - ta^n - tb^n] / n!
            let mut total = 0.0f64;
            let mut sign = -1.0f64;
            let mut factorial = 6.0f64;
            let mut n = 3i32;
            loop {
                let shape = t_sum.powi(n) - t_a.powi(n) - t_b.powi(n);
                let term = sign * q.powi(n) * shape / factorial;
                total += term;
                if term.abs() <= 1e-17 * total.abs().max(1e-300) || n >= 29 {
                    return total;
                }
                n += 2;
                factorial *= ((n - 1) * n) as f64;
                sign = -sign;
            }
        } else {
            (q * t_sum).sin() - (q * t_a).sin() - (q * t_b).sin()
        }
    };
    let w2 = omega * omega;
    let (value, _) = integrate_refining(0.0, omega, 64, 8, 1e-12, 5, |kz| {
        if kz == 0.0 {
            return 0.0;
        }
        (w2 * w2 + (w2 - 2.0 * kz * kz).powi(2)) * s3(2.0 * kz) / (kz * kz)
    });
    Ok(area / (64.0 * PI) * value)
}

/// Solid-angle weight of the mirror-emission flux profile on a detector
/// plane at distance `z` from the source.
///
/// Computes `2 pi int_0^inf rho drho z rho^2 / (rho^2 + z^2)^{5/2}`
/// numerically. The value is independent of `z` and equals `4 pi / 3`; the
/// screen route below multiplies it back into the spectral factor, so this
/// integral carries the entire angular content of the profile
/// representation.
pub fn mirror_screen_profile_integral(z: f64) -> f64 {
    assert!(z > 0.0, "detector distance must be positive");
    // Direct part out to rho = 10 z, then the exact tail substitution
    // w = z / rho, which maps [10 z, inf) onto (0, 0.1].
    let (near, _) = integrate_refining(0.0, 10.0 * z, 64, 8, 1e-13, 5, |rho| {
        let r2 = rho * rho + z * z;
        z * rho * rho * rho / (r2 * r2 * r2.sqrt())
    });
    let (far, _) = integrate_refining(0.0, 0.1, 16, 8, 1e-13, 5, |w| {
        let u2 = 1.0 + w * w;
        1.0 / (u2 * u2 * u2.sqrt())
    });
    2.0 * PI * (near + far)
}

/// Spectral moment shared by the mirror observables:
/// `int domega omega^4 Im alpha(omega) [n(omega, T) - n(omega, T')]`.
fn mirror_spectral_moment(spec: &PolarizabilitySpectrum, thermal: ThermalPair) -> Result<f64> {
    if thermal.is_equilibrium() {
        return Ok(0.0);
    }
    let t_max = thermal.t_env.max(thermal.t_body);
    let integrand =
        |omega: f64| -> Result<f64> { Ok(omega.powi(4) * spec.alpha_im(omega)? * bose_diff(omega, thermal)) };
    let (value, _) = spectral_ladder(1e-4 * t_max, 50.0 * t_max, &integrand)?;
    Ok(value)
}

/// Net power a small body radiates into the half space behind a perfect
/// mirror, closed angular form. Positive when the body is hotter than the
/// environment. Units: eV^2.
pub fn mirror_dielectric_power(spec: &PolarizabilitySpectrum, thermal: ThermalPair) -> Result<f64> {
    Ok(-(2.0 / (3.0 * PI * PI)) * mirror_spectral_moment(spec, thermal)?)
}

/// Same power obtained by integrating the Poynting flux profile over a
/// detector plane, using [`mirror_screen_profile_integral`] for the angular
/// factor instead of the closed `4 pi / 3`. Agrees with
/// [`mirror_dielectric_power`] to quadrature accuracy.
pub fn mirror_dielectric_power_profile(
    spec: &PolarizabilitySpectrum,
    thermal: ThermalPair,
) -> Result<f64> {
    let angular = mirror_screen_profile_integral(1.0);
    Ok(-angular / (2.0 * PI * PI * PI) * mirror_spectral_moment(spec, thermal)?)
}

/// Recoil force on a small body facing a perfect mirror. Negative (toward
/// the mirror) when the body is hotter than the environment; exactly
/// `-(3/8)` times [`mirror_dielectric_power`]. Units: eV^2.
pub fn mirror_dielectric_force(spec: &PolarizabilitySpectrum, thermal: ThermalPair) -> Result<f64> {
    Ok(mirror_spectral_moment(spec, thermal)? / (4.0 * PI * PI))
}

/// Total far-field emission of a body with an anisotropic (symmetric)
/// absorption tensor, computed by explicit angular quadrature of the
/// transverse projector:
///
/// `P = (1/8 pi^3) int dOmega (delta_ij - R_i R_j) t_ij
///      int domega omega^4 Im alpha(omega) [n(omega,T) - n(omega,T')]`
///
/// where `t_ij` scales the scalar spectrum direction by direction. For
/// `t = diag(1,1,1)` this reproduces the scalar radiated power. Positive for
/// net absorption from a hotter environment. Units: eV^2.
pub fn farfield_flux_total(
    tensor: [[f64; 3]; 3],
    spec: &PolarizabilitySpectrum,
    thermal: ThermalPair,
) -> Result<f64> {
    let scale: f64 = tensor
        .iter()
        .flatten()
        .fold(0.0f64, |acc, &x| acc.max(x.abs()));
    for i in 0..3 {
        for j in (i + 1)..3 {
            if (tensor[i][j] - tensor[j][i]).abs() > 1e-12 * scale.max(1e-300) {
                return Err(Error::InvalidInput(format!(
                    "absorption tensor must be symmetric; entry ({i},{j}) = {} \
                     vs ({j},{i}) = {}",
                    tensor[i][j], tensor[j][i]
                )));
            }
        }
    }
    // Angular integral of (delta - R R) : t over the unit sphere.
    let theta = gauss_panels(0.0, PI, 16, 8);
    let mut angular = 0.0;
    for (&th, &wt) in theta.nodes.iter().zip(theta.weights.iter()) {
        let phi = gauss_panels(0.0, 2.0 * PI, 16, 8);
        let ring = integrate_panels(&phi, |ph| {
            let r = [th.sin() * ph.cos(), th.sin() * ph.sin(), th.cos()];
            let mut sum = 0.0;
            for i in 0..3 {
                for j in 0..3 {
                    let delta = if i == j { 1.0 } else { 0.0 };
                    sum += (delta - r[i] * r[j]) * tensor[i][j];
                }
            }
            sum
        });
        angular += wt * th.sin() * ring;
    }
    let moment = mirror_spectral_moment(spec, thermal)?;
    Ok(angular * moment / (8.0 * PI * PI * PI))
}

/// Worst relative disagreement between the rapidity-window form of the drag
/// integrand and its direct Doppler-variable form, sampled at `n_samples`
/// random `(omega, v)` pairs drawn from a seeded generator.
///
/// The inner window of the first-order drag can be written either over the
/// angular variable `s` in [-1, 1] or over the Doppler factor
/// `y = gamma (1 + v s)` in `[gamma (1 - v), gamma (1 + v)]`; the two are
/// related by an exact change of variables, so any disagreement beyond
/// quadrature error indicates an implementation bug. Frequencies are drawn
/// log-uniformly from `[0.1, 20] * t_env`, velocities uniformly from
/// `[0.01, 0.9]`.
pub fn doppler_window_identity_max_error(
    seed: u64,
    n_samples: usize,
    t_env: f64,
) -> Result<f64> {
    if !(t_env > 0.0) {
        return Err(Error::domain(format!(
            "identity sampling needs t_env > 0, got {t_env}"
        )));
    }
    if n_samples == 0 {
        return Err(Error::domain(
            "identity sampling needs at least one sample",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..n_samples {
        let omega = t_env * 10.0f64.powf(rng.gen_range(-1.0..1.301));
        let v: f64 = rng.gen_range(0.01..0.9);
        let gamma = 1.0 / (1.0 - v * v).sqrt();
        let (s_route, _) = integrate_refining(-1.0, 1.0, 12, 8, 1e-13, 6, |s| {
            s * 0.75 * (1.0 - s * s) * occupation(omega * gamma * (1.0 + v * s), t_env)
        });
        let span = gamma * v;
        let (y_route, _) = integrate_refining(
            gamma * (1.0 - v),
            gamma * (1.0 + v),
            12,
            8,
            1e-13,
            6,
            |y| {
                let s = (y - gamma) / span;
                (y - gamma) * 0.75 * (1.0 - s * s) / (span * span) * occupation(omega * y, t_env)
            },
        );
        let rel = (y_route - s_route).abs() / s_route.abs().max(1e-300);
        worst = worst.max(rel);
    }
    Ok(worst)
}
