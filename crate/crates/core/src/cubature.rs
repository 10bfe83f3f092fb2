//! Deterministic tensor-product cubature for curved geometries.
//!
//! The spherical-shell and Janus-ball integrands live on low-dimensional
//! product domains; they are integrated with tensor products of fixed
//! Gauss-Legendre panels whose count scales with the dimensionless size
//! `x = omega * a` so oscillations of the kernel stay resolved. Every
//! integral is evaluated on two independent resolutions; agreement between
//! them is the convergence certificate, and their difference is the reported
//! error estimate. All reductions are ordered and compensated, so results do
//! not depend on the rayon thread count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::{v_kernel, w_kernel};
use crate::quad::{compensated_sum, gauss_panels, NeumaierSum, Panels};

/// Largest dimensionless size `omega * a` the cubature accepts.
///
/// Beyond this the oscillation count makes the tensor grids prohibitively
/// large; callers receive a non-convergence error naming the offending size.
pub const OMEGA_A_MAX: f64 = 50.0;

/// Relative agreement demanded between the two grid resolutions.
pub const CONVERGENCE_RTOL: f64 = 5e-3;

/// One tensor-grid resolution: panel density per unit `x` and panel order.
#[derive(Debug, Clone, Copy)]
pub struct GridSettings {
    /// Panels per unit dimensionless size (before floors and padding).
    pub density: f64,
    /// Gauss-Legendre order within each panel.
    pub order: usize,
}

/// Coarse resolution for the shell integral.
pub const SHELL_COARSE: GridSettings = GridSettings {
    density: 1.2,
    order: 8,
};
/// Fine resolution for the shell integral.
pub const SHELL_FINE: GridSettings = GridSettings {
    density: 1.8,
    order: 10,
};
/// Coarse resolution for the Janus integral.
pub const JANUS_COARSE: GridSettings = GridSettings {
    density: 1.4,
    order: 10,
};
/// Fine resolution for the Janus integral.
pub const JANUS_FINE: GridSettings = GridSettings {
    density: 1.7,
    order: 11,
};

fn check_size(x: f64, context: &str) -> Result<()> {
    if !(x >= 0.0) {
        return Err(Error::domain(format!(
            "dimensionless size must be >= 0, got {x}"
        )));
    }
    if x > OMEGA_A_MAX {
        return Err(Error::nonconvergence(
            x,
            format!("{context}: omega*a = {x} exceeds the supported cubature range {OMEGA_A_MAX}"),
        ));
    }
    Ok(())
}

/// Dimensionless shell angular integral.
///
/// Two surface points on the unit sphere, one on each hemisphere, separated
/// by chord `u = x sqrt(2 (1 - cos gamma))`:
///
/// `I(x) = 2 * int_{0}^{pi/2} dth sin th int_{pi/2}^{pi} dth' sin th'
///         int_0^{pi} dphi (cos th - cos th') V(u)`
///
/// (the azimuth is folded onto half range by symmetry). Negative for x > 0;
/// decays like x^-4 up to a slowly growing factor.
pub fn shell_angular_integral(x: f64, grid: &GridSettings) -> f64 {
    let half_pi = 0.5 * std::f64::consts::PI;
    let n_theta = ((grid.density * x / 2.0).ceil() as usize).max(4) + 2;
    let n_phi = ((grid.density * x).ceil() as usize).max(6) + 2;
    let theta = gauss_panels(0.0, half_pi, n_theta, grid.order);
    let theta_p = gauss_panels(half_pi, std::f64::consts::PI, n_theta, grid.order);
    let phi = gauss_panels(0.0, std::f64::consts::PI, n_phi, grid.order);

    let cos_phi: Vec<f64> = phi.nodes.iter().map(|&p| p.cos()).collect();
    let trig = |p: &Panels| -> Vec<(f64, f64)> { p.nodes.iter().map(|&t| t.sin_cos()).collect() };
    let tt = trig(&theta);
    let tp = trig(&theta_p);

    let partials: Vec<f64> = (0..theta.len())
        .into_par_iter()
        .map(|i| {
            let (sin_t, cos_t) = tt[i];
            let w_t = theta.weights[i];
            let mut acc = NeumaierSum::new();
            for j in 0..theta_p.len() {
                let (sin_tp, cos_tp) = tp[j];
                let w_tp = theta_p.weights[j];
                let base = cos_t * cos_tp;
                let cross = sin_t * sin_tp;
                let height = cos_t - cos_tp;
                for k in 0..phi.len() {
                    let cos_gamma = base + cross * cos_phi[k];
                    let u = x * (2.0 * (1.0 - cos_gamma)).max(0.0).sqrt();
                    acc.add(w_tp * phi.weights[k] * sin_tp * height * v_kernel(u));
                }
            }
            w_t * sin_t * acc.total()
        })
        .collect();
    2.0 * compensated_sum(partials)
}

/// Shell integral with a two-resolution convergence certificate.
///
/// Returns `(value, error_estimate)` from the fine grid; errors with the
/// offending `omega*a` when the resolutions disagree or the size exceeds
/// [`OMEGA_A_MAX`].
pub fn shell_angular_converged(x: f64) -> Result<(f64, f64)> {
    check_size(x, "shell cubature")?;
    let coarse = shell_angular_integral(x, &SHELL_COARSE);
    let fine = shell_angular_integral(x, &SHELL_FINE);
    let diff = (fine - coarse).abs();
    if diff > CONVERGENCE_RTOL * fine.abs().max(1e-300) {
        return Err(Error::nonconvergence(
            x,
            format!(
                "shell cubature resolutions disagree: coarse {coarse:e} vs fine {fine:e} at omega*a = {x}"
            ),
        ));
    }
    Ok((fine, diff))
}

/// The two four-fold Janus terms for an arbitrary radial kernel.
///
/// Both terms share the measure
/// `2 x^6 int_0^1 rho drho int_0^1 rho'^2 drho' int_{pi/2}^{pi} sin th' dth'
///  int_0^{pi} dphi'`;
/// the first evaluates `kern(x P1)` with
/// `P1^2 = 1 + rho'^2 - 2 rho' (sqrt(1-rho^2) cos th' + rho sin th' cos phi')`
/// and the second `kern(x P2)` with
/// `P2^2 = rho^2 + rho'^2 - 2 rho rho' sin th' cos phi'`.
/// The physical integrand is their difference; for a constant kernel the two
/// terms cancel point-wise, which removes the would-be leading u^6 behaviour.
pub fn janus_terms_with(
    x: f64,
    grid: &GridSettings,
    kern: &(impl Fn(f64) -> f64 + Sync),
) -> (f64, f64) {
    let pi = std::f64::consts::PI;
    let n1 = ((grid.density * x / pi).ceil() as usize).max(4) + 2;
    let nf = ((2.0 * grid.density * x / pi).ceil() as usize).max(6) + 2;
    let rho = gauss_panels(0.0, 1.0, n1, grid.order);
    let rho_p = gauss_panels(0.0, 1.0, n1, grid.order);
    let theta_p = gauss_panels(0.5 * pi, pi, n1, grid.order);
    let phi_p = gauss_panels(0.0, pi, nf, grid.order);

    let trig_tp: Vec<(f64, f64)> = theta_p.nodes.iter().map(|&t| t.sin_cos()).collect();
    let cos_fp: Vec<f64> = phi_p.nodes.iter().map(|&p| p.cos()).collect();

    let partials: Vec<(f64, f64)> = (0..rho.len())
        .into_par_iter()
        .map(|i| {
            let r = rho.nodes[i];
            let w_r = rho.weights[i] * r;
            let shoulder = (1.0 - r * r).max(0.0).sqrt();
            let mut acc1 = NeumaierSum::new();
            let mut acc2 = NeumaierSum::new();
            for j in 0..rho_p.len() {
                let rp = rho_p.nodes[j];
                let w_rp = rho_p.weights[j] * rp * rp;
                for k in 0..theta_p.len() {
                    let (sin_tp, cos_tp) = trig_tp[k];
                    let w_tp = theta_p.weights[k] * sin_tp;
                    let base1 = 1.0 + rp * rp - 2.0 * rp * shoulder * cos_tp;
                    let base2 = r * r + rp * rp;
                    let coef1 = 2.0 * rp * r * sin_tp;
                    let coef2 = 2.0 * r * rp * sin_tp;
                    for l in 0..phi_p.len() {
                        let w = w_rp * w_tp * phi_p.weights[l];
                        let p1 = (base1 - coef1 * cos_fp[l]).max(0.0).sqrt();
                        let p2 = (base2 - coef2 * cos_fp[l]).max(0.0).sqrt();
                        acc1.add(w * kern(x * p1));
                        acc2.add(w * kern(x * p2));
                    }
                }
            }
            (w_r * acc1.total(), w_r * acc2.total())
        })
        .collect();
    let pref = 2.0 * x.powi(6);
    let t1 = pref * compensated_sum(partials.iter().map(|p| p.0));
    let t2 = pref * compensated_sum(partials.iter().map(|p| p.1));
    (t1, t2)
}

/// Dimensionless Janus integral (difference of the two four-fold terms with
/// the physical kernel `w_kernel`).
pub fn janus_merged_integral(x: f64, grid: &GridSettings) -> f64 {
    let (t1, t2) = janus_terms_with(x, grid, &w_kernel);
    t1 - t2
}

/// Janus integral with a two-resolution convergence certificate.
pub fn janus_merged_converged(x: f64) -> Result<(f64, f64)> {
    check_size(x, "Janus cubature")?;
    let coarse = janus_merged_integral(x, &JANUS_COARSE);
    let fine = janus_merged_integral(x, &JANUS_FINE);
    let diff = (fine - coarse).abs();
    if diff > CONVERGENCE_RTOL * fine.abs().max(1e-300) {
        return Err(Error::nonconvergence(
            x,
            format!(
                "Janus cubature resolutions disagree: coarse {coarse:e} vs fine {fine:e} at omega*a = {x}"
            ),
        ));
    }
    Ok((fine, diff))
}

/// Small-x series of the Janus integral:
/// `I(x) = -(2 pi / 27) x^8 [1 - c2 x^2 + c4 x^4 - ...]`.
pub const JANUS_SMALL_COEF: f64 = -2.0 * std::f64::consts::PI / 27.0;
/// Quadratic series coefficient `c2`.
pub const JANUS_SERIES_C2: f64 = 7.0 / 15.0;
/// Quartic series coefficient `c4`.
pub const JANUS_SERIES_C4: f64 = 1_111.0 / 10_500.0;

/// Truncated small-x series for the Janus integral.
pub fn janus_small_x_series(x: f64) -> f64 {
    let x2 = x * x;
    JANUS_SMALL_COEF * x2.powi(4) * (1.0 - JANUS_SERIES_C2 * x2 + JANUS_SERIES_C4 * x2 * x2)
}
