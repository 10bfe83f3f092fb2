//! Dimensionless propagator kernels.
//!
//! The free-space field correlator enters every geometry through a handful of
//! scalar kernels of the single variable `u = omega * R` (distance in units
//! of the inverse frequency). Each kernel has a Taylor branch below a fixed
//! switch point and a closed-form branch above it; switch points are chosen
//! so the two branches agree to better than 1e-10 at the seam, and the Taylor
//! branches keep full relative accuracy where the closed forms would suffer
//! catastrophic cancellation.
//!
//! Conventions:
//! * `p(u) = sin u - u cos u`, `q(u) = u^2 sin u`.
//! * `delta_trace(u) = 2 p^2 + (p - q)^2` is the contracted square of the
//!   imaginary part of the correlator: sum_ij [Im G_ij(R)]^2
//!   = 2 delta_trace(wR) / (4 pi R^3)^2.
//! * `w_kernel(u) = delta_trace(u) / u^6`, finite at the origin (2/3).
//! * `delta_deriv(u) = d w_kernel / du`, and `v_kernel(u) = delta_deriv(u)/u`,
//!   finite at the origin (-4/9).
//! * `needle_g` / `needle_f` are the line-integrated kernels for thin rods;
//!   `needle_f_comb` evaluates the two-segment combination with its exact
//!   leading-order cancellation performed analytically.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::sine_integral;

/// Branch switch for the `p` kernel Taylor series.
const P_SWITCH: f64 = 0.5;
/// Branch switch for `w_kernel`.
const W_SWITCH: f64 = 0.1;
/// Branch switch for `delta_deriv`.
const D_SWITCH: f64 = 1.0;
/// Branch switch for `v_kernel`.
const V_SWITCH: f64 = 0.8;
/// Branch switch for the needle kernels' Taylor series.
const G_SWITCH: f64 = 0.5;
/// Above this argument the needle kernel drops its bounded oscillatory
/// terms (relative size < 1e-3 there); the smooth tail is what survives
/// any subsequent frequency integration.
const G_SMOOTH_SWITCH: f64 = 2000.0;

/// Odd Taylor coefficients of `p(u) = sin u - u cos u` over u^3.
const P_SERIES: [f64; 7] = [
    1.0 / 3.0,
    -1.0 / 30.0,
    1.0 / 840.0,
    -1.0 / 45_360.0,
    1.0 / 3_991_680.0,
    -1.0 / 518_918_400.0,
    1.0 / 93_405_312_000.0,
];

/// Even Taylor coefficients of `w_kernel`.
const W_SERIES: [f64; 7] = [
    2.0 / 3.0,
    -2.0 / 9.0,
    7.0 / 225.0,
    -11.0 / 4_725.0,
    32.0 / 297_675.0,
    -1.0 / 297_675.0,
    29.0 / 383_107_725.0,
];

/// Odd Taylor coefficients of `delta_deriv` over u (also the even
/// coefficients of `v_kernel`).
const D_SERIES: [f64; 8] = [
    -4.0 / 9.0,
    28.0 / 225.0,
    -22.0 / 1_575.0,
    256.0 / 297_675.0,
    -2.0 / 59_535.0,
    116.0 / 127_702_575.0,
    -74.0 / 4_104_725_625.0,
    1_472.0 / 5_373_085_843_125.0,
];

/// Even Taylor coefficients of `needle_g` over x^6.
const G_SERIES: [f64; 7] = [
    20.0,
    -20.0 / 9.0,
    14.0 / 75.0,
    -22.0 / 2_205.0,
    64.0 / 178_605.0,
    -2.0 / 218_295.0,
    58.0 / 332_026_695.0,
];

/// Odd Taylor coefficients of `needle_f = needle_g / (30 x^5)` over x.
const F_SERIES: [f64; 7] = [
    2.0 / 3.0,
    -2.0 / 27.0,
    7.0 / 1_125.0,
    -11.0 / 33_075.0,
    32.0 / 2_679_075.0,
    -1.0 / 3_274_425.0,
    29.0 / 4_980_400_425.0,
];

fn horner_even(coeffs: &[f64], u2: f64) -> f64 {
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * u2 + c;
    }
    acc
}

/// `p(u) = sin u - u cos u` (odd; Taylor branch below 0.5).
pub fn p_kernel(u: f64) -> f64 {
    let x = u.abs();
    let val = if x < P_SWITCH {
        x.powi(3) * horner_even(&P_SERIES, x * x)
    } else {
        x.sin() - x * x.cos()
    };
    if u < 0.0 {
        -val
    } else {
        val
    }
}

/// Contracted squared imaginary correlator, `2 p^2 + (p - q)^2` (even, >= 0).
///
/// `sum_ij [Im G_ij(R)]^2 = 2 delta_trace(omega R) / (4 pi R^3)^2`.
/// Behaves as (2/3) u^6 for small u and averages to u^4 / 2 at large u.
pub fn delta_trace(u: f64) -> f64 {
    let x = u.abs();
    let p = p_kernel(x);
    let q = x * x * x.sin();
    let s = p - q;
    2.0 * p * p + s * s
}

/// `w_kernel(u) = delta_trace(u) / u^6`, finite at the origin: W(0) = 2/3.
pub fn w_kernel(u: f64) -> f64 {
    let x = u.abs();
    if x < W_SWITCH {
        horner_even(&W_SERIES, x * x)
    } else {
        delta_trace(x) / x.powi(6)
    }
}

/// `delta_deriv(u) = d w_kernel / du` (odd).
///
/// Closed form above the switch:
/// `[-9 - u^2 (2 + u^2) + (9 - 16 u^2 + 3 u^4) cos 2u + u (18 - 8 u^2 + u^4) sin 2u] / u^7`.
/// Large-u behaviour: `-1/u^3 + sin(2u)/u^2 + O(1/u^3)` oscillatory.
pub fn delta_deriv(u: f64) -> f64 {
    let x = u.abs();
    let val = if x < D_SWITCH {
        x * horner_even(&D_SERIES, x * x)
    } else {
        let x2 = x * x;
        let x4 = x2 * x2;
        let (s2, c2) = (2.0 * x).sin_cos();
        let poly = -9.0 - x2 * (2.0 + x2);
        let cos_part = (9.0 - 16.0 * x2 + 3.0 * x4) * c2;
        let sin_part = x * (18.0 - 8.0 * x2 + x4) * s2;
        (poly + cos_part + sin_part) / x.powi(7)
    };
    if u < 0.0 {
        -val
    } else {
        val
    }
}

/// `v_kernel(u) = delta_deriv(u) / u`, finite at the origin: V(0) = -4/9.
pub fn v_kernel(u: f64) -> f64 {
    let x = u.abs();
    if x < V_SWITCH {
        horner_even(&D_SERIES, x * x)
    } else {
        delta_deriv(x) / x
    }
}

/// Line-integrated needle kernel `g(x)` (even).
///
/// Closed form:
/// `-9 - 5 x^2 (1 + 3 x^2) + (9 - 13 x^2 + 11 x^4) cos 2x + 2 x (9 - x^2) sin 2x + 22 x^5 Si(2x)`.
/// Small-x: `20 x^6 (1 + O(x^2))`; large-x: `11 pi x^5 (1 + O(1/x))`.
pub fn needle_g(x: f64) -> f64 {
    let t = x.abs();
    if t < G_SWITCH {
        t.powi(6) * horner_even(&G_SERIES, t * t)
    } else if t <= G_SMOOTH_SWITCH {
        let t2 = t * t;
        let t4 = t2 * t2;
        let (s2, c2) = (2.0 * t).sin_cos();
        -9.0 - 5.0 * t2 * (1.0 + 3.0 * t2)
            + (9.0 - 13.0 * t2 + 11.0 * t4) * c2
            + 2.0 * t * (9.0 - t2) * s2
            + 22.0 * t4 * t * sine_integral(2.0 * t)
    } else {
        needle_g_smooth(t)
    }
}

/// Non-oscillatory part of `needle_g` for very large arguments.
pub fn needle_g_smooth(x: f64) -> f64 {
    let t = x.abs();
    let t2 = t * t;
    -9.0 - 5.0 * t2 * (1.0 + 3.0 * t2) + 11.0 * std::f64::consts::PI * t2 * t2 * t
}

/// `needle_f(x) = needle_g(x) / (30 x^5)` (odd; `(2/3) x` at small x,
/// `11 pi / 30` at large x).
pub fn needle_f(x: f64) -> f64 {
    let t = x.abs();
    let val = if t < G_SWITCH {
        t * horner_even(&F_SERIES, t * t)
    } else {
        needle_g(t) / (30.0 * t.powi(5))
    };
    if x < 0.0 {
        -val
    } else {
        val
    }
}

/// Two-segment needle combination `f(xa + xb) - f(xa) - f(xb)`.
///
/// The linear Taylor term cancels identically between the three evaluations;
/// this routine performs that cancellation analytically so the result keeps
/// full relative accuracy down to arbitrarily small arguments (where the
/// combination scales as the third power, not the first).
pub fn needle_f_comb(xa: f64, xb: f64) -> f64 {
    debug_assert!(xa >= 0.0 && xb >= 0.0, "segment arguments must be >= 0");
    let total = xa + xb;
    if total < G_SWITCH {
        let mut acc = 0.0;
        let mut pa = xa.powi(3);
        let mut pb = xb.powi(3);
        let mut pt = total.powi(3);
        let (a2, b2, t2) = (xa * xa, xb * xb, total * total);
        for &c in F_SERIES.iter().skip(1) {
            acc += c * (pt - pa - pb);
            pa *= a2;
            pb *= b2;
            pt *= t2;
        }
        acc
    } else {
        needle_f(total) - needle_f(xa) - needle_f(xb)
    }
}

/// Free-space correlator components at separation `r` and frequency `omega`.
///
/// `G_ij(r) = [rhat_i rhat_j (3 - 3iu - u^2) - delta_ij (1 - iu - u^2)] e^{iu} / (4 pi R^3)`
/// with `u = omega R`. Errors on zero separation (the expression is singular
/// there and the coincidence limit must be handled by the caller).
pub fn gamma0_components(omega: f64, r: [f64; 3]) -> Result<[[Complex64; 3]; 3]> {
    let r2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
    if r2 == 0.0 {
        return Err(Error::SingularPoint(
            "correlator components requested at zero separation".into(),
        ));
    }
    let radius = r2.sqrt();
    let rhat = [r[0] / radius, r[1] / radius, r[2] / radius];
    let u = omega * radius;
    let phase = Complex64::new(0.0, u).exp();
    let a = Complex64::new(3.0 - u * u, -3.0 * u);
    let b = Complex64::new(1.0 - u * u, -u);
    let norm = 4.0 * std::f64::consts::PI * radius * radius * radius;
    let mut out = [[Complex64::new(0.0, 0.0); 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, elem) in row.iter_mut().enumerate() {
            let delta = if i == j { 1.0 } else { 0.0 };
            *elem = (rhat[i] * rhat[j] * a - delta * b) * phase / norm;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{gauss_panels, integrate_panels};
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    #[test]
    fn p_series_matches_closed_form_at_seam() {
        for &u in &[P_SWITCH * 0.999, P_SWITCH, P_SWITCH * 1.001] {
            let series = u.powi(3) * horner_even(&P_SERIES, u * u);
            let exact = u.sin() - u * u.cos();
            assert_relative_eq!(series, exact, max_relative = 1e-13);
        }
    }

    #[test]
    fn w_kernel_seam_and_origin() {
        let u = W_SWITCH;
        let series = horner_even(&W_SERIES, u * u);
        let exact = delta_trace(u) / u.powi(6);
        assert_relative_eq!(series, exact, max_relative = 1e-11);
        assert_relative_eq!(w_kernel(1e-9), 2.0 / 3.0, max_relative = 1e-12);
        assert_relative_eq!(
            delta_trace(0.01) / 0.01_f64.powi(6),
            2.0 / 3.0,
            max_relative = 1e-4
        );
    }

    #[test]
    fn delta_deriv_seam_and_origin() {
        let u = D_SWITCH;
        let series = u * horner_even(&D_SERIES, u * u);
        let x2 = u * u;
        let x4 = x2 * x2;
        let (s2, c2) = (2.0 * u).sin_cos();
        let exact = (-9.0 - x2 * (2.0 + x2)
            + (9.0 - 16.0 * x2 + 3.0 * x4) * c2
            + u * (18.0 - 8.0 * x2 + x4) * s2)
            / u.powi(7);
        assert_relative_eq!(series, exact, max_relative = 1e-10);
        assert_relative_eq!(v_kernel(0.0), -4.0 / 9.0, max_relative = 1e-15);
        assert_relative_eq!(v_kernel(1e-9), -4.0 / 9.0, max_relative = 1e-12);
    }

    #[test]
    fn v_kernel_seam() {
        let u = V_SWITCH;
        let series = horner_even(&D_SERIES, u * u);
        let exact = delta_deriv(u) / u;
        assert_relative_eq!(series, exact, max_relative = 1e-10);
    }

    #[test]
    fn delta_deriv_matches_finite_difference_of_w() {
        for &u in &[0.5_f64, 2.0, 10.0] {
            let h = 1e-5 * u.max(1.0);
            let fd = (w_kernel(u + h) - w_kernel(u - h)) / (2.0 * h);
            assert_relative_eq!(delta_deriv(u), fd, max_relative = 1e-6);
        }
    }

    #[test]
    fn delta_trace_is_nonnegative_dense_scan() {
        // Log-spaced deterministic scan over ten decades.
        for i in 0..100_000 {
            let u = 1e-6 * (10.0_f64).powf(10.0 * i as f64 / 99_999.0);
            let d = delta_trace(u);
            assert!(d >= 0.0, "delta_trace({u}) = {d} < 0");
        }
    }

    proptest! {
        #[test]
        fn delta_trace_nonnegative_prop(u in 0.0..1.0e4f64) {
            prop_assert!(delta_trace(u) >= 0.0);
            prop_assert!(w_kernel(u) >= 0.0);
        }
    }

    #[test]
    fn delta_trace_large_u_average() {
        // delta_trace ~ u^4 sin^2 u at large u, so <delta/u^4> -> 1/2 over
        // whole periods.
        let lo = 50.0;
        let hi = 50.0 + 10.0 * std::f64::consts::PI;
        let panels = gauss_panels(lo, hi, 80, 8);
        let mean = integrate_panels(&panels, |u| delta_trace(u) / u.powi(4)) / (hi - lo);
        assert_relative_eq!(mean, 0.5, max_relative = 0.05);
    }

    #[test]
    fn delta_deriv_large_u_forms() {
        // Pointwise: D u^2 - sin 2u = -1/u + 3 cos(2u)/u + O(1/u^2).
        for &u in &[50.0, 120.0, 333.0] {
            let resid = delta_deriv(u) * u * u - (2.0 * u).sin();
            assert!(resid.abs() <= 4.5 / u, "residual {resid} too big at u={u}");
        }
        // Window mean over whole periods: <D - sin(2u)/u^2> ~ <-1/u^3>.
        let lo = 100.0;
        let hi = 100.0 + 10.0 * std::f64::consts::PI;
        let panels = gauss_panels(lo, hi, 120, 8);
        let mean_resid =
            integrate_panels(&panels, |u| delta_deriv(u) - (2.0 * u).sin() / (u * u))
                / (hi - lo);
        let mean_ref = integrate_panels(&panels, |u| -1.0 / u.powi(3)) / (hi - lo);
        assert_relative_eq!(mean_resid, mean_ref, max_relative = 0.05);
    }

    #[test]
    fn needle_g_anchors() {
        // Small-argument: g(x) -> 20 x^6.
        assert_relative_eq!(needle_g(0.01), 20.0e-12, max_relative = 1e-3);
        // Large-argument: g(x) -> 11 pi x^5.
        let ratio = needle_g(1000.0) / (11.0 * std::f64::consts::PI * 1e15);
        assert_relative_eq!(ratio, 1.0, max_relative = 1e-3);
    }

    #[test]
    fn needle_g_seams() {
        // Taylor vs closed form at the lower switch.
        let x = G_SWITCH;
        let series = x.powi(6) * horner_even(&G_SERIES, x * x);
        let t2 = x * x;
        let t4 = t2 * t2;
        let (s2, c2) = (2.0 * x).sin_cos();
        let exact = -9.0 - 5.0 * t2 * (1.0 + 3.0 * t2)
            + (9.0 - 13.0 * t2 + 11.0 * t4) * c2
            + 2.0 * x * (9.0 - t2) * s2
            + 22.0 * t4 * x * sine_integral(2.0 * x);
        assert_relative_eq!(series, exact, max_relative = 1e-12);
        // The smooth tail drops bounded oscillatory terms; at the switch they
        // are below 5e-4 relative.
        let full = -9.0 - 5.0 * 2000.0_f64.powi(2) * (1.0 + 3.0 * 2000.0_f64.powi(2))
            + (9.0 - 13.0 * 2000.0_f64.powi(2) + 11.0 * 2000.0_f64.powi(4))
                * (4000.0_f64).cos()
            + 2.0 * 2000.0 * (9.0 - 2000.0_f64.powi(2)) * (4000.0_f64).sin()
            + 22.0 * 2000.0_f64.powi(5) * sine_integral(4000.0);
        assert_relative_eq!(needle_g_smooth(2000.0), full, max_relative = 5e-4);
    }

    #[test]
    fn needle_f_limits_and_comb() {
        assert_relative_eq!(needle_f(1e-3), 2.0 / 3.0 * 1e-3, max_relative = 1e-6);
        assert_relative_eq!(
            needle_f(5e4),
            11.0 * std::f64::consts::PI / 30.0,
            max_relative = 1e-3
        );
        // Combination at moderate arguments agrees with the naive difference.
        let naive = needle_f(0.3 + 0.45) - needle_f(0.3) - needle_f(0.45);
        assert_relative_eq!(needle_f_comb(0.3, 0.45), naive, max_relative = 1e-10);
        // Deep small-argument regime: cubic leading order, exact value.
        let a = 1e-8_f64;
        let expect = -(2.0 / 27.0) * ((2.0 * a).powi(3) - 2.0 * a.powi(3));
        assert_relative_eq!(needle_f_comb(a, a), expect, max_relative = 1e-10);
    }

    #[test]
    fn gamma0_trace_identity() {
        for &(omega, r) in &[
            (1.3, [0.4, -0.7, 1.1]),
            (0.02, [5.0, 0.0, 0.0]),
            (7.7, [0.1, 0.2, -0.05]),
        ] {
            let g = gamma0_components(omega, r).unwrap();
            let mut total = 0.0;
            for row in &g {
                for elem in row {
                    total += elem.im * elem.im;
                }
            }
            let radius = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
            let norm = 4.0 * std::f64::consts::PI * radius.powi(3);
            let expect = 2.0 * delta_trace(omega * radius) / (norm * norm);
            assert_relative_eq!(total, expect, max_relative = 1e-10);
        }
    }

    #[test]
    fn gamma0_radiation_zone_is_transverse() {
        let omega = 5.0;
        let r = [0.0, 0.0, 100.0];
        let g = gamma0_components(omega, r).unwrap();
        let scale = omega * omega / (4.0 * std::f64::consts::PI * 100.0);
        for (i, row) in g.iter().enumerate() {
            for (j, elem) in row.iter().enumerate() {
                let transverse = if i == j && i != 2 { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(elem.norm(), scale * transverse, epsilon = 0.01 * scale);
            }
        }
    }

    #[test]
    fn gamma0_zero_separation_errors() {
        assert!(matches!(
            gamma0_components(1.0, [0.0, 0.0, 0.0]),
            Err(Error::SingularPoint(_))
        ));
    }
}
