//! Acceptance gate: the figure-level reference numbers this crate commits
//! to, each asserted at its stated tolerance and printed as a single
//! `CRITERION <id>: PASS/FAIL` line (visible with `--nocapture`, or on
//! failure).
//!
//! The tolerances are pinned as constants below and are not to be loosened
//! to make a run green: four criteria (3a, 4a, 6a, 8d) are currently not met
//! by a converged evaluation of the implemented formulas, and their tests
//! fail with a diagnostic stating the measured value next to the adopted
//! target. Everything else passes. The full file is budgeted to run well
//! under ten minutes on a laptop with the optimized test profile.

use std::f64::consts::PI;
use std::time::Instant;

use vacprop::dynamics::{
    ballistic_velocity, body_metal_mass, friction_derivative_needle, friction_first_order,
    friction_second_order_needle, friction_time_constant, fpsf_x_integral, needle_r_kernel,
    needle_r_kernel_asymptotic, radiated_power, terminal_velocity_cooling,
    terminal_velocity_friction, CoolingModel, Polarization, PolarizabilitySpectrum,
};
use vacprop::forces::{
    force_janus, force_janus_dispersive, force_needle, force_plate, force_shell, force_spectral,
    needle_fhat,
};
use vacprop::geometry::{
    i_ab_janus, i_ab_janus_terms, i_ab_plate, shell_tail_slope, BodyGeometry, EvalMode,
};
use vacprop::kernel::delta_trace;
use vacprop::materials::{
    gold, gold_density_ev4, gold_number_density_ev3, polystyrene, x_ab, SusceptibilityModel,
    GOLD_NU, GOLD_OMEGA_P, POLYSTYRENE_CHI_STATIC,
};
use vacprop::quad::integrate_refining;
use vacprop::specfun::occupation;
use vacprop::units::{
    force_ev2_to_newton, ThermalPair, C_M_PER_S, CM, EV_INV_TO_S, NM, T_ROOM, UM,
};
use vacprop::validation::{
    mirror_dielectric_force, mirror_dielectric_power, momentum_friction_first_order,
    MomentumForceSpec,
};

// ---------------------------------------------------------------------------
// Pinned tolerances and targets
// ---------------------------------------------------------------------------

const TOL_1_PLATEAU: f64 = 0.05;
const BUDGET_1_SECONDS: f64 = 60.0;
const TOL_2_NEEDLE_PREF: f64 = 0.10;
const TOL_3A_SLOPE: f64 = 0.25;
const TOL_3B_SHELL_PREF: f64 = 0.10;
const TOL_4A_SMALL_FIT: f64 = 0.05;
const TOL_4B_TAIL_FIT: f64 = 0.10;
const TOL_4C_CANCELLATION: f64 = 1e-6;
const TOL_5A_JANUS_PREF: f64 = 0.05;
const TOL_5B_COLD_FHAT: f64 = 0.10;
const FACTOR_6A_PLATE_PREF: f64 = 2.0;
const TOL_6B_CLOSED_VS_QUAD: f64 = 1e-8;
const TOL_7A_DRAG_MOMENT: f64 = 0.01;
const TOL_7B_TERMINAL: f64 = 0.30;
const FACTOR_7C_RELAXATION: f64 = 2.0;
const TOL_8A_TC_STRONG: f64 = 0.10;
const TOL_8B_TC_WEAK: f64 = 0.10;
const TOL_8C_INTEGRAL: f64 = 0.10;
const TOL_8D_BALLISTIC: f64 = 0.20;
const TOL_8E_TERMINAL: f64 = 0.20;
const TOL_8F_SCALINGS: f64 = 0.30;
const TOL_9A_ROUTES: f64 = 1e-6;
const TOL_9B_ASYMPTOTE: f64 = 0.01;
const FACTOR_9C_RATIO: f64 = 3.0;
const TOL_9D_MIRROR: f64 = 1e-8;
const TOL_10_SWAP: f64 = 1e-10;
const TOL_10_CLOSED_VS_QUAD: f64 = 1e-6;
const TOL_10_STEFAN: f64 = 1e-8;

const PLATEAU_TARGET: f64 = 1.53e18;
/// Newtons per unit static susceptibility of the transparent half.
const NEEDLE_PREF_TARGET_N: f64 = 1.9e-20;
const SHELL_SLOPE_TARGET: f64 = -26.88;
/// Newtons per unit susceptibility, shell of radius 1 cm and thickness
/// 2/omega_p (the minimal gold skin depth).
const SHELL_PREF_TARGET_N: f64 = 1.2e-12;
/// Newtons per unit susceptibility, ball of radius 1 um on gold.
const JANUS_PREF_TARGET_N: f64 = 3.84e-18;
const JANUS_COLD_FHAT_TARGET: f64 = -15.0;
const PLATE_PREF_TARGET_N: f64 = 1e-13;
const DRAG_MOMENT_TARGET: f64 = 0.90;
const TERMINAL_TARGET_M_S: f64 = 4.0;
const RELAXATION_TARGET_S: f64 = 5e8;
const TC_STRONG_TARGET_S: f64 = 2000.0;
const TC_WEAK_TARGET_S: f64 = 2e-4;
const COOL_INTEGRAL_TARGET: f64 = -15.6;
const COOL_TERMINAL_TARGET_UM_S: f64 = 300.0;
const BALLISTIC_TARGET_UM_S: f64 = 1800.0;
const VEL_SCALING_TARGET: f64 = 9.0;
const TIME_SCALING_TARGET: f64 = 20.0;
const SECOND_TO_FIRST_TARGET: f64 = 5e-8;

// ---------------------------------------------------------------------------
// Reporting helpers
// ---------------------------------------------------------------------------

fn report(id: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("CRITERION {id}: {status} ({detail})");
    assert!(pass, "CRITERION {id}: {status} ({detail})");
}

fn check_rel(id: &str, value: f64, target: f64, tol: f64) {
    let rel = (value - target).abs() / target.abs();
    report(
        id,
        rel <= tol,
        &format!("value {value:.6e}, target {target:.6e}, rel err {rel:.3e}, tol {tol:.1e}"),
    );
}

fn check_factor(id: &str, value: f64, target: f64, factor: f64) {
    let ratio = value / target;
    report(
        id,
        ratio >= 1.0 / factor && ratio <= factor,
        &format!("value {value:.6e}, target {target:.6e}, ratio {ratio:.3}, budget x{factor}"),
    );
}

fn room_hot() -> ThermalPair {
    ThermalPair::new(T_ROOM, 2.0 * T_ROOM)
}

fn reference_needle() -> BodyGeometry {
    BodyGeometry::Needle {
        length_a: CM,
        length_b: CM,
        radius: 10.0 * NM,
    }
}

fn debye_gold() -> CoolingModel {
    CoolingModel::DebyeLorenzLorentz {
        n_density: gold_number_density_ev3(),
        omega_p: GOLD_OMEGA_P,
        nu: GOLD_NU,
    }
}

fn weak_gold() -> CoolingModel {
    CoolingModel::WeakSusceptibility {
        n_density: gold_number_density_ev3(),
        omega_p: GOLD_OMEGA_P,
        nu: GOLD_NU,
    }
}

// ---------------------------------------------------------------------------
// 1, 2: needle
// ---------------------------------------------------------------------------

#[test]
fn acceptance_01_needle_plateau() {
    let start = Instant::now();
    let (fhat, _) = needle_fhat(CM, CM, GOLD_NU, room_hot()).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    check_rel("1", fhat, PLATEAU_TARGET, TOL_1_PLATEAU);
    report(
        "1 (runtime)",
        elapsed < BUDGET_1_SECONDS,
        &format!("{elapsed:.2} s, budget {BUDGET_1_SECONDS} s"),
    );
}

#[test]
fn acceptance_02_needle_prefactor() {
    let geometry = BodyGeometry::Needle {
        length_a: CM,
        length_b: CM,
        radius: 0.1 * CM,
    };
    let result = force_needle(&geometry, 1.0, &gold(), room_hot()).unwrap();
    let pref_n = force_ev2_to_newton(result.prefactor).abs();
    check_rel("2", pref_n, NEEDLE_PREF_TARGET_N, TOL_2_NEEDLE_PREF);
}

// ---------------------------------------------------------------------------
// 3: shell
// ---------------------------------------------------------------------------

#[test]
fn acceptance_03a_shell_tail_slope() {
    let slope = shell_tail_slope(&[5.0, 7.5, 10.0, 15.0, 20.0, 25.0, 30.0]).unwrap();
    check_rel("3a", slope, SHELL_SLOPE_TARGET, TOL_3A_SLOPE);
}

#[test]
fn acceptance_03b_shell_prefactor() {
    let geometry = BodyGeometry::SphericalShell {
        radius: CM,
        thickness: 2.0 / GOLD_OMEGA_P,
    };
    let result = force_shell(&geometry, 1.0, &gold(), room_hot(), EvalMode::LargeUFit).unwrap();
    let pref_n = force_ev2_to_newton(result.prefactor).abs();
    check_rel("3b", pref_n, SHELL_PREF_TARGET_N, TOL_3B_SHELL_PREF);
}

// ---------------------------------------------------------------------------
// 4: ball pair integral fits
// ---------------------------------------------------------------------------

#[test]
fn acceptance_04a_janus_small_size_fit() {
    let cubature = i_ab_janus(0.5, 1.0, EvalMode::Cubature).unwrap().value;
    let fit = i_ab_janus(0.5, 1.0, EvalMode::SmallUFit).unwrap().value;
    check_rel("4a", cubature / fit, 1.0, TOL_4A_SMALL_FIT);
}

#[test]
fn acceptance_04b_janus_tail_fit() {
    let cubature = i_ab_janus(20.0, 1.0, EvalMode::Cubature).unwrap().value;
    let fit = i_ab_janus(20.0, 1.0, EvalMode::LargeUFit).unwrap().value;
    check_rel("4b", cubature / fit, 1.0, TOL_4B_TAIL_FIT);
}

#[test]
fn acceptance_04c_janus_sixth_order_cancellation() {
    // The two four-fold terms share their sixth-power content exactly; at
    // omega a = 1e-3 each term is pure sixth order to better than 1e-6, so
    // their relative difference bounds the residual of the cancellation.
    let (term1, term2) = i_ab_janus_terms(1e-3, 1.0).unwrap();
    let rel = (term1 - term2).abs() / term1.abs();
    report(
        "4c",
        rel <= TOL_4C_CANCELLATION,
        &format!("terms {term1:.6e} vs {term2:.6e}, rel gap {rel:.3e}, tol {TOL_4C_CANCELLATION:.0e}"),
    );
}

// ---------------------------------------------------------------------------
// 5: ball anchors
// ---------------------------------------------------------------------------

#[test]
fn acceptance_05a_janus_prefactor() {
    let geometry = BodyGeometry::JanusBall { radius: UM };
    let result =
        force_janus(&geometry, 1.0, &gold(), room_hot(), EvalMode::SmallUFit).unwrap();
    let pref_n = force_ev2_to_newton(result.prefactor).abs();
    check_rel("5a", pref_n, JANUS_PREF_TARGET_N, TOL_5A_JANUS_PREF);
}

#[test]
fn acceptance_05b_janus_cold_environment_factor() {
    let geometry = BodyGeometry::JanusBall { radius: UM };
    let thermal = ThermalPair::new(0.0, T_ROOM);
    let result = force_janus(
        &geometry,
        POLYSTYRENE_CHI_STATIC,
        &gold(),
        thermal,
        EvalMode::SmallUFit,
    )
    .unwrap();
    check_rel("5b", result.fhat, JANUS_COLD_FHAT_TARGET, TOL_5B_COLD_FHAT);
}

// ---------------------------------------------------------------------------
// 6: stacked films
// ---------------------------------------------------------------------------

#[test]
fn acceptance_06a_plate_prefactor() {
    let geometry = BodyGeometry::Plate {
        area: CM * CM,
        thickness_a: 10.0 * NM,
        thickness_b: 10.0 * NM,
    };
    let result = force_plate(&geometry, &gold(), room_hot()).unwrap();
    let pref_n = force_ev2_to_newton(result.prefactor).abs();
    check_factor("6a", pref_n, PLATE_PREF_TARGET_N, FACTOR_6A_PLATE_PREF);
}

#[test]
fn acceptance_06b_plate_factor_closed_vs_quadrature() {
    let geometry = BodyGeometry::Plate {
        area: CM * CM,
        thickness_a: 10.0 * NM,
        thickness_b: 10.0 * NM,
    };
    let closed = force_plate(&geometry, &gold(), room_hot()).unwrap().fhat;
    // Direct quadrature of the defining moment integral at both temperatures.
    let moment = |y: f64| -> f64 {
        let (value, _) = integrate_refining(0.0, 60.0 / y, 96, 8, 1e-13, 6, |x| {
            x.powi(5) / (x * x + 1.0) * occupation(x, 1.0 / y)
        });
        value
    };
    let quadrature = moment(GOLD_NU / T_ROOM) - moment(GOLD_NU / (2.0 * T_ROOM));
    let rel = (closed - quadrature).abs() / quadrature.abs();
    report(
        "6b",
        rel <= TOL_6B_CLOSED_VS_QUAD,
        &format!(
            "closed {closed:.12e} vs quadrature {quadrature:.12e}, rel {rel:.3e}, tol {TOL_6B_CLOSED_VS_QUAD:.0e}"
        ),
    );
}

// ---------------------------------------------------------------------------
// 7: drag and terminal velocity
// ---------------------------------------------------------------------------

#[test]
fn acceptance_07a_drag_moment() {
    let value = fpsf_x_integral(0.7).unwrap();
    check_rel("7a", value, DRAG_MOMENT_TARGET, TOL_7A_DRAG_MOMENT);
}

#[test]
fn acceptance_07b_needle_terminal_velocity() {
    let geometry = reference_needle();
    let propulsion = force_needle(
        &geometry,
        POLYSTYRENE_CHI_STATIC,
        &gold(),
        room_hot(),
    )
    .unwrap();
    let fprime = friction_derivative_needle(&geometry, &gold(), T_ROOM).unwrap();
    let v_t = terminal_velocity_friction(&propulsion, fprime).unwrap();
    check_rel(
        "7b",
        (v_t * C_M_PER_S).abs(),
        TERMINAL_TARGET_M_S,
        TOL_7B_TERMINAL,
    );
}

#[test]
fn acceptance_07c_needle_relaxation_time() {
    let geometry = reference_needle();
    let fprime = friction_derivative_needle(&geometry, &gold(), T_ROOM).unwrap();
    let mass = body_metal_mass(&geometry, gold_density_ev4()).unwrap();
    let t0_s = friction_time_constant(mass, fprime).unwrap() * EV_INV_TO_S;
    check_factor("7c", t0_s, RELAXATION_TARGET_S, FACTOR_7C_RELAXATION);
}

// ---------------------------------------------------------------------------
// 8: cooling
// ---------------------------------------------------------------------------

#[test]
fn acceptance_08a_cooling_time_scale_strong() {
    let tc_s = debye_gold().time_scale(T_ROOM).unwrap() * EV_INV_TO_S;
    check_rel("8a", tc_s, TC_STRONG_TARGET_S, TOL_8A_TC_STRONG);
}

#[test]
fn acceptance_08b_cooling_time_scale_weak() {
    let tc_s = weak_gold().time_scale(T_ROOM).unwrap() * EV_INV_TO_S;
    check_rel("8b", tc_s, TC_WEAK_TARGET_S, TOL_8B_TC_WEAK);
}

/// Shared cooldown run for criteria 8c, 8d, 8e, 8f.
fn cooldown(t_body_start: f64) -> (vacprop::dynamics::CoolingTrajectory, f64) {
    let geometry = BodyGeometry::JanusBall { radius: 100.0 * NM };
    let mass = body_metal_mass(&geometry, gold_density_ev4()).unwrap();
    let traj = terminal_velocity_cooling(
        &geometry,
        1.0,
        &gold(),
        &debye_gold(),
        mass,
        T_ROOM,
        t_body_start,
    )
    .unwrap();
    (traj, mass)
}

#[test]
fn acceptance_08c_cooldown_trajectory_integral() {
    let (traj, mass) = cooldown(2.0 * T_ROOM);
    let geometry = BodyGeometry::JanusBall { radius: 100.0 * NM };
    let pref_force = force_janus(&geometry, 1.0, &gold(), room_hot(), EvalMode::SmallUFit)
        .unwrap()
        .prefactor;
    let pref_v = (traj.time_scale_s / EV_INV_TO_S) * pref_force / mass * C_M_PER_S;
    let integral = traj.terminal_velocity_m_s / pref_v;
    check_rel("8c", integral, COOL_INTEGRAL_TARGET, TOL_8C_INTEGRAL);
}

#[test]
fn acceptance_08d_no_cooling_ballistic_comparison() {
    let geometry = BodyGeometry::JanusBall { radius: 100.0 * NM };
    let mass = body_metal_mass(&geometry, gold_density_ev4()).unwrap();
    let force = force_janus(&geometry, 1.0, &gold(), room_hot(), EvalMode::SmallUFit)
        .unwrap()
        .force_natural;
    let v_um_s = (ballistic_velocity(force, mass, 2000.0).unwrap() * 1e6).abs();
    check_rel("8d", v_um_s, BALLISTIC_TARGET_UM_S, TOL_8D_BALLISTIC);
}

#[test]
fn acceptance_08e_cooldown_terminal_velocity() {
    let (traj, _) = cooldown(2.0 * T_ROOM);
    check_rel(
        "8e",
        (traj.terminal_velocity_m_s * 1e6).abs(),
        COOL_TERMINAL_TARGET_UM_S,
        TOL_8E_TERMINAL,
    );
}

#[test]
fn acceptance_08f_hotter_start_scalings() {
    let (base, _) = cooldown(2.0 * T_ROOM);
    let (hot, _) = cooldown(10.0 * T_ROOM);
    let vel_ratio = hot.terminal_velocity_m_s / base.terminal_velocity_m_s;
    check_rel("8f (velocity)", vel_ratio, VEL_SCALING_TARGET, TOL_8F_SCALINGS);
    let time_ratio =
        base.time_to_fraction(0.9).unwrap() / hot.time_to_fraction(0.9).unwrap();
    check_rel("8f (time)", time_ratio, TIME_SCALING_TARGET, TOL_8F_SCALINGS);
}

// ---------------------------------------------------------------------------
// 9: cross-route equivalences
// ---------------------------------------------------------------------------

#[test]
fn acceptance_09a_momentum_vs_coordinate_drag() {
    let spectrum = PolarizabilitySpectrum::VolumeChi {
        volume: 1e-3,
        model: gold(),
    };
    let mut worst: f64 = 0.0;
    for v in [0.01, 0.1, 0.5] {
        let momentum = momentum_friction_first_order(&MomentumForceSpec {
            spectrum: spectrum.clone(),
            v,
            t_env: T_ROOM,
        })
        .unwrap();
        let coordinate =
            friction_first_order(&spectrum, room_hot(), v, Polarization::Zz).unwrap();
        worst = worst.max((momentum - coordinate).abs() / coordinate.abs());
    }
    report(
        "9a",
        worst <= TOL_9A_ROUTES,
        &format!("worst relative route gap {worst:.3e}, tol {TOL_9A_ROUTES:.0e}"),
    );
}

#[test]
fn acceptance_09b_pair_kernel_asymptote() {
    let exact = needle_r_kernel(1e3);
    let asymptote = needle_r_kernel_asymptotic(1e3);
    check_rel("9b", exact, asymptote, TOL_9B_ASYMPTOTE);
}

#[test]
fn acceptance_09c_second_to_first_order_ratio() {
    let geometry = BodyGeometry::Needle {
        length_a: CM,
        length_b: CM,
        radius: 50.0 * NM,
    };
    let v = 1e-3;
    let second = friction_second_order_needle(&geometry, 1.0, T_ROOM, v).unwrap();
    let first = friction_derivative_needle(&geometry, &gold(), T_ROOM).unwrap();
    check_factor(
        "9c",
        second / (v * first.abs()),
        SECOND_TO_FIRST_TARGET,
        FACTOR_9C_RATIO,
    );
}

#[test]
fn acceptance_09d_mirror_force_power_ratio() {
    let spec = PolarizabilitySpectrum::VolumeChi {
        volume: 1e-3,
        model: gold(),
    };
    let power = mirror_dielectric_power(&spec, room_hot()).unwrap();
    let force = mirror_dielectric_force(&spec, room_hot()).unwrap();
    let rel = (force + 0.375 * power).abs() / (0.375 * power).abs();
    report(
        "9d",
        rel <= TOL_9D_MIRROR,
        &format!("force {force:.9e} vs -3/8 power {:.9e}, rel {rel:.3e}", -0.375 * power),
    );
}

// ---------------------------------------------------------------------------
// 10: invariants
// ---------------------------------------------------------------------------

#[test]
fn acceptance_10_equilibrium_zeros_and_antisymmetry() {
    let eq = ThermalPair::new(T_ROOM, T_ROOM);
    let needle = force_needle(&reference_needle(), 1.5, &gold(), eq).unwrap();
    let shell = force_shell(
        &BodyGeometry::SphericalShell {
            radius: CM,
            thickness: 2.0 / GOLD_OMEGA_P,
        },
        1.5,
        &gold(),
        eq,
        EvalMode::LargeUFit,
    )
    .unwrap();
    let janus = force_janus(
        &BodyGeometry::JanusBall { radius: UM },
        1.5,
        &gold(),
        eq,
        EvalMode::SmallUFit,
    )
    .unwrap();
    let plate = force_plate(
        &BodyGeometry::Plate {
            area: CM * CM,
            thickness_a: 10.0 * NM,
            thickness_b: 10.0 * NM,
        },
        &gold(),
        eq,
    )
    .unwrap();
    let all_zero = needle.force_natural == 0.0
        && shell.force_natural == 0.0
        && janus.force_natural == 0.0
        && plate.force_natural == 0.0;
    report(
        "10 (equilibrium)",
        all_zero,
        &format!(
            "needle {:.1e}, shell {:.1e}, ball {:.1e}, films {:.1e}",
            needle.force_natural, shell.force_natural, janus.force_natural, plate.force_natural
        ),
    );

    let mut worst: f64 = 0.0;
    for omega in [0.01, 0.1, 1.0, 5.0] {
        let ab = x_ab(&gold(), &polystyrene(), omega).unwrap();
        let ba = x_ab(&polystyrene(), &gold(), omega).unwrap();
        worst = worst.max((ab + ba).abs() / ab.abs());
        assert_eq!(x_ab(&gold(), &gold(), omega).unwrap(), 0.0);
    }
    report(
        "10 (cross-response antisymmetry)",
        worst == 0.0,
        &format!("worst |X_AB + X_BA| / |X_AB| = {worst:.1e}"),
    );
}

#[test]
fn acceptance_10_material_swap_flips_sign() {
    let radius = 100.0 * NM;
    let ball_iab =
        move |omega: f64| i_ab_janus(omega, radius, EvalMode::SmallUFit);
    let ab = force_spectral(&polystyrene(), &gold(), room_hot(), &ball_iab).unwrap();
    let ba = force_spectral(&gold(), &polystyrene(), room_hot(), &ball_iab).unwrap();
    let ball_rel = (ab.force_natural + ba.force_natural).abs() / ab.force_natural.abs();

    let other_metal = SusceptibilityModel::Drude {
        omega_p: 5.0,
        nu: 0.1,
    };
    let film_iab = |omega: f64| i_ab_plate(omega, CM * CM, 10.0 * NM, 10.0 * NM);
    let ab_f = force_spectral(&gold(), &other_metal, room_hot(), &film_iab).unwrap();
    let ba_f = force_spectral(&other_metal, &gold(), room_hot(), &film_iab).unwrap();
    let film_rel = (ab_f.force_natural + ba_f.force_natural).abs() / ab_f.force_natural.abs();

    let worst = ball_rel.max(film_rel);
    report(
        "10 (material swap)",
        worst <= TOL_10_SWAP,
        &format!("ball rel {ball_rel:.3e}, films rel {film_rel:.3e}, tol {TOL_10_SWAP:.0e}"),
    );
}

#[test]
fn acceptance_10_radiation_kernel_is_nonnegative() {
    let mut min_value = f64::INFINITY;
    let mut min_at = 0.0;
    for k in 0..=600 {
        let u = 1e-3 * 10f64.powf(5.0 * k as f64 / 600.0);
        let value = delta_trace(u);
        if value < min_value {
            min_value = value;
            min_at = u;
        }
    }
    report(
        "10 (kernel positivity)",
        min_value >= 0.0,
        &format!("minimum {min_value:.3e} at u = {min_at:.3e} over [1e-3, 1e2]"),
    );
}

#[test]
fn acceptance_10_closed_form_vs_dispersive_quadrature() {
    // A Lorentz dielectric with its resonance far above the thermal window
    // must reproduce the static closed form of the ball force.
    let geometry = BodyGeometry::JanusBall { radius: 100.0 * NM };
    let omega0 = 6000.0;
    let dielectric = SusceptibilityModel::Lorentz {
        omega_s: omega0 * POLYSTYRENE_CHI_STATIC.sqrt(),
        omega0,
        gamma: 0.65,
    };
    let dispersive =
        force_janus_dispersive(&geometry, &dielectric, &gold(), room_hot()).unwrap();
    let closed = force_janus(
        &geometry,
        POLYSTYRENE_CHI_STATIC,
        &gold(),
        room_hot(),
        EvalMode::SmallUFit,
    )
    .unwrap();
    let rel = (dispersive.force_natural - closed.force_natural).abs()
        / closed.force_natural.abs();
    report(
        "10 (closed vs quadrature)",
        rel <= TOL_10_CLOSED_VS_QUAD,
        &format!(
            "dispersive {:.9e} vs closed {:.9e}, rel {rel:.3e}, tol {TOL_10_CLOSED_VS_QUAD:.0e}",
            dispersive.force_natural, closed.force_natural
        ),
    );
}

#[test]
fn acceptance_10_blackbody_stefan_identity() {
    let area = 2.0 * CM * CM;
    let spec = PolarizabilitySpectrum::BlackbodySurface { area };
    let thermal = room_hot();
    let power = radiated_power(&spec, thermal).unwrap();
    let stefan = area * PI * PI / 60.0
        * (thermal.t_env.powi(4) - thermal.t_body.powi(4));
    let rel = (power - stefan).abs() / stefan.abs();
    report(
        "10 (Stefan identity)",
        rel <= TOL_10_STEFAN,
        &format!("quadrature {power:.9e} vs closed {stefan:.9e}, rel {rel:.3e}"),
    );
}
