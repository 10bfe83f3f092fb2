//! Scenario execution for the `force`, `friction`, and `cool` commands.
//!
//! Each command materializes one [`Table`]. Sweep points are computed
//! concurrently (rayon; thread count via `RAYON_NUM_THREADS`) and written in
//! sweep order, so output is deterministic for a given scenario. Errors at
//! any grid point abort the run before anything is written; the first point
//! in sweep order wins the error report.

use rayon::prelude::*;

use vacprop::dynamics::{
    body_metal_mass, friction_derivative_needle, friction_time_constant, relaxation_velocity,
    terminal_velocity_cooling, terminal_velocity_friction, CoolingModel,
};
use vacprop::error::Error as CoreError;
use vacprop::forces::{
    force_janus, force_janus_dispersive, force_needle, force_plate, force_shell, ForceResult,
};
use vacprop::geometry::{BodyGeometry, EvalMode, PLATE_THIN_FILM_LIMIT};
use vacprop::materials::{
    gold_density_ev4, gold_number_density_ev3, SusceptibilityModel, GOLD_NU, GOLD_OMEGA_P,
};
use vacprop::units::{force_ev2_to_newton, ThermalPair, C_M_PER_S, EV_INV_TO_S};

use crate::output::{Cell, Table};
use crate::scenario::{
    eval_mode_for, geometry_label, size_a_cm, sweep_values, with_size_a, CoolingVariant,
    ModeSpec, Resolved, SweepVariable,
};
use crate::CliError;

/// Map a core error into the exit taxonomy: nonconvergence keeps exit 3 and
/// reports the offending frequency; everything else traces back to scenario
/// content and is a schema violation (exit 2).
pub fn lift(err: CoreError) -> CliError {
    match &err {
        CoreError::NonConvergence { .. } => CliError::NonConvergence(err.to_string()),
        _ => CliError::Schema(format!("scenario rejected by the requested route: {err}")),
    }
}

fn route_label(mode: EvalMode) -> &'static str {
    match mode {
        EvalMode::ClosedForm => "closed_form",
        EvalMode::Cubature => "cubature",
        EvalMode::LargeUFit => "large_u_fit",
        EvalMode::SmallUFit => "small_u_fit",
        EvalMode::MonteCarlo => "monte_carlo",
    }
}

fn constant_chi(model: &SusceptibilityModel, context: &str) -> Result<f64, CliError> {
    match model {
        SusceptibilityModel::Constant { chi } => Ok(*chi),
        other => Err(CliError::Schema(format!(
            "material_a: {context} needs a constant-susceptibility upper half \
             (e.g. {{\"model\": \"constant\", \"chi\": 1.5}}), got {other:?}"
        ))),
    }
}

fn require_gold(resolved: &Resolved, context: &str) -> Result<(), CliError> {
    if resolved.b_is_gold_preset {
        Ok(())
    } else {
        Err(CliError::Schema(format!(
            "material_b: {context} uses the tabulated gold mass and number \
             densities, so material_b must be the \"gold\" preset"
        )))
    }
}

/// Validity warnings for one evaluation point; printed to stderr, never
/// fatal.
fn validity_warning(geometry: &BodyGeometry, thermal: ThermalPair) -> Option<String> {
    match *geometry {
        BodyGeometry::SphericalShell { radius, thickness } if thickness > 0.1 * radius => {
            Some(format!(
                "shell thickness {thickness:.3e} exceeds a tenth of the radius \
                 {radius:.3e} (1/eV); the thin-shell closed form degrades"
            ))
        }
        BodyGeometry::Plate {
            thickness_a,
            thickness_b,
            ..
        } => {
            let t_max = thermal.t_env.max(thermal.t_body);
            let omega_a = 5.0 * t_max * thickness_a.max(thickness_b);
            (omega_a > PLATE_THIN_FILM_LIMIT).then(|| {
                format!(
                    "thermal frequencies reach omega*t = {omega_a:.3e} > \
                     {PLATE_THIN_FILM_LIMIT} on the thicker film; the thin-film \
                     expansion degrades"
                )
            })
        }
        _ => None,
    }
}

/// Grid of (sweep value, geometry, thermal pair) tuples for force-like
/// commands; a single entry when no sweep is present.
fn force_grid(
    resolved: &Resolved,
    allow_time: bool,
) -> Result<Vec<(Option<f64>, BodyGeometry, ThermalPair)>, CliError> {
    let Some(sweep) = &resolved.sweep else {
        return Ok(vec![(None, resolved.geometry, resolved.thermal)]);
    };
    match sweep.variable {
        SweepVariable::TBody => sweep_values(sweep)
            .into_iter()
            .map(|v| {
                if v == 0.0 && resolved.thermal.t_env == 0.0 {
                    return Err(CliError::Schema(
                        "sweep: a t_body grid point and the environment are both zero".into(),
                    ));
                }
                Ok((
                    Some(v),
                    resolved.geometry,
                    ThermalPair::new(resolved.thermal.t_env, v),
                ))
            })
            .collect(),
        SweepVariable::SizeA => sweep_values(sweep)
            .into_iter()
            .map(|v| {
                let geometry =
                    with_size_a(&resolved.geometry, v).map_err(|e| CliError::Schema(e.0))?;
                Ok((Some(v), geometry, resolved.thermal))
            })
            .collect(),
        SweepVariable::Time if !allow_time => Err(CliError::Schema(
            "sweep: the force command sweeps t_body or size_a, not time".into(),
        )),
        SweepVariable::Time => Ok(Vec::new()),
    }
}

/// Evaluate the propulsive force at one grid point, returning the result and
/// the route label actually used.
fn force_point(
    resolved: &Resolved,
    geometry: &BodyGeometry,
    thermal: ThermalPair,
) -> Result<(ForceResult, &'static str), CliError> {
    match geometry {
        BodyGeometry::Needle { .. } => {
            let chi = constant_chi(&resolved.material_a, "the needle route")?;
            let out = force_needle(geometry, chi, &resolved.material_b, thermal).map_err(lift)?;
            Ok((out, "closed_form"))
        }
        BodyGeometry::SphericalShell { .. } => {
            let chi = constant_chi(&resolved.material_a, "the shell route")?;
            let mode = eval_mode_for(geometry, resolved.mode).map_err(|e| CliError::Schema(e.0))?;
            let out =
                force_shell(geometry, chi, &resolved.material_b, thermal, mode).map_err(lift)?;
            Ok((out, route_label(mode)))
        }
        BodyGeometry::JanusBall { .. } => match resolved.material_a {
            SusceptibilityModel::Lorentz { .. } => {
                if resolved.mode != ModeSpec::ClosedForm {
                    return Err(CliError::Schema(
                        "mode: a dispersive (lorentz) upper half is evaluated in \
                         closed form only"
                            .into(),
                    ));
                }
                let out = force_janus_dispersive(
                    geometry,
                    &resolved.material_a,
                    &resolved.material_b,
                    thermal,
                )
                .map_err(lift)?;
                Ok((out, "closed_form_dispersive"))
            }
            _ => {
                let chi = constant_chi(&resolved.material_a, "the ball route")?;
                let mode =
                    eval_mode_for(geometry, resolved.mode).map_err(|e| CliError::Schema(e.0))?;
                let out = force_janus(geometry, chi, &resolved.material_b, thermal, mode)
                    .map_err(lift)?;
                Ok((out, route_label(mode)))
            }
        },
        BodyGeometry::Plate { .. } => {
            if !matches!(resolved.material_a, SusceptibilityModel::BlackbodySurface) {
                return Err(CliError::Schema(
                    "material_a: the plate route models a perfectly absorbing upper \
                     film; material_a must be \"blackbody_surface\""
                        .into(),
                ));
            }
            eval_mode_for(geometry, resolved.mode).map_err(|e| CliError::Schema(e.0))?;
            let out = force_plate(geometry, &resolved.material_b, thermal).map_err(lift)?;
            Ok((out, "closed_form"))
        }
    }
}

fn sweep_cells(resolved: &Resolved, value: Option<f64>) -> (Cell, Cell) {
    match (&resolved.sweep, value) {
        (Some(sweep), Some(v)) => (Cell::text(sweep.variable.label()), Cell::Num(v)),
        _ => (Cell::text("none"), Cell::Empty),
    }
}

const FORCE_COLUMNS: &[&str] = &[
    "command",
    "geometry",
    "mode",
    "sweep_variable",
    "sweep_value",
    "size_a_cm",
    "t_env_ev",
    "t_body_ev",
    "fhat",
    "prefactor_ev2",
    "force_ev2",
    "force_newtons",
    "error_ev2",
];

/// Run the `force` command: the propulsive force at every grid point.
pub fn run_force(resolved: &Resolved) -> Result<Table, CliError> {
    let grid = force_grid(resolved, false)?;
    let computed: Vec<Result<_, CliError>> = grid
        .par_iter()
        .map(|(value, geometry, thermal)| {
            let (out, route) = force_point(resolved, geometry, *thermal)?;
            Ok((*value, *geometry, *thermal, out, route))
        })
        .collect();

    let mut table = Table::new("vacprop.force/1", FORCE_COLUMNS);
    let mut warning: Option<String> = None;
    for item in computed {
        let (value, geometry, thermal, out, route) = item?;
        if warning.is_none() {
            warning = validity_warning(&geometry, thermal);
        }
        let (sv, sx) = sweep_cells(resolved, value);
        table.push(vec![
            Cell::text("force"),
            Cell::text(geometry_label(&geometry)),
            Cell::text(route),
            sv,
            sx,
            Cell::Num(size_a_cm(&geometry)),
            Cell::Num(thermal.t_env),
            Cell::Num(thermal.t_body),
            Cell::Num(out.fhat),
            Cell::Num(out.prefactor),
            Cell::Num(out.force_natural),
            Cell::Num(out.force_newtons),
            Cell::Num(out.quadrature_error),
        ]);
    }
    if let Some(text) = warning {
        eprintln!("warning: {text}");
    }
    Ok(table)
}

const FRICTION_COLUMNS: &[&str] = &[
    "command",
    "sweep_variable",
    "sweep_value",
    "size_a_cm",
    "t_env_ev",
    "t_body_ev",
    "fhat",
    "prefactor_ev2",
    "force_ev2",
    "force_newtons",
    "error_ev2",
    "fprime_ev2",
    "v_terminal_c",
    "v_terminal_m_s",
    "tau_s",
    "time_s",
    "velocity_m_s",
];

struct FrictionPoint {
    out: ForceResult,
    fprime: f64,
    v_terminal: f64,
    tau_s: f64,
}

fn friction_point(
    resolved: &Resolved,
    geometry: &BodyGeometry,
    thermal: ThermalPair,
) -> Result<FrictionPoint, CliError> {
    let chi = constant_chi(&resolved.material_a, "the needle friction balance")?;
    let out = force_needle(geometry, chi, &resolved.material_b, thermal).map_err(lift)?;
    let fprime =
        friction_derivative_needle(geometry, &resolved.material_b, thermal.t_env).map_err(lift)?;
    let v_terminal = terminal_velocity_friction(&out, fprime).map_err(lift)?;
    let mass = body_metal_mass(geometry, gold_density_ev4()).map_err(lift)?;
    let tau_s = friction_time_constant(mass, fprime).map_err(lift)? * EV_INV_TO_S;
    Ok(FrictionPoint {
        out,
        fprime,
        v_terminal,
        tau_s,
    })
}

/// Run the `friction` command: propulsion against Einstein-Hopf drag on the
/// needle, with the terminal velocity, the relaxation time, and (for time
/// sweeps) the approach to the terminal velocity.
pub fn run_friction(resolved: &Resolved) -> Result<Table, CliError> {
    if !matches!(resolved.geometry, BodyGeometry::Needle { .. }) {
        return Err(CliError::Schema(
            "geometry: the friction command balances the needle routes; use a \
             needle geometry"
                .into(),
        ));
    }
    require_gold(resolved, "the friction relaxation time")?;
    if resolved.mode != ModeSpec::ClosedForm {
        return Err(CliError::Schema(
            "mode: the friction command runs the needle closed form only".into(),
        ));
    }

    let mut table = Table::new("vacprop.friction/1", FRICTION_COLUMNS);
    let time_sweep = resolved
        .sweep
        .as_ref()
        .filter(|s| s.variable == SweepVariable::Time);
    if let Some(sweep) = time_sweep {
        let point = friction_point(resolved, &resolved.geometry, resolved.thermal)?;
        for t_s in sweep_values(sweep) {
            let v = relaxation_velocity(point.v_terminal, t_s, point.tau_s);
            table.push(friction_row(
                &resolved.geometry,
                resolved.thermal,
                &point,
                Some(t_s),
                Some(v),
            ));
        }
        return Ok(table);
    }

    let grid = force_grid(resolved, true)?;
    let computed: Vec<Result<_, CliError>> = grid
        .par_iter()
        .map(|(value, geometry, thermal)| {
            let point = friction_point(resolved, geometry, *thermal)?;
            Ok((*value, *geometry, *thermal, point))
        })
        .collect();
    for item in computed {
        let (value, geometry, thermal, point) = item?;
        let (sv, sx) = sweep_cells(resolved, value);
        let mut row = friction_row(&geometry, thermal, &point, None, None);
        row[1] = sv;
        row[2] = sx;
        table.push(row);
    }
    Ok(table)
}

fn friction_row(
    geometry: &BodyGeometry,
    thermal: ThermalPair,
    point: &FrictionPoint,
    time_s: Option<f64>,
    velocity: Option<f64>,
) -> Vec<Cell> {
    vec![
        Cell::text("friction"),
        Cell::text(if time_s.is_some() { "time" } else { "none" }),
        time_s.map(Cell::Num).unwrap_or(Cell::Empty),
        Cell::Num(size_a_cm(geometry)),
        Cell::Num(thermal.t_env),
        Cell::Num(thermal.t_body),
        Cell::Num(point.out.fhat),
        Cell::Num(point.out.prefactor),
        Cell::Num(point.out.force_natural),
        Cell::Num(point.out.force_newtons),
        Cell::Num(point.out.quadrature_error),
        Cell::Num(point.fprime),
        Cell::Num(point.v_terminal),
        Cell::Num(point.v_terminal * C_M_PER_S),
        Cell::Num(point.tau_s),
        time_s.map(Cell::Num).unwrap_or(Cell::Empty),
        velocity
            .map(|v| Cell::Num(v * C_M_PER_S))
            .unwrap_or(Cell::Empty),
    ]
}

const COOL_COLUMNS: &[&str] = &[
    "command",
    "geometry",
    "variant",
    "time_s",
    "t_body_ev",
    "force_ev2",
    "force_newtons",
    "velocity_um_s",
    "terminal_velocity_um_s",
    "mass_ev",
    "time_scale_s",
    "error_um_s",
];

/// Run the `cool` command: integrate the cooldown of a ball or shell and
/// report the velocity history plus the terminal velocity.
///
/// Without a sweep the native trajectory samples are emitted; a `time`
/// sweep reports the interpolated state at the requested times instead.
pub fn run_cool(resolved: &Resolved) -> Result<Table, CliError> {
    if !matches!(
        resolved.geometry,
        BodyGeometry::JanusBall { .. } | BodyGeometry::SphericalShell { .. }
    ) {
        return Err(CliError::Schema(
            "geometry: the cool command integrates the ball and shell closed \
             routes; use a janus_ball or spherical_shell geometry"
                .into(),
        ));
    }
    require_gold(resolved, "the cooldown mass and radiator densities")?;
    let chi = constant_chi(&resolved.material_a, "the cooldown closed route")?;
    if let Some(sweep) = &resolved.sweep {
        if sweep.variable != SweepVariable::Time {
            return Err(CliError::Schema(
                "sweep: the cool command sweeps time only".into(),
            ));
        }
    }

    let (variant_label, model) = match resolved.cooling {
        CoolingVariant::DebyeLorenzLorentz => (
            "debye_lorenz_lorentz",
            CoolingModel::DebyeLorenzLorentz {
                n_density: gold_number_density_ev3(),
                omega_p: GOLD_OMEGA_P,
                nu: GOLD_NU,
            },
        ),
        CoolingVariant::WeakSusceptibility => (
            "weak_susceptibility",
            CoolingModel::WeakSusceptibility {
                n_density: gold_number_density_ev3(),
                omega_p: GOLD_OMEGA_P,
                nu: GOLD_NU,
            },
        ),
    };
    let mass = body_metal_mass(&resolved.geometry, gold_density_ev4()).map_err(lift)?;
    let trajectory = terminal_velocity_cooling(
        &resolved.geometry,
        chi,
        &resolved.material_b,
        &model,
        mass,
        resolved.thermal.t_env,
        resolved.thermal.t_body,
    )
    .map_err(lift)?;

    let mut table = Table::new("vacprop.cool/1", COOL_COLUMNS);
    let geometry = Cell::text(geometry_label(&resolved.geometry));
    let push_row = |table: &mut Table, time_s: f64, t_body: f64, force: f64, v_m_s: f64| {
        table.push(vec![
            Cell::text("cool"),
            geometry.clone(),
            Cell::text(variant_label),
            Cell::Num(time_s),
            Cell::Num(t_body),
            Cell::Num(force),
            Cell::Num(force_ev2_to_newton(force)),
            Cell::Num(v_m_s * 1e6),
            Cell::Num(trajectory.terminal_velocity_m_s * 1e6),
            Cell::Num(trajectory.mass_ev),
            Cell::Num(trajectory.time_scale_s),
            Cell::Num(trajectory.quadrature_error_m_s * 1e6),
        ]);
    };

    match &resolved.sweep {
        None => {
            for sample in &trajectory.samples {
                push_row(
                    &mut table,
                    sample.time_s,
                    sample.t_body,
                    sample.force_natural,
                    sample.velocity_m_s,
                );
            }
        }
        Some(sweep) => {
            for t_s in sweep_values(sweep) {
                let t_body = trajectory.temperature_at(t_s);
                let force = if t_body > resolved.thermal.t_env {
                    force_point(
                        resolved,
                        &resolved.geometry,
                        ThermalPair::new(resolved.thermal.t_env, t_body),
                    )?
                    .0
                    .force_natural
                } else {
                    0.0
                };
                push_row(&mut table, t_s, t_body, force, trajectory.velocity_at(t_s));
            }
        }
    }
    Ok(table)
}
