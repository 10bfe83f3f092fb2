//! The `validate` command: a registry of independent cross-checks.
//!
//! Each check compares two routes to the same quantity (closed form vs
//! quadrature, coordinate-space vs momentum-space, tensor flux vs scalar
//! power, Monte Carlo vs series) and passes when the relative deviation is
//! below its pinned tolerance. Results are printed to stdout as one JSON
//! array; a human-readable PASS/FAIL line per check goes to stderr. Any
//! failing check makes the command exit nonzero.
//!
//! The seed passed on the command line drives the sampled checks (the
//! Doppler-window identity and the Monte Carlo ball integral), so a run is
//! reproducible end to end.

use std::f64::consts::PI;

use vacprop::dynamics::{friction_first_order, radiated_power, Polarization, PolarizabilitySpectrum};
use vacprop::forces::{force_janus, force_janus_dispersive, needle_fhat, needle_fhat_saturation};
use vacprop::geometry::{
    i_ab_generic, i_ab_janus_series, i_ab_janus_terms, i_ab_plate, i_ab_shell, EvalMode,
    MonteCarloSettings, SampleRegion,
};
use vacprop::materials::{gold, SusceptibilityModel, GOLD_NU};
use vacprop::units::{ThermalPair, CM, NM, T_ROOM};
use vacprop::validation::{
    doppler_window_identity_max_error, farfield_flux_total, imgamma_kx_integral,
    imgamma_kx_lorentzian, mirror_dielectric_force, mirror_dielectric_power,
    mirror_dielectric_power_profile, mirror_screen_profile_integral, momentum_friction_first_order,
    plate_fourier_iab, MomentumForceSpec,
};

use crate::CliError;

/// Outcome of one check before pass/fail classification.
struct Outcome {
    value: f64,
    reference: f64,
    tol: f64,
}

type CheckFn = fn(u64) -> Result<Outcome, String>;

/// Registered checks, in fixed execution order.
const CHECKS: &[(&str, CheckFn)] = &[
    ("needle_plateau_vs_saturation", needle_plateau),
    ("friction_momentum_vs_coordinate", momentum_route),
    ("friction_doppler_window_identity", doppler_identity),
    ("mirror_power_profile_route", mirror_profile),
    ("mirror_force_power_ratio", mirror_ratio),
    ("mirror_screen_profile_weight", screen_weight),
    ("onshell_lorentzian_limit", lorentzian_limit),
    ("plate_fourier_thin_film", fourier_film),
    ("farfield_isotropic_reduction", farfield_scalar),
    ("blackbody_stefan_power", stefan),
    ("janus_series_cancellation", janus_cancellation),
    ("shell_angular_anchor", shell_anchor),
    ("janus_monte_carlo_vs_series", janus_monte_carlo),
    ("janus_dispersive_reduction", dispersive_reduction),
];

fn hot_pair() -> ThermalPair {
    ThermalPair::new(T_ROOM, 2.0 * T_ROOM)
}

fn gold_grain() -> PolarizabilitySpectrum {
    PolarizabilitySpectrum::VolumeChi {
        volume: 1.0e-3,
        model: gold(),
    }
}

fn say(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn needle_plateau(_seed: u64) -> Result<Outcome, String> {
    let pair = hot_pair();
    let (fhat, _) = needle_fhat(0.5 * CM, 0.5 * CM, GOLD_NU, pair).map_err(say)?;
    let saturation = needle_fhat_saturation(GOLD_NU, pair).map_err(say)?;
    Ok(Outcome {
        value: fhat,
        reference: saturation,
        tol: 5e-3,
    })
}

fn momentum_route(_seed: u64) -> Result<Outcome, String> {
    let spectrum = gold_grain();
    let v = 0.1;
    let momentum = momentum_friction_first_order(&MomentumForceSpec {
        spectrum: spectrum.clone(),
        v,
        t_env: T_ROOM,
    })
    .map_err(say)?;
    let coordinate =
        friction_first_order(&spectrum, hot_pair(), v, Polarization::Zz).map_err(say)?;
    Ok(Outcome {
        value: momentum,
        reference: coordinate,
        tol: 1e-6,
    })
}

fn doppler_identity(seed: u64) -> Result<Outcome, String> {
    let worst = doppler_window_identity_max_error(seed, 8, T_ROOM).map_err(say)?;
    Ok(Outcome {
        value: worst,
        reference: 0.0,
        tol: 1e-8,
    })
}

fn mirror_profile(_seed: u64) -> Result<Outcome, String> {
    let spectrum = gold_grain();
    let pair = hot_pair();
    let closed = mirror_dielectric_power(&spectrum, pair).map_err(say)?;
    let profile = mirror_dielectric_power_profile(&spectrum, pair).map_err(say)?;
    Ok(Outcome {
        value: profile,
        reference: closed,
        tol: 1e-8,
    })
}

fn mirror_ratio(_seed: u64) -> Result<Outcome, String> {
    let spectrum = gold_grain();
    let pair = hot_pair();
    let power = mirror_dielectric_power(&spectrum, pair).map_err(say)?;
    let force = mirror_dielectric_force(&spectrum, pair).map_err(say)?;
    Ok(Outcome {
        value: force,
        reference: -0.375 * power,
        tol: 1e-8,
    })
}

fn screen_weight(_seed: u64) -> Result<Outcome, String> {
    Ok(Outcome {
        value: mirror_screen_profile_integral(3.7),
        reference: 4.0 * PI / 3.0,
        tol: 1e-10,
    })
}

fn lorentzian_limit(_seed: u64) -> Result<Outcome, String> {
    let (k_y, k_z, omega) = (0.3, 0.4, 1.0);
    let richardson = 2.0 * imgamma_kx_lorentzian(k_y, k_z, omega, 0.01)
        - imgamma_kx_lorentzian(k_y, k_z, omega, 0.02);
    Ok(Outcome {
        value: richardson,
        reference: imgamma_kx_integral(k_y, k_z, omega),
        tol: 1e-3,
    })
}

fn fourier_film(_seed: u64) -> Result<Outcome, String> {
    let (omega, area, t_a, t_b) = (1e-3, CM * CM, 0.5, 0.5);
    let fourier = plate_fourier_iab(omega, area, t_a, t_b).map_err(say)?;
    let closed = i_ab_plate(omega, area, t_a, t_b).map_err(say)?;
    Ok(Outcome {
        value: fourier,
        reference: closed.value,
        tol: 1e-5,
    })
}

fn farfield_scalar(_seed: u64) -> Result<Outcome, String> {
    let spectrum = gold_grain();
    let pair = hot_pair();
    let identity = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let flux = farfield_flux_total(identity, &spectrum, pair).map_err(say)?;
    let scalar = radiated_power(&spectrum, pair).map_err(say)?;
    Ok(Outcome {
        value: flux,
        reference: scalar,
        tol: 1e-8,
    })
}

fn stefan(_seed: u64) -> Result<Outcome, String> {
    let area = 2.0 * CM * CM;
    let pair = hot_pair();
    let power = radiated_power(&PolarizabilitySpectrum::BlackbodySurface { area }, pair)
        .map_err(say)?;
    let closed = area * PI * PI / 60.0 * (pair.t_env.powi(4) - pair.t_body.powi(4));
    Ok(Outcome {
        value: power,
        reference: closed,
        tol: 1e-8,
    })
}

fn janus_cancellation(_seed: u64) -> Result<Outcome, String> {
    let (omega, radius) = (1e-2, 1.0);
    let (t1, t2) = i_ab_janus_terms(omega, radius).map_err(say)?;
    let series = i_ab_janus_series(omega, radius).map_err(say)?;
    Ok(Outcome {
        value: t1 - t2,
        reference: series,
        tol: 1e-3,
    })
}

fn shell_anchor(_seed: u64) -> Result<Outcome, String> {
    let (omega, radius, thickness) = (5.0, 1.0, 0.01);
    let result = i_ab_shell(omega, radius, thickness, EvalMode::Cubature).map_err(say)?;
    let x = omega * radius;
    let scaled = result.value * 8.0 * PI * x.powi(4)
        / (omega.powi(8) * radius.powi(5) * thickness * thickness);
    Ok(Outcome {
        value: scaled,
        reference: -4.117,
        tol: 5e-3,
    })
}

fn janus_monte_carlo(seed: u64) -> Result<Outcome, String> {
    let (omega, radius) = (0.2, 1.0);
    let upper = SampleRegion::HalfBall {
        radius,
        upper: true,
    };
    let lower = SampleRegion::HalfBall {
        radius,
        upper: false,
    };
    let settings = MonteCarloSettings {
        samples: 600_000,
        batches: 16,
        seed,
    };
    let mc = i_ab_generic(omega, &upper, &lower, &settings).map_err(say)?;
    let series = i_ab_janus_series(omega, radius).map_err(say)?;
    Ok(Outcome {
        value: mc.value,
        reference: series,
        tol: 0.1,
    })
}

fn dispersive_reduction(_seed: u64) -> Result<Outcome, String> {
    let geometry = vacprop::geometry::BodyGeometry::JanusBall { radius: 100.0 * NM };
    let pair = hot_pair();
    let chi = 1.5_f64;
    let omega0 = 6000.0;
    let dielectric = SusceptibilityModel::Lorentz {
        omega_s: omega0 * chi.sqrt(),
        omega0,
        gamma: 0.65,
    };
    let dispersive =
        force_janus_dispersive(&geometry, &dielectric, &gold(), pair).map_err(say)?;
    let closed = force_janus(&geometry, chi, &gold(), pair, EvalMode::SmallUFit).map_err(say)?;
    Ok(Outcome {
        value: dispersive.force_natural,
        reference: closed.force_natural,
        tol: 1e-6,
    })
}

fn relative_error(value: f64, reference: f64) -> f64 {
    if reference == 0.0 {
        value.abs()
    } else {
        (value - reference).abs() / reference.abs()
    }
}

/// Run the registry (optionally restricted to names containing `filter`),
/// print results, and fail on any failing check.
///
/// Unknown filters (no matching check) are usage errors.
pub fn run_validate(filter: Option<&str>, seed: u64) -> Result<(), CliError> {
    let selected: Vec<_> = CHECKS
        .iter()
        .filter(|(name, _)| match filter {
            Some(f) => name.to_lowercase().contains(&f.to_lowercase()),
            None => true,
        })
        .collect();
    if selected.is_empty() {
        let names: Vec<_> = CHECKS.iter().map(|(name, _)| *name).collect();
        return Err(CliError::Schema(format!(
            "validate: filter {:?} matches no checks; available: {}",
            filter.unwrap_or(""),
            names.join(", ")
        )));
    }

    let mut results = Vec::with_capacity(selected.len());
    let mut failures = 0usize;
    for (name, check) in selected {
        let entry = match check(seed) {
            Ok(outcome) => {
                let rel = relative_error(outcome.value, outcome.reference);
                let pass = rel.is_finite() && rel <= outcome.tol;
                if !pass {
                    failures += 1;
                }
                eprintln!(
                    "{} {name} (rel {rel:.3e}, tol {:.1e})",
                    if pass { "PASS" } else { "FAIL" },
                    outcome.tol
                );
                serde_json::json!({
                    "name": name,
                    "value": outcome.value,
                    "reference": outcome.reference,
                    "rel_err": rel,
                    "tol": outcome.tol,
                    "pass": pass,
                })
            }
            Err(message) => {
                failures += 1;
                eprintln!("FAIL {name} (error: {message})");
                serde_json::json!({
                    "name": name,
                    "error": message,
                    "pass": false,
                })
            }
        };
        results.push(entry);
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&serde_json::Value::Array(results)).expect("json encode")
    );
    if failures > 0 {
        Err(CliError::Failures(failures))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique_and_stable() {
        let mut names: Vec<_> = CHECKS.iter().map(|(name, _)| *name).collect();
        names.sort_unstable();
        let before = names.len();
        names.dedup();
        assert_eq!(names.len(), before);
        assert!(names.iter().any(|n| n.contains("mirror")));
    }

    #[test]
    fn relative_error_handles_zero_reference() {
        assert_eq!(relative_error(3e-9, 0.0), 3e-9);
        assert!((relative_error(1.1, 1.0) - 0.1).abs() < 1e-15);
    }

    #[test]
    fn cheap_identities_pass() {
        for name in [
            "mirror_screen_profile_weight",
            "blackbody_stefan_power",
            "janus_series_cancellation",
            "janus_dispersive_reduction",
        ] {
            let check = CHECKS
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, c)| *c)
                .unwrap();
            let outcome = check(42).unwrap();
            let rel = relative_error(outcome.value, outcome.reference);
            assert!(rel <= outcome.tol, "{name}: rel {rel:e} > tol {:e}", outcome.tol);
        }
    }
}
