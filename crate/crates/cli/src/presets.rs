//! The `presets` command: material presets and runnable example scenarios.
//!
//! `vacprop presets` prints one JSON document with every material preset
//! (in the same form the scenario schema accepts inline) and a set of named
//! example scenarios. `vacprop presets <name>` prints just that scenario,
//! ready to save to a file and feed back to `force`, `friction`, or `cool`.

use serde_json::{json, Value};

use vacprop::materials::{gold, polystyrene};

use crate::CliError;

/// Example scenarios in stable order: (name, command it is meant for, JSON).
fn scenarios() -> Vec<(&'static str, &'static str, Value)> {
    let gold_skin_depth_cm = (2.0 / 9.0) / 5.0e4;
    vec![
        (
            "needle-figure-sweep",
            "force",
            json!({
                "schema_version": 1,
                "geometry": {"kind": "needle", "length_a_cm": 1e-3,
                             "length_b_cm": 1e-3, "radius_cm": 1e-6},
                "material_a": {"model": "constant", "chi": 1.5},
                "material_b": "gold",
                "temperatures": {"environment_ev": 0.025, "body_ev": 0.05},
                "mode": "closed_form",
                "sweep": {"variable": "size_a", "start": 1e-3, "stop": 10.0,
                          "points": 25, "log": true}
            }),
        ),
        (
            "janus-temperature-sweep",
            "force",
            json!({
                "schema_version": 1,
                "geometry": {"kind": "janus_ball", "radius_cm": 1e-4},
                "material_a": {"model": "constant", "chi": 1.5},
                "material_b": "gold",
                "temperatures": {"environment_ev": 0.025, "body_ev": 0.05},
                "mode": "small_u_fit",
                "sweep": {"variable": "t_body", "start": 0.0125, "stop": 0.1,
                          "points": 8, "log": false}
            }),
        ),
        (
            "shell-skin-depth-point",
            "force",
            json!({
                "schema_version": 1,
                "geometry": {"kind": "spherical_shell", "radius_cm": 1.0,
                             "thickness_cm": gold_skin_depth_cm},
                "material_a": {"model": "constant", "chi": 1.5},
                "material_b": "gold",
                "temperatures": {"environment_ev": 0.025, "body_ev": 0.05},
                "mode": "large_u_fit"
            }),
        ),
        (
            "plate-blackbody-point",
            "force",
            json!({
                "schema_version": 1,
                "geometry": {"kind": "plate", "area_cm2": 1.0,
                             "thickness_a_cm": 1e-6, "thickness_b_cm": 1e-6},
                "material_a": "blackbody_surface",
                "material_b": "gold",
                "temperatures": {"environment_ev": 0.025, "body_ev": 0.05}
            }),
        ),
        (
            "needle-friction-relaxation",
            "friction",
            json!({
                "schema_version": 1,
                "geometry": {"kind": "needle", "length_a_cm": 1.0,
                             "length_b_cm": 1.0, "radius_cm": 1e-6},
                "material_a": {"model": "constant", "chi": 1.5},
                "material_b": "gold",
                "temperatures": {"environment_ev": 0.025, "body_ev": 0.05},
                "sweep": {"variable": "time", "start": 0.0, "stop": 2.5e9,
                          "points": 6, "log": false}
            }),
        ),
        (
            "janus-cooldown",
            "cool",
            json!({
                "schema_version": 1,
                "geometry": {"kind": "janus_ball", "radius_cm": 1e-5},
                "material_a": {"model": "constant", "chi": 1.0},
                "material_b": "gold",
                "temperatures": {"environment_ev": 0.025, "body_ev": 0.05},
                "cooling": {"variant": "debye_lorenz_lorentz"}
            }),
        ),
    ]
}

fn document() -> Value {
    let mut scenario_map = serde_json::Map::new();
    for (name, command, value) in scenarios() {
        scenario_map.insert(
            name.to_string(),
            json!({"command": command, "scenario": value}),
        );
    }
    json!({
        "schema_version": 1,
        "materials": {
            "gold": serde_json::to_value(gold()).expect("gold preset"),
            "polystyrene": serde_json::to_value(polystyrene()).expect("polystyrene preset"),
            "blackbody_surface": {"model": "blackbody_surface"},
        },
        "scenarios": Value::Object(scenario_map),
    })
}

/// Print the preset document, or one named scenario.
pub fn run(name: Option<&str>) -> Result<(), CliError> {
    match name {
        None => {
            println!(
                "{}",
                serde_json::to_string_pretty(&document()).expect("presets encode")
            );
            Ok(())
        }
        Some(wanted) => {
            for (name, _, value) in scenarios() {
                if name == wanted {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&value).expect("preset encode")
                    );
                    return Ok(());
                }
            }
            let names: Vec<_> = scenarios().iter().map(|(n, _, _)| *n).collect();
            Err(CliError::Schema(format!(
                "presets: unknown scenario {wanted:?}; available: {}",
                names.join(", ")
            )))
        }
    }
}
