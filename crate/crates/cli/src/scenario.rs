//! Scenario file schema and its resolution into core types.
//!
//! A scenario is a single JSON document with a top-level `schema_version`
//! key (currently 1). Geometry dimensions are given in centimeters,
//! temperatures either in kelvin (`*_k`, converted at 1 K = 8.617e-5 eV) or
//! directly in eV (`*_ev`); exactly one of the two spellings must be present
//! for the environment and for the body. Materials are either preset names
//! (`"gold"`, `"polystyrene"`, `"blackbody_surface"`) or inline model
//! objects tagged by `"model"`.
//!
//! Parsing errors (malformed JSON, wrong types, unknown fields) are reported
//! with the line and column of the offending token; semantic violations
//! (missing temperature, negative dimension, unsupported mode for a
//! geometry) name the field instead. Both are schema violations from the
//! caller's point of view and map to exit code 2.

use serde::Deserialize;
use vacprop::geometry::{BodyGeometry, EvalMode};
use vacprop::materials::{self, SusceptibilityModel};
use vacprop::units::{ThermalPair, CM, KELVIN_TO_EV};

/// Schema version this build reads and writes.
pub const SCHEMA_VERSION: u32 = 1;

/// Error raised while reading a scenario: everything here is a schema
/// violation (exit code 2).
#[derive(Debug)]
pub struct SchemaError(pub String);

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Top-level scenario document.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    /// Must equal [`SCHEMA_VERSION`].
    pub schema_version: u32,
    /// Body shape with dimensions in centimeters.
    pub geometry: GeometrySpec,
    /// Upper (+z) material.
    pub material_a: MaterialSpec,
    /// Lower (-z) material; the metal side in every closed route.
    pub material_b: MaterialSpec,
    /// Environment and body temperatures.
    pub temperatures: TemperatureSpec,
    /// Evaluation route; defaults to the geometry's closed form.
    #[serde(default)]
    pub mode: ModeSpec,
    /// Optional one-variable sweep.
    #[serde(default)]
    pub sweep: Option<SweepSpec>,
    /// Cooling model selection, used by the `cool` command only.
    #[serde(default)]
    pub cooling: Option<CoolingSpec>,
    /// Output destination and format; stdout CSV when absent.
    #[serde(default)]
    pub output: Option<OutputSpec>,
}

/// Body geometry with dimensions in centimeters.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GeometrySpec {
    /// Thin two-segment rod; A fills the upper segment.
    Needle {
        /// Upper (A) segment length, cm.
        length_a_cm: f64,
        /// Lower (B) segment length, cm.
        length_b_cm: f64,
        /// Cross-section radius, cm.
        radius_cm: f64,
    },
    /// Thin spherical shell, hemispheres of A and B.
    SphericalShell {
        /// Shell radius, cm.
        radius_cm: f64,
        /// Shell thickness, cm.
        thickness_cm: f64,
    },
    /// Solid half-and-half ball.
    JanusBall {
        /// Ball radius, cm.
        radius_cm: f64,
    },
    /// Two stacked thin films of common area.
    Plate {
        /// Common film area, cm^2.
        area_cm2: f64,
        /// Upper (A) film thickness, cm.
        thickness_a_cm: f64,
        /// Lower (B) film thickness, cm.
        thickness_b_cm: f64,
    },
}

/// Material half: preset name or inline susceptibility model.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MaterialSpec {
    /// Preset name: `"gold"`, `"polystyrene"`, or `"blackbody_surface"`.
    Preset(String),
    /// Inline model object, e.g. `{"model": "constant", "chi": 1.5}`.
    Inline(SusceptibilityModel),
}

/// Temperatures; exactly one spelling per side.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TemperatureSpec {
    /// Environment temperature in kelvin.
    #[serde(default)]
    pub environment_k: Option<f64>,
    /// Environment temperature in eV.
    #[serde(default)]
    pub environment_ev: Option<f64>,
    /// Body temperature in kelvin.
    #[serde(default)]
    pub body_k: Option<f64>,
    /// Body temperature in eV.
    #[serde(default)]
    pub body_ev: Option<f64>,
}

/// Requested evaluation route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeSpec {
    /// The geometry's closed-form route (shell: large-size fit, ball:
    /// small-size fit).
    #[default]
    ClosedForm,
    /// Converged cubature of the shape integral (shell and ball only).
    Cubature,
    /// Small-size power-law fit (ball only; same as closed_form there).
    SmallUFit,
    /// Large-size power-law fit (shell closed form; also valid for the ball).
    LargeUFit,
}

/// One-variable sweep grid.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    /// Swept variable.
    pub variable: SweepVariable,
    /// First grid value (cm, eV, or s depending on `variable`).
    pub start: f64,
    /// Last grid value.
    pub stop: f64,
    /// Number of grid points (>= 1).
    pub points: usize,
    /// Geometric spacing instead of linear.
    #[serde(default)]
    pub log: bool,
}

/// Variable a sweep runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepVariable {
    /// Body temperature in eV (`force`, `friction`).
    #[serde(alias = "T_body")]
    TBody,
    /// Characteristic size in cm: needle segment lengths (both), shell or
    /// ball radius (`force`, `friction`).
    SizeA,
    /// Elapsed time in seconds (`friction` relaxation, `cool`).
    Time,
}

impl SweepVariable {
    /// Column label for output tables.
    pub fn label(self) -> &'static str {
        match self {
            SweepVariable::TBody => "t_body",
            SweepVariable::SizeA => "size_a",
            SweepVariable::Time => "time",
        }
    }
}

/// Cooling model selection; densities and Drude parameters come from the
/// gold preset.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoolingSpec {
    /// Radiator model variant.
    pub variant: CoolingVariant,
}

/// Cooling radiator variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoolingVariant {
    /// Lorenz-Lorentz dressed metal, slow T^5 scale.
    DebyeLorenzLorentz,
    /// Bare Drude volume radiator, fast scale.
    WeakSusceptibility,
}

/// Output destination and format.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    /// File path; stdout when absent.
    #[serde(default)]
    pub path: Option<String>,
    /// `csv` (default) or `json`.
    #[serde(default)]
    pub format: OutputFormat,
}

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    /// RFC-quoted CSV with a fixed, versioned column set.
    #[default]
    Csv,
    /// JSON document `{schema, columns, rows}` with rows as arrays.
    Json,
}

/// Scenario after validation: core types, eV units.
#[derive(Debug, Clone)]
pub struct Resolved {
    /// Geometry in natural units (lengths in 1/eV).
    pub geometry: BodyGeometry,
    /// Upper material.
    pub material_a: SusceptibilityModel,
    /// Lower material.
    pub material_b: SusceptibilityModel,
    /// True when `material_b` was the `"gold"` preset, which carries the
    /// tabulated mass and number densities the friction and cooling
    /// commands need.
    pub b_is_gold_preset: bool,
    /// Temperatures in eV.
    pub thermal: ThermalPair,
    /// Requested route.
    pub mode: ModeSpec,
    /// Optional sweep grid.
    pub sweep: Option<SweepSpec>,
    /// Cooling variant (defaults to the slow dressed-metal model).
    pub cooling: CoolingVariant,
    /// Output destination.
    pub output: OutputSpec,
}

/// Parse a scenario document, reporting line/column positions for JSON
/// errors and field paths for semantic ones.
pub fn parse(text: &str) -> Result<Resolved, SchemaError> {
    let file: ScenarioFile = serde_json::from_str(text).map_err(|e| {
        SchemaError(format!(
            "scenario does not match schema v{SCHEMA_VERSION} at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    resolve(&file)
}

/// Validate a parsed document and convert to core types.
pub fn resolve(file: &ScenarioFile) -> Result<Resolved, SchemaError> {
    if file.schema_version != SCHEMA_VERSION {
        return Err(SchemaError(format!(
            "schema_version: expected {SCHEMA_VERSION}, got {}",
            file.schema_version
        )));
    }
    let geometry = resolve_geometry(&file.geometry)?;
    let (material_a, _) = resolve_material(&file.material_a, "material_a")?;
    let (material_b, b_is_gold_preset) = resolve_material(&file.material_b, "material_b")?;
    let thermal = resolve_temperatures(&file.temperatures)?;
    if let Some(sweep) = &file.sweep {
        validate_sweep(sweep)?;
    }
    Ok(Resolved {
        geometry,
        material_a,
        material_b,
        b_is_gold_preset,
        thermal,
        mode: file.mode,
        sweep: file.sweep,
        cooling: file
            .cooling
            .map(|c| c.variant)
            .unwrap_or(CoolingVariant::DebyeLorenzLorentz),
        output: file.output.clone().unwrap_or(OutputSpec {
            path: None,
            format: OutputFormat::Csv,
        }),
    })
}

fn positive(value: f64, field: &str) -> Result<f64, SchemaError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(SchemaError(format!(
            "geometry.{field}: needs a positive finite value, got {value}"
        )))
    }
}

fn resolve_geometry(spec: &GeometrySpec) -> Result<BodyGeometry, SchemaError> {
    match *spec {
        GeometrySpec::Needle {
            length_a_cm,
            length_b_cm,
            radius_cm,
        } => Ok(BodyGeometry::Needle {
            length_a: positive(length_a_cm, "length_a_cm")? * CM,
            length_b: positive(length_b_cm, "length_b_cm")? * CM,
            radius: positive(radius_cm, "radius_cm")? * CM,
        }),
        GeometrySpec::SphericalShell {
            radius_cm,
            thickness_cm,
        } => Ok(BodyGeometry::SphericalShell {
            radius: positive(radius_cm, "radius_cm")? * CM,
            thickness: positive(thickness_cm, "thickness_cm")? * CM,
        }),
        GeometrySpec::JanusBall { radius_cm } => Ok(BodyGeometry::JanusBall {
            radius: positive(radius_cm, "radius_cm")? * CM,
        }),
        GeometrySpec::Plate {
            area_cm2,
            thickness_a_cm,
            thickness_b_cm,
        } => Ok(BodyGeometry::Plate {
            area: positive(area_cm2, "area_cm2")? * CM * CM,
            thickness_a: positive(thickness_a_cm, "thickness_a_cm")? * CM,
            thickness_b: positive(thickness_b_cm, "thickness_b_cm")? * CM,
        }),
    }
}

fn resolve_material(
    spec: &MaterialSpec,
    field: &str,
) -> Result<(SusceptibilityModel, bool), SchemaError> {
    match spec {
        MaterialSpec::Preset(name) => match name.as_str() {
            "gold" => Ok((materials::gold(), true)),
            "polystyrene" => Ok((materials::polystyrene(), false)),
            "blackbody_surface" => Ok((SusceptibilityModel::BlackbodySurface, false)),
            other => Err(SchemaError(format!(
                "{field}: unknown preset {other:?}; presets are \"gold\", \
                 \"polystyrene\", \"blackbody_surface\", or an inline object \
                 tagged by \"model\""
            ))),
        },
        MaterialSpec::Inline(model) => {
            let ok = match *model {
                SusceptibilityModel::Constant { chi } => chi.is_finite(),
                SusceptibilityModel::Drude { omega_p, nu } => omega_p > 0.0 && nu > 0.0,
                SusceptibilityModel::Lorentz {
                    omega_s,
                    omega0,
                    gamma,
                } => omega_s > 0.0 && omega0 > 0.0 && gamma > 0.0,
                SusceptibilityModel::BlackbodySurface => true,
            };
            if !ok {
                return Err(SchemaError(format!(
                    "{field}: model parameters must be positive finite numbers, got {model:?}"
                )));
            }
            Ok((*model, false))
        }
    }
}

fn one_of(
    kelvin: Option<f64>,
    ev: Option<f64>,
    side: &str,
) -> Result<f64, SchemaError> {
    let t = match (kelvin, ev) {
        (Some(k), None) => k * KELVIN_TO_EV,
        (None, Some(e)) => e,
        (None, None) => {
            return Err(SchemaError(format!(
                "temperatures: one of {side}_k or {side}_ev is required"
            )))
        }
        (Some(_), Some(_)) => {
            return Err(SchemaError(format!(
                "temperatures: give exactly one of {side}_k or {side}_ev, not both"
            )))
        }
    };
    if !t.is_finite() || t < 0.0 {
        return Err(SchemaError(format!(
            "temperatures: {side} temperature must be finite and >= 0, got {t} eV"
        )));
    }
    Ok(t)
}

fn resolve_temperatures(spec: &TemperatureSpec) -> Result<ThermalPair, SchemaError> {
    let t_env = one_of(spec.environment_k, spec.environment_ev, "environment")?;
    let t_body = one_of(spec.body_k, spec.body_ev, "body")?;
    if t_env == 0.0 && t_body == 0.0 {
        return Err(SchemaError(
            "temperatures: environment and body cannot both be zero".into(),
        ));
    }
    Ok(ThermalPair::new(t_env, t_body))
}

fn validate_sweep(sweep: &SweepSpec) -> Result<(), SchemaError> {
    if sweep.points == 0 {
        return Err(SchemaError("sweep.points: needs at least one point".into()));
    }
    if !(sweep.start.is_finite() && sweep.stop.is_finite()) {
        return Err(SchemaError(format!(
            "sweep: start and stop must be finite, got {} and {}",
            sweep.start, sweep.stop
        )));
    }
    if sweep.points >= 2 && sweep.start == sweep.stop {
        return Err(SchemaError(
            "sweep: start and stop must differ when points >= 2".into(),
        ));
    }
    if sweep.log && !(sweep.start > 0.0 && sweep.stop > 0.0) {
        return Err(SchemaError(
            "sweep: log spacing needs positive start and stop".into(),
        ));
    }
    let nonneg = match sweep.variable {
        SweepVariable::TBody => sweep.start >= 0.0 && sweep.stop >= 0.0,
        SweepVariable::SizeA => sweep.start > 0.0 && sweep.stop > 0.0,
        SweepVariable::Time => sweep.start >= 0.0 && sweep.stop >= 0.0,
    };
    if !nonneg {
        return Err(SchemaError(format!(
            "sweep: {} values must be {}",
            sweep.variable.label(),
            if sweep.variable == SweepVariable::SizeA {
                "positive"
            } else {
                "nonnegative"
            }
        )));
    }
    Ok(())
}

/// Grid values of a validated sweep, in declaration order.
pub fn sweep_values(sweep: &SweepSpec) -> Vec<f64> {
    if sweep.points == 1 {
        return vec![sweep.start];
    }
    let n = sweep.points;
    (0..n)
        .map(|k| {
            let f = k as f64 / (n - 1) as f64;
            if sweep.log {
                sweep.start * (sweep.stop / sweep.start).powf(f)
            } else {
                sweep.start + f * (sweep.stop - sweep.start)
            }
        })
        .collect()
}

/// Requested route resolved against a geometry, as a core [`EvalMode`].
///
/// `closed_form` picks the geometry's closed route; `cubature` is accepted
/// for the shell and the ball only.
pub fn eval_mode_for(
    geometry: &BodyGeometry,
    mode: ModeSpec,
) -> Result<EvalMode, SchemaError> {
    let err = |m: ModeSpec, g: &str| {
        Err(SchemaError(format!(
            "mode: {m:?} is not available for the {g} geometry"
        )))
    };
    match geometry {
        BodyGeometry::Needle { .. } | BodyGeometry::Plate { .. } => match mode {
            ModeSpec::ClosedForm => Ok(EvalMode::ClosedForm),
            other => err(
                other,
                if matches!(geometry, BodyGeometry::Needle { .. }) {
                    "needle"
                } else {
                    "plate"
                },
            ),
        },
        BodyGeometry::SphericalShell { .. } => match mode {
            ModeSpec::ClosedForm | ModeSpec::LargeUFit => Ok(EvalMode::LargeUFit),
            ModeSpec::Cubature => Ok(EvalMode::Cubature),
            other => err(other, "spherical_shell"),
        },
        BodyGeometry::JanusBall { .. } => match mode {
            ModeSpec::ClosedForm | ModeSpec::SmallUFit => Ok(EvalMode::SmallUFit),
            ModeSpec::LargeUFit => Ok(EvalMode::LargeUFit),
            ModeSpec::Cubature => Ok(EvalMode::Cubature),
        },
    }
}

/// Short geometry label for output rows.
pub fn geometry_label(geometry: &BodyGeometry) -> &'static str {
    match geometry {
        BodyGeometry::Needle { .. } => "needle",
        BodyGeometry::SphericalShell { .. } => "spherical_shell",
        BodyGeometry::JanusBall { .. } => "janus_ball",
        BodyGeometry::Plate { .. } => "plate",
    }
}

/// Characteristic size of a geometry in cm: needle segment length (A side),
/// shell or ball radius, upper film thickness.
pub fn size_a_cm(geometry: &BodyGeometry) -> f64 {
    let natural = match geometry {
        BodyGeometry::Needle { length_a, .. } => *length_a,
        BodyGeometry::SphericalShell { radius, .. } => *radius,
        BodyGeometry::JanusBall { radius } => *radius,
        BodyGeometry::Plate { thickness_a, .. } => *thickness_a,
    };
    natural / CM
}

/// Geometry with the swept size applied: both needle segment lengths, or
/// the shell/ball radius. The plate has no single size and is rejected.
pub fn with_size_a(geometry: &BodyGeometry, size_cm: f64) -> Result<BodyGeometry, SchemaError> {
    let size = size_cm * CM;
    match *geometry {
        BodyGeometry::Needle { radius, .. } => Ok(BodyGeometry::Needle {
            length_a: size,
            length_b: size,
            radius,
        }),
        BodyGeometry::SphericalShell { thickness, .. } => Ok(BodyGeometry::SphericalShell {
            radius: size,
            thickness,
        }),
        BodyGeometry::JanusBall { .. } => Ok(BodyGeometry::JanusBall { radius: size }),
        BodyGeometry::Plate { .. } => Err(SchemaError(
            "sweep: size_a is not defined for the plate geometry".into(),
        )),
    }
}
