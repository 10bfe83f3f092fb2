//! Material response models.
//!
//! Bodies are dilute two-material composites; each half is described by a
//! local electric susceptibility chi(omega). Three concrete models cover the
//! cases treated here (constant dielectric, Drude metal, Lorentz oscillator)
//! plus an idealized perfectly absorbing surface used for thin plates, where
//! only the thickness-weighted absorption `t * Im chi = 1/(4 omega)` is
//! defined.
//!
//! All frequencies are in eV (hbar = c = k_B = 1); lengths in 1/eV.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units;

/// Plasma frequency of gold, eV.
pub const GOLD_OMEGA_P: f64 = 9.0;
/// Drude dissipation rate of gold, eV.
pub const GOLD_NU: f64 = 0.035;
/// Mass density of gold, g/cm^3.
pub const GOLD_DENSITY_G_CM3: f64 = 19.3;
/// Molar mass of gold, g/mol.
pub const GOLD_MOLAR_MASS_G: f64 = 196.966_57;
/// Avogadro constant, 1/mol.
pub const N_AVOGADRO: f64 = 6.022_140_76e23;
/// Lorentz resonance of polystyrene, eV.
pub const POLYSTYRENE_OMEGA0: f64 = 6.0;
/// Lorentz damping of polystyrene, eV.
pub const POLYSTYRENE_GAMMA: f64 = 0.65;
/// Static susceptibility assigned to the polystyrene preset.
pub const POLYSTYRENE_CHI_STATIC: f64 = 1.5;

/// Local susceptibility model for one material half.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum SusceptibilityModel {
    /// Frequency-independent real susceptibility (transparent dielectric).
    Constant {
        /// Static susceptibility chi.
        chi: f64,
    },
    /// Drude metal: chi(w) = -omega_p^2 / (w^2 + i nu w).
    Drude {
        /// Plasma frequency, eV.
        omega_p: f64,
        /// Dissipation rate, eV.
        nu: f64,
    },
    /// Lorentz oscillator: chi(w) = omega_s^2 / (omega0^2 - w^2 - i gamma w).
    Lorentz {
        /// Oscillator strength (plasma-like scale), eV.
        omega_s: f64,
        /// Resonance frequency, eV.
        omega0: f64,
        /// Damping rate, eV.
        gamma: f64,
    },
    /// Perfectly absorbing surface: only t * Im chi = 1/(4 w) is defined, so
    /// point-wise evaluation is unsupported.
    BlackbodySurface,
}

impl SusceptibilityModel {
    /// True when the model carries a finite bulk susceptibility.
    pub fn is_bulk(&self) -> bool {
        !matches!(self, SusceptibilityModel::BlackbodySurface)
    }
}

/// Gold as a Drude metal.
pub fn gold() -> SusceptibilityModel {
    SusceptibilityModel::Drude {
        omega_p: GOLD_OMEGA_P,
        nu: GOLD_NU,
    }
}

/// Polystyrene as a single Lorentz oscillator with chi(0) = 1.5.
pub fn polystyrene() -> SusceptibilityModel {
    SusceptibilityModel::Lorentz {
        omega_s: POLYSTYRENE_OMEGA0 * POLYSTYRENE_CHI_STATIC.sqrt(),
        omega0: POLYSTYRENE_OMEGA0,
        gamma: POLYSTYRENE_GAMMA,
    }
}

/// Complex susceptibility at frequency `omega` (eV, > 0).
///
/// All models are passive: Im chi >= 0 for omega > 0.
pub fn eval_chi(model: &SusceptibilityModel, omega: f64) -> Result<Complex64> {
    if !(omega > 0.0) {
        return Err(Error::domain(format!(
            "susceptibility requested at non-positive frequency {omega}"
        )));
    }
    match *model {
        SusceptibilityModel::Constant { chi } => Ok(Complex64::new(chi, 0.0)),
        SusceptibilityModel::Drude { omega_p, nu } => {
            if omega_p <= 0.0 || nu <= 0.0 {
                return Err(Error::domain(format!(
                    "Drude parameters must be positive (omega_p={omega_p}, nu={nu})"
                )));
            }
            // -omega_p^2 / (w (w + i nu))
            let denom = omega * Complex64::new(omega, nu);
            Ok(-omega_p * omega_p / denom)
        }
        SusceptibilityModel::Lorentz {
            omega_s,
            omega0,
            gamma,
        } => {
            if omega_s <= 0.0 || omega0 <= 0.0 || gamma <= 0.0 {
                return Err(Error::domain(format!(
                    "Lorentz parameters must be positive (omega_s={omega_s}, omega0={omega0}, gamma={gamma})"
                )));
            }
            let denom = Complex64::new(omega0 * omega0 - omega * omega, -gamma * omega);
            Ok(omega_s * omega_s / denom)
        }
        SusceptibilityModel::BlackbodySurface => Err(Error::UnsupportedVariant(
            "blackbody surface has no point-wise susceptibility; only the product \
             thickness * Im chi = 1/(4 omega) is defined (used by the plate force)"
                .into(),
        )),
    }
}

/// Cross response density X_AB = Im chi_A Re chi_B - Re chi_A Im chi_B.
///
/// Antisymmetric under exchange of the two materials; this is the quantity
/// whose sign fixes the direction of the self-propulsive force.
pub fn x_ab(
    model_a: &SusceptibilityModel,
    model_b: &SusceptibilityModel,
    omega: f64,
) -> Result<f64> {
    let chi_a = eval_chi(model_a, omega)?;
    let chi_b = eval_chi(model_b, omega)?;
    Ok(chi_a.im * chi_b.re - chi_a.re * chi_b.im)
}

/// Skin depth of a Drude metal: delta = sqrt(2 (w^2 + nu^2) / (w omega_p^2 nu)).
///
/// Minimal at w = nu where delta = 2 / omega_p; grows as
/// sqrt(2 w / (omega_p^2 nu)) at high frequency.
pub fn skin_depth(model: &SusceptibilityModel, omega: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::domain(format!(
            "skin depth requested at non-positive frequency {omega}"
        )));
    }
    match *model {
        SusceptibilityModel::Drude { omega_p, nu } => {
            if omega_p <= 0.0 || nu <= 0.0 {
                return Err(Error::domain(format!(
                    "Drude parameters must be positive (omega_p={omega_p}, nu={nu})"
                )));
            }
            Ok((2.0 * (omega * omega + nu * nu) / (omega * omega_p * omega_p * nu)).sqrt())
        }
        _ => Err(Error::UnsupportedVariant(
            "skin depth is defined for the Drude model only".into(),
        )),
    }
}

/// Gold mass density in eV^4.
pub fn gold_density_ev4() -> f64 {
    units::density_g_cm3_to_ev4(GOLD_DENSITY_G_CM3)
}

/// Gold atomic number density in eV^3.
pub fn gold_number_density_ev3() -> f64 {
    units::number_density_cm3_to_ev3(GOLD_DENSITY_G_CM3 / GOLD_MOLAR_MASS_G * N_AVOGADRO)
}

/// Mass of one gold atom in eV.
pub fn gold_atom_mass_ev() -> f64 {
    GOLD_MOLAR_MASS_G / N_AVOGADRO * units::G_TO_EV
}
