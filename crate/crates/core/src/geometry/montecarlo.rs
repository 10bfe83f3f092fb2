//! Monte Carlo evaluation of the generic pair integral.
//!
//! For body shapes without a reduced form, `I_AB` is estimated by uniform
//! volume sampling of the kernel `(omega^8/16 pi^2) (z - z') V(omega R)`.
//! Sampling is batched; the spread of batch means gives the standard error
//! reported in the result. A fixed seed makes every estimate reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::v_kernel;
use crate::quad::compensated_sum;

use super::{EvalMode, IabResult};

/// Axisymmetric sampling region for one material half.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SampleRegion {
    /// Right circular cylinder on the z axis spanning `z_min < z < z_max`.
    Cylinder {
        /// Cross-section radius.
        radius: f64,
        /// Lower z bound.
        z_min: f64,
        /// Upper z bound.
        z_max: f64,
    },
    /// Half ball of the given radius: upper half `0 < z < radius` or lower
    /// half `-radius < z < 0`.
    HalfBall {
        /// Ball radius.
        radius: f64,
        /// Upper (+z) or lower (-z) half.
        upper: bool,
    },
}

impl SampleRegion {
    /// Region volume.
    pub fn volume(&self) -> f64 {
        match *self {
            SampleRegion::Cylinder {
                radius,
                z_min,
                z_max,
            } => std::f64::consts::PI * radius * radius * (z_max - z_min),
            SampleRegion::HalfBall { radius, .. } => {
                2.0 / 3.0 * std::f64::consts::PI * radius.powi(3)
            }
        }
    }

    fn z_range(&self) -> (f64, f64) {
        match *self {
            SampleRegion::Cylinder { z_min, z_max, .. } => (z_min, z_max),
            SampleRegion::HalfBall { radius, upper } => {
                if upper {
                    (0.0, radius)
                } else {
                    (-radius, 0.0)
                }
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            SampleRegion::Cylinder {
                radius,
                z_min,
                z_max,
            } => radius > 0.0 && z_max > z_min,
            SampleRegion::HalfBall { radius, .. } => radius > 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "degenerate sampling region {self:?}"
            )))
        }
    }

    /// Largest |z| extent, used for the `omega * a` bookkeeping.
    fn extent(&self) -> f64 {
        let (lo, hi) = self.z_range();
        lo.abs().max(hi.abs())
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> [f64; 3] {
        match *self {
            SampleRegion::Cylinder {
                radius,
                z_min,
                z_max,
            } => {
                let z = rng.gen_range(z_min..z_max);
                let rho = radius * rng.gen_range(0.0..1.0f64).sqrt();
                let phi = rng.gen_range(0.0..std::f64::consts::TAU);
                [rho * phi.cos(), rho * phi.sin(), z]
            }
            SampleRegion::HalfBall { radius, upper } => {
                let r = radius * rng.gen_range(0.0..1.0f64).cbrt();
                let cos_t = rng.gen_range(0.0..1.0f64);
                let sin_t = (1.0 - cos_t * cos_t).sqrt();
                let phi = rng.gen_range(0.0..std::f64::consts::TAU);
                let z = if upper { r * cos_t } else { -r * cos_t };
                [r * sin_t * phi.cos(), r * sin_t * phi.sin(), z]
            }
        }
    }
}

/// Monte Carlo sampling parameters.
#[derive(Debug, Clone, Copy)]
pub struct MonteCarloSettings {
    /// Total number of point pairs.
    pub samples: u64,
    /// Number of batches (>= 2) used for the standard-error estimate.
    pub batches: u32,
    /// RNG seed; identical settings and seed give identical results.
    pub seed: u64,
}

impl Default for MonteCarloSettings {
    fn default() -> Self {
        Self {
            samples: 1_000_000,
            batches: 16,
            seed: 0,
        }
    }
}

/// Monte Carlo estimate of the pair integral between two sampling regions.
///
/// Identical regions give exactly zero (the integrand is antisymmetric under
/// exchange of the two points). Distinct regions whose open z ranges overlap
/// are rejected: the bodies would interpenetrate.
pub fn i_ab_generic(
    omega: f64,
    region_a: &SampleRegion,
    region_b: &SampleRegion,
    settings: &MonteCarloSettings,
) -> Result<IabResult> {
    if !(omega > 0.0) {
        return Err(Error::domain(format!(
            "pair integral needs omega > 0, got {omega}"
        )));
    }
    region_a.validate()?;
    region_b.validate()?;
    if settings.batches < 2 || settings.samples < u64::from(settings.batches) {
        return Err(Error::InvalidInput(format!(
            "need >= 2 batches and >= 1 sample per batch, got {settings:?}"
        )));
    }
    let omega_a = omega * (region_a.extent() + region_b.extent());
    if region_a == region_b {
        // Antisymmetric integrand over a symmetric domain: exactly zero.
        return Ok(IabResult {
            value: 0.0,
            mode: EvalMode::MonteCarlo,
            error_estimate: 0.0,
            omega_a,
        });
    }
    let (a_lo, a_hi) = region_a.z_range();
    let (b_lo, b_hi) = region_b.z_range();
    if a_lo < b_hi && b_lo < a_hi {
        return Err(Error::InvalidInput(format!(
            "sampling regions overlap in z: ({a_lo}, {a_hi}) vs ({b_lo}, {b_hi})"
        )));
    }

    let per_batch = settings.samples / u64::from(settings.batches);
    let norm = region_a.volume() * region_b.volume() * omega.powi(8)
        / (16.0 * std::f64::consts::PI.powi(2));
    let batch_means: Vec<f64> = (0..settings.batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(
                settings.seed ^ (u64::from(b).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
            );
            let mut acc = crate::quad::NeumaierSum::new();
            for _ in 0..per_batch {
                let ra = region_a.sample(&mut rng);
                let rb = region_b.sample(&mut rng);
                let dx = ra[0] - rb[0];
                let dy = ra[1] - rb[1];
                let dz = ra[2] - rb[2];
                let dist = (dx * dx + dy * dy + dz * dz).sqrt();
                acc.add(dz * v_kernel(omega * dist));
            }
            acc.total() / per_batch as f64
        })
        .collect();

    let mean = compensated_sum(batch_means.iter().copied()) / batch_means.len() as f64;
    let var = compensated_sum(batch_means.iter().map(|m| (m - mean) * (m - mean)))
        / (batch_means.len() as f64 - 1.0);
    let stderr = (var / batch_means.len() as f64).sqrt();
    Ok(IabResult {
        value: norm * mean,
        mode: EvalMode::MonteCarlo,
        error_estimate: norm * stderr,
        omega_a,
    })
}
