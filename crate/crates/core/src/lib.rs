//! Quantum-vacuum self-propulsion numerics for two-material bodies out of
//! thermal equilibrium.
//!
//! A body assembled from two homogeneous halves (a dielectric half `A` and a
//! metallic half `B`) immersed in a thermal vacuum at a temperature different
//! from its own experiences a net self-force along its symmetry axis. This
//! crate evaluates that force for four body shapes (needle, thin spherical
//! shell, Janus ball, thin double plate), the velocity-linear quantum friction
//! that opposes it, and the thermal-relaxation dynamics that determine the
//! terminal velocity reached while the body cools.
//!
//! Everything is computed in natural units (`hbar = c = k_B = 1`) with
//! energies in eV; see [`units`] for the conversion constants. The geometry
//! convention throughout: the `A` half sits on the positive-z side, the `B`
//! (metal) half on the negative-z side, and a negative axial force means the
//! body is pushed toward its metal half.
//!
//! Module layout, bottom up:
//! - [`units`]: unit system and conversions,
//! - [`error`]: error type shared by fallible numerical routines,
//! - [`specfun`]: sine integral, digamma, Bose factors, thermal moments,
//! - [`kernel`]: the vacuum radiation kernel and its stable branches,
//! - [`quad`]: deterministic one-dimensional panel quadrature,
//! - [`cubature`]: deterministic tensor-product cubature with convergence
//!   control,
//! - [`materials`]: susceptibility models and material presets,
//! - [`geometry`]: the shape integral `I_AB` for each body,
//! - [`forces`]: assembled propulsive forces, closed-form and spectral,
//! - [`dynamics`]: friction, cooling trajectories, terminal velocities,
//! - [`validation`]: independent cross-checks (momentum-space friction,
//!   far-field flux, mirror screen).

pub mod cubature;
pub mod dynamics;
pub mod error;
pub mod forces;
pub mod geometry;
pub mod kernel;
pub mod materials;
pub mod quad;
pub mod specfun;
pub mod units;
pub mod validation;

pub use error::{Error, Result};
