//! A one-dimensional reaction-diffusion front laboratory.
//!
//! `frontlab` implements the ingredients needed to study front propagation
//! for the semilinear equation `u_t = u_xx + f(x,u)` when the reaction `f`
//! is a compactly supported monostable perturbation of a homogeneous
//! ignition reaction:
//!
//! * [`reactions`] — ignition nonlinearities, square-well perturbations and
//!   hypothesis validation,
//! * [`spectral`] — principal eigenpairs of `∂xx + q(x)` on the (truncated)
//!   line and on intervals with Dirichlet conditions,
//! * [`traveling_front`] — spreading speed and front profile by phase-plane
//!   shooting,
//! * [`pde`] — IMEX Crank–Nicolson time stepping with front diagnostics,
//! * [`comparison`] — explicit super/sub-solution candidates and residual
//!   certification,
//! * [`harness`] — end-to-end experiment orchestration (regime
//!   classification, front and bump pipelines, parameter sweeps).
//!
//! The crate is data-parallel by default (`parallel` feature, backed by
//! rayon); disabling the feature falls back to equivalent sequential loops.

pub mod comparison;
pub mod error;
pub mod exec;
pub mod harness;
pub mod math;
pub mod pde;
pub mod reactions;
pub mod spectral;
pub mod traveling_front;

pub use error::Error;
