//! Reduced-order modeling toolkit for incompressible flow with an
//! eddy-viscosity closure learned from data.
//!
//! The pipeline has two phases. Offline: a bundled finite-volume solver
//! generates parametrized snapshot campaigns of velocity, pressure and eddy
//! viscosity; the snapshots are compressed into orthonormal modes; the
//! reduced operators and boundary/force matrices are assembled by Galerkin
//! projection; and radial-basis-function interpolants are trained for the
//! eddy-viscosity coefficients. Online: a small nonlinear system is solved
//! per parameter value (steady) or marched in time (unsteady), and full
//! fields, forces and error metrics are reconstructed on demand.

pub mod error;
pub mod linalg;
pub mod parallel;
pub mod sparse;

pub mod grid;

pub use error::{Error, Result};
