//! Relativistic dynamical inversion: recover the electromagnetic
//! four-potential that drives a prescribed Dirac spinor field.
//!
//! Instead of solving the Dirac equation forward from a potential, this
//! library runs it backwards: given a parametrized state Ψ(t,x,y,z), the
//! matrix form of the equation is solved for the potential pointwise.
//! Hermiticity of the result decides whether the prescribed dynamics is
//! reachable by electromagnetic fields at all; when it is, the exact E and
//! B fields, the Maxwell source current and physicality estimates follow
//! from automatic differentiation of the same construction.
//!
//! Modules:
//! - [`aps`]: 2×2-matrix Clifford algebra (paravectors, boosts, rotors).
//! - [`jets`]: forward-mode derivatives over (ct, x, y, z).
//! - [`states`]: scenario builders and expression-defined states.
//! - [`engine`]: inversion, Hermiticity gate, fields, currents, residuals.
//! - [`catalog`]: independent closed-form reference solutions.
//! - [`physicality`]: radiative-loss and superluminal admissibility checks.
//! - [`dsl`]: the expression language embedded in configuration files.

pub mod aps;
pub mod catalog;
pub mod constants;
pub mod dsl;
pub mod engine;
pub mod error;
pub mod jets;
pub mod physicality;
pub mod states;

pub use constants::PhysicalConstants;
pub use error::{CoreError, Result};
