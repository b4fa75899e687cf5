//! Guaranteed energy-error bounds for elliptic variational inequalities.
//!
//! The crate evaluates a duality-gap error measure for pairs of admissible
//! fields: a kinematically admissible displacement (feasible for the
//! unilateral/bilateral constraints) and a statically admissible flux or
//! stress (equilibrated with the loads, with boundary tractions inside the
//! admissible cones). The gap is nonnegative, vanishes exactly when the
//! constitutive relation holds, and bounds the global energy error of the
//! displacement from above. Concrete instantiations cover the scalar
//! obstacle problem (1D/2D), Poisson problems, and 2D linear elasticity
//! with Tresca friction on a bilateral contact boundary.
//!
//! Pipeline: build a mesh ([`mesh`]), assemble the discrete system
//! ([`system`]), solve the variational inequality ([`solver`]), post-process
//! into certified admissible pairs ([`admissible`]), and evaluate the bound
//! ([`estimator`]). The [`harness`] module runs refinement studies from
//! plain-text configs and writes machine-readable reports; `gcre` is the
//! CLI front end.

pub mod admissible;
pub mod conjugate;
pub mod error;
pub mod estimator;
pub mod expr;
pub mod field;
pub mod harness;
pub mod mesh;
pub mod reference;
pub mod solver;
pub mod sparse;
pub mod system;

pub use error::{Error, Result};
