//! Inertial mirror descent for convex optimization.
//!
//! The method couples a dual accumulator of (sub)gradients with a primal
//! iterate that relaxes toward the mirror point at a rate set by a growing
//! inertia coefficient. In continuous time the gap decays like `V(x*)/t`;
//! the discrete stochastic version achieves an `O(1/sqrt(t))` expected-gap
//! bound on the last iterate, without extra averaging.
//!
//! The crate ships:
//!
//! - [`geometry`]: feasible sets, norm pairs, prox functions, constrained
//!   mirror maps with closed-form gradients, and unconstrained conjugate
//!   pairs for the continuous dynamics;
//! - [`oracles`]: deterministic problems and seeded stochastic subgradient
//!   streams with exact second-moment constants;
//! - [`discrete`]: the inertial recursion, classic baselines, and the
//!   closed-form expected-gap bounds;
//! - [`continuous`]: a fixed-step fourth-order integrator for the dynamics
//!   plus trajectory certificates (Lyapunov descent, gap bound, heavy-ball
//!   residual);
//! - [`harness`]: experiment configs, seeded replications, CSV reports, and
//!   property-check suites, also exposed through the `imd` binary.
//!
//! See the `examples/` directory for runnable entry points, one per major
//! capability.

pub mod continuous;
pub mod discrete;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod oracles;
mod vecmath;

pub use error::{Error, Result};
