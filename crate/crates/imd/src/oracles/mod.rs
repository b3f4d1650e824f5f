//! First-order information sources: deterministic problems with exact
//! gradients, and stochastic problems with seeded subgradient streams.

mod deterministic;
mod probes;
mod stochastic;

pub use deterministic::DeterministicProblem;
pub use probes::{second_moment_probe, unbiasedness_probe};
pub use stochastic::{LossKind, StochasticProblem, SubgradientStream};
