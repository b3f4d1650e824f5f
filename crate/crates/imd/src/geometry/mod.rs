//! Feasible sets, norm pairs, prox functions, and the two conjugate
//! constructions (constrained mirror maps and unconstrained pairs).

mod conjugate;
mod mirror;
mod norms;
mod prox;
mod set;

pub use conjugate::ConjugatePair;
pub use mirror::MirrorMap;
pub use norms::NormPair;
pub use prox::{ProxFunction, ProxKind};
pub use set::{FeasibleSet, FEASIBILITY_TOL};
