//! Primal/dual norm pairs.

use crate::vecmath::l2;

/// A pair of norms (primal on iterates, dual on subgradient accumulators).
///
/// The two shipped pairs match the two shipped geometries: `L2L2` for
/// Euclidean prox functions on boxes and balls, `L1Linf` for the entropic
/// prox function on the simplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormPair {
    /// Primal l2, dual l2 (self-dual).
    L2L2,
    /// Primal l1, dual l-infinity.
    L1Linf,
}

impl NormPair {
    /// Norm used for primal points.
    pub fn primal(&self, v: &[f64]) -> f64 {
        match self {
            NormPair::L2L2 => l2(v),
            NormPair::L1Linf => v.iter().map(|a| a.abs()).sum(),
        }
    }

    /// Norm used for dual vectors (subgradients and their sums).
    pub fn dual(&self, v: &[f64]) -> f64 {
        match self {
            NormPair::L2L2 => l2(v),
            NormPair::L1Linf => v.iter().fold(0.0_f64, |m, a| m.max(a.abs())),
        }
    }
}
