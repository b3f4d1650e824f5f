//! Unconstrained conjugate pairs for the continuous-time dynamics.
//!
//! These use the `+<zeta, x>` convention: `V(x) = sup_zeta { <zeta, x> - W(zeta) }`,
//! the dual accumulator integrates negated gradients, and the primal readout
//! is `+grad W(zeta)`. See [`crate::geometry::MirrorMap`] for the constrained
//! convention and how the two relate.

/// An unconstrained pair (dual potential `W`, primal potential `V`) with
/// `W(0) = 0`, `grad W(0) = 0`, `V(0) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugatePair {
    /// `W(zeta) = |zeta|^2 / 2`; the mirror map is the identity and the
    /// dynamics reduce to gradient flow / heavy ball.
    Identity,
    /// `W(zeta) = sum_i (cosh zeta_i - 1)`, a coordinate-wise smooth pair
    /// with non-linear mirror map `sinh`.
    CoshSum,
}

impl ConjugatePair {
    /// The dual potential `W`.
    pub fn dual_value(&self, zeta: &[f64]) -> f64 {
        match self {
            ConjugatePair::Identity => 0.5 * zeta.iter().map(|z| z * z).sum::<f64>(),
            ConjugatePair::CoshSum => zeta.iter().map(|z| z.cosh() - 1.0).sum(),
        }
    }

    /// Gradient of the dual potential; this is the primal readout of the
    /// continuous dynamics.
    pub fn dual_grad(&self, zeta: &[f64]) -> Vec<f64> {
        match self {
            ConjugatePair::Identity => zeta.to_vec(),
            ConjugatePair::CoshSum => zeta.iter().map(|z| z.sinh()).collect(),
        }
    }

    /// The primal potential `V`, the Fenchel conjugate of `W`.
    pub fn primal_value(&self, x: &[f64]) -> f64 {
        match self {
            ConjugatePair::Identity => 0.5 * x.iter().map(|v| v * v).sum::<f64>(),
            ConjugatePair::CoshSum => x
                .iter()
                .map(|&v| v * v.asinh() - (1.0 + v * v).sqrt() + 1.0)
                .sum(),
        }
    }
}
