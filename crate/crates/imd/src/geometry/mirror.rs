//! Constrained mirror maps: the Fenchel conjugate of `beta * V` over a
//! feasible set, and its gradient.
//!
//! For a prox function `V` on a set `X`, the conjugate used by the discrete
//! algorithm is
//!
//! ```text
//! W_beta(zeta) = sup_{x in X} { -<zeta, x> - beta * V(x) }
//! ```
//!
//! with the minus sign on the linear term, so that a dual accumulator that
//! sums raw subgradients maps back to the primal through `-grad W_beta`,
//! which is always a point of `X`. The unconstrained pairs in
//! [`crate::geometry::ConjugatePair`] use the opposite sign (`+<zeta, x>`)
//! with the accumulator summing negated gradients; the two conventions are
//! related by `zeta <-> -zeta` and are deliberately kept in separate types.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::geometry::norms::NormPair;
use crate::geometry::prox::{ProxFunction, ProxKind};
use crate::geometry::set::FeasibleSet;
use crate::vecmath::dot;

/// A feasible set, a prox function on it, and the paired norms. Immutable
/// after construction and shareable across concurrent runs.
#[derive(Debug, Clone, PartialEq)]
pub struct MirrorMap {
    set: FeasibleSet,
    prox: ProxFunction,
    norms: NormPair,
}

impl MirrorMap {
    /// Entropic prox on the probability simplex under the (l1, l-inf) pair.
    pub fn entropic_simplex(dim: usize) -> Self {
        MirrorMap {
            set: FeasibleSet::simplex(dim),
            prox: ProxFunction::entropic(),
            norms: NormPair::L1Linf,
        }
    }

    /// Half squared distance to the box midpoint under the (l2, l2) pair.
    pub fn euclidean_box(lower: Vec<f64>, upper: Vec<f64>) -> Self {
        let center: Vec<f64> = lower
            .iter()
            .zip(&upper)
            .map(|(l, u)| 0.5 * (l + u))
            .collect();
        MirrorMap {
            set: FeasibleSet::hyper_box(lower, upper),
            prox: ProxFunction::euclidean(center),
            norms: NormPair::L2L2,
        }
    }

    /// Half squared distance to the ball center under the (l2, l2) pair.
    pub fn euclidean_ball(center: Vec<f64>, radius: f64) -> Self {
        MirrorMap {
            set: FeasibleSet::ball(center.clone(), radius),
            prox: ProxFunction::euclidean(center),
            norms: NormPair::L2L2,
        }
    }

    pub fn set(&self) -> &FeasibleSet {
        &self.set
    }

    pub fn prox(&self) -> &ProxFunction {
        &self.prox
    }

    pub fn norms(&self) -> &NormPair {
        &self.norms
    }

    pub fn dim(&self) -> usize {
        self.set.dim()
    }

    /// Strong-convexity parameter of the prox function.
    pub fn alpha(&self) -> f64 {
        self.prox.alpha()
    }

    /// Prox value at a point, after a feasibility check.
    pub fn prox_value(&self, x: &[f64]) -> Result<f64> {
        let violation = self.set.violation(x);
        if violation > crate::geometry::FEASIBILITY_TOL {
            return Err(Error::InfeasiblePoint { violation });
        }
        Ok(self.prox.value(x))
    }

    /// Maximum of the prox function over the set.
    ///
    /// Entropic on the simplex peaks at a vertex (`ln n`); the Euclidean
    /// half-square peaks at the farthest corner of the box or on the ball
    /// rim.
    pub fn prox_max(&self) -> f64 {
        match (&self.set, self.prox.kind()) {
            (FeasibleSet::Simplex { dim }, ProxKind::Entropic) => (*dim as f64).ln(),
            (FeasibleSet::Box { lower, upper }, ProxKind::EuclideanHalfSq { center }) => {
                0.5 * lower
                    .iter()
                    .zip(upper)
                    .zip(center)
                    .map(|((&l, &u), &c)| (c - l).max(u - c).powi(2))
                    .sum::<f64>()
            }
            (FeasibleSet::Ball { center, radius }, ProxKind::EuclideanHalfSq { center: c }) => {
                let shift: Vec<f64> = center.iter().zip(c).map(|(a, b)| a - b).collect();
                0.5 * (crate::vecmath::l2(&shift) + radius).powi(2)
            }
            _ => unreachable!("constructors pair sets and prox kinds"),
        }
    }

    /// The conjugate value `sup_{x in X} { -<zeta, x> - beta * V(x) }`.
    pub fn conjugate(&self, beta: f64, zeta: &[f64]) -> Result<f64> {
        check_beta(beta)?;
        assert_eq!(zeta.len(), self.dim());
        match self.prox.kind() {
            ProxKind::Entropic => {
                // beta * logsumexp(-zeta/beta) - beta ln n, max-shifted.
                let n = zeta.len() as f64;
                let scaled: Vec<f64> = zeta.iter().map(|z| -z / beta).collect();
                let m = scaled.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
                let sum: f64 = scaled.iter().map(|s| (s - m).exp()).sum();
                Ok(beta * (m + sum.ln()) - beta * n.ln())
            }
            ProxKind::EuclideanHalfSq { .. } => {
                let p = self.primal_point(beta, zeta)?;
                Ok(-dot(zeta, &p) - beta * self.prox.value(&p))
            }
        }
    }

    /// Gradient of [`MirrorMap::conjugate`] with respect to `zeta`.
    ///
    /// Equal to minus the maximizer, so `-conjugate_grad` is feasible; use
    /// [`MirrorMap::primal_point`] when the maximizer itself is wanted.
    pub fn conjugate_grad(&self, beta: f64, zeta: &[f64]) -> Result<Vec<f64>> {
        Ok(self.primal_point(beta, zeta)?.iter().map(|v| -v).collect())
    }

    /// The maximizer of the conjugate problem: softmax of `-zeta/beta` for
    /// the entropic map, projection of `center - zeta/beta` for the
    /// Euclidean map. Always a point of the feasible set.
    pub fn primal_point(&self, beta: f64, zeta: &[f64]) -> Result<Vec<f64>> {
        check_beta(beta)?;
        assert_eq!(zeta.len(), self.dim());
        match self.prox.kind() {
            ProxKind::Entropic => {
                let scaled: Vec<f64> = zeta.iter().map(|z| -z / beta).collect();
                let m = scaled.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
                let exps: Vec<f64> = scaled.iter().map(|s| (s - m).exp()).collect();
                let total: f64 = exps.iter().sum();
                Ok(exps.iter().map(|e| e / total).collect())
            }
            ProxKind::EuclideanHalfSq { center } => {
                let target: Vec<f64> = center.iter().zip(zeta).map(|(c, z)| c - z / beta).collect();
                Ok(self.set.project(&target))
            }
        }
    }

    /// Difference quotient of `conjugate_grad` between two dual points:
    /// `primal_norm(grad difference) / dual_norm(zeta difference)`.
    /// `None` for a degenerate pair (identical `zeta`).
    pub fn lipschitz_ratio(
        &self,
        beta: f64,
        zeta_a: &[f64],
        zeta_b: &[f64],
    ) -> Result<Option<f64>> {
        let dz: Vec<f64> = zeta_a.iter().zip(zeta_b).map(|(x, y)| x - y).collect();
        let den = self.norms.dual(&dz);
        if den == 0.0 {
            check_beta(beta)?;
            return Ok(None);
        }
        let ga = self.conjugate_grad(beta, zeta_a)?;
        let gb = self.conjugate_grad(beta, zeta_b)?;
        let dg: Vec<f64> = ga.iter().zip(&gb).map(|(x, y)| x - y).collect();
        Ok(Some(self.norms.primal(&dg) / den))
    }

    /// Empirically probe the Lipschitz constant of `conjugate_grad`:
    /// the max of [`MirrorMap::lipschitz_ratio`] over sampled Gaussian
    /// pairs. Degenerate pairs leave the maximum unchanged.
    pub fn lipschitz_probe(&self, beta: f64, pair_count: usize, seed: u64) -> Result<f64> {
        check_beta(beta)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.dim();
        let mut worst = 0.0_f64;
        for _ in 0..pair_count {
            let a: Vec<f64> = (0..n)
                .map(|_| rng.sample::<f64, _>(StandardNormal))
                .collect();
            let b: Vec<f64> = (0..n)
                .map(|_| rng.sample::<f64, _>(StandardNormal))
                .collect();
            if let Some(ratio) = self.lipschitz_ratio(beta, &a, &b)? {
                worst = worst.max(ratio);
            }
        }
        Ok(worst)
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 {
        Ok(())
    } else {
        Err(Error::NonpositiveBeta(beta))
    }
}
