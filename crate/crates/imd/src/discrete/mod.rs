//! The discrete inertial recursion and its baselines.
//!
//! The state follows three coupled updates: a step-weight accumulator
//! `tau_t`, a dual accumulator `zeta_t` summing weighted subgradients, and a
//! primal iterate `x_t` pulled toward the mirror point `-grad W_beta(zeta_t)`
//! by a vanishing fraction. The reported estimate is always the last iterate
//! itself; the state carries no separate running average.

mod baselines;
mod bounds;
mod schedule;

pub use baselines::{run_algorithm, Algorithm, CheckpointSample};
pub use bounds::{gap_bound, tuned_beta0, BoundParams};
pub use schedule::Schedule;

use crate::error::Result;
use crate::geometry::MirrorMap;

/// State of the discrete recursion after `t` steps.
#[derive(Debug, Clone, PartialEq)]
pub struct ImdState {
    /// Completed step count.
    pub t: usize,
    /// Accumulated step weight, `sum_{i<=t} gamma_i`.
    pub tau: f64,
    /// Dual accumulator of weighted subgradients.
    pub zeta: Vec<f64>,
    /// Primal iterate; feasible at every step.
    pub x: Vec<f64>,
    /// Regularization scale used to produce `x`.
    pub beta: f64,
}

impl ImdState {
    /// Initial state: `t = 0`, `tau = 0`, `zeta = 0`, and `x` the prox
    /// minimizer `-grad W_beta0(0)` (uniform point for the entropic map,
    /// reference center for the Euclidean one).
    pub fn init(map: &MirrorMap, schedule: &Schedule) -> Result<Self> {
        let beta0 = schedule.beta0();
        let zeta = vec![0.0; map.dim()];
        let x = map.primal_point(beta0, &zeta)?;
        Ok(ImdState {
            t: 0,
            tau: 0.0,
            zeta,
            x,
            beta: beta0,
        })
    }

    /// One step under an arbitrary schedule.
    ///
    /// With `u` the subgradient drawn at the previous iterate:
    /// `tau_t = tau_{t-1} + gamma_t`, `zeta_t = zeta_{t-1} + gamma_t u`, and
    /// `x_t` is the convex combination of `x_{t-1}` (weight
    /// `tau_t / (tau_t + gamma_{t+1})`) and the mirror point
    /// `-grad W_{beta_t}(zeta_t)` (weight `gamma_{t+1} / (tau_t + gamma_{t+1})`),
    /// so feasibility is preserved by induction.
    pub fn step_general(&self, u: &[f64], schedule: &Schedule, map: &MirrorMap) -> Result<Self> {
        assert_eq!(u.len(), self.zeta.len());
        let t = self.t + 1;
        let gamma_t = schedule.gamma(t)?;
        let gamma_next = schedule.gamma(t + 1)?;
        let beta_t = schedule.beta(t)?;
        let tau = self.tau + gamma_t;
        let zeta: Vec<f64> = self
            .zeta
            .iter()
            .zip(u)
            .map(|(z, ui)| z + gamma_t * ui)
            .collect();
        let mirror = map.primal_point(beta_t, &zeta)?;
        let keep = tau / (tau + gamma_next);
        let pull = gamma_next / (tau + gamma_next);
        let x: Vec<f64> = self
            .x
            .iter()
            .zip(&mirror)
            .map(|(xi, mi)| keep * xi + pull * mi)
            .collect();
        Ok(ImdState {
            t,
            tau,
            zeta,
            x,
            beta: beta_t,
        })
    }

    /// One step under the canonical schedule, in its specialized form
    /// `x_t = x_{t-1} - (x_{t-1} - mirror_t) / (t + 1)` with
    /// `beta_t = beta0 sqrt(t + 1)`. Algebraically identical to
    /// [`ImdState::step_general`] with [`Schedule::canonical`].
    pub fn step_canonical(&self, u: &[f64], beta0: f64, map: &MirrorMap) -> Result<Self> {
        assert_eq!(u.len(), self.zeta.len());
        let t = self.t + 1;
        let beta_t = beta0 * ((t + 1) as f64).sqrt();
        let zeta: Vec<f64> = self.zeta.iter().zip(u).map(|(z, ui)| z + ui).collect();
        let mirror = map.primal_point(beta_t, &zeta)?;
        let inv = 1.0 / (t + 1) as f64;
        let x: Vec<f64> = self
            .x
            .iter()
            .zip(&mirror)
            .map(|(xi, mi)| xi - inv * (xi - mi))
            .collect();
        Ok(ImdState {
            t,
            tau: t as f64,
            zeta,
            x,
            beta: beta_t,
        })
    }
}
