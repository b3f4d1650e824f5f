//! Step-weight and regularization schedules for the discrete recursion.

use crate::error::{Error, Result};

/// Supplies the step weights `gamma_i` and regularization scales `beta_i`
/// for `i >= 1`, plus the initial scale `beta0`.
///
/// The update at step `t` looks ahead to `gamma_{t+1}`, so a schedule must
/// cover one index past the horizon; tabulated schedules that run out raise
/// [`Error::ScheduleExhausted`].
#[derive(Debug, Clone, PartialEq)]
pub enum Schedule {
    /// `gamma_i = 1`, `beta_i = beta0 * sqrt(i + 1)`: the schedule under
    /// which the recursion collapses to the `1/(t+1)` averaging form.
    Canonical { beta0: f64 },
    /// Explicit per-step tables, index 0 holding `gamma_1` / `beta_1`.
    Tabulated {
        gammas: Vec<f64>,
        betas: Vec<f64>,
        beta0: f64,
    },
}

impl Schedule {
    pub fn canonical(beta0: f64) -> Result<Self> {
        if beta0 <= 0.0 {
            return Err(Error::NonpositiveBeta(beta0));
        }
        Ok(Schedule::Canonical { beta0 })
    }

    pub fn tabulated(gammas: Vec<f64>, betas: Vec<f64>, beta0: f64) -> Result<Self> {
        if beta0 <= 0.0 {
            return Err(Error::NonpositiveBeta(beta0));
        }
        if gammas.iter().any(|&g| g <= 0.0) || betas.iter().any(|&b| b <= 0.0) {
            return Err(Error::InvalidParameter(
                "schedule entries must be strictly positive".into(),
            ));
        }
        Ok(Schedule::Tabulated {
            gammas,
            betas,
            beta0,
        })
    }

    pub fn beta0(&self) -> f64 {
        match self {
            Schedule::Canonical { beta0 } => *beta0,
            Schedule::Tabulated { beta0, .. } => *beta0,
        }
    }

    /// Step weight `gamma_i`, `i >= 1`.
    pub fn gamma(&self, i: usize) -> Result<f64> {
        assert!(i >= 1, "step weights are indexed from 1");
        match self {
            Schedule::Canonical { .. } => Ok(1.0),
            Schedule::Tabulated { gammas, .. } => gammas
                .get(i - 1)
                .copied()
                .ok_or(Error::ScheduleExhausted(i)),
        }
    }

    /// Regularization scale `beta_i`; `beta(0)` is `beta0`.
    pub fn beta(&self, i: usize) -> Result<f64> {
        match self {
            Schedule::Canonical { beta0 } => Ok(if i == 0 {
                *beta0
            } else {
                beta0 * ((i + 1) as f64).sqrt()
            }),
            Schedule::Tabulated { betas, beta0, .. } => {
                if i == 0 {
                    Ok(*beta0)
                } else {
                    betas.get(i - 1).copied().ok_or(Error::ScheduleExhausted(i))
                }
            }
        }
    }
}
