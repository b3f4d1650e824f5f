//! Numerical certificates along integrated trajectories: the Lyapunov
//! descent inequality, the `V(x*)/t` gap bound, its integrated form, and
//! the heavy-ball residual.

use crate::continuous::{ContinuousSystem, MuMode, Trajectory};
use crate::error::{Error, Result};
use crate::oracles::DeterministicProblem;
use crate::vecmath::l2;

/// Pointwise check of the descent inequality for the shifted dual potential
/// `W(zeta) - <zeta, x*>`: along a trajectory its time derivative is bounded
/// by `-gap(t) - mu_t * d/dt gap(t)`.
///
/// Both sides are approximated by central differences on the grid; returns
/// the largest violation `lhs - rhs` over interior points (negative when
/// the inequality holds with margin). Applies to trajectories with inertia
/// (`Constant` or `Linear` modes).
pub fn lyapunov_check(traj: &Trajectory, system: &ContinuousSystem) -> Result<f64> {
    if matches!(system.mu, MuMode::Zero) {
        return Err(Error::ModeMismatch(
            "the descent inequality check needs an inertial trajectory".into(),
        ));
    }
    if traj.len() < 3 {
        return Err(Error::InsufficientGrid {
            needed: 3,
            got: traj.len(),
        });
    }
    let dt = traj.dt();
    let lyap = traj.lyapunov_path();
    let gap = traj.gap_path();
    let times = traj.times();
    let mut worst = f64::NEG_INFINITY;
    for k in 1..traj.len() - 1 {
        let lhs = (lyap[k + 1] - lyap[k - 1]) / (2.0 * dt);
        let dgap = (gap[k + 1] - gap[k - 1]) / (2.0 * dt);
        let rhs = -gap[k] - system.mu.mu(times[k]) * dgap;
        worst = worst.max(lhs - rhs);
    }
    Ok(worst)
}

/// Largest value of `gap(t) * t / v_at_xstar` over grid points with
/// `t >= t_min`: at most 1 (plus discretization slack) for `Linear`-mode
/// trajectories, by the `V(x*)/t` bound. Returns 0 when the gap vanishes
/// identically or no grid point qualifies.
pub fn bound_ratio(traj: &Trajectory, v_at_xstar: f64, t_min: f64) -> f64 {
    assert!(v_at_xstar > 0.0);
    traj.times()
        .iter()
        .zip(traj.gap_path())
        .filter(|(t, _)| **t >= t_min)
        .map(|(t, g)| g * t / v_at_xstar)
        .fold(0.0_f64, f64::max)
}

/// Integrated form of the descent inequality on `[t0, t]` for `Linear`-mode
/// trajectories:
///
/// ```text
/// integral(gap) + [W(zeta(t)) - <zeta(t), x*>] + mu_t gap(t)
///     <= integral(gap * mu')
/// ```
///
/// Integrals are cumulative trapezoids on the grid; returns the largest
/// violation over grid points.
pub fn integrated_inequality(traj: &Trajectory, system: &ContinuousSystem) -> Result<f64> {
    if !matches!(system.mu, MuMode::Linear) {
        return Err(Error::ModeMismatch(
            "the integrated inequality is certified for the linear-inertia mode".into(),
        ));
    }
    if traj.len() < 2 {
        return Err(Error::InsufficientGrid {
            needed: 2,
            got: traj.len(),
        });
    }
    let dt = traj.dt();
    let gap = traj.gap_path();
    let lyap = traj.lyapunov_path();
    let times = traj.times();
    let mu_dot = system.mu.mu_dot();
    let mut gap_integral = 0.0;
    let mut weighted_integral = 0.0;
    let mut worst = f64::NEG_INFINITY;
    for k in 1..traj.len() {
        gap_integral += 0.5 * (gap[k] + gap[k - 1]) * dt;
        weighted_integral += 0.5 * (gap[k] + gap[k - 1]) * mu_dot * dt;
        let lhs = gap_integral + lyap[k] + system.mu.mu(times[k]) * gap[k];
        worst = worst.max(lhs - weighted_integral);
    }
    Ok(worst)
}

/// Residual of the second-order heavy-ball equation
/// `mu x'' + x' + grad f(x) = 0` along a constant-inertia, identity-pair
/// trajectory, with derivatives from central differences on the uniform
/// grid. Returns the largest Euclidean residual over interior points with
/// `t >= t_min`.
pub fn heavy_ball_residual(
    traj: &Trajectory,
    mu: f64,
    problem: &DeterministicProblem,
    t_min: f64,
) -> Result<f64> {
    if traj.len() < 3 {
        return Err(Error::InsufficientGrid {
            needed: 3,
            got: traj.len(),
        });
    }
    let dt = traj.dt();
    let xs = traj.x_path();
    let times = traj.times();
    let n = problem.dim();
    let mut worst = 0.0_f64;
    for k in 1..traj.len() - 1 {
        if times[k] < t_min {
            continue;
        }
        let grad = problem.grad_f(&xs[k]);
        let mut residual = vec![0.0; n];
        for i in 0..n {
            let xdd = (xs[k + 1][i] - 2.0 * xs[k][i] + xs[k - 1][i]) / (dt * dt);
            let xd = (xs[k + 1][i] - xs[k - 1][i]) / (2.0 * dt);
            residual[i] = mu * xdd + xd + grad[i];
        }
        worst = worst.max(l2(&residual));
    }
    Ok(worst)
}
