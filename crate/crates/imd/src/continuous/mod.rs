//! Continuous-time dynamics: a dual accumulator driven by the negative
//! gradient, and a primal iterate relaxed toward the mirror point with a
//! time-dependent inertia coefficient.
//!
//! ```text
//! zeta'(t) = -grad f(x(t)),            zeta(0) = 0
//! mu_t x'(t) + x(t) = grad W(zeta(t)), x(0) = grad W(0)
//! ```
//!
//! `mu_t = 0` slaves the iterate to the mirror point (classic mirror
//! descent; gradient flow for the identity pair), a positive constant gives
//! heavy-ball dynamics, and `mu_t = t` yields the inertial method whose gap
//! decays like `V(x*) / t`.

mod checks;

pub use checks::{bound_ratio, heavy_ball_residual, integrated_inequality, lyapunov_check};

use crate::error::{Error, Result};
use crate::geometry::ConjugatePair;
use crate::oracles::DeterministicProblem;
use crate::vecmath::{all_finite, dot};

/// Time profile of the inertia coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MuMode {
    /// No inertia: the iterate is algebraically slaved to the mirror point.
    Zero,
    /// Constant positive inertia (heavy-ball regime for the identity pair).
    Constant(f64),
    /// `mu_t = t`, the largest profile with `mu_0 = 0` and unit slope.
    Linear,
}

impl MuMode {
    pub fn mu(&self, t: f64) -> f64 {
        match self {
            MuMode::Zero => 0.0,
            MuMode::Constant(mu) => *mu,
            MuMode::Linear => t,
        }
    }

    pub fn mu_dot(&self) -> f64 {
        match self {
            MuMode::Zero | MuMode::Constant(_) => 0.0,
            MuMode::Linear => 1.0,
        }
    }
}

/// An integrable system: problem, unconstrained conjugate pair, inertia mode.
#[derive(Debug, Clone, PartialEq)]
pub struct ContinuousSystem {
    pub problem: DeterministicProblem,
    pub pair: ConjugatePair,
    pub mu: MuMode,
}

impl ContinuousSystem {
    pub fn new(problem: DeterministicProblem, pair: ConjugatePair, mu: MuMode) -> Result<Self> {
        if let MuMode::Constant(m) = mu {
            if m <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "constant inertia must be positive, got {m}"
                )));
            }
        }
        Ok(ContinuousSystem { problem, pair, mu })
    }

    /// Right-hand side of the coupled system at time `t`.
    ///
    /// Returns `(zeta', x')`. In `Zero` mode the iterate is slaved to
    /// `grad W(zeta)` (the `x` argument is ignored and `x'` comes back as
    /// zeros), so the dual equation closes as
    /// `zeta' = -grad f(grad W(zeta))`. In `Linear` mode the inertia
    /// vanishes at `t <= 0` and the call errors.
    pub fn rhs(&self, t: f64, zeta: &[f64], x: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
        let dzeta: Vec<f64> = match self.mu {
            MuMode::Zero => {
                let slaved = self.pair.dual_grad(zeta);
                self.problem.grad_f(&slaved).iter().map(|g| -g).collect()
            }
            _ => self.problem.grad_f(x).iter().map(|g| -g).collect(),
        };
        let dx = match self.mu {
            MuMode::Zero => vec![0.0; x.len()],
            MuMode::Constant(mu) => self
                .pair
                .dual_grad(zeta)
                .iter()
                .zip(x)
                .map(|(m, xi)| (m - xi) / mu)
                .collect(),
            MuMode::Linear => {
                if t <= 0.0 {
                    return Err(Error::SingularTime { t });
                }
                self.pair
                    .dual_grad(zeta)
                    .iter()
                    .zip(x)
                    .map(|(m, xi)| (m - xi) / t)
                    .collect()
            }
        };
        Ok((dzeta, dx))
    }

    /// Fixed-step classical fourth-order integration from the natural start
    /// (`t = 0`, or `t = t_start_offset > 0` in `Linear` mode) to `t_end`,
    /// recording gap and Lyapunov samples at every grid point.
    ///
    /// The initial state is `zeta = 0`, `x = grad W(0)`, the slaved value at
    /// vanishing inertia.
    pub fn integrate(&self, t_end: f64, dt: f64, t_start_offset: f64) -> Result<Trajectory> {
        if dt <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "dt must be positive, got {dt}"
            )));
        }
        let t0 = match self.mu {
            MuMode::Linear => {
                if t_start_offset <= 0.0 {
                    return Err(Error::SingularTime { t: t_start_offset });
                }
                t_start_offset
            }
            _ => 0.0,
        };
        if t_end < t0 {
            return Err(Error::InvalidParameter(format!(
                "t_end ({t_end}) precedes the start time ({t0})"
            )));
        }
        let n = self.problem.dim();
        let steps = ((t_end - t0) / dt).round() as usize;
        let x_star = self.problem.x_star();
        let f_star = self.problem.f_star();

        let mut zeta = vec![0.0; n];
        let mut x = self.pair.dual_grad(&zeta);
        let mut traj = Trajectory::with_capacity(steps + 1, dt);
        let slaved = matches!(self.mu, MuMode::Zero);

        for k in 0..=steps {
            let t = t0 + k as f64 * dt;
            if slaved {
                x = self.pair.dual_grad(&zeta);
            }
            if !(all_finite(&zeta) && all_finite(&x)) {
                return Err(Error::NonfiniteState { time: t });
            }
            let gap = self.problem.f(&x) - f_star;
            let lyap = self.pair.dual_value(&zeta) - dot(&zeta, &x_star);
            traj.push(t, zeta.clone(), x.clone(), gap, lyap);
            if k == steps {
                break;
            }

            let (dz1, dx1) = self.rhs(t, &zeta, &x)?;
            let (z2, x2) = advance(&zeta, &x, &dz1, &dx1, dt / 2.0);
            let (dz2, dx2) = self.rhs(t + dt / 2.0, &z2, &x2)?;
            let (z3, x3) = advance(&zeta, &x, &dz2, &dx2, dt / 2.0);
            let (dz3, dx3) = self.rhs(t + dt / 2.0, &z3, &x3)?;
            let (z4, x4) = advance(&zeta, &x, &dz3, &dx3, dt);
            let (dz4, dx4) = self.rhs(t + dt, &z4, &x4)?;
            for i in 0..n {
                zeta[i] += dt / 6.0 * (dz1[i] + 2.0 * dz2[i] + 2.0 * dz3[i] + dz4[i]);
                if !slaved {
                    x[i] += dt / 6.0 * (dx1[i] + 2.0 * dx2[i] + 2.0 * dx3[i] + dx4[i]);
                }
            }
        }
        Ok(traj)
    }
}

fn advance(zeta: &[f64], x: &[f64], dz: &[f64], dx: &[f64], h: f64) -> (Vec<f64>, Vec<f64>) {
    let z: Vec<f64> = zeta.iter().zip(dz).map(|(a, d)| a + h * d).collect();
    let xx: Vec<f64> = x.iter().zip(dx).map(|(a, d)| a + h * d).collect();
    (z, xx)
}

/// A sampled solution on a uniform time grid.
#[derive(Debug, Clone)]
pub struct Trajectory {
    times: Vec<f64>,
    zeta_path: Vec<Vec<f64>>,
    x_path: Vec<Vec<f64>>,
    gap_path: Vec<f64>,
    lyapunov_path: Vec<f64>,
    dt: f64,
}

impl Trajectory {
    fn with_capacity(cap: usize, dt: f64) -> Self {
        Trajectory {
            times: Vec::with_capacity(cap),
            zeta_path: Vec::with_capacity(cap),
            x_path: Vec::with_capacity(cap),
            gap_path: Vec::with_capacity(cap),
            lyapunov_path: Vec::with_capacity(cap),
            dt,
        }
    }

    fn push(&mut self, t: f64, zeta: Vec<f64>, x: Vec<f64>, gap: f64, lyapunov: f64) {
        self.times.push(t);
        self.zeta_path.push(zeta);
        self.x_path.push(x);
        self.gap_path.push(gap);
        self.lyapunov_path.push(lyapunov);
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn zeta_path(&self) -> &[Vec<f64>] {
        &self.zeta_path
    }

    pub fn x_path(&self) -> &[Vec<f64>] {
        &self.x_path
    }

    pub fn gap_path(&self) -> &[f64] {
        &self.gap_path
    }

    pub fn lyapunov_path(&self) -> &[f64] {
        &self.lyapunov_path
    }

    /// Index of the grid point closest to `t`.
    pub fn index_at(&self, t: f64) -> usize {
        if self.times.is_empty() {
            return 0;
        }
        let first = self.times[0];
        let k = ((t - first) / self.dt).round();
        (k.max(0.0) as usize).min(self.times.len() - 1)
    }
}
