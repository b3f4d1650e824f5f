//! Algorithm runner: the inertial recursion plus three classic baselines,
//! executed over a subgradient stream with per-checkpoint sampling.

use crate::discrete::{ImdState, Schedule};
use crate::error::{Error, Result};
use crate::geometry::{MirrorMap, ProxKind};
use crate::oracles::{StochasticProblem, SubgradientStream};

/// Which recursion to run.
#[derive(Debug, Clone, PartialEq)]
pub enum Algorithm {
    /// The inertial recursion (dual averaging plus iterate averaging).
    Inertial,
    /// Plain dual averaging: `x_t = -grad W_{beta_t}(zeta_t)`, inertia
    /// removed. Shares the schedule with `Inertial`.
    DualAveraging,
    /// Projected stochastic subgradient descent,
    /// `x_t = proj(x_{t-1} - eta_t u_t)` with `eta_t = eta0 / sqrt(t)`;
    /// `eta0` defaults to `1 / L`.
    ProjectedSubgradient { eta0: Option<f64> },
    /// Projected heavy ball,
    /// `x_t = proj(x_{t-1} - eta_t u_t + momentum (x_{t-1} - x_{t-2}))`.
    /// Euclidean geometries only. `eta = Some(c)` uses a constant step,
    /// `None` the decaying `1 / (L sqrt(t))` default; momentum defaults
    /// to 0.9 at the configuration layer.
    HeavyBall { eta: Option<f64>, momentum: f64 },
}

/// Gap and feasibility information recorded at a checkpoint.
///
/// `feasibility_violation` is the worst constraint violation over all
/// iterates since the previous checkpoint (inclusive of this one), so a
/// whole run is certified feasible when every sample reports zero-ish.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckpointSample {
    pub t: usize,
    pub gap: f64,
    pub feasibility_violation: f64,
}

/// Run `algorithm` for `horizon` steps, sampling at `checkpoints`
/// (strictly increasing, within `[1, horizon]`).
///
/// The gap is computed from the problem's analytic expectation, never from
/// Monte-Carlo estimates. The run is a pure function of its arguments plus
/// the stream's seed.
pub fn run_algorithm(
    algorithm: &Algorithm,
    problem: &StochasticProblem,
    map: &MirrorMap,
    schedule: &Schedule,
    horizon: usize,
    checkpoints: &[usize],
    stream: &mut SubgradientStream,
) -> Result<Vec<CheckpointSample>> {
    if map.set() != problem.set() {
        return Err(Error::GeometryMismatch(
            "problem and mirror map use different feasible sets".into(),
        ));
    }
    if checkpoints.is_empty()
        || checkpoints.windows(2).any(|w| w[0] >= w[1])
        || checkpoints[0] < 1
        || *checkpoints.last().unwrap() > horizon
    {
        return Err(Error::InvalidParameter(
            "checkpoints must be strictly increasing within [1, horizon]".into(),
        ));
    }
    if matches!(algorithm, Algorithm::HeavyBall { .. })
        && matches!(map.prox().kind(), ProxKind::Entropic)
    {
        return Err(Error::GeometryMismatch(
            "heavy ball needs a Euclidean geometry; entropic simplex rejected".into(),
        ));
    }

    let l = problem.l_bound();
    let mut state = ImdState::init(map, schedule)?;
    let mut x_prev = state.x.clone();
    let mut samples = Vec::with_capacity(checkpoints.len());
    let mut next_cp = 0;
    let mut worst_violation = map.set().violation(&state.x);

    for t in 1..=horizon {
        let u = stream.next_subgradient(&state.x)?;
        match algorithm {
            Algorithm::Inertial => {
                state = state.step_general(&u, schedule, map)?;
            }
            Algorithm::DualAveraging => {
                let gamma_t = schedule.gamma(t)?;
                let beta_t = schedule.beta(t)?;
                for (z, ui) in state.zeta.iter_mut().zip(&u) {
                    *z += gamma_t * ui;
                }
                state.x = map.primal_point(beta_t, &state.zeta)?;
                state.t = t;
                state.tau += gamma_t;
                state.beta = beta_t;
            }
            Algorithm::ProjectedSubgradient { eta0 } => {
                let eta = eta0.unwrap_or(1.0 / l) / (t as f64).sqrt();
                let moved: Vec<f64> = state
                    .x
                    .iter()
                    .zip(&u)
                    .map(|(xi, ui)| xi - eta * ui)
                    .collect();
                state.x = map.set().project(&moved);
                state.t = t;
            }
            Algorithm::HeavyBall { eta, momentum } => {
                let eta_t = match eta {
                    Some(c) => *c,
                    None => 1.0 / (l * (t as f64).sqrt()),
                };
                let moved: Vec<f64> = state
                    .x
                    .iter()
                    .zip(&u)
                    .zip(&x_prev)
                    .map(|((xi, ui), pi)| xi - eta_t * ui + momentum * (xi - pi))
                    .collect();
                x_prev = state.x.clone();
                state.x = map.set().project(&moved);
                state.t = t;
            }
        }
        worst_violation = worst_violation.max(map.set().violation(&state.x));
        if next_cp < checkpoints.len() && checkpoints[next_cp] == t {
            samples.push(CheckpointSample {
                t,
                gap: problem.gap(&state.x),
                feasibility_violation: worst_violation,
            });
            worst_violation = 0.0;
            next_cp += 1;
        }
    }
    Ok(samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::FeasibleSet;

    fn simplex_setup() -> (StochasticProblem, MirrorMap, Schedule) {
        let problem = StochasticProblem::linear_on_simplex(vec![-0.5, 0.0, 0.5], 0.0).unwrap();
        let map = MirrorMap::entropic_simplex(3);
        let schedule = Schedule::canonical(1.0).unwrap();
        (problem, map, schedule)
    }

    fn box_setup() -> (StochasticProblem, MirrorMap, Schedule) {
        let problem = StochasticProblem::quadratic_noise(
            vec![0.3, -0.2],
            0.2,
            FeasibleSet::hyper_box(vec![-1.0, -1.0], vec![1.0, 1.0]),
        )
        .unwrap();
        let map = MirrorMap::euclidean_box(vec![-1.0, -1.0], vec![1.0, 1.0]);
        let schedule = Schedule::canonical(1.0).unwrap();
        (problem, map, schedule)
    }

    #[test]
    fn dual_averaging_concentrates_on_the_cheapest_expert() {
        let (problem, map, schedule) = simplex_setup();
        let mut stream = SubgradientStream::new(&problem, 1);
        let samples = run_algorithm(
            &Algorithm::DualAveraging,
            &problem,
            &map,
            &schedule,
            4000,
            &[10, 4000],
            &mut stream,
        )
        .unwrap();
        // Zero noise: the weight on the cheapest coordinate grows, the gap
        // at the end is far below the early one.
        assert!(samples[1].gap < samples[0].gap / 5.0);
        assert!(samples[1].gap < 0.05);
    }

    #[test]
    fn projected_subgradient_with_zero_step_is_constant() {
        let (problem, map, schedule) = box_setup();
        let mut stream = SubgradientStream::new(&problem, 2);
        let samples = run_algorithm(
            &Algorithm::ProjectedSubgradient { eta0: Some(0.0) },
            &problem,
            &map,
            &schedule,
            100,
            &[1, 100],
            &mut stream,
        )
        .unwrap();
        // x stays at the prox center (0, 0): gap = f(0) - f*.
        let expect = problem.gap(&[0.0, 0.0]);
        assert!((samples[0].gap - expect).abs() < 1e-15);
        assert!((samples[1].gap - expect).abs() < 1e-15);
    }

    #[test]
    fn heavy_ball_without_momentum_matches_projected_subgradient() {
        let (problem, map, schedule) = box_setup();
        let eta = 0.05;
        let mut s1 = SubgradientStream::new(&problem, 3);
        let a = run_algorithm(
            &Algorithm::HeavyBall {
                eta: Some(eta),
                momentum: 0.0,
            },
            &problem,
            &map,
            &schedule,
            500,
            &[500],
            &mut s1,
        )
        .unwrap();
        // Constant-step variant of projected subgradient, run by hand.
        let mut s2 = SubgradientStream::new(&problem, 3);
        let mut x = vec![0.0, 0.0];
        for _ in 0..500 {
            let u = s2.next_subgradient(&x).unwrap();
            let moved: Vec<f64> = x.iter().zip(&u).map(|(xi, ui)| xi - eta * ui).collect();
            x = map.set().project(&moved);
        }
        assert!((a[0].gap - problem.gap(&x)).abs() < 1e-15);
    }

    #[test]
    fn heavy_ball_on_the_simplex_is_rejected() {
        let (problem, map, schedule) = simplex_setup();
        let mut stream = SubgradientStream::new(&problem, 4);
        let err = run_algorithm(
            &Algorithm::HeavyBall {
                eta: None,
                momentum: 0.9,
            },
            &problem,
            &map,
            &schedule,
            10,
            &[10],
            &mut stream,
        );
        assert!(matches!(err, Err(Error::GeometryMismatch(_))));
    }

    #[test]
    fn mismatched_sets_are_rejected() {
        let (problem, _, schedule) = simplex_setup();
        let wrong_map = MirrorMap::entropic_simplex(4);
        let mut stream = SubgradientStream::new(&problem, 5);
        let err = run_algorithm(
            &Algorithm::Inertial,
            &problem,
            &wrong_map,
            &schedule,
            10,
            &[10],
            &mut stream,
        );
        assert!(matches!(err, Err(Error::GeometryMismatch(_))));
    }

    #[test]
    fn checkpoint_validation() {
        let (problem, map, schedule) = simplex_setup();
        let mut stream = SubgradientStream::new(&problem, 6);
        for bad in [vec![], vec![0], vec![5, 5], vec![5, 200]] {
            let err = run_algorithm(
                &Algorithm::Inertial,
                &problem,
                &map,
                &schedule,
                100,
                &bad,
                &mut stream,
            );
            assert!(err.is_err(), "checkpoints {bad:?} accepted");
        }
    }

    #[test]
    fn all_algorithms_keep_iterates_feasible() {
        let (problem, map, schedule) = box_setup();
        for algorithm in [
            Algorithm::Inertial,
            Algorithm::DualAveraging,
            Algorithm::ProjectedSubgradient { eta0: None },
            Algorithm::HeavyBall {
                eta: None,
                momentum: 0.9,
            },
        ] {
            let mut stream = SubgradientStream::new(&problem, 8);
            let samples = run_algorithm(
                &algorithm,
                &problem,
                &map,
                &schedule,
                500,
                &[100, 500],
                &mut stream,
            )
            .unwrap();
            for s in &samples {
                assert!(s.feasibility_violation <= 1e-12, "{algorithm:?}");
            }
        }
    }

    #[test]
    fn runs_are_pure_functions_of_the_seed() {
        let (problem, map, schedule) = box_setup();
        let run = |seed| {
            let mut stream = SubgradientStream::new(&problem, seed);
            run_algorithm(
                &Algorithm::Inertial,
                &problem,
                &map,
                &schedule,
                300,
                &[300],
                &mut stream,
            )
            .unwrap()
        };
        assert_eq!(run(11), run(11));
        assert_ne!(run(11)[0].gap, run(12)[0].gap);
    }
}
