//! Monte-Carlo probes validating the declared oracle constants.

use crate::error::{Error, Result};
use crate::geometry::FEASIBILITY_TOL;
use crate::oracles::stochastic::{StochasticProblem, SubgradientStream};

/// Deviation of the empirical mean subgradient from the exact gradient,
/// `|mean_k u_k(x) - grad f(x)|_*`, over `n` draws at a feasible `x`.
///
/// Decays like `n^{-1/2}`; callers typically assert it against
/// `5 * l_bound / sqrt(n)`.
pub fn unbiasedness_probe(
    problem: &StochasticProblem,
    x: &[f64],
    n: usize,
    seed: u64,
) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "probe needs at least one sample".into(),
        ));
    }
    let mut stream = SubgradientStream::new(problem, seed);
    let mut mean = vec![0.0; problem.dim()];
    for _ in 0..n {
        let u = stream.next_subgradient(x)?;
        for (m, ui) in mean.iter_mut().zip(&u) {
            *m += ui;
        }
    }
    let grad = problem.grad_f(x);
    let dev: Vec<f64> = mean
        .iter()
        .zip(&grad)
        .map(|(m, g)| m / n as f64 - g)
        .collect();
    Ok(problem.norms().dual(&dev))
}

/// Largest empirical mean of `|u(x)|_*^2` over a grid of feasible points,
/// `n` draws per point.
///
/// Validates the declared second-moment constant: callers assert the result
/// against `l_bound^2 * (1 + 3 / sqrt(n))`.
pub fn second_moment_probe(
    problem: &StochasticProblem,
    grid: &[Vec<f64>],
    n: usize,
    seed: u64,
) -> Result<f64> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter(
            "probe grid must be nonempty".into(),
        ));
    }
    if n == 0 {
        return Err(Error::InvalidParameter(
            "probe needs at least one sample".into(),
        ));
    }
    for x in grid {
        let violation = problem.set().violation(x);
        if violation > FEASIBILITY_TOL {
            return Err(Error::InfeasiblePoint { violation });
        }
    }
    let mut worst = 0.0_f64;
    for (i, x) in grid.iter().enumerate() {
        let mut stream = SubgradientStream::new(problem, seed.wrapping_add(i as u64));
        let mut acc = 0.0;
        for _ in 0..n {
            let u = stream.next_subgradient(x)?;
            let norm = problem.norms().dual(&u);
            acc += norm * norm;
        }
        worst = worst.max(acc / n as f64);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::FeasibleSet;

    fn simplex_problem() -> StochasticProblem {
        StochasticProblem::linear_on_simplex(vec![-0.5, -0.25, 0.0, 0.25, 0.5], 0.5).unwrap()
    }

    fn box_problem() -> StochasticProblem {
        StochasticProblem::quadratic_noise(
            vec![0.3, -0.2, 0.5, 0.0, -0.4],
            0.5,
            FeasibleSet::hyper_box(vec![-1.0; 5], vec![1.0; 5]),
        )
        .unwrap()
    }

    #[test]
    fn unbiasedness_decays_with_sample_count() {
        let n = 100_000;
        for p in [simplex_problem(), box_problem()] {
            let x = p.set().project(&vec![0.2; p.dim()]);
            let dev = unbiasedness_probe(&p, &x, n, 123).unwrap();
            assert!(
                dev <= 5.0 * p.l_bound() / (n as f64).sqrt(),
                "deviation {dev} too large"
            );
        }
    }

    #[test]
    fn zero_noise_gradient_is_exact_after_one_draw() {
        let p = StochasticProblem::linear_on_simplex(vec![-0.5, 0.0, 0.5], 0.0).unwrap();
        let x = vec![1.0 / 3.0; 3];
        let dev = unbiasedness_probe(&p, &x, 1, 9).unwrap();
        assert_eq!(dev, 0.0);
    }

    #[test]
    fn second_moment_stays_below_declared_constant() {
        let n = 100_000;
        for p in [simplex_problem(), box_problem()] {
            let mut rng = {
                use rand::SeedableRng;
                rand_chacha::ChaCha8Rng::seed_from_u64(77)
            };
            let mut grid: Vec<Vec<f64>> = (0..20).map(|_| p.set().sample(&mut rng)).collect();
            if let FeasibleSet::Box { lower, upper } = p.set() {
                // Include the corners where the sup is attained.
                grid.push(lower.clone());
                grid.push(upper.clone());
            }
            let worst = second_moment_probe(&p, &grid, n, 5).unwrap();
            let allowance = p.l_bound().powi(2) * (1.0 + 3.0 / (n as f64).sqrt());
            assert!(worst <= allowance, "worst {worst} vs allowance {allowance}");
        }
    }

    #[test]
    fn second_moment_zero_for_degenerate_problem() {
        // Zero noise, minimizer at the probe point: every subgradient is 0.
        let p = StochasticProblem::quadratic_noise(
            vec![0.0, 0.0],
            0.0,
            FeasibleSet::hyper_box(vec![-1.0, -1.0], vec![1.0, 1.0]),
        )
        .unwrap();
        let worst = second_moment_probe(&p, &[vec![0.0, 0.0]], 100, 3).unwrap();
        assert_eq!(worst, 0.0);
    }

    #[test]
    fn probes_reject_bad_inputs() {
        let p = simplex_problem();
        assert!(unbiasedness_probe(&p, &[1.0, 0.0, 0.0, 0.0, 0.0], 0, 1).is_err());
        assert!(second_moment_probe(&p, &[], 10, 1).is_err());
        assert!(second_moment_probe(&p, &[vec![0.9; 5]], 10, 1).is_err());
    }
}
