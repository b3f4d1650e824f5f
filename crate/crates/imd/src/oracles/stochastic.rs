//! Stochastic problems `f(x) = E Q(x, Z)` with analytic expectations and
//! seeded subgradient streams.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{FeasibleSet, NormPair, FEASIBILITY_TOL};
use crate::vecmath::dot;

/// The per-sample loss.
#[derive(Debug, Clone, PartialEq)]
pub enum LossKind {
    /// `Q(x, Z) = <x, Z>` with the coordinates of `Z` drawn independently
    /// and uniformly from `[center_i - half_width, center_i + half_width]`.
    /// Paired with the simplex under (l1, l-inf): an expert-weighting
    /// problem with `f(x) = <center, x>`.
    Linear { center: Vec<f64>, half_width: f64 },
    /// `Q(x, Z) = |x - Z|^2 / 2` with `Z = mean + noise`, noise coordinates
    /// uniform in `[-half_width, half_width]`. Paired with a Euclidean box
    /// or ball containing `mean`, which is the minimizer.
    QuadraticNoise { mean: Vec<f64>, half_width: f64 },
}

/// A stochastic problem: loss kind, feasible set, norm pair, and the exact
/// second-moment constant `L` with `sup_x E |grad Q(x,Z)|_*^2 <= L^2`.
///
/// Immutable and shareable; randomness lives in [`SubgradientStream`].
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticProblem {
    kind: LossKind,
    set: FeasibleSet,
    norms: NormPair,
    l_bound: f64,
}

impl StochasticProblem {
    /// Linear loss over the probability simplex.
    ///
    /// `L` is the almost-sure bound `max_i(|center_i| + half_width)` on the
    /// l-inf norm of `Z`.
    pub fn linear_on_simplex(center: Vec<f64>, half_width: f64) -> Result<Self> {
        if center.is_empty() {
            return Err(Error::InvalidParameter(
                "cost center must be nonempty".into(),
            ));
        }
        if half_width < 0.0 {
            return Err(Error::InvalidParameter(
                "half width must be nonnegative".into(),
            ));
        }
        let l_bound = center
            .iter()
            .map(|c| c.abs() + half_width)
            .fold(0.0_f64, f64::max);
        if l_bound <= 0.0 {
            return Err(Error::InvalidParameter(
                "degenerate problem: zero cost and zero noise".into(),
            ));
        }
        let set = FeasibleSet::simplex(center.len());
        Ok(StochasticProblem {
            kind: LossKind::Linear { center, half_width },
            set,
            norms: NormPair::L1Linf,
            l_bound,
        })
    }

    /// Quadratic noise loss over a Euclidean box or ball containing `mean`.
    ///
    /// `L^2 = sup_x |x - mean|^2 + n * half_width^2 / 3` exactly (the sup is
    /// the farthest corner of the box, or crosses the ball rim).
    pub fn quadratic_noise(mean: Vec<f64>, half_width: f64, set: FeasibleSet) -> Result<Self> {
        if half_width < 0.0 {
            return Err(Error::InvalidParameter(
                "half width must be nonnegative".into(),
            ));
        }
        if mean.len() != set.dim() {
            return Err(Error::GeometryMismatch(format!(
                "mean has dimension {}, set has dimension {}",
                mean.len(),
                set.dim()
            )));
        }
        let sup_dist_sq = match &set {
            FeasibleSet::Box { lower, upper } => mean
                .iter()
                .zip(lower.iter().zip(upper))
                .map(|(&m, (&l, &u))| (m - l).max(u - m).powi(2))
                .sum::<f64>(),
            FeasibleSet::Ball { center, radius } => {
                let d: Vec<f64> = center.iter().zip(&mean).map(|(c, m)| c - m).collect();
                let dist = d.iter().map(|v| v * v).sum::<f64>().sqrt();
                (dist + radius).powi(2)
            }
            FeasibleSet::Simplex { .. } => {
                return Err(Error::GeometryMismatch(
                    "quadratic noise loss pairs with a Euclidean box or ball".into(),
                ))
            }
        };
        if set.violation(&mean) > FEASIBILITY_TOL {
            return Err(Error::InvalidParameter(
                "the noise mean (the minimizer) must lie in the feasible set".into(),
            ));
        }
        let n = mean.len() as f64;
        let l_bound = (sup_dist_sq + n * half_width * half_width / 3.0).sqrt();
        Ok(StochasticProblem {
            kind: LossKind::QuadraticNoise { mean, half_width },
            set,
            norms: NormPair::L2L2,
            l_bound,
        })
    }

    pub fn kind(&self) -> &LossKind {
        &self.kind
    }

    pub fn set(&self) -> &FeasibleSet {
        &self.set
    }

    pub fn norms(&self) -> &NormPair {
        &self.norms
    }

    pub fn dim(&self) -> usize {
        self.set.dim()
    }

    /// The exact constant `L` in the second-moment bound.
    pub fn l_bound(&self) -> f64 {
        self.l_bound
    }

    /// Per-sample loss `Q(x, z)`.
    pub fn q(&self, x: &[f64], z: &[f64]) -> f64 {
        match &self.kind {
            LossKind::Linear { .. } => dot(x, z),
            LossKind::QuadraticNoise { .. } => {
                0.5 * x.iter().zip(z).map(|(a, b)| (a - b) * (a - b)).sum::<f64>()
            }
        }
    }

    /// Per-sample subgradient `grad_x Q(x, z)`.
    pub fn grad_q(&self, x: &[f64], z: &[f64]) -> Vec<f64> {
        match &self.kind {
            LossKind::Linear { .. } => z.to_vec(),
            LossKind::QuadraticNoise { .. } => x.iter().zip(z).map(|(a, b)| a - b).collect(),
        }
    }

    /// Draw one sample of `Z`.
    pub fn sample_z<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        match &self.kind {
            LossKind::Linear { center, half_width } => center
                .iter()
                .map(|c| c + half_width * (2.0 * rng.random::<f64>() - 1.0))
                .collect(),
            LossKind::QuadraticNoise { mean, half_width } => mean
                .iter()
                .map(|m| m + half_width * (2.0 * rng.random::<f64>() - 1.0))
                .collect(),
        }
    }

    /// The analytic expectation `f(x) = E Q(x, Z)`.
    pub fn f(&self, x: &[f64]) -> f64 {
        match &self.kind {
            LossKind::Linear { center, .. } => dot(center, x),
            LossKind::QuadraticNoise { mean, half_width } => {
                let dist_sq: f64 = x.iter().zip(mean).map(|(a, b)| (a - b) * (a - b)).sum();
                0.5 * dist_sq + self.dim() as f64 * half_width * half_width / 6.0
            }
        }
    }

    /// Exact gradient of the expectation.
    pub fn grad_f(&self, x: &[f64]) -> Vec<f64> {
        match &self.kind {
            LossKind::Linear { center, .. } => center.clone(),
            LossKind::QuadraticNoise { mean, .. } => {
                x.iter().zip(mean).map(|(a, b)| a - b).collect()
            }
        }
    }

    pub fn f_star(&self) -> f64 {
        match &self.kind {
            LossKind::Linear { center, .. } => center.iter().cloned().fold(f64::INFINITY, f64::min),
            LossKind::QuadraticNoise { mean, half_width } => {
                mean.len() as f64 * half_width * half_width / 6.0
            }
        }
    }

    pub fn x_star(&self) -> Vec<f64> {
        match &self.kind {
            LossKind::Linear { center, .. } => {
                let mut best = 0;
                for (i, c) in center.iter().enumerate() {
                    if *c < center[best] {
                        best = i;
                    }
                }
                let mut v = vec![0.0; center.len()];
                v[best] = 1.0;
                v
            }
            LossKind::QuadraticNoise { mean, .. } => mean.clone(),
        }
    }

    pub fn gap(&self, x: &[f64]) -> f64 {
        self.f(x) - self.f_star()
    }
}

/// A seeded stream of stochastic subgradients `u_k(x) = grad_x Q(x, Z_k)`.
///
/// Backed by the ChaCha8 counter-based generator: equal seeds reproduce the
/// same `Z_1, Z_2, ...` regardless of where or when the stream runs. One
/// stream per replication; never share a stream between concurrent runs.
#[derive(Debug, Clone)]
pub struct SubgradientStream<'a> {
    problem: &'a StochasticProblem,
    rng: ChaCha8Rng,
    count: u64,
}

impl<'a> SubgradientStream<'a> {
    pub fn new(problem: &'a StochasticProblem, seed: u64) -> Self {
        SubgradientStream {
            problem,
            rng: ChaCha8Rng::seed_from_u64(seed),
            count: 0,
        }
    }

    /// Number of subgradients drawn so far.
    pub fn count(&self) -> u64 {
        self.count
    }

    /// Draw `Z_k` and return `grad_x Q(x, Z_k)`. `x` must be feasible.
    pub fn next_subgradient(&mut self, x: &[f64]) -> Result<Vec<f64>> {
        let violation = self.problem.set.violation(x);
        if violation > FEASIBILITY_TOL {
            return Err(Error::InfeasiblePoint { violation });
        }
        let z = self.problem.sample_z(&mut self.rng);
        self.count += 1;
        Ok(self.problem.grad_q(x, &z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn simplex_problem() -> StochasticProblem {
        StochasticProblem::linear_on_simplex(vec![-0.5, 0.0, 0.5], 0.5).unwrap()
    }

    fn box_problem() -> StochasticProblem {
        StochasticProblem::quadratic_noise(
            vec![0.3, -0.2],
            0.5,
            FeasibleSet::hyper_box(vec![-1.0, -1.0], vec![1.0, 1.0]),
        )
        .unwrap()
    }

    #[test]
    fn linear_subgradient_is_the_sample() {
        let p = simplex_problem();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let z = p.sample_z(&mut rng);
        let x = vec![0.2, 0.3, 0.5];
        assert_eq!(p.grad_q(&x, &z), z);
    }

    #[test]
    fn quadratic_noise_analytics() {
        let p = box_problem();
        // f* = n w^2 / 6 = 2 * 0.25 / 6
        assert!((p.f_star() - 2.0 * 0.25 / 6.0).abs() < 1e-15);
        assert_eq!(p.x_star(), vec![0.3, -0.2]);
        assert!((p.gap(&p.x_star())).abs() < 1e-15);
        // At a corner, gap = half squared distance to the mean.
        let g = p.gap(&[1.0, 1.0]);
        assert!((g - 0.5 * (0.49 + 1.44)).abs() < 1e-12);
        // L^2 = farthest corner + n w^2 / 3.
        let expect = (1.3_f64.powi(2) + 1.2_f64.powi(2)) + 2.0 * 0.25 / 3.0;
        assert!((p.l_bound().powi(2) - expect).abs() < 1e-12);
    }

    #[test]
    fn streams_with_equal_seeds_are_bitwise_identical() {
        let p = simplex_problem();
        let x = vec![1.0 / 3.0; 3];
        let mut a = SubgradientStream::new(&p, 42);
        let mut b = SubgradientStream::new(&p, 42);
        for _ in 0..10 {
            let ua = a.next_subgradient(&x).unwrap();
            let ub = b.next_subgradient(&x).unwrap();
            assert_eq!(ua, ub);
        }
        assert_eq!(a.count(), 10);
        let mut c = SubgradientStream::new(&p, 43);
        let uc = c.next_subgradient(&x).unwrap();
        let mut a2 = SubgradientStream::new(&p, 42);
        assert_ne!(a2.next_subgradient(&x).unwrap(), uc);
    }

    #[test]
    fn stream_rejects_infeasible_points() {
        let p = simplex_problem();
        let mut s = SubgradientStream::new(&p, 7);
        assert!(matches!(
            s.next_subgradient(&[0.9, 0.9, 0.9]),
            Err(Error::InfeasiblePoint { .. })
        ));
        assert_eq!(s.count(), 0);
    }

    #[test]
    fn mean_outside_set_is_rejected() {
        let r = StochasticProblem::quadratic_noise(
            vec![2.0, 0.0],
            0.1,
            FeasibleSet::hyper_box(vec![-1.0, -1.0], vec![1.0, 1.0]),
        );
        assert!(matches!(r, Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn quadratic_noise_on_simplex_is_rejected() {
        let r = StochasticProblem::quadratic_noise(vec![0.5, 0.5], 0.1, FeasibleSet::simplex(2));
        assert!(matches!(r, Err(Error::GeometryMismatch(_))));
    }

    #[test]
    fn per_sample_loss_is_convex_on_random_chords() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for p in [simplex_problem(), box_problem()] {
            for _ in 0..1000 {
                let a = p.set().sample(&mut rng);
                let b = p.set().sample(&mut rng);
                let lambda = rng.random::<f64>();
                let z = p.sample_z(&mut rng);
                let mix: Vec<f64> = a
                    .iter()
                    .zip(&b)
                    .map(|(ai, bi)| lambda * ai + (1.0 - lambda) * bi)
                    .collect();
                let lhs = p.q(&mix, &z);
                let rhs = lambda * p.q(&a, &z) + (1.0 - lambda) * p.q(&b, &z);
                assert!(lhs <= rhs + 1e-12);
            }
        }
    }
}
