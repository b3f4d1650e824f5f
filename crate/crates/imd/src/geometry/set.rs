//! Convex compact feasible sets with membership tests and Euclidean projections.

use rand::Rng;

use crate::vecmath::l2;

/// Tolerance used by [`FeasibleSet::contains`]: a point counts as feasible
/// when its constraint violation does not exceed this.
pub const FEASIBILITY_TOL: f64 = 1e-12;

/// A convex compact subset of R^n.
#[derive(Debug, Clone, PartialEq)]
pub enum FeasibleSet {
    /// The probability simplex { x >= 0, sum x = 1 }.
    Simplex { dim: usize },
    /// An axis-aligned box with per-coordinate bounds.
    Box { lower: Vec<f64>, upper: Vec<f64> },
    /// A Euclidean ball.
    Ball { center: Vec<f64>, radius: f64 },
}

impl FeasibleSet {
    pub fn simplex(dim: usize) -> Self {
        assert!(dim >= 1, "simplex dimension must be at least 1");
        FeasibleSet::Simplex { dim }
    }

    pub fn hyper_box(lower: Vec<f64>, upper: Vec<f64>) -> Self {
        assert_eq!(lower.len(), upper.len());
        assert!(
            lower.iter().zip(&upper).all(|(l, u)| l < u),
            "box must have positive extent in every coordinate"
        );
        FeasibleSet::Box { lower, upper }
    }

    pub fn ball(center: Vec<f64>, radius: f64) -> Self {
        assert!(radius > 0.0, "ball radius must be positive");
        FeasibleSet::Ball { center, radius }
    }

    pub fn dim(&self) -> usize {
        match self {
            FeasibleSet::Simplex { dim } => *dim,
            FeasibleSet::Box { lower, .. } => lower.len(),
            FeasibleSet::Ball { center, .. } => center.len(),
        }
    }

    /// How far `x` is from satisfying the set's constraints (0 when inside).
    ///
    /// Simplex: worst of coordinate negativity and |sum - 1|. Box: worst
    /// per-coordinate bound excess. Ball: distance beyond the radius.
    pub fn violation(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.dim());
        match self {
            FeasibleSet::Simplex { .. } => {
                let neg = x.iter().fold(0.0_f64, |m, &xi| m.max(-xi));
                let sum: f64 = x.iter().sum();
                neg.max((sum - 1.0).abs())
            }
            FeasibleSet::Box { lower, upper } => x
                .iter()
                .zip(lower.iter().zip(upper))
                .fold(0.0_f64, |m, (&xi, (&l, &u))| m.max(l - xi).max(xi - u)),
            FeasibleSet::Ball { center, radius } => {
                let d: Vec<f64> = x.iter().zip(center).map(|(a, c)| a - c).collect();
                (l2(&d) - radius).max(0.0)
            }
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        self.violation(x) <= FEASIBILITY_TOL
    }

    /// Euclidean projection onto the set.
    pub fn project(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim());
        match self {
            FeasibleSet::Simplex { .. } => project_simplex(x),
            FeasibleSet::Box { lower, upper } => x
                .iter()
                .zip(lower.iter().zip(upper))
                .map(|(&xi, (&l, &u))| xi.clamp(l, u))
                .collect(),
            FeasibleSet::Ball { center, radius } => {
                let d: Vec<f64> = x.iter().zip(center).map(|(a, c)| a - c).collect();
                let norm = l2(&d);
                if norm <= *radius {
                    x.to_vec()
                } else {
                    let scale = radius / norm;
                    center
                        .iter()
                        .zip(&d)
                        .map(|(c, di)| c + scale * di)
                        .collect()
                }
            }
        }
    }

    /// Draw a feasible point. Uniform on the simplex; coordinate-uniform in
    /// the box; uniform in the ball.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        match self {
            FeasibleSet::Simplex { dim } => {
                // Exponential spacings normalized to sum 1.
                let e: Vec<f64> = (0..*dim)
                    .map(|_| -(1.0 - rng.random::<f64>()).ln())
                    .collect();
                let total: f64 = e.iter().sum();
                e.iter().map(|v| v / total).collect()
            }
            FeasibleSet::Box { lower, upper } => lower
                .iter()
                .zip(upper)
                .map(|(&l, &u)| l + (u - l) * rng.random::<f64>())
                .collect(),
            FeasibleSet::Ball { center, radius } => {
                let n = center.len();
                let g: Vec<f64> = (0..n)
                    .map(|_| rng.sample::<f64, _>(rand_distr::StandardNormal))
                    .collect();
                let norm = l2(&g).max(f64::MIN_POSITIVE);
                let r = radius * rng.random::<f64>().powf(1.0 / n as f64);
                center
                    .iter()
                    .zip(&g)
                    .map(|(c, gi)| c + r * gi / norm)
                    .collect()
            }
        }
    }
}

/// Sort-based Euclidean projection onto the probability simplex.
fn project_simplex(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut sorted = x.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut cumsum = 0.0;
    let mut theta = 0.0;
    for (k, &v) in sorted.iter().enumerate() {
        cumsum += v;
        let candidate = (cumsum - 1.0) / (k + 1) as f64;
        if v - candidate > 0.0 {
            theta = candidate;
        }
    }
    let mut out: Vec<f64> = x.iter().map(|&v| (v - theta).max(0.0)).collect();
    // Renormalize away the last few ulps so the sum is exact.
    let sum: f64 = out.iter().sum();
    if sum > 0.0 {
        for v in &mut out {
            *v /= sum;
        }
    } else {
        out = vec![1.0 / n as f64; n];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn simplex_membership_is_tight() {
        let s = FeasibleSet::simplex(3);
        assert!(s.contains(&[0.2, 0.3, 0.5]));
        assert!(s.contains(&[1.0, 0.0, 0.0]));
        assert!(!s.contains(&[0.5, 0.5, 0.1]));
        assert!(!s.contains(&[-1e-6, 0.5, 0.5 + 1e-6]));
        // Right at the tolerance boundary.
        assert!(s.contains(&[0.5, 0.5, -1e-12]));
    }

    #[test]
    fn box_and_ball_membership() {
        let b = FeasibleSet::hyper_box(vec![-1.0, -1.0], vec![1.0, 1.0]);
        assert!(b.contains(&[0.0, 1.0]));
        assert!(!b.contains(&[1.2, 0.0]));
        assert_eq!(b.violation(&[1.5, 0.0]), 0.5);

        let ball = FeasibleSet::ball(vec![1.0, 0.0], 2.0);
        assert!(ball.contains(&[3.0, 0.0]));
        assert!(!ball.contains(&[3.1, 0.0]));
    }

    #[test]
    fn projections_land_inside_and_fix_interior_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let sets = [
            FeasibleSet::simplex(5),
            FeasibleSet::hyper_box(vec![-1.0; 4], vec![1.0; 4]),
            FeasibleSet::ball(vec![0.5; 3], 1.5),
        ];
        for set in &sets {
            for _ in 0..500 {
                let y: Vec<f64> = (0..set.dim())
                    .map(|_| rng.random::<f64>() * 8.0 - 4.0)
                    .collect();
                let p = set.project(&y);
                assert!(
                    set.contains(&p),
                    "projection infeasible: {:?} -> {:?}",
                    y,
                    p
                );
                let inside = set.sample(&mut rng);
                let q = set.project(&inside);
                let drift: f64 = inside
                    .iter()
                    .zip(&q)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                assert!(drift <= 1e-12);
            }
        }
    }

    #[test]
    fn samples_are_feasible() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for set in [
            FeasibleSet::simplex(7),
            FeasibleSet::hyper_box(vec![0.0, -2.0], vec![0.5, 2.0]),
            FeasibleSet::ball(vec![0.0; 4], 0.3),
        ] {
            for _ in 0..1000 {
                let x = set.sample(&mut rng);
                assert!(set.contains(&x));
            }
        }
    }

    #[test]
    fn simplex_projection_matches_known_cases() {
        // Already feasible: unchanged.
        let s = FeasibleSet::simplex(2);
        let p = s.project(&[0.25, 0.75]);
        assert!((p[0] - 0.25).abs() < 1e-15 && (p[1] - 0.75).abs() < 1e-15);
        // Symmetric overflow splits evenly.
        let p = s.project(&[2.0, 2.0]);
        assert!((p[0] - 0.5).abs() < 1e-15 && (p[1] - 0.5).abs() < 1e-15);
        // Dominant coordinate takes everything.
        let p = s.project(&[5.0, 0.0]);
        assert!((p[0] - 1.0).abs() < 1e-15 && p[1].abs() < 1e-15);
    }
}
