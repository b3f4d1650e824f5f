//! Deterministic test problems with exact gradients, minimizers, and values.

use crate::error::{Error, Result};
use crate::vecmath::dot;

/// A convex problem whose gradient, minimizer, and minimum are known in
/// closed form.
#[derive(Debug, Clone, PartialEq)]
pub enum DeterministicProblem {
    /// `f(x) = (x - x*)' A (x - x*) / 2` with `A` symmetric positive
    /// definite (row-major). Minimum 0 at `x*`.
    Quadratic { matrix: Vec<f64>, x_star: Vec<f64> },
    /// `f(x) = <cost, x>` over the simplex. The minimizer is the vertex of
    /// the smallest cost coordinate (first such index on ties).
    LinearOverSimplex { cost: Vec<f64> },
}

impl DeterministicProblem {
    /// Quadratic with a full symmetric matrix, row-major, `n * n` entries.
    pub fn quadratic(matrix: Vec<f64>, x_star: Vec<f64>) -> Result<Self> {
        let n = x_star.len();
        if matrix.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "matrix has {} entries, expected {}",
                matrix.len(),
                n * n
            )));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if (matrix[i * n + j] - matrix[j * n + i]).abs() > 1e-12 {
                    return Err(Error::InvalidParameter("matrix must be symmetric".into()));
                }
            }
        }
        Ok(DeterministicProblem::Quadratic { matrix, x_star })
    }

    /// Quadratic with a diagonal matrix of strictly positive curvatures.
    pub fn quadratic_diag(diag: Vec<f64>, x_star: Vec<f64>) -> Result<Self> {
        if diag.len() != x_star.len() {
            return Err(Error::InvalidParameter(
                "diag and x_star lengths differ".into(),
            ));
        }
        if diag.iter().any(|&d| d <= 0.0) {
            return Err(Error::InvalidParameter(
                "curvatures must be positive".into(),
            ));
        }
        let n = diag.len();
        let mut matrix = vec![0.0; n * n];
        for (i, d) in diag.iter().enumerate() {
            matrix[i * n + i] = *d;
        }
        Ok(DeterministicProblem::Quadratic { matrix, x_star })
    }

    pub fn linear_over_simplex(cost: Vec<f64>) -> Self {
        assert!(!cost.is_empty());
        DeterministicProblem::LinearOverSimplex { cost }
    }

    pub fn dim(&self) -> usize {
        match self {
            DeterministicProblem::Quadratic { x_star, .. } => x_star.len(),
            DeterministicProblem::LinearOverSimplex { cost } => cost.len(),
        }
    }

    pub fn f(&self, x: &[f64]) -> f64 {
        match self {
            DeterministicProblem::Quadratic { matrix, x_star } => {
                let d: Vec<f64> = x.iter().zip(x_star).map(|(a, b)| a - b).collect();
                0.5 * dot(&d, &mat_vec(matrix, &d))
            }
            DeterministicProblem::LinearOverSimplex { cost } => dot(cost, x),
        }
    }

    pub fn grad_f(&self, x: &[f64]) -> Vec<f64> {
        match self {
            DeterministicProblem::Quadratic { matrix, x_star } => {
                let d: Vec<f64> = x.iter().zip(x_star).map(|(a, b)| a - b).collect();
                mat_vec(matrix, &d)
            }
            DeterministicProblem::LinearOverSimplex { cost } => cost.clone(),
        }
    }

    pub fn f_star(&self) -> f64 {
        match self {
            DeterministicProblem::Quadratic { .. } => 0.0,
            DeterministicProblem::LinearOverSimplex { cost } => {
                cost.iter().cloned().fold(f64::INFINITY, f64::min)
            }
        }
    }

    pub fn x_star(&self) -> Vec<f64> {
        match self {
            DeterministicProblem::Quadratic { x_star, .. } => x_star.clone(),
            DeterministicProblem::LinearOverSimplex { cost } => {
                let mut best = 0;
                for (i, c) in cost.iter().enumerate() {
                    if *c < cost[best] {
                        best = i;
                    }
                }
                let mut v = vec![0.0; cost.len()];
                v[best] = 1.0;
                v
            }
        }
    }

    pub fn gap(&self, x: &[f64]) -> f64 {
        self.f(x) - self.f_star()
    }
}

fn mat_vec(matrix: &[f64], v: &[f64]) -> Vec<f64> {
    let n = v.len();
    (0..n)
        .map(|i| dot(&matrix[i * n..(i + 1) * n], v))
        .collect()
}
