//! Prox functions: nonnegative strongly convex potentials defining a geometry.

/// The two shipped prox functions.
#[derive(Debug, Clone, PartialEq)]
pub enum ProxKind {
    /// Negative entropy shifted to be zero at the uniform point,
    /// `ln n + sum_i x_i ln x_i`, for use on the simplex.
    Entropic,
    /// Half squared Euclidean distance to a reference point inside the set.
    EuclideanHalfSq { center: Vec<f64> },
}

/// A prox function together with its strong-convexity parameter `alpha`
/// (with respect to the paired primal norm).
///
/// `alpha` is stored, not estimated: it is 1 for the entropic function under
/// the (l1, l-inf) pair and 1 for the Euclidean function under (l2, l2).
#[derive(Debug, Clone, PartialEq)]
pub struct ProxFunction {
    kind: ProxKind,
    alpha: f64,
}

impl ProxFunction {
    pub fn entropic() -> Self {
        ProxFunction {
            kind: ProxKind::Entropic,
            alpha: 1.0,
        }
    }

    pub fn euclidean(center: Vec<f64>) -> Self {
        ProxFunction {
            kind: ProxKind::EuclideanHalfSq { center },
            alpha: 1.0,
        }
    }

    pub fn kind(&self) -> &ProxKind {
        &self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Evaluate the prox function. Nonnegative on the paired set, zero at
    /// the minimizer (uniform point resp. reference point).
    pub fn value(&self, x: &[f64]) -> f64 {
        match &self.kind {
            ProxKind::Entropic => {
                let n = x.len() as f64;
                n.ln() + x.iter().map(|&xi| xlnx(xi)).sum::<f64>()
            }
            ProxKind::EuclideanHalfSq { center } => {
                assert_eq!(x.len(), center.len());
                0.5 * x
                    .iter()
                    .zip(center)
                    .map(|(a, c)| (a - c) * (a - c))
                    .sum::<f64>()
            }
        }
    }
}

/// `x ln x` continuously extended by 0 at x = 0, so the entropy stays finite
/// on the closed simplex.
fn xlnx(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}
