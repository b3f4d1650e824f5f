//! Closed-form expected-gap bounds for the canonical schedule.

use crate::error::{Error, Result};

/// Constants entering the expected-gap bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParams {
    /// Initial regularization scale.
    pub beta0: f64,
    /// Prox value at the minimizer, `V(x*)`.
    pub v_at_xstar: f64,
    /// Any upper bound on `V(x*)`, e.g. the maximum of `V` over the set.
    pub v_bar: f64,
    /// Second-moment constant of the subgradient oracle.
    pub l: f64,
    /// Strong-convexity parameter of the prox function.
    pub alpha: f64,
}

impl BoundParams {
    pub fn new(beta0: f64, v_at_xstar: f64, v_bar: f64, l: f64, alpha: f64) -> Result<Self> {
        for (name, v) in [
            ("beta0", beta0),
            ("v_at_xstar", v_at_xstar),
            ("v_bar", v_bar),
            ("l", l),
            ("alpha", alpha),
        ] {
            if v.is_nan() || v <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be strictly positive, got {v}"
                )));
            }
        }
        if v_at_xstar > v_bar {
            return Err(Error::InvalidParameter(format!(
                "v_at_xstar ({v_at_xstar}) exceeds v_bar ({v_bar})"
            )));
        }
        Ok(BoundParams {
            beta0,
            v_at_xstar,
            v_bar,
            l,
            alpha,
        })
    }
}

/// Expected-gap bound after `t >= 1` steps of the canonical schedule:
///
/// ```text
/// (beta0 * V(x*) + L^2 / (alpha * beta0)) * sqrt(t + 2) / (t + 1)
/// ```
///
/// Strictly decreasing in `t`.
pub fn gap_bound(t: usize, p: &BoundParams) -> f64 {
    assert!(t >= 1);
    let lead = p.beta0 * p.v_at_xstar + p.l * p.l / (p.alpha * p.beta0);
    lead * ((t + 2) as f64).sqrt() / ((t + 1) as f64)
}

/// The `beta0` minimizing [`gap_bound`] when only the upper bound
/// `v_bar >= V(x*)` is known: `L / sqrt(alpha * v_bar)`. With
/// `v_at_xstar = v_bar` the bound becomes
/// `2 L sqrt(v_bar / alpha) * sqrt(t + 2) / (t + 1)`.
pub fn tuned_beta0(l: f64, alpha: f64, v_bar: f64) -> f64 {
    assert!(l > 0.0 && alpha > 0.0 && v_bar > 0.0);
    l / (alpha * v_bar).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_params() -> BoundParams {
        BoundParams::new(1.0, 1.0, 1.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn bound_at_one_step_with_unit_constants() {
        // (1 + 1) * sqrt(3) / 2 = sqrt(3)
        let b = gap_bound(1, &unit_params());
        assert!((b - 3.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn bound_is_strictly_decreasing() {
        let p = BoundParams::new(0.7, 0.4, 1.3, 2.0, 1.0).unwrap();
        let mut prev = gap_bound(1, &p);
        for t in 2..2000 {
            let b = gap_bound(t, &p);
            assert!(b < prev, "not decreasing at t = {t}");
            prev = b;
        }
    }

    #[test]
    fn asymptotic_inverse_sqrt_rate() {
        let p = unit_params();
        let ratio = gap_bound(400, &p) / gap_bound(100, &p);
        assert!((ratio - 0.5).abs() < 0.01, "ratio {ratio}");
    }

    #[test]
    fn tuned_beta0_values_and_optimality() {
        assert_eq!(tuned_beta0(1.0, 1.0, 1.0), 1.0);
        assert_eq!(tuned_beta0(2.0, 1.0, 4.0), 1.0);
        // Grid search over beta0 at v_at_xstar = v_bar confirms the optimum
        // and the closed-form optimal value.
        let (l, alpha, v_bar) = (1.7, 1.0, 0.9);
        let best = tuned_beta0(l, alpha, v_bar);
        let t = 50;
        let at = |b0: f64| gap_bound(t, &BoundParams::new(b0, v_bar, v_bar, l, alpha).unwrap());
        let opt = at(best);
        let expected =
            2.0 * l * (v_bar / alpha).sqrt() * (t as f64 + 2.0).sqrt() / (t as f64 + 1.0);
        assert!((opt - expected).abs() < 1e-12);
        let mut b0 = 0.05;
        while b0 < 20.0 {
            assert!(at(b0) >= opt - 1e-12);
            b0 += 0.05;
        }
    }

    #[test]
    fn corollary_bound_scales_linearly_in_l() {
        let (alpha, v_bar, t) = (1.0, 2.0, 17);
        let base = {
            let l = 0.8;
            gap_bound(
                t,
                &BoundParams::new(tuned_beta0(l, alpha, v_bar), v_bar, v_bar, l, alpha).unwrap(),
            )
        };
        for c in [2.0, 5.0, 11.0] {
            let l = 0.8 * c;
            let scaled = gap_bound(
                t,
                &BoundParams::new(tuned_beta0(l, alpha, v_bar), v_bar, v_bar, l, alpha).unwrap(),
            );
            assert!((scaled - c * base).abs() <= 1e-12 * scaled.abs());
        }
    }

    #[test]
    fn params_validation() {
        assert!(BoundParams::new(1.0, 2.0, 1.0, 1.0, 1.0).is_err());
        assert!(BoundParams::new(-1.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(BoundParams::new(1.0, 1.0, 1.0, 0.0, 1.0).is_err());
    }
}
