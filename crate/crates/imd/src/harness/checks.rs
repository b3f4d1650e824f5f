//! Fast property suites behind the `check` subcommand: gradient
//! consistency, Lipschitz constants, and feasibility of mirror points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::discrete::{run_algorithm, Algorithm, Schedule};
use crate::geometry::{ConjugatePair, MirrorMap};
use crate::oracles::{StochasticProblem, SubgradientStream};
use crate::vecmath::dot;

/// Which suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Gradients,
    Lipschitz,
    Feasibility,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gradients" => Ok(Suite::Gradients),
            "lipschitz" => Ok(Suite::Lipschitz),
            "feasibility" => Ok(Suite::Feasibility),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite \"{other}\" (expected gradients|lipschitz|feasibility|all)"
            )),
        }
    }
}

/// One line of suite output.
#[derive(Debug, Clone)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckLine {
    fn new(name: &str, pass: bool, detail: String) -> Self {
        CheckLine {
            name: name.to_string(),
            pass,
            detail,
        }
    }
}

/// Run a suite and collect its verdict lines.
pub fn run_suite(suite: Suite) -> Vec<CheckLine> {
    match suite {
        Suite::Gradients => gradients(),
        Suite::Lipschitz => lipschitz(),
        Suite::Feasibility => feasibility(),
        Suite::All => {
            let mut lines = gradients();
            lines.extend(lipschitz());
            lines.extend(feasibility());
            lines
        }
    }
}

fn test_maps() -> Vec<(&'static str, MirrorMap)> {
    vec![
        ("entropic simplex", MirrorMap::entropic_simplex(4)),
        (
            "euclidean box",
            MirrorMap::euclidean_box(vec![-1.0; 4], vec![1.0; 4]),
        ),
        (
            "euclidean ball",
            MirrorMap::euclidean_ball(vec![0.0; 4], 1.5),
        ),
    ]
}

fn gradients() -> Vec<CheckLine> {
    let mut lines = Vec::new();
    let h = 1e-6;
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    for (name, map) in test_maps() {
        let mut worst = 0.0_f64;
        for _ in 0..1000 {
            let beta = 0.5 + 2.5 * rng.random::<f64>();
            let zeta: Vec<f64> = (0..map.dim())
                .map(|_| rng.random::<f64>() * 4.0 - 2.0)
                .collect();
            let grad = map.conjugate_grad(beta, &zeta).unwrap();
            for i in 0..map.dim() {
                let mut zp = zeta.clone();
                let mut zm = zeta.clone();
                zp[i] += h;
                zm[i] -= h;
                let fd = (map.conjugate(beta, &zp).unwrap() - map.conjugate(beta, &zm).unwrap())
                    / (2.0 * h);
                worst = worst.max(((fd - grad[i]) / grad[i].abs().max(1e-3)).abs());
            }
        }
        lines.push(CheckLine::new(
            &format!("gradient fd consistency ({name})"),
            worst <= 1e-5,
            format!("max relative error {worst:.3e} (limit 1e-5)"),
        ));
    }

    for pair in [ConjugatePair::Identity, ConjugatePair::CoshSum] {
        let mut worst = 0.0_f64;
        for _ in 0..500 {
            let zeta: Vec<f64> = (0..4).map(|_| rng.random::<f64>() * 4.0 - 2.0).collect();
            let grad = pair.dual_grad(&zeta);
            for i in 0..4 {
                let mut zp = zeta.clone();
                let mut zm = zeta.clone();
                zp[i] += h;
                zm[i] -= h;
                let fd = (pair.dual_value(&zp) - pair.dual_value(&zm)) / (2.0 * h);
                worst = worst.max((fd - grad[i]).abs() / grad[i].abs().max(1.0));
            }
        }
        lines.push(CheckLine::new(
            &format!("dual potential gradient ({pair:?})"),
            worst <= 1e-5,
            format!("max relative error {worst:.3e} (limit 1e-5)"),
        ));
    }

    // The conjugate dominates the objective at feasible probes, with
    // equality at the maximizer.
    for (name, map) in test_maps() {
        let mut worst_dom = f64::NEG_INFINITY;
        let mut worst_eq = 0.0_f64;
        for _ in 0..1000 {
            let beta = 0.5 + 2.5 * rng.random::<f64>();
            let zeta: Vec<f64> = (0..map.dim())
                .map(|_| rng.random::<f64>() * 6.0 - 3.0)
                .collect();
            let w = map.conjugate(beta, &zeta).unwrap();
            let x = map.set().sample(&mut rng);
            worst_dom = worst_dom.max(-dot(&zeta, &x) - beta * map.prox().value(&x) - w);
            let p = map.primal_point(beta, &zeta).unwrap();
            worst_eq = worst_eq.max((w - (-dot(&zeta, &p) - beta * map.prox().value(&p))).abs());
        }
        lines.push(CheckLine::new(
            &format!("conjugate domination ({name})"),
            worst_dom <= 1e-10 && worst_eq <= 1e-8,
            format!("max domination excess {worst_dom:.3e}, max equality gap {worst_eq:.3e}"),
        ));
    }
    lines
}

fn lipschitz() -> Vec<CheckLine> {
    let mut lines = Vec::new();
    let cases = [
        (
            "entropic simplex",
            MirrorMap::entropic_simplex(5),
            vec![0.5, 2.0],
        ),
        (
            "euclidean box",
            MirrorMap::euclidean_box(vec![-1.0; 3], vec![1.0; 3]),
            vec![1.0],
        ),
        (
            "euclidean ball",
            MirrorMap::euclidean_ball(vec![0.0; 3], 1.0),
            vec![0.5],
        ),
    ];
    for (name, map, betas) in cases {
        for beta in betas {
            let ratio = map.lipschitz_probe(beta, 10_000, 2024).unwrap();
            let limit = 1.0 / (map.alpha() * beta);
            lines.push(CheckLine::new(
                &format!("lipschitz constant ({name}, beta = {beta})"),
                ratio <= limit * (1.0 + 1e-9),
                format!("max sampled ratio {ratio:.6} vs 1/(alpha beta) = {limit:.6}"),
            ));
        }
    }
    lines
}

fn feasibility() -> Vec<CheckLine> {
    let mut lines = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(3003);
    for (name, map) in test_maps() {
        let mut worst = 0.0_f64;
        for _ in 0..10_000 {
            let beta = 10.0_f64.powf(rng.random::<f64>() * 4.0 - 2.0);
            let zeta: Vec<f64> = (0..map.dim())
                .map(|_| rng.random::<f64>() * 20.0 - 10.0)
                .collect();
            let p = map.primal_point(beta, &zeta).unwrap();
            worst = worst.max(map.set().violation(&p));
        }
        lines.push(CheckLine::new(
            &format!("mirror point feasibility ({name})"),
            worst <= 1e-12,
            format!("max violation {worst:.3e} (limit 1e-12)"),
        ));
    }

    // Short driven runs keep every iterate feasible.
    let simplex_problem =
        StochasticProblem::linear_on_simplex(vec![-0.5, -0.1, 0.2, 0.5], 0.5).unwrap();
    let box_problem = StochasticProblem::quadratic_noise(
        vec![0.2, -0.3, 0.0],
        0.5,
        crate::geometry::FeasibleSet::hyper_box(vec![-1.0; 3], vec![1.0; 3]),
    )
    .unwrap();
    let runs: Vec<(&str, StochasticProblem, MirrorMap)> = vec![
        (
            "inertial run on the simplex",
            simplex_problem,
            MirrorMap::entropic_simplex(4),
        ),
        (
            "inertial run on a box",
            box_problem,
            MirrorMap::euclidean_box(vec![-1.0; 3], vec![1.0; 3]),
        ),
    ];
    for (name, problem, map) in runs {
        let schedule = Schedule::canonical(1.0).unwrap();
        let mut stream = SubgradientStream::new(&problem, 99);
        let samples = run_algorithm(
            &Algorithm::Inertial,
            &problem,
            &map,
            &schedule,
            500,
            &[100, 500],
            &mut stream,
        )
        .unwrap();
        let worst = samples
            .iter()
            .map(|s| s.feasibility_violation)
            .fold(0.0, f64::max);
        lines.push(CheckLine::new(
            name,
            worst <= 1e-12,
            format!("max violation over 500 iterates {worst:.3e} (limit 1e-12)"),
        ));
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for line in run_suite(Suite::All) {
            assert!(line.pass, "{}: {}", line.name, line.detail);
        }
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("gradients".parse::<Suite>().unwrap(), Suite::Gradients);
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }
}
