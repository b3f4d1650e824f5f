//! The inertial method against classic baselines on the same noisy
//! quadratic: plain dual averaging (inertia removed), projected stochastic
//! subgradient, and projected heavy ball. All runs share seeds and
//! geometry; only the update rule differs.
//!
//! ```bash
//! cargo run --example baselines
//! ```

use imd::discrete::{run_algorithm, tuned_beta0, Algorithm, Schedule};
use imd::geometry::{FeasibleSet, MirrorMap};
use imd::oracles::{StochasticProblem, SubgradientStream};

fn main() {
    let mean = vec![0.3, -0.2, 0.5, 0.0, -0.4];
    let problem = StochasticProblem::quadratic_noise(
        mean,
        0.5,
        FeasibleSet::hyper_box(vec![-1.0; 5], vec![1.0; 5]),
    )
    .unwrap();
    let map = MirrorMap::euclidean_box(vec![-1.0; 5], vec![1.0; 5]);
    let beta0 = tuned_beta0(problem.l_bound(), map.alpha(), map.prox_max());
    let schedule = Schedule::canonical(beta0).unwrap();

    let algorithms: Vec<(&str, Algorithm)> = vec![
        ("inertial", Algorithm::Inertial),
        ("dual averaging", Algorithm::DualAveraging),
        (
            "projected subgradient",
            Algorithm::ProjectedSubgradient { eta0: None },
        ),
        (
            "heavy ball (m = 0.9)",
            Algorithm::HeavyBall {
                eta: None,
                momentum: 0.9,
            },
        ),
    ];
    let checkpoints = [10, 100, 1000, 5000];
    let replications = 50;

    println!("mean last-iterate gap over {replications} shared-seed replications");
    println!(
        "{:>24}  {:>10}  {:>10}  {:>10}  {:>10}",
        "algorithm", "t=10", "t=100", "t=1000", "t=5000"
    );
    for (name, algorithm) in algorithms {
        let mut means = [0.0_f64; 4];
        for r in 0..replications {
            let mut stream = SubgradientStream::new(&problem, 1000 + r);
            let samples = run_algorithm(
                &algorithm,
                &problem,
                &map,
                &schedule,
                5000,
                &checkpoints,
                &mut stream,
            )
            .unwrap();
            for (m, s) in means.iter_mut().zip(&samples) {
                *m += s.gap;
            }
        }
        for m in &mut means {
            *m /= replications as f64;
        }
        println!(
            "{name:>24}  {:>10.6}  {:>10.6}  {:>10.6}  {:>10.6}",
            means[0], means[1], means[2], means[3]
        );
    }
}
