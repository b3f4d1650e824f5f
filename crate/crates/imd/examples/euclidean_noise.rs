//! Noisy quadratic on a box, driven through the experiment harness: builds
//! the config in memory, runs seeded replications in parallel, and prints
//! the per-checkpoint summary a CLI run would emit.
//!
//! ```bash
//! cargo run --example euclidean_noise
//! ```

use imd::harness::{parse_config, render_summary, run_experiment, summarize};

const CONFIG: &str = r#"
experiment_id = "euclidean-noise"
mode = "discrete"
problem = "quadratic_noise"
geometry = "euclidean_box"
dimension = 5
noise_mean = [0.3, -0.2, 0.5, 0.0, -0.4]
noise_half_width = 0.5
beta0 = "corollary"
horizon = 5000
checkpoints = [10, 100, 1000, 5000]
replications = 100
base_seed = 7
"#;

fn main() {
    let config = parse_config(CONFIG).unwrap();
    println!(
        "quadratic noise on [-1,1]^5: L = {:.4}, beta0 = {:.4}",
        config.stochastic_problem().unwrap().l_bound(),
        config.resolved_beta0().unwrap()
    );
    let records = run_experiment(&config).unwrap();
    let summaries = summarize(&records);
    print!("{}", render_summary(&config.experiment_id, &summaries));

    let worst = records
        .iter()
        .map(|r| r.feasibility_violation)
        .fold(0.0_f64, f64::max);
    println!("\nmax feasibility violation over every iterate: {worst:.3e}");
}
