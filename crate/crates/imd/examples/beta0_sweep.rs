//! Sensitivity to the initial regularization scale: sweep beta0 across two
//! decades on the expert-weighting problem and compare the final mean gap
//! with the per-beta0 certificate. The tuned value `L / sqrt(v_bar)` sits
//! near the best of the grid.
//!
//! ```bash
//! cargo run --example beta0_sweep
//! ```

use imd::harness::{parse_config, run_experiment, summarize, Beta0Spec};

const CONFIG: &str = r#"
experiment_id = "sweep-demo"
mode = "discrete"
problem = "linear_loss"
geometry = "entropic_simplex"
dimension = 10
noise_half_width = 0.5
horizon = 2000
checkpoints = [2000]
replications = 50
base_seed = 3
"#;

fn main() {
    let base = parse_config(CONFIG).unwrap();
    let tuned = base.resolved_beta0().unwrap();
    println!("tuned beta0 = {tuned:.4}; sweeping a grid around it\n");
    println!(
        "{:>8}  {:>12}  {:>12}  {:>8}",
        "beta0", "mean gap", "bound", "ratio"
    );
    for scale in [0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0] {
        let mut config = base.clone();
        config.beta0 = Beta0Spec::Explicit(tuned * scale);
        config.validate().unwrap();
        let records = run_experiment(&config).unwrap();
        let s = &summarize(&records)[0];
        println!(
            "{:>8.4}  {:>12.6}  {:>12.6}  {:>8.4}{}",
            tuned * scale,
            s.mean_gap,
            s.bound,
            s.ratio,
            if scale == 1.0 { "   <- tuned" } else { "" }
        );
    }
}
