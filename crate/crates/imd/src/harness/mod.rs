//! Experiment harness: configuration, seeded replication runs, CSV
//! reports, and fast property suites. The `imd` binary is a thin front end
//! over this module.

mod checks;
pub mod config;
mod report;
mod runner;

pub use checks::{run_suite, CheckLine, Suite};
pub use config::{load_config, parse_config, Beta0Spec, ExperimentConfig};
pub use report::{
    all_pass, read_csv, render_summary, summarize, to_csv, write_csv, CheckpointSummary, CSV_HEADER,
};
pub use runner::{run_experiment, RunRecord};
