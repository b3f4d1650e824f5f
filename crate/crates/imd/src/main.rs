//! Command-line front end: run experiments, property suites, beta0 sweeps,
//! and re-summaries of existing CSV files.
//!
//! Exit codes: 0 on success, 1 when a bound or property check fails,
//! 2 on usage or configuration errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use imd::harness::{self, config::Beta0Spec, load_config, run_suite, summarize, write_csv, Suite};

#[derive(Parser)]
#[command(name = "imd", version, about = "Inertial mirror descent experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment from a config file and write its CSV report.
    Run {
        /// Path to the experiment config.
        #[arg(long)]
        config: PathBuf,
        /// Output directory (overrides the config's output_path).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the replication count.
        #[arg(long)]
        replications: Option<usize>,
        /// Override the base seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads for replications (0 = rayon default).
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Run fast property suites (gradients, Lipschitz constants, feasibility).
    Check {
        /// Suite to run: gradients | lipschitz | feasibility | all.
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
    },
    /// Re-run an experiment over a grid of beta0 values.
    Sweep {
        /// Path to the experiment config.
        #[arg(long)]
        config: PathBuf,
        /// Comma-separated beta0 values, e.g. "0.5,1.0,2.0".
        #[arg(long)]
        beta0: String,
        /// Output directory (overrides the config's output_path).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summarize an existing CSV report.
    Report {
        /// Path to a CSV file produced by `run`.
        #[arg(long = "in")]
        input: PathBuf,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> imd::Result<ExitCode> {
    match cli.command {
        Command::Run {
            config,
            out,
            replications,
            seed,
            threads,
        } => {
            let mut cfg = load_config(&config)?;
            if let Some(out) = out {
                cfg.output_path = out;
            }
            if let Some(r) = replications {
                cfg.replications = r;
            }
            if let Some(s) = seed {
                cfg.base_seed = s;
            }
            cfg.validate()?;
            let records = run_with_threads(&cfg, threads)?;
            let path = cfg.output_path.join(format!("{}.csv", cfg.experiment_id));
            write_csv(&records, &path)?;
            let summaries = summarize(&records);
            print!(
                "{}",
                harness::render_summary(&cfg.experiment_id, &summaries)
            );
            println!("wrote {}", path.display());
            Ok(exit_for(harness::all_pass(&summaries)))
        }
        Command::Check { suite } => {
            let lines = run_suite(suite);
            let mut ok = true;
            for line in &lines {
                println!(
                    "{}  {} -- {}",
                    if line.pass { "PASS" } else { "FAIL" },
                    line.name,
                    line.detail
                );
                ok &= line.pass;
            }
            Ok(exit_for(ok))
        }
        Command::Sweep { config, beta0, out } => {
            let mut cfg = load_config(&config)?;
            if let Some(out) = out {
                cfg.output_path = out;
            }
            let values: Vec<f64> = beta0
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<f64>()
                        .map_err(|_| imd::Error::ConfigInvalid(format!("bad beta0 value `{s}`")))
                })
                .collect::<imd::Result<_>>()?;
            if values.is_empty() {
                return Err(imd::Error::ConfigInvalid("empty beta0 list".into()));
            }
            let mut ok = true;
            let mut csv = String::from("beta0,t,mean_gap,bound,ratio\n");
            println!(
                "{:>10}  {:>12}  {:>14}  {:>14}  {:>8}  result",
                "beta0", "t", "mean gap", "bound", "ratio"
            );
            for b0 in values {
                let mut swept = cfg.clone();
                swept.beta0 = Beta0Spec::Explicit(b0);
                swept.validate()?;
                let records = harness::run_experiment(&swept)?;
                for s in summarize(&records) {
                    println!(
                        "{:>10}  {:>12}  {:>14.6e}  {:>14.6e}  {:>8.4}  {}",
                        b0,
                        s.t,
                        s.mean_gap,
                        s.bound,
                        s.ratio,
                        if s.pass { "PASS" } else { "FAIL" }
                    );
                    csv.push_str(&format!(
                        "{},{},{},{},{}\n",
                        b0, s.t, s.mean_gap, s.bound, s.ratio
                    ));
                    ok &= s.pass;
                }
            }
            let path = cfg
                .output_path
                .join(format!("{}_sweep.csv", cfg.experiment_id));
            if let Some(parent) = path.parent() {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(&path, csv)?;
            println!("wrote {}", path.display());
            Ok(exit_for(ok))
        }
        Command::Report { input } => {
            let records = harness::read_csv(&input)?;
            let summaries = summarize(&records);
            print!(
                "{}",
                harness::render_summary(&input.display().to_string(), &summaries)
            );
            Ok(exit_for(harness::all_pass(&summaries)))
        }
    }
}

fn run_with_threads(
    cfg: &harness::ExperimentConfig,
    threads: usize,
) -> imd::Result<Vec<harness::RunRecord>> {
    if threads == 0 {
        harness::run_experiment(cfg)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| imd::Error::InvalidParameter(e.to_string()))?;
        pool.install(|| harness::run_experiment(cfg))
    }
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
