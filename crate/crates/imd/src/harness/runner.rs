//! Seeded replication runner producing per-checkpoint records.

use std::time::Instant;

use rayon::prelude::*;

use crate::continuous::MuMode;
use crate::discrete::{gap_bound, run_algorithm, Algorithm};
use crate::error::{Error, Result};
use crate::harness::config::{Checkpoints, ExperimentConfig, Mode};
use crate::oracles::SubgradientStream;

/// One CSV row: a checkpoint of one replication, or an aggregate
/// (`run_id = "mean"`) whose gap is the replication mean and whose
/// feasibility violation is the replication maximum.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub run_id: String,
    pub seed: u64,
    pub t: f64,
    pub gap: f64,
    pub bound: f64,
    pub feasibility_violation: f64,
    pub wall_time: f64,
}

/// Execute the configured experiment: `replications` seeded runs
/// (seed `base_seed + r`), recorded at every checkpoint, plus one aggregate
/// row per checkpoint.
///
/// Replications run in parallel on the current rayon pool; records are
/// assembled in replication order, so the output is identical at any
/// concurrency level (wall times aside).
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<RunRecord>> {
    let mut records = match config.mode {
        Mode::Discrete => run_discrete(config)?,
        Mode::Continuous => run_continuous(config)?,
    };
    records.extend(aggregate(&records, config));
    records.sort_by(|a, b| a.run_id.cmp(&b.run_id).then(a.t.partial_cmp(&b.t).unwrap()));
    Ok(records)
}

fn run_discrete(config: &ExperimentConfig) -> Result<Vec<RunRecord>> {
    let problem = config.stochastic_problem()?;
    let map = config.mirror_map()?;
    let schedule = config.schedule()?;
    let params = config.bound_params()?;
    let algorithm = config.algorithm();
    let Checkpoints::Steps(checkpoints) = &config.checkpoints else {
        return Err(Error::ConfigInvalid(
            "discrete mode needs step checkpoints".into(),
        ));
    };
    // Only the inertial recursion carries the expected-gap certificate.
    let certified = matches!(algorithm, Algorithm::Inertial);

    let per_rep: Vec<Vec<RunRecord>> = (0..config.replications)
        .into_par_iter()
        .map(|r| -> Result<Vec<RunRecord>> {
            let run_id = format!("{r:04}");
            let seed = config.base_seed.wrapping_add(r as u64);
            let started = Instant::now();
            let mut stream = SubgradientStream::new(&problem, seed);
            let samples = run_algorithm(
                &algorithm,
                &problem,
                &map,
                &schedule,
                config.horizon,
                checkpoints,
                &mut stream,
            )
            .map_err(|e| Error::RunFailed {
                run_id: run_id.clone(),
                source: Box::new(e),
            })?;
            let wall_time = started.elapsed().as_secs_f64();
            Ok(samples
                .into_iter()
                .map(|s| RunRecord {
                    run_id: run_id.clone(),
                    seed,
                    t: s.t as f64,
                    gap: s.gap,
                    bound: if certified {
                        gap_bound(s.t, &params)
                    } else {
                        f64::INFINITY
                    },
                    feasibility_violation: s.feasibility_violation,
                    wall_time,
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(per_rep.into_iter().flatten().collect())
}

fn run_continuous(config: &ExperimentConfig) -> Result<Vec<RunRecord>> {
    let system = config.continuous_system()?;
    let Checkpoints::Times(checkpoints) = &config.checkpoints else {
        return Err(Error::ConfigInvalid(
            "continuous mode needs time checkpoints".into(),
        ));
    };
    let started = Instant::now();
    let traj = system.integrate(config.t_end, config.dt, config.t_start_offset)?;
    let wall_time = started.elapsed().as_secs_f64();
    let v_star = system.pair.primal_value(&system.problem.x_star());
    let linear = matches!(system.mu, MuMode::Linear);
    // The gap certificate V(x*)/t holds for the linear inertia profile;
    // other modes carry no rate and report an unbounded threshold.
    Ok(checkpoints
        .iter()
        .map(|&cp| {
            let k = traj.index_at(cp);
            let t = traj.times()[k];
            RunRecord {
                run_id: "0000".into(),
                seed: config.base_seed,
                t,
                gap: traj.gap_path()[k],
                bound: if linear && t > 0.0 {
                    v_star / t
                } else {
                    f64::INFINITY
                },
                feasibility_violation: 0.0,
                wall_time,
            }
        })
        .collect())
}

/// Build the aggregate rows: per checkpoint, the mean gap over replications
/// (accumulated in replication order), the shared bound, the worst
/// feasibility violation, and the summed wall time.
fn aggregate(records: &[RunRecord], config: &ExperimentConfig) -> Vec<RunRecord> {
    let mut times: Vec<f64> = Vec::new();
    for r in records {
        if !times.contains(&r.t) {
            times.push(r.t);
        }
    }
    times.sort_by(|a, b| a.partial_cmp(b).unwrap());
    times
        .iter()
        .map(|&t| {
            let rows: Vec<&RunRecord> = records.iter().filter(|r| r.t == t).collect();
            let n = rows.len() as f64;
            RunRecord {
                run_id: "mean".into(),
                seed: config.base_seed,
                t,
                gap: rows.iter().map(|r| r.gap).sum::<f64>() / n,
                bound: rows[0].bound,
                feasibility_violation: rows
                    .iter()
                    .map(|r| r.feasibility_violation)
                    .fold(0.0, f64::max),
                wall_time: rows.iter().map(|r| r.wall_time).sum(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::config::parse_config;

    fn tiny_discrete() -> ExperimentConfig {
        parse_config(
            r#"
experiment_id = "tiny"
mode = "discrete"
problem = "linear_loss"
geometry = "entropic_simplex"
dimension = 4
horizon = 50
checkpoints = [10, 50]
replications = 5
base_seed = 7
"#,
        )
        .unwrap()
    }

    #[test]
    fn record_counts_and_ordering() {
        let config = tiny_discrete();
        let records = run_experiment(&config).unwrap();
        // replications x checkpoints + checkpoints aggregates
        assert_eq!(records.len(), 5 * 2 + 2);
        // Canonical order: by run id then t, aggregates last.
        let ids: Vec<&str> = records.iter().map(|r| r.run_id.as_str()).collect();
        assert_eq!(ids[0], "0000");
        assert_eq!(ids[ids.len() - 1], "mean");
        let mut sorted = records.clone();
        sorted.sort_by(|a, b| a.run_id.cmp(&b.run_id).then(a.t.partial_cmp(&b.t).unwrap()));
        assert_eq!(records, sorted);
    }

    #[test]
    fn aggregates_mean_the_replications() {
        let config = tiny_discrete();
        let records = run_experiment(&config).unwrap();
        let t = 50.0;
        let mean_row = records
            .iter()
            .find(|r| r.run_id == "mean" && r.t == t)
            .unwrap();
        let gaps: Vec<f64> = records
            .iter()
            .filter(|r| r.run_id != "mean" && r.t == t)
            .map(|r| r.gap)
            .collect();
        assert_eq!(gaps.len(), 5);
        let mean = gaps.iter().sum::<f64>() / 5.0;
        assert!((mean_row.gap - mean).abs() < 1e-15);
    }

    #[test]
    fn deterministic_across_runs_and_thread_counts() {
        let config = tiny_discrete();
        let strip = |rs: Vec<RunRecord>| -> Vec<(String, u64, f64, f64, f64, f64)> {
            rs.into_iter()
                .map(|r| {
                    (
                        r.run_id,
                        r.seed,
                        r.t,
                        r.gap,
                        r.bound,
                        r.feasibility_violation,
                    )
                })
                .collect()
        };
        let a = strip(run_experiment(&config).unwrap());
        let b = strip(run_experiment(&config).unwrap());
        assert_eq!(a, b);
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let c = strip(single.install(|| run_experiment(&config)).unwrap());
        assert_eq!(a, c);
        let quad = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let d = strip(quad.install(|| run_experiment(&config)).unwrap());
        assert_eq!(a, d);
    }

    #[test]
    fn single_replication_zero_noise_mean_equals_the_run() {
        let config = parse_config(
            r#"
experiment_id = "zero-noise"
mode = "discrete"
problem = "linear_loss"
geometry = "entropic_simplex"
dimension = 3
noise_half_width = 0.0
horizon = 20
checkpoints = [20]
replications = 1
"#,
        )
        .unwrap();
        let records = run_experiment(&config).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].gap, records[1].gap);
    }

    #[test]
    fn seeds_offset_from_base() {
        let config = tiny_discrete();
        let records = run_experiment(&config).unwrap();
        for r in &records {
            if r.run_id != "mean" {
                let idx: u64 = r.run_id.parse().unwrap();
                assert_eq!(r.seed, 7 + idx);
            }
        }
    }

    #[test]
    fn continuous_run_records_make_sense() {
        let config = parse_config(
            r#"
experiment_id = "flow"
mode = "continuous"
problem = "quadratic"
dimension = 2
matrix_diag = [1.0, 2.0]
x_star = [0.6, -0.8]
t_end = 5.0
checkpoints = [1.0, 5.0]
"#,
        )
        .unwrap();
        let records = run_experiment(&config).unwrap();
        assert_eq!(records.len(), 4);
        for r in &records {
            if r.run_id == "mean" {
                continue;
            }
            // Gap certificate holds in the linear mode.
            assert!(
                r.gap <= r.bound * (1.0 + 1e-3),
                "gap {} bound {}",
                r.gap,
                r.bound
            );
            assert_eq!(r.feasibility_violation, 0.0);
        }
        // Recorded times sit on the grid near the requested checkpoints.
        assert!((records[0].t - 1.0).abs() < 1e-3);
    }

    #[test]
    fn baseline_records_have_no_certificate() {
        let mut config = tiny_discrete();
        config.algorithm = crate::harness::config::AlgorithmKind::DualAveraging;
        config.validate().unwrap();
        let records = run_experiment(&config).unwrap();
        assert!(records.iter().all(|r| r.bound.is_infinite()));
    }
}
