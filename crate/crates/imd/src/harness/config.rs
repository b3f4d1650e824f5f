//! Experiment configuration: a flat `key = value` document (TOML scalars
//! and arrays, no nested tables), parsed strictly.
//!
//! # Schema
//!
//! | key | type | applies to | default |
//! |-----|------|------------|---------|
//! | `experiment_id` | string | all | required |
//! | `mode` | `"discrete"` \| `"continuous"` | all | required |
//! | `problem` | `"linear_loss"` \| `"quadratic_noise"` \| `"quadratic"` | all | required |
//! | `dimension` | integer | all | required |
//! | `algorithm` | `"inertial"` \| `"dual_averaging"` \| `"projected_subgradient"` \| `"heavy_ball"` | discrete | `"inertial"` |
//! | `geometry` | `"entropic_simplex"` \| `"euclidean_box"` \| `"euclidean_ball"` | discrete | required |
//! | `box_lower`, `box_upper` | float | euclidean_box | -1, 1 |
//! | `ball_radius` | float | euclidean_ball | 1 |
//! | `cost_center` | float array | linear_loss | evenly spaced in [-0.5, 0.5] |
//! | `noise_mean` | float array | quadratic_noise | zeros |
//! | `noise_half_width` | float | linear_loss, quadratic_noise | 0.5 |
//! | `matrix_diag` | float array | quadratic | ones |
//! | `x_star` | float array | quadratic | required |
//! | `conjugate` | `"identity"` \| `"cosh_sum"` | continuous | `"identity"` |
//! | `mu_mode` | `"linear"` \| `"constant"` \| `"zero"` | continuous | `"linear"` |
//! | `mu` | float | continuous, constant mode | 1 |
//! | `beta0` | float \| `"corollary"` | discrete | `"corollary"` |
//! | `horizon` | integer | discrete | required |
//! | `t_end` | float | continuous | required |
//! | `dt` | float | continuous | 1e-3 |
//! | `t_start_offset` | float | continuous | 1e-4 |
//! | `checkpoints` | number array | all | `[horizon]` / `[t_end]` |
//! | `replications` | integer | all | 100 (discrete), 1 (continuous) |
//! | `base_seed` | integer | all | 0 |
//! | `output_path` | string | all | `"out"` |
//! | `eta0` | float | projected_subgradient | `1 / L` |
//! | `eta` | float | heavy_ball | decaying `1 / (L sqrt(t))` |
//! | `momentum` | float | heavy_ball | 0.9 |
//!
//! Unknown keys are rejected. `beta0 = "corollary"` resolves to
//! `L / sqrt(alpha * v_bar)` with `v_bar` the maximum of the prox function
//! over the feasible set.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use crate::continuous::{ContinuousSystem, MuMode};
use crate::discrete::{tuned_beta0, Algorithm, BoundParams, Schedule};
use crate::error::{Error, Result};
use crate::geometry::{ConjugatePair, FeasibleSet, MirrorMap};
use crate::oracles::{DeterministicProblem, StochasticProblem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Discrete,
    Continuous,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    LinearLoss,
    QuadraticNoise,
    Quadratic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryKind {
    EntropicSimplex,
    EuclideanBox,
    EuclideanBall,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Beta0Spec {
    Explicit(f64),
    /// Resolve to the bound-minimizing value `L / sqrt(alpha * v_bar)`.
    Corollary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgorithmKind {
    Inertial,
    DualAveraging,
    ProjectedSubgradient,
    HeavyBall,
}

/// Checkpoints, in the unit of the mode (steps or times).
#[derive(Debug, Clone, PartialEq)]
pub enum Checkpoints {
    Steps(Vec<usize>),
    Times(Vec<f64>),
}

/// A fully validated experiment description.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment_id: String,
    pub mode: Mode,
    pub problem: ProblemKind,
    pub geometry: Option<GeometryKind>,
    pub algorithm: AlgorithmKind,
    pub dimension: usize,
    pub box_lower: f64,
    pub box_upper: f64,
    pub ball_radius: f64,
    pub cost_center: Vec<f64>,
    pub noise_mean: Vec<f64>,
    pub noise_half_width: f64,
    pub matrix_diag: Vec<f64>,
    pub x_star: Vec<f64>,
    pub conjugate: ConjugatePair,
    pub mu_mode: MuMode,
    pub beta0: Beta0Spec,
    pub horizon: usize,
    pub t_end: f64,
    pub dt: f64,
    pub t_start_offset: f64,
    pub checkpoints: Checkpoints,
    pub replications: usize,
    pub base_seed: u64,
    pub output_path: PathBuf,
    pub eta0: Option<f64>,
    pub eta: Option<f64>,
    pub momentum: f64,
}

/// Strict reader over a flat TOML table: every key must be consumed.
struct KeyReader {
    table: toml::Table,
    used: BTreeSet<String>,
}

impl KeyReader {
    fn new(text: &str) -> Result<Self> {
        let table: toml::Table = text
            .parse()
            .map_err(|e: toml::de::Error| Error::ConfigParse(e.to_string()))?;
        Ok(KeyReader {
            table,
            used: BTreeSet::new(),
        })
    }

    fn get(&mut self, key: &str) -> Option<&toml::Value> {
        let v = self.table.get(key);
        if v.is_some() {
            self.used.insert(key.to_string());
        }
        v
    }

    fn string(&mut self, key: &str) -> Result<Option<String>> {
        match self.get(key) {
            None => Ok(None),
            Some(toml::Value::String(s)) => Ok(Some(s.clone())),
            Some(other) => Err(invalid(key, "a string", other)),
        }
    }

    fn float(&mut self, key: &str) -> Result<Option<f64>> {
        match self.get(key) {
            None => Ok(None),
            Some(toml::Value::Float(f)) => Ok(Some(*f)),
            Some(toml::Value::Integer(i)) => Ok(Some(*i as f64)),
            Some(other) => Err(invalid(key, "a number", other)),
        }
    }

    fn integer(&mut self, key: &str) -> Result<Option<i64>> {
        match self.get(key) {
            None => Ok(None),
            Some(toml::Value::Integer(i)) => Ok(Some(*i)),
            Some(other) => Err(invalid(key, "an integer", other)),
        }
    }

    fn float_array(&mut self, key: &str) -> Result<Option<Vec<f64>>> {
        match self.get(key) {
            None => Ok(None),
            Some(toml::Value::Array(items)) => {
                let mut out = Vec::with_capacity(items.len());
                for item in items {
                    match item {
                        toml::Value::Float(f) => out.push(*f),
                        toml::Value::Integer(i) => out.push(*i as f64),
                        other => return Err(invalid(key, "an array of numbers", other)),
                    }
                }
                Ok(Some(out))
            }
            Some(other) => Err(invalid(key, "an array of numbers", other)),
        }
    }

    fn finish(self) -> Result<()> {
        for key in self.table.keys() {
            if !self.used.contains(key) {
                return Err(Error::ConfigInvalid(format!("unknown key `{key}`")));
            }
        }
        Ok(())
    }
}

fn invalid(key: &str, expected: &str, got: &toml::Value) -> Error {
    Error::ConfigInvalid(format!("key `{key}` must be {expected}, got `{got}`"))
}

fn required<T>(v: Option<T>, key: &str) -> Result<T> {
    v.ok_or_else(|| Error::ConfigInvalid(format!("missing required key `{key}`")))
}

/// Parse and validate a configuration document.
pub fn parse_config(text: &str) -> Result<ExperimentConfig> {
    let mut r = KeyReader::new(text)?;

    let experiment_id = required(r.string("experiment_id")?, "experiment_id")?;
    if experiment_id.is_empty()
        || !experiment_id
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
    {
        return Err(Error::ConfigInvalid(
            "experiment_id must be nonempty and use only [A-Za-z0-9_-]".into(),
        ));
    }

    let mode = match required(r.string("mode")?, "mode")?.as_str() {
        "discrete" => Mode::Discrete,
        "continuous" => Mode::Continuous,
        other => {
            return Err(Error::ConfigInvalid(format!(
                "mode must be \"discrete\" or \"continuous\", got \"{other}\""
            )))
        }
    };

    let problem = match required(r.string("problem")?, "problem")?.as_str() {
        "linear_loss" => ProblemKind::LinearLoss,
        "quadratic_noise" => ProblemKind::QuadraticNoise,
        "quadratic" => ProblemKind::Quadratic,
        other => return Err(Error::ConfigInvalid(format!("unknown problem \"{other}\""))),
    };

    let dimension = required(r.integer("dimension")?, "dimension")?;
    if dimension < 1 {
        return Err(Error::ConfigInvalid("dimension must be at least 1".into()));
    }
    let dimension = dimension as usize;

    let geometry = match r.string("geometry")?.as_deref() {
        None => None,
        Some("entropic_simplex") => Some(GeometryKind::EntropicSimplex),
        Some("euclidean_box") => Some(GeometryKind::EuclideanBox),
        Some("euclidean_ball") => Some(GeometryKind::EuclideanBall),
        Some(other) => {
            return Err(Error::ConfigInvalid(format!(
                "unknown geometry \"{other}\""
            )))
        }
    };

    let algorithm = match r.string("algorithm")?.as_deref() {
        None => AlgorithmKind::Inertial,
        Some("inertial") => AlgorithmKind::Inertial,
        Some("dual_averaging") => AlgorithmKind::DualAveraging,
        Some("projected_subgradient") => AlgorithmKind::ProjectedSubgradient,
        Some("heavy_ball") => AlgorithmKind::HeavyBall,
        Some(other) => {
            return Err(Error::ConfigInvalid(format!(
                "unknown algorithm \"{other}\""
            )))
        }
    };

    let box_lower = r.float("box_lower")?.unwrap_or(-1.0);
    let box_upper = r.float("box_upper")?.unwrap_or(1.0);
    let ball_radius = r.float("ball_radius")?.unwrap_or(1.0);
    let cost_center = r.float_array("cost_center")?.unwrap_or_else(|| {
        (0..dimension)
            .map(|i| {
                if dimension == 1 {
                    -0.5
                } else {
                    -0.5 + i as f64 / (dimension - 1) as f64
                }
            })
            .collect()
    });
    let noise_mean = r
        .float_array("noise_mean")?
        .unwrap_or_else(|| vec![0.0; dimension]);
    let noise_half_width = r.float("noise_half_width")?.unwrap_or(0.5);
    let matrix_diag = r
        .float_array("matrix_diag")?
        .unwrap_or_else(|| vec![1.0; dimension]);
    let x_star = r.float_array("x_star")?.unwrap_or_default();

    let conjugate = match r.string("conjugate")?.as_deref() {
        None | Some("identity") => ConjugatePair::Identity,
        Some("cosh_sum") => ConjugatePair::CoshSum,
        Some(other) => {
            return Err(Error::ConfigInvalid(format!(
                "unknown conjugate \"{other}\""
            )))
        }
    };

    let mu = r.float("mu")?.unwrap_or(1.0);
    let mu_mode = match r.string("mu_mode")?.as_deref() {
        None | Some("linear") => MuMode::Linear,
        Some("constant") => MuMode::Constant(mu),
        Some("zero") => MuMode::Zero,
        Some(other) => return Err(Error::ConfigInvalid(format!("unknown mu_mode \"{other}\""))),
    };

    let beta0 = match r.get("beta0") {
        None => Beta0Spec::Corollary,
        Some(toml::Value::String(s)) if s == "corollary" => Beta0Spec::Corollary,
        Some(toml::Value::Float(f)) => Beta0Spec::Explicit(*f),
        Some(toml::Value::Integer(i)) => Beta0Spec::Explicit(*i as f64),
        Some(other) => {
            return Err(Error::ConfigInvalid(format!(
                "beta0 must be a positive number or \"corollary\", got `{other}`"
            )))
        }
    };

    let horizon = r.integer("horizon")?.unwrap_or(0).max(0) as usize;
    let t_end = r.float("t_end")?.unwrap_or(0.0);
    let dt = r.float("dt")?.unwrap_or(1e-3);
    let t_start_offset = r.float("t_start_offset")?.unwrap_or(1e-4);

    let raw_checkpoints = r.float_array("checkpoints")?;
    let replications = match r.integer("replications")? {
        Some(n) if n >= 1 => n as usize,
        Some(n) => {
            return Err(Error::ConfigInvalid(format!(
                "replications must be at least 1, got {n}"
            )))
        }
        None => match mode {
            Mode::Discrete => 100,
            Mode::Continuous => 1,
        },
    };
    let base_seed = r.integer("base_seed")?.unwrap_or(0) as u64;
    let output_path = PathBuf::from(r.string("output_path")?.unwrap_or_else(|| "out".into()));
    let eta0 = r.float("eta0")?;
    let eta = r.float("eta")?;
    let momentum = r.float("momentum")?.unwrap_or(0.9);

    r.finish()?;

    let checkpoints = match mode {
        Mode::Discrete => {
            let steps = match raw_checkpoints {
                None => vec![horizon],
                Some(times) => times
                    .iter()
                    .map(|&v| {
                        if v.fract() != 0.0 || v < 0.0 {
                            Err(Error::ConfigInvalid(format!(
                                "discrete checkpoints must be positive integers, got {v}"
                            )))
                        } else {
                            Ok(v as usize)
                        }
                    })
                    .collect::<Result<Vec<_>>>()?,
            };
            Checkpoints::Steps(steps)
        }
        Mode::Continuous => Checkpoints::Times(raw_checkpoints.unwrap_or_else(|| vec![t_end])),
    };

    let config = ExperimentConfig {
        experiment_id,
        mode,
        problem,
        geometry,
        algorithm,
        dimension,
        box_lower,
        box_upper,
        ball_radius,
        cost_center,
        noise_mean,
        noise_half_width,
        matrix_diag,
        x_star,
        conjugate,
        mu_mode,
        beta0,
        horizon,
        t_end,
        dt,
        t_start_offset,
        checkpoints,
        replications,
        base_seed,
        output_path,
        eta0,
        eta,
        momentum,
    };
    config.validate()?;
    Ok(config)
}

/// Read and parse a configuration file.
pub fn load_config(path: &Path) -> Result<ExperimentConfig> {
    let text = std::fs::read_to_string(path)?;
    parse_config(&text)
}

impl ExperimentConfig {
    /// Re-check every constraint; used after programmatic overrides.
    pub fn validate(&self) -> Result<()> {
        match self.mode {
            Mode::Discrete => self.validate_discrete(),
            Mode::Continuous => self.validate_continuous(),
        }
    }

    fn validate_discrete(&self) -> Result<()> {
        if self.problem == ProblemKind::Quadratic {
            return Err(Error::ConfigInvalid(
                "problem \"quadratic\" is deterministic; use mode = \"continuous\"".into(),
            ));
        }
        let geometry = self
            .geometry
            .ok_or_else(|| Error::ConfigInvalid("discrete mode requires a `geometry`".into()))?;
        match (self.problem, geometry) {
            (ProblemKind::LinearLoss, GeometryKind::EntropicSimplex) => {}
            (ProblemKind::LinearLoss, _) => {
                return Err(Error::ConfigInvalid(
                    "linear_loss pairs with geometry \"entropic_simplex\"".into(),
                ))
            }
            (ProblemKind::QuadraticNoise, GeometryKind::EuclideanBox)
            | (ProblemKind::QuadraticNoise, GeometryKind::EuclideanBall) => {}
            (ProblemKind::QuadraticNoise, GeometryKind::EntropicSimplex) => {
                return Err(Error::ConfigInvalid(
                    "quadratic_noise pairs with a Euclidean geometry, not the entropic simplex"
                        .into(),
                ))
            }
            (ProblemKind::Quadratic, _) => unreachable!(),
        }
        if geometry == GeometryKind::EntropicSimplex && self.dimension < 2 {
            return Err(Error::ConfigInvalid(
                "the entropic simplex needs dimension >= 2".into(),
            ));
        }
        if self.horizon < 1 {
            return Err(Error::ConfigInvalid(
                "discrete mode requires `horizon` >= 1".into(),
            ));
        }
        let Checkpoints::Steps(steps) = &self.checkpoints else {
            return Err(Error::ConfigInvalid(
                "discrete mode requires integer checkpoints".into(),
            ));
        };
        if steps.is_empty() {
            return Err(Error::ConfigInvalid("checkpoints must be nonempty".into()));
        }
        if steps[0] < 1 {
            return Err(Error::ConfigInvalid(
                "checkpoints precede the first step; they must lie in [1, horizon]".into(),
            ));
        }
        if steps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::ConfigInvalid(
                "checkpoints must be strictly increasing".into(),
            ));
        }
        if *steps.last().unwrap() > self.horizon {
            return Err(Error::ConfigInvalid(format!(
                "checkpoint {} exceeds horizon {}",
                steps.last().unwrap(),
                self.horizon
            )));
        }
        if let Beta0Spec::Explicit(b) = self.beta0 {
            if b <= 0.0 {
                return Err(Error::ConfigInvalid(format!(
                    "beta0 must be positive, got {b}"
                )));
            }
        }
        if self.cost_center.len() != self.dimension && self.problem == ProblemKind::LinearLoss {
            return Err(Error::ConfigInvalid(format!(
                "cost_center has {} entries, dimension is {}",
                self.cost_center.len(),
                self.dimension
            )));
        }
        if self.problem == ProblemKind::QuadraticNoise {
            if self.noise_mean.len() != self.dimension {
                return Err(Error::ConfigInvalid(format!(
                    "noise_mean has {} entries, dimension is {}",
                    self.noise_mean.len(),
                    self.dimension
                )));
            }
            if self.box_lower >= self.box_upper && geometry == GeometryKind::EuclideanBox {
                return Err(Error::ConfigInvalid(
                    "box_lower must be below box_upper".into(),
                ));
            }
            if self.ball_radius <= 0.0 && geometry == GeometryKind::EuclideanBall {
                return Err(Error::ConfigInvalid("ball_radius must be positive".into()));
            }
        }
        if self.noise_half_width < 0.0 {
            return Err(Error::ConfigInvalid(
                "noise_half_width must be nonnegative".into(),
            ));
        }
        if !(0.0..1.0).contains(&self.momentum) {
            return Err(Error::ConfigInvalid("momentum must lie in [0, 1)".into()));
        }
        // Constructing the domain objects surfaces the remaining constraints
        // (e.g. the noise mean must be feasible).
        self.stochastic_problem()?;
        self.mirror_map()?;
        self.resolved_beta0()?;
        Ok(())
    }

    fn validate_continuous(&self) -> Result<()> {
        if self.problem != ProblemKind::Quadratic {
            return Err(Error::ConfigInvalid(
                "continuous mode runs the deterministic \"quadratic\" problem".into(),
            ));
        }
        if self.geometry.is_some() {
            return Err(Error::ConfigInvalid(
                "continuous mode is unconstrained; remove `geometry`".into(),
            ));
        }
        if self.algorithm != AlgorithmKind::Inertial {
            return Err(Error::ConfigInvalid(
                "continuous mode integrates the inertial dynamics only".into(),
            ));
        }
        if self.x_star.len() != self.dimension {
            return Err(Error::ConfigInvalid(format!(
                "x_star has {} entries, dimension is {} (x_star is required)",
                self.x_star.len(),
                self.dimension
            )));
        }
        if self.matrix_diag.len() != self.dimension {
            return Err(Error::ConfigInvalid(format!(
                "matrix_diag has {} entries, dimension is {}",
                self.matrix_diag.len(),
                self.dimension
            )));
        }
        if self.matrix_diag.iter().any(|&d| d <= 0.0) {
            return Err(Error::ConfigInvalid(
                "matrix_diag entries must be positive".into(),
            ));
        }
        if self.dt <= 0.0 {
            return Err(Error::ConfigInvalid("dt must be positive".into()));
        }
        if matches!(self.mu_mode, MuMode::Linear) && self.t_start_offset <= 0.0 {
            return Err(Error::ConfigInvalid(
                "t_start_offset must be positive in the linear inertia mode".into(),
            ));
        }
        if let MuMode::Constant(m) = self.mu_mode {
            if m <= 0.0 {
                return Err(Error::ConfigInvalid("mu must be positive".into()));
            }
        }
        let t0 = self.start_time();
        if self.t_end <= t0 {
            return Err(Error::ConfigInvalid(format!(
                "t_end ({}) must exceed the start time ({t0})",
                self.t_end
            )));
        }
        let Checkpoints::Times(times) = &self.checkpoints else {
            return Err(Error::ConfigInvalid(
                "continuous mode requires time checkpoints".into(),
            ));
        };
        if times.is_empty() {
            return Err(Error::ConfigInvalid("checkpoints must be nonempty".into()));
        }
        if times.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::ConfigInvalid(
                "checkpoints must be strictly increasing".into(),
            ));
        }
        if times[0] <= t0 || *times.last().unwrap() > self.t_end {
            return Err(Error::ConfigInvalid(format!(
                "checkpoints must lie in ({t0}, {}]",
                self.t_end
            )));
        }
        if self.replications != 1 {
            return Err(Error::ConfigInvalid(
                "continuous runs are deterministic; replications must be 1".into(),
            ));
        }
        Ok(())
    }

    /// Integration start time: the offset in the linear mode, zero otherwise.
    pub fn start_time(&self) -> f64 {
        match self.mu_mode {
            MuMode::Linear => self.t_start_offset,
            _ => 0.0,
        }
    }

    /// The stochastic problem described by a discrete-mode config.
    pub fn stochastic_problem(&self) -> Result<StochasticProblem> {
        match self.problem {
            ProblemKind::LinearLoss => StochasticProblem::linear_on_simplex(
                self.cost_center.clone(),
                self.noise_half_width,
            ),
            ProblemKind::QuadraticNoise => {
                let set = self.feasible_set()?;
                StochasticProblem::quadratic_noise(
                    self.noise_mean.clone(),
                    self.noise_half_width,
                    set,
                )
            }
            ProblemKind::Quadratic => Err(Error::ConfigInvalid(
                "quadratic is a deterministic problem".into(),
            )),
        }
    }

    fn feasible_set(&self) -> Result<FeasibleSet> {
        match self.geometry {
            Some(GeometryKind::EntropicSimplex) => Ok(FeasibleSet::simplex(self.dimension)),
            Some(GeometryKind::EuclideanBox) => Ok(FeasibleSet::hyper_box(
                vec![self.box_lower; self.dimension],
                vec![self.box_upper; self.dimension],
            )),
            Some(GeometryKind::EuclideanBall) => Ok(FeasibleSet::ball(
                vec![0.0; self.dimension],
                self.ball_radius,
            )),
            None => Err(Error::ConfigInvalid("no geometry configured".into())),
        }
    }

    /// The mirror map described by a discrete-mode config.
    pub fn mirror_map(&self) -> Result<MirrorMap> {
        match self.geometry {
            Some(GeometryKind::EntropicSimplex) => Ok(MirrorMap::entropic_simplex(self.dimension)),
            Some(GeometryKind::EuclideanBox) => Ok(MirrorMap::euclidean_box(
                vec![self.box_lower; self.dimension],
                vec![self.box_upper; self.dimension],
            )),
            Some(GeometryKind::EuclideanBall) => Ok(MirrorMap::euclidean_ball(
                vec![0.0; self.dimension],
                self.ball_radius,
            )),
            None => Err(Error::ConfigInvalid("no geometry configured".into())),
        }
    }

    /// The deterministic problem described by a continuous-mode config.
    pub fn deterministic_problem(&self) -> Result<DeterministicProblem> {
        DeterministicProblem::quadratic_diag(self.matrix_diag.clone(), self.x_star.clone())
    }

    /// The integrable system described by a continuous-mode config.
    pub fn continuous_system(&self) -> Result<ContinuousSystem> {
        ContinuousSystem::new(self.deterministic_problem()?, self.conjugate, self.mu_mode)
    }

    /// `beta0` after resolving `"corollary"` against the problem constants.
    pub fn resolved_beta0(&self) -> Result<f64> {
        match self.beta0 {
            Beta0Spec::Explicit(b) => Ok(b),
            Beta0Spec::Corollary => {
                let problem = self.stochastic_problem()?;
                let map = self.mirror_map()?;
                Ok(tuned_beta0(problem.l_bound(), map.alpha(), map.prox_max()))
            }
        }
    }

    /// Canonical schedule at the resolved `beta0`.
    pub fn schedule(&self) -> Result<Schedule> {
        Schedule::canonical(self.resolved_beta0()?)
    }

    /// Bound constants for the configured run. The prox value at the
    /// minimizer is taken as its set-wide maximum (a valid upper bound for
    /// any minimizer), so with `beta0 = "corollary"` the reported bound is
    /// exactly `2 L sqrt(v_bar / alpha) * sqrt(t + 2) / (t + 1)`.
    pub fn bound_params(&self) -> Result<BoundParams> {
        let problem = self.stochastic_problem()?;
        let map = self.mirror_map()?;
        let v_bar = map.prox_max();
        BoundParams::new(
            self.resolved_beta0()?,
            v_bar,
            v_bar,
            problem.l_bound(),
            map.alpha(),
        )
    }

    /// The configured algorithm with its step-size options filled in.
    pub fn algorithm(&self) -> Algorithm {
        match self.algorithm {
            AlgorithmKind::Inertial => Algorithm::Inertial,
            AlgorithmKind::DualAveraging => Algorithm::DualAveraging,
            AlgorithmKind::ProjectedSubgradient => {
                Algorithm::ProjectedSubgradient { eta0: self.eta0 }
            }
            AlgorithmKind::HeavyBall => Algorithm::HeavyBall {
                eta: self.eta,
                momentum: self.momentum,
            },
        }
    }
}
