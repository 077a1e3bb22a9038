//! Flat key-value benchmark configuration.
//!
//! One `key = value` assignment per line, `#` comments; unknown keys are
//! rejected so typos fail loudly.

use super::BenchError;
use std::path::{Path, PathBuf};

#[derive(Clone, Debug)]
pub struct BenchConfig {
    /// Cross edges added per community, as a fraction of its edge count.
    pub cross_edge_ratio: f64,
    /// Global noise cross edges, as a fraction of the raw edge count.
    pub noise_edge_ratio: f64,
    pub num_queries: usize,
    /// Queries running longer are recorded as infinite.
    pub timeout_secs: f64,
    pub sweep_k: Vec<u32>,
    pub sweep_b: Vec<u64>,
    pub rng_seed: u64,
    /// Subsample bound: keep whole communities until this many vertices
    /// (0 disables).
    pub max_vertices: usize,
    /// Raw dataset files; when absent a synthetic graph is generated.
    pub graph_file: Option<PathBuf>,
    pub communities_file: Option<PathBuf>,
    pub synth_communities: usize,
    pub synth_comm_size_min: usize,
    pub synth_comm_size_max: usize,
    /// Average same-community degree of the synthetic generator.
    pub synth_intra_degree: f64,
    pub eta: usize,
    pub gamma1: f64,
    pub gamma2: f64,
    pub restart_prob: f64,
    pub tolerance: f64,
    pub max_iters: u32,
    pub out_dir: PathBuf,
}

impl Default for BenchConfig {
    fn default() -> BenchConfig {
        BenchConfig {
            cross_edge_ratio: 0.10,
            noise_edge_ratio: 0.10,
            num_queries: 1000,
            timeout_secs: 1800.0,
            sweep_k: Vec::new(),
            sweep_b: Vec::new(),
            rng_seed: 42,
            max_vertices: 0,
            graph_file: None,
            communities_file: None,
            synth_communities: 150,
            synth_comm_size_min: 40,
            synth_comm_size_max: 80,
            synth_intra_degree: 12.0,
            eta: crate::engine::DEFAULT_ETA,
            gamma1: 0.5,
            gamma2: 0.5,
            restart_prob: 0.15,
            tolerance: 1e-6,
            max_iters: 150,
            out_dir: PathBuf::from("bench-out"),
        }
    }
}

impl BenchConfig {
    pub fn load(path: impl AsRef<Path>) -> Result<BenchConfig, BenchError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| BenchError::Io {
            path: path.display().to_string(),
            source,
        })?;
        BenchConfig::parse(&text)
    }

    pub fn parse(text: &str) -> Result<BenchConfig, BenchError> {
        let mut cfg = BenchConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                BenchError::Config(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            cfg.set(key, value)
                .map_err(|m| BenchError::Config(format!("line {}: {m}", lineno + 1)))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, String> {
            value
                .parse()
                .map_err(|_| format!("bad value {value:?} for key `{key}`"))
        }
        fn list<T: std::str::FromStr>(key: &str, value: &str) -> Result<Vec<T>, String> {
            if value.is_empty() {
                return Ok(Vec::new());
            }
            value
                .split(',')
                .map(|x| num(key, x.trim()))
                .collect::<Result<Vec<T>, String>>()
        }
        match key {
            "cross_edge_ratio" => self.cross_edge_ratio = num(key, value)?,
            "noise_edge_ratio" => self.noise_edge_ratio = num(key, value)?,
            "num_queries" => self.num_queries = num(key, value)?,
            "timeout_secs" => self.timeout_secs = num(key, value)?,
            "sweep_k" => self.sweep_k = list(key, value)?,
            "sweep_b" => self.sweep_b = list(key, value)?,
            "rng_seed" => self.rng_seed = num(key, value)?,
            "max_vertices" => self.max_vertices = num(key, value)?,
            "graph_file" => self.graph_file = Some(PathBuf::from(value)),
            "communities_file" => self.communities_file = Some(PathBuf::from(value)),
            "synth_communities" => self.synth_communities = num(key, value)?,
            "synth_comm_size_min" => self.synth_comm_size_min = num(key, value)?,
            "synth_comm_size_max" => self.synth_comm_size_max = num(key, value)?,
            "synth_intra_degree" => self.synth_intra_degree = num(key, value)?,
            "eta" => self.eta = num(key, value)?,
            "gamma1" => self.gamma1 = num(key, value)?,
            "gamma2" => self.gamma2 = num(key, value)?,
            "restart_prob" => self.restart_prob = num(key, value)?,
            "tolerance" => self.tolerance = num(key, value)?,
            "max_iters" => self.max_iters = num(key, value)?,
            "out_dir" => self.out_dir = PathBuf::from(value),
            other => return Err(format!("unknown key `{other}`")),
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), BenchError> {
        for (name, x) in [
            ("cross_edge_ratio", self.cross_edge_ratio),
            ("noise_edge_ratio", self.noise_edge_ratio),
        ] {
            if !(0.0..=1.0).contains(&x) {
                return Err(BenchError::Config(format!(
                    "{name} must lie in [0,1], got {x}"
                )));
            }
        }
        if self.graph_file.is_some() != self.communities_file.is_some() {
            return Err(BenchError::Config(
                "graph_file and communities_file must be given together".to_string(),
            ));
        }
        if self.synth_comm_size_min == 0 || self.synth_comm_size_min > self.synth_comm_size_max {
            return Err(BenchError::Config(
                "need 0 < synth_comm_size_min <= synth_comm_size_max".to_string(),
            ));
        }
        Ok(())
    }
}
