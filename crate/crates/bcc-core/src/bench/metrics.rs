//! F1 scoring, timed head-to-head runs, and CSV emission.

use super::{BenchError, GeneratedQuery, GroundTruth};
use crate::engine::{self, QueryStatus, Strategy};
use crate::graph::{LabeledGraph, VertexId};
use crate::index::OfflineIndex;
use std::collections::HashSet;
use std::time::{Duration, Instant};

/// F1 of a found community against the ground-truth target; 0 when
/// `found` is empty.
pub fn f1(found: &[VertexId], truth: &[VertexId]) -> f64 {
    if found.is_empty() || truth.is_empty() {
        return 0.0;
    }
    let t: HashSet<VertexId> = truth.iter().copied().collect();
    let hits = found.iter().filter(|v| t.contains(v)).count() as f64;
    if hits == 0.0 {
        return 0.0;
    }
    let precision = hits / found.len() as f64;
    let recall = hits / truth.len() as f64;
    2.0 * precision * recall / (precision + recall)
}

/// One (query, strategy) measurement.
#[derive(Clone, Debug)]
pub struct QueryRecord {
    pub query_index: usize,
    pub strategy: Strategy,
    pub runtime: Duration,
    pub timed_out: bool,
    pub found: bool,
    pub valid: bool,
    pub f1: f64,
    pub community_size: usize,
    pub query_distance: Option<u32>,
    pub g0_distance: Option<u32>,
    pub distance_time: Duration,
    pub leader_time: Duration,
    pub leader_updates: u32,
    pub chi_computations: u64,
    /// Full result record, ready for the per-query CSV.
    pub result_csv: String,
}

/// Aggregates per strategy.
#[derive(Clone, Debug)]
pub struct StrategySummary {
    pub strategy: Strategy,
    pub queries: usize,
    pub found: usize,
    pub valid: usize,
    pub timeouts: usize,
    /// Infinite when any query timed out.
    pub mean_runtime_s: f64,
    pub speedup_vs_basic: f64,
    pub mean_f1: f64,
    pub total_distance_s: f64,
    pub total_leader_s: f64,
    pub leader_updates: u64,
    pub chi_computations: u64,
}

#[derive(Debug, Default)]
pub struct BenchReport {
    pub records: Vec<QueryRecord>,
    pub summaries: Vec<StrategySummary>,
}

/// Runs both strategies over the identical query list, Basic first for
/// each query so the head-to-head comparison shares cache state.
pub fn run_benchmark(
    g: &LabeledGraph,
    idx: &OfflineIndex,
    gt: &GroundTruth,
    queries: &[GeneratedQuery],
    timeout: Duration,
) -> Result<BenchReport, BenchError> {
    let mut records = Vec::with_capacity(queries.len() * 2);
    for (qi, gq) in queries.iter().enumerate() {
        let truth = gt.communities[gq.community as usize].as_slice();
        for strategy in [Strategy::Basic, Strategy::Fast] {
            let mut q = gq.query;
            q.strategy = strategy;
            let started = Instant::now();
            let result = engine::run_query(g, idx, &q)?;
            let runtime = started.elapsed();
            let score = f1(&result.community, truth);
            records.push(QueryRecord {
                query_index: qi,
                strategy,
                runtime,
                timed_out: runtime > timeout,
                found: matches!(result.status, QueryStatus::Found),
                valid: result.valid,
                f1: score,
                community_size: result.community.len(),
                query_distance: result.query_distance,
                g0_distance: result.g0_distance,
                distance_time: result.times.distance,
                leader_time: result.times.leader,
                leader_updates: result.stats.leader_updates,
                chi_computations: result.stats.chi_computations,
                result_csv: engine::result_csv_row(g, &result),
            });
        }
    }
    let summaries = summarize(&records);
    Ok(BenchReport { records, summaries })
}

/// Per-strategy aggregates; speedup is relative to Basic's mean runtime.
pub fn summarize(records: &[QueryRecord]) -> Vec<StrategySummary> {
    let mut out = Vec::new();
    for strategy in [Strategy::Basic, Strategy::Fast] {
        let mine: Vec<&QueryRecord> = records.iter().filter(|r| r.strategy == strategy).collect();
        if mine.is_empty() {
            continue;
        }
        let n = mine.len();
        let timeouts = mine.iter().filter(|r| r.timed_out).count();
        let mean_runtime_s = if timeouts > 0 {
            f64::INFINITY
        } else {
            mine.iter().map(|r| r.runtime.as_secs_f64()).sum::<f64>() / n as f64
        };
        out.push(StrategySummary {
            strategy,
            queries: n,
            found: mine.iter().filter(|r| r.found).count(),
            valid: mine.iter().filter(|r| r.valid).count(),
            timeouts,
            mean_runtime_s,
            speedup_vs_basic: f64::NAN, // filled below
            mean_f1: mine.iter().map(|r| r.f1).sum::<f64>() / n as f64,
            total_distance_s: mine.iter().map(|r| r.distance_time.as_secs_f64()).sum(),
            total_leader_s: mine.iter().map(|r| r.leader_time.as_secs_f64()).sum(),
            leader_updates: mine.iter().map(|r| r.leader_updates as u64).sum(),
            chi_computations: mine.iter().map(|r| r.chi_computations).sum(),
        });
    }
    let basic_mean = out
        .iter()
        .find(|s| s.strategy == Strategy::Basic)
        .map(|s| s.mean_runtime_s);
    if let Some(basic_mean) = basic_mean {
        for s in &mut out {
            s.speedup_vs_basic = basic_mean / s.mean_runtime_s;
        }
    }
    out
}

pub fn per_query_csv_header() -> String {
    format!(
        "query_index,f1,runtime_s,timed_out,{}",
        engine::result_csv_header()
    )
}

impl QueryRecord {
    pub fn csv_row(&self) -> String {
        let runtime = if self.timed_out {
            "inf".to_string()
        } else {
            format!("{:.9}", self.runtime.as_secs_f64())
        };
        format!(
            "{},{:.6},{},{},{}",
            self.query_index, self.f1, runtime, self.timed_out, self.result_csv
        )
    }
}

/// Header for summary CSVs; `sweep_param`/`sweep_value` are empty for the
/// base (non-sweep) run.
pub fn summary_csv_header() -> String {
    [
        "sweep_param",
        "sweep_value",
        "strategy",
        "queries",
        "found",
        "valid",
        "timeouts",
        "mean_runtime_s",
        "speedup_vs_basic",
        "mean_f1",
        "total_distance_s",
        "total_leader_s",
        "leader_updates",
        "chi_computations",
    ]
    .join(",")
}

impl StrategySummary {
    pub fn csv_row(&self, sweep_param: &str, sweep_value: &str) -> String {
        format!(
            "{},{},{},{},{},{},{},{:.9},{:.4},{:.6},{:.9},{:.9},{},{}",
            sweep_param,
            sweep_value,
            self.strategy,
            self.queries,
            self.found,
            self.valid,
            self.timeouts,
            self.mean_runtime_s,
            self.speedup_vs_basic,
            self.mean_f1,
            self.total_distance_s,
            self.total_leader_s,
            self.leader_updates,
            self.chi_computations,
        )
    }
}
