//! Query execution.
//!
//! Both strategies share the same skeleton: expand the query shortest
//! path into a candidate, extract the maximal BCC containing the pair,
//! then repeatedly bulk-delete the farthest vertex batch and re-maintain
//! the BCC, snapshotting each surviving state. The snapshot with the
//! smallest query distance is returned.
//!
//! The strategies differ in how they pay for the reduction loop:
//!
//! - `Basic` recomputes every vertex's distance with per-vertex BFS
//!   checks each round, and re-finds a lost leader by recounting
//!   butterfly degrees for the whole side.
//! - `Fast` refreshes all distances with one BFS per query vertex over
//!   the surviving subgraph, keeps butterfly degrees current through
//!   localized updates around deletions, and re-finds leaders by walking
//!   candidates in descending comprehensive score.

mod candidate;
mod distance;
mod expand;
mod extract;
mod leader;
mod validate;

pub use candidate::CandidateGraph;
pub use distance::{bqdc, query_distance};
pub use expand::local_expand;
pub use extract::{extract_bcc, maintain_bcc};
pub use leader::filvm;
pub use validate::{validate_bcc, ValidationReport};

use crate::graph::{shortest_path, LabeledGraph, VertexId, VertexSet};
use crate::index::OfflineIndex;
use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Basic,
    Fast,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Basic => "basic",
            Strategy::Fast => "fast",
        })
    }
}

impl std::str::FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Strategy, String> {
        match s.to_ascii_lowercase().as_str() {
            "basic" => Ok(Strategy::Basic),
            "fast" => Ok(Strategy::Fast),
            other => Err(format!("unknown strategy {other:?} (use basic or fast)")),
        }
    }
}

/// Query parameters: a heterogeneous vertex pair, core thresholds for
/// its two sides, the butterfly threshold, and the expansion cap.
#[derive(Clone, Copy, Debug)]
pub struct BccQuery {
    pub q_l: VertexId,
    pub q_r: VertexId,
    pub k1: u32,
    pub k2: u32,
    pub b: u64,
    pub eta: usize,
    pub strategy: Strategy,
}

pub const DEFAULT_ETA: usize = 1000;

impl BccQuery {
    pub fn validate(&self, g: &LabeledGraph) -> Result<(), QueryError> {
        for v in [self.q_l, self.q_r] {
            if v.index() >= g.vertex_count() {
                return Err(QueryError::UnknownVertex(v));
            }
        }
        if g.label(self.q_l) == g.label(self.q_r) {
            return Err(QueryError::SameLabelQuery(self.q_l, self.q_r));
        }
        if self.k1 == 0 || self.k2 == 0 || self.b == 0 || self.eta == 0 {
            return Err(QueryError::NonPositiveParameter);
        }
        Ok(())
    }
}

#[derive(Debug)]
pub enum QueryError {
    UnknownVertex(VertexId),
    SameLabelQuery(VertexId, VertexId),
    NonPositiveParameter,
    IndexMismatch(String),
    /// A removal set handed to the distance update contained a query vertex.
    QueryVertexRemoved(VertexId),
    InactiveQueryVertex(VertexId),
}

impl fmt::Display for QueryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueryError::UnknownVertex(v) => write!(f, "query vertex {v:?} not in graph"),
            QueryError::SameLabelQuery(a, b) => {
                write!(f, "query vertices {a:?}, {b:?} carry the same label")
            }
            QueryError::NonPositiveParameter => {
                write!(f, "k1, k2, b and eta must all be positive")
            }
            QueryError::IndexMismatch(m) => write!(f, "{m}"),
            QueryError::QueryVertexRemoved(v) => {
                write!(f, "removal set contains query vertex {v:?}")
            }
            QueryError::InactiveQueryVertex(v) => {
                write!(f, "query vertex {v:?} is not active")
            }
        }
    }
}

impl std::error::Error for QueryError {}

/// The BCC criteria, used both as validator checks and as rejection
/// reason codes. Left is the q_l side.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Criterion {
    Labels,
    LeftCore,
    RightCore,
    LeftButterfly,
    RightButterfly,
    Connected,
    ContainsQuery,
}

impl Criterion {
    pub fn code(self) -> &'static str {
        match self {
            Criterion::Labels => "labels",
            Criterion::LeftCore => "left-core",
            Criterion::RightCore => "right-core",
            Criterion::LeftButterfly => "left-butterfly",
            Criterion::RightButterfly => "right-butterfly",
            Criterion::Connected => "connected",
            Criterion::ContainsQuery => "contains-query",
        }
    }
}

/// Why a query produced no community.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FailReason {
    /// The query pair is disconnected in the parent graph.
    NoPath,
    Criterion(Criterion),
}

impl FailReason {
    pub fn code(self) -> &'static str {
        match self {
            FailReason::NoPath => "no-path",
            FailReason::Criterion(c) => c.code(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QueryStatus {
    Found,
    NoCommunity(FailReason),
}

/// One recorded reduction state: the surviving vertex set, its query
/// distance, and the leaders that anchored it.
#[derive(Clone, Debug)]
pub struct Snapshot {
    pub vertices: VertexSet,
    pub query_distance: u32,
    pub leaders: [(VertexId, u64); 2],
}

/// Wall-clock cost per phase of one query execution.
#[derive(Clone, Copy, Default, Debug)]
pub struct PhaseTimes {
    pub expand: Duration,
    pub extract: Duration,
    pub reduce: Duration,
    pub distance: Duration,
    pub leader: Duration,
}

/// Reduction-loop bookkeeping.
#[derive(Clone, Copy, Default, Debug)]
pub struct RunStats {
    /// Leader re-selections during reduction (initial selection excluded).
    pub leader_updates: u32,
    /// Per-vertex butterfly-degree computations.
    pub chi_computations: u64,
}

/// Query outcome with provenance: snapshots, leaders, distances, phase
/// timings, and the independent validator's verdict.
#[derive(Debug)]
pub struct BccResult {
    pub query: BccQuery,
    pub status: QueryStatus,
    /// Sorted internal ids; empty when no community was found.
    pub community: Vec<VertexId>,
    /// `[q_l side, q_r side]` leaders with their butterfly degree.
    pub leaders: Option<[(VertexId, u64); 2]>,
    pub query_distance: Option<u32>,
    /// Reduction rounds executed (deletion batches applied).
    pub iterations: u32,
    pub g0_size: usize,
    pub g0_distance: Option<u32>,
    pub snapshots: Vec<Snapshot>,
    pub valid: bool,
    pub failed_criteria: Vec<Criterion>,
    pub times: PhaseTimes,
    pub stats: RunStats,
}

/// Distance maps recorded after each deletion batch, for equivalence
/// checking against from-scratch BFS.
#[derive(Default, Debug)]
pub struct QueryTrace {
    pub rounds: Vec<TraceRound>,
}

#[derive(Debug)]
pub struct TraceRound {
    /// Vertices removed this round (batch plus maintenance cascade);
    /// empty for the initial state.
    pub removed: Vec<VertexId>,
    /// The surviving active set the distances were computed on.
    pub active: VertexSet,
    /// First-visit distance maps from each query vertex (source absent).
    pub dist_ql: HashMap<VertexId, u32>,
    pub dist_qr: HashMap<VertexId, u32>,
}

pub fn run_query(
    g: &LabeledGraph,
    idx: &OfflineIndex,
    q: &BccQuery,
) -> Result<BccResult, QueryError> {
    execute(g, idx, q, None)
}

/// As `run_query`, also recording per-round distance maps.
pub fn run_query_traced(
    g: &LabeledGraph,
    idx: &OfflineIndex,
    q: &BccQuery,
) -> Result<(BccResult, QueryTrace), QueryError> {
    let mut trace = QueryTrace::default();
    let result = execute(g, idx, q, Some(&mut trace))?;
    Ok((result, trace))
}

fn no_community(q: &BccQuery, reason: FailReason, times: PhaseTimes, stats: RunStats) -> BccResult {
    BccResult {
        query: *q,
        status: QueryStatus::NoCommunity(reason),
        community: Vec::new(),
        leaders: None,
        query_distance: None,
        iterations: 0,
        g0_size: 0,
        g0_distance: None,
        snapshots: Vec::new(),
        valid: false,
        failed_criteria: match reason {
            FailReason::Criterion(c) => vec![c],
            FailReason::NoPath => Vec::new(),
        },
        times,
        stats,
    }
}

fn execute(
    g: &LabeledGraph,
    idx: &OfflineIndex,
    q: &BccQuery,
    mut trace: Option<&mut QueryTrace>,
) -> Result<BccResult, QueryError> {
    q.validate(g)?;
    if idx.vertex_count() != g.vertex_count() || idx.edge_count() != g.edge_count() {
        return Err(QueryError::IndexMismatch(format!(
            "index extent {}v/{}e does not match graph {}v/{}e",
            idx.vertex_count(),
            idx.edge_count(),
            g.vertex_count(),
            g.edge_count()
        )));
    }

    let mut times = PhaseTimes::default();
    let mut stats = RunStats::default();

    // expansion
    let t = Instant::now();
    let path = match shortest_path(g, q.q_l, q.q_r) {
        Some(p) => p,
        None => {
            times.expand = t.elapsed();
            return Ok(no_community(q, FailReason::NoPath, times, stats));
        }
    };
    let mut cand = local_expand(g, idx, q, &path);
    times.expand = t.elapsed();

    // extraction
    let t = Instant::now();
    if let Err(criterion) = extract_bcc(&mut cand, idx, q, &mut stats) {
        times.extract = t.elapsed();
        return Ok(no_community(
            q,
            FailReason::Criterion(criterion),
            times,
            stats,
        ));
    }
    times.extract = t.elapsed();

    // initial distances
    let mut scratch = distance::BfsScratch::new(g.vertex_count());
    compute_distances(&mut cand, q, &mut scratch, &mut times);
    record_trace(&mut trace, &cand, q, Vec::new());

    let k_of = extract::thresholds(q, g);
    let mut snapshots: Vec<Snapshot> = Vec::new();
    let mut iterations = 0u32;

    loop {
        // current query distance and the farthest batch
        let mut max_d = 0u32;
        let mut unreachable: Vec<VertexId> = Vec::new();
        for v in cand.active().iter() {
            match cand.query_distance_of(v) {
                Some(d) => max_d = max_d.max(d),
                None => unreachable.push(v),
            }
        }
        // maintenance keeps only the query component, so nothing should
        // be unreachable here; if it ever were, the state's distance is
        // unbounded and must never win the final argmin
        debug_assert!(unreachable.is_empty());
        snapshots.push(Snapshot {
            vertices: cand.active().clone(),
            query_distance: if unreachable.is_empty() {
                max_d
            } else {
                u32::MAX
            },
            leaders: [
                cand.leader(g.label(q.q_l)).expect("leader set"),
                cand.leader(g.label(q.q_r)).expect("leader set"),
            ],
        });

        let mut batch: Vec<VertexId> = cand
            .active()
            .iter()
            .filter(|&v| v != q.q_l && v != q.q_r && cand.query_distance_of(v) == Some(max_d))
            .collect();
        batch.extend(unreachable);
        if batch.is_empty() {
            break;
        }
        iterations += 1;

        // bulk deletion plus BCC maintenance
        let t = Instant::now();
        cand.remove_batch(&batch);
        let mut removed = batch;
        let maintained = extract::enforce_cores_and_connectivity(&mut cand, q, k_of, &mut removed);
        if maintained.is_err() {
            times.reduce += t.elapsed();
            break;
        }
        if q.strategy == Strategy::Fast {
            // localized butterfly refresh around the deletions
            let affected = cand.chi_affected_by(&removed);
            for v in affected {
                cand.recompute_chi(v);
                stats.chi_computations += 1;
            }
        }
        times.reduce += t.elapsed();

        // leader survival and re-selection
        let t = Instant::now();
        let leaders_ok = extract::revalidate_leaders(&mut cand, idx, q, &mut stats);
        times.leader += t.elapsed();
        if leaders_ok.is_err() {
            break;
        }

        compute_distances(&mut cand, q, &mut scratch, &mut times);
        record_trace(&mut trace, &cand, q, removed);
    }

    // best snapshot: first one attaining the minimum distance
    let best = snapshots
        .iter()
        .enumerate()
        .min_by_key(|(i, s)| (s.query_distance, *i))
        .map(|(_, s)| s)
        .expect("at least the extracted state is recorded");

    let mut community: Vec<VertexId> = best.vertices.iter().collect();
    community.sort_unstable();
    let report = validate_bcc(g, &community, q);
    Ok(BccResult {
        query: *q,
        status: QueryStatus::Found,
        leaders: Some(best.leaders),
        query_distance: Some(best.query_distance),
        iterations,
        g0_size: snapshots[0].vertices.len(),
        g0_distance: Some(snapshots[0].query_distance),
        valid: report.ok(),
        failed_criteria: report.failed(),
        community,
        snapshots,
        times,
        stats,
    })
}

fn compute_distances(
    cand: &mut CandidateGraph,
    q: &BccQuery,
    scratch: &mut distance::BfsScratch,
    times: &mut PhaseTimes,
) {
    let t = Instant::now();
    match q.strategy {
        Strategy::Fast => {
            for source in [q.q_l, q.q_r] {
                let side = cand.graph().label(source);
                let mut dist = std::mem::take(cand.dist_mut(side));
                distance::bfs_into(cand, source, &mut dist);
                *cand.dist_mut(side) = dist;
            }
        }
        Strategy::Basic => {
            distance::per_vertex_distances(cand, q.q_l, q.q_r, scratch);
        }
    }
    times.distance += t.elapsed();
}

fn record_trace(
    trace: &mut Option<&mut QueryTrace>,
    cand: &CandidateGraph,
    q: &BccQuery,
    removed: Vec<VertexId>,
) {
    let Some(trace) = trace.as_deref_mut() else {
        return;
    };
    let collect = |source: VertexId| -> HashMap<VertexId, u32> {
        let dist = cand.dist_of(cand.graph().label(source));
        cand.active()
            .iter()
            .filter(|&v| v != source && dist[v.index()] != candidate::UNSET)
            .map(|v| (v, dist[v.index()]))
            .collect()
    };
    trace.rounds.push(TraceRound {
        removed,
        active: cand.active().clone(),
        dist_ql: collect(q.q_l),
        dist_qr: collect(q.q_r),
    });
}

/// CSV header for per-query result records.
pub fn result_csv_header() -> String {
    [
        "ql",
        "qr",
        "k1",
        "k2",
        "b",
        "eta",
        "strategy",
        "status",
        "reason",
        "community_size",
        "query_distance",
        "iterations",
        "g0_size",
        "g0_distance",
        "leader_left",
        "leader_left_chi",
        "leader_right",
        "leader_right_chi",
        "expand_s",
        "extract_s",
        "reduce_s",
        "distance_s",
        "leader_s",
        "leader_updates",
        "chi_computations",
        "valid",
        "failed_criteria",
    ]
    .join(",")
}

/// One result record as a CSV line (external vertex ids).
pub fn result_csv_row(g: &LabeledGraph, r: &BccResult) -> String {
    let ext = |v: VertexId| g.external_id(v).to_string();
    let (status, reason) = match r.status {
        QueryStatus::Found => ("found".to_string(), String::new()),
        QueryStatus::NoCommunity(why) => ("no-community".to_string(), why.code().to_string()),
    };
    let opt = |x: Option<u32>| x.map_or(String::new(), |v| v.to_string());
    let leaders = match r.leaders {
        Some([(l, lc), (rr, rc)]) => [ext(l), lc.to_string(), ext(rr), rc.to_string()],
        None => [String::new(), String::new(), String::new(), String::new()],
    };
    let failed: Vec<&str> = r.failed_criteria.iter().map(|c| c.code()).collect();
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{:.9},{:.9},{:.9},{:.9},{:.9},{},{},{},{}",
        ext(r.query.q_l),
        ext(r.query.q_r),
        r.query.k1,
        r.query.k2,
        r.query.b,
        r.query.eta,
        r.query.strategy,
        status,
        reason,
        r.community.len(),
        opt(r.query_distance),
        r.iterations,
        r.g0_size,
        opt(r.g0_distance),
        leaders[0],
        leaders[1],
        leaders[2],
        leaders[3],
        r.times.expand.as_secs_f64(),
        r.times.extract.as_secs_f64(),
        r.times.reduce.as_secs_f64(),
        r.times.distance.as_secs_f64(),
        r.times.leader.as_secs_f64(),
        r.stats.leader_updates,
        r.stats.chi_computations,
        r.valid,
        failed.join(";"),
    )
}
