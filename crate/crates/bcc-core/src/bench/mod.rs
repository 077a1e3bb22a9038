//! Benchmark harness: dataset synthesis from ground-truth communities,
//! query generation, F1 quality scoring, and timed head-to-head runs of
//! the two query strategies.

mod config;
mod metrics;
mod queries;
mod synth;

pub use config::BenchConfig;
pub use metrics::{
    f1, per_query_csv_header, run_benchmark, summarize, summary_csv_header, BenchReport,
    QueryRecord, StrategySummary,
};
pub use queries::{attainable_core_values, generate_queries, GeneratedQuery, QueryConstraints};
pub use synth::{
    generate_community_graph, parse_communities_file, synthesize_dataset, SynthReport,
};

use crate::engine::QueryError;
use crate::graph::{GraphError, VertexId};
use crate::index::IndexError;
use std::fmt;
use std::io;

/// Ground-truth communities over internal vertex ids, disjoint after
/// first-listed-wins membership resolution.
#[derive(Clone, Debug)]
pub struct GroundTruth {
    pub communities: Vec<Vec<VertexId>>,
    /// Per-vertex community index; `None` for vertices outside every
    /// community.
    pub membership: Vec<Option<u32>>,
}

impl GroundTruth {
    pub fn community_of(&self, v: VertexId) -> Option<&[VertexId]> {
        self.membership[v.index()].map(|i| self.communities[i as usize].as_slice())
    }
}

#[derive(Debug)]
pub enum BenchError {
    Config(String),
    Io {
        path: String,
        source: io::Error,
    },
    EmptyGroundTruth,
    /// No heterogeneous pair satisfies the query constraints.
    NoEligiblePairs,
    Graph(GraphError),
    Index(IndexError),
    Query(QueryError),
}

impl fmt::Display for BenchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchError::Config(m) => write!(f, "config error: {m}"),
            BenchError::Io { path, source } => write!(f, "cannot access {path}: {source}"),
            BenchError::EmptyGroundTruth => write!(f, "ground truth has no communities"),
            BenchError::NoEligiblePairs => {
                write!(f, "no heterogeneous vertex pair satisfies the constraints")
            }
            BenchError::Graph(e) => write!(f, "{e}"),
            BenchError::Index(e) => write!(f, "{e}"),
            BenchError::Query(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for BenchError {}

impl From<GraphError> for BenchError {
    fn from(e: GraphError) -> BenchError {
        BenchError::Graph(e)
    }
}

impl From<IndexError> for BenchError {
    fn from(e: IndexError) -> BenchError {
        BenchError::Index(e)
    }
}

impl From<QueryError> for BenchError {
    fn from(e: QueryError) -> BenchError {
        BenchError::Query(e)
    }
}

#[cfg(test)]
mod tests;
