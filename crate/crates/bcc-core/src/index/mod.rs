//! Offline index construction and persistence.
//!
//! Built once per graph, read-only afterwards: per-side coreness, the
//! cross-label bipartite subgraph with per-vertex butterfly degrees, and
//! the score pipeline (relative RWR score -> min-max normalizations ->
//! combined vertex comprehensive score).

mod butterfly;
mod core;
mod persist;
mod rwr;
mod scores;

pub use butterfly::{butterfly_degrees, extract_cross_bipartite, ButterflyIndex, CrossBipartite};
pub use core::{core_decomposition, coreness, CorenessIndex};
pub use rwr::{rs_scores, rwr_scores, RwrParams};
pub use scores::{comprehensive_scores, normalize_bsn, normalize_rsn, ScoreIndex};

use crate::graph::{Label, LabeledGraph, VertexId};
use std::fmt;
use std::io;

#[derive(Debug)]
pub enum IndexError {
    /// RWR seeds must have at least one neighbor.
    ZeroDegreeSeed(VertexId),
    InvalidParams(String),
    Io {
        path: String,
        source: io::Error,
    },
    /// Unreadable or truncated index file.
    Format {
        path: String,
        message: String,
    },
    /// Index was built for a different graph.
    GraphMismatch {
        message: String,
    },
}

impl fmt::Display for IndexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexError::ZeroDegreeSeed(v) => write!(f, "RWR seed {v:?} has degree 0"),
            IndexError::InvalidParams(m) => write!(f, "invalid parameters: {m}"),
            IndexError::Io { path, source } => write!(f, "cannot access {path}: {source}"),
            IndexError::Format { path, message } => write!(f, "bad index file {path}: {message}"),
            IndexError::GraphMismatch { message } => write!(f, "index/graph mismatch: {message}"),
        }
    }
}

impl std::error::Error for IndexError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            IndexError::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}

/// All per-vertex indexes for one graph, plus the parameters they were
/// built with. Queries only read this.
pub struct OfflineIndex {
    vertex_count: usize,
    edge_count: usize,
    pub coreness: CorenessIndex,
    pub butterflies: ButterflyIndex,
    pub scores: ScoreIndex,
    pub rwr: RwrParams,
    /// Per label: scored vertices in descending-VSC order (ties by id).
    vsc_order: [Vec<VertexId>; 2],
}

impl OfflineIndex {
    pub fn build(
        g: &LabeledGraph,
        rwr: RwrParams,
        gamma1: f64,
        gamma2: f64,
    ) -> Result<OfflineIndex, IndexError> {
        rwr.validate()?;
        scores::validate_gammas(gamma1, gamma2)?;

        let coreness = coreness(g);
        let cross = extract_cross_bipartite(g, None);
        let butterflies = butterfly_degrees(&cross);

        let scored: Vec<bool> = g.vertices().map(|v| g.degree(v) > 0).collect();
        let rs = rs_scores(g, &rwr);
        let rsn = normalize_rsn(&rs, &scored);
        let in_cross: Vec<bool> = g.vertices().map(|v| cross.is_member(v)).collect();
        let bsn = normalize_bsn(&butterflies, &in_cross);
        let vsc = comprehensive_scores(&rsn, &bsn, &scored, gamma1, gamma2);
        let scores = ScoreIndex {
            rs,
            rsn,
            bsn,
            vsc,
            scored,
            gamma1,
            gamma2,
        };

        let mut idx = OfflineIndex {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            coreness,
            butterflies,
            scores,
            rwr,
            vsc_order: [Vec::new(), Vec::new()],
        };
        idx.rebuild_vsc_order(g);
        Ok(idx)
    }

    /// Sorts each label side by descending VSC, ties by smaller id.
    /// Derived data; recomputed after load rather than persisted.
    fn rebuild_vsc_order(&mut self, g: &LabeledGraph) {
        for side in 0..2 {
            let mut order: Vec<VertexId> = g
                .vertices()
                .filter(|&v| g.label(v) == Label(side as u8) && self.scores.scored[v.index()])
                .collect();
            order.sort_by(|&a, &b| {
                self.scores.vsc[b.index()]
                    .partial_cmp(&self.scores.vsc[a.index()])
                    .unwrap()
                    .then(a.cmp(&b))
            });
            self.vsc_order[side] = order;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn delta(&self, v: VertexId) -> u32 {
        self.coreness.delta(v)
    }

    #[inline]
    pub fn chi(&self, v: VertexId) -> u64 {
        self.butterflies.chi(v)
    }

    /// Comprehensive score; degree-0 vertices carry no entry.
    pub fn vsc(&self, v: VertexId) -> Option<f64> {
        self.scores.vsc.get(v.index()).and_then(|&x| {
            if self.scores.scored[v.index()] {
                Some(x)
            } else {
                None
            }
        })
    }

    pub fn vsc_order(&self, side: Label) -> &[VertexId] {
        &self.vsc_order[side.index()]
    }

    /// Fails when the index was built for a different graph extent.
    pub fn check_matches(&self, g: &LabeledGraph) -> Result<(), IndexError> {
        if self.vertex_count != g.vertex_count() || self.edge_count != g.edge_count() {
            return Err(IndexError::GraphMismatch {
                message: format!(
                    "index built for {} vertices / {} edges, graph has {} / {}",
                    self.vertex_count,
                    self.edge_count,
                    g.vertex_count(),
                    g.edge_count()
                ),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
