//! Benchmark query generation.
//!
//! Queries pair two vertices with distinct labels from one ground-truth
//! community; core thresholds default to the endpoints' own coreness and
//! the butterfly threshold to 1.

use super::{BenchError, GroundTruth};
use crate::engine::{BccQuery, Strategy};
use crate::graph::{Label, LabeledGraph, VertexId};
use crate::index::OfflineIndex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug)]
pub struct QueryConstraints {
    /// Endpoints must have coreness at least this (>= 1 keeps the
    /// thresholds positive).
    pub min_coreness: u32,
    /// When set, overrides k1 = k2 = k instead of the endpoint coreness.
    pub fixed_k: Option<u32>,
    pub b: u64,
    pub eta: usize,
    /// Pin the left endpoint (the right one is still drawn from its
    /// community).
    pub fixed_ql: Option<VertexId>,
}

impl Default for QueryConstraints {
    fn default() -> QueryConstraints {
        QueryConstraints {
            min_coreness: 1,
            fixed_k: None,
            b: 1,
            eta: crate::engine::DEFAULT_ETA,
            fixed_ql: None,
        }
    }
}

/// A query plus the ground-truth community it was drawn from.
#[derive(Clone, Copy, Debug)]
pub struct GeneratedQuery {
    pub query: BccQuery,
    pub community: u32,
}

/// Draws `n` queries, seeded and deterministic. Every pair has distinct
/// labels and both endpoints meet the coreness floor.
pub fn generate_queries(
    g: &LabeledGraph,
    idx: &OfflineIndex,
    gt: &GroundTruth,
    n: usize,
    constraints: QueryConstraints,
    seed: u64,
) -> Result<Vec<GeneratedQuery>, BenchError> {
    let floor = constraints
        .fixed_k
        .unwrap_or(constraints.min_coreness)
        .max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let eligible = |v: VertexId, lab: Label| -> bool { g.label(v) == lab && idx.delta(v) >= floor };

    // per community: members per side meeting the floor
    let mut pools: Vec<(u32, Vec<VertexId>, Vec<VertexId>)> = Vec::new();
    for (ci, members) in gt.communities.iter().enumerate() {
        if let Some(fixed) = constraints.fixed_ql {
            if gt.membership[fixed.index()] != Some(ci as u32) {
                continue;
            }
        }
        let side0: Vec<VertexId> = members
            .iter()
            .copied()
            .filter(|&v| eligible(v, Label(0)))
            .collect();
        let side1: Vec<VertexId> = members
            .iter()
            .copied()
            .filter(|&v| eligible(v, Label(1)))
            .collect();
        if !side0.is_empty() && !side1.is_empty() {
            pools.push((ci as u32, side0, side1));
        }
    }
    if pools.is_empty() {
        return Err(BenchError::NoEligiblePairs);
    }

    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let (ci, side0, side1) = &pools[rng.random_range(0..pools.len())];
        let (q_l, q_r) = match constraints.fixed_ql {
            Some(fixed) => {
                let other = if g.label(fixed) == Label(0) {
                    side1
                } else {
                    side0
                };
                let mut partner = other[rng.random_range(0..other.len())];
                // fixed endpoint must not pair with itself
                for _ in 0..50 {
                    if partner != fixed {
                        break;
                    }
                    partner = other[rng.random_range(0..other.len())];
                }
                (fixed, partner)
            }
            None => (
                side0[rng.random_range(0..side0.len())],
                side1[rng.random_range(0..side1.len())],
            ),
        };
        let (k1, k2) = match constraints.fixed_k {
            Some(k) => (k, k),
            None => (idx.delta(q_l), idx.delta(q_r)),
        };
        out.push(GeneratedQuery {
            query: BccQuery {
                q_l,
                q_r,
                k1,
                k2,
                b: constraints.b,
                eta: constraints.eta,
                strategy: Strategy::Basic,
            },
            community: *ci,
        });
    }
    Ok(out)
}

/// Core values k for which some community still has an eligible pair
/// (both sides holding a vertex with coreness >= k). Sorted ascending.
pub fn attainable_core_values(g: &LabeledGraph, idx: &OfflineIndex, gt: &GroundTruth) -> Vec<u32> {
    let mut kmax = 0u32;
    for members in &gt.communities {
        let side_max = |lab: Label| {
            members
                .iter()
                .filter(|&&v| g.label(v) == lab)
                .map(|&v| idx.delta(v))
                .max()
                .unwrap_or(0)
        };
        kmax = kmax.max(side_max(Label(0)).min(side_max(Label(1))));
    }
    (1..=kmax).collect()
}
