//! Query-distance computation.
//!
//! The fast path updates all distances with one breadth-first pass from
//! each query vertex over the surviving subgraph. The basic path redoes
//! the per-vertex distance checks: one early-exit BFS per active vertex,
//! which is exactly what the single-pass update replaces.

use super::candidate::{CandidateGraph, UNSET};
use super::QueryError;
use crate::graph::VertexId;
use std::collections::{HashMap, VecDeque};

/// Single-source BFS over the active set, writing hop counts into
/// `dist`. Only active entries are reset, so the cost scales with the
/// candidate rather than the parent graph.
pub(super) fn bfs_into(cand: &CandidateGraph, source: VertexId, dist: &mut [u32]) {
    for v in cand.active().iter() {
        dist[v.index()] = UNSET;
    }
    dist[source.index()] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let d = dist[v.index()];
        for u in cand.all_neighbors(v) {
            if dist[u.index()] == UNSET {
                dist[u.index()] = d + 1;
                queue.push_back(u);
            }
        }
    }
}

/// Removes `removed` from the candidate, then rebuilds the distances
/// from `q` with one BFS. Returns the hashmap of first-visit distances:
/// `q` itself is not an entry, and unreached vertices are absent.
pub fn bqdc(
    cand: &mut CandidateGraph,
    q: VertexId,
    removed: &[VertexId],
) -> Result<HashMap<VertexId, u32>, QueryError> {
    if removed.contains(&q) {
        return Err(QueryError::QueryVertexRemoved(q));
    }
    if !cand.contains(q) {
        return Err(QueryError::InactiveQueryVertex(q));
    }
    cand.remove_batch(removed);

    let side = cand.graph().label(q);
    let mut dist = std::mem::take(cand.dist_mut(side));
    bfs_into(cand, q, &mut dist);
    let map = cand
        .active()
        .iter()
        .filter(|&v| v != q && dist[v.index()] != UNSET)
        .map(|v| (v, dist[v.index()]))
        .collect();
    *cand.dist_mut(side) = dist;
    Ok(map)
}

/// Per-vertex maximum over the two per-query distance maps. Vertices
/// missing from either map are unreachable and become removal
/// candidates.
pub fn query_distance(cand: &CandidateGraph) -> (HashMap<VertexId, u32>, Vec<VertexId>) {
    let mut combined = HashMap::new();
    let mut unreachable = Vec::new();
    for v in cand.active().iter() {
        match cand.query_distance_of(v) {
            Some(d) => {
                combined.insert(v, d);
            }
            None => unreachable.push(v),
        }
    }
    (combined, unreachable)
}

/// Reusable buffers for the per-vertex BFS passes; epoch stamping avoids
/// clearing between sources.
pub(super) struct BfsScratch {
    stamp: Vec<u32>,
    level: Vec<u32>,
    epoch: u32,
    queue: VecDeque<VertexId>,
}

impl BfsScratch {
    pub(super) fn new(universe: usize) -> BfsScratch {
        BfsScratch {
            stamp: vec![0; universe],
            level: vec![0; universe],
            epoch: 0,
            queue: VecDeque::new(),
        }
    }
}

/// Basic distance recomputation: for every active vertex, a fresh BFS
/// that stops as soon as both query vertices have been reached.
pub(super) fn per_vertex_distances(
    cand: &mut CandidateGraph,
    q_l: VertexId,
    q_r: VertexId,
    scratch: &mut BfsScratch,
) {
    let side_l = cand.graph().label(q_l);
    let (mut dl, mut dr) = (
        std::mem::take(cand.dist_mut(side_l)),
        std::mem::take(cand.dist_mut(side_l.other())),
    );
    let sources: Vec<VertexId> = cand.active().iter().collect();
    for &v in &sources {
        dl[v.index()] = UNSET;
        dr[v.index()] = UNSET;
    }

    for &v in &sources {
        scratch.epoch += 1;
        let epoch = scratch.epoch;
        scratch.queue.clear();
        scratch.stamp[v.index()] = epoch;
        scratch.level[v.index()] = 0;
        scratch.queue.push_back(v);
        let (mut found_l, mut found_r) = (v == q_l, v == q_r);
        if found_l {
            dl[v.index()] = 0;
        }
        if found_r {
            dr[v.index()] = 0;
        }
        while let Some(x) = scratch.queue.pop_front() {
            if found_l && found_r {
                break;
            }
            let d = scratch.level[x.index()];
            for u in cand.all_neighbors(x) {
                if scratch.stamp[u.index()] == epoch {
                    continue;
                }
                scratch.stamp[u.index()] = epoch;
                scratch.level[u.index()] = d + 1;
                if u == q_l {
                    dl[v.index()] = d + 1;
                    found_l = true;
                } else if u == q_r {
                    dr[v.index()] = d + 1;
                    found_r = true;
                }
                scratch.queue.push_back(u);
            }
        }
    }

    *cand.dist_mut(side_l) = dl;
    *cand.dist_mut(side_l.other()) = dr;
}
