//! Local expansion: grow the query shortest path into the starting
//! candidate, layer by layer.

use super::candidate::CandidateGraph;
use super::BccQuery;
use crate::graph::{LabeledGraph, VertexId, VertexSet};
use crate::index::OfflineIndex;

/// Expands `path` (the shortest path connecting the query pair) into the
/// initial candidate. Each side's admission threshold is the minimum
/// coreness of the path vertices on that side; adjacent vertices meeting
/// their side's threshold join breadth-first, and growth stops after the
/// first layer that pushes the candidate past `eta`.
pub fn local_expand<'g>(
    g: &'g LabeledGraph,
    idx: &OfflineIndex,
    q: &BccQuery,
    path: &[VertexId],
) -> CandidateGraph<'g> {
    let mut threshold = [u32::MAX; 2];
    for &v in path {
        let side = g.label(v).index();
        threshold[side] = threshold[side].min(idx.delta(v));
    }

    let mut active = VertexSet::from_iter_with_universe(g.vertex_count(), path.iter().copied());
    let mut frontier: Vec<VertexId> = path.to_vec();
    while active.len() <= q.eta && !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            for &u in g.neighbors(v) {
                if !active.contains(u) && idx.delta(u) >= threshold[g.label(u).index()] {
                    active.insert(u);
                    next.push(u);
                }
            }
        }
        frontier = next;
    }

    CandidateGraph::new(g, active)
}
