//! Leader selection.
//!
//! Basic re-finds a side's leader by computing fresh butterfly degrees
//! for every cross member of the side and taking the maximum. The fast
//! path walks candidates in descending comprehensive-score order — the
//! query vertex first, then its same-side neighbors, then the rest of
//! the side — and returns the first vertex whose current butterfly
//! degree qualifies.

use super::candidate::CandidateGraph;
use crate::graph::{Label, VertexId};
use crate::index::OfflineIndex;

/// Highest-butterfly-degree vertex of the side's current cross members,
/// recomputing each degree; ties go to the smaller id. `None` when the
/// side has no cross member.
pub(super) fn argmax_chi_fresh(
    cand: &mut CandidateGraph,
    side: Label,
    stats: &mut super::RunStats,
) -> Option<(VertexId, u64)> {
    let members: Vec<VertexId> = cand
        .active()
        .iter()
        .filter(|&v| cand.graph().label(v) == side && cand.cross_degree(v) > 0)
        .collect();
    let mut best: Option<(VertexId, u64)> = None;
    for v in members {
        let chi = cand.recompute_chi(v);
        stats.chi_computations += 1;
        if best.is_none_or(|(_, c)| chi > c) {
            best = Some((v, chi));
        }
    }
    best
}

/// As above but over already-current butterfly degrees (used right after
/// a full recount).
pub(super) fn argmax_chi(cand: &CandidateGraph, side: Label) -> Option<(VertexId, u64)> {
    cand.active()
        .iter()
        .filter(|&v| cand.graph().label(v) == side && cand.cross_degree(v) > 0)
        .map(|v| (v, cand.chi(v)))
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
}

/// Fast leader identification over current butterfly degrees.
///
/// Candidate order: the query vertex itself; its active same-side
/// neighbors by descending VSC; then the remaining scored side vertices
/// by descending VSC (ties by smaller id). The first candidate with
/// butterfly degree >= b wins; the query vertex is the fallback when
/// nothing qualifies.
pub fn filvm(cand: &CandidateGraph, idx: &OfflineIndex, q: VertexId, b: u64) -> VertexId {
    debug_assert!(cand.contains(q));
    if cand.chi(q) >= b {
        return q;
    }
    let side = cand.graph().label(q);

    let mut hop: Vec<VertexId> = cand
        .side_neighbors(q)
        .filter(|&v| idx.vsc(v).is_some())
        .collect();
    hop.sort_by(|&a, &b| {
        idx.vsc(b)
            .unwrap()
            .partial_cmp(&idx.vsc(a).unwrap())
            .unwrap()
            .then(a.cmp(&b))
    });
    for &v in &hop {
        if cand.chi(v) >= b {
            return v;
        }
    }

    for &v in idx.vsc_order(side) {
        if v == q || !cand.contains(v) || hop.contains(&v) {
            continue;
        }
        if cand.chi(v) >= b {
            return v;
        }
    }
    q
}
