//! BCC extraction and maintenance: peel each side to its core threshold,
//! keep the query pair's connected component, and hold qualified leaders
//! on both sides.

use super::candidate::CandidateGraph;
use super::leader;
use super::{BccQuery, Criterion, RunStats, Strategy};
use crate::graph::{Label, VertexId, VertexSet};
use crate::index::OfflineIndex;
use std::collections::VecDeque;

/// Side thresholds indexed by label: k1 applies to q_l's side.
pub(super) fn thresholds(q: &BccQuery, g: &crate::graph::LabeledGraph) -> [u32; 2] {
    let mut k = [0u32; 2];
    k[g.label(q.q_l).index()] = q.k1;
    k[g.label(q.q_r).index()] = q.k2;
    k
}

fn core_criterion(side: Label, q: &BccQuery, g: &crate::graph::LabeledGraph) -> Criterion {
    if side == g.label(q.q_l) {
        Criterion::LeftCore
    } else {
        Criterion::RightCore
    }
}

pub(super) fn butterfly_criterion(
    side: Label,
    q: &BccQuery,
    g: &crate::graph::LabeledGraph,
) -> Criterion {
    if side == g.label(q.q_l) {
        Criterion::LeftButterfly
    } else {
        Criterion::RightButterfly
    }
}

/// Cascade-peels both sides to their thresholds and keeps only the
/// component containing the query pair, iterating to a fixed point.
/// Removed vertices are appended to `removed`. Fails as soon as a query
/// vertex would be peeled or the pair disconnects.
pub(super) fn enforce_cores_and_connectivity(
    cand: &mut CandidateGraph,
    q: &BccQuery,
    k_of: [u32; 2],
    removed: &mut Vec<VertexId>,
) -> Result<(), Criterion> {
    let g = cand.graph();
    loop {
        let mut changed = false;

        // peel sides below threshold
        let mut queue: VecDeque<VertexId> = cand
            .active()
            .iter()
            .filter(|&v| cand.side_degree(v) < k_of[g.label(v).index()])
            .collect();
        while let Some(v) = queue.pop_front() {
            if !cand.contains(v) {
                continue;
            }
            if v == q.q_l || v == q.q_r {
                return Err(core_criterion(g.label(v), q, g));
            }
            let neighbors: Vec<VertexId> = cand.side_neighbors(v).collect();
            cand.deactivate(v);
            removed.push(v);
            changed = true;
            for u in neighbors {
                if cand.side_degree(u) < k_of[g.label(u).index()] {
                    queue.push_back(u);
                }
            }
        }

        // keep only the query component
        let mut component = VertexSet::new(g.vertex_count());
        component.insert(q.q_l);
        let mut bfs = VecDeque::new();
        bfs.push_back(q.q_l);
        while let Some(v) = bfs.pop_front() {
            for u in cand.all_neighbors(v) {
                if component.insert(u) {
                    bfs.push_back(u);
                }
            }
        }
        if !component.contains(q.q_r) {
            return Err(Criterion::Connected);
        }
        let outside: Vec<VertexId> = cand
            .active()
            .iter()
            .filter(|&v| !component.contains(v))
            .collect();
        for v in outside {
            cand.deactivate(v);
            removed.push(v);
            changed = true;
        }

        if !changed {
            return Ok(());
        }
    }
}

/// Keeps both leaders qualified, re-selecting by the strategy's rule
/// when one died or fell under the threshold. Basic revalidates by
/// recounting the leaders' butterfly degrees and re-finds with a fresh
/// full-side recount; Fast reads the maintained degrees and re-finds in
/// descending comprehensive-score order.
pub(super) fn revalidate_leaders(
    cand: &mut CandidateGraph,
    idx: &OfflineIndex,
    q: &BccQuery,
    stats: &mut RunStats,
) -> Result<(), Criterion> {
    let g = cand.graph();
    for side in [g.label(q.q_l), g.label(q.q_r)] {
        let (prev, _) = cand.leader(side).expect("leader set during extraction");
        let current = if cand.contains(prev) {
            match q.strategy {
                Strategy::Basic => {
                    stats.chi_computations += 1;
                    Some(cand.recompute_chi(prev))
                }
                Strategy::Fast => Some(cand.chi(prev)),
            }
        } else {
            None
        };
        if let Some(chi) = current {
            if chi >= q.b {
                cand.set_leader(side, prev, chi);
                continue;
            }
        }

        stats.leader_updates += 1;
        let replacement = match q.strategy {
            Strategy::Basic => leader::argmax_chi_fresh(cand, side, stats),
            Strategy::Fast => {
                let qv = if g.label(q.q_l) == side { q.q_l } else { q.q_r };
                let v = leader::filvm(cand, idx, qv, q.b);
                Some((v, cand.chi(v)))
            }
        };
        match replacement {
            Some((v, chi)) if chi >= q.b => cand.set_leader(side, v, chi),
            _ => return Err(butterfly_criterion(side, q, g)),
        }
    }
    Ok(())
}

/// Restores the BCC invariants after the caller applied a deletion
/// batch: cascade-peel, re-prune to the query component, refresh the
/// butterfly degrees around the deletions (Fast), and revalidate or
/// re-select the leaders. Returns the extra vertices removed by the
/// cascade, or the criterion that failed (the reduction loop's
/// termination signal).
pub fn maintain_bcc(
    cand: &mut CandidateGraph,
    idx: &OfflineIndex,
    q: &BccQuery,
    batch_just_removed: &[VertexId],
    stats: &mut RunStats,
) -> Result<Vec<VertexId>, Criterion> {
    let g = cand.graph();
    let k_of = thresholds(q, g);
    let mut removed = Vec::new();
    enforce_cores_and_connectivity(cand, q, k_of, &mut removed)?;
    if q.strategy == Strategy::Fast {
        let mut all = batch_just_removed.to_vec();
        all.extend_from_slice(&removed);
        let affected = cand.chi_affected_by(&all);
        for v in affected {
            cand.recompute_chi(v);
            stats.chi_computations += 1;
        }
    }
    revalidate_leaders(cand, idx, q, stats)?;
    Ok(removed)
}

/// Extracts the maximal connected (k1,k2,b)-BCC containing the query
/// pair from the expanded candidate, and installs the initial leaders.
///
/// After the core thresholds are satisfied the community is not shrunk
/// further toward higher cores; leader existence is a check, not a
/// pruning rule, since removing vertices can only lower butterfly
/// degrees.
pub fn extract_bcc(
    cand: &mut CandidateGraph,
    idx: &OfflineIndex,
    q: &BccQuery,
    stats: &mut RunStats,
) -> Result<(), Criterion> {
    let g = cand.graph();
    let k_of = thresholds(q, g);
    let mut removed = Vec::new();
    enforce_cores_and_connectivity(cand, q, k_of, &mut removed)?;

    // butterfly degrees of every active cross member
    let members: Vec<VertexId> = cand
        .active()
        .iter()
        .filter(|&v| cand.cross_degree(v) > 0)
        .collect();
    for v in members {
        cand.recompute_chi(v);
        stats.chi_computations += 1;
    }

    for side in [g.label(q.q_l), g.label(q.q_r)] {
        let pick = match q.strategy {
            Strategy::Basic => leader::argmax_chi(cand, side),
            Strategy::Fast => {
                let qv = if g.label(q.q_l) == side { q.q_l } else { q.q_r };
                let v = leader::filvm(cand, idx, qv, q.b);
                Some((v, cand.chi(v)))
            }
        };
        match pick {
            Some((v, chi)) if chi >= q.b => cand.set_leader(side, v, chi),
            _ => return Err(butterfly_criterion(side, q, g)),
        }
    }
    Ok(())
}
