//! Independent community validation.
//!
//! Checks the six BCC criteria directly on a vertex set, sharing none of
//! the engine's incremental bookkeeping: plain hash sets, a fresh BFS,
//! and butterfly existence counted by a different route (pairs of cross
//! neighbors choosing the fourth corner) than the engine's wedge counts.

use super::{BccQuery, Criterion};
use crate::graph::{Label, LabeledGraph, VertexId};
use std::collections::{HashMap, HashSet, VecDeque};

/// Outcome of every criterion check, in reporting order.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checks: Vec<(Criterion, bool)>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|&(_, pass)| pass)
    }

    pub fn failed(&self) -> Vec<Criterion> {
        self.checks
            .iter()
            .filter(|&&(_, pass)| !pass)
            .map(|&(c, _)| c)
            .collect()
    }
}

/// Validates `community` against the query's thresholds.
pub fn validate_bcc(g: &LabeledGraph, community: &[VertexId], q: &BccQuery) -> ValidationReport {
    let members: HashSet<VertexId> = community.iter().copied().collect();
    let left_label = g.label(q.q_l);

    let side_of = |lab: Label| -> Vec<VertexId> {
        community
            .iter()
            .copied()
            .filter(|&v| g.label(v) == lab)
            .collect()
    };
    let left = side_of(left_label);
    let right = side_of(left_label.other());

    let labels_ok = !left.is_empty() && !right.is_empty();
    let contains_q = members.contains(&q.q_l) && members.contains(&q.q_r);

    // core checks: every member must keep k same-label neighbors inside
    let core_ok = |side: &[VertexId], k: u32| -> bool {
        side.iter().all(|&v| {
            let d = g
                .neighbors(v)
                .iter()
                .filter(|&&u| g.label(u) == g.label(v) && members.contains(&u))
                .count() as u32;
            d >= k
        })
    };
    let left_core = !left.is_empty() && core_ok(&left, q.k1);
    let right_core = !right.is_empty() && core_ok(&right, q.k2);

    // cross adjacency restricted to the community
    let mut cross: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
    for &v in community {
        let nbrs: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| g.label(u) != g.label(v) && members.contains(&u))
            .collect();
        if !nbrs.is_empty() {
            cross.insert(v, nbrs);
        }
    }
    // butterflies through v = sum over pairs of its cross neighbors of
    // (|common cross neighbors| - 1), the -1 discounting v itself
    let butterflies_of = |v: VertexId| -> u64 {
        let Some(nbrs) = cross.get(&v) else { return 0 };
        let mut count = 0u64;
        for (i, &w1) in nbrs.iter().enumerate() {
            let n1: HashSet<VertexId> = cross[&w1].iter().copied().collect();
            for &w2 in &nbrs[i + 1..] {
                let shared = cross[&w2].iter().filter(|x| n1.contains(x)).count() as u64;
                count += shared - 1; // v itself is always shared
            }
        }
        count
    };
    let side_has_leader =
        |side: &[VertexId]| -> bool { side.iter().any(|&v| butterflies_of(v) >= q.b) };
    let left_butterfly = side_has_leader(&left);
    let right_butterfly = side_has_leader(&right);

    // connectivity by BFS inside the member set
    let connected = if contains_q && !community.is_empty() {
        let mut seen = HashSet::new();
        seen.insert(q.q_l);
        let mut queue = VecDeque::new();
        queue.push_back(q.q_l);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if members.contains(&u) && seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        seen.len() == members.len()
    } else {
        false
    };

    ValidationReport {
        checks: vec![
            (Criterion::Labels, labels_ok),
            (Criterion::LeftCore, left_core),
            (Criterion::RightCore, right_core),
            (Criterion::LeftButterfly, left_butterfly),
            (Criterion::RightButterfly, right_butterfly),
            (Criterion::Connected, connected),
            (Criterion::ContainsQuery, contains_q),
        ],
    }
}
