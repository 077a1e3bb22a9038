//! Per-side core decomposition.
//!
//! Coreness counts homogeneous neighbors only: each label side is peeled
//! within its own induced subgraph, and cross edges never contribute.

use crate::graph::{Label, LabeledGraph, VertexId};

/// Core value per vertex, each computed within its own label side.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CorenessIndex {
    delta: Vec<u32>,
}

impl CorenessIndex {
    pub(crate) fn from_delta(delta: Vec<u32>) -> CorenessIndex {
        CorenessIndex { delta }
    }

    #[inline]
    pub fn delta(&self, v: VertexId) -> u32 {
        self.delta[v.index()]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.delta
    }

    pub fn max(&self) -> u32 {
        self.delta.iter().copied().max().unwrap_or(0)
    }
}

/// Core values of one label side via bin-sort peeling; vertices of the
/// other side are left at 0.
pub fn core_decomposition(g: &LabeledGraph, side: Label) -> CorenessIndex {
    let n = g.vertex_count();
    let mut delta = vec![0u32; n];
    let side_verts: Vec<VertexId> = g.vertices().filter(|&v| g.label(v) == side).collect();
    if side_verts.is_empty() {
        return CorenessIndex { delta };
    }

    let mut deg = vec![0u32; n];
    let mut max_deg = 0usize;
    for &v in &side_verts {
        let d = g
            .neighbors(v)
            .iter()
            .filter(|&&u| g.label(u) == side)
            .count() as u32;
        deg[v.index()] = d;
        max_deg = max_deg.max(d as usize);
    }

    // Counting sort by degree; bin[d] marks the start of the degree-d
    // block among still-unprocessed vertices.
    let mut bin = vec![0usize; max_deg + 2];
    for &v in &side_verts {
        bin[deg[v.index()] as usize + 1] += 1;
    }
    for i in 1..bin.len() {
        bin[i] += bin[i - 1];
    }
    let mut order = vec![VertexId(0); side_verts.len()];
    let mut pos = vec![usize::MAX; n];
    {
        let mut cursor = bin.clone();
        for &v in &side_verts {
            let d = deg[v.index()] as usize;
            order[cursor[d]] = v;
            pos[v.index()] = cursor[d];
            cursor[d] += 1;
        }
    }

    for i in 0..order.len() {
        let v = order[i];
        delta[v.index()] = deg[v.index()];
        for &u in g.neighbors(v) {
            if g.label(u) != side || deg[u.index()] <= deg[v.index()] {
                continue;
            }
            // Move u to the front of its degree block, then shrink it.
            let du = deg[u.index()] as usize;
            let pu = pos[u.index()];
            let pw = bin[du];
            let w = order[pw];
            if u != w {
                order[pu] = w;
                order[pw] = u;
                pos[u.index()] = pw;
                pos[w.index()] = pu;
            }
            bin[du] += 1;
            deg[u.index()] -= 1;
        }
    }

    CorenessIndex { delta }
}

/// Coreness for the whole graph: both sides peeled independently.
pub fn coreness(g: &LabeledGraph) -> CorenessIndex {
    let left = core_decomposition(g, Label(0));
    let right = core_decomposition(g, Label(1));
    let delta = left
        .delta
        .iter()
        .zip(&right.delta)
        .map(|(&a, &b)| a.max(b))
        .collect();
    CorenessIndex { delta }
}
