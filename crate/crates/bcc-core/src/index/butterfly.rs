//! Cross-bipartite extraction and exact butterfly-degree counting.
//!
//! A butterfly is a 2x2 biclique of the cross-label bipartite subgraph.
//! Counting is wedge based: from each start vertex, co-neighbor pair
//! multiplicities w contribute C(w, 2) butterflies, run once per side.

use crate::graph::{Label, LabeledGraph, VertexId, VertexSet};

/// The bipartite subgraph formed by heterogeneous edges and the vertices
/// incident to them.
pub struct CrossBipartite {
    /// Cross-neighbor lists (sorted), dense over the parent universe.
    adj: Vec<Vec<VertexId>>,
    left: Vec<VertexId>,
    right: Vec<VertexId>,
    edge_count: usize,
}

impl CrossBipartite {
    /// Sorted members of the label-0 side.
    pub fn left(&self) -> &[VertexId] {
        &self.left
    }

    /// Sorted members of the label-1 side.
    pub fn right(&self) -> &[VertexId] {
        &self.right
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_member(&self, v: VertexId) -> bool {
        !self.adj[v.index()].is_empty()
    }

    pub fn cross_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.left
            .iter()
            .flat_map(move |&u| self.adj[u.index()].iter().map(move |&v| (u, v)))
    }
}

/// Collects the heterogeneous edges with both endpoints in `active`
/// (`None` = all vertices) and the vertices incident to them.
pub fn extract_cross_bipartite(g: &LabeledGraph, active: Option<&VertexSet>) -> CrossBipartite {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut edge_count = 0;
    for v in g.vertices() {
        if active.is_some_and(|s| !s.contains(v)) {
            continue;
        }
        let lab = g.label(v);
        let cross: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| g.label(u) != lab && !active.is_some_and(|s| !s.contains(u)))
            .collect();
        if cross.is_empty() {
            continue;
        }
        edge_count += cross.len();
        adj[v.index()] = cross;
        if lab == Label(0) {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    CrossBipartite {
        adj,
        left,
        right,
        edge_count: edge_count / 2,
    }
}

/// Exact butterfly degree per vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ButterflyIndex {
    chi: Vec<u64>,
    total: u64,
}

impl ButterflyIndex {
    pub(crate) fn from_parts(chi: Vec<u64>, total: u64) -> ButterflyIndex {
        ButterflyIndex { chi, total }
    }

    #[inline]
    pub fn chi(&self, v: VertexId) -> u64 {
        self.chi[v.index()]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.chi
    }

    pub fn total_butterflies(&self) -> u64 {
        self.total
    }
}

#[inline]
fn pairs(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Counts butterflies per vertex with one wedge pass per side.
pub fn butterfly_degrees(b: &CrossBipartite) -> ButterflyIndex {
    let n = b.adj.len();
    let mut chi = vec![0u64; n];
    let mut wedge = vec![0u64; n];
    let mut touched: Vec<VertexId> = Vec::new();
    for side in [&b.left, &b.right] {
        for &u in side.iter() {
            for &w in &b.adj[u.index()] {
                for &v in &b.adj[w.index()] {
                    if v == u {
                        continue;
                    }
                    if wedge[v.index()] == 0 {
                        touched.push(v);
                    }
                    wedge[v.index()] += 1;
                }
            }
            let mut total = 0u64;
            for &v in &touched {
                total += pairs(wedge[v.index()]);
                wedge[v.index()] = 0;
            }
            touched.clear();
            chi[u.index()] = total;
        }
    }
    let sum: u64 = chi.iter().sum();
    debug_assert_eq!(sum % 4, 0, "every butterfly touches four vertices");
    ButterflyIndex {
        chi,
        total: sum / 4,
    }
}
