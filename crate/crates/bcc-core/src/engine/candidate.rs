//! Mutable per-query state over an immutable parent graph.
//!
//! One query execution owns its `CandidateGraph` exclusively. Vertices
//! are deleted by clearing bits in the active set; homogeneous and cross
//! degrees are kept current incrementally, butterfly degrees are updated
//! per the executing strategy's rules.

use crate::graph::{Label, LabeledGraph, VertexId, VertexSet};

pub const UNSET: u32 = u32::MAX;

pub struct CandidateGraph<'g> {
    graph: &'g LabeledGraph,
    active: VertexSet,
    /// Same-label active degree per vertex.
    side_degree: Vec<u32>,
    /// Different-label active degree per vertex; membership in the cross
    /// bipartite is `cross_degree > 0`.
    cross_degree: Vec<u32>,
    /// Butterfly degree on the current active cross subgraph. Kept
    /// current by the Fast strategy; Basic refreshes entries on demand.
    chi: Vec<u64>,
    /// Leader per label side, with the butterfly degree it had when set.
    leaders: [Option<(VertexId, u64)>; 2],
    /// Hop distances from the two query vertices, indexed by the query
    /// vertex's label side.
    dist: [Vec<u32>; 2],
    // wedge-count scratch for chi recomputation
    scratch: Vec<u64>,
    touched: Vec<VertexId>,
}

impl<'g> CandidateGraph<'g> {
    pub fn new(graph: &'g LabeledGraph, active: VertexSet) -> CandidateGraph<'g> {
        let n = graph.vertex_count();
        let mut cand = CandidateGraph {
            graph,
            active,
            side_degree: vec![0; n],
            cross_degree: vec![0; n],
            chi: vec![0; n],
            leaders: [None, None],
            dist: [vec![UNSET; n], vec![UNSET; n]],
            scratch: vec![0; n],
            touched: Vec::new(),
        };
        for v in cand.active.iter() {
            let lab = graph.label(v);
            let mut same = 0;
            let mut cross = 0;
            for &u in graph.neighbors(v) {
                if cand.active.contains(u) {
                    if graph.label(u) == lab {
                        same += 1;
                    } else {
                        cross += 1;
                    }
                }
            }
            cand.side_degree[v.index()] = same;
            cand.cross_degree[v.index()] = cross;
        }
        cand
    }

    pub fn graph(&self) -> &'g LabeledGraph {
        self.graph
    }

    pub fn active(&self) -> &VertexSet {
        &self.active
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.active.contains(v)
    }

    pub fn len(&self) -> usize {
        self.active.len()
    }

    pub fn is_empty(&self) -> bool {
        self.active.is_empty()
    }

    #[inline]
    pub fn side_degree(&self, v: VertexId) -> u32 {
        self.side_degree[v.index()]
    }

    #[inline]
    pub fn cross_degree(&self, v: VertexId) -> u32 {
        self.cross_degree[v.index()]
    }

    #[inline]
    pub fn chi(&self, v: VertexId) -> u64 {
        self.chi[v.index()]
    }

    pub fn leader(&self, side: Label) -> Option<(VertexId, u64)> {
        self.leaders[side.index()]
    }

    pub(crate) fn set_leader(&mut self, side: Label, leader: VertexId, chi: u64) {
        self.leaders[side.index()] = Some((leader, chi));
    }

    /// Active same-label neighbors of `v`.
    pub fn side_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let lab = self.graph.label(v);
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| self.active.contains(u) && self.graph.label(u) == lab)
    }

    /// Active different-label neighbors of `v`.
    pub fn cross_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let lab = self.graph.label(v);
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| self.active.contains(u) && self.graph.label(u) != lab)
    }

    /// Active neighbors of `v` regardless of label.
    pub fn all_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| self.active.contains(u))
    }

    /// Deactivates `v` and updates neighbor degrees. No cascading.
    pub fn deactivate(&mut self, v: VertexId) {
        if !self.active.remove(v) {
            return;
        }
        let lab = self.graph.label(v);
        for &u in self.graph.neighbors(v) {
            if !self.active.contains(u) {
                continue;
            }
            if self.graph.label(u) == lab {
                self.side_degree[u.index()] -= 1;
            } else {
                self.cross_degree[u.index()] -= 1;
            }
        }
        self.side_degree[v.index()] = 0;
        self.cross_degree[v.index()] = 0;
        self.chi[v.index()] = 0;
    }

    pub fn remove_batch(&mut self, batch: &[VertexId]) {
        for &v in batch {
            self.deactivate(v);
        }
    }

    /// Fresh butterfly degree of `v` on the current active cross
    /// subgraph, via co-neighbor wedge counts.
    pub fn recompute_chi(&mut self, v: VertexId) -> u64 {
        debug_assert!(self.touched.is_empty());
        let lab = self.graph.label(v);
        for &w in self.graph.neighbors(v) {
            if !self.active.contains(w) || self.graph.label(w) == lab {
                continue;
            }
            for &x in self.graph.neighbors(w) {
                if x == v || !self.active.contains(x) || self.graph.label(x) != lab {
                    continue;
                }
                if self.scratch[x.index()] == 0 {
                    self.touched.push(x);
                }
                self.scratch[x.index()] += 1;
            }
        }
        let mut total = 0u64;
        for &x in &self.touched {
            let w = self.scratch[x.index()];
            total += w * w.saturating_sub(1) / 2;
            self.scratch[x.index()] = 0;
        }
        self.touched.clear();
        self.chi[v.index()] = total;
        total
    }

    /// Vertices whose butterfly degree may have changed after `removed`
    /// left the active set: their still-active cross neighbors and those
    /// vertices' cross neighbors (a butterfly spans no farther).
    pub fn chi_affected_by(&self, removed: &[VertexId]) -> Vec<VertexId> {
        let mut affected = VertexSet::new(self.graph.vertex_count());
        for &r in removed {
            let lab = self.graph.label(r);
            for &w in self.graph.neighbors(r) {
                if !self.active.contains(w) || self.graph.label(w) == lab {
                    continue;
                }
                affected.insert(w);
                for &x in self.graph.neighbors(w) {
                    if x != r && self.active.contains(x) && self.graph.label(x) == lab {
                        affected.insert(x);
                    }
                }
            }
        }
        affected.iter().collect()
    }

    /// Distance array for the query vertex on `side`.
    pub(crate) fn dist_of(&self, side: Label) -> &[u32] {
        &self.dist[side.index()]
    }

    pub(crate) fn dist_mut(&mut self, side: Label) -> &mut Vec<u32> {
        &mut self.dist[side.index()]
    }

    /// Max hop distance to the query pair, `None` while unreachable or
    /// not yet computed.
    pub fn query_distance_of(&self, v: VertexId) -> Option<u32> {
        let (l, r) = (self.dist[0][v.index()], self.dist[1][v.index()]);
        if l == UNSET || r == UNSET {
            None
        } else {
            Some(l.max(r))
        }
    }
}
