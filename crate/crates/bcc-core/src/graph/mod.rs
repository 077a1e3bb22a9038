//! Labeled-graph representation and primitive traversals.
//!
//! Vertices carry dense internal ids `0..n`; external ids from input
//! files are mapped through a dictionary kept on the graph. Every vertex
//! has exactly one of two labels. Neighbor lists are sorted, which gives
//! `O(log d)` edge-membership tests.

mod load;
mod traverse;

pub use load::GraphError;

use std::collections::HashMap;
use std::fmt;

/// Dense internal vertex id (contiguous `0..n`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// One of the two label symbols of a dataset (`0` or `1`).
///
/// The symbol names ("NLP", "SN", ...) live on the graph; algorithms only
/// care which side of the partition a vertex is on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Label(pub u8);

impl Label {
    #[inline]
    pub fn other(self) -> Label {
        Label(1 - self.0)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Edge classification by endpoint labels.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeKind {
    Homogeneous,
    Heterogeneous,
}

/// Undirected simple graph with one label per vertex.
///
/// Immutable after construction; safe to share across query workers.
#[derive(Debug)]
pub struct LabeledGraph {
    /// CSR offsets, length n+1.
    offsets: Vec<u32>,
    /// Concatenated sorted neighbor lists.
    neighbors: Vec<VertexId>,
    labels: Vec<Label>,
    edge_count: usize,
    /// Internal id -> external id.
    external_ids: Vec<u64>,
    /// External id -> internal id.
    external_to_internal: HashMap<u64, VertexId>,
    /// Display names for label symbols 0 and 1.
    label_names: [String; 2],
}

impl LabeledGraph {
    /// Builds a graph from external-id edges and a complete label map.
    ///
    /// Duplicate edges and self-loops are dropped. Internal ids follow
    /// first appearance: edge endpoints in input order, then label-only
    /// (isolated) vertices in map iteration order as given.
    pub fn from_edges(
        edges: &[(u64, u64)],
        labels: &[(u64, Label)],
        label_names: [String; 2],
    ) -> Result<LabeledGraph, GraphError> {
        load::build(edges, labels, label_names)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn label(&self, v: VertexId) -> Label {
        self.labels[v.index()]
    }

    pub fn label_names(&self) -> &[String; 2] {
        &self.label_names
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let lo = self.offsets[v.index()] as usize;
        let hi = self.offsets[v.index() + 1] as usize;
        &self.neighbors[lo..hi]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn edge_kind(&self, u: VertexId, v: VertexId) -> EdgeKind {
        if self.label(u) == self.label(v) {
            EdgeKind::Homogeneous
        } else {
            EdgeKind::Heterogeneous
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len() as u32).map(VertexId)
    }

    /// Undirected edges as (u, v) with u < v, in internal-id order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |u| self.neighbors(u).iter().map(move |&v| (u, v)))
            .filter(|(u, v)| u < v)
    }

    pub fn external_id(&self, v: VertexId) -> u64 {
        self.external_ids[v.index()]
    }

    pub fn resolve(&self, external: u64) -> Option<VertexId> {
        self.external_to_internal.get(&external).copied()
    }
}

/// Fixed-universe bitset over internal vertex ids.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> VertexSet {
        VertexSet {
            words: vec![0; universe.div_ceil(64)],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> VertexSet {
        let mut s = VertexSet::new(universe);
        for i in 0..universe as u32 {
            s.insert(VertexId(i));
        }
        s
    }

    pub fn from_iter_with_universe<I: IntoIterator<Item = VertexId>>(
        universe: usize,
        it: I,
    ) -> VertexSet {
        let mut s = VertexSet::new(universe);
        for v in it {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        let i = v.index();
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        let i = v.index();
        let mask = 1u64 << (i % 64);
        let fresh = self.words[i / 64] & mask == 0;
        if fresh {
            self.words[i / 64] |= mask;
            self.len += 1;
        }
        fresh
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        let i = v.index();
        let mask = 1u64 << (i % 64);
        let present = self.words[i / 64] & mask != 0;
        if present {
            self.words[i / 64] &= !mask;
            self.len -= 1;
        }
        present
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Iterates members in increasing id order.
    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros();
                bits &= bits - 1;
                Some(VertexId((wi * 64) as u32 + b))
            })
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub use traverse::{bfs_distances, shortest_path, Subgraph};

#[cfg(test)]
pub(crate) mod tests;
