//! BFS distances, deterministic shortest paths, induced-subgraph views.

use super::{LabeledGraph, VertexId, VertexSet};
use std::collections::{HashMap, VecDeque};

/// Unweighted hop distances from `source`, restricted to `active`
/// (`None` = whole graph). Unreachable vertices are absent from the map.
///
/// Returns `None` when `source` is outside the active set.
pub fn bfs_distances(
    g: &LabeledGraph,
    source: VertexId,
    active: Option<&VertexSet>,
) -> Option<HashMap<VertexId, u32>> {
    if let Some(set) = active {
        if !set.contains(source) {
            return None;
        }
    }
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(source, 0u32);
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        for &u in g.neighbors(v) {
            if active.is_some_and(|set| !set.contains(u)) {
                continue;
            }
            if let std::collections::hash_map::Entry::Vacant(slot) = dist.entry(u) {
                slot.insert(d + 1);
                queue.push_back(u);
            }
        }
    }
    Some(dist)
}

/// Minimum-hop path from `u` to `v`, or `None` if disconnected.
///
/// Ties are broken by expanding sorted neighbor lists in order, so the
/// result is deterministic for a given graph.
pub fn shortest_path(g: &LabeledGraph, u: VertexId, v: VertexId) -> Option<Vec<VertexId>> {
    if u == v {
        return Some(vec![u]);
    }
    let n = g.vertex_count();
    let mut parent: Vec<Option<VertexId>> = vec![None; n];
    let mut seen = VertexSet::new(n);
    seen.insert(u);
    let mut queue = VecDeque::new();
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if seen.insert(y) {
                parent[y.index()] = Some(x);
                if y == v {
                    let mut path = vec![v];
                    let mut cur = v;
                    while let Some(p) = parent[cur.index()] {
                        path.push(p);
                        cur = p;
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(y);
            }
        }
    }
    None
}

/// Induced-subgraph view: the parent graph plus an active-vertex set.
/// Contains exactly the edges with both endpoints active.
pub struct Subgraph<'g> {
    graph: &'g LabeledGraph,
    active: VertexSet,
}

impl<'g> Subgraph<'g> {
    pub fn new(graph: &'g LabeledGraph, active: VertexSet) -> Subgraph<'g> {
        Subgraph { graph, active }
    }

    pub fn induced(
        graph: &'g LabeledGraph,
        vs: impl IntoIterator<Item = VertexId>,
    ) -> Subgraph<'g> {
        Subgraph::new(
            graph,
            VertexSet::from_iter_with_universe(graph.vertex_count(), vs),
        )
    }

    pub fn graph(&self) -> &'g LabeledGraph {
        self.graph
    }

    pub fn active(&self) -> &VertexSet {
        &self.active
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.active.contains(v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.active.iter()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| self.active.contains(u))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).count()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |u| self.neighbors(u).map(move |v| (u, v)))
            .filter(|(u, v)| u < v)
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }
}
