use super::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::io::Write;

pub(crate) fn names() -> [String; 2] {
    ["A".to_string(), "B".to_string()]
}

/// Graph from external edges; every id in `side_b` gets label 1, the rest 0.
pub(crate) fn graph_from(edges: &[(u64, u64)], side_b: &[u64]) -> LabeledGraph {
    let mut ids: Vec<u64> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    ids.extend_from_slice(side_b);
    ids.sort_unstable();
    ids.dedup();
    let labels: Vec<(u64, Label)> = ids
        .iter()
        .map(|&id| (id, Label(side_b.contains(&id) as u8)))
        .collect();
    LabeledGraph::from_edges(edges, &labels, names()).unwrap()
}

fn random_edges(rng: &mut ChaCha8Rng, n: u64, p: f64) -> Vec<(u64, u64)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Independent all-pairs shortest-path oracle (Floyd–Warshall).
#[allow(clippy::needless_range_loop)]
fn floyd_warshall(g: &LabeledGraph) -> Vec<Vec<u32>> {
    const INF: u32 = u32::MAX / 4;
    let n = g.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for (u, v) in g.edges() {
        d[u.index()][v.index()] = 1;
        d[v.index()][u.index()] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

#[test]
fn load_small_labeled_graph() {
    let g = graph_from(&[(0, 1), (1, 2)], &[2]);
    assert_eq!(g.vertex_count(), 3);
    assert_eq!(g.edge_count(), 2);
    let hetero: Vec<_> = g
        .edges()
        .filter(|&(u, v)| g.edge_kind(u, v) == EdgeKind::Heterogeneous)
        .collect();
    assert_eq!(hetero.len(), 1);
    let (u, v) = hetero[0];
    assert_eq!((g.external_id(u), g.external_id(v)), (1, 2));
}

#[test]
fn duplicate_edges_and_self_loops_dropped() {
    let g = graph_from(&[(0, 1), (0, 1), (1, 0), (1, 1)], &[0]);
    assert_eq!(g.edge_count(), 1);
    assert_eq!(g.vertex_count(), 2);
}

#[test]
fn comment_headers_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let with = dir.path().join("with.txt");
    let without = dir.path().join("without.txt");
    let labels = dir.path().join("labels.txt");
    std::fs::write(&with, "# SNAP header\n# Nodes: 3 Edges: 2\n0 1\n1 2\n").unwrap();
    std::fs::write(&without, "0 1\n1 2\n").unwrap();
    std::fs::write(&labels, "0 A\n1 A\n2 B\n").unwrap();
    let a = LabeledGraph::load(&with, &labels).unwrap();
    let b = LabeledGraph::load(&without, &labels).unwrap();
    assert_eq!(a.vertex_count(), b.vertex_count());
    assert_eq!(a.edge_count(), b.edge_count());
    let ea: Vec<_> = a
        .edges()
        .map(|(u, v)| (a.external_id(u), a.external_id(v)))
        .collect();
    let eb: Vec<_> = b
        .edges()
        .map(|(u, v)| (b.external_id(u), b.external_id(v)))
        .collect();
    assert_eq!(ea, eb);
}

#[test]
fn malformed_line_reports_number() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("edges.txt");
    let labels = dir.path().join("labels.txt");
    std::fs::write(&edges, "0 1\nnot an edge here\n").unwrap();
    std::fs::write(&labels, "0 A\n1 B\n").unwrap();
    let err = LabeledGraph::load(&edges, &labels).unwrap_err();
    match err {
        GraphError::Malformed { line, .. } => assert_eq!(line, 2),
        other => panic!("unexpected error {other}"),
    }
}

#[test]
fn missing_labels_listed() {
    let err = LabeledGraph::from_edges(&[(0, 1), (1, 7)], &[(0, Label(0))], names()).unwrap_err();
    match err {
        GraphError::MissingLabels(ids) => assert_eq!(ids, vec![1, 7]),
        other => panic!("unexpected error {other}"),
    }
}

#[test]
fn label_alphabet_must_be_two() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("edges.txt");
    let labels = dir.path().join("labels.txt");
    std::fs::write(&edges, "0 1\n").unwrap();
    let mut f = std::fs::File::create(&labels).unwrap();
    writeln!(f, "0 A\n1 B\n2 C").unwrap();
    assert!(matches!(
        LabeledGraph::load(&edges, &labels),
        Err(GraphError::LabelAlphabet { found: 3 })
    ));
}

#[test]
fn isolated_labeled_vertices_allowed() {
    let g = LabeledGraph::from_edges(
        &[(0, 1)],
        &[(0, Label(0)), (1, Label(1)), (9, Label(0))],
        names(),
    )
    .unwrap();
    assert_eq!(g.vertex_count(), 3);
    let iso = g.resolve(9).unwrap();
    assert_eq!(g.degree(iso), 0);
}

#[test]
fn conflicting_label_rejected() {
    let err = LabeledGraph::from_edges(
        &[(0, 1)],
        &[(0, Label(0)), (1, Label(1)), (0, Label(1))],
        names(),
    )
    .unwrap_err();
    assert!(matches!(err, GraphError::ConflictingLabel { id: 0 }));
}

#[test]
fn bfs_on_path() {
    let g = graph_from(&[(10, 11), (11, 12)], &[12]);
    let a = g.resolve(10).unwrap();
    let d = bfs_distances(&g, a, None).unwrap();
    assert_eq!(d[&g.resolve(10).unwrap()], 0);
    assert_eq!(d[&g.resolve(11).unwrap()], 1);
    assert_eq!(d[&g.resolve(12).unwrap()], 2);
}

#[test]
fn bfs_skips_other_component() {
    let g = graph_from(&[(0, 1), (2, 3)], &[1, 3]);
    let d = bfs_distances(&g, g.resolve(0).unwrap(), None).unwrap();
    assert_eq!(d.len(), 2);
    assert!(!d.contains_key(&g.resolve(2).unwrap()));
    assert!(!d.contains_key(&g.resolve(3).unwrap()));
}

#[test]
fn bfs_respects_active_set() {
    // path 0-1-2-3; removing 1 disconnects 0 from the rest
    let g = graph_from(&[(0, 1), (1, 2), (2, 3)], &[1, 3]);
    let mut active = VertexSet::full(g.vertex_count());
    active.remove(g.resolve(1).unwrap());
    let d = bfs_distances(&g, g.resolve(0).unwrap(), Some(&active)).unwrap();
    assert_eq!(d.len(), 1);
    assert!(bfs_distances(&g, g.resolve(1).unwrap(), Some(&active)).is_none());
}

#[test]
fn bfs_matches_all_pairs_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let edges = random_edges(&mut rng, 50, 0.08);
    let g = graph_from(&edges, &(25..50).collect::<Vec<_>>());
    let oracle = floyd_warshall(&g);
    for s in g.vertices() {
        let d = bfs_distances(&g, s, None).unwrap();
        for t in g.vertices() {
            let expect = oracle[s.index()][t.index()];
            match d.get(&t) {
                Some(&got) => assert_eq!(got, expect, "{s:?}->{t:?}"),
                None => assert!(expect >= u32::MAX / 4, "{s:?}->{t:?} should be reachable"),
            }
        }
    }
}

#[test]
fn shortest_path_cases() {
    let g = graph_from(&[(0, 1), (1, 2), (0, 3), (3, 2), (4, 5)], &[1, 3, 5]);
    let (a, b) = (g.resolve(0).unwrap(), g.resolve(1).unwrap());
    assert_eq!(shortest_path(&g, a, b).unwrap(), vec![a, b]);
    assert!(shortest_path(&g, a, g.resolve(4).unwrap()).is_none());
}

#[test]
fn shortest_path_length_matches_bfs() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    // chain keeps it connected, extra random edges added on top
    let mut edges: Vec<(u64, u64)> = (0..19).map(|i| (i, i + 1)).collect();
    edges.extend(random_edges(&mut rng, 20, 0.1));
    let g = graph_from(&edges, &(10..20).collect::<Vec<_>>());
    for u in g.vertices() {
        let d = bfs_distances(&g, u, None).unwrap();
        for v in g.vertices() {
            if u == v {
                continue;
            }
            let path = shortest_path(&g, u, v).unwrap();
            assert_eq!(path.len() as u32 - 1, d[&v]);
            for w in path.windows(2) {
                assert!(g.has_edge(w[0], w[1]));
            }
        }
    }
}

#[test]
fn induced_subgraph_views() {
    let g = graph_from(&[(0, 1), (1, 2), (2, 0)], &[2]);
    let full = Subgraph::induced(&g, g.vertices());
    assert_eq!(full.edge_count(), g.edge_count());
    let single = Subgraph::induced(&g, [g.resolve(0).unwrap()]);
    assert_eq!(single.edge_count(), 0);
    let pair = Subgraph::induced(&g, [g.resolve(0).unwrap(), g.resolve(1).unwrap()]);
    assert_eq!(pair.edge_count(), 1);
}

#[test]
fn loading_is_deterministic() {
    let edges = [(5, 3), (3, 9), (9, 5), (2, 5)];
    let labels: Vec<(u64, Label)> = [2, 3, 5, 9]
        .iter()
        .map(|&i| (i, Label((i % 2 == 0) as u8)))
        .collect();
    let a = LabeledGraph::from_edges(&edges, &labels, names()).unwrap();
    let b = LabeledGraph::from_edges(&edges, &labels, names()).unwrap();
    assert_eq!(a.vertex_count(), b.vertex_count());
    for v in a.vertices() {
        assert_eq!(a.external_id(v), b.external_id(v));
        assert_eq!(a.neighbors(v), b.neighbors(v));
        assert_eq!(a.label(v), b.label(v));
    }
}

#[test]
fn vertex_set_ops() {
    let mut s = VertexSet::new(130);
    assert!(s.insert(VertexId(0)));
    assert!(s.insert(VertexId(129)));
    assert!(!s.insert(VertexId(0)));
    assert_eq!(s.len(), 2);
    assert_eq!(
        s.iter().collect::<Vec<_>>(),
        vec![VertexId(0), VertexId(129)]
    );
    assert!(s.remove(VertexId(0)));
    assert!(!s.remove(VertexId(0)));
    assert_eq!(s.len(), 1);
}

proptest! {
    /// Symmetry, simplicity, and the BFS triangle-step property hold on
    /// arbitrary edge lists.
    #[test]
    fn graph_invariants(raw in proptest::collection::vec((0u64..30, 0u64..30), 0..120)) {
        let g = graph_from(&raw, &(0..30).filter(|i| i % 3 == 0).collect::<Vec<_>>());
        for u in g.vertices() {
            let ns = g.neighbors(u);
            for w in ns.windows(2) {
                prop_assert!(w[0] < w[1], "sorted, no duplicates");
            }
            for &v in ns {
                prop_assert!(v != u, "no self-loops");
                prop_assert!(g.has_edge(v, u), "symmetry");
            }
        }
        if g.vertex_count() > 0 {
            let src = VertexId(0);
            let d = bfs_distances(&g, src, None).unwrap();
            for (&v, &dv) in &d {
                if dv > 0 {
                    let has_step = g
                        .neighbors(v)
                        .iter()
                        .any(|u| d.get(u) == Some(&(dv - 1)));
                    prop_assert!(has_step, "triangle step at {v:?}");
                }
            }
        }
    }
}
