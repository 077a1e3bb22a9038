use super::*;
use crate::graph::tests::{graph_from, names};
use crate::graph::{Label, LabeledGraph, VertexId};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// Independent coreness oracle: repeatedly delete a minimum-degree vertex
/// of the side, recording the highest threshold seen when each vertex goes.
fn peeling_oracle(g: &LabeledGraph, side: Label) -> Vec<u32> {
    let n = g.vertex_count();
    let mut alive = vec![false; n];
    let mut deg = vec![0u32; n];
    let verts: Vec<VertexId> = g.vertices().filter(|&v| g.label(v) == side).collect();
    for &v in &verts {
        alive[v.index()] = true;
    }
    for &v in &verts {
        deg[v.index()] = g
            .neighbors(v)
            .iter()
            .filter(|&&u| g.label(u) == side)
            .count() as u32;
    }
    let mut delta = vec![0u32; n];
    let mut k = 0u32;
    for _ in 0..verts.len() {
        let v = verts
            .iter()
            .copied()
            .filter(|v| alive[v.index()])
            .min_by_key(|v| (deg[v.index()], v.0))
            .unwrap();
        k = k.max(deg[v.index()]);
        delta[v.index()] = k;
        alive[v.index()] = false;
        for &u in g.neighbors(v) {
            if g.label(u) == side && alive[u.index()] {
                deg[u.index()] -= 1;
            }
        }
    }
    delta
}

/// Independent butterfly oracle: enumerate side-pair x side-pair
/// combinations and test all four edges.
fn butterfly_oracle(
    left: &[VertexId],
    right: &[VertexId],
    edges: &HashSet<(VertexId, VertexId)>,
    n: usize,
) -> (Vec<u64>, u64) {
    let has = |u: VertexId, v: VertexId| edges.contains(&(u, v)) || edges.contains(&(v, u));
    let mut chi = vec![0u64; n];
    let mut total = 0u64;
    for (i, &u1) in left.iter().enumerate() {
        for &u2 in &left[i + 1..] {
            for (j, &v1) in right.iter().enumerate() {
                for &v2 in &right[j + 1..] {
                    if has(u1, v1) && has(u1, v2) && has(u2, v1) && has(u2, v2) {
                        total += 1;
                        for w in [u1, u2, v1, v2] {
                            chi[w.index()] += 1;
                        }
                    }
                }
            }
        }
    }
    (chi, total)
}

fn complete_bipartite(a: u64, b: u64) -> LabeledGraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    graph_from(&edges, &(a..a + b).collect::<Vec<_>>())
}

#[test]
fn triangle_is_two_core() {
    let g = graph_from(&[(0, 1), (1, 2), (2, 0)], &[]);
    let idx = core_decomposition(&g, Label(0));
    for v in g.vertices() {
        assert_eq!(idx.delta(v), 2);
    }
}

#[test]
fn star_is_one_core() {
    let g = graph_from(&[(0, 1), (0, 2), (0, 3), (0, 4)], &[]);
    let idx = core_decomposition(&g, Label(0));
    for v in g.vertices() {
        assert_eq!(idx.delta(v), 1);
    }
}

#[test]
fn coreness_ignores_cross_edges() {
    // 0-1-2 all label A; 3 (label B) attached to everything
    let g = graph_from(&[(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)], &[3]);
    let idx = coreness(&g);
    assert_eq!(idx.delta(g.resolve(1).unwrap()), 1);
    assert_eq!(idx.delta(g.resolve(3).unwrap()), 0); // no same-label neighbor
}

#[test]
fn coreness_matches_peeling_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    let mut edges = Vec::new();
    for u in 0..30u64 {
        for v in (u + 1)..30 {
            if rng.random_bool(0.2) {
                edges.push((u, v));
            }
        }
    }
    let side_b: Vec<u64> = (0..30).filter(|_| rng.random_bool(0.5)).collect();
    let g = graph_from(&edges, &side_b);
    for side in [Label(0), Label(1)] {
        let fast = core_decomposition(&g, side);
        let oracle = peeling_oracle(&g, side);
        for v in g.vertices() {
            if g.label(v) == side {
                assert_eq!(fast.delta(v), oracle[v.index()], "{v:?}");
            }
        }
    }
}

#[test]
fn cross_bipartite_of_homogeneous_graph_is_empty() {
    let g = graph_from(&[(0, 1), (1, 2)], &[]);
    let b = extract_cross_bipartite(&g, None);
    assert_eq!(b.edge_count(), 0);
    assert!(b.left().is_empty() && b.right().is_empty());
}

#[test]
fn cross_bipartite_single_edge() {
    let g = graph_from(&[(0, 1)], &[1]);
    let b = extract_cross_bipartite(&g, None);
    assert_eq!(b.edge_count(), 1);
    assert_eq!(b.left(), &[g.resolve(0).unwrap()]);
    assert_eq!(b.right(), &[g.resolve(1).unwrap()]);
}

#[test]
fn cross_bipartite_matches_label_filter() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut edges = Vec::new();
    for u in 0..24u64 {
        for v in (u + 1)..24 {
            if rng.random_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    let side_b: Vec<u64> = (0..24).filter(|v| v % 3 == 0).collect();
    let g = graph_from(&edges, &side_b);
    let b = extract_cross_bipartite(&g, None);
    let expected: HashSet<(VertexId, VertexId)> = g
        .edges()
        .filter(|&(u, v)| g.label(u) != g.label(v))
        .map(|(u, v)| {
            if g.label(u) == Label(0) {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    let got: HashSet<(VertexId, VertexId)> = b.edges().collect();
    assert_eq!(got, expected);
    for v in g.vertices() {
        let incident = expected.iter().any(|&(a, c)| a == v || c == v);
        assert_eq!(b.is_member(v), incident);
    }
}

#[test]
fn butterflies_in_k22() {
    let g = complete_bipartite(2, 2);
    let idx = butterfly_degrees(&extract_cross_bipartite(&g, None));
    for v in g.vertices() {
        assert_eq!(idx.chi(v), 1);
    }
    assert_eq!(idx.total_butterflies(), 1);
}

#[test]
fn butterflies_in_k23() {
    let g = complete_bipartite(2, 3);
    let idx = butterfly_degrees(&extract_cross_bipartite(&g, None));
    for v in 0..2 {
        assert_eq!(idx.chi(g.resolve(v).unwrap()), 3);
    }
    for v in 2..5 {
        assert_eq!(idx.chi(g.resolve(v).unwrap()), 2);
    }
    assert_eq!(idx.total_butterflies(), 3);
}

#[test]
fn butterflies_match_bruteforce() {
    let mut rng = ChaCha8Rng::seed_from_u64(2020);
    let mut pairs: Vec<(u64, u64)> = (0..20)
        .flat_map(|u| (0..20).map(move |v| (u, 20 + v)))
        .collect();
    pairs.shuffle(&mut rng);
    let edges: Vec<(u64, u64)> = pairs.into_iter().take(80).collect();
    let g = graph_from(&edges, &(20..40).collect::<Vec<_>>());
    let b = extract_cross_bipartite(&g, None);
    let idx = butterfly_degrees(&b);
    let edge_set: HashSet<(VertexId, VertexId)> = b.edges().collect();
    let (chi, total) = butterfly_oracle(b.left(), b.right(), &edge_set, g.vertex_count());
    assert_eq!(idx.total_butterflies(), total);
    for v in g.vertices() {
        assert_eq!(idx.chi(v), chi[v.index()], "{v:?}");
    }
}

#[test]
fn rwr_two_vertex_closed_form() {
    let g = graph_from(&[(0, 1)], &[1]);
    let p = RwrParams::default();
    let s = rwr_scores(&g, g.resolve(0).unwrap(), &p).unwrap();
    // c / (1 - (1-c)^2) with c = 0.15
    assert!((s[g.resolve(0).unwrap().index()] - 0.54054).abs() < 1e-4);
    assert!((s[g.resolve(1).unwrap().index()] - 0.45946).abs() < 1e-4);
}

#[test]
fn rwr_stays_in_component_and_sums_to_one() {
    let g = graph_from(&[(0, 1), (1, 2), (3, 4)], &[1, 4]);
    let p = RwrParams::default();
    let s = rwr_scores(&g, g.resolve(0).unwrap(), &p).unwrap();
    assert_eq!(s[g.resolve(3).unwrap().index()], 0.0);
    assert_eq!(s[g.resolve(4).unwrap().index()], 0.0);
    let sum: f64 = s.iter().sum();
    assert!((sum - 1.0).abs() <= 10.0 * p.tolerance);
    assert!(s.iter().all(|&x| x >= 0.0));
}

#[test]
fn rwr_rejects_degree_zero_seed() {
    let g = LabeledGraph::from_edges(
        &[(0, 1)],
        &[(0, Label(0)), (1, Label(1)), (2, Label(0))],
        names(),
    )
    .unwrap();
    let iso = g.resolve(2).unwrap();
    assert!(matches!(
        rwr_scores(&g, iso, &RwrParams::default()),
        Err(IndexError::ZeroDegreeSeed(v)) if v == iso
    ));
}

/// Per-seed average oracle for the uniform-restart shortcut.
fn per_seed_average(g: &LabeledGraph, p: &RwrParams) -> Vec<f64> {
    let seeds: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let mut acc = vec![0.0; g.vertex_count()];
    for &s in &seeds {
        let run = rwr_scores(g, s, p).unwrap();
        for (a, x) in acc.iter_mut().zip(run) {
            *a += x;
        }
    }
    for a in &mut acc {
        *a /= seeds.len() as f64;
    }
    acc
}

#[test]
fn rs_is_uniform_on_vertex_transitive_cycle() {
    let g = graph_from(
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
        &[3, 4, 5],
    );
    let rs = rs_scores(&g, &RwrParams::default());
    for w in rs.windows(2) {
        assert!((w[0] - w[1]).abs() < 1e-9);
    }
}

#[test]
fn rs_prefers_star_center() {
    let g = graph_from(&[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)], &[1, 2, 3, 4, 5]);
    let p = RwrParams::default();
    let rs = rs_scores(&g, &p);
    let oracle = per_seed_average(&g, &p);
    let center = g.resolve(0).unwrap().index();
    assert!(rs[center] > rs[g.resolve(1).unwrap().index()]);
    assert!(oracle[center] > oracle[g.resolve(1).unwrap().index()]);
}

#[test]
fn rs_shortcut_matches_per_seed_average() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let mut edges = Vec::new();
    for u in 0..40u64 {
        for v in (u + 1)..40 {
            if rng.random_bool(0.12) {
                edges.push((u, v));
            }
        }
    }
    let g = graph_from(&edges, &(0..40).step_by(2).collect::<Vec<_>>());
    // tight stopping so both sides sit at the shared fixed point
    let p = RwrParams {
        tolerance: 1e-12,
        max_iters: 2000,
        ..RwrParams::default()
    };
    let fast = rs_scores(&g, &p);
    let oracle = per_seed_average(&g, &p);
    for (a, b) in fast.iter().zip(&oracle) {
        assert!((a - b).abs() < 1e-6, "{a} vs {b}");
    }
}

#[test]
fn rsn_min_max_arithmetic() {
    let rsn = normalize_rsn(&[2.0, 4.0, 6.0], &[true, true, true]);
    assert_eq!(rsn, vec![0.0, 0.5, 1.0]);
}

#[test]
fn degenerate_normalization_is_half() {
    let rsn = normalize_rsn(&[3.0, 3.0], &[true, true]);
    assert_eq!(rsn, vec![0.5, 0.5]);
}

#[test]
fn bsn_of_k23() {
    let g = complete_bipartite(2, 3);
    let b = extract_cross_bipartite(&g, None);
    let idx = butterfly_degrees(&b);
    let in_cross: Vec<bool> = g.vertices().map(|v| b.is_member(v)).collect();
    let bsn = normalize_bsn(&idx, &in_cross);
    // chi = {3,3,2,2,2} -> {1,1,0,0,0} keyed by external id
    for (ext, expect) in [(0, 1.0), (1, 1.0), (2, 0.0), (3, 0.0), (4, 0.0)] {
        assert_eq!(bsn[g.resolve(ext).unwrap().index()], expect, "vertex {ext}");
    }
}

#[test]
fn vsc_combination_and_domain() {
    let vsc = comprehensive_scores(
        &[1.0, 1.0, 0.3],
        &[0.0, 1.0, 0.9],
        &[true, true, false],
        0.5,
        0.5,
    );
    assert_eq!(vsc[0], 0.5);
    assert_eq!(vsc[1], 1.0);
    assert_eq!(vsc[2], 0.0); // degree-0: no entry

    let g = LabeledGraph::from_edges(
        &[(0, 1)],
        &[(0, Label(0)), (1, Label(1)), (7, Label(0))],
        names(),
    )
    .unwrap();
    let idx = OfflineIndex::build(&g, RwrParams::default(), 0.5, 0.5).unwrap();
    assert_eq!(idx.vsc(g.resolve(7).unwrap()), None);
    assert!(idx.vsc(g.resolve(0).unwrap()).is_some());
}

#[test]
fn gamma_validation() {
    let g = graph_from(&[(0, 1)], &[1]);
    assert!(OfflineIndex::build(&g, RwrParams::default(), 0.7, 0.3).is_ok());
    assert!(matches!(
        OfflineIndex::build(&g, RwrParams::default(), 0.7, 0.7),
        Err(IndexError::InvalidParams(_))
    ));
    assert!(matches!(
        OfflineIndex::build(
            &g,
            RwrParams {
                restart_prob: 1.5,
                ..Default::default()
            },
            0.5,
            0.5
        ),
        Err(IndexError::InvalidParams(_))
    ));
}

#[test]
fn vsc_invariant_under_external_relabeling() {
    let edges_a: &[(u64, u64)] = &[(1, 2), (2, 3), (3, 1), (3, 4)];
    let ga = graph_from(edges_a, &[2, 4]);
    // same structure, ids mapped through 100 - x, lines reordered
    let edges_b: &[(u64, u64)] = &[(97, 96), (98, 97), (99, 98), (97, 99)];
    let gb = graph_from(edges_b, &[98, 96]);
    let ia = OfflineIndex::build(&ga, RwrParams::default(), 0.5, 0.5).unwrap();
    let ib = OfflineIndex::build(&gb, RwrParams::default(), 0.5, 0.5).unwrap();
    for ext in 1..=4u64 {
        let va = ga.resolve(ext).unwrap();
        let vb = gb.resolve(100 - ext).unwrap();
        let (a, b) = (ia.vsc(va).unwrap(), ib.vsc(vb).unwrap());
        assert!((a - b).abs() < 1e-12, "ext {ext}: {a} vs {b}");
    }
}

#[test]
fn persist_round_trip_is_exact() {
    let g = complete_bipartite(2, 3);
    let idx = OfflineIndex::build(&g, RwrParams::default(), 0.5, 0.5).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k23.idx");
    idx.save(&path).unwrap();
    let loaded = OfflineIndex::load(&path, &g).unwrap();
    assert_eq!(loaded.coreness.as_slice(), idx.coreness.as_slice());
    assert_eq!(loaded.butterflies.as_slice(), idx.butterflies.as_slice());
    assert_eq!(
        loaded.butterflies.total_butterflies(),
        idx.butterflies.total_butterflies()
    );
    assert_eq!(loaded.scores.rs, idx.scores.rs);
    assert_eq!(loaded.scores.rsn, idx.scores.rsn);
    assert_eq!(loaded.scores.bsn, idx.scores.bsn);
    assert_eq!(loaded.scores.vsc, idx.scores.vsc);
    assert_eq!(loaded.scores.scored, idx.scores.scored);
    assert_eq!(loaded.rwr, idx.rwr);
    for side in [Label(0), Label(1)] {
        assert_eq!(loaded.vsc_order(side), idx.vsc_order(side));
    }
}

#[test]
fn truncated_index_is_rejected() {
    let g = complete_bipartite(2, 3);
    let idx = OfflineIndex::build(&g, RwrParams::default(), 0.5, 0.5).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k23.idx");
    idx.save(&path).unwrap();
    let full = std::fs::read_to_string(&path).unwrap();
    let cut: String = full.lines().take(8).collect::<Vec<_>>().join("\n");
    std::fs::write(&path, cut).unwrap();
    assert!(matches!(
        OfflineIndex::load(&path, &g),
        Err(IndexError::Format { .. })
    ));
}

#[test]
fn version_and_extent_mismatches_are_rejected() {
    let g = complete_bipartite(2, 3);
    let idx = OfflineIndex::build(&g, RwrParams::default(), 0.5, 0.5).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k23.idx");
    idx.save(&path).unwrap();

    let other = complete_bipartite(2, 2);
    assert!(matches!(
        OfflineIndex::load(&path, &other),
        Err(IndexError::GraphMismatch { .. })
    ));

    let mut text = std::fs::read_to_string(&path).unwrap();
    text = text.replacen("bcc-index v1", "bcc-index v9", 1);
    std::fs::write(&path, text).unwrap();
    assert!(matches!(
        OfflineIndex::load(&path, &g),
        Err(IndexError::Format { .. })
    ));
}

proptest! {
    /// Every butterfly touches four vertices: sum chi = 4 * total.
    #[test]
    fn chi_sum_is_four_times_total(raw in proptest::collection::vec((0u64..12, 12u64..24), 0..60)) {
        let g = graph_from(&raw, &(12..24).collect::<Vec<_>>());
        let idx = butterfly_degrees(&extract_cross_bipartite(&g, None));
        let sum: u64 = g.vertices().map(|v| idx.chi(v)).sum();
        prop_assert_eq!(sum, 4 * idx.total_butterflies());
    }

    /// The induced side subgraph on {v : delta(v) >= k} has min degree >= k.
    #[test]
    fn core_threshold_subgraphs_hold(raw in proptest::collection::vec((0u64..20, 0u64..20), 0..80)) {
        let g = graph_from(&raw, &(0..20).filter(|v| v % 2 == 0).collect::<Vec<_>>());
        let idx = coreness(&g);
        let kmax = idx.max();
        for k in 1..=kmax {
            for v in g.vertices() {
                if idx.delta(v) < k {
                    continue;
                }
                let deg = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| g.label(u) == g.label(v) && idx.delta(u) >= k)
                    .count() as u32;
                prop_assert!(deg >= k, "{v:?} at k={k} has in-core degree {deg}");
            }
        }
    }

    /// Normalalizations preserve the order of their inputs off the
    /// degenerate case.
    #[test]
    fn normalization_is_order_isomorphic(values in proptest::collection::vec(0.0f64..100.0, 2..40)) {
        let scored = vec![true; values.len()];
        let rsn = normalize_rsn(&values, &scored);
        let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        prop_assume!(hi > lo);
        for i in 0..values.len() {
            for j in 0..values.len() {
                prop_assert_eq!(values[i] < values[j], rsn[i] < rsn[j]);
            }
        }
        prop_assert!(rsn.iter().cloned().fold(f64::INFINITY, f64::min) == 0.0);
        prop_assert!(rsn.iter().cloned().fold(f64::NEG_INFINITY, f64::max) == 1.0);
    }
}
