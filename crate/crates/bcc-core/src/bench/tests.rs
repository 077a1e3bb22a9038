use super::*;
use crate::graph::{Label, VertexId};
use crate::index::{OfflineIndex, RwrParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Duration;

fn small_cfg(seed: u64) -> BenchConfig {
    BenchConfig {
        synth_communities: 12,
        synth_comm_size_min: 24,
        synth_comm_size_max: 40,
        synth_intra_degree: 9.0,
        rng_seed: seed,
        ..Default::default()
    }
}

fn synth(cfg: &BenchConfig) -> (crate::graph::LabeledGraph, GroundTruth, SynthReport) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let (edges, comms) = generate_community_graph(
        cfg.synth_communities,
        cfg.synth_comm_size_min,
        cfg.synth_comm_size_max,
        cfg.synth_intra_degree,
        &mut rng,
    );
    synthesize_dataset(&edges, &comms, cfg).unwrap()
}

#[test]
fn f1_arithmetic() {
    let a: Vec<VertexId> = (0..10).map(VertexId).collect();
    let b: Vec<VertexId> = (5..15).map(VertexId).collect();
    let c: Vec<VertexId> = (20..25).map(VertexId).collect();
    assert_eq!(f1(&a, &a), 1.0);
    assert_eq!(f1(&a, &c), 0.0);
    assert_eq!(f1(&[], &a), 0.0);
    assert!((f1(&a, &b) - 0.5).abs() < 1e-12); // overlap 5 of 10 vs 10
}

#[test]
fn synthesis_is_deterministic() {
    let cfg = small_cfg(5);
    let (g1, gt1, r1) = synth(&cfg);
    let (g2, gt2, r2) = synth(&cfg);
    assert_eq!(g1.vertex_count(), g2.vertex_count());
    assert_eq!(g1.edge_count(), g2.edge_count());
    for v in g1.vertices() {
        assert_eq!(g1.external_id(v), g2.external_id(v));
        assert_eq!(g1.label(v), g2.label(v));
        assert_eq!(g1.neighbors(v), g2.neighbors(v));
    }
    assert_eq!(gt1.communities, gt2.communities);
    assert_eq!(r1.per_community_cross, r2.per_community_cross);
    assert_eq!(r1.noise_edges_added, r2.noise_edges_added);
}

#[test]
fn zero_ratios_keep_the_raw_edge_set() {
    let mut cfg = small_cfg(6);
    cfg.cross_edge_ratio = 0.0;
    cfg.noise_edge_ratio = 0.0;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let (edges, comms) = generate_community_graph(
        cfg.synth_communities,
        cfg.synth_comm_size_min,
        cfg.synth_comm_size_max,
        cfg.synth_intra_degree,
        &mut rng,
    );
    let (g, _, report) = synthesize_dataset(&edges, &comms, &cfg).unwrap();
    assert_eq!(g.edge_count(), edges.len());
    assert_eq!(g.edge_count(), report.base_edges);
    assert_eq!(report.noise_edges_added, 0);
    assert!(report.per_community_cross.iter().all(|&c| c == 0));
}

#[test]
fn cross_edges_follow_the_community_ledger() {
    // one community with exactly 100 intra edges and roomy label sides
    let members: Vec<u64> = (0..40).collect();
    let mut edges = Vec::new();
    'outer: for u in 0..40u64 {
        for v in (u + 1)..40 {
            edges.push((u, v));
            if edges.len() == 100 {
                break 'outer;
            }
        }
    }
    let mut cfg = BenchConfig {
        noise_edge_ratio: 0.0,
        ..Default::default()
    };
    cfg.cross_edge_ratio = 0.10;
    cfg.rng_seed = 3;
    let (g, _, report) = synthesize_dataset(&edges, &[members], &cfg).unwrap();
    assert_eq!(report.per_community_cross, vec![10]);
    assert_eq!(g.edge_count(), 110);
}

#[test]
fn empty_ground_truth_is_rejected() {
    let cfg = BenchConfig::default();
    assert!(matches!(
        synthesize_dataset(&[(0, 1)], &[], &cfg),
        Err(BenchError::EmptyGroundTruth)
    ));
}

#[test]
fn generated_queries_follow_the_protocol() {
    let cfg = small_cfg(8);
    let (g, gt, _) = synth(&cfg);
    let idx = OfflineIndex::build(&g, RwrParams::default(), 0.5, 0.5).unwrap();
    let qs = generate_queries(&g, &idx, &gt, 50, QueryConstraints::default(), 17).unwrap();
    assert_eq!(qs.len(), 50);
    for gq in &qs {
        let q = gq.query;
        assert_ne!(g.label(q.q_l), g.label(q.q_r));
        assert_eq!(q.b, 1);
        assert_eq!(q.k1, idx.delta(q.q_l));
        assert_eq!(q.k2, idx.delta(q.q_r));
        assert!(q.k1 >= 1 && q.k2 >= 1);
        assert_eq!(gt.membership[q.q_l.index()], Some(gq.community));
        assert_eq!(gt.membership[q.q_r.index()], Some(gq.community));
    }
    let again = generate_queries(&g, &idx, &gt, 50, QueryConstraints::default(), 17).unwrap();
    for (a, b) in qs.iter().zip(&again) {
        assert_eq!((a.query.q_l, a.query.q_r), (b.query.q_l, b.query.q_r));
    }
}

#[test]
fn fixed_ql_constraint_pins_the_left_endpoint() {
    let cfg = small_cfg(9);
    let (g, gt, _) = synth(&cfg);
    let idx = OfflineIndex::build(&g, RwrParams::default(), 0.5, 0.5).unwrap();
    let anchor = g
        .vertices()
        .find(|&v| idx.delta(v) >= 1 && gt.membership[v.index()].is_some())
        .unwrap();
    let constraints = QueryConstraints {
        fixed_ql: Some(anchor),
        ..Default::default()
    };
    let qs = generate_queries(&g, &idx, &gt, 20, constraints, 23).unwrap();
    for gq in &qs {
        assert_eq!(gq.query.q_l, anchor);
        assert_ne!(g.label(gq.query.q_l), g.label(gq.query.q_r));
    }
}

#[test]
fn benchmark_over_zero_queries_is_empty_not_an_error() {
    let cfg = small_cfg(10);
    let (g, gt, _) = synth(&cfg);
    let idx = OfflineIndex::build(&g, RwrParams::default(), 0.5, 0.5).unwrap();
    let report = run_benchmark(&g, &idx, &gt, &[], Duration::from_secs(60)).unwrap();
    assert!(report.records.is_empty());
    assert!(report.summaries.is_empty());
    assert!(per_query_csv_header().starts_with("query_index,"));
}

#[test]
fn benchmark_summaries_are_consistent() {
    let cfg = small_cfg(11);
    let (g, gt, _) = synth(&cfg);
    let idx = OfflineIndex::build(&g, RwrParams::default(), 0.5, 0.5).unwrap();
    let qs = generate_queries(&g, &idx, &gt, 25, QueryConstraints::default(), 31).unwrap();
    let report = run_benchmark(&g, &idx, &gt, &qs, Duration::from_secs(1800)).unwrap();
    assert_eq!(report.records.len(), 50);

    let basic = report
        .summaries
        .iter()
        .find(|s| s.strategy == crate::engine::Strategy::Basic)
        .unwrap();
    // Basic against itself is the 1.0 baseline by definition
    assert!((basic.speedup_vs_basic - 1.0).abs() < 1e-12);
    assert_eq!(basic.queries, 25);
    assert_eq!(basic.timeouts, 0);
    for s in &report.summaries {
        assert!(s.found > 0);
        assert!((0.0..=1.0).contains(&s.mean_f1));
        assert!(s.mean_runtime_s.is_finite());
    }
    // identical query list: F1 must agree query-by-query across strategies
    for pair in report.records.chunks(2) {
        assert_eq!(pair[0].query_index, pair[1].query_index);
        assert!((pair[0].f1 - pair[1].f1).abs() < 1e-12);
    }
    let header_cols = per_query_csv_header().split(',').count();
    for r in &report.records {
        assert_eq!(r.csv_row().split(',').count(), header_cols);
    }
}

#[test]
fn exceeding_the_timeout_is_recorded_as_infinite() {
    let cfg = small_cfg(13);
    let (g, gt, _) = synth(&cfg);
    let idx = OfflineIndex::build(&g, RwrParams::default(), 0.5, 0.5).unwrap();
    let qs = generate_queries(&g, &idx, &gt, 3, QueryConstraints::default(), 37).unwrap();
    let report = run_benchmark(&g, &idx, &gt, &qs, Duration::ZERO).unwrap();
    assert!(report.records.iter().all(|r| r.timed_out));
    for s in &report.summaries {
        assert_eq!(s.timeouts, 3);
        assert!(s.mean_runtime_s.is_infinite());
    }
    let row = report.records[0].csv_row();
    assert!(row.contains(",inf,"), "{row}");
}

#[test]
fn attainable_core_values_are_nonempty_here() {
    let cfg = small_cfg(12);
    let (g, gt, _) = synth(&cfg);
    let idx = OfflineIndex::build(&g, RwrParams::default(), 0.5, 0.5).unwrap();
    let ks = attainable_core_values(&g, &idx, &gt);
    assert!(!ks.is_empty());
    assert_eq!(ks[0], 1);
    // generating at the max attainable value still succeeds
    let constraints = QueryConstraints {
        fixed_k: Some(*ks.last().unwrap()),
        ..Default::default()
    };
    assert!(generate_queries(&g, &idx, &gt, 5, constraints, 1).is_ok());
}

#[test]
fn config_parses_and_rejects_unknowns() {
    let cfg = BenchConfig::parse(
        "num_queries = 250\ncross_edge_ratio = 0.2 # comment\nsweep_k = 1, 2, 3\nsweep_b =\nout_dir = /tmp/x\n",
    )
    .unwrap();
    assert_eq!(cfg.num_queries, 250);
    assert_eq!(cfg.cross_edge_ratio, 0.2);
    assert_eq!(cfg.sweep_k, vec![1, 2, 3]);
    assert!(cfg.sweep_b.is_empty());
    assert_eq!(cfg.out_dir, std::path::PathBuf::from("/tmp/x"));

    let err = BenchConfig::parse("no_such_key = 5\n").unwrap_err();
    assert!(err.to_string().contains("no_such_key"), "{err}");
    let err = BenchConfig::parse("num_queries = many\n").unwrap_err();
    assert!(err.to_string().contains("num_queries"), "{err}");
    assert!(BenchConfig::parse("cross_edge_ratio = 1.5\n").is_err());
}

#[test]
fn labels_split_both_sides() {
    let cfg = small_cfg(14);
    let (g, gt, _) = synth(&cfg);
    let zeros = g.vertices().filter(|&v| g.label(v) == Label(0)).count();
    assert!(zeros > 0 && zeros < g.vertex_count());
    for (ci, members) in gt.communities.iter().enumerate() {
        for &v in members {
            assert_eq!(gt.membership[v.index()], Some(ci as u32));
        }
    }
}
