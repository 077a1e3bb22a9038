//! Dataset synthesis: label assignment over ground-truth communities,
//! per-community cross edges, and global noise edges.

use super::{BenchConfig, BenchError, GroundTruth};
use crate::graph::{Label, LabeledGraph, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, HashSet};
use std::path::Path;

/// Audit trail of one synthesis run.
#[derive(Clone, Debug)]
pub struct SynthReport {
    /// Raw simple edges after dedup, before additions.
    pub base_edges: usize,
    /// Cross edges added per (effective) community.
    pub per_community_cross: Vec<usize>,
    pub noise_edges_added: usize,
    pub vertices: usize,
}

/// One ground-truth community per line, whitespace-separated external ids.
pub fn parse_communities_file(path: impl AsRef<Path>) -> Result<Vec<Vec<u64>>, BenchError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| BenchError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let ids: Result<Vec<u64>, _> = line.split_whitespace().map(str::parse).collect();
        let ids = ids.map_err(|_| {
            BenchError::Config(format!(
                "{}:{}: bad community line",
                path.display(),
                lineno + 1
            ))
        })?;
        out.push(ids);
    }
    Ok(out)
}

/// Synthetic raw dataset: disjoint communities, each a connected random
/// graph at the requested average degree, no inter-community edges.
pub fn generate_community_graph(
    num_communities: usize,
    size_min: usize,
    size_max: usize,
    intra_degree: f64,
    rng: &mut ChaCha8Rng,
) -> (Vec<(u64, u64)>, Vec<Vec<u64>>) {
    let mut edges = Vec::new();
    let mut communities = Vec::new();
    let mut next_id = 0u64;
    for _ in 0..num_communities {
        let size = rng.random_range(size_min..=size_max);
        let members: Vec<u64> = (next_id..next_id + size as u64).collect();
        next_id += size as u64;

        // random spanning path keeps the community connected
        let mut chain = members.clone();
        chain.shuffle(rng);
        let mut present: HashSet<(u64, u64)> = HashSet::new();
        for w in chain.windows(2) {
            let e = (w[0].min(w[1]), w[0].max(w[1]));
            present.insert(e);
            edges.push(e);
        }
        let target = ((size as f64 * intra_degree) / 2.0).round() as usize;
        let mut attempts = 0;
        while present.len() < target && attempts < 50 * target {
            attempts += 1;
            let a = members[rng.random_range(0..members.len())];
            let b = members[rng.random_range(0..members.len())];
            if a == b {
                continue;
            }
            let e = (a.min(b), a.max(b));
            if present.insert(e) {
                edges.push(e);
            }
        }
        communities.push(members);
    }
    (edges, communities)
}

/// Builds the labeled benchmark graph from a raw edge list and
/// ground-truth communities:
///
/// - optional subsample: keep whole communities until `max_vertices`;
/// - every vertex gets one of two labels uniformly at random;
/// - per community, cross edges between its two label sides are added,
///   `round(cross_edge_ratio * intra-community edge count)` of them;
/// - global noise cross edges, `round(noise_edge_ratio * raw edge
///   count)`, endpoints uniform over the global label sides.
///
/// Everything is driven by the seed in `cfg`, so equal inputs produce
/// bit-identical outputs.
pub fn synthesize_dataset(
    raw_edges: &[(u64, u64)],
    raw_communities: &[Vec<u64>],
    cfg: &BenchConfig,
) -> Result<(LabeledGraph, GroundTruth, SynthReport), BenchError> {
    if raw_communities.is_empty() || raw_communities.iter().all(|c| c.is_empty()) {
        return Err(BenchError::EmptyGroundTruth);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);

    // optional whole-community subsample
    let mut communities: Vec<&Vec<u64>> = raw_communities.iter().collect();
    let mut keep_vertex: Option<HashSet<u64>> = None;
    if cfg.max_vertices > 0 {
        communities.shuffle(&mut rng);
        let mut kept = Vec::new();
        let mut seen: HashSet<u64> = HashSet::new();
        for c in communities {
            if !kept.is_empty() && seen.len() + c.len() > cfg.max_vertices {
                continue;
            }
            seen.extend(c.iter().copied());
            kept.push(c);
        }
        communities = kept;
        keep_vertex = Some(seen);
    }

    let mut edges: Vec<(u64, u64)> = raw_edges
        .iter()
        .copied()
        .filter(|&(a, b)| {
            a != b
                && keep_vertex
                    .as_ref()
                    .is_none_or(|keep| keep.contains(&a) && keep.contains(&b))
        })
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let base_edges = edges.len();
    let mut present: HashSet<(u64, u64)> = edges.iter().copied().collect();

    // first-listed community wins; labels drawn per vertex in that order
    let mut membership_ext: HashMap<u64, u32> = HashMap::new();
    let mut label_of: HashMap<u64, Label> = HashMap::new();
    let mut effective: Vec<Vec<u64>> = Vec::new();
    for members in &communities {
        let mut mine = Vec::new();
        for &v in members.iter() {
            if membership_ext.contains_key(&v) {
                continue;
            }
            membership_ext.insert(v, effective.len() as u32);
            label_of.insert(v, Label(rng.random_bool(0.5) as u8));
            mine.push(v);
        }
        if !mine.is_empty() {
            effective.push(mine);
        }
    }
    if effective.is_empty() {
        return Err(BenchError::EmptyGroundTruth);
    }
    // vertices outside every community still need labels
    let mut strays: Vec<u64> = edges
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .filter(|v| !label_of.contains_key(v))
        .collect();
    strays.sort_unstable();
    strays.dedup();
    for v in strays {
        label_of.insert(v, Label(rng.random_bool(0.5) as u8));
    }

    // per-community cross edges: ratio of the community's own edge count
    let mut intra_count = vec![0usize; effective.len()];
    for &(a, b) in &edges {
        if let (Some(&ca), Some(&cb)) = (membership_ext.get(&a), membership_ext.get(&b)) {
            if ca == cb {
                intra_count[ca as usize] += 1;
            }
        }
    }
    let mut per_community_cross = vec![0usize; effective.len()];
    for (ci, members) in effective.iter().enumerate() {
        let target = (cfg.cross_edge_ratio * intra_count[ci] as f64).round() as usize;
        let side0: Vec<u64> = members
            .iter()
            .copied()
            .filter(|v| label_of[v] == Label(0))
            .collect();
        let side1: Vec<u64> = members
            .iter()
            .copied()
            .filter(|v| label_of[v] == Label(1))
            .collect();
        if side0.is_empty() || side1.is_empty() {
            continue;
        }
        let mut attempts = 0;
        while per_community_cross[ci] < target && attempts < 50 * target + 50 {
            attempts += 1;
            let a = side0[rng.random_range(0..side0.len())];
            let b = side1[rng.random_range(0..side1.len())];
            let e = (a.min(b), a.max(b));
            if present.insert(e) {
                edges.push(e);
                per_community_cross[ci] += 1;
            }
        }
    }

    // global noise cross edges
    let mut all_ids: Vec<u64> = label_of.keys().copied().collect();
    all_ids.sort_unstable();
    let global0: Vec<u64> = all_ids
        .iter()
        .copied()
        .filter(|v| label_of[v] == Label(0))
        .collect();
    let global1: Vec<u64> = all_ids
        .iter()
        .copied()
        .filter(|v| label_of[v] == Label(1))
        .collect();
    let noise_target = (cfg.noise_edge_ratio * base_edges as f64).round() as usize;
    let mut noise_added = 0usize;
    if !global0.is_empty() && !global1.is_empty() {
        let mut attempts = 0;
        while noise_added < noise_target && attempts < 50 * noise_target + 50 {
            attempts += 1;
            let a = global0[rng.random_range(0..global0.len())];
            let b = global1[rng.random_range(0..global1.len())];
            let e = (a.min(b), a.max(b));
            if present.insert(e) {
                edges.push(e);
                noise_added += 1;
            }
        }
    }

    let mut labels: Vec<(u64, Label)> = label_of.into_iter().collect();
    labels.sort_unstable_by_key(|&(id, _)| id);
    let graph = LabeledGraph::from_edges(&edges, &labels, ["A".to_string(), "B".to_string()])?;

    let mut membership = vec![None; graph.vertex_count()];
    let mut communities_internal: Vec<Vec<VertexId>> = Vec::with_capacity(effective.len());
    for (ci, members) in effective.iter().enumerate() {
        let mut ids: Vec<VertexId> = members
            .iter()
            .filter_map(|&ext| graph.resolve(ext))
            .collect();
        ids.sort_unstable();
        for &v in &ids {
            membership[v.index()] = Some(ci as u32);
        }
        communities_internal.push(ids);
    }

    let report = SynthReport {
        base_edges,
        per_community_cross,
        noise_edges_added: noise_added,
        vertices: graph.vertex_count(),
    };
    Ok((
        graph,
        GroundTruth {
            communities: communities_internal,
            membership,
        },
        report,
    ))
}
