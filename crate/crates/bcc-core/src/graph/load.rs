//! Edge-list and label-file ingestion.
//!
//! Edge list: one `u w` pair per line, whitespace separated, `#` comment
//! lines skipped, external ids are arbitrary non-negative integers.
//! Label file: one `id label` pair per line, same comment rule; the label
//! alphabet must have exactly two symbols.

use super::{Label, LabeledGraph, VertexId};
use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

#[derive(Debug)]
pub enum GraphError {
    Io {
        path: String,
        source: io::Error,
    },
    /// A line that is neither a comment nor a valid record.
    Malformed {
        path: String,
        line: usize,
        message: String,
    },
    /// Edge-file vertices absent from the label file (external ids).
    MissingLabels(Vec<u64>),
    /// Same external id listed with two different labels.
    ConflictingLabel {
        id: u64,
    },
    /// The label file does not define exactly two symbols.
    LabelAlphabet {
        found: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Io { path, source } => write!(f, "cannot read {path}: {source}"),
            GraphError::Malformed {
                path,
                line,
                message,
            } => write!(f, "{path}:{line}: {message}"),
            GraphError::MissingLabels(ids) => {
                let shown: Vec<String> = ids.iter().take(10).map(u64::to_string).collect();
                write!(
                    f,
                    "{} vertex id(s) have no label: {}{}",
                    ids.len(),
                    shown.join(", "),
                    if ids.len() > 10 { ", ..." } else { "" }
                )
            }
            GraphError::ConflictingLabel { id } => {
                write!(f, "vertex {id} listed with two different labels")
            }
            GraphError::LabelAlphabet { found } => {
                write!(f, "expected exactly 2 label symbols, found {found}")
            }
        }
    }
}

impl std::error::Error for GraphError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            GraphError::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}

impl LabeledGraph {
    /// Loads a graph from an edge-list file and a label file.
    pub fn load(
        edge_path: impl AsRef<Path>,
        label_path: impl AsRef<Path>,
    ) -> Result<LabeledGraph, GraphError> {
        let edges = parse_edge_list(edge_path.as_ref())?;
        let (labels, names) = parse_label_file(label_path.as_ref())?;
        build(&edges, &labels, names)
    }
}

fn read(path: &Path) -> Result<String, GraphError> {
    fs::read_to_string(path).map_err(|source| GraphError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Parses `u w` pairs; keeps duplicates and self-loops for `build` to drop.
pub(super) fn parse_edge_list(path: &Path) -> Result<Vec<(u64, u64)>, GraphError> {
    let text = read(path)?;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (a, b) = match (it.next(), it.next()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(GraphError::Malformed {
                    path: path.display().to_string(),
                    line: lineno + 1,
                    message: format!("expected two vertex ids, got {line:?}"),
                })
            }
        };
        let parse = |s: &str| -> Result<u64, GraphError> {
            s.parse().map_err(|_| GraphError::Malformed {
                path: path.display().to_string(),
                line: lineno + 1,
                message: format!("invalid vertex id {s:?}"),
            })
        };
        edges.push((parse(a)?, parse(b)?));
        if it.next().is_some() {
            return Err(GraphError::Malformed {
                path: path.display().to_string(),
                line: lineno + 1,
                message: format!("trailing tokens after edge {line:?}"),
            });
        }
    }
    Ok(edges)
}

/// Vertex labels plus the two symbol names, in first-seen order.
type ParsedLabels = (Vec<(u64, Label)>, [String; 2]);

/// Parses `id label` pairs; the two symbols are numbered in first-seen order.
pub(super) fn parse_label_file(path: &Path) -> Result<ParsedLabels, GraphError> {
    let text = read(path)?;
    let mut names: Vec<String> = Vec::new();
    let mut labels = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (id, name) = match (it.next(), it.next()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(GraphError::Malformed {
                    path: path.display().to_string(),
                    line: lineno + 1,
                    message: format!("expected `id label`, got {line:?}"),
                })
            }
        };
        let id: u64 = id.parse().map_err(|_| GraphError::Malformed {
            path: path.display().to_string(),
            line: lineno + 1,
            message: format!("invalid vertex id {id:?}"),
        })?;
        let sym = match names.iter().position(|n| n == name) {
            Some(i) => i,
            None => {
                names.push(name.to_string());
                names.len() - 1
            }
        };
        if sym > 1 {
            return Err(GraphError::LabelAlphabet { found: names.len() });
        }
        labels.push((id, Label(sym as u8)));
    }
    if names.len() != 2 {
        return Err(GraphError::LabelAlphabet { found: names.len() });
    }
    Ok((labels, [names[0].clone(), names[1].clone()]))
}

/// Assembles the immutable graph: assigns dense ids by first appearance
/// (edge endpoints first, then label-only vertices), drops self-loops and
/// duplicate edges, sorts neighbor lists.
pub(super) fn build(
    edges: &[(u64, u64)],
    labels: &[(u64, Label)],
    label_names: [String; 2],
) -> Result<LabeledGraph, GraphError> {
    let mut label_of: HashMap<u64, Label> = HashMap::with_capacity(labels.len());
    for &(id, lab) in labels {
        if let Some(prev) = label_of.insert(id, lab) {
            if prev != lab {
                return Err(GraphError::ConflictingLabel { id });
            }
        }
    }

    let mut external_to_internal: HashMap<u64, VertexId> = HashMap::new();
    let mut external_ids: Vec<u64> = Vec::new();
    let intern = |ext: u64,
                  external_to_internal: &mut HashMap<u64, VertexId>,
                  external_ids: &mut Vec<u64>| {
        *external_to_internal.entry(ext).or_insert_with(|| {
            let v = VertexId(external_ids.len() as u32);
            external_ids.push(ext);
            v
        })
    };

    let mut missing: Vec<u64> = Vec::new();
    let mut internal_edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        for id in [a, b] {
            if !label_of.contains_key(&id) && !missing.contains(&id) {
                missing.push(id);
            }
        }
        if a == b {
            continue; // self-loop
        }
        let u = intern(a, &mut external_to_internal, &mut external_ids);
        let v = intern(b, &mut external_to_internal, &mut external_ids);
        internal_edges.push((u.min(v), u.max(v)));
    }
    if !missing.is_empty() {
        missing.sort_unstable();
        return Err(GraphError::MissingLabels(missing));
    }
    // Isolated labeled vertices join the id space after edge endpoints.
    for &(id, _) in labels {
        intern(id, &mut external_to_internal, &mut external_ids);
    }

    internal_edges.sort_unstable();
    internal_edges.dedup();

    let n = external_ids.len();
    let mut degree = vec![0u32; n];
    for &(u, v) in &internal_edges {
        degree[u.index()] += 1;
        degree[v.index()] += 1;
    }
    let mut offsets = vec![0u32; n + 1];
    for i in 0..n {
        offsets[i + 1] = offsets[i] + degree[i];
    }
    let mut cursor = offsets.clone();
    let mut neighbors = vec![VertexId(0); internal_edges.len() * 2];
    for &(u, v) in &internal_edges {
        neighbors[cursor[u.index()] as usize] = v;
        cursor[u.index()] += 1;
        neighbors[cursor[v.index()] as usize] = u;
        cursor[v.index()] += 1;
    }
    for i in 0..n {
        neighbors[offsets[i] as usize..offsets[i + 1] as usize].sort_unstable();
    }

    let vertex_labels: Vec<Label> = external_ids.iter().map(|ext| label_of[ext]).collect();

    Ok(LabeledGraph {
        offsets,
        neighbors,
        labels: vertex_labels,
        edge_count: internal_edges.len(),
        external_ids,
        external_to_internal,
        label_names,
    })
}
