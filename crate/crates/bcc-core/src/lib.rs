//! Butterfly-core community (BCC) search over labeled graphs.
//!
//! A BCC is a connected subgraph of a two-label graph whose same-label
//! sides are k1-/k2-cores, and whose cross-label bipartite subgraph
//! contains a vertex of butterfly degree >= b on each side (the leader
//! vertices). Given a query pair with distinct labels, the engine finds
//! such a community and shrinks it toward minimal query distance.
//!
//! The crate is organized as:
//!
//! - [`graph`]: immutable labeled-graph representation, edge-list and
//!   label-file ingestion, BFS primitives and induced-subgraph views.
//! - [`index`]: offline indexes — per-side coreness, cross-bipartite
//!   butterfly degrees, random-walk-with-restart scores and the combined
//!   vertex comprehensive score (VSC) — plus index persistence.
//! - [`engine`]: query execution in two strategies. `Basic` recomputes
//!   vertex distances one vertex at a time and re-finds leaders by
//!   scanning a whole side; `Fast` updates distances with a single BFS
//!   per query vertex per round and picks leaders in descending VSC
//!   order, stopping at the first qualifying vertex.
//! - [`bench`]: dataset synthesis from ground-truth communities, query
//!   generation, F1 scoring, and the timing harness.

pub mod bench;
pub mod engine;
pub mod graph;
pub mod index;

pub use engine::{
    run_query, run_query_traced, validate_bcc, BccQuery, BccResult, Criterion, FailReason,
    QueryError, QueryStatus, Strategy,
};
pub use graph::{EdgeKind, GraphError, Label, LabeledGraph, VertexId, VertexSet};
pub use index::{OfflineIndex, RwrParams};
