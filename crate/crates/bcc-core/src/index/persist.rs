//! Index persistence: versioned line-oriented text.
//!
//! Floats are written with Rust's shortest round-trip formatting, so
//! `load(persist(x))` reproduces every array bit-exactly. Loads fail
//! loudly on version or extent mismatch instead of returning a partial
//! index.

use super::{ButterflyIndex, CorenessIndex, IndexError, OfflineIndex, RwrParams, ScoreIndex};
use crate::graph::LabeledGraph;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

const MAGIC: &str = "bcc-index v1";

impl OfflineIndex {
    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), IndexError> {
        let path = path.as_ref();
        let mut out = String::new();
        let n = self.vertex_count;
        writeln!(out, "{MAGIC}").unwrap();
        writeln!(out, "vertices {n}").unwrap();
        writeln!(out, "edges {}", self.edge_count).unwrap();
        writeln!(out, "gamma {} {}", self.scores.gamma1, self.scores.gamma2).unwrap();
        writeln!(
            out,
            "rwr {} {} {}",
            self.rwr.restart_prob, self.rwr.tolerance, self.rwr.max_iters
        )
        .unwrap();
        writeln!(out, "butterflies {}", self.butterflies.total_butterflies()).unwrap();
        for v in 0..n {
            writeln!(
                out,
                "{} {} {} {} {} {} {}",
                self.coreness.as_slice()[v],
                self.butterflies.as_slice()[v],
                self.scores.scored[v] as u8,
                self.scores.rs[v],
                self.scores.rsn[v],
                self.scores.bsn[v],
                self.scores.vsc[v],
            )
            .unwrap();
        }
        fs::write(path, out).map_err(|source| IndexError::Io {
            path: path.display().to_string(),
            source,
        })
    }

    /// Loads an index and re-derives the VSC orderings against `g`.
    pub fn load(path: impl AsRef<Path>, g: &LabeledGraph) -> Result<OfflineIndex, IndexError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| IndexError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let fail = |message: String| IndexError::Format {
            path: path.display().to_string(),
            message,
        };

        let mut lines = text.lines();
        match lines.next() {
            Some(l) if l == MAGIC => {}
            Some(l) => return Err(fail(format!("unsupported version header {l:?}"))),
            None => return Err(fail("empty file".to_string())),
        }
        let mut field = |name: &str| -> Result<Vec<String>, IndexError> {
            let line = lines
                .next()
                .ok_or_else(|| fail(format!("truncated before `{name}`")))?;
            let mut parts = line.split_whitespace();
            if parts.next() != Some(name) {
                return Err(fail(format!("expected `{name}` line, got {line:?}")));
            }
            Ok(parts.map(str::to_string).collect())
        };
        fn one<T: std::str::FromStr>(vals: &[String]) -> Option<T> {
            match vals {
                [x] => x.parse().ok(),
                _ => None,
            }
        }

        let n: usize =
            one(&field("vertices")?).ok_or_else(|| fail("bad vertices line".to_string()))?;
        let edges: usize =
            one(&field("edges")?).ok_or_else(|| fail("bad edges line".to_string()))?;
        let gammas = field("gamma")?;
        let (gamma1, gamma2): (f64, f64) = match gammas.as_slice() {
            [a, b] => (
                a.parse().map_err(|_| fail("bad gamma".to_string()))?,
                b.parse().map_err(|_| fail("bad gamma".to_string()))?,
            ),
            _ => return Err(fail("bad gamma line".to_string())),
        };
        let rwr_parts = field("rwr")?;
        let rwr = match rwr_parts.as_slice() {
            [c, tol, iters] => RwrParams {
                restart_prob: c.parse().map_err(|_| fail("bad rwr".to_string()))?,
                tolerance: tol.parse().map_err(|_| fail("bad rwr".to_string()))?,
                max_iters: iters.parse().map_err(|_| fail("bad rwr".to_string()))?,
            },
            _ => return Err(fail("bad rwr line".to_string())),
        };
        let total: u64 =
            one(&field("butterflies")?).ok_or_else(|| fail("bad butterflies line".to_string()))?;

        let mut delta = Vec::with_capacity(n);
        let mut chi = Vec::with_capacity(n);
        let mut scored = Vec::with_capacity(n);
        let (mut rs, mut rsn, mut bsn, mut vsc) = (
            Vec::with_capacity(n),
            Vec::with_capacity(n),
            Vec::with_capacity(n),
            Vec::with_capacity(n),
        );
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| fail(format!("truncated at vertex {i} of {n}")))?;
            let mut it = line.split_whitespace();
            let mut next = || -> Result<&str, IndexError> {
                it.next()
                    .ok_or_else(|| fail(format!("short vertex record at line {i}")))
            };
            let bad = |what: &str| fail(format!("bad {what} in vertex record {i}"));
            delta.push(next()?.parse::<u32>().map_err(|_| bad("delta"))?);
            chi.push(next()?.parse::<u64>().map_err(|_| bad("chi"))?);
            scored.push(match next()? {
                "0" => false,
                "1" => true,
                _ => return Err(bad("scored flag")),
            });
            rs.push(next()?.parse::<f64>().map_err(|_| bad("rs"))?);
            rsn.push(next()?.parse::<f64>().map_err(|_| bad("rsn"))?);
            bsn.push(next()?.parse::<f64>().map_err(|_| bad("bsn"))?);
            vsc.push(next()?.parse::<f64>().map_err(|_| bad("vsc"))?);
        }
        if lines.next().is_some() {
            return Err(fail("trailing data after vertex records".to_string()));
        }

        let mut idx = OfflineIndex {
            vertex_count: n,
            edge_count: edges,
            coreness: CorenessIndex::from_delta(delta),
            butterflies: ButterflyIndex::from_parts(chi, total),
            scores: ScoreIndex {
                rs,
                rsn,
                bsn,
                vsc,
                scored,
                gamma1,
                gamma2,
            },
            rwr,
            vsc_order: [Vec::new(), Vec::new()],
        };
        idx.check_matches(g)?;
        idx.rebuild_vsc_order(g);
        Ok(idx)
    }
}
