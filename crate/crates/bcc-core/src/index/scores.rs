//! Min-max normalizations and the combined comprehensive score.

use super::{ButterflyIndex, IndexError};

/// Per-vertex score arrays. `scored[v]` is false exactly for degree-0
/// vertices, which carry no comprehensive score.
pub struct ScoreIndex {
    pub rs: Vec<f64>,
    pub rsn: Vec<f64>,
    pub bsn: Vec<f64>,
    pub vsc: Vec<f64>,
    pub scored: Vec<bool>,
    pub gamma1: f64,
    pub gamma2: f64,
}

pub(super) fn validate_gammas(gamma1: f64, gamma2: f64) -> Result<(), IndexError> {
    if gamma1 < 0.0 || gamma2 < 0.0 || (gamma1 + gamma2 - 1.0).abs() > 1e-9 {
        return Err(IndexError::InvalidParams(format!(
            "gamma weights must be non-negative and sum to 1, got {gamma1} + {gamma2}"
        )));
    }
    Ok(())
}

/// Min-max over a masked domain: 0 outside, 0.5 everywhere when the
/// domain is constant (keeps degenerate scores mid-range).
fn min_max(values: impl Iterator<Item = f64> + Clone, domain: &[bool]) -> Vec<f64> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (x, &inside) in values.clone().zip(domain) {
        if inside {
            lo = lo.min(x);
            hi = hi.max(x);
        }
    }
    values
        .zip(domain)
        .map(|(x, &inside)| {
            if !inside {
                0.0
            } else if hi > lo {
                (x - lo) / (hi - lo)
            } else {
                0.5
            }
        })
        .collect()
}

/// RSN: relative scores rescaled to [0,1] over the scored vertices.
pub fn normalize_rsn(rs: &[f64], scored: &[bool]) -> Vec<f64> {
    min_max(rs.iter().copied(), scored)
}

/// BSN: butterfly degrees rescaled to [0,1] over the cross-bipartite
/// members; 0 for everything outside it.
pub fn normalize_bsn(butterflies: &ButterflyIndex, in_cross: &[bool]) -> Vec<f64> {
    min_max(butterflies.as_slice().iter().map(|&x| x as f64), in_cross)
}

/// VSC(v) = gamma1 * RSN(v) + gamma2 * BSN(v) for scored vertices.
pub fn comprehensive_scores(
    rsn: &[f64],
    bsn: &[f64],
    scored: &[bool],
    gamma1: f64,
    gamma2: f64,
) -> Vec<f64> {
    rsn.iter()
        .zip(bsn)
        .zip(scored)
        .map(|((&r, &b), &s)| if s { gamma1 * r + gamma2 * b } else { 0.0 })
        .collect()
}
