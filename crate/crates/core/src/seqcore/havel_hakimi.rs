use std::cmp::Reverse;
use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use super::DegreeSequence;

/// Largest vertex count `havel_hakimi_realize` will materialize.
pub const MAX_REALIZE_VERTICES: u64 = 1 << 22;

/// A simple graph on vertices `0..n`, vertex `i` carrying the `i`-th entry
/// of the decreasing sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub n: usize,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("sequence is not graphic")]
    NotGraphic,
    #[error("sequence too large to realize ({n} vertices, limit {limit})")]
    TooLarge { n: u64, limit: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationDefect {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge((usize, usize)),
    #[error("edge {0:?} has an endpoint outside 0..{1}")]
    EndpointOutOfRange((usize, usize), usize),
    #[error("degree multiset does not match the sequence")]
    DegreeMismatch,
}

impl Realization {
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            if u < self.n {
                deg[u] += 1;
            }
            if v < self.n {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Checks simplicity and that the degree multiset equals `seq`.
    pub fn validate(&self, seq: &DegreeSequence) -> Result<(), RealizationDefect> {
        let mut seen = HashSet::with_capacity(self.edges.len());
        for &(u, v) in &self.edges {
            if u == v {
                return Err(RealizationDefect::SelfLoop(u));
            }
            if u >= self.n || v >= self.n {
                return Err(RealizationDefect::EndpointOutOfRange((u, v), self.n));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(RealizationDefect::DuplicateEdge((u, v)));
            }
        }
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        if self.n as u64 != seq.n() || !deg.into_iter().eq(seq.values()) {
            return Err(RealizationDefect::DegreeMismatch);
        }
        Ok(())
    }
}

/// Havel–Hakimi realization.
///
/// Each round takes the first vertex in order (residual degree descending,
/// original index ascending) and joins it to the next `d` vertices in that
/// order.
pub fn havel_hakimi_realize(seq: &DegreeSequence) -> Result<Realization, RealizeError> {
    if seq.n() > MAX_REALIZE_VERTICES {
        return Err(RealizeError::TooLarge {
            n: seq.n(),
            limit: MAX_REALIZE_VERTICES,
        });
    }
    if !seq.has_even_sum() {
        return Err(RealizeError::NotGraphic);
    }
    let n = seq.n() as usize;
    let mut residual: Vec<u64> = seq.values().collect();
    // `values()` is already in (residual desc, index asc) order.
    let mut order: Vec<usize> = (0..n).collect();
    let mut edges = Vec::with_capacity((seq.sum() / 2) as usize);

    while let Some(&pivot) = order.first() {
        let d = residual[pivot] as usize;
        if d == 0 {
            break;
        }
        if d >= order.len() {
            return Err(RealizeError::NotGraphic);
        }
        residual[pivot] = 0;
        for &w in &order[1..=d] {
            if residual[w] == 0 {
                return Err(RealizeError::NotGraphic);
            }
            residual[w] -= 1;
            edges.push((pivot.min(w), pivot.max(w)));
        }
        order.remove(0);
        order.sort_by_key(|&v| (Reverse(residual[v]), v));
    }

    edges.sort_unstable();
    Ok(Realization { n, edges })
}
