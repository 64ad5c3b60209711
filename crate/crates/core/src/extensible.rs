//! Extensible graphs and their parameters `(t, s, s̄)`.
//!
//! A graph `Λ` on `Y` is extensible when, seen from every vertex `y`, the
//! spheres `Λ(y,1)` and `Λ(y,2)` cover `Y∖{y}`, have sizes `2s` and `2s̄`,
//! and the edge counts between them are constant:
//!
//! | from           | into `Λ(y,1)` | into `Λ(y,2)` |
//! |----------------|---------------|---------------|
//! | `z ∈ Λ(y,1)`   | `t`           | `s̄`           |
//! | `z ∈ Λ(y,2)`   | `s`           | `s`           |
//!
//! Equivalently `Λ` is strongly regular with `(v,k,λ,μ) = (n-1, 2s, t, s)`,
//! where `n = 2 + 2s + 2s̄` is the order of the extension.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::SeidelGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtError {
    #[error("graph is not extensible")]
    NotExtensible,
    #[error("parameters (t={t}, s={s}, sbar={sbar}) violate t = 2s - sbar - 1 or s >= 1")]
    Inconsistent { t: usize, s: usize, sbar: usize },
    #[error("the complement of a graph with sbar = 0 is edgeless and has no parameters")]
    EmptyComplement,
}

/// Parameters of an extensible graph; `n` is the order of its extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtParams {
    pub t: usize,
    pub s: usize,
    pub sbar: usize,
    pub n: usize,
}

impl ExtParams {
    pub fn new(t: usize, s: usize, sbar: usize) -> Result<Self, ExtError> {
        if s == 0 || t + sbar + 1 != 2 * s {
            return Err(ExtError::Inconsistent { t, s, sbar });
        }
        let p = ExtParams { t, s, sbar, n: 2 + 2 * s + 2 * sbar };
        let (v, k, l, m) = p.srg();
        assert_eq!((v - k - 1) * m, k * (k - l - 1), "feasibility identity");
        Ok(p)
    }

    /// Order of the graph itself, `1 + 2s + 2s̄`.
    pub fn order(&self) -> usize {
        self.n - 1
    }

    /// `(v, k, λ, μ) = (n-1, 2s, t, s)`.
    pub fn srg(&self) -> (usize, usize, usize, usize) {
        (self.n - 1, 2 * self.s, self.t, self.s)
    }
}

/// The parameters of the complementary graph: `(s + s̄ - 2 - t, s̄, s)`.
pub fn complement_params(p: &ExtParams) -> Result<ExtParams, ExtError> {
    if p.sbar == 0 {
        return Err(ExtError::EmptyComplement);
    }
    ExtParams::new(p.s + p.sbar - 2 - p.t, p.sbar, p.s)
}

/// Checks the sphere conditions from every vertex.
pub fn extensible_params(lam: &SeidelGraph) -> Option<ExtParams> {
    let n = lam.n();
    let mut found: Option<(usize, usize, usize)> = None;
    for y in 0..n {
        let dist = lam.distances(y).ok()?;
        let mut y1 = Vec::new();
        let mut y2 = Vec::new();
        for (v, d) in dist.iter().enumerate() {
            match d {
                Some(0) => {}
                Some(1) => y1.push(v),
                Some(2) => y2.push(v),
                _ => return None,
            }
        }
        if y1.is_empty() || y1.len() % 2 == 1 || y2.len() % 2 == 1 {
            return None;
        }
        let (s, sbar) = (y1.len() / 2, y2.len() / 2);
        let count = |z: usize, set: &[usize]| set.iter().filter(|&&w| lam.adjacent(z, w)).count();
        let t = count(y1[0], &y1);
        for &z in &y1 {
            if count(z, &y1) != t || count(z, &y2) != sbar {
                return None;
            }
        }
        for &z in &y2 {
            if count(z, &y1) != s || count(z, &y2) != s {
                return None;
            }
        }
        match found {
            None => found = Some((t, s, sbar)),
            Some(prev) if prev != (t, s, sbar) => return None,
            _ => {}
        }
    }
    let (t, s, sbar) = found?;
    if lam.edges().iter().any(|&(a, b)| lam.common_neighbors(a, b) != t) {
        return None;
    }
    ExtParams::new(t, s, sbar).ok()
}

/// `Λ` plus a new isolated vertex labelled `|Y|`.
pub fn extend(lam: &SeidelGraph) -> Result<SeidelGraph, ExtError> {
    extensible_params(lam).ok_or(ExtError::NotExtensible)?;
    Ok(lam.with_isolated_vertex())
}

/// `(v, k, λ, μ)` when `g` is strongly regular, neither complete nor edgeless.
pub fn srg_params(g: &SeidelGraph) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    let k = g.degree(0);
    if (0..n).any(|v| g.degree(v) != k) || k == 0 || k == n - 1 {
        return None;
    }
    let (mut lambda, mut mu) = (None, None);
    for a in 0..n {
        for b in a + 1..n {
            let slot = if g.adjacent(a, b) { &mut lambda } else { &mut mu };
            let c = g.common_neighbors(a, b);
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lambda?, mu?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> SeidelGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        SeidelGraph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn pentagon_and_triangle() {
        let c5 = SeidelGraph::cycle(5).unwrap();
        assert_eq!(extensible_params(&c5), Some(ExtParams::new(0, 1, 1).unwrap()));
        let k3 = SeidelGraph::complete(3).unwrap();
        let p = extensible_params(&k3).unwrap();
        assert_eq!((p.t, p.s, p.sbar, p.n), (1, 1, 0, 4));
        assert_eq!(extensible_params(&SeidelGraph::path(3).unwrap()), None);
    }

    #[test]
    fn rejects_disconnected_and_trivial() {
        assert_eq!(extensible_params(&SeidelGraph::empty(1).unwrap()), None);
        assert_eq!(extensible_params(&SeidelGraph::empty(4).unwrap()), None);
        let two_triangles =
            SeidelGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(extensible_params(&two_triangles), None);
    }

    #[test]
    fn srg_counts() {
        assert_eq!(srg_params(&SeidelGraph::cycle(5).unwrap()), Some((5, 2, 0, 1)));
        assert_eq!(srg_params(&petersen()), Some((10, 3, 0, 1)));
        assert_eq!(srg_params(&SeidelGraph::complete(4).unwrap()), None);
        assert_eq!(srg_params(&SeidelGraph::cycle(6).unwrap()), None);
        // Petersen is strongly regular but 2s = 3 is odd
        assert_eq!(extensible_params(&petersen()), None);
    }

    #[test]
    fn complement_duality() {
        let p = ExtParams::new(1, 3, 4).unwrap();
        let c = complement_params(&p).unwrap();
        assert_eq!((c.t, c.s, c.sbar), (4, 4, 3));
        for t in 0..6 {
            let p = ExtParams::new(t, t + 1, t + 1).unwrap();
            assert_eq!(complement_params(&p).unwrap(), p);
        }
        let tri = ExtParams::new(1, 1, 0).unwrap();
        assert_eq!(complement_params(&tri), Err(ExtError::EmptyComplement));
    }

    #[test]
    fn extend_adds_isolated_vertex() {
        let g = extend(&SeidelGraph::cycle(5).unwrap()).unwrap();
        assert_eq!(g.n(), 6);
        assert!(g.is_isolated(5));
        assert_eq!(extend(&SeidelGraph::path(3).unwrap()), Err(ExtError::NotExtensible));
    }

    #[test]
    fn inconsistent_params_rejected() {
        assert!(ExtParams::new(0, 1, 2).is_err());
        assert!(ExtParams::new(0, 0, 0).is_err());
    }
}
