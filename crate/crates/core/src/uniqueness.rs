//! Exhaustive search for extensible graphs of small order.
//!
//! Extensible graphs with parameters `(t, s, s̄)` are exactly the graphs
//! satisfying the strongly regular counts `(1+2s+2s̄, 2s, t, s)`, complete
//! graphs included when `s̄ = 0`. The search fills the adjacency matrix row
//! by row with vertex 0 joined to `1..=k`; once row `i` is complete every
//! pair inside `0..=i` has its final common-neighbour count.

use thiserror::Error;

use crate::extensible::{extensible_params, ExtParams};
use crate::graph::SeidelGraph;
use crate::groups::find_isomorphism;

/// Largest order the search accepts.
pub const UNIQUENESS_LIMIT: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("exhaustive search is limited to graphs on at most {UNIQUENESS_LIMIT} vertices, asked for {0}")]
pub struct TooLarge(pub usize);

struct Search {
    v: usize,
    k: usize,
    lambda: usize,
    mu: usize,
    adj: Vec<u64>,
    found: Vec<SeidelGraph>,
}

impl Search {
    fn pair_ok(&self, a: usize, b: usize) -> bool {
        let common = (self.adj[a] & self.adj[b]).count_ones() as usize;
        let want = if self.adj[a] >> b & 1 == 1 { self.lambda } else { self.mu };
        common == want
    }

    fn row(&mut self, i: usize) {
        if i == self.v {
            let adj = &self.adj;
            let edges: Vec<(usize, usize)> = (0..self.v)
                .flat_map(|a| (a + 1..self.v).map(move |b| (a, b)))
                .filter(|&(a, b)| adj[a] >> b & 1 == 1)
                .collect();
            let g = SeidelGraph::from_edges(self.v, edges).expect("labels in range");
            let new = self
                .found
                .iter()
                .all(|h| find_isomorphism(h, &g).expect("small order").is_none());
            if new {
                self.found.push(g);
            }
            return;
        }
        let have = self.adj[i].count_ones() as usize;
        if have > self.k {
            return;
        }
        let candidates: Vec<usize> = (i + 1..self.v)
            .filter(|&j| (self.adj[j].count_ones() as usize) < self.k)
            .collect();
        self.choose(i, &candidates, 0, self.k - have);
    }

    fn choose(&mut self, i: usize, cand: &[usize], from: usize, need: usize) {
        if need == 0 {
            if (0..i).all(|a| self.pair_ok(a, i)) {
                self.row(i + 1);
            }
            return;
        }
        for idx in from..cand.len() {
            if cand.len() - idx < need {
                break;
            }
            let j = cand[idx];
            self.adj[i] |= 1 << j;
            self.adj[j] |= 1 << i;
            self.choose(i, cand, idx + 1, need - 1);
            self.adj[i] &= !(1 << j);
            self.adj[j] &= !(1 << i);
        }
    }
}

/// All graphs on `v` vertices, up to isomorphism, that are `k`-regular with
/// `λ` common neighbours on edges and `μ` on non-edges.
pub fn enumerate_regular_counts(v: usize, k: usize, lambda: usize, mu: usize) -> Result<Vec<SeidelGraph>, TooLarge> {
    if v > UNIQUENESS_LIMIT {
        return Err(TooLarge(v));
    }
    if v == 0 || k >= v {
        return Ok(Vec::new());
    }
    let mut adj = vec![0u64; v];
    for j in 1..=k {
        adj[0] |= 1 << j;
        adj[j] |= 1;
    }
    let mut s = Search { v, k, lambda, mu, adj, found: Vec::new() };
    s.row(1);
    Ok(s.found)
}

/// Every parameter set `(t, s, s̄)` with `1 + 2s + 2s̄ ≤ max_order`, paired
/// with all extensible graphs having it, up to isomorphism.
pub fn extensible_census(max_order: usize) -> Result<Vec<(ExtParams, Vec<SeidelGraph>)>, TooLarge> {
    if max_order > UNIQUENESS_LIMIT {
        return Err(TooLarge(max_order));
    }
    let mut out = Vec::new();
    for s in 1..=max_order / 2 {
        for sbar in 0..2 * s {
            let v = 1 + 2 * s + 2 * sbar;
            if v > max_order {
                break;
            }
            let p = ExtParams::new(2 * s - sbar - 1, s, sbar).expect("t = 2s - sbar - 1 by construction");
            let graphs: Vec<SeidelGraph> = enumerate_regular_counts(v, 2 * s, p.t, s)?
                .into_iter()
                .filter(|g| extensible_params(g) == Some(p))
                .collect();
            out.push((p, graphs));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_is_the_only_five_cycle_like_graph() {
        let found = enumerate_regular_counts(5, 2, 0, 1).unwrap();
        assert_eq!(found.len(), 1);
        assert!(find_isomorphism(&found[0], &SeidelGraph::cycle(5).unwrap()).unwrap().is_some());
    }

    #[test]
    fn petersen_sized_search_is_refused() {
        assert_eq!(enumerate_regular_counts(10, 3, 0, 1), Err(TooLarge(10)));
    }

    #[test]
    fn complete_graphs_count() {
        let found = enumerate_regular_counts(5, 4, 3, 0).unwrap();
        assert_eq!(found, vec![SeidelGraph::complete(5).unwrap()]);
    }

    #[test]
    fn nine_vertex_census() {
        let census = extensible_census(9).unwrap();
        let count = |t, s, sbar| {
            census
                .iter()
                .find(|(p, _)| (p.t, p.s, p.sbar) == (t, s, sbar))
                .map(|(_, g)| g.len())
        };
        assert_eq!(count(0, 1, 1), Some(1));
        assert_eq!(count(1, 2, 2), Some(1));
        assert_eq!(count(1, 1, 0), Some(1));
        assert!(census.iter().filter(|(p, _)| p.t == 0).all(|(p, g)| p.n == 6 && g.len() == 1));
    }
}
