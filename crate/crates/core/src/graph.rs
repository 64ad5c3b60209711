//! Simple graphs viewed through their ±1 Seidel matrix.
//!
//! The matrix `E` of a graph on `{0..n-1}` has `E[i][i] = +1` and
//! `E[i][j] = -1` exactly when `i ~ j`. This is the 0-diagonal Seidel
//! matrix plus the identity, so every eigenvalue here is one larger than in
//! the usual convention.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Perm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("switching vector entries must be +1 or -1, found {0}")]
    BadSign(i64),
    #[error("permutation is not a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("operation needs at least {needed} vertices, graph has {n}")]
    TooFewVertices { needed: usize, n: usize },
    #[error("graph6: {0}")]
    Graph6(String),
}

/// A simple graph on `{0..n-1}` stored as one adjacency bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeidelGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// A vector `ν ∈ {-1,+1}^n` acting on a graph by `ε'_ij = ν_i ν_j ε_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwitchingVector(Vec<i8>);

impl SwitchingVector {
    pub fn ones(n: usize) -> Self {
        SwitchingVector(vec![1; n])
    }

    pub fn new(signs: Vec<i8>) -> Result<Self, GraphError> {
        if let Some(&bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(GraphError::BadSign(bad as i64));
        }
        Ok(SwitchingVector(signs))
    }

    /// The vector that is `-1` exactly on `flipped`.
    pub fn flipping(n: usize, flipped: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut v = vec![1; n];
        for i in flipped {
            if i >= n {
                return Err(GraphError::VertexOutOfRange { vertex: i, n });
            }
            v[i] = -1;
        }
        Ok(SwitchingVector(v))
    }

    /// Decodes bit `i` of `mask` as `ν_i = -1`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        SwitchingVector((0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i8 {
        self.0[i]
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    /// Entrywise product; switching by `a` then `b` equals switching by `a.product(b)`.
    pub fn product(&self, other: &SwitchingVector) -> SwitchingVector {
        SwitchingVector(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }

    /// `ν` and `-ν` induce the same switching; this picks the one with `ν_0 = +1`.
    pub fn normalized(&self) -> SwitchingVector {
        match self.0.first() {
            Some(-1) => SwitchingVector(self.0.iter().map(|s| -s).collect()),
            _ => self.clone(),
        }
    }
}

/// Graph distance selector for [`SeidelGraph::neighborhood`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Exactly(usize),
    /// Distance at least `d`, unreachable vertices included.
    AtLeast(usize),
}

/// Signs `ε_ij ε_jk ε_ik` of all 3-subsets `i < j < k`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TripleSign {
    n: usize,
    negative: Vec<bool>,
}

impl TripleSign {
    pub fn n(&self) -> usize {
        self.n
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        // rank of (i<j<k) among lexicographically ordered triples
        let n = self.n;
        let c3 = |m: usize| if m >= 3 { m * (m - 1) * (m - 2) / 6 } else { 0 };
        let c2 = |m: usize| if m >= 2 { m * (m - 1) / 2 } else { 0 };
        let before_i = c3(n) - c3(n - i);
        let before_j = c2(n - i - 1) - c2(n - j);
        before_i + before_j + (k - j - 1)
    }

    /// Value on the triple `{i, j, k}` (distinct, any order).
    pub fn get(&self, i: usize, j: usize, k: usize) -> i8 {
        let mut t = [i, j, k];
        t.sort_unstable();
        assert!(t[0] < t[1] && t[1] < t[2] && t[2] < self.n, "triple must be distinct");
        if self.negative[self.index(t[0], t[1], t[2])] {
            -1
        } else {
            1
        }
    }

    pub fn len(&self) -> usize {
        self.negative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.negative.is_empty()
    }

    /// Signs in lexicographic triple order.
    pub fn signs(&self) -> impl Iterator<Item = i8> + '_ {
        self.negative.iter().map(|&b| if b { -1 } else { 1 })
    }

    pub fn count_negative(&self) -> usize {
        self.negative.iter().filter(|&&b| b).count()
    }

    /// For each vertex, the number of negative triples through it.
    pub fn vertex_counts(&self) -> Vec<usize> {
        let n = self.n;
        let mut out = vec![0; n];
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.negative[idx] {
                        out[i] += 1;
                        out[j] += 1;
                        out[k] += 1;
                    }
                    idx += 1;
                }
            }
        }
        out
    }
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl SeidelGraph {
    /// Edgeless graph on `n ≥ 1` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let words = words_for(n);
        Ok(SeidelGraph {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = SeidelGraph::empty(n)?;
        for i in 0..n {
            for j in i + 1..n {
                g.set_edge(i, j, true);
            }
        }
        Ok(g)
    }

    /// The cycle `0 - 1 - … - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooFewVertices { needed: 3, n });
        }
        SeidelGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        SeidelGraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = SeidelGraph::empty(n)?;
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            g.set_edge(a, b, true);
        }
        Ok(g)
    }

    /// Builds a graph from a full ±1 matrix with `+1` on the diagonal.
    pub fn from_seidel_matrix(m: &[Vec<i8>]) -> Result<Self, GraphError> {
        let n = m.len();
        let mut g = SeidelGraph::empty(n)?;
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &e) in row.iter().enumerate() {
                match (i == j, e) {
                    (true, 1) => {}
                    (true, _) => return Err(GraphError::SelfLoop(i)),
                    (false, 1) | (false, -1) => {
                        if m[j][i] != e {
                            return Err(GraphError::BadSign(e as i64));
                        }
                        if e == -1 {
                            g.set_edge(i, j, true);
                        }
                    }
                    (false, other) => return Err(GraphError::BadSign(other as i64)),
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, a: usize, b: usize, on: bool) {
        let (w, s) = (self.words, self);
        let mut set = |r: usize, c: usize| {
            let word = &mut s.rows[r * w + c / 64];
            if on {
                *word |= 1u64 << (c % 64);
            } else {
                *word &= !(1u64 << (c % 64));
            }
        };
        set(a, b);
        set(b, a);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    /// Matrix entry `ε_ij`.
    #[inline]
    pub fn sign(&self, i: usize, j: usize) -> i8 {
        if i != j && self.adjacent(i, j) {
            -1
        } else {
            1
        }
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    /// Single-word adjacency masks; only valid for `n ≤ 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        (0..self.n).map(|i| self.rows[i * self.words]).collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.adjacent(i, j))
    }

    pub fn common_neighbors(&self, i: usize, j: usize) -> usize {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    /// The matrix `E = S(1,1)`.
    pub fn seidel_matrix(&self) -> Vec<Vec<i8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.sign(i, j)).collect())
            .collect()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `E'_ij = ν_i ν_j E_ij`.
    pub fn apply_switching(&self, nu: &SwitchingVector) -> Result<SeidelGraph, GraphError> {
        if nu.len() != self.n {
            return Err(GraphError::DimensionMismatch {
                expected: self.n,
                found: nu.len(),
            });
        }
        let flipped = (0..self.n).filter(|&i| nu.get(i) == -1);
        Ok(self.switch_set(flipped))
    }

    /// Switches with respect to a vertex set: the liaison of a pair changes
    /// iff exactly one endpoint lies in `set`.
    fn switch_set(&self, set: impl IntoIterator<Item = usize>) -> SeidelGraph {
        let w = self.words;
        let mut mask = vec![0u64; w];
        for v in set {
            mask[v / 64] |= 1u64 << (v % 64);
        }
        let mut all = vec![u64::MAX; w];
        if self.n % 64 != 0 {
            all[w - 1] = (1u64 << (self.n % 64)) - 1;
        }
        let mut out = self.clone();
        for k in 0..self.n {
            let inside = mask[k / 64] >> (k % 64) & 1 == 1;
            for x in 0..w {
                let flip = if inside { all[x] & !mask[x] } else { mask[x] };
                out.rows[k * w + x] ^= flip;
            }
        }
        out
    }

    /// The unique switch of `self` in which `j` is isolated.
    pub fn localize(&self, j: usize) -> Result<SeidelGraph, GraphError> {
        self.check_vertex(j)?;
        Ok(self.switch_set(self.neighbors(j).collect::<Vec<_>>()))
    }

    /// Switching vector taking `self` to `self.localize(j)`:
    /// `ν_k = ε_kj` for `k ≠ j`, `ν_j = 1`.
    pub fn localizing_vector(&self, j: usize) -> Result<SwitchingVector, GraphError> {
        self.check_vertex(j)?;
        Ok(SwitchingVector(
            (0..self.n).map(|k| if k == j { 1 } else { self.sign(k, j) }).collect(),
        ))
    }

    /// Relabels vertices: `{a, b}` is an edge of `self` iff `{σ(a), σ(b)}`
    /// is an edge of the result.
    pub fn conjugate(&self, sigma: &Perm) -> Result<SeidelGraph, GraphError> {
        if sigma.degree() != self.n {
            return Err(GraphError::DimensionMismatch {
                expected: self.n,
                found: sigma.degree(),
            });
        }
        let mut out = SeidelGraph::empty(self.n)?;
        for (a, b) in self.edges() {
            out.set_edge(sigma.apply(a), sigma.apply(b), true);
        }
        Ok(out)
    }

    /// Like [`conjugate`](Self::conjugate) but from a raw image array.
    pub fn conjugate_images(&self, images: &[usize]) -> Result<SeidelGraph, GraphError> {
        let sigma = Perm::from_images(images.to_vec())
            .map_err(|_| GraphError::NotBijective(images.len()))?;
        self.conjugate(&sigma)
    }

    pub fn complement(&self) -> SeidelGraph {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    let word = &mut out.rows[i * self.words + j / 64];
                    *word ^= 1u64 << (j % 64);
                }
            }
        }
        out
    }

    pub fn triple_sign(&self) -> Result<TripleSign, GraphError> {
        if self.n < 3 {
            return Err(GraphError::TooFewVertices { needed: 3, n: self.n });
        }
        let n = self.n;
        let mut negative = Vec::with_capacity(n * (n - 1) * (n - 2) / 6);
        for i in 0..n {
            for j in i + 1..n {
                let eij = self.sign(i, j);
                for k in j + 1..n {
                    negative.push(eij * self.sign(j, k) * self.sign(i, k) == -1);
                }
            }
        }
        Ok(TripleSign { n, negative })
    }

    /// BFS distances from `x`; `None` for unreachable vertices.
    pub fn distances(&self, x: usize) -> Result<Vec<Option<usize>>, GraphError> {
        self.check_vertex(x)?;
        let mut dist = vec![None; self.n];
        dist[x] = Some(0);
        let mut queue = VecDeque::from([x]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(dist)
    }

    /// Vertices at distance exactly `d`, or at least `d`, from `x`.
    pub fn neighborhood(&self, x: usize, d: Distance) -> Result<Vec<usize>, GraphError> {
        let dist = self.distances(x)?;
        Ok((0..self.n)
            .filter(|&v| match (d, dist[v]) {
                (Distance::Exactly(k), Some(dv)) => dv == k,
                (Distance::Exactly(_), None) => false,
                (Distance::AtLeast(k), Some(dv)) => dv >= k,
                (Distance::AtLeast(_), None) => true,
            })
            .collect())
    }

    /// Largest finite distance, or `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for x in 0..self.n {
            for d in self.distances(x).ok()? {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.row(v).iter().all(|&w| w == 0)
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<SeidelGraph, GraphError> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut out = SeidelGraph::empty(vertices.len())?;
        for (a, &va) in vertices.iter().enumerate() {
            for (b, &vb) in vertices.iter().enumerate().skip(a + 1) {
                if va == vb {
                    return Err(GraphError::NotBijective(vertices.len()));
                }
                if self.adjacent(va, vb) {
                    out.set_edge(a, b, true);
                }
            }
        }
        Ok(out)
    }

    /// Deletes vertex `v`, shifting higher labels down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<SeidelGraph, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Adds a new isolated vertex with label `n`.
    pub fn with_isolated_vertex(&self) -> SeidelGraph {
        SeidelGraph::from_edges(self.n + 1, self.edges()).expect("edges stay in range")
    }
}

impl fmt::Debug for SeidelGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeidelGraph {{ n: {}, edges: {:?} }}", self.n, self.edges())
    }
}

/// Decides whether two graphs are switching-equivalent by comparing their
/// localizations at vertex 0; returns a witness `ν` with `g1 → g2`.
pub fn is_switching_equivalent(
    g1: &SeidelGraph,
    g2: &SeidelGraph,
) -> Result<Option<SwitchingVector>, GraphError> {
    if g1.n != g2.n {
        return Err(GraphError::DimensionMismatch {
            expected: g1.n,
            found: g2.n,
        });
    }
    if g1.localize(0)? != g2.localize(0)? {
        return Ok(None);
    }
    // g1 -ν1-> L <-ν2- g2, so g1 -(ν1ν2)-> g2
    let nu = g1.localizing_vector(0)?.product(&g2.localizing_vector(0)?);
    Ok(Some(nu.normalized()))
}

/// JSON form `{"n": …, "edges": [[i, j], …]}` with `i < j`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&SeidelGraph> for GraphJson {
    fn from(g: &SeidelGraph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for SeidelGraph {
    type Error = GraphError;
    fn try_from(j: GraphJson) -> Result<Self, Self::Error> {
        SeidelGraph::from_edges(j.n, j.edges.into_iter().map(|[a, b]| (a, b)))
    }
}
