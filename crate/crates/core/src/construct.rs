//! Named constructions and the structure of the `t = 1` graphs.
//!
//! `t1(s)` labelling: `y = 0`; the edge `α_i = {a′_i, a″_i}` of `Λ(y,1)` is
//! `{2i-1, 2i}`; `Λ(y,2)` is `(Z/2)^r` placed at `2s+1 + u`. Translation
//! `t_i` adds `e_i` (and `t_5 = e_1+e_2+e_3+e_4` when `s = 5`). The side of
//! `u` in the partition `{A′_i, A″_i}` is the character `χ_i(u)` with
//! `χ_i(e_j) = +1` iff `j = i`, so `χ_k(t_i) = +1` iff `k = i`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::extensible::extensible_params;
use crate::field::FieldError;
use crate::graph::{Distance, SeidelGraph};
use crate::paley;
use crate::perm::Perm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("unknown construction {0:?}")]
    UnknownName(String),
    #[error("t1(s) exists only for s in {{1, 2, 3, 5}}, got {0}")]
    UnsupportedS(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A named graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Pentagon,
    Triangle,
    T1(usize),
    Paley(usize),
    PaleyProjective(usize),
}

impl FromStr for Construction {
    type Err = ConstructError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || ConstructError::UnknownName(s.to_string());
        let arg = |rest: &str| rest.trim().parse::<usize>().map_err(|_| unknown());
        match s.trim() {
            "pentagon" => Ok(Construction::Pentagon),
            "triangle" => Ok(Construction::Triangle),
            other => match other.split_once(':') {
                Some(("t1", v)) => Ok(Construction::T1(arg(v)?)),
                Some(("paley", v)) => Ok(Construction::Paley(arg(v)?)),
                Some(("paley-proj", v)) => Ok(Construction::PaleyProjective(arg(v)?)),
                _ => Err(unknown()),
            },
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Pentagon => write!(f, "pentagon"),
            Construction::Triangle => write!(f, "triangle"),
            Construction::T1(s) => write!(f, "t1:{s}"),
            Construction::Paley(q) => write!(f, "paley:{q}"),
            Construction::PaleyProjective(q) => write!(f, "paley-proj:{q}"),
        }
    }
}

pub fn construct(c: Construction) -> Result<SeidelGraph, ConstructError> {
    Ok(match c {
        Construction::Pentagon => SeidelGraph::cycle(5).expect("n = 5"),
        Construction::Triangle => SeidelGraph::complete(3).expect("n = 3"),
        Construction::T1(s) => t1(s)?,
        Construction::Paley(q) => paley::paley_graph(q)?,
        Construction::PaleyProjective(q) => {
            let f = crate::field::FieldCtx::new(q)?;
            paley::paley_projective(&f, &paley::Basis::standard())?
        }
    })
}

/// The extensible graph with parameters `(1, s, 2(s-1))`.
pub fn t1(s: usize) -> Result<SeidelGraph, ConstructError> {
    let r = match s {
        1 => 0,
        2 => 2,
        3 => 3,
        5 => 4,
        _ => return Err(ConstructError::UnsupportedS(s)),
    };
    let translations: Vec<usize> = (0..s)
        .map(|i| if i < r { 1 << i } else { (1 << r) - 1 })
        .collect();
    let y2_size = if s == 1 { 0 } else { 1usize << r };
    let y2 = |u: usize| 2 * s + 1 + u;
    // χ_i(u) = +1 iff the number of coordinates j ≠ i set in u is even
    let chi_plus = |i: usize, u: usize| {
        let others = if i < r { u & !(1 << i) } else { u };
        others.count_ones() % 2 == 0
    };
    let mut edges = Vec::new();
    for i in 1..=s {
        edges.extend([(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]);
    }
    for u in 0..y2_size {
        for &t in &translations {
            if u < u ^ t {
                edges.push((y2(u), y2(u ^ t)));
            }
        }
        for i in 0..s {
            let a = if chi_plus(i, u) { 2 * i + 1 } else { 2 * i + 2 };
            edges.push((a, y2(u)));
        }
    }
    Ok(SeidelGraph::from_edges(1 + 2 * s + y2_size, edges).expect("labels in range"))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("structure clause {clause} fails: {reason}")]
pub struct T1Error {
    pub clause: u8,
    pub reason: String,
}

fn fail(clause: u8, reason: impl Into<String>) -> T1Error {
    T1Error { clause, reason: reason.into() }
}

/// Structure of a `t = 1` extensible graph seen from a base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T1Structure {
    pub y: usize,
    pub s: usize,
    /// `α_i = {a′_i, a″_i}`, with `a′_i < a″_i`, ordered by `a′_i`.
    pub alpha: Vec<(usize, usize)>,
    /// `Λ(y,2)` in increasing order.
    pub y2: Vec<usize>,
    /// `A′_i = Λ(a′_i,1) ∩ Λ(y,2)`.
    pub a_prime: Vec<Vec<usize>>,
    /// `A″_i = Λ(a″_i,1) ∩ Λ(y,2)`.
    pub a_second: Vec<Vec<usize>>,
    /// `D_i`: edges of `Λ(y,2)` lying inside `A′_i` or inside `A″_i`.
    pub directions: Vec<Vec<(usize, usize)>>,
    /// `t_i`: swaps the ends of every edge of `D_i`, fixes every other vertex.
    pub translations: Vec<Perm>,
    pub group_order: usize,
    pub rank: usize,
}

/// Extracts and checks the structure of a `t = 1` graph at `y`.
///
/// Clause 0 covers the preconditions; clauses 1 to 5 are, in order: `Λ(y,1)`
/// is a union of `s` disjoint edges; each `{A′_i, A″_i}` partitions `Λ(y,2)`
/// into halves of size `s̄`; `Λ(y,2)` has no triangle; every edge of
/// `Λ(y,2)` lies in exactly one `D_i` and each `D_i` meets `A′_i`, `A″_i` in
/// perfect matchings; the `t_i` generate an elementary abelian 2-group acting
/// regularly on `Λ(y,2)`, of rank `s` or `s - 1`, and in the latter case
/// `t_1 ∘ … ∘ t_s = id`.
pub fn verify_t1_structure(lam: &SeidelGraph, y: usize) -> Result<T1Structure, T1Error> {
    let n = lam.n();
    if y >= n {
        return Err(fail(0, format!("vertex {y} out of range")));
    }
    let p = extensible_params(lam).ok_or_else(|| fail(0, "graph is not extensible"))?;
    if p.t != 1 || p.s < 2 {
        return Err(fail(0, format!("needs t = 1 and s >= 2, found ({}, {}, {})", p.t, p.s, p.sbar)));
    }
    let s = p.s;
    let y1 = lam.neighborhood(y, Distance::Exactly(1)).expect("valid vertex");
    let y2 = lam.neighborhood(y, Distance::Exactly(2)).expect("valid vertex");

    // (1)
    let mut alpha = Vec::new();
    for &a in &y1 {
        let partners: Vec<usize> = y1.iter().copied().filter(|&b| lam.adjacent(a, b)).collect();
        if partners.len() != 1 {
            return Err(fail(1, format!("vertex {a} has {} neighbours in the first sphere", partners.len())));
        }
        if a < partners[0] {
            alpha.push((a, partners[0]));
        }
    }
    if alpha.len() != s {
        return Err(fail(1, "wrong number of edges"));
    }

    // (2)
    let side = |a: usize| -> Vec<usize> { y2.iter().copied().filter(|&u| lam.adjacent(a, u)).collect() };
    let a_prime: Vec<Vec<usize>> = alpha.iter().map(|&(a, _)| side(a)).collect();
    let a_second: Vec<Vec<usize>> = alpha.iter().map(|&(_, b)| side(b)).collect();
    for i in 0..s {
        let (x, z) = (&a_prime[i], &a_second[i]);
        if x.len() != p.sbar || z.len() != p.sbar || x.iter().any(|u| z.contains(u)) || x.len() + z.len() != y2.len() {
            return Err(fail(2, format!("pair {i} does not split the second sphere in halves")));
        }
    }

    // (3)
    for (k, &a) in y2.iter().enumerate() {
        for (l, &b) in y2.iter().enumerate().skip(k + 1) {
            if lam.adjacent(a, b) && y2[l + 1..].iter().any(|&c| lam.adjacent(a, c) && lam.adjacent(b, c)) {
                return Err(fail(3, format!("triangle through {a}, {b}")));
            }
        }
    }

    // (4)
    let mut directions = vec![Vec::new(); s];
    for (k, &a) in y2.iter().enumerate() {
        for &b in &y2[k + 1..] {
            if !lam.adjacent(a, b) {
                continue;
            }
            let inside: Vec<usize> = (0..s)
                .filter(|&i| {
                    let pa = a_prime[i].contains(&a);
                    pa == a_prime[i].contains(&b)
                })
                .collect();
            if inside.len() != 1 {
                return Err(fail(4, format!("edge {{{a}, {b}}} lies in {} of the A-sets", inside.len())));
            }
            directions[inside[0]].push((a, b));
        }
    }
    for (i, d) in directions.iter().enumerate() {
        let mut touched: Vec<usize> = d.iter().flat_map(|&(a, b)| [a, b]).collect();
        touched.sort_unstable();
        touched.dedup();
        if d.len() != 2 * (s - 1) || touched != y2 {
            return Err(fail(4, format!("D_{} is not a perfect matching of the second sphere", i + 1)));
        }
    }

    // (5)
    let translations: Vec<Perm> = directions
        .iter()
        .map(|d| {
            let mut img: Vec<usize> = (0..n).collect();
            for &(a, b) in d {
                img[a] = b;
                img[b] = a;
            }
            Perm::from_images(img).expect("matching swap")
        })
        .collect();
    for (i, a) in translations.iter().enumerate() {
        for b in &translations[i + 1..] {
            if a.compose(b) != b.compose(a) {
                return Err(fail(5, "translations do not commute"));
            }
        }
    }
    let mut group = vec![Perm::identity(n)];
    let mut idx = 0;
    while idx < group.len() {
        for t in &translations {
            let g = group[idx].compose(t);
            if !group.contains(&g) {
                group.push(g);
            }
        }
        idx += 1;
    }
    if group.iter().any(|g| !g.compose(g).is_identity()) {
        return Err(fail(5, "T has an element of order greater than 2"));
    }
    let base = y2[0];
    let mut images: Vec<usize> = group.iter().map(|g| g.apply(base)).collect();
    images.sort_unstable();
    if group.len() != y2.len() || images != y2 {
        return Err(fail(5, "T does not act regularly on the second sphere"));
    }
    let rank = group.len().trailing_zeros() as usize;
    if rank != s && rank + 1 != s {
        return Err(fail(5, format!("rank {rank} is neither s nor s - 1")));
    }
    if rank + 1 == s {
        let product = translations.iter().fold(Perm::identity(n), |acc, t| acc.compose(t));
        if !product.is_identity() {
            return Err(fail(5, "t_1 ∘ … ∘ t_s is not the identity"));
        }
    }
    Ok(T1Structure {
        y,
        s,
        alpha,
        y2,
        a_prime,
        a_second,
        directions,
        translations,
        group_order: group.len(),
        rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensible::ExtParams;

    #[test]
    fn names_parse_and_print() {
        for name in ["pentagon", "triangle", "t1:3", "paley:13", "paley-proj:9"] {
            assert_eq!(name.parse::<Construction>().unwrap().to_string(), name);
        }
        assert!("t1:x".parse::<Construction>().is_err());
        assert!("hexagon".parse::<Construction>().is_err());
    }

    #[test]
    fn t1_parameters() {
        for (s, order) in [(1, 3), (2, 9), (3, 15), (5, 27)] {
            let g = t1(s).unwrap();
            assert_eq!(g.n(), order);
            let want = ExtParams::new(1, s, 2 * (s - 1)).unwrap();
            assert_eq!(extensible_params(&g), Some(want));
        }
        assert_eq!(t1(4), Err(ConstructError::UnsupportedS(4)));
        assert_eq!(t1(1).unwrap(), SeidelGraph::complete(3).unwrap());
    }

    #[test]
    fn structure_at_every_vertex() {
        for (s, rank) in [(2, 2), (3, 3), (5, 4)] {
            let g = t1(s).unwrap();
            for y in 0..g.n() {
                let st = verify_t1_structure(&g, y).unwrap();
                assert_eq!(st.rank, rank);
                assert_eq!(st.group_order, 1 << rank);
            }
        }
    }

    #[test]
    fn second_sphere_shapes() {
        let st = verify_t1_structure(&t1(2).unwrap(), 0).unwrap();
        let sq = t1(2).unwrap().induced(&st.y2).unwrap();
        assert!((0..4).all(|v| sq.degree(v) == 2) && sq.diameter() == Some(2));
        let st = verify_t1_structure(&t1(3).unwrap(), 4).unwrap();
        let cube = t1(3).unwrap().induced(&st.y2).unwrap();
        assert_eq!(cube.edge_count(), 12);
        assert_eq!(cube.diameter(), Some(3));
    }

    #[test]
    fn clause_errors() {
        assert_eq!(verify_t1_structure(&SeidelGraph::cycle(5).unwrap(), 0).unwrap_err().clause, 0);
        assert_eq!(verify_t1_structure(&t1(1).unwrap(), 0).unwrap_err().clause, 0);
        assert_eq!(verify_t1_structure(&t1(2).unwrap(), 99).unwrap_err().clause, 0);
    }
}
