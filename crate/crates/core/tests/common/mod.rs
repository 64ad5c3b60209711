//! Independent oracles for the integration tests. Everything here works on
//! plain `i8` matrices and explicit enumeration, never on library shortcuts.

#![allow(dead_code)]

use equilines::SeidelGraph;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub type Matrix = Vec<Vec<i8>>;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SeidelGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    SeidelGraph::from_edges(n, edges).unwrap()
}

pub fn random_signs<R: Rng>(rng: &mut R, n: usize) -> Vec<i8> {
    (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect()
}

pub fn switch_matrix(e: &Matrix, nu: &[i8]) -> Matrix {
    let n = e.len();
    (0..n).map(|i| (0..n).map(|j| nu[i] * nu[j] * e[i][j]).collect()).collect()
}

/// `ν_k = ε_kj`, `ν_j = 1`, applied entrywise.
pub fn localize_matrix(e: &Matrix, j: usize) -> Matrix {
    let nu: Vec<i8> = (0..e.len()).map(|k| if k == j { 1 } else { e[k][j] }).collect();
    switch_matrix(e, &nu)
}

pub fn graph_of(e: &Matrix) -> SeidelGraph {
    SeidelGraph::from_seidel_matrix(e).unwrap()
}

/// Every `ν ∈ {±1}^n` with `ν·E1·ν = E2`, by enumeration.
pub fn brute_switch_equivalent(e1: &Matrix, e2: &Matrix) -> bool {
    let n = e1.len();
    (0u32..1 << n).any(|mask| {
        let nu: Vec<i8> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        switch_matrix(e1, &nu) == *e2
    })
}

/// Sign of `ε_ij ε_jk ε_ik` for every `i < j < k`, in lexicographic order.
pub fn brute_triples(e: &Matrix) -> Vec<i8> {
    let n = e.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push(e[i][j] * e[j][k] * e[i][k]);
            }
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `ˢE` with `(ˢE)_{σ(i),σ(j)} = E_ij`.
pub fn conjugate_matrix(e: &Matrix, sigma: &[usize]) -> Matrix {
    let n = e.len();
    let mut out = vec![vec![0i8; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[sigma[i]][sigma[j]] = e[i][j];
        }
    }
    out
}

/// Order of the two-graph group by testing every permutation against the
/// exhaustive switching oracle.
pub fn brute_two_graph_order(g: &SeidelGraph) -> usize {
    let e = g.seidel_matrix();
    permutations(g.n())
        .iter()
        .filter(|s| brute_switch_equivalent(&conjugate_matrix(&e, s), &e))
        .count()
}

pub fn brute_automorphism_order(g: &SeidelGraph) -> usize {
    let e = g.seidel_matrix();
    permutations(g.n()).iter().filter(|s| conjugate_matrix(&e, s) == e).count()
}

/// Coefficients of `det(xI - M)`, constant term first, by Faddeev–LeVerrier.
pub fn faddeev_leverrier(m: &Matrix) -> Vec<BigRational> {
    let n = m.len();
    let a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &x[i][k] * &y[k][j]))
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
        let mut next = mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = mul(&a, &mk);
        let tr = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        coeffs[n - k] = -tr / BigRational::from_integer((k as i64).into());
    }
    coeffs
}

/// `(v, k, λ, μ)` by counting every pair, `None` if any count varies.
pub fn brute_srg(g: &SeidelGraph) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    let deg: Vec<usize> = (0..n).map(|v| (0..n).filter(|&w| g.adjacent(v, w)).count()).collect();
    if deg.iter().any(|&d| d != deg[0]) {
        return None;
    }
    let (mut lam, mut mu) = (Vec::new(), Vec::new());
    for a in 0..n {
        for b in a + 1..n {
            let c = (0..n).filter(|&w| g.adjacent(a, w) && g.adjacent(b, w)).count();
            if g.adjacent(a, b) {
                lam.push(c);
            } else {
                mu.push(c);
            }
        }
    }
    let constant = |v: &[usize]| v.first().copied().filter(|&x| v.iter().all(|&y| y == x));
    Some((n, deg[0], constant(&lam)?, constant(&mu)?))
}

/// `F_{p²}` as pairs `a + b·x` with `x² = -m`; index `a + p·b`.
pub struct QuadExt {
    pub p: usize,
    pub m: usize,
}

impl QuadExt {
    pub fn q(&self) -> usize {
        self.p * self.p
    }
    pub fn add(&self, a: usize, b: usize) -> usize {
        let p = self.p;
        (a % p + b % p) % p + p * ((a / p + b / p) % p)
    }
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.p;
        let (a0, a1, b0, b1) = (a % p, a / p, b % p, b / p);
        let c0 = (a0 * b0 + p * p - (self.m * a1 % p) * b1 % p) % p;
        let c1 = (a0 * b1 + a1 * b0) % p;
        c0 + p * c1
    }
}

/// Nonzero squares of a field given by its multiplication.
pub fn squares(q: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<bool> {
    let mut sq = vec![false; q];
    for a in 1..q {
        sq[mul(a, a)] = true;
    }
    sq
}

/// `sign · Π fᵢ^{eᵢ}`, each factor given by coefficients, constant first.
pub fn product_poly(sign: i64, factors: &[(&[i64], usize)]) -> equilines::IntPoly {
    let mut acc = equilines::IntPoly::from_i64(&[sign]);
    for &(f, e) in factors {
        acc = acc.mul(&equilines::IntPoly::from_i64(f).pow(e));
    }
    acc
}
