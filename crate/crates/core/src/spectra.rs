//! Exact spectra of `E = S(1,1)` and the polynomial `χ(c) = det S(1,c)`.
//!
//! Both polynomials are interpolated from exact determinants at the integer
//! points `0..=n`. They are tied by `χ(c) = (-c)^n · p(1 - 1/c)`, so a root
//! `c₀` of `χ` is the image of the eigenvalue `λ = 1 - 1/c₀`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::SeidelGraph;
use crate::linalg::det_bareiss;
use crate::poly::IntPoly;

/// `S(ω, c)`: diagonal `ω`, off-diagonal entries `ε_ij · c`.
#[derive(Clone, Debug)]
pub struct ParamMatrix<'a> {
    pub graph: &'a SeidelGraph,
    pub omega: BigRational,
    pub c: BigRational,
}

impl<'a> ParamMatrix<'a> {
    pub fn new(graph: &'a SeidelGraph, omega: BigRational, c: BigRational) -> Self {
        ParamMatrix { graph, omega, c }
    }

    pub fn entry(&self, i: usize, j: usize) -> BigRational {
        if i == j {
            self.omega.clone()
        } else {
            &self.c * BigRational::from_integer(self.graph.sign(i, j).into())
        }
    }

    pub fn det(&self) -> BigRational {
        let n = self.graph.n();
        let l = num_integer::lcm(self.omega.denom().clone(), self.c.denom().clone());
        let scale = BigRational::from_integer(l.clone());
        let m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| (self.entry(i, j) * &scale).to_integer()).collect())
            .collect();
        BigRational::new(det_bareiss(m), num_traits::pow(l, n))
    }
}

fn interpolate(n: usize, det_at: impl Fn(i64) -> BigInt) -> IntPoly {
    let values: Vec<BigInt> = (0..=n as i64).map(det_at).collect();
    IntPoly::interpolate_integer_points(&values).expect("determinants of integer matrices are integer polynomials")
}

/// `det(xI - E)`, monic of degree `n`.
pub fn char_poly(g: &SeidelGraph) -> IntPoly {
    let n = g.n();
    let e = g.seidel_matrix();
    interpolate(n, |x| {
        let m = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(if i == j { x } else { 0 } - e[i][j] as i64)).collect())
            .collect();
        det_bareiss(m)
    })
}

/// `χ(c) = det S(1, c) = det(I + cA)` with `A = E - I`.
pub fn chi_polynomial(g: &SeidelGraph) -> IntPoly {
    let n = g.n();
    interpolate(n, |c| {
        let m = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(if i == j { 1 } else { c * g.sign(i, j) as i64 })).collect())
            .collect();
        det_bareiss(m)
    })
}

/// `(-1)^n Σ_k p_k c^{n-k} (c-1)^k`, i.e. `(-c)^n p(1 - 1/c)`.
pub fn chi_from_char_poly(p: &IntPoly, n: usize) -> IntPoly {
    let c = IntPoly::from_i64(&[0, 1]);
    let cm1 = IntPoly::from_i64(&[-1, 1]);
    let mut acc = IntPoly::zero();
    for (k, pk) in p.coeffs().iter().enumerate() {
        let term = c.pow(n - k).mul(&cm1.pow(k)).mul(&IntPoly::new(vec![pk.clone()]));
        acc = acc.add(&term);
    }
    if n % 2 == 1 {
        acc.neg()
    } else {
        acc
    }
}

/// An eigenvalue of `E`: an integer, `1 ± √d` with `d` not a square, or an
/// isolating interval `(lo, hi]` for anything else.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Eigenvalue {
    Integer(i64),
    Surd { sign: i8, radicand: u64 },
    Interval { lo: BigRational, hi: BigRational },
}

fn rat_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl Eigenvalue {
    pub fn to_f64(&self) -> f64 {
        match self {
            Eigenvalue::Integer(k) => *k as f64,
            Eigenvalue::Surd { sign, radicand } => 1.0 + *sign as f64 * (*radicand as f64).sqrt(),
            Eigenvalue::Interval { lo, hi } => (rat_f64(lo) + rat_f64(hi)) / 2.0,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Eigenvalue::Interval { .. })
    }

    /// `c = 1/(1 - λ)`, the cosine attached to this eigenvalue; `None` for
    /// `λ = 1` or an interval.
    pub fn cosine(&self) -> Option<Cosine> {
        match *self {
            Eigenvalue::Integer(1) => None,
            Eigenvalue::Integer(k) => Some(Cosine::Rational(BigRational::new(1.into(), (1 - k).into()))),
            // 1 - (1 + σ√d) = -σ√d
            Eigenvalue::Surd { sign, radicand } => Some(Cosine::InvSqrt { sign: -sign, radicand }),
            Eigenvalue::Interval { .. } => None,
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Integer(k) => write!(f, "{k}"),
            Eigenvalue::Surd { sign, radicand } => {
                write!(f, "1{}sqrt({radicand})", if *sign > 0 { '+' } else { '-' })
            }
            Eigenvalue::Interval { lo, hi } => write!(f, "({lo}, {hi}]"),
        }
    }
}

impl Serialize for Eigenvalue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EigenvalueParseError {
    #[error("cannot parse eigenvalue {0:?}; expected an integer, a/b, or 1+sqrt(q) / 1-sqrt(q)")]
    Syntax(String),
    #[error("{0} is not an algebraic integer, so it is never an eigenvalue of E")]
    NotAlgebraicInteger(String),
}

impl FromStr for Eigenvalue {
    type Err = EigenvalueParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let syntax = || EigenvalueParseError::Syntax(s.to_string());
        for (prefix, sign) in [("1+sqrt(", 1i8), ("1-sqrt(", -1i8)] {
            if let Some(rest) = t.strip_prefix(prefix) {
                let d: u64 = rest.strip_suffix(')').ok_or_else(syntax)?.parse().map_err(|_| syntax())?;
                let r = d.sqrt();
                return Ok(if r * r == d {
                    Eigenvalue::Integer(1 + sign as i64 * r as i64)
                } else {
                    Eigenvalue::Surd { sign, radicand: d }
                });
            }
        }
        match t.split_once('/') {
            Some((a, b)) => {
                let a: i64 = a.parse().map_err(|_| syntax())?;
                let b: i64 = b.parse().map_err(|_| syntax())?;
                if b == 0 {
                    return Err(syntax());
                }
                if a % b != 0 {
                    return Err(EigenvalueParseError::NotAlgebraicInteger(s.to_string()));
                }
                Ok(Eigenvalue::Integer(a / b))
            }
            None => t.parse().map(Eigenvalue::Integer).map_err(|_| syntax()),
        }
    }
}

/// An exact cosine `c = 1/(1 - λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cosine {
    Rational(BigRational),
    /// `sign / √radicand`.
    InvSqrt { sign: i8, radicand: u64 },
}

impl Cosine {
    pub fn to_f64(&self) -> f64 {
        match self {
            Cosine::Rational(r) => rat_f64(r),
            Cosine::InvSqrt { sign, radicand } => *sign as f64 / (*radicand as f64).sqrt(),
        }
    }

    pub fn abs(&self) -> Cosine {
        match self {
            Cosine::Rational(r) => Cosine::Rational(r.abs()),
            Cosine::InvSqrt { radicand, .. } => Cosine::InvSqrt { sign: 1, radicand: *radicand },
        }
    }

    pub fn neg(&self) -> Cosine {
        match self {
            Cosine::Rational(r) => Cosine::Rational(-r),
            Cosine::InvSqrt { sign, radicand } => Cosine::InvSqrt { sign: -sign, radicand: *radicand },
        }
    }
}

impl fmt::Display for Cosine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cosine::Rational(r) => write!(f, "{r}"),
            Cosine::InvSqrt { sign, radicand } => {
                write!(f, "{}1/sqrt({radicand})", if *sign < 0 { "-" } else { "" })
            }
        }
    }
}

impl Serialize for Cosine {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Eigenvalues of `E` with multiplicities, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeidelSpectrum {
    pub n: usize,
    pub char_poly: IntPoly,
    pub eigenvalues: Vec<(Eigenvalue, usize)>,
}

impl SeidelSpectrum {
    pub fn is_exact(&self) -> bool {
        self.eigenvalues.iter().all(|(l, _)| l.is_exact())
    }

    pub fn distinct(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn multiplicity(&self, lambda: &Eigenvalue) -> usize {
        self.eigenvalues.iter().find(|(l, _)| l == lambda).map_or(0, |&(_, m)| m)
    }

    pub fn min(&self) -> &Eigenvalue {
        &self.eigenvalues[0].0
    }

    pub fn max(&self) -> &Eigenvalue {
        &self.eigenvalues[self.eigenvalues.len() - 1].0
    }

    /// Exact `(Σ m λ, Σ m λ²)`; `None` when an eigenvalue is an interval
    /// or the irrational parts fail to cancel.
    pub fn moments(&self) -> Option<(BigInt, BigInt)> {
        let (mut s1, mut s2) = (BigInt::zero(), BigInt::zero());
        let mut irrational: BTreeMap<u64, i64> = BTreeMap::new();
        for (l, m) in &self.eigenvalues {
            let m = *m as i64;
            match l {
                Eigenvalue::Integer(k) => {
                    s1 += BigInt::from(m * k);
                    s2 += BigInt::from(m * k * k);
                }
                Eigenvalue::Surd { sign, radicand } => {
                    // (1 + σ√d)² = 1 + d + 2σ√d
                    s1 += BigInt::from(m);
                    s2 += BigInt::from(m) * (BigInt::one() + BigInt::from(*radicand));
                    *irrational.entry(*radicand).or_default() += m * *sign as i64;
                }
                Eigenvalue::Interval { .. } => return None,
            }
        }
        irrational.values().all(|&v| v == 0).then_some((s1, s2))
    }
}

/// `(Σ λ, Σ λ²)` read off the coefficients of a monic polynomial.
pub fn power_sums(p: &IntPoly) -> (BigInt, BigInt) {
    let c = p.coeffs();
    let n = c.len() - 1;
    let e1 = if n >= 1 { -&c[n - 1] } else { BigInt::zero() };
    let e2 = if n >= 2 { c[n - 2].clone() } else { BigInt::zero() };
    (e1.clone(), &e1 * &e1 - BigInt::from(2) * e2)
}

/// `x² - 2x - (d - 1)`, whose roots are `1 ± √d`.
pub fn surd_factor(d: u64) -> IntPoly {
    IntPoly::new(vec![BigInt::one() - BigInt::from(d), BigInt::from(-2), BigInt::one()])
}

/// Factors `det(xI - E)` into integer roots and `1 ± √d` pairs; anything left
/// over is isolated into rational intervals of width at most `2^-40`.
pub fn spectrum(g: &SeidelGraph) -> SeidelSpectrum {
    spectrum_of_poly(char_poly(g), g.n())
}

pub fn spectrum_of_poly(p: IntPoly, n: usize) -> SeidelSpectrum {
    let mut rest = p.clone();
    let mut found: Vec<(Eigenvalue, usize)> = Vec::new();
    // |λ - 1| ≤ n - 1 for a ±1 matrix with unit diagonal
    let radius = n.saturating_sub(1) as i64;
    for k in 1 - radius..=1 + radius {
        let lin = IntPoly::linear(k);
        let mut m = 0;
        while let Some(q) = rest.div_exact_monic(&lin) {
            rest = q;
            m += 1;
        }
        if m > 0 {
            found.push((Eigenvalue::Integer(k), m));
        }
    }
    let dmax = (radius * radius) as u64;
    for d in 2..=dmax {
        if rest.degree().unwrap_or(0) < 2 {
            break;
        }
        let r = d.sqrt();
        if r * r == d {
            continue;
        }
        let quad = surd_factor(d);
        let mut m = 0;
        while let Some(q) = rest.div_exact_monic(&quad) {
            rest = q;
            m += 1;
        }
        if m > 0 {
            found.push((Eigenvalue::Surd { sign: 1, radicand: d }, m));
            found.push((Eigenvalue::Surd { sign: -1, radicand: d }, m));
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let width = BigRational::new(1.into(), BigInt::one() << 40);
        for (factor, m) in rest.to_rational().square_free() {
            for (lo, hi) in factor.isolate_real_roots(&width) {
                found.push((Eigenvalue::Interval { lo, hi }, m));
            }
        }
    }
    found.sort_by(|a, b| a.0.to_f64().total_cmp(&b.0.to_f64()));
    SeidelSpectrum { n, char_poly: p, eigenvalues: found }
}

/// At most two distinct eigenvalues.
pub fn two_eigenvalue_check(g: &SeidelGraph) -> bool {
    spectrum(g).distinct() <= 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn small_char_polys() {
        // E = J on the empty graph: (x - 3) x²
        assert_eq!(char_poly(&SeidelGraph::empty(3).unwrap()), poly(&[0, 0, -3, 1]));
        let k2 = SeidelGraph::complete(2).unwrap();
        assert_eq!(char_poly(&k2), poly(&[0, -2, 1]));
        assert_eq!(char_poly(&SeidelGraph::empty(1).unwrap()), poly(&[-1, 1]));
    }

    #[test]
    fn k2_spectrum() {
        let s = spectrum(&SeidelGraph::complete(2).unwrap());
        assert_eq!(s.eigenvalues, vec![(Eigenvalue::Integer(0), 1), (Eigenvalue::Integer(2), 1)]);
        assert!(two_eigenvalue_check(&SeidelGraph::complete(2).unwrap()));
    }

    #[test]
    fn pentagon_extension() {
        let g = SeidelGraph::cycle(5).unwrap().with_isolated_vertex();
        assert_eq!(char_poly(&g), surd_factor(5).pow(3));
        let s = spectrum(&g);
        assert_eq!(
            s.eigenvalues,
            vec![
                (Eigenvalue::Surd { sign: -1, radicand: 5 }, 3),
                (Eigenvalue::Surd { sign: 1, radicand: 5 }, 3)
            ]
        );
        assert_eq!(s.moments(), Some((6.into(), 36.into())));
        assert_eq!(chi_polynomial(&g), poly(&[-1, 0, 5]).pow(3).neg());
    }

    #[test]
    fn path_has_interval_eigenvalues() {
        let g = SeidelGraph::path(4).unwrap();
        let s = spectrum(&g);
        assert!(s.distinct() > 2);
        assert!(!two_eigenvalue_check(&g));
        let total: usize = s.eigenvalues.iter().map(|e| e.1).sum();
        assert_eq!(total, 4);
        assert_eq!(power_sums(&s.char_poly), (4.into(), 16.into()));
    }

    #[test]
    fn chi_relation() {
        for g in [SeidelGraph::path(5).unwrap(), SeidelGraph::cycle(6).unwrap(), SeidelGraph::complete(4).unwrap()] {
            let n = g.n();
            assert_eq!(chi_polynomial(&g), chi_from_char_poly(&char_poly(&g), n));
        }
    }

    #[test]
    fn param_matrix_det_matches_chi() {
        let g = SeidelGraph::cycle(5).unwrap();
        let chi = chi_polynomial(&g);
        for c in [-3i64, 0, 2, 7] {
            let d = ParamMatrix::new(&g, BigRational::one(), BigRational::from_integer(c.into())).det();
            assert_eq!(d, BigRational::from_integer(chi.eval(&c.into())));
        }
        let half = BigRational::new(1.into(), 2.into());
        let d = ParamMatrix::new(&g, BigRational::one(), half.clone()).det();
        let num = chi.coeffs().iter().enumerate().fold(BigRational::zero(), |acc, (k, a)| {
            acc + BigRational::from_integer(a.clone()) * num_traits::pow(half.clone(), k)
        });
        assert_eq!(d, num);
    }

    #[test]
    fn eigenvalue_strings() {
        for s in ["-2", "10", "1+sqrt(5)", "1-sqrt(13)"] {
            assert_eq!(s.parse::<Eigenvalue>().unwrap().to_string(), s);
        }
        assert_eq!("6/3".parse::<Eigenvalue>().unwrap(), Eigenvalue::Integer(2));
        assert_eq!("1+sqrt(9)".parse::<Eigenvalue>().unwrap(), Eigenvalue::Integer(4));
        assert!(matches!("1/3".parse::<Eigenvalue>(), Err(EigenvalueParseError::NotAlgebraicInteger(_))));
        assert!("x".parse::<Eigenvalue>().is_err());
    }

    #[test]
    fn cosines() {
        assert_eq!(Eigenvalue::Integer(-2).cosine().unwrap().to_string(), "1/3");
        assert_eq!(Eigenvalue::Integer(10).cosine().unwrap().to_string(), "-1/9");
        let c = Eigenvalue::Surd { sign: -1, radicand: 5 }.cosine().unwrap();
        assert_eq!(c.to_string(), "1/sqrt(5)");
        assert!(Eigenvalue::Integer(1).cosine().is_none());
    }
}
