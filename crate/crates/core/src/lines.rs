//! Equiangular line systems from the extreme eigenvalues of `E`.
//!
//! For an eigenvalue `λ` of multiplicity `m`, `E - λI` has rank `n - m`. At
//! `λ = λ_min` it is positive semidefinite, at `λ = λ_max` its negative is.
//! Dividing by `|1 - λ|` gives a Gram matrix with unit diagonal and
//! off-diagonal entries `ε_ij / (1 - λ)`, realised by `n` unit vectors in
//! dimension `n - m`. Interior eigenvalues only yield indefinite forms,
//! which are exposed as Gram matrices and never as vectors.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::graph::SeidelGraph;
use crate::linalg::rank_bareiss;
use crate::spectra::{spectrum, Cosine, Eigenvalue, SeidelSpectrum};

/// Tolerance on the Gram reconstruction.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LineError {
    #[error("{0} is not an eigenvalue of E")]
    NotEigenvalue(Eigenvalue),
    #[error("{0} is only known as an interval; line systems need an exact eigenvalue")]
    Inexact(Eigenvalue),
    #[error("{0} is an interior eigenvalue: neither sign of E - λI is positive semidefinite")]
    NotPsd(Eigenvalue),
    #[error("E = λI; no off-diagonal structure")]
    Degenerate,
    #[error("exact rank {exact} disagrees with n - m(λ) = {expected}")]
    RankMismatch { exact: usize, expected: usize },
    #[error("numerical rank {numeric} disagrees with n - m(λ) = {expected}")]
    NumericRank { numeric: usize, expected: usize },
    #[error("Gram residual {0:e} exceeds the tolerance")]
    Residual(f64),
}

/// The form `S(1 - λ, 1) / |1 - λ|` attached to an exact eigenvalue.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReducedGram {
    pub n: usize,
    pub lambda: Eigenvalue,
    pub multiplicity: usize,
    pub rank: usize,
    /// `+1` at `λ_min`, `-1` at `λ_max`, `None` for an interior eigenvalue.
    pub psd_sign: Option<i8>,
    /// `c = 1/(1 - λ)`.
    pub cos: Cosine,
    /// Entries `1` on the diagonal and `ε_ij · c` elsewhere, as strings.
    pub gram_exact: Vec<Vec<String>>,
}

/// `n` unit vectors with pairwise inner products `ε_ij · c`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LineSystem {
    pub n: usize,
    pub dim: usize,
    pub lambda: Eigenvalue,
    pub multiplicity: usize,
    pub cos: Cosine,
    pub psd_sign: i8,
    pub vectors: Vec<Vec<f64>>,
    pub gram_exact: Vec<Vec<String>>,
    pub residual: f64,
}

fn exact_gram(g: &SeidelGraph, cos: &Cosine) -> Vec<Vec<String>> {
    let (pos, neg) = (cos.to_string(), cos.neg().to_string());
    (0..g.n())
        .map(|i| {
            (0..g.n())
                .map(|j| match (i == j, g.sign(i, j)) {
                    (true, _) => "1".to_string(),
                    (false, 1) => pos.clone(),
                    _ => neg.clone(),
                })
                .collect()
        })
        .collect()
}

/// The reduced form for any exact eigenvalue, definite or not.
pub fn reduced_gram(g: &SeidelGraph, lambda: &Eigenvalue) -> Result<ReducedGram, LineError> {
    reduced_gram_with(g, &spectrum(g), lambda)
}

fn reduced_gram_with(g: &SeidelGraph, sp: &SeidelSpectrum, lambda: &Eigenvalue) -> Result<ReducedGram, LineError> {
    if !lambda.is_exact() {
        return Err(LineError::Inexact(lambda.clone()));
    }
    let m = sp.multiplicity(lambda);
    if m == 0 {
        return Err(LineError::NotEigenvalue(lambda.clone()));
    }
    let cos = lambda.cosine().ok_or(LineError::Degenerate)?;
    let n = g.n();
    if let Eigenvalue::Integer(k) = *lambda {
        let e = g.seidel_matrix();
        let shifted: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(e[i][j] as i64 - if i == j { k } else { 0 })).collect())
            .collect();
        let exact = rank_bareiss(shifted);
        if exact != n - m {
            return Err(LineError::RankMismatch { exact, expected: n - m });
        }
    }
    let psd_sign = if lambda == sp.min() {
        Some(1)
    } else if lambda == sp.max() {
        Some(-1)
    } else {
        None
    };
    Ok(ReducedGram {
        n,
        lambda: lambda.clone(),
        multiplicity: m,
        rank: n - m,
        psd_sign,
        gram_exact: exact_gram(g, &cos),
        cos,
    })
}

/// Unit vectors realising the Gram matrix `ε_ij / (1 - λ)`.
pub fn embed_lines(g: &SeidelGraph, lambda: &Eigenvalue) -> Result<LineSystem, LineError> {
    let sp = spectrum(g);
    let red = reduced_gram_with(g, &sp, lambda)?;
    let psd_sign = red.psd_sign.ok_or_else(|| LineError::NotPsd(lambda.clone()))?;
    let n = g.n();
    let c = red.cos.to_f64();
    let gram = DMatrix::from_fn(n, n, |i, j| if i == j { 1.0 } else { g.sign(i, j) as f64 * c });
    let eig = SymmetricEigen::new(gram.clone());
    let scale = eig.eigenvalues.amax().max(1.0);
    let keep: Vec<usize> = (0..n).filter(|&k| eig.eigenvalues[k] > 1e-8 * scale).collect();
    if keep.len() != red.rank {
        return Err(LineError::NumericRank { numeric: keep.len(), expected: red.rank });
    }
    if (0..n).any(|k| eig.eigenvalues[k] < -1e-8 * scale) {
        return Err(LineError::NotPsd(lambda.clone()));
    }
    let vectors: Vec<Vec<f64>> = (0..n)
        .map(|i| keep.iter().map(|&k| eig.eigenvectors[(i, k)] * eig.eigenvalues[k].sqrt()).collect())
        .collect();
    let mut residual = 0f64;
    for i in 0..n {
        for j in 0..n {
            let dot: f64 = vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a * b).sum();
            residual = residual.max((dot - gram[(i, j)]).abs());
        }
    }
    if residual > RESIDUAL_TOLERANCE {
        return Err(LineError::Residual(residual));
    }
    Ok(LineSystem {
        n,
        dim: red.rank,
        lambda: red.lambda,
        multiplicity: red.multiplicity,
        cos: red.cos,
        psd_sign,
        vectors,
        gram_exact: red.gram_exact,
        residual,
    })
}
