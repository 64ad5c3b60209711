//! Fraction-free (Bareiss) elimination over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact determinant; every intermediate division is exact.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Exact rank of a rectangular integer matrix.
pub fn rank_bareiss(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = (&m[i][j] * &m[rank][col] - &m[i][col] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn big(m: &[&[i64]]) -> Vec<Vec<BigInt>> {
        to_big(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect()).collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn determinants() {
        assert_eq!(det_bareiss(big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det_bareiss(big(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]])), BigInt::from(24));
        assert_eq!(det_bareiss(big(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(det_bareiss(Vec::new()), BigInt::one());
    }

    #[test]
    fn agrees_with_cofactor_expansion() {
        let mut state = 0x9e3779b97f4a7c15u64;
        for n in 1..=6 {
            for _ in 0..20 {
                let m: Vec<Vec<i64>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                state ^= state << 13;
                                state ^= state >> 7;
                                state ^= state << 17;
                                (state % 7) as i64 - 3
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(det_bareiss(to_big(&m)), BigInt::from(cofactor_det(&m)));
            }
        }
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_bareiss(big(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_bareiss(big(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank_bareiss(big(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])), 2);
        assert_eq!(rank_bareiss(big(&[&[1, 0, 0], &[0, 1, 0]])), 2);
        let j3 = big(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(rank_bareiss(j3), 1);
    }
}
