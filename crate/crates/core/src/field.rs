//! Small finite fields `F_q`, `q = p^e` odd, with full operation tables.
//!
//! An element is its coefficient vector over `F_p` in base `p`, constant
//! term least significant, so `0` and `1` are the field's zero and one and
//! `0..p` is the prime subfield. `F_p[x]` is reduced modulo the smallest
//! monic irreducible polynomial of degree `e` in that same encoding.

use thiserror::Error;

/// Largest field order accepted.
pub const MAX_ORDER: usize = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("characteristic 2 is not supported (q = {0})")]
    EvenOrder(usize),
    #[error("field order {0} exceeds the limit of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("q = {0} is not congruent to 1 mod 4")]
    NotOneModFour(usize),
    #[error("element {element} is not in F_{q}")]
    OutOfRange { element: usize, q: usize },
    #[error("zero is not allowed here")]
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldCtx {
    p: usize,
    e: usize,
    q: usize,
    modulus: Vec<usize>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut m, mut e) = (q, 0);
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

fn digits(mut x: usize, p: usize, len: usize) -> Vec<usize> {
    (0..len)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic `m`, coefficients mod `p`.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dm;
            for (k, &c) in m[..dm].iter().enumerate() {
                r[shift + k] = (r[shift + k] + p * p - lead * c % p) % p;
            }
        }
    }
    r.resize(dm, 0);
    r
}

fn is_irreducible(m: &[usize], p: usize) -> bool {
    let e = m.len() - 1;
    for d in 1..=e / 2 {
        for low in 0..p.pow(d as u32) {
            let mut f = digits(low, p, d);
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldCtx {
    pub fn new(q: usize) -> Result<Self, FieldError> {
        let (p, e) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        if p == 2 {
            return Err(FieldError::EvenOrder(q));
        }
        if q > MAX_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|low| {
                    let mut m = digits(low, p, e);
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible(m, p))
                .expect("irreducible polynomials exist in every degree")
        };
        let elems: Vec<Vec<usize>> = (0..q).map(|x| digits(x, p, e)).collect();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<usize> = elems[a].iter().zip(&elems[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&s, p) as u16;
                let mut prod = vec![0usize; 2 * e - 1];
                for (i, &x) in elems[a].iter().enumerate() {
                    for (j, &y) in elems[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let r = if e == 1 { vec![prod[0]] } else { poly_rem(&prod, &modulus, p) };
                mul[a * q + b] = undigits(&r, p) as u16;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u16)
            .collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u16 })
            .collect();
        Ok(FieldCtx { p, e, q, modulus, add, mul, neg, inv })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    /// Coefficients of the reduction polynomial, constant term first.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    pub fn check(&self, a: usize) -> Result<usize, FieldError> {
        if a < self.q {
            Ok(a)
        } else {
            Err(FieldError::OutOfRange { element: a, q: self.q })
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a] as usize)
    }

    pub fn pow(&self, a: usize, mut k: usize) -> usize {
        let (mut base, mut acc) = (a, 1);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Basis `1, x, …, x^{e-1}` of `F_q` over `F_p`.
    pub fn prime_basis(&self) -> Vec<usize> {
        (0..self.e).map(|k| self.p.pow(k as u32)).collect()
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: usize) -> Option<usize> {
        if a == 0 {
            return None;
        }
        let (mut x, mut k) = (a, 1);
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Some generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        (1..self.q)
            .find(|&a| self.element_order(a) == Some(self.q - 1))
            .expect("the multiplicative group is cyclic")
    }

    /// Checks the field axioms on every triple when `q ≤ 32`, otherwise on a
    /// fixed stride through the elements.
    pub fn axioms_hold(&self) -> bool {
        let q = self.q;
        let stride = if q <= 32 { 1 } else { q / 29 + 1 };
        let sample: Vec<usize> = (0..q).step_by(stride).chain([q - 1]).collect();
        for &a in &sample {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.add(a, self.neg(a)) != 0 {
                return false;
            }
            if a != 0 && self.mul(a, self.inv[a] as usize) != 1 {
                return false;
            }
            for &b in &sample {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
                for &c in &sample {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return false;
                    }
                }
            }
        }
        self.element_order(self.primitive_element()) == Some(q - 1)
    }
}

/// Nonzero squares `C` and non-squares `C̄` of `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadResidues {
    pub squares: Vec<usize>,
    pub non_squares: Vec<usize>,
    is_square: Vec<bool>,
}

impl QuadResidues {
    pub fn new(f: &FieldCtx) -> Self {
        let mut is_square = vec![false; f.q()];
        for a in 1..f.q() {
            is_square[f.mul(a, a)] = true;
        }
        let squares = (1..f.q()).filter(|&a| is_square[a]).collect();
        let non_squares = (1..f.q()).filter(|&a| !is_square[a]).collect();
        QuadResidues { squares, non_squares, is_square }
    }

    /// True for nonzero squares only.
    #[inline]
    pub fn is_square(&self, a: usize) -> bool {
        self.is_square[a]
    }

    #[inline]
    pub fn is_non_square(&self, a: usize) -> bool {
        a != 0 && !self.is_square[a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(FieldCtx::new(6).unwrap_err(), FieldError::NotPrimePower(6));
        assert_eq!(FieldCtx::new(8).unwrap_err(), FieldError::EvenOrder(8));
        assert_eq!(FieldCtx::new(1).unwrap_err(), FieldError::NotPrimePower(1));
        assert!(matches!(FieldCtx::new(2187), Err(FieldError::TooLarge(_))));
    }

    #[test]
    fn chosen_moduli() {
        assert_eq!(FieldCtx::new(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldCtx::new(25).unwrap().modulus(), &[2, 0, 1]);
        assert_eq!(FieldCtx::new(13).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn axioms_and_residue_sizes() {
        for q in [3, 5, 7, 9, 13, 17, 25, 27, 29, 49, 81, 125] {
            let f = FieldCtx::new(q).unwrap();
            assert!(f.axioms_hold(), "q = {q}");
            let r = QuadResidues::new(&f);
            assert_eq!(r.squares.len(), (q - 1) / 2);
            assert_eq!(r.non_squares.len(), (q - 1) / 2);
            for &a in &r.squares {
                for &b in &r.squares {
                    assert!(r.is_square(f.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn i_squared_is_minus_one_in_f9() {
        let f = FieldCtx::new(9).unwrap();
        // x is encoded as 3
        assert_eq!(f.mul(3, 3), f.neg(1));
    }
}
