//! Univariate polynomials over `Z` and `Q`, coefficients constant term first.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Integer polynomial; the coefficient vector never ends in zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    /// `x - a`.
    pub fn linear(a: i64) -> Self {
        IntPoly::from_i64(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn neg(&self) -> Self {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        (0..k).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.0.len().max(other.0.len());
        let get = |p: &IntPoly, i: usize| p.0.get(i).cloned().unwrap_or_default();
        IntPoly::new((0..len).map(|i| get(self, i) + get(other, i)).collect())
    }

    /// Quotient when `divisor` (leading coefficient ±1) divides exactly.
    pub fn div_exact_monic(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let d = divisor.degree()?;
        let lead = divisor.leading();
        if !lead.abs().is_one() {
            return None;
        }
        let mut rem = self.0.clone();
        if rem.len() <= d {
            return rem.iter().all(Zero::is_zero).then(IntPoly::zero);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] * &lead;
            if !c.is_zero() {
                for (j, dc) in divisor.0.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPoly::new(quot))
    }

    /// Interpolates the unique polynomial of degree `≤ n` through
    /// `(k, values[k])`, `k = 0..=n`, when it has integer coefficients.
    ///
    /// The Newton coefficients `Δᵏf(0) / k!` are integers for integer
    /// polynomials; the falling-factorial expansion is then multiplied out.
    pub fn interpolate_integer_points(values: &[BigInt]) -> Option<IntPoly> {
        let n = values.len();
        let mut diffs = values.to_vec();
        let mut newton = Vec::with_capacity(n);
        let mut fact = BigInt::one();
        for k in 0..n {
            if k > 0 {
                fact *= k;
            }
            let (q, r) = diffs[0].div_rem(&fact);
            if !r.is_zero() {
                return None;
            }
            newton.push(q);
            for i in 0..diffs.len() - 1 {
                diffs[i] = &diffs[i + 1] - &diffs[i];
            }
            diffs.pop();
        }
        let mut acc = IntPoly::zero();
        for k in (0..n).rev() {
            acc = acc.mul(&IntPoly::linear(k as i64)).add(&IntPoly::new(vec![newton[k].clone()]));
        }
        Some(acc)
    }

    pub fn to_rational(&self) -> RatPoly {
        RatPoly::new(self.0.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Coefficients rendered as decimal strings.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }

    /// `self(a(x))`.
    pub fn compose(&self, a: &IntPoly) -> IntPoly {
        self.0.iter().rev().fold(IntPoly::zero(), |acc, c| acc.mul(a).add(&IntPoly::new(vec![c.clone()])))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(s)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{a}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Rational polynomial; the coefficient vector never ends in zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly(Vec<BigRational>);

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.0.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(k.into())).collect(),
        )
    }

    pub fn monic(&self) -> RatPoly {
        match self.0.last() {
            None => self.clone(),
            Some(l) => RatPoly(self.0.iter().map(|c| c / l).collect()),
        }
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let len = self.0.len().max(other.0.len());
        let get = |p: &RatPoly, i: usize| p.0.get(i).cloned().unwrap_or_else(BigRational::zero);
        RatPoly::new((0..len).map(|i| get(self, i) - get(other, i)).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (RatPoly(Vec::new()), self.clone());
        }
        let lead = d.0[dd].clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: `self = c · Π aᵢ^i` with the `aᵢ`
    /// monic, square-free and pairwise coprime. Returns the nonconstant `aᵢ`
    /// with their exponents.
    pub fn square_free(&self) -> Vec<(RatPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.div_rem(&a0).0;
        let c = d.div_rem(&a0).0;
        let mut dd = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&dd);
            b = b.div_rem(&a).0;
            let c = dd.div_rem(&a).0;
            dd = c.sub(&b.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    fn sturm_chain(&self) -> Vec<RatPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[k - 2].div_rem(&chain[k - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(RatPoly::new(r.0.into_iter().map(|c| -c).collect()));
        }
        chain
    }

    fn sign_changes(chain: &[RatPoly], x: &BigRational) -> usize {
        let signs: Vec<bool> = chain
            .iter()
            .map(|p| p.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Disjoint intervals `(lo, hi]` of width at most `width`, each holding
    /// exactly one real root of this square-free polynomial, in increasing
    /// order.
    pub fn isolate_real_roots(&self, width: &BigRational) -> Vec<(BigRational, BigRational)> {
        let Some(deg) = self.degree() else { return Vec::new() };
        if deg == 0 {
            return Vec::new();
        }
        let chain = self.sturm_chain();
        let lead = self.0[deg].abs();
        let bound = BigRational::one() + self.0[..deg].iter().map(|c| c.abs() / &lead).fold(BigRational::zero(), |m, c| if c > m { c } else { m });
        let two = BigRational::from_integer(2.into());
        let mut out = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = Self::sign_changes(&chain, &lo) - Self::sign_changes(&chain, &hi);
            if count == 0 {
                continue;
            }
            if count == 1 && &hi - &lo <= *width {
                out.push((lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / &two;
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn display_and_arithmetic() {
        let p = IntPoly::from_i64(&[-4, -2, 1]);
        assert_eq!(p.to_string(), "x^2 - 2x - 4");
        assert_eq!(p.pow(2).degree(), Some(4));
        assert_eq!(IntPoly::from_i64(&[0, 0, 0]), IntPoly::zero());
        assert_eq!(IntPoly::from_i64(&[1, -5]).to_string(), "-5x + 1");
    }

    #[test]
    fn exact_division() {
        let a = IntPoly::from_i64(&[-4, -2, 1]);
        let b = IntPoly::linear(3);
        let p = a.pow(2).mul(&b);
        assert_eq!(p.div_exact_monic(&b).unwrap(), a.pow(2));
        assert_eq!(p.div_exact_monic(&a).unwrap(), a.mul(&b));
        assert!(p.div_exact_monic(&IntPoly::linear(1)).is_none());
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let p = IntPoly::from_i64(&[7, -3, 0, 2, -1, 5]);
        let values: Vec<BigInt> = (0..=5).map(|x| p.eval(&BigInt::from(x))).collect();
        assert_eq!(IntPoly::interpolate_integer_points(&values).unwrap(), p);
        // x(x-1)/2 is not an integer polynomial
        assert!(IntPoly::interpolate_integer_points(&[0.into(), 0.into(), 1.into()]).is_none());
    }

    #[test]
    fn yun_decomposition() {
        let a = IntPoly::from_i64(&[-2, 0, 1]);
        let b = IntPoly::linear(1);
        let p = a.pow(3).mul(&b).to_rational();
        let sf = p.square_free();
        assert_eq!(sf.len(), 2);
        assert_eq!(sf[0], (b.to_rational(), 1));
        assert_eq!(sf[1], (a.to_rational(), 3));
    }

    #[test]
    fn sturm_isolation() {
        // roots ±√2 and 1
        let p = IntPoly::from_i64(&[-2, 0, 1]).mul(&IntPoly::linear(1)).to_rational();
        let iv = p.isolate_real_roots(&r(1, 1000));
        assert_eq!(iv.len(), 3);
        let s2 = 2f64.sqrt();
        let mids: Vec<f64> = iv
            .iter()
            .map(|(lo, hi)| {
                let m = (lo + hi) / BigRational::from_integer(2.into());
                m.numer().to_string().parse::<f64>().unwrap() / m.denom().to_string().parse::<f64>().unwrap()
            })
            .collect();
        for (m, want) in mids.iter().zip([-s2, 1.0, s2]) {
            assert!((m - want).abs() < 1e-3);
        }
    }
}
