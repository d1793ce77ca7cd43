//! Integer-valued polynomials in shifted binomial bases.
//!
//! A polynomial is stored as exact integer coordinates in the basis
//! `B_m = { C(n - m, k) : k >= 0 }` for some integer shift `m`. Integer-valued
//! polynomials have integer coordinates in every such basis, so a basis change
//! (`rebase`) never leaves the integers. The canonical form used for equality
//! is the `B_0` expansion, which is unique.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binomial::binomial;

/// Polynomial `p(n) = sum_k coeffs[k] * C(n - shift, k)` with exact integer
/// coefficients. The zero polynomial has an empty coefficient list.
#[derive(Debug, Clone)]
pub struct BinomialPolynomial {
    shift: i64,
    coeffs: Vec<BigInt>,
}

impl BinomialPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        BinomialPolynomial { shift: 0, coeffs: Vec::new() }
    }

    /// A constant polynomial.
    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::from_coeffs(0, vec![c.into()])
    }

    /// The single basis element `C(n - shift, k)`.
    pub fn basis(shift: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(1);
        BinomialPolynomial { shift, coeffs }
    }

    /// Builds a polynomial from coefficients in `B_shift`, stripping trailing
    /// zeros so the representation is normalized.
    pub fn from_coeffs(shift: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BinomialPolynomial { shift, coeffs }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient (basis-independent), or `None` for zero.
    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exact evaluation at an integer point.
    pub fn evaluate(&self, n: i64) -> BigInt {
        let t = n - self.shift;
        let mut acc = BigInt::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * binomial(t, k as u64);
            }
        }
        acc
    }

    /// Re-expresses the polynomial in the basis `B_new_shift`. The new
    /// coefficients are again exact integers, by Vandermonde's convolution
    /// `C(n - a, k) = sum_j C(n - b, j) C(b - a, k - j)` (generalized upper
    /// argument, so `b < a` is fine).
    pub fn rebase(&self, new_shift: i64) -> Self {
        if new_shift == self.shift {
            return self.clone();
        }
        let delta = new_shift - self.shift;
        let d = self.coeffs.len();
        let mut out = Vec::with_capacity(d);
        for j in 0..d {
            let mut acc = BigInt::zero();
            for (k, c) in self.coeffs.iter().enumerate().skip(j) {
                if !c.is_zero() {
                    acc += c * binomial(delta, (k - j) as u64);
                }
            }
            out.push(acc);
        }
        Self::from_coeffs(new_shift, out)
    }

    /// Canonical `B_0` form.
    pub fn canonical(&self) -> Self {
        self.rebase(0)
    }

    /// Exact linear combination `sum_i scalar_i * p_i`, normalized in `B_0`.
    pub fn linear_combination<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, &'a BinomialPolynomial)>,
    {
        let mut acc: Vec<BigInt> = Vec::new();
        for (scalar, p) in terms {
            if scalar.is_zero() || p.is_zero() {
                continue;
            }
            let p0 = p.rebase(0);
            if p0.coeffs.len() > acc.len() {
                acc.resize(p0.coeffs.len(), BigInt::zero());
            }
            for (k, c) in p0.coeffs.iter().enumerate() {
                acc[k] += &scalar * c;
            }
        }
        Self::from_coeffs(0, acc)
    }
}

impl PartialEq for BinomialPolynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.shift == other.shift {
            return self.coeffs == other.coeffs;
        }
        self.canonical().coeffs == other.canonical().coeffs
    }
}

impl Eq for BinomialPolynomial {}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn coeffs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| big(c)).collect()
    }

    #[test]
    fn zero_evaluates_to_zero() {
        let z = BinomialPolynomial::zero();
        for n in [-20, -1, 0, 7, 40] {
            assert_eq!(z.evaluate(n), BigInt::zero());
        }
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn shifted_evaluation() {
        // 10 C(n-6,0) + 25 C(n-6,1) + 24 C(n-6,2) + 11 C(n-6,3) + 2 C(n-6,4)
        let p = BinomialPolynomial::from_coeffs(6, coeffs(&[10, 25, 24, 11, 2]));
        assert_eq!(p.evaluate(6), big(10));
        assert_eq!(p.evaluate(7), big(35));
        assert_eq!(p.evaluate(8), big(84));
        assert_eq!(p.evaluate(14), big(1638));
    }

    #[test]
    fn rebase_shift_six_to_five() {
        let p = BinomialPolynomial::from_coeffs(6, coeffs(&[10, 25, 24, 11, 2]));
        let q = p.rebase(5);
        assert_eq!(q.coeffs(), &coeffs(&[0, 10, 15, 9, 2])[..]);
        for n in -5..25 {
            assert_eq!(p.evaluate(n), q.evaluate(n));
        }
    }

    #[test]
    fn rebase_to_same_shift_is_identity() {
        let p = BinomialPolynomial::from_coeffs(3, coeffs(&[1, -4, 2]));
        let q = p.rebase(3);
        assert_eq!(p, q);
        assert_eq!(q.shift(), 3);
    }

    #[test]
    fn rebase_zero_is_zero() {
        let z = BinomialPolynomial::zero();
        assert!(z.rebase(17).is_zero());
        assert!(z.rebase(-4).is_zero());
    }

    #[test]
    fn linear_combination_cancels() {
        let p = BinomialPolynomial::from_coeffs(2, coeffs(&[5, 7, 1]));
        let sum =
            BinomialPolynomial::linear_combination([(big(1), &p), (big(-1), &p)]);
        assert!(sum.is_zero());
    }

    #[test]
    fn zero_scalar_contributes_nothing() {
        let p = BinomialPolynomial::from_coeffs(0, coeffs(&[3, 3]));
        let q = BinomialPolynomial::from_coeffs(1, coeffs(&[100]));
        let sum =
            BinomialPolynomial::linear_combination([(big(1), &p), (big(0), &q)]);
        assert_eq!(sum, p);
    }

    #[test]
    fn combination_builds_n_minus_two() {
        // 1 * C(n,1) - 2 * 1 = n - 2
        let lin = BinomialPolynomial::basis(0, 1);
        let one = BinomialPolynomial::constant(1);
        let p =
            BinomialPolynomial::linear_combination([(big(1), &lin), (big(-2), &one)]);
        assert_eq!(p.coeffs(), &coeffs(&[-2, 1])[..]);
        assert_eq!(p.evaluate(6), big(4));
        assert_eq!(p.evaluate(2), big(0));
    }

    #[test]
    fn equality_is_basis_independent() {
        let p = BinomialPolynomial::from_coeffs(6, coeffs(&[10, 25, 24, 11, 2]));
        let q = p.rebase(-3);
        assert_eq!(p, q);
        let r = BinomialPolynomial::from_coeffs(6, coeffs(&[10, 25, 24, 11, 3]));
        assert_ne!(p, r);
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let p = BinomialPolynomial::from_coeffs(0, coeffs(&[1, 2, 0, 0]));
        assert_eq!(p.degree(), Some(1));
        let z = BinomialPolynomial::from_coeffs(4, coeffs(&[0, 0]));
        assert!(z.is_zero());
    }
}
