//! Explicit peak polynomials for the structured families, plus the
//! split-at-maximum recursion for sets containing both 2 and n-1.
//!
//! Constant families come back as [`BinomialPolynomial`]s; the n-dependent
//! families are exact integer evaluators in `(m, n)`. The n-dependent
//! identities are stated for twice the polynomial value, so evenness is
//! asserted before halving — an arithmetic slip turns into a loud error
//! instead of a silently wrong count.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binomial::choose;
use crate::counting::{is_admissible, peak_polynomial};
use crate::error::{Error, Result};
use crate::peakset::PeakSet;
use crate::poly::BinomialPolynomial;

/// `p({m};n) = C(n-1, m-1) - 1` for `m >= 2`.
pub fn single_peak(m: usize) -> Result<BinomialPolynomial> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "{{{m}}} is not admissible (peaks start at position 2)"
        )));
    }
    Ok(BinomialPolynomial::linear_combination([
        (BigInt::from(1), &BinomialPolynomial::basis(1, m - 1)),
        (BigInt::from(-1), &BinomialPolynomial::constant(1)),
    ]))
}

/// `p({2,m};n) = (m-3) C(n-2, m-1) + (m-2) C(n-2, m-2) - C(n-2, 1)` for `m >= 4`.
pub fn pair_with_two(m: usize) -> Result<BinomialPolynomial> {
    if m < 4 {
        return Err(Error::InvalidParameter(format!(
            "{{2,{m}}} is not admissible (need m >= 4)"
        )));
    }
    let m_i = m as i64;
    Ok(BinomialPolynomial::linear_combination([
        (BigInt::from(m_i - 3), &BinomialPolynomial::basis(2, m - 1)),
        (BigInt::from(m_i - 2), &BinomialPolynomial::basis(2, m - 2)),
        (BigInt::from(-1), &BinomialPolynomial::basis(2, 1)),
    ]))
}

/// `p({2,m,m+2};n) = m(m-3) C(n, m+1) - 2(m-3) C(n-2, m-1)
///                 - 2(m-2) C(n-2, m-2) + 2 C(n-2, 1)` for `m >= 4`.
pub fn triple_with_two(m: usize) -> Result<BinomialPolynomial> {
    if m < 4 {
        return Err(Error::InvalidParameter(format!(
            "{{2,{m},{}}} is not admissible (need m >= 4)",
            m + 2
        )));
    }
    let m_i = m as i64;
    Ok(BinomialPolynomial::linear_combination([
        (BigInt::from(m_i * (m_i - 3)), &BinomialPolynomial::basis(0, m + 1)),
        (BigInt::from(-2 * (m_i - 3)), &BinomialPolynomial::basis(2, m - 1)),
        (BigInt::from(-2 * (m_i - 2)), &BinomialPolynomial::basis(2, m - 2)),
        (BigInt::from(2), &BinomialPolynomial::basis(2, 1)),
    ]))
}

/// `p({2,n-1};n) = (n-1)(n-4)` for `n >= 5`.
pub fn both_ends(n: usize) -> Result<BigInt> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "{{2,n-1}} needs n >= 5, got {n}"
        )));
    }
    let n = n as i64;
    Ok(BigInt::from((n - 1) * (n - 4)))
}

fn halve_even(twice: BigInt, context: &str) -> Result<BigInt> {
    if (&twice % 2i32).is_zero() {
        Ok(twice / 2)
    } else {
        Err(Error::ParityViolation(format!(
            "2p = {twice} is odd for {context}"
        )))
    }
}

/// `p({2,m,n-1};n)` for `4 <= m <= n-3`, by the displayed identity for twice
/// the value:
///
/// ```text
/// 2p = (m-3)(n-m-2) C(n-1,m-1)
///    + (n-1) [ (m-3) C(n-4,m-1) + (m-2) C(n-4,m-2)
///            + (n-m-1) C(n-4,m-3) + (n-m-2) C(n-4,m-4) - 2 C(n-4,1) ]
/// ```
pub fn ends_with_middle(m: usize, n: usize) -> Result<BigInt> {
    if m < 4 || m + 3 > n {
        return Err(Error::InvalidParameter(format!(
            "{{2,m,n-1}} needs 4 <= m <= n-3, got m = {m}, n = {n}"
        )));
    }
    let (m, n) = (m as i64, n as i64);
    let bracket = (m - 3) * choose(n - 4, m - 1)
        + (m - 2) * choose(n - 4, m - 2)
        + (n - m - 1) * choose(n - 4, m - 3)
        + (n - m - 2) * choose(n - 4, m - 4)
        - 2 * choose(n - 4, 1);
    let twice = (m - 3) * (n - m - 2) * choose(n - 1, m - 1) + (n - 1) * bracket;
    halve_even(twice, &format!("{{2,{m},{}}} at n = {n}", n - 1))
}

/// `p({2,m,m+2,n-1};n)` for `4 <= m`, `m+2 <= n-3`:
///
/// ```text
/// 2p = (m-3)(n-m-4) [ m C(n-1,m+1) + (n-m-1) C(n-1,m-1) ]
///    + (n-1) [ m(m-3) C(n-2,m+1) + (n-m-1)(n-m-4) C(n-2,m-2)
///            - 2(n-6) C(n-4,m-1) - 2(n-6) C(n-4,m-2) + 4 C(n-4,1) ]
/// ```
pub fn ends_with_middle_pair(m: usize, n: usize) -> Result<BigInt> {
    if m < 4 || m + 5 > n {
        return Err(Error::InvalidParameter(format!(
            "{{2,m,m+2,n-1}} needs 4 <= m and m+2 <= n-3, got m = {m}, n = {n}"
        )));
    }
    let (m, n) = (m as i64, n as i64);
    let head =
        (m - 3) * (n - m - 4) * (m * choose(n - 1, m + 1) + (n - m - 1) * choose(n - 1, m - 1));
    let bracket = m * (m - 3) * choose(n - 2, m + 1)
        + (n - m - 1) * (n - m - 4) * choose(n - 2, m - 2)
        - 2 * (n - 6) * choose(n - 4, m - 1)
        - 2 * (n - 6) * choose(n - 4, m - 2)
        + 4 * choose(n - 4, 1);
    let twice = head + (n - 1) * bracket;
    halve_even(twice, &format!("{{2,{m},{},n-1}} at n = {n}", m + 2))
}

/// `p(S;n)` for admissible `S` containing both 2 and n-1, by placing n at each
/// peak in turn:
///
/// ```text
/// 2 p(S;n) = sum_j p(S_L; i_j - 1) p(S_R^r; n - i_j) C(n-1, i_j - 1)
/// ```
///
/// where `S_L` is the part of `S` below `i_j` and `S_R^r = n + 1 - (S above i_j)`.
/// The endpoint hypothesis guarantees n never sits at position 1 or n.
pub fn split_at_max(s: &PeakSet, n: usize) -> Result<BigInt> {
    if n < 3 || !s.contains(2) || !s.contains(n - 1) {
        return Err(Error::InvalidParameter(format!(
            "split recursion needs 2 and n-1 = {} in S = {s}",
            n.saturating_sub(1)
        )));
    }
    if s.max_position() != Some(n - 1) {
        return Err(Error::InvalidParameter(format!(
            "S = {s} is not inside [2, n-1] for n = {n}"
        )));
    }
    if !is_admissible(s) {
        return Err(Error::InvalidParameter(format!("S = {s} is not admissible")));
    }
    let positions = s.positions();
    let mut twice = BigInt::zero();
    for (j, &i) in positions.iter().enumerate() {
        let left = PeakSet::new(positions[..j].to_vec()).expect("sorted");
        let right_reversed = PeakSet::new(
            positions[j + 1..].iter().rev().map(|&p| n + 1 - p).collect(),
        )
        .expect("reversal of a sorted tail is sorted");
        let left_value = peak_polynomial(&left).evaluate(i as i64 - 1);
        let right_value = peak_polynomial(&right_reversed).evaluate((n - i) as i64);
        twice += left_value * right_value * choose(n as i64 - 1, i as i64 - 1);
    }
    halve_even(twice, &format!("split recursion on {s} at n = {n}"))
}
