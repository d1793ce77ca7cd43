//! The main counting machinery: admissibility, the peak-polynomial recursion,
//! exact counts `#P(S;n)`, and finite-difference fitting.
//!
//! For an admissible set `S` with `m = max S` the count factors as
//! `#P(S;n) = p(S;n) * 2^(n-#S-1)` for all `n > m`, where `p(S;n)` is an
//! integer-valued polynomial of degree `m - 1`. The recursion
//!
//! ```text
//! p(S;n) = p(S1; m-1) * C(n, m-1) - 2 p(S1; n) - p(S2; n)
//! ```
//!
//! with `S1 = S \ {m}` and `S2 = S1 ∪ {m-1}` computes it exactly; the base
//! case is `p(∅;n) = 1`, and non-admissible sets get the zero polynomial.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::peakset::{PeakSet, SymbolicPeakSet};
use crate::poly::BinomialPolynomial;

/// True iff `S` is n-admissible for some (equivalently, every sufficiently
/// large) n: minimum at least 2 and consecutive elements at least 2 apart.
/// Peaks can sit neither at position 1 nor at adjacent positions.
pub fn is_admissible(s: &PeakSet) -> bool {
    s.min_position().is_none_or(|m| m >= 2)
        && s.positions().windows(2).all(|w| w[1] - w[0] >= 2)
}

/// The smallest n for which `S` is n-admissible: `max S + 1` (1 for the empty
/// set). Only meaningful when [`is_admissible`] holds.
pub fn min_n(s: &PeakSet) -> usize {
    s.max_position().map_or(1, |m| m + 1)
}

static PEAK_POLY_MEMO: LazyLock<Mutex<HashMap<PeakSet, BinomialPolynomial>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The peak polynomial `p(S;n)` in canonical `B_0` form, memoized over `S`.
/// Non-admissible sets yield the zero polynomial.
pub fn peak_polynomial(s: &PeakSet) -> BinomialPolynomial {
    if let Some(p) = PEAK_POLY_MEMO.lock().unwrap().get(s) {
        return p.clone();
    }
    // Compute outside the lock: the recursion re-enters this function.
    let p = compute_peak_polynomial(s);
    PEAK_POLY_MEMO
        .lock()
        .unwrap()
        .entry(s.clone())
        .or_insert(p)
        .clone()
}

fn compute_peak_polynomial(s: &PeakSet) -> BinomialPolynomial {
    if !is_admissible(s) {
        return BinomialPolynomial::zero();
    }
    let Some(m) = s.max_position() else {
        return BinomialPolynomial::constant(1);
    };
    let s1 = s.without_max();
    let s2 = s1.with_appended(m - 1); // gaps >= 2, so m-1 exceeds max(S1)
    let p1 = peak_polynomial(&s1);
    let p2 = peak_polynomial(&s2);
    let p1_at_max = p1.evaluate(m as i64 - 1);
    BinomialPolynomial::linear_combination([
        (p1_at_max, &BinomialPolynomial::basis(0, m - 1)),
        (BigInt::from(-2), &p1),
        (BigInt::from(-1), &p2),
    ])
}

/// Exact `#P(S;n)`. Returns 0 for `n <= max S` (the polynomial may be nonzero
/// below its admissibility threshold, so it is never consulted there); the
/// power of two is assembled by shifting.
pub fn count_permutations(s: &PeakSet, n: usize) -> BigInt {
    assert!(n >= 1, "counts are defined for n >= 1");
    if s.is_empty() {
        return BigInt::from(1) << (n - 1);
    }
    if n <= s.max_position().expect("nonempty") {
        return BigInt::zero();
    }
    let p = peak_polynomial(s).evaluate(n as i64);
    if p.is_zero() {
        return BigInt::zero();
    }
    // n > max S >= 2 #S for admissible S, so the exponent is positive.
    p << (n - s.len() - 1)
}

/// Successive forward-difference rows of `values`, stopping after the first
/// all-zero row (inclusive) or when a single unresolved entry remains.
pub fn difference_triangle(values: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut rows = vec![values.to_vec()];
    loop {
        let last = rows.last().expect("at least one row");
        if last.iter().all(|v| v.is_zero()) || last.len() <= 1 {
            break;
        }
        let next: Vec<BigInt> = last.windows(2).map(|w| &w[1] - &w[0]).collect();
        rows.push(next);
    }
    rows
}

/// Newton forward-difference fit: interprets `values` as evaluations at the
/// consecutive integers `n0, n0+1, ...` and returns the unique interpolating
/// polynomial, rebased to `shift`. Fails unless the sample is long enough for
/// the first vanishing difference row to actually appear (length >= deg + 2).
pub fn fit_polynomial(values: &[BigInt], n0: i64, shift: i64) -> Result<BinomialPolynomial> {
    if values.is_empty() {
        return Err(Error::FitFailed("no values supplied".into()));
    }
    let rows = difference_triangle(values);
    let last = rows.last().expect("nonempty");
    if !last.iter().all(|v| v.is_zero()) {
        return Err(Error::FitFailed(format!(
            "differences did not vanish within {} values; the sequence is not \
             polynomial of degree <= {} on this window",
            values.len(),
            values.len() as i64 - 2,
        )));
    }
    let coeffs: Vec<BigInt> = rows.iter().map(|row| row[0].clone()).collect();
    Ok(BinomialPolynomial::from_coeffs(n0, coeffs).rebase(shift))
}

/// Report from fitting an n-dependent peak set.
#[derive(Debug, Clone)]
pub struct SymbolicFit {
    /// Fitted `p(S;n)` in canonical `B_0` form.
    pub polynomial: BinomialPolynomial,
    /// First n the fit sampled (smallest n with `S` n-admissible).
    pub n_start: usize,
    pub fitted_degree: Option<usize>,
    /// Degree predicted by the case analysis on (s, t).
    pub expected_degree: usize,
}

impl SymbolicFit {
    pub fn degree_matches(&self) -> bool {
        self.fitted_degree == Some(self.expected_degree)
            || (self.fitted_degree.is_none() && self.expected_degree == 0)
    }
}

/// Predicted degree of `p(S;n)` for `S = {i_1..i_s, n-j_t..n-j_1}`:
/// 0 if both parts are empty, `i_s - 1` if only constants, `j_t` if only
/// offsets, `i_s + j_t - 1` otherwise.
pub fn symbolic_degree(s: &SymbolicPeakSet) -> usize {
    let is_max = s.low().last().copied();
    let jt_max = s.high_offsets().first().copied();
    match (is_max, jt_max) {
        (None, None) => 0,
        (Some(i), None) => i - 1,
        (None, Some(j)) => j,
        (Some(i), Some(j)) => i + j - 1,
    }
}

/// Smallest n for which the instantiated set is n-admissible, or an error if
/// it never is (adjacent constants or adjacent offsets).
fn symbolic_min_n(s: &SymbolicPeakSet) -> Result<usize> {
    let low = PeakSet::new(s.low().to_vec()).expect("validated at construction");
    if !is_admissible(&low) {
        return Err(Error::InvalidParameter(format!(
            "{s} is never admissible: constant part has adjacent peaks"
        )));
    }
    if !s.high_offsets().windows(2).all(|w| w[0] - w[1] >= 2) {
        return Err(Error::InvalidParameter(format!(
            "{s} is never admissible: offset part has adjacent peaks"
        )));
    }
    let mut n0 = 1;
    if let Some(&jt) = s.high_offsets().first() {
        n0 = n0.max(jt + 2); // position n - j_t must be at least 2
        if let Some(&is) = s.low().last() {
            n0 = n0.max(is + jt + 2); // gap of 2 between the two halves
        }
    } else if let Some(&is) = s.low().last() {
        n0 = n0.max(is + 1);
    }
    Ok(n0)
}

/// Instantiates `S` at enough consecutive n, strips the `2^(n-#S-1)` factor
/// from the exact counts, fits the quotients, and reports the degree check.
pub fn fit_symbolic(s: &SymbolicPeakSet) -> Result<SymbolicFit> {
    let n_start = symbolic_min_n(s)?;
    let expected_degree = symbolic_degree(s);
    let samples = expected_degree + 3;
    let size = s.size();
    let mut values = Vec::with_capacity(samples);
    for n in n_start..n_start + samples {
        let instance = s.instantiate(n)?;
        let count = count_permutations(&instance, n);
        let exponent = (n - size - 1) as u64;
        if count.is_zero() {
            return Err(Error::FitFailed(format!(
                "{s} instantiated at n = {n} has no permutations; the sample \
                 window starts too early"
            )));
        }
        if count.trailing_zeros().unwrap_or(0) < exponent {
            return Err(Error::FitFailed(format!(
                "count at n = {n} is not divisible by 2^{exponent}"
            )));
        }
        values.push(count >> exponent);
    }
    let polynomial = fit_polynomial(&values, n_start as i64, 0)?;
    let fitted_degree = polynomial.degree();
    Ok(SymbolicFit { polynomial, n_start, fitted_degree, expected_degree })
}

/// All nonempty admissible sets contained in `[2, max_element]`, in
/// lexicographic order.
pub fn admissible_sets_up_to(max_element: usize) -> Vec<PeakSet> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn walk(
        start: usize,
        limit: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<PeakSet>,
    ) {
        for p in start..=limit {
            current.push(p);
            out.push(PeakSet::new(current.clone()).expect("sorted"));
            if p + 2 <= limit {
                walk(p + 2, limit, current, out);
            }
            current.pop();
        }
    }
    if max_element >= 2 {
        walk(2, max_element, &mut current, &mut out);
    }
    out
}

/// All admissible sets of exactly `size` elements contained in `[2, n-1]`,
/// in lexicographic order. `size = 0` yields just the empty set.
pub fn admissible_sets_with_size(n: usize, size: usize) -> Vec<PeakSet> {
    if size == 0 {
        return vec![PeakSet::empty()];
    }
    let mut out = Vec::new();
    let limit = match n.checked_sub(1) {
        Some(l) => l,
        None => return out,
    };
    let mut current = Vec::new();
    fn walk(
        start: usize,
        limit: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<PeakSet>,
    ) {
        // Remaining elements need 2(remaining - 1) extra room.
        if remaining == 0 {
            out.push(PeakSet::new(current.clone()).expect("sorted"));
            return;
        }
        let highest_start = match limit.checked_sub(2 * (remaining - 1)) {
            Some(h) => h,
            None => return,
        };
        for p in start..=highest_start {
            current.push(p);
            walk(p + 2, limit, remaining - 1, current, out);
            current.pop();
        }
    }
    walk(2, limit, size, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn set(v: &[usize]) -> PeakSet {
        PeakSet::new(v.to_vec()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bigs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| big(c)).collect()
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(&set(&[2, 5])));
        assert_eq!(min_n(&set(&[2, 5])), 6);
        assert!(!is_admissible(&set(&[2, 3])));
        assert!(!is_admissible(&set(&[1])));
        assert!(!is_admissible(&set(&[3, 4])));
        assert!(is_admissible(&PeakSet::empty()));
        assert_eq!(min_n(&PeakSet::empty()), 1);
    }

    #[test]
    fn admissibility_agrees_with_enumeration() {
        // Over every subset of [2,8]: admissible iff the class at n = max+1
        // is nonempty.
        let elements: Vec<usize> = (2..=8).collect();
        for mask in 1u32..(1 << elements.len()) {
            let positions: Vec<usize> = elements
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect();
            let s = set(&positions);
            let n = s.max_position().unwrap() + 1;
            let brute = oracle::brute_count(&s, n).unwrap();
            assert_eq!(is_admissible(&s), !brute.is_zero(), "S = {s}");
        }
    }

    #[test]
    fn polynomial_for_single_peak_at_two() {
        let p = peak_polynomial(&set(&[2]));
        assert_eq!(p.coeffs(), &bigs(&[-2, 1])[..]); // n - 2 in B_0
    }

    #[test]
    fn polynomial_for_2_5_matches_worked_example() {
        let p = peak_polynomial(&set(&[2, 5])).rebase(6);
        assert_eq!(p.coeffs(), &bigs(&[10, 25, 24, 11, 2])[..]);
        // Factored form n(n-5)(n-2)(n-1)/12.
        for n in 0..30i64 {
            let product = big(n) * big(n - 5) * big(n - 2) * big(n - 1);
            assert_eq!(p.evaluate(n) * 12, product);
        }
    }

    #[test]
    fn non_admissible_sets_get_zero_polynomial() {
        assert!(peak_polynomial(&set(&[3, 4])).is_zero());
        assert!(peak_polynomial(&set(&[1])).is_zero());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_permutations(&set(&[2, 5]), 8), big(2688));
        assert_eq!(count_permutations(&set(&[3]), 5), big(40));
        assert_eq!(count_permutations(&set(&[2, 5]), 5), big(0));
        assert_eq!(count_permutations(&PeakSet::empty(), 5), big(16));
        assert_eq!(count_permutations(&set(&[2, 5]), 10), big(38400));
    }

    #[test]
    fn counts_match_enumeration_for_all_subsets_of_2_to_8() {
        let elements: Vec<usize> = (2..=8).collect();
        for n in 1..=9 {
            let table = oracle::brute_distribution(n).unwrap();
            for mask in 0u32..(1 << elements.len()) {
                let positions: Vec<usize> = elements
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &p)| p)
                    .collect();
                let s = set(&positions);
                assert_eq!(
                    count_permutations(&s, n),
                    table.get(&s),
                    "S = {s}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn degree_and_leading_coefficient() {
        for s in admissible_sets_up_to(11) {
            let p = peak_polynomial(&s);
            assert_eq!(p.degree(), Some(s.max_position().unwrap() - 1), "S = {s}");
            assert!(p.leading_coefficient().unwrap() > &big(0), "S = {s}");
            assert_eq!(p.evaluate(s.max_position().unwrap() as i64), big(0), "p(S; max S) != 0");
        }
    }

    #[test]
    fn triangle_and_fit_reproduce_shift_six_coefficients() {
        let values = bigs(&[10, 35, 84, 168, 300, 495]);
        let p = fit_polynomial(&values, 6, 6).unwrap();
        assert_eq!(p.coeffs(), &bigs(&[10, 25, 24, 11, 2])[..]);
        assert_eq!(p.shift(), 6);
    }

    #[test]
    fn fit_constant_sequence() {
        let p = fit_polynomial(&bigs(&[7, 7, 7]), 0, 0).unwrap();
        assert_eq!(p.degree(), Some(0));
        assert_eq!(p.evaluate(100), big(7));
    }

    #[test]
    fn fit_triangular_numbers() {
        let p = fit_polynomial(&bigs(&[0, 1, 3, 6, 10]), 0, 0).unwrap();
        assert_eq!(p.coeffs(), &bigs(&[0, 1, 1])[..]);
    }

    #[test]
    fn fit_rejects_non_polynomial_window() {
        // 2^n is not a polynomial; differences never vanish.
        let err = fit_polynomial(&bigs(&[1, 2, 4, 8, 16, 32]), 0, 0).unwrap_err();
        assert!(matches!(err, Error::FitFailed(_)));
        // Degree 2 data but only 3 points: nothing left to verify with.
        let err = fit_polynomial(&bigs(&[0, 1, 4]), 0, 0).unwrap_err();
        assert!(matches!(err, Error::FitFailed(_)));
    }

    #[test]
    fn fit_zero_sequence() {
        let p = fit_polynomial(&bigs(&[0, 0, 0]), 5, 0).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn symbolic_fit_two_and_n_minus_one() {
        let s = SymbolicPeakSet::new(vec![2], vec![1]).unwrap();
        let fit = fit_symbolic(&s).unwrap();
        assert_eq!(fit.expected_degree, 2);
        assert_eq!(fit.fitted_degree, Some(2));
        assert!(fit.degree_matches());
        // (n-1)(n-4) at a few points
        for n in 5..20i64 {
            assert_eq!(fit.polynomial.evaluate(n), big((n - 1) * (n - 4)));
        }
    }

    #[test]
    fn symbolic_fit_empty_set() {
        let s = SymbolicPeakSet::new(vec![], vec![]).unwrap();
        let fit = fit_symbolic(&s).unwrap();
        assert_eq!(fit.expected_degree, 0);
        assert_eq!(fit.polynomial.evaluate(9), big(1));
        assert!(fit.degree_matches());
    }

    #[test]
    fn symbolic_fit_high_only() {
        let s = SymbolicPeakSet::new(vec![], vec![1]).unwrap();
        let fit = fit_symbolic(&s).unwrap();
        assert_eq!(fit.expected_degree, 1);
        assert!(fit.degree_matches());
        // {n-1} is the reversal image of {2}: p = n - 2.
        for n in 3..15i64 {
            assert_eq!(fit.polynomial.evaluate(n), big(n - 2));
        }
    }

    #[test]
    fn symbolic_fit_rejects_never_admissible() {
        let s = SymbolicPeakSet::new(vec![2, 3], vec![]).unwrap();
        assert!(fit_symbolic(&s).is_err());
        let s = SymbolicPeakSet::new(vec![], vec![2, 1]).unwrap();
        assert!(fit_symbolic(&s).is_err());
    }

    #[test]
    fn admissible_set_generators() {
        let sets = admissible_sets_up_to(5);
        let listed: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
        assert_eq!(listed, ["{2}", "{2,4}", "{2,5}", "{3}", "{3,5}", "{4}", "{5}"]);

        assert_eq!(admissible_sets_with_size(4, 1).len(), 2); // {2}, {3}
        assert!(admissible_sets_with_size(4, 2).is_empty());
        assert_eq!(admissible_sets_with_size(9, 0), vec![PeakSet::empty()]);
        // Fibonacci-flavored growth: sizes over [2, n-1] sum correctly.
        let total: usize = (0..=6).map(|s| admissible_sets_with_size(13, s).len()).sum();
        assert_eq!(total, 1 + admissible_sets_up_to(12).len());
    }
}
