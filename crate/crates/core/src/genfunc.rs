//! Rational generating functions and linear recurrences for `#P(S;n)`.
//!
//! For nonempty admissible `S` with `m = max S`, the series
//! `sum_n #P(S;n) x^n` equals `r(x) / (1-2x)^m` where `r` is a polynomial
//! supported on exponents `m+1 ..= 2m-1`. Equivalently the counts satisfy
//! `sum_{j=0}^{m} (-2)^j C(m,j) #P(S;n-j) = 0` for `n >= 2m`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binomial::choose;
use crate::counting::{count_permutations, is_admissible};
use crate::error::{Error, Result};
use crate::peakset::PeakSet;

/// A rational function with numerator supported on finitely many exponents
/// and denominator `(1-2x)^denom_exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGf {
    numerator: BTreeMap<usize, BigInt>,
    denom_exponent: usize,
}

impl RationalGf {
    pub fn new(numerator: BTreeMap<usize, BigInt>, denom_exponent: usize) -> Self {
        let numerator = numerator.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        RationalGf { numerator, denom_exponent }
    }

    /// Nonzero numerator coefficients, keyed by exponent.
    pub fn numerator(&self) -> &BTreeMap<usize, BigInt> {
        &self.numerator
    }

    pub fn denom_exponent(&self) -> usize {
        self.denom_exponent
    }
}

/// The generating function of `#P(S;n)` for nonempty admissible `S`:
/// numerator coefficients are assembled from the exact counts via
/// `[x^k] r = sum_{j=0}^{k-m-1} (-2)^j C(m,j) #P(S;k-j)`, `m+1 <= k <= 2m-1`.
pub fn generating_function(s: &PeakSet) -> Result<RationalGf> {
    let Some(m) = s.max_position() else {
        return Err(Error::InvalidParameter(
            "the empty peak set has the trivial series x/(1-2x); the numerator \
             formula needs a nonempty admissible set"
                .into(),
        ));
    };
    if !is_admissible(s) {
        return Err(Error::InvalidParameter(format!("{s} is not admissible")));
    }
    let mut numerator = BTreeMap::new();
    for k in m + 1..=2 * m - 1 {
        let mut coeff = BigInt::zero();
        for j in 0..=k - m - 1 {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            coeff += sign
                * (BigInt::from(1) << j)
                * choose(m as i64, j as i64)
                * count_permutations(s, k - j);
        }
        if !coeff.is_zero() {
            numerator.insert(k, coeff);
        }
    }
    Ok(RationalGf { numerator, denom_exponent: m })
}

/// Taylor coefficients of `x^1 ..= x^n_max`, computed through the linear
/// recurrence the denominator encodes — `O(n_max * m)` integer operations,
/// no division.
pub fn series_expand(gf: &RationalGf, n_max: usize) -> Vec<BigInt> {
    let m = gf.denom_exponent;
    let mut series: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    series.push(BigInt::zero()); // x^0
    for n in 1..=n_max {
        let mut a = gf.numerator.get(&n).cloned().unwrap_or_default();
        for j in 1..=m.min(n - 1) {
            // a_n = num_n - sum_{j>=1} (-2)^j C(m,j) a_{n-j}
            let sign = if j % 2 == 0 { -1 } else { 1 };
            a += sign * (BigInt::from(1) << j) * choose(m as i64, j as i64) * &series[n - j];
        }
        series.push(a);
    }
    series.remove(0);
    series
}

/// The recurrence written in solved form `#P(S;n) = sum_j c_j #P(S;n-j)`:
/// `c_j = -(-2)^j C(m, j)` for `j = 1 ..= m`.
pub fn recurrence_coefficients(m: usize) -> Vec<BigInt> {
    (1..=m)
        .map(|j| {
            let sign = if j % 2 == 0 { -1 } else { 1 };
            sign * (BigInt::from(1) << j) * choose(m as i64, j as i64)
        })
        .collect()
}

/// Checks the recurrence against a precomputed count table, where
/// `counts[i] = #P(S; i+1)`. True iff it holds exactly for every
/// `n` in `[2m, counts.len()]`.
pub fn recurrence_holds_for(counts: &[BigInt], m: usize) -> bool {
    for n in 2 * m..=counts.len() {
        let mut acc = BigInt::zero();
        for j in 0..=m {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            acc += sign
                * (BigInt::from(1) << j)
                * choose(m as i64, j as i64)
                * &counts[n - j - 1];
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// Verifies the `m+1`-term recurrence on the exact counts for every
/// `n` in `[2m, n_max]`.
pub fn recurrence_check(s: &PeakSet, n_max: usize) -> Result<bool> {
    let Some(m) = s.max_position() else {
        return Err(Error::InvalidParameter("need a nonempty admissible set".into()));
    };
    if !is_admissible(s) {
        return Err(Error::InvalidParameter(format!("{s} is not admissible")));
    }
    let counts: Vec<BigInt> = (1..=n_max).map(|n| count_permutations(s, n)).collect();
    Ok(recurrence_holds_for(&counts, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> PeakSet {
        PeakSet::new(v.to_vec()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn gf_for_2_5() {
        let gf = generating_function(&set(&[2, 5])).unwrap();
        assert_eq!(gf.denom_exponent(), 5);
        let expected: BTreeMap<usize, BigInt> =
            [(6, big(80)), (7, big(-240)), (8, big(288)), (9, big(-128))]
                .into_iter()
                .collect();
        assert_eq!(gf.numerator(), &expected);
    }

    #[test]
    fn gf_numerator_matches_factored_form() {
        // 16 x^6 (1 - x)(5 - 10x + 8x^2), expanded.
        let gf = generating_function(&set(&[2, 5])).unwrap();
        let a = [big(1), big(-1)];
        let b = [big(5), big(-10), big(8)];
        let mut product = vec![BigInt::zero(); 4];
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                product[i + j] += ai * bj;
            }
        }
        for (offset, c) in product.iter().enumerate() {
            let got = gf.numerator().get(&(6 + offset)).cloned().unwrap_or_default();
            assert_eq!(got, c * 16);
        }
    }

    #[test]
    fn gf_for_single_peak_at_two() {
        let gf = generating_function(&set(&[2])).unwrap();
        assert_eq!(gf.denom_exponent(), 2);
        let expected: BTreeMap<usize, BigInt> = [(3, big(2))].into_iter().collect();
        assert_eq!(gf.numerator(), &expected);
    }

    #[test]
    fn gf_rejects_empty_and_inadmissible() {
        assert!(generating_function(&PeakSet::empty()).is_err());
        assert!(generating_function(&set(&[2, 3])).is_err());
    }

    #[test]
    fn numerator_exponents_stay_in_band() {
        for s in crate::counting::admissible_sets_up_to(9) {
            let m = s.max_position().unwrap();
            let gf = generating_function(&s).unwrap();
            for &k in gf.numerator().keys() {
                assert!(k > m && k < 2 * m, "S = {s}, exponent {k}");
            }
        }
    }

    #[test]
    fn series_matches_counts_for_every_set_to_nine() {
        for s in crate::counting::admissible_sets_up_to(9) {
            let gf = generating_function(&s).unwrap();
            let series = series_expand(&gf, 25);
            for n in 1..=25 {
                assert_eq!(series[n - 1], count_permutations(&s, n), "S = {s}, n = {n}");
            }
            assert!(recurrence_check(&s, 30).unwrap(), "recurrence fails for {s}");
        }
    }

    #[test]
    fn low_coefficients_vanish() {
        let gf = generating_function(&set(&[3, 6])).unwrap();
        let series = series_expand(&gf, 12);
        for n in 1..=6 {
            assert!(series[n - 1].is_zero(), "x^{n} coefficient should vanish");
        }
    }

    #[test]
    fn geometric_series_for_empty_set() {
        // x/(1-2x) expands to 2^(n-1).
        let gf = RationalGf::new([(1, big(1))].into_iter().collect(), 1);
        let series = series_expand(&gf, 10);
        for n in 1..=10usize {
            assert_eq!(series[n - 1], BigInt::from(1) << (n - 1));
        }
    }

    #[test]
    fn recurrence_for_2_5() {
        assert_eq!(
            recurrence_coefficients(5),
            vec![big(10), big(-40), big(80), big(-80), big(32)]
        );
        assert!(recurrence_check(&set(&[2, 5]), 30).unwrap());
    }

    #[test]
    fn recurrence_for_single_peak() {
        // #P(n) = 4 #P(n-1) - 4 #P(n-2) for n >= 4.
        assert_eq!(recurrence_coefficients(2), vec![big(4), big(-4)]);
        assert!(recurrence_check(&set(&[2]), 20).unwrap());
    }

    #[test]
    fn perturbed_counts_fail_the_recurrence() {
        let s = set(&[2, 5]);
        let m = 5;
        let counts: Vec<BigInt> = (1..=20).map(|n| count_permutations(&s, n)).collect();
        assert!(recurrence_holds_for(&counts, m));
        // The window [2m, n_max] reads counts from n = m on; a bump at any
        // participating value must trip the check.
        for i in m - 1..counts.len() {
            let mut bad = counts.clone();
            bad[i] += 1;
            assert!(!recurrence_holds_for(&bad, m), "undetected bump at index {i}");
        }
    }
}
