//! Property suites over randomized inputs, 1000 cases each.

use proptest::prelude::*;

use peaks::binomial::{binomial, factorial};
use peaks::counting::{count_permutations, fit_polynomial, peak_polynomial};
use peaks::oracle::{self, peak_set_of, Permutation};
use peaks::poly::BinomialPolynomial;
use peaks::{BigInt, Composition, PeakSet};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn shuffled_identity(n: usize, seed: u64) -> Permutation {
    let mut entries: Vec<usize> = (1..=n).collect();
    let mut state = seed | 1;
    for i in (1..n).rev() {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let j = (state >> 33) as usize % (i + 1);
        entries.swap(i, j);
    }
    Permutation::new(entries).expect("shuffle preserves the multiset")
}

fn subset_of(range: std::ops::RangeInclusive<usize>, mask: u32) -> Vec<usize> {
    let lo = *range.start();
    range.filter(|&p| mask & (1 << (p - lo)) != 0).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn pascal_recursion(t in -50i64..=50, k in 1u64..=25) {
        prop_assert_eq!(binomial(t, k), binomial(t - 1, k - 1) + binomial(t - 1, k));
    }

    #[test]
    fn rebase_preserves_evaluation(
        coeffs in prop::collection::vec(-100i64..=100, 0..=11),
        a in -10i64..=10,
        b in -10i64..=10,
    ) {
        let p = BinomialPolynomial::from_coeffs(a, coeffs.iter().map(|&c| big(c)).collect());
        let q = p.rebase(b);
        for n in -20..=40 {
            prop_assert_eq!(p.evaluate(n), q.evaluate(n));
        }
        prop_assert_eq!(p.rebase(b).rebase(a), p);
    }

    #[test]
    fn fit_recovers_sampled_polynomials(
        coeffs in prop::collection::vec(-50i64..=50, 1..=9),
        n0 in -5i64..=5,
        shift in -6i64..=6,
    ) {
        let p = BinomialPolynomial::from_coeffs(shift, coeffs.iter().map(|&c| big(c)).collect());
        let degree = p.degree().map_or(0, |d| d);
        let samples = degree + 3;
        let values: Vec<BigInt> = (0..samples as i64).map(|i| p.evaluate(n0 + i)).collect();
        let fitted = fit_polynomial(&values, n0, shift).unwrap();
        prop_assert_eq!(fitted, p);
    }

    #[test]
    fn composition_round_trip(n in 2usize..=12, mask in 0u32..1024) {
        let positions = subset_of(2..=n - 1, mask & ((1 << (n - 2)) - 1));
        let s = PeakSet::new(positions).unwrap();
        let k = Composition::from_peak_set(&s, n).unwrap();
        let (s2, n2) = k.to_peak_set();
        prop_assert_eq!(s2, s);
        prop_assert_eq!(n2, n);
        prop_assert_eq!(k.total(), n + 1);
    }

    #[test]
    fn reversal_symmetry_of_counts(mask in 0u32..256, extra in 0usize..=11) {
        let positions = subset_of(2..=9, mask);
        let s = PeakSet::new(positions).unwrap();
        let lo = s.max_position().unwrap_or(1);
        let n = (lo + extra).min(12);
        let r = s.reversal(n).unwrap();
        prop_assert_eq!(count_permutations(&s, n), count_permutations(&r, n));
    }

    #[test]
    fn peak_polynomial_vanishes_at_its_maximum(mask in 1u32..1024) {
        let positions = subset_of(2..=11, mask);
        let s = PeakSet::new(positions).unwrap();
        if peaks::counting::is_admissible(&s) {
            let m = s.max_position().unwrap();
            prop_assert_eq!(peak_polynomial(&s).evaluate(m as i64), big(0));
        } else {
            prop_assert!(peak_polynomial(&s).is_zero());
        }
    }

    #[test]
    fn reversal_maps_peak_sets(n in 2usize..=11, seed in any::<u64>()) {
        let pi = shuffled_identity(n, seed);
        let expected = peak_set_of(&pi).reversal(n).unwrap();
        prop_assert_eq!(peak_set_of(&pi.reversal()), expected);
    }
}

#[test]
fn composition_bijection_exhaustive_to_12() {
    for n in 2usize..=12 {
        for mask in 0u32..(1 << (n - 2)) {
            let positions = subset_of(2..=n - 1, mask);
            let s = PeakSet::new(positions).unwrap();
            let (s2, n2) = Composition::from_peak_set(&s, n).unwrap().to_peak_set();
            assert_eq!((s2, n2), (s, n));
        }
    }
}

#[test]
fn distribution_at_10_partitions_and_divides() {
    let table = oracle::brute_distribution(10).unwrap();
    assert_eq!(table.total(), factorial(10));
    for (s, count) in table.iter() {
        let exponent = (10 - s.len() - 1) as u64;
        assert!(
            count.trailing_zeros().unwrap_or(0) >= exponent,
            "count for {s} not divisible by 2^{exponent}"
        );
        assert_eq!(count, &count_permutations(s, 10), "recursion mismatch at {s}");
    }
    assert_eq!(
        oracle::enumeration_count(10, oracle::DEFAULT_MAX_N).unwrap(),
        factorial(10)
    );
}
