//! Brute-force ground truth: exhaustive enumeration of the symmetric group.
//!
//! Everything here is slow on purpose — it is the independent check against
//! which every formula and recursion in the crate is validated. Enumeration
//! uses the iterative lexicographic successor, split across workers by the
//! first entry, so results are deterministic regardless of thread count.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::binomial::factorial;
use crate::error::{Error, Result};
use crate::peakset::PeakSet;

/// Default refusal threshold for full enumeration. `11! ~ 4.0e7` permutations
/// take seconds; `12!` is allowed only by passing an explicit cap.
pub const DEFAULT_MAX_N: usize = 11;

/// Positions are packed into a `u32` bitmask during enumeration.
const MASK_MAX_N: usize = 31;

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    /// Validates that `entries` is a rearrangement of `1..=n`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &a in &entries {
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidParameter(format!(
                    "{entries:?} is not a permutation of 1..={n}"
                )));
            }
            seen[a] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The reversal `a_n ... a_1`.
    pub fn reversal(&self) -> Permutation {
        let mut entries = self.entries.clone();
        entries.reverse();
        Permutation { entries }
    }
}

impl std::fmt::Display for Permutation {
    /// One-line word form: `1324` for n <= 9, comma-separated above that.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.entries.len() <= 9 {
            for a in &self.entries {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let words: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", words.join(","))
        }
    }
}

/// Advances `a` to its lexicographic successor in place; returns `false` when
/// `a` was already the last arrangement.
pub fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn peak_mask<T: Ord>(a: &[T]) -> u32 {
    let mut mask = 0u32;
    for i in 1..a.len().saturating_sub(1) {
        if a[i - 1] < a[i] && a[i] > a[i + 1] {
            mask |= 1 << (i + 1); // 1-based position
        }
    }
    mask
}

fn pv_mask<T: Ord>(a: &[T]) -> (u32, bool) {
    let mut mask = 0u32;
    let mut first_is_peak = false;
    for i in 1..a.len().saturating_sub(1) {
        let peak = a[i - 1] < a[i] && a[i] > a[i + 1];
        let valley = a[i - 1] > a[i] && a[i] < a[i + 1];
        if peak || valley {
            if mask == 0 {
                first_is_peak = peak;
            }
            mask |= 1 << (i + 1);
        }
    }
    (mask, first_is_peak)
}

fn mask_to_positions(mask: u32) -> Vec<usize> {
    (0..32).filter(|&b| mask & (1 << b) != 0).collect()
}

/// The peak set of a permutation: interior positions `i` with
/// `a_{i-1} < a_i > a_{i+1}`.
pub fn peak_set_of(pi: &Permutation) -> PeakSet {
    PeakSet::new(mask_to_positions(peak_mask(&pi.entries)))
        .expect("mask positions are sorted")
}

/// The combined peak-and-valley positions of a permutation, plus whether the
/// smallest one is a peak (`false` when there are none).
pub fn peak_valley_set_of(pi: &Permutation) -> (Vec<usize>, bool) {
    let (mask, first_is_peak) = pv_mask(&pi.entries);
    (mask_to_positions(mask), first_is_peak)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if n > cap || n > MASK_MAX_N {
        return Err(Error::CapExceeded { n, cap: cap.min(MASK_MAX_N) });
    }
    Ok(())
}

/// One full scan of S_n, classifying each permutation by `classify` and
/// counting class sizes. Partitioned by first entry; merged associatively.
fn enumerate_classes<K, F>(n: usize, classify: F) -> BTreeMap<K, u64>
where
    K: Ord + Send,
    F: Fn(&[u8]) -> K + Sync,
{
    (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut buf: Vec<u8> = Vec::with_capacity(n);
            buf.push(first);
            buf.extend((1..=n as u8).filter(|&v| v != first));
            let mut local: BTreeMap<K, u64> = BTreeMap::new();
            loop {
                *local.entry(classify(&buf)).or_insert(0) += 1;
                if !next_permutation(&mut buf[1..]) {
                    break;
                }
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

/// Counts of permutations of `[n]` grouped by exact peak set.
#[derive(Debug, Clone)]
pub struct CountTable {
    n: usize,
    counts: BTreeMap<PeakSet, BigInt>,
}

impl CountTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Count for one peak set (0 if the class is empty).
    pub fn get(&self, s: &PeakSet) -> BigInt {
        self.counts.get(s).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PeakSet, &BigInt)> {
        self.counts.iter()
    }

    /// Sum over all classes; equals `n!` when the scan is correct.
    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }
}

/// Counts of permutations grouped by (peak-and-valley positions, type of the
/// first extremum).
#[derive(Debug, Clone)]
pub struct PvCountTable {
    n: usize,
    counts: BTreeMap<(Vec<usize>, bool), BigInt>,
}

impl PvCountTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, positions: &[usize], first_is_peak: bool) -> BigInt {
        self.counts
            .get(&(positions.to_vec(), first_is_peak))
            .cloned()
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Vec<usize>, bool), &BigInt)> {
        self.counts.iter()
    }

    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }
}

/// Classifies all of S_n by exact peak set, under the default cap.
pub fn brute_distribution(n: usize) -> Result<CountTable> {
    brute_distribution_capped(n, DEFAULT_MAX_N)
}

pub fn brute_distribution_capped(n: usize, cap: usize) -> Result<CountTable> {
    check_cap(n, cap)?;
    let raw = enumerate_classes(n, peak_mask);
    let counts = raw
        .into_iter()
        .map(|(mask, c)| {
            let s = PeakSet::new(mask_to_positions(mask)).expect("sorted");
            (s, BigInt::from(c))
        })
        .collect();
    Ok(CountTable { n, counts })
}

/// `#P(S;n)` by full enumeration, under the default cap.
pub fn brute_count(s: &PeakSet, n: usize) -> Result<BigInt> {
    brute_count_capped(s, n, DEFAULT_MAX_N)
}

pub fn brute_count_capped(s: &PeakSet, n: usize, cap: usize) -> Result<BigInt> {
    Ok(brute_distribution_capped(n, cap)?.get(s))
}

/// Classifies all of S_n by peak-and-valley signature, under the default cap.
pub fn brute_pv_distribution(n: usize) -> Result<PvCountTable> {
    brute_pv_distribution_capped(n, DEFAULT_MAX_N)
}

pub fn brute_pv_distribution_capped(n: usize, cap: usize) -> Result<PvCountTable> {
    check_cap(n, cap)?;
    let raw = enumerate_classes(n, pv_mask);
    let counts = raw
        .into_iter()
        .map(|((mask, fp), c)| ((mask_to_positions(mask), fp), BigInt::from(c)))
        .collect();
    Ok(PvCountTable { n, counts })
}

/// `#PV(S;n)` for the stated first-extremum type, by full enumeration.
pub fn brute_pv_count(positions: &[usize], first_is_peak: bool, n: usize) -> Result<BigInt> {
    brute_pv_count_capped(positions, first_is_peak, n, DEFAULT_MAX_N)
}

pub fn brute_pv_count_capped(
    positions: &[usize],
    first_is_peak: bool,
    n: usize,
    cap: usize,
) -> Result<BigInt> {
    Ok(brute_pv_distribution_capped(n, cap)?.get(positions, first_is_peak))
}

/// Lists the members of `P(S;n)` in lexicographic order. Same cap as the
/// counting scans; intended for small n.
pub fn permutations_with_peak_set(s: &PeakSet, n: usize) -> Result<Vec<Permutation>> {
    permutations_with_peak_set_capped(s, n, DEFAULT_MAX_N)
}

pub fn permutations_with_peak_set_capped(
    s: &PeakSet,
    n: usize,
    cap: usize,
) -> Result<Vec<Permutation>> {
    check_cap(n, cap)?;
    let target: Vec<usize> = s.positions().to_vec();
    let mut buf: Vec<usize> = (1..=n).collect();
    let mut hits = Vec::new();
    loop {
        if mask_to_positions(peak_mask(&buf)) == target {
            hits.push(Permutation { entries: buf.clone() });
        }
        if !next_permutation(&mut buf) {
            break;
        }
    }
    Ok(hits)
}

/// Total number of permutations visited by one scan of S_n (counter check).
pub fn enumeration_count(n: usize, cap: usize) -> Result<BigInt> {
    check_cap(n, cap)?;
    let visited = enumerate_classes(n, |_| ());
    Ok(visited.get(&()).map(|&c| BigInt::from(c)).unwrap_or_default())
}

/// `n!` as a big integer, for table cross-checks.
pub fn symmetric_group_order(n: usize) -> BigInt {
    factorial(n)
}
