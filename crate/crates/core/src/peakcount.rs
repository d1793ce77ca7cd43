//! Permutations counted by their number of peaks.
//!
//! `f(s,n)`, the number of permutations of `[n]` with exactly `s` peaks,
//! satisfies the David–Barton recurrence
//! `f(s,n) = (2s+2) f(s,n-1) + (n-2s) f(s-1,n-1)` with `f(0,n) = 2^(n-1)` and
//! `f(s,n) = 0` whenever `s >= n/2`. Column `s = 1` is OEIS A000431, with the
//! closed form `2^(2n-3) - n 2^(n-2)`; the full triangle is A008303.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::counting::{admissible_sets_with_size, count_permutations};
use crate::error::{Error, Result};

/// The table `f(s,n)` for `0 <= s <= s_max`, `1 <= n <= n_max`.
#[derive(Debug, Clone)]
pub struct CountByPeaks {
    s_max: usize,
    n_max: usize,
    rows: Vec<Vec<BigInt>>, // rows[s][n-1]
}

impl CountByPeaks {
    pub fn s_max(&self) -> usize {
        self.s_max
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `f(s,n)`; panics outside the built range.
    pub fn value(&self, s: usize, n: usize) -> &BigInt {
        assert!(s <= self.s_max && (1..=self.n_max).contains(&n));
        &self.rows[s][n - 1]
    }

    /// `sum_s f(s,n)` over the built rows.
    pub fn column_total(&self, n: usize) -> BigInt {
        (0..=self.s_max).map(|s| self.value(s, n)).sum()
    }

    /// `sum_s s * f(s,n)`, the total number of peaks over S_n.
    pub fn weighted_column_total(&self, n: usize) -> BigInt {
        (0..=self.s_max).map(|s| self.value(s, n) * s as i64).sum()
    }
}

/// Builds `f(s,n)` bottom-up from the recurrence and its stated boundary
/// conditions; negative arguments are never consulted.
pub fn table(s_max: usize, n_max: usize) -> CountByPeaks {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(s_max + 1);
    let row0: Vec<BigInt> = (1..=n_max).map(|n| BigInt::from(1) << (n - 1)).collect();
    rows.push(row0);
    for s in 1..=s_max {
        let mut row = vec![BigInt::zero(); n_max];
        for n in 1..=n_max {
            if 2 * s >= n {
                continue; // f(s,n) = 0 when s >= n/2
            }
            // f(s, n-1) is the previous column of this row; 2s >= 2 keeps
            // n - 2 in range whenever the guard above passes.
            let value = (2 * s as i64 + 2) * &row[n - 2]
                + (n as i64 - 2 * s as i64) * &rows[s - 1][n - 2];
            row[n - 1] = value;
        }
        rows.push(row);
    }
    CountByPeaks { s_max, n_max, rows }
}

/// Closed form for one peak: `f(1,n) = 2^(2n-3) - n 2^(n-2)`, with the
/// n = 1, 2 cases pinned to 0 (as printed, the formula would pass through
/// fractional powers there).
pub fn one_peak(n: usize) -> BigInt {
    if n <= 2 {
        return BigInt::zero();
    }
    (BigInt::from(1) << (2 * n - 3)) - (BigInt::from(n as u64) << (n - 2))
}

/// `f(s,n)` the long way around: summing `#P(S;n)` over every admissible set
/// of the given size. Agreement with [`table`] ties the two count families
/// together.
pub fn from_peak_sets(n: usize, s: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    Ok(admissible_sets_with_size(n, s)
        .iter()
        .map(|set| count_permutations(set, n))
        .sum())
}
