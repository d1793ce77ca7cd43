//! Compositions attached to peak sets.
//!
//! A peak set `S = {i_1 < ... < i_s}` inside `[n]` corresponds to the
//! composition of `n + 1` with parts `i_j - i_{j-1}` (sentinels `i_0 = 0`,
//! `i_{s+1} = n + 1`). The correspondence is a bijection, and evenly-sized
//! parts (Turán compositions) are what the maximizer conjecture is about.

use std::fmt;

use crate::error::{Error, Result};
use crate::peakset::PeakSet;

/// A composition: an ordered list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    /// The composition `kappa(S)` of `n + 1`. Requires `n >= max S` (and
    /// `n >= 1` when `S` is empty).
    pub fn from_peak_set(s: &PeakSet, n: usize) -> Result<Self> {
        if s.max_position().is_some_and(|m| m > n) {
            return Err(Error::InvalidComposition(format!(
                "peak set {s} does not fit in [{n}]"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidComposition("n must be at least 1".into()));
        }
        let mut parts = Vec::with_capacity(s.len() + 1);
        let mut prev = 0usize;
        for &i in s.positions() {
            parts.push(i - prev);
            prev = i;
        }
        parts.push(n + 1 - prev);
        Ok(Composition { parts })
    }

    /// Inverse of [`Composition::from_peak_set`]: recovers `(S, n)` from the
    /// prefix sums.
    pub fn to_peak_set(&self) -> (PeakSet, usize) {
        let mut positions = Vec::with_capacity(self.parts.len() - 1);
        let mut acc = 0usize;
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p;
            positions.push(acc);
        }
        let n = acc + self.parts[self.parts.len() - 1] - 1;
        let s = PeakSet::new(positions).expect("prefix sums are strictly increasing");
        (s, n)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// True iff any two parts differ by at most 1.
    pub fn is_turan(&self) -> bool {
        let max = *self.parts.iter().max().expect("nonempty");
        let min = *self.parts.iter().min().expect("nonempty");
        max - min <= 1
    }

    /// The quotient `q` with `total = q * parts + r`, `0 <= r < parts`.
    pub fn quotient(&self) -> usize {
        self.total() / self.parts.len()
    }

    /// Number of parts equal to `value`.
    pub fn count_part(&self, value: usize) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
