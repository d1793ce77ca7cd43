//! Peak position sets, constant and n-dependent.

use std::fmt;

use crate::error::{Error, Result};

/// A sorted set of candidate peak positions (1-based, strictly increasing).
///
/// Positions below 2 can never actually be peaks; they are representable so
/// that impossible queries like `{1}` answer 0 instead of failing to parse.
/// Admissibility is a derived property, see [`crate::counting::is_admissible`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeakSet {
    positions: Vec<usize>,
}

impl PeakSet {
    /// Builds a peak set from strictly increasing positions, all `>= 1`.
    pub fn new(positions: Vec<usize>) -> Result<Self> {
        if positions.first().is_some_and(|&p| p == 0) {
            return Err(Error::InvalidPeakSet("positions are 1-based".into()));
        }
        if !positions.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidPeakSet(format!(
                "positions must be strictly increasing, got {positions:?}"
            )));
        }
        Ok(PeakSet { positions })
    }

    pub fn empty() -> Self {
        PeakSet { positions: Vec::new() }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn max_position(&self) -> Option<usize> {
        self.positions.last().copied()
    }

    pub fn min_position(&self) -> Option<usize> {
        self.positions.first().copied()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.positions.binary_search(&position).is_ok()
    }

    /// The set `n + 1 - S`, the peak set of the reversal of any permutation
    /// with peak set `S`. Requires every position `<= n`.
    pub fn reversal(&self, n: usize) -> Result<PeakSet> {
        if self.max_position().is_some_and(|m| m > n) {
            return Err(Error::InvalidPeakSet(format!(
                "cannot reverse {self} inside [1, {n}]"
            )));
        }
        let positions = self.positions.iter().rev().map(|&p| n + 1 - p).collect();
        PeakSet::new(positions)
    }

    /// The set without its maximum. Empty input yields the empty set.
    pub(crate) fn without_max(&self) -> PeakSet {
        let mut positions = self.positions.clone();
        positions.pop();
        PeakSet { positions }
    }

    /// Inserts a position known to exceed the current maximum.
    pub(crate) fn with_appended(&self, position: usize) -> PeakSet {
        debug_assert!(self.max_position().is_none_or(|m| m < position));
        let mut positions = self.positions.clone();
        positions.push(position);
        PeakSet { positions }
    }
}

impl fmt::Display for PeakSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// A peak set of the form `{i_1 < ... < i_s < n-j_t < ... < n-j_1}` where the
/// `i`s and `j`s are constants. `high_offsets` is stored strictly decreasing
/// (`j_t` first), so instantiated positions come out increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPeakSet {
    low: Vec<usize>,
    high_offsets: Vec<usize>,
}

impl SymbolicPeakSet {
    /// `low` must be strictly increasing with minimum `>= 2`; `high_offsets`
    /// is sorted internally and must be duplicate-free with minimum `>= 1`.
    pub fn new(low: Vec<usize>, mut high_offsets: Vec<usize>) -> Result<Self> {
        if !low.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidPeakSet(format!(
                "low positions must be strictly increasing, got {low:?}"
            )));
        }
        if low.first().is_some_and(|&p| p < 2) {
            return Err(Error::InvalidPeakSet(
                "low positions must be at least 2".into(),
            ));
        }
        high_offsets.sort_unstable_by(|a, b| b.cmp(a));
        if !high_offsets.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::InvalidPeakSet(format!(
                "duplicate high offsets in {high_offsets:?}"
            )));
        }
        if high_offsets.last().is_some_and(|&j| j == 0) {
            return Err(Error::InvalidPeakSet(
                "high offsets must be at least 1 (position n itself cannot be a peak)".into(),
            ));
        }
        Ok(SymbolicPeakSet { low, high_offsets })
    }

    pub fn low(&self) -> &[usize] {
        &self.low
    }

    /// Offsets `j` denoting positions `n - j`, strictly decreasing.
    pub fn high_offsets(&self) -> &[usize] {
        &self.high_offsets
    }

    /// Total number of elements once instantiated.
    pub fn size(&self) -> usize {
        self.low.len() + self.high_offsets.len()
    }

    pub fn is_constant(&self) -> bool {
        self.high_offsets.is_empty()
    }

    /// Substitutes a concrete `n`. Fails if the two halves collide or any
    /// `n - j` falls below 1.
    pub fn instantiate(&self, n: usize) -> Result<PeakSet> {
        let mut positions = self.low.clone();
        for &j in &self.high_offsets {
            if n <= j {
                return Err(Error::InvalidPeakSet(format!(
                    "offset n-{j} is non-positive at n = {n}"
                )));
            }
            positions.push(n - j);
        }
        PeakSet::new(positions)
    }
}

impl fmt::Display for SymbolicPeakSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for p in &self.low {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        for j in &self.high_offsets {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "n-{j}")?;
            first = false;
        }
        write!(f, "}}")
    }
}
