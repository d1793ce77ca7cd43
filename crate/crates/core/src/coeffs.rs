//! Coefficients of peak polynomials in the basis shifted by `max S`.
//!
//! For nonempty admissible `S` with `m = max S`, the expansion
//! `p(S;n) = sum_{k=0}^{m-1} c_k C(n-m, k)` has `c_0 = 0` and positive leading
//! coefficient; conjecturally every `c_k` is nonnegative. This module exposes
//! the generic expansion, the closed coefficient formulas for `{m}`, `{2,m}`
//! and `{l,m}`, and an exhaustive scanner that reports any negative
//! coefficient it can find.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::binomial::choose;
use crate::counting::{admissible_sets_up_to, is_admissible, peak_polynomial};
use crate::error::{Error, Result};
use crate::peakset::PeakSet;

/// The coefficient list `c_0 ..= c_{m-1}` of `p(S;n)` in the basis shifted by
/// `m = max S`, zero-padded to length `m`. Non-admissible sets give all zeros.
/// The empty set is rejected (there is no shift to expand at).
pub fn coefficients(s: &PeakSet) -> Result<Vec<BigInt>> {
    let Some(m) = s.max_position() else {
        return Err(Error::InvalidParameter(
            "coefficient expansion needs a nonempty set".into(),
        ));
    };
    let mut coeffs = peak_polynomial(s).rebase(m as i64).coeffs().to_vec();
    coeffs.resize(m, BigInt::zero());
    Ok(coeffs)
}

/// Closed coefficient for `S = {m}`: `C(m-1, k)` for `k >= 1`, zero at `k = 0`.
pub fn coeff_single(m: usize, k: usize) -> Result<BigInt> {
    if m < 2 || k >= m {
        return Err(Error::InvalidParameter(format!(
            "need m >= 2 and 0 <= k < m, got m = {m}, k = {k}"
        )));
    }
    Ok(if k == 0 { BigInt::zero() } else { choose(m as i64 - 1, k as i64) })
}

/// Closed coefficient for `S = {2,m}`:
/// `(m-3) C(m-2, k-1) + (m-2) C(m-2, k) - C(m-2, k+m-3)`.
pub fn coeff_pair_with_two(m: usize, k: usize) -> Result<BigInt> {
    if m < 4 || k >= m {
        return Err(Error::InvalidParameter(format!(
            "need m >= 4 and 0 <= k < m, got m = {m}, k = {k}"
        )));
    }
    let (m, k) = (m as i64, k as i64);
    Ok((m - 3) * choose(m - 2, k - 1) + (m - 2) * choose(m - 2, k)
        - choose(m - 2, k + m - 3))
}

/// Closed coefficient for `S = {l,m}`: zero at `k = 0`, and for `k >= 1`
///
/// ```text
/// c_k = -2 C(m-1, k+m-l) [m-l even]
///     + sum_{j=0}^{m-l-2} (-1)^j (C(m-j-2, l-1) - 1) C(m, k+j+1)
/// ```
///
/// The indicator is kept as a 0/1 factor so the expression stays a literal
/// transcription of the identity.
pub fn coeff_general_pair(l: usize, m: usize, k: usize) -> Result<BigInt> {
    if l < 2 || m < l + 2 || k >= m {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= l <= m-2 and 0 <= k < m, got l = {l}, m = {m}, k = {k}"
        )));
    }
    if k == 0 {
        return Ok(BigInt::zero());
    }
    let (l, m, k) = (l as i64, m as i64, k as i64);
    let chi: i64 = if (m - l) % 2 == 0 { 1 } else { 0 };
    let mut acc = -2 * chi * choose(m - 1, k + m - l);
    for j in 0..=m - l - 2 {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc += sign * (choose(m - j - 2, l - 1) - 1) * choose(m, k + j + 1);
    }
    Ok(acc)
}

/// Dispatches to the closed coefficient formula matching the shape of `S`.
/// Anything other than a one- or two-element admissible set is unsupported;
/// use [`coefficients`] for those.
pub fn closed_form(s: &PeakSet, k: usize) -> Result<BigInt> {
    if !is_admissible(s) {
        return Err(Error::InvalidParameter(format!("{s} is not admissible")));
    }
    match s.positions() {
        [m] => coeff_single(*m, k),
        [2, m] => coeff_pair_with_two(*m, k),
        [l, m] => coeff_general_pair(*l, *m, k),
        _ => Err(Error::UnsupportedPattern(format!(
            "{s}: closed coefficient forms exist for {{m}}, {{2,m}} and {{l,m}} \
             only; use coefficients()"
        ))),
    }
}

/// A negative coefficient found by the scanner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub set: PeakSet,
    pub k: usize,
    pub value: BigInt,
}

/// Expands every nonempty admissible `S` with `max S <= max_peak` and reports
/// each negative coefficient. The nonnegativity conjecture predicts an empty
/// result; a hit is a finding, not a failure.
pub fn positivity_scan(max_peak: usize) -> Vec<Violation> {
    let sets = admissible_sets_up_to(max_peak);
    sets.par_iter()
        .flat_map_iter(|s| {
            let coeffs = coefficients(s).expect("scan sets are nonempty");
            let s = s.clone();
            coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| c < &BigInt::zero())
                .map(move |(k, value)| Violation { set: s.clone(), k, value })
                .collect::<Vec<_>>()
        })
        .collect()
}
