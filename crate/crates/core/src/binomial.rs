//! Exact binomial coefficients, including a generalized upper argument.
//!
//! Basis changes between shifted binomial bases need `C(t, k)` with `t`
//! negative, so the generalized coefficient is the primitive here. The
//! classical table convention (zero outside `0 <= k <= t`) is provided
//! separately for transcribing alternating-sum formulas.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Generalized binomial coefficient `C(t, k) = t(t-1)...(t-k+1)/k!` for any
/// integer `t` (negative allowed) and `k >= 0`. Always an exact integer.
///
/// For `0 <= t < k` the product contains a zero factor and the result is 0.
/// For negative `t`, `C(t, k) = (-1)^k C(k - t - 1, k)`.
pub fn binomial(t: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        // Each partial product is C(t, i+1) * (i+1)!/(i+1)! ... i.e. the
        // division below is exact at every step.
        acc *= t - i as i64;
        acc /= i as i64 + 1;
    }
    acc
}

/// Binomial coefficient under the usual table convention: `C(t, k) = 0` when
/// `k < 0` or `k > t`. This is the reading used by the closed-form summation
/// identities, where out-of-range indices silently vanish.
pub fn choose(t: i64, k: i64) -> BigInt {
    if k < 0 || k > t {
        BigInt::zero()
    } else {
        binomial(t, k as u64)
    }
}

/// Exact factorial.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i as u64;
    }
    acc
}
