//! Exact enumeration of permutations with a prescribed peak set.
//!
//! An interior index `i` of a permutation `a_1 ... a_n` is a peak when
//! `a_{i-1} < a_i > a_{i+1}`. For a fixed admissible position set `S` the
//! number of permutations of `[n]` whose peak set is exactly `S` factors as
//! `#P(S;n) = p(S;n) * 2^(n-#S-1)` with `p(S;n)` an integer-valued polynomial
//! in n. This crate computes those counts and polynomials exactly
//! (arbitrary-precision integers throughout), exposes the closed forms for
//! the structured families, derives rational generating functions and linear
//! recurrences, and checks the attached conjectures — coefficient positivity
//! and Turán-shaped maximizers — against a brute-force enumeration oracle.
//!
//! Modules:
//! - [`binomial`], [`poly`]: generalized binomial coefficients and
//!   integer-valued polynomials in shifted binomial bases.
//! - [`peakset`], [`composition`]: the domain vocabulary.
//! - [`oracle`]: exhaustive enumeration of S_n (the ground truth).
//! - [`counting`]: admissibility, the peak-polynomial recursion, exact
//!   counts, finite-difference fitting.
//! - [`closedforms`]: explicit formulas for `{m}`, `{2,m}`, `{2,m,m+2}`,
//!   `{2,n-1}`, `{2,m,n-1}`, `{2,m,m+2,n-1}` and the split-at-maximum
//!   recursion.
//! - [`genfunc`]: rational generating functions over `(1-2x)^m`.
//! - [`coeffs`]: expansions in the basis shifted by `max S`, closed
//!   coefficient forms, positivity scanning.
//! - [`equidist`]: maximizer distribution and the Turán-pattern checks.
//! - [`peakvalley`]: enumeration by combined peak/valley signature.
//! - [`peakcount`]: permutations by number of peaks (David–Barton).

pub mod binomial;
pub mod closedforms;
pub mod coeffs;
pub mod composition;
pub mod counting;
pub mod equidist;
pub mod error;
pub mod genfunc;
pub mod oracle;
pub mod peakcount;
pub mod peakset;
pub mod peakvalley;
pub mod poly;

pub use composition::Composition;
pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use peakset::{PeakSet, SymbolicPeakSet};
pub use poly::BinomialPolynomial;
