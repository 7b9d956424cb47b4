//! Error type shared by the whole crate.

use thiserror::Error;

/// Everything that can go wrong while validating input or answering a
/// classification query.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The pair (n, a) does not define a faithful action: gcd(n, a) > 1.
    #[error("gcd(n,a) must be 1: gcd({n},{a}) = {gcd}")]
    NonCoprime { n: i64, a: i64, gcd: i64 },

    /// n or a falls outside the admissible window 2 <= n <= 2^31,
    /// 1 <= a <= n-1.
    #[error("parameters out of range: need 2 <= n <= 2^31 and 1 <= a <= n-1, got n = {n}, a = {a}")]
    OutOfRange { n: i64, a: i64 },

    /// Continued-fraction coefficients must all be >= 2 and the resulting
    /// order must stay within the admissible window.
    #[error("continued-fraction coefficients must all be >= 2 and define an order <= 2^31")]
    InvalidAlphas,

    /// A coefficient sequence violates the admissibility conditions for
    /// this singularity.
    #[error("coefficient sequence is not admissible for this singularity")]
    InvalidSequence,

    /// The epsilon signature is only defined for Ulrich indices t != n-1.
    #[error("epsilon signature is only defined for Ulrich indices t != n-1")]
    NotApplicable,

    /// An Ulrich index escaped the interval [n-a, n-1]. This signals an
    /// internal inconsistency and must never fire.
    #[error("Ulrich index {index} falls outside [{lo}, {hi}]")]
    RangeViolation { index: i64, lo: i64, hi: i64 },
}
