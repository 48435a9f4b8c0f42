use thiserror::Error;

/// Specialized result type for this crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A chromatic cardinality below 1 was requested.
    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(i64),

    /// A pitch-class value outside `[0, n-1]`.
    #[error("pitch class {value} out of range for modulus {modulus}")]
    PitchOutOfRange { value: i64, modulus: i64 },

    /// `gcd(0, 0)` has no greatest common divisor.
    #[error("gcd(0, 0) is undefined")]
    GcdUndefined,

    /// No modular multiplicative inverse exists. For a keyboard this means
    /// the white-key count admits no degree structure at all.
    #[error("{m} is not invertible mod {n}: gcd({m}, {n}) = {gcd}")]
    NotCoprime { m: i64, n: i64, gcd: i64 },

    /// Two bit patterns of different lengths were compared cyclically.
    #[error("bit patterns differ in length: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// A bit pattern that cannot be a keyboard configuration.
    #[error("invalid keyboard configuration: {0}")]
    InvalidConfig(String),

    /// The white-key set is not produced by any generating sequence, i.e.
    /// the configuration is not a generated (maximally even) scale.
    #[error("no generating sequence reproduces the white-key set (n = {n}, n_w = {n_w})")]
    NoGenerator { n: i64, n_w: i64 },

    /// An operation that requires an axiom-valid configuration was given one
    /// that fails the named axiom.
    #[error("configuration violates axiom {0}")]
    AxiomViolation(u8),

    /// No configuration satisfies all three axioms for this `(n, n_w)`.
    #[error("no valid configurations for n = {n}, n_w = {n_w}")]
    NoValidConfigs { n: i64, n_w: i64 },

    /// The prime form is too small to carry the expected double sharp
    /// (only happens for white-key sets with fewer than three notes).
    #[error("prime form of (n = {n}, n_w = {n_w}) is degenerate: K_(n-2) carries no +2")]
    DegeneratePrimeForm { n: i64, n_w: i64 },
}
