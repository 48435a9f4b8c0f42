//! Exact modular arithmetic and cyclic-sequence utilities.
//!
//! Everything here is integer-exact. Values are `i64`; the largest numbers
//! reached anywhere in the crate are evolution products of order 5e4, so
//! 64 bits leave ample headroom.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Chromatic cardinality: the number of equal steps per octave, `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Modulus(i64);

impl Modulus {
    pub fn new(n: i64) -> Result<Self> {
        if n >= 1 {
            Ok(Self(n))
        } else {
            Err(Error::InvalidModulus(n))
        }
    }

    pub fn get(self) -> i64 {
        self.0
    }

    /// Canonical residue of `x` in `[0, n-1]`.
    pub fn reduce(self, x: i64) -> i64 {
        x.rem_euclid(self.0)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A note of an n-TET octave: an integer residue in `[0, n-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PitchClass {
    value: i64,
    modulus: Modulus,
}

impl PitchClass {
    pub fn new(value: i64, modulus: Modulus) -> Result<Self> {
        if (0..modulus.get()).contains(&value) {
            Ok(Self { value, modulus })
        } else {
            Err(Error::PitchOutOfRange {
                value,
                modulus: modulus.get(),
            })
        }
    }

    /// The residue of `value` modulo `modulus`, never out of range.
    pub fn from_residue(value: i64, modulus: Modulus) -> Self {
        Self {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub fn value(self) -> i64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Serialize for PitchClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.value)
    }
}

/// Greatest common divisor by the Euclidean algorithm.
///
/// Inputs are taken by absolute value; `gcd(0, 0)` is an error.
pub fn gcd(a: i64, b: i64) -> Result<i64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdUndefined);
    }
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    Ok(a)
}

/// Extended Euclid: returns `(g, x)` with `a*x + b*y = g` for some `y`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
    }
    (r0, x0)
}

/// The modular multiplicative inverse: the unique `k` in `[1, n-1]` with
/// `m * k ≡ 1 (mod n)`.
///
/// Fails with [`Error::NotCoprime`] when `gcd(m, n) != 1`; for keyboards that
/// means the configuration has no valid degree structure. (`n = 1` is
/// degenerate: the result is 0.)
pub fn mod_inverse(m: i64, n: Modulus) -> Result<i64> {
    let nn = n.get();
    let mr = n.reduce(m);
    let (g, x) = ext_gcd(mr, nn);
    if g != 1 {
        return Err(Error::NotCoprime { m, n: nn, gcd: g });
    }
    Ok(x.rem_euclid(nn))
}

/// Rotate a bit pattern `d` places: `output[i] = input[(i + d) mod len]`.
///
/// The direction matters and is fixed as above: entry `d` of the input
/// becomes entry 0 of the output (a leftward shift of the pattern).
pub fn rotate_config(bits: &[bool], d: usize) -> Vec<bool> {
    let len = bits.len();
    if len == 0 {
        return Vec::new();
    }
    (0..len).map(|i| bits[(i + d) % len]).collect()
}

/// The smallest offset `d >= 0` with `rotate_config(a, d) == b`, if one
/// exists. Two patterns related this way are called cyclic equivalents.
pub fn cyclic_equivalent(a: &[bool], b: &[bool]) -> Result<Option<usize>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let len = a.len();
    if len == 0 {
        return Ok(Some(0));
    }
    Ok((0..len).find(|&d| (0..len).all(|i| a[(i + d) % len] == b[i])))
}

#[cfg(test)]
pub(crate) fn bits_from_str(s: &str) -> Vec<bool> {
    s.chars().map(|c| c == '1').collect()
}
