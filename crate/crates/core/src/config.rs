//! Keyboard configurations: enumeration, counting, and the three axioms.
//!
//! A configuration assigns white/black to the `n` chromatic positions of one
//! octave. Position 0 is always white and no two black keys are adjacent
//! (cyclically — the wrap pair can never be two blacks anyway, because
//! position 0 is white). The white positions form the diatonic set `S_0`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::Modulus;
use crate::signature::{self, AliasMode};

/// One octave's white/black key arrangement.
///
/// `bits[i]` is true when position `i` carries a black key. Invariants:
/// `bits[0]` is white and no two black keys are cyclically adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KeyboardConfig {
    modulus: Modulus,
    bits: Vec<bool>,
    white_set: Vec<i64>,
}

impl KeyboardConfig {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        let n = bits.len();
        if n == 0 {
            return Err(Error::InvalidConfig("empty bit pattern".into()));
        }
        if bits[0] {
            return Err(Error::InvalidConfig("position 0 must be a white key".into()));
        }
        for i in 0..n {
            if bits[i] && bits[(i + 1) % n] {
                return Err(Error::InvalidConfig(format!(
                    "adjacent black keys at positions {} and {}",
                    i,
                    (i + 1) % n
                )));
            }
        }
        let white_set = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| !b)
            .map(|(i, _)| i as i64)
            .collect();
        Ok(Self {
            modulus: Modulus::new(n as i64)?,
            bits,
            white_set,
        })
    }

    /// Build a configuration from its white-key positions.
    pub fn from_white_set(modulus: Modulus, white: &[i64]) -> Result<Self> {
        let n = modulus.get();
        let mut bits = vec![true; n as usize];
        for &w in white {
            if !(0..n).contains(&w) {
                return Err(Error::InvalidConfig(format!(
                    "white key {w} out of range for n = {n}"
                )));
            }
            bits[w as usize] = false;
        }
        Self::new(bits)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Chromatic cardinality `n`.
    pub fn n(&self) -> i64 {
        self.modulus.get()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Ascending white-key positions (the scale `S_0`).
    pub fn white_set(&self) -> &[i64] {
        &self.white_set
    }

    /// Number of white keys `n_w`.
    pub fn n_white(&self) -> i64 {
        self.white_set.len() as i64
    }

    /// Number of black keys `n_b`.
    pub fn n_black(&self) -> i64 {
        self.n() - self.n_white()
    }

    pub fn is_black(&self, position: i64) -> bool {
        self.bits[self.modulus.reduce(position) as usize]
    }
}

/// Configurations display as '0'/'1' strings, position 0 first.
impl fmt::Display for KeyboardConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for KeyboardConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidConfig(format!(
                    "unexpected character {other:?} in bit pattern"
                ))),
            })
            .collect::<Result<Vec<bool>>>()?;
        Self::new(bits)
    }
}

impl Serialize for KeyboardConfig {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// Number of length-`n` patterns with a white position 0 and no adjacent
/// black keys: `N_n = sum_i C(n-i, i) = F_(n+1)` (with `F_1 = F_2 = 1`).
///
/// Adjacency is linear within the octave here; the wrap pair cannot hold two
/// blacks because position 0 is white, so the cyclic reading agrees.
pub fn count_basic(n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::InvalidModulus(n));
    }
    Ok((0..=n / 2).map(|i| binomial(n - i, i)).sum())
}

/// All basic configurations of `n` keys in ascending binary-value order
/// (position 0 is the most significant bit). Length equals
/// [`count_basic`]`(n)`.
pub fn enumerate_basic(n: Modulus) -> Vec<KeyboardConfig> {
    let len = n.get() as usize;
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(len);
    buf.push(false);
    extend_patterns(&mut buf, len, None, &mut out);
    out
}

/// Depth-first pattern generation; trying white before black at each
/// position yields ascending binary order. `blacks` optionally fixes the
/// black-key count.
fn extend_patterns(
    buf: &mut Vec<bool>,
    len: usize,
    blacks: Option<usize>,
    out: &mut Vec<KeyboardConfig>,
) {
    let placed = buf.iter().filter(|&&b| b).count();
    if let Some(target) = blacks {
        let remaining = len - buf.len();
        // at most every other remaining position can be black
        if placed > target || placed + remaining.div_ceil(2) < target {
            return;
        }
    }
    if buf.len() == len {
        if blacks.is_none_or(|target| placed == target) {
            out.push(KeyboardConfig::new(buf.clone()).expect("generated pattern is valid"));
        }
        return;
    }
    buf.push(false);
    extend_patterns(buf, len, blacks, out);
    buf.pop();
    if !buf.last().copied().unwrap_or(true) {
        buf.push(true);
        extend_patterns(buf, len, blacks, out);
        buf.pop();
    }
}

/// Pass/fail outcome of an axiom check; `Fail` carries a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check<W> {
    Pass,
    Fail(W),
}

impl<W> Check<W> {
    pub fn passed(&self) -> bool {
        matches!(self, Check::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Pass => None,
            Check::Fail(w) => Some(w),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom1Kind {
    /// Three consecutive white keys with no black key between them.
    ThreeWhiteKeys,
    /// Two adjacent black keys.
    AdjacentBlackKeys,
}

/// Where Axiom I breaks: `position` starts the offending run (cyclically).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Axiom1Witness {
    pub position: i64,
    pub kind: Axiom1Kind,
}

/// Where Axiom II breaks: the first tonic whose canonical signature mixes
/// sharps and flats (or needs a double accidental), with the full vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Axiom2Witness {
    pub tonic: i64,
    /// 0-based position of the entry that breaks monotonicity.
    pub index: usize,
    pub offset: i64,
    pub offsets: Vec<i64>,
}

/// Where Axiom III breaks: two tonics with identical key signatures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Axiom3Witness {
    pub tonic_a: i64,
    pub tonic_b: i64,
}

/// Axiom I: no three consecutive white keys, no adjacent black keys. The
/// scan is cyclic — the octave repeats, so runs may cross the wrap.
pub fn axiom1_check(c: &KeyboardConfig) -> Check<Axiom1Witness> {
    let bits = c.bits();
    let n = bits.len();
    for i in 0..n {
        if bits[i] && bits[(i + 1) % n] {
            return Check::Fail(Axiom1Witness {
                position: i as i64,
                kind: Axiom1Kind::AdjacentBlackKeys,
            });
        }
        if !bits[i] && !bits[(i + 1) % n] && !bits[(i + 2) % n] {
            return Check::Fail(Axiom1Witness {
                position: i as i64,
                kind: Axiom1Kind::ThreeWhiteKeys,
            });
        }
    }
    Check::Pass
}

/// Axiom II: for every tonic `t` in `1..n-1` the canonical key signature is
/// a monotonic single-sharp or single-flat sequence (entries all in `{0,+1}`
/// or all in `{0,-1}`).
pub fn axiom2_check(c: &KeyboardConfig) -> Check<Axiom2Witness> {
    let n = c.n();
    for t in 1..n {
        let sig = signature::key_signature_at(c, t, AliasMode::Canonical);
        if let Some((index, &offset)) = first_non_monotone(sig.offsets()) {
            return Check::Fail(Axiom2Witness {
                tonic: t,
                index,
                offset,
                offsets: sig.offsets().to_vec(),
            });
        }
    }
    Check::Pass
}

/// First entry that breaks single-sign monotonicity, if any.
fn first_non_monotone(offsets: &[i64]) -> Option<(usize, &i64)> {
    let mut sign = 0i64;
    offsets.iter().enumerate().find(|(_, &e)| {
        if e.abs() > 1 || (sign != 0 && e == -sign) {
            true
        } else {
            if e != 0 {
                sign = e;
            }
            false
        }
    })
}

/// Axiom III: the map from tonic to canonical key signature is injective
/// over `t = 0..n-1`.
pub fn axiom3_check(c: &KeyboardConfig) -> Check<Axiom3Witness> {
    let n = c.n();
    let sigs: Vec<Vec<i64>> = (0..n)
        .map(|t| {
            signature::key_signature_at(c, t, AliasMode::Canonical)
                .offsets()
                .to_vec()
        })
        .collect();
    for a in 0..sigs.len() {
        for b in a + 1..sigs.len() {
            if sigs[a] == sigs[b] {
                return Check::Fail(Axiom3Witness {
                    tonic_a: a as i64,
                    tonic_b: b as i64,
                });
            }
        }
    }
    Check::Pass
}

/// Combined diagnostics for all three axioms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom1: Check<Axiom1Witness>,
    pub axiom2: Check<Axiom2Witness>,
    pub axiom3: Check<Axiom3Witness>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.axiom1.passed() && self.axiom2.passed() && self.axiom3.passed()
    }

    /// Number of the first failing axiom, if any.
    pub fn first_failure(&self) -> Option<u8> {
        if !self.axiom1.passed() {
            Some(1)
        } else if !self.axiom2.passed() {
            Some(2)
        } else if !self.axiom3.passed() {
            Some(3)
        } else {
            None
        }
    }
}

pub fn axiom_report(c: &KeyboardConfig) -> AxiomReport {
    AxiomReport {
        axiom1: axiom1_check(c),
        axiom2: axiom2_check(c),
        axiom3: axiom3_check(c),
    }
}

/// All configurations with `n_w` white keys satisfying Axioms I-III, in
/// ascending binary-value order. Empty whenever `gcd(n, n_w) != 1` or the
/// black-key bounds of Axiom I cannot be met; when nonempty the length is
/// `n_w - n_b + 1`.
pub fn enumerate_valid(n: Modulus, n_w: i64) -> Vec<KeyboardConfig> {
    let len = n.get() as usize;
    let n_b = n.get() - n_w;
    if n_w < 1 || n_b < 1 {
        return Vec::new();
    }
    let mut candidates = Vec::new();
    let mut buf = Vec::with_capacity(len);
    buf.push(false);
    extend_patterns(&mut buf, len, Some(n_b as usize), &mut candidates);
    candidates
        .into_iter()
        .filter(|c| axiom_report(c).all_pass())
        .collect()
}
