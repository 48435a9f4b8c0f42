//! Generating sequences, scale degrees, circle traversal, Forte prime
//! forms, variant nomenclature, and the structural properties that tie the
//! valid configurations of a given `(n, n_w)` together.

use serde::Serialize;

use crate::config::{self, KeyboardConfig};
use crate::error::{Error, Result};
use crate::ring::{self, Modulus};
use crate::signature::{self, AliasMode};

/// Arithmetic progression mod `n`: `{s0, s0 + k, ..., s0 + (m-1)k}`, kept in
/// generation order (not sorted).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenSeq {
    pub s0: i64,
    pub step: i64,
    pub modulus: Modulus,
    pub elements: Vec<i64>,
}

pub fn gen_seq(s0: i64, step: i64, len: usize, modulus: Modulus) -> GenSeq {
    let elements = (0..len as i64)
        .map(|i| modulus.reduce(s0 + i * step))
        .collect();
    GenSeq {
        s0: modulus.reduce(s0),
        step: modulus.reduce(step),
        modulus,
        elements,
    }
}

/// The unique `(s0, k)` with `k = n_w^{-1} mod n` whose length-`n_w`
/// generating sequence spans exactly the white-key set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeneratorDescriptor {
    pub s0: i64,
    pub step: i64,
}

pub fn canonical_generator(c: &KeyboardConfig) -> Result<GeneratorDescriptor> {
    let n = c.modulus();
    let n_w = c.n_white();
    let step = ring::mod_inverse(n_w, n)?;
    let len = n_w as usize;
    for s0 in 0..n.get() {
        let seq = gen_seq(s0, step, len, n);
        let mut sorted = seq.elements;
        sorted.sort_unstable();
        if sorted == c.white_set() {
            return Ok(GeneratorDescriptor { s0, step });
        }
    }
    Err(Error::NoGenerator { n: n.get(), n_w })
}

/// The distinguished degrees of a configuration. The dominant is the pitch
/// class `n_w^{-1}`; stepping the tonic by it adds one sharp. The leading
/// tones are the first and last elements of the canonical generating
/// sequence — the notes whose ±k step exits the white-key set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeSet {
    pub tonic: i64,
    pub dominant: i64,
    pub subdominant: i64,
    pub descending_leading: i64,
    pub ascending_leading: i64,
}

pub fn degrees(c: &KeyboardConfig) -> Result<DegreeSet> {
    let g = canonical_generator(c)?;
    let n = c.modulus();
    Ok(DegreeSet {
        tonic: 0,
        dominant: g.step,
        subdominant: n.reduce(-g.step),
        descending_leading: g.s0,
        ascending_leading: n.reduce(g.s0 - g.step + 1),
    })
}

/// One stop on the circle traversal: a tonic and its canonical norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CircleEntry {
    pub tonic: i64,
    pub norm: i64,
}

/// Tonics `0, k, 2k, ... (n-1)k mod n` with their canonical signature
/// norms: the generalized circle of fifths. Visits every tonic once.
pub fn circle(c: &KeyboardConfig) -> Result<Vec<CircleEntry>> {
    let g = canonical_generator(c)?;
    let n = c.modulus();
    Ok((0..n.get())
        .map(|j| {
            let tonic = n.reduce(j * g.step);
            let norm = signature::key_signature_at(c, tonic, AliasMode::Canonical).norm();
            CircleEntry { tonic, norm }
        })
        .collect())
}

/// `{(n - x) mod n : x in s}`, sorted ascending.
pub fn inversion(set: &[i64], modulus: Modulus) -> Vec<i64> {
    let mut out: Vec<i64> = set.iter().map(|&x| modulus.reduce(-x)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Forte prime form: the most left-packed among all rotations of the set
/// and of its inversion, transposed to start at 0. Candidates are compared
/// by interval-from-first at the largest index first.
pub fn prime_form(set: &[i64], modulus: Modulus) -> Vec<i64> {
    let mut base: Vec<i64> = set.iter().map(|&x| modulus.reduce(x)).collect();
    base.sort_unstable();
    base.dedup();
    if base.is_empty() {
        return base;
    }
    let inverted = inversion(&base, modulus);
    let mut best: Option<Vec<i64>> = None;
    for candidate in [&base, &inverted] {
        for i in 0..candidate.len() {
            let zeroed = zero_rotation(candidate, i, modulus);
            let better = match &best {
                None => true,
                Some(b) => packed_left_of(&zeroed, b),
            };
            if better {
                best = Some(zeroed);
            }
        }
    }
    best.expect("set is nonempty")
}

/// Rotation of a sorted set starting at index `i`, transposed to 0.
fn zero_rotation(sorted: &[i64], i: usize, modulus: Modulus) -> Vec<i64> {
    let m = sorted.len();
    let mut out: Vec<i64> = (0..m)
        .map(|j| modulus.reduce(sorted[(i + j) % m] - sorted[i]))
        .collect();
    out.sort_unstable();
    out
}

/// Forte's left-packing order on zero-based candidates: compare the spans
/// from the first element, largest index first.
fn packed_left_of(a: &[i64], b: &[i64]) -> bool {
    for j in (1..a.len()).rev() {
        if a[j] != b[j] {
            return a[j] < b[j];
        }
    }
    false
}

/// The bit pattern read as an integer, position 0 most significant.
pub fn binary_value(c: &KeyboardConfig) -> i64 {
    c.bits()
        .iter()
        .fold(0i64, |acc, &b| (acc << 1) | i64::from(b))
}

/// Rank of a valid configuration among its `(n, n_w)` class, 1-based in
/// ascending binary value (variant 1 has the lowest value).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VariantLabel {
    pub n: i64,
    pub n_w: i64,
    pub index: usize,
    pub binary_value: i64,
}

pub fn variant_label(c: &KeyboardConfig) -> Result<VariantLabel> {
    let valid = config::enumerate_valid(c.modulus(), c.n_white());
    match valid.iter().position(|v| v == c) {
        Some(pos) => Ok(VariantLabel {
            n: c.n(),
            n_w: c.n_white(),
            index: pos + 1,
            binary_value: binary_value(c),
        }),
        None => {
            let report = config::axiom_report(c);
            Err(match report.first_failure() {
                Some(axiom) => Error::AxiomViolation(axiom),
                None => Error::InvalidConfig("configuration not in the valid set".into()),
            })
        }
    }
}

/// Everything known about one variant of an `(n, n_w)` class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariantSummary {
    pub index: usize,
    pub binary_value: i64,
    pub config: String,
    pub white_set: Vec<i64>,
    pub generator: GeneratorDescriptor,
    pub degrees: DegreeSet,
}

/// The structural facts shared by all variants of a valid `(n, n_w)`.
///
/// Each flag records one property of the family: (a) variant 2's ascending
/// leading tone is the top note `n-1`; (b) variant 1's descending leading
/// tone is `n-2`; (c) variant 1 is the only variant with a black key at
/// `n-1`; (d) variant 1 equals the inverted prime form up to transposition;
/// (e) variant 1's top white key is `n-2` while every other variant contains
/// `n-1`; (f) `s0` of variant `j` is `(n-2 + (j-1)k) mod n`; (g) the leading
/// tones of all variants coincide under the cyclic-equivalence offsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub n: i64,
    pub n_w: i64,
    pub prime_form: Vec<i64>,
    pub variants: Vec<VariantSummary>,
    pub variant2_ascending_is_top_note: bool,
    pub variant1_descending_is_n_minus_2: bool,
    pub variant1_unique_black_last_key: bool,
    pub variant1_is_inverted_prime_class: bool,
    pub variant1_max_white_is_n_minus_2: bool,
    pub s0_steps_by_generator: bool,
    pub leading_tones_shift_invariant: bool,
}

impl StructuralReport {
    pub fn all_hold(&self) -> bool {
        self.variant2_ascending_is_top_note
            && self.variant1_descending_is_n_minus_2
            && self.variant1_unique_black_last_key
            && self.variant1_is_inverted_prime_class
            && self.variant1_max_white_is_n_minus_2
            && self.s0_steps_by_generator
            && self.leading_tones_shift_invariant
    }
}

pub fn structural_report(n: Modulus, n_w: i64) -> Result<StructuralReport> {
    let valid = config::enumerate_valid(n, n_w);
    if valid.is_empty() {
        return Err(Error::NoValidConfigs { n: n.get(), n_w });
    }
    let nn = n.get();
    let variants: Vec<VariantSummary> = valid
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let generator = canonical_generator(c)?;
            Ok(VariantSummary {
                index: i + 1,
                binary_value: binary_value(c),
                config: c.to_string(),
                white_set: c.white_set().to_vec(),
                generator,
                degrees: degrees(c)?,
            })
        })
        .collect::<Result<_>>()?;

    let prime = prime_form(valid[0].white_set(), n);
    let step = variants[0].generator.step;

    let variant2_ascending_is_top_note = variants[1].degrees.ascending_leading == nn - 1;
    let variant1_descending_is_n_minus_2 = variants[0].generator.s0 == nn - 2;
    let variant1_unique_black_last_key = valid
        .iter()
        .enumerate()
        .all(|(i, c)| c.is_black(nn - 1) == (i == 0));
    let inverted_prime = inversion(&prime, n);
    let variant1_is_inverted_prime_class = (0..nn).any(|shift| {
        let mut transposed: Vec<i64> = inverted_prime.iter().map(|&x| n.reduce(x + shift)).collect();
        transposed.sort_unstable();
        transposed == valid[0].white_set()
    });
    let variant1_max_white_is_n_minus_2 = valid[0].white_set().last() == Some(&(nn - 2))
        && valid[1..].iter().all(|c| !c.is_black(nn - 1));
    let s0_steps_by_generator = variants
        .iter()
        .enumerate()
        .all(|(i, v)| v.generator.s0 == n.reduce(nn - 2 + i as i64 * step));
    let leading_tones_shift_invariant = shift_invariant_leading_tones(&valid, &variants)?;

    Ok(StructuralReport {
        n: nn,
        n_w,
        prime_form: prime,
        variants,
        variant2_ascending_is_top_note,
        variant1_descending_is_n_minus_2,
        variant1_unique_black_last_key,
        variant1_is_inverted_prime_class,
        variant1_max_white_is_n_minus_2,
        s0_steps_by_generator,
        leading_tones_shift_invariant,
    })
}

/// Rotating variant `a` onto variant `b` by the cyclic-equivalence offset
/// `d` must carry both leading tones along: `pos_b = (pos_a - d) mod n`.
fn shift_invariant_leading_tones(
    valid: &[KeyboardConfig],
    variants: &[VariantSummary],
) -> Result<bool> {
    let n = valid[0].modulus();
    for (a, va) in variants.iter().enumerate() {
        for (b, vb) in variants.iter().enumerate() {
            let d = ring::cyclic_equivalent(valid[a].bits(), valid[b].bits())?
                .ok_or_else(|| Error::InvalidConfig("variants not cyclically equivalent".into()))?;
            let d = d as i64;
            if vb.degrees.ascending_leading != n.reduce(va.degrees.ascending_leading - d)
                || vb.degrees.descending_leading != n.reduce(va.degrees.descending_leading - d)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The §4-style Axiom-II violation of the prime form: the first double
/// sharp in its `K_(n-2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeWitness {
    pub prime_form: Vec<i64>,
    /// Always `n - 2`: the tonic whose signature carries the +2.
    pub tonic: i64,
    /// 1-based position of the first +2 entry in `K_(n-2)`.
    pub index: usize,
    pub offsets: Vec<i64>,
    /// Whether the prime form itself is one of the valid variants
    /// (false except in the degenerate two-note case).
    pub prime_in_valid_set: bool,
}

/// Compute the prime form of the `(n, n_w)` white-set class, build its
/// canonical `K_(n-2)`, and locate the +2 entry that makes the prime form
/// violate Axiom II.
pub fn prime_axiom2_witness(n: Modulus, n_w: i64) -> Result<PrimeWitness> {
    let valid = config::enumerate_valid(n, n_w);
    if valid.is_empty() {
        return Err(Error::NoValidConfigs { n: n.get(), n_w });
    }
    let prime = prime_form(valid[0].white_set(), n);
    let prime_config = KeyboardConfig::from_white_set(n, &prime)?;
    let tonic = n.get() - 2;
    let sig = signature::key_signature_at(&prime_config, tonic, AliasMode::Canonical);
    let offsets = sig.offsets().to_vec();
    let index = offsets
        .iter()
        .position(|&e| e == 2)
        .ok_or(Error::DegeneratePrimeForm { n: n.get(), n_w })?
        + 1;
    let prime_in_valid_set = valid.iter().any(|c| c.white_set() == prime);
    Ok(PrimeWitness {
        prime_form: prime,
        tonic,
        index,
        offsets,
        prime_in_valid_set,
    })
}
