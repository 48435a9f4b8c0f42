//! Scale sequences, key signatures, enharmonic alias modes, and
//! key-signature matrices.
//!
//! The scale of tonic `t` is `S_t = sorted((t + S_0) mod n)`; its key
//! signature is the elementwise difference `K_t = S_t - S_0` against the
//! canonical `S_0`. Entries are accidental offsets: +1 a sharp, -1 a flat,
//! +2 a double sharp. Offsets are kept signed and are never re-wrapped into
//! `[0, n-1]`.

use serde::Serialize;

use crate::config::{axiom_report, KeyboardConfig};
use crate::error::{Error, Result};
use crate::ring::PitchClass;

/// Residue-representative choice modelling enharmonic respelling.
///
/// Canonical picks representatives in `[0, n-1]`; `Plus` allows `n` as an
/// alias of 0 (representatives in `[1, n]`); `Minus` allows `-1` as an alias
/// of `n - 1` (representatives in `[-1, n-2]`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AliasMode {
    Canonical,
    Plus,
    Minus,
}

impl AliasMode {
    fn representative(self, residue: i64, n: i64) -> i64 {
        match self {
            AliasMode::Canonical => residue,
            AliasMode::Plus => {
                if residue == 0 {
                    n
                } else {
                    residue
                }
            }
            AliasMode::Minus => {
                if residue == n - 1 {
                    -1
                } else {
                    residue
                }
            }
        }
    }
}

/// A transposed scale: the sorted representatives of `t + S_0 (mod n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScaleSeq {
    pub tonic: PitchClass,
    pub notes: Vec<i64>,
    pub mode: AliasMode,
}

/// Per-degree accidental offsets of a tonic relative to `S_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeySignature {
    pub tonic: PitchClass,
    pub offsets: Vec<i64>,
    pub mode: AliasMode,
}

impl KeySignature {
    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    /// `‖K_t‖`: the sum of the offsets. Positive counts sharps, negative
    /// counts flats.
    pub fn norm(&self) -> i64 {
        self.offsets.iter().sum()
    }
}

/// The scale sequence `S_t` of `c` under the given alias mode.
///
/// The tonic must belong to the configuration's modulus.
pub fn scale_seq(c: &KeyboardConfig, tonic: PitchClass, mode: AliasMode) -> ScaleSeq {
    assert_eq!(
        tonic.modulus(),
        c.modulus(),
        "tonic modulus must match the configuration"
    );
    let n = c.n();
    let mut notes: Vec<i64> = c
        .white_set()
        .iter()
        .map(|&w| mode.representative(c.modulus().reduce(tonic.value() + w), n))
        .collect();
    notes.sort_unstable();
    ScaleSeq { tonic, notes, mode }
}

/// The key signature `K_t = S_t - S_0` (canonical `S_0`), elementwise.
pub fn key_signature(c: &KeyboardConfig, tonic: PitchClass, mode: AliasMode) -> KeySignature {
    let transposed = scale_seq(c, tonic, mode);
    let offsets = transposed
        .notes
        .iter()
        .zip(c.white_set())
        .map(|(s, s0)| s - s0)
        .collect();
    KeySignature {
        tonic,
        offsets,
        mode,
    }
}

/// [`key_signature`] with a raw tonic, reduced into the modulus.
pub fn key_signature_at(c: &KeyboardConfig, tonic: i64, mode: AliasMode) -> KeySignature {
    key_signature(c, PitchClass::from_residue(tonic, c.modulus()), mode)
}

/// The `n_w`-by-`n` matrix whose column `t` is the canonical `K_t`.
///
/// Only defined for configurations passing Axioms I-III (the capacity
/// argument needs single-sign columns).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignatureMatrix {
    n: i64,
    n_w: i64,
    /// Column-major: `columns[t]` is the canonical `K_t`.
    columns: Vec<Vec<i64>>,
}

/// Per-column norms of a signature matrix, with their extrema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColumnSums {
    pub sums: Vec<i64>,
    pub min: i64,
    pub max: i64,
}

impl SignatureMatrix {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn n_w(&self) -> i64 {
        self.n_w
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn column(&self, t: usize) -> &[i64] {
        &self.columns[t]
    }

    /// Row `r` (0-based degree index) across all tonics.
    pub fn row(&self, r: usize) -> Vec<i64> {
        self.columns.iter().map(|col| col[r]).collect()
    }

    /// `‖K_t‖` for every column, plus `(min, max)`.
    pub fn column_sums(&self) -> ColumnSums {
        let sums: Vec<i64> = self
            .columns
            .iter()
            .map(|col| col.iter().sum::<i64>())
            .collect();
        let min = *sums.iter().min().expect("matrix has at least one column");
        let max = *sums.iter().max().expect("matrix has at least one column");
        ColumnSums { sums, min, max }
    }
}

/// Build the key-signature matrix of an axiom-valid configuration.
pub fn signature_matrix(c: &KeyboardConfig) -> Result<SignatureMatrix> {
    let report = axiom_report(c);
    if let Some(axiom) = report.first_failure() {
        return Err(Error::AxiomViolation(axiom));
    }
    let columns = (0..c.n())
        .map(|t| key_signature_at(c, t, AliasMode::Canonical).offsets)
        .collect();
    Ok(SignatureMatrix {
        n: c.n(),
        n_w: c.n_white(),
        columns,
    })
}
