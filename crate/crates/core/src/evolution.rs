//! The evolving-tonality ladder: each keyboard spawns the next via
//! `(n_w, n_b) -> (n_w + n_b, n_w)`, giving system sizes
//! `W_k = 2, 5, 7, 12, 19, 31, 50, ...` (`W_(k+2) = W_(k+1) + W_k`).
//!
//! For each rung, `V_k = W_k^{-1} mod W_(k+1)` is the dominant of the
//! `W_(k+1)`-tone system and `U_k` the quotient in
//! `W_k * V_k = U_k * W_(k+1) + 1`. The dominant-to-tonic frequency ratio
//! `2^(V_k / W_(k+1))` alternates between two attractors whose product is
//! exactly 2. All table arithmetic is exact in `i64` (sound through k ≈ 80);
//! the golden-ratio closed forms are a floating cross-check only.

use serde::Serialize;

use crate::error::Result;
use crate::ring::{mod_inverse, Modulus};

/// `W_0 = W_2 - W_1`, occasionally useful as a seed.
pub const W0: i64 = 3;

/// First two system sizes: a 2-tone system with white scale inside a
/// 5-tone one.
pub const W1: i64 = 2;
pub const W2: i64 = 5;

/// One rung of the evolution: system size, its inverse in the next system,
/// and the quotient tying them together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EvolutionRow {
    pub k: usize,
    pub w: i64,
    pub v: i64,
    pub u: i64,
}

/// One evolution step: the old chromatic total becomes the new white count.
pub fn evolve_pair(n_w: i64, n_b: i64) -> (i64, i64) {
    (n_w + n_b, n_w)
}

/// Rows `k = 1..=rows` of the evolution table. `W` by the recurrence, `V`
/// by modular inversion, `U` exactly from the identity
/// `W_k * V_k = U_k * W_(k+1) + 1`.
pub fn evolution_table(rows: usize) -> Vec<EvolutionRow> {
    let mut out = Vec::with_capacity(rows);
    let (mut w, mut w_next) = (W1, W2);
    for k in 1..=rows {
        let modulus = Modulus::new(w_next).expect("W_k+1 >= 1");
        let v = mod_inverse(w, modulus).expect("consecutive W are coprime");
        let u = (w * v - 1) / w_next;
        debug_assert_eq!(w * v - u * w_next, 1);
        out.push(EvolutionRow { k, w, v, u });
        (w, w_next) = (w_next, w + w_next);
    }
    out
}

const SQRT5: f64 = 2.236067977499789696;
const PHI: f64 = (1.0 + SQRT5) / 2.0;
const PSI: f64 = (1.0 - SQRT5) / 2.0;

/// Closed form `W_k = phi^k (15+sqrt5)/10 + psi^k (15-sqrt5)/10`.
pub fn closed_form_w(k: u32) -> f64 {
    PHI.powi(k as i32) * (15.0 + SQRT5) / 10.0 + PSI.powi(k as i32) * (15.0 - SQRT5) / 10.0
}

/// Closed form for `V_k`, split by parity:
/// `V_(2m-1) = phi^2m + psi^2m` and
/// `V_2m = phi^2m (5+3 sqrt5)/10 + psi^2m (5-3 sqrt5)/10`.
pub fn closed_form_v(k: u32) -> f64 {
    if k % 2 == 1 {
        let e = (k + 1) as i32;
        PHI.powi(e) + PSI.powi(e)
    } else {
        let e = k as i32;
        PHI.powi(e) * (5.0 + 3.0 * SQRT5) / 10.0 + PSI.powi(e) * (5.0 - 3.0 * SQRT5) / 10.0
    }
}

/// The two limits of the dominant-to-tonic ratio along the evolution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AttractorConstants {
    /// `2^((15 - sqrt5)/22)`: the universal perfect fifth constant.
    pub fifth: f64,
    /// `2^((7 + sqrt5)/22)`: the universal perfect fourth constant.
    pub fourth: f64,
}

impl AttractorConstants {
    /// Exactly 2 in exact arithmetic (the exponents sum to 1).
    pub fn product(&self) -> f64 {
        self.fifth * self.fourth
    }
}

pub fn attractor_constants() -> AttractorConstants {
    AttractorConstants {
        fifth: ((15.0 - SQRT5) / 22.0).exp2(),
        fourth: ((7.0 + SQRT5) / 22.0).exp2(),
    }
}

/// One row of the frequency-ratio tables: the dominant `n_w^{-1}` and its
/// ratio to the tonic, `2^(dominant/n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioRow {
    pub n: i64,
    pub n_w: i64,
    pub n_b: i64,
    pub dominant: i64,
    pub ratio: f64,
}

pub fn ratio_row(n: Modulus, n_w: i64) -> Result<RatioRow> {
    let dominant = mod_inverse(n_w, n)?;
    Ok(RatioRow {
        n: n.get(),
        n_w,
        n_b: n.get() - n_w,
        dominant,
        ratio: (dominant as f64 / n.get() as f64).exp2(),
    })
}

/// Which constant a convergence row is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Attractor {
    Fifth,
    Fourth,
}

/// Deviation of `2^(V_k / W_(k+1))` from its attractor: odd rows chase the
/// fifth constant, even rows the fourth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub k: usize,
    /// The system in which `V_k` is the dominant, `W_(k+1)`.
    pub system: i64,
    pub ratio: f64,
    pub attractor: Attractor,
    pub deviation: f64,
}

pub fn convergence_report(rows: usize) -> Vec<ConvergenceRow> {
    let constants = attractor_constants();
    let mut out = Vec::with_capacity(rows);
    let (mut w, mut w_next) = (W1, W2);
    for row in evolution_table(rows) {
        debug_assert_eq!(row.w, w);
        let ratio = (row.v as f64 / w_next as f64).exp2();
        let (attractor, target) = if row.k % 2 == 1 {
            (Attractor::Fifth, constants.fifth)
        } else {
            (Attractor::Fourth, constants.fourth)
        };
        out.push(ConvergenceRow {
            k: row.k,
            system: w_next,
            ratio,
            attractor,
            deviation: ratio - target,
        });
        (w, w_next) = (w_next, w + w_next);
    }
    out
}
