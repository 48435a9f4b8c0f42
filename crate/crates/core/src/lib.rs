//! Music theory for n-tone equal temperament, built on modular arithmetic.
//!
//! The octave is divided into `n` equal steps and a keyboard configuration
//! paints each step white or black (position 0 white, no adjacent blacks).
//! From that single choice the crate derives everything the classical
//! 12-tone system takes for granted — key signatures, the circle of fifths,
//! dominants and leading tones — and generalizes it to any `n`:
//!
//! - [`ring`]: exact modular arithmetic (gcd, modular inverses) and cyclic
//!   rotation/equivalence of bit patterns.
//! - [`config`]: configuration counting (`N_n = F_(n+1)`), enumeration, and
//!   the three axioms that cut 233 candidate 12-key layouts down to the
//!   familiar piano octave.
//! - [`signature`]: scale sequences, key signatures with enharmonic alias
//!   modes, norms, and key-signature matrices.
//! - [`theory`]: generating sequences, scale degrees, circle traversal,
//!   Forte prime forms, and variant nomenclature.
//! - [`evolution`]: the evolving-tonality ladder 5, 7, 12, 19, 31, ... and
//!   the universal perfect fifth/fourth constants it converges to.

pub mod config;
pub mod error;
pub mod evolution;
pub mod ring;
pub mod signature;
pub mod theory;

pub use config::KeyboardConfig;
pub use error::{Error, Result};
pub use ring::{Modulus, PitchClass};
