//! Exact enumeration of words on `[n]^r` (each of `n` letters used exactly
//! `r` times) avoiding the pattern pairs `{123, 1k(k-1)...2}` and
//! `{1234, 1k(k-1)...2}`, with a brute-force oracle and rational
//! generating-function derivation.
//!
//! The engines are generic over the count type ([`num::Count`]); the
//! aliases below fix it to arbitrary precision.

pub mod avoid123;
pub mod avoid1234;
pub mod avoid123_revk;
pub mod cli;
pub mod error;
pub mod genfunc;
pub mod num;
pub mod oracle;

pub use error::{Error, Result};
pub use genfunc::{IntPoly, RatPoly, RationalGF};

use num_bigint::BigUint;

/// Words avoiding 123 alone, any letter multiplicities.
pub type Engine123Only = avoid123::Avoid123Engine<BigUint>;
/// Words avoiding 123 and `1k(k-1)...2`.
pub type Engine123 = avoid123_revk::Avoid123RevKEngine<BigUint>;
/// Words avoiding 1234 and `1k(k-1)...2`.
pub type Engine1234 = avoid1234::Avoid1234Engine<BigUint>;
