//! Rational generating functions: rigorous ones from the transfer matrix of
//! the 123 family, conjectural ones from recurrence fitting.

mod cfinite;
mod matrix;
mod poly;
mod rational_gf;
mod transfer;

pub use cfinite::{conjecture_from_series, conjecture_gf_1234, fit_cfinite, recurrence_to_gf, CFiniteFit};
pub use matrix::{bareiss_det, characteristic_polynomial};
pub use poly::{IntPoly, Poly, RatPoly};
pub use rational_gf::{GfRecord, GfStatus, RationalGF};
pub use transfer::{
    build_transfer_system, derive_gf_123, derive_gf_123_with_cap, TransferState, TransferSystem, DEFAULT_STATE_CAP,
};
