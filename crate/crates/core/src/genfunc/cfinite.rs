//! Guessing linear recurrences with constant coefficients.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::RatPoly;
use super::rational_gf::RationalGF;
use crate::avoid1234::series_1234;
use crate::error::{Error, Result};

/// A fitted recurrence `a(n) = c_1 a(n-1) + ... + c_d a(n-d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFiniteFit {
    pub order: usize,
    pub coeffs: Vec<BigRational>,
}

/// Smallest order `d <= max_order` whose recurrence holds at every
/// `n in d..seq.len()`, with at least two equations beyond the `d` needed
/// to pin the coefficients down.
pub fn fit_cfinite(seq: &[BigInt], max_order: usize) -> Result<Option<CFiniteFit>> {
    if seq.len() < 2 * max_order + 2 {
        return Err(Error::Input(format!(
            "{} terms cannot certify order {max_order}; need {}",
            seq.len(),
            2 * max_order + 2
        )));
    }
    for d in 1..=max_order {
        if seq.len() < 2 * d + 2 {
            break;
        }
        if let Some(coeffs) = solve_order(seq, d) {
            return Ok(Some(CFiniteFit { order: d, coeffs }));
        }
    }
    Ok(None)
}

/// Exact elimination on the full overdetermined system for order `d`.
fn solve_order(seq: &[BigInt], d: usize) -> Option<Vec<BigRational>> {
    let q = |i: usize| BigRational::from_integer(seq[i].clone());
    let mut rows: Vec<Vec<BigRational>> = (d..seq.len())
        .map(|n| (1..=d).map(|j| q(n - j)).chain(std::iter::once(q(n))).collect())
        .collect();

    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..d {
        let Some(p) = (row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let inv = rows[row][col].recip();
        for v in rows[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[row].clone();
        for (i, other) in rows.iter_mut().enumerate() {
            if i != row && !other[col].is_zero() {
                let f = other[col].clone();
                for (x, p) in other.iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    // any leftover row must read 0 = 0
    if rows[row..].iter().any(|r| !r[d].is_zero()) {
        return None;
    }
    let mut coeffs = vec![BigRational::zero(); d];
    for (i, &col) in pivots.iter().enumerate() {
        coeffs[col] = rows[i][d].clone();
    }
    Some(coeffs)
}

/// `N(x)/D(x)` with `D = 1 - sum c_j x^j` and `N = (terms * D) mod x^d`.
///
/// Terms beyond the first `d` must satisfy the recurrence.
pub fn recurrence_to_gf(coeffs: &[BigRational], initial_terms: &[BigInt]) -> Result<RationalGF> {
    let d = coeffs.len();
    if initial_terms.len() < d {
        return Err(Error::Input(format!(
            "order {d} needs {d} initial terms, got {}",
            initial_terms.len()
        )));
    }
    let mut den = vec![BigRational::one()];
    den.extend(coeffs.iter().map(|c| -c.clone()));
    let den = RatPoly::new(den);
    let series = RatPoly::new(
        initial_terms
            .iter()
            .map(|t| BigRational::from_integer(t.clone()))
            .collect(),
    );
    let full = series.mul_truncated(&den, initial_terms.len());
    if full.coeffs().iter().skip(d).any(|c| !c.is_zero()) {
        return Err(Error::Data("initial terms do not satisfy the recurrence".into()));
    }
    let num = full.truncate(d);
    // numerator and denominator over a common integer scale
    let (n_int, n_scale) = num.clear_denominators();
    let (d_int, d_scale) = den.clear_denominators();
    let l = num_integer::Integer::lcm(&n_scale, &d_scale);
    let gf = RationalGF::new(n_int.scale(&(&l / &n_scale)), d_int.scale(&(&l / &d_scale)))?;
    Ok(gf.canonical())
}

/// Fits the alphabet-indexed 1234-family series `a(0..=terms)` and converts
/// the fit to a generating function. The result is a conjecture.
pub fn conjecture_gf_1234(r: u32, k: usize, terms: usize) -> Result<Option<RationalGF>> {
    let series: Vec<BigUint> = series_1234(r, k, terms)?;
    let seq: Vec<BigInt> = series.into_iter().map(BigInt::from).collect();
    conjecture_from_series(&seq)
}

/// Fit with the largest order the guard rule allows for this many terms.
pub fn conjecture_from_series(seq: &[BigInt]) -> Result<Option<RationalGF>> {
    let max_order = seq.len().saturating_sub(2) / 2;
    match fit_cfinite(seq, max_order)? {
        Some(fit) => recurrence_to_gf(&fit.coeffs, &seq[..fit.order]).map(Some),
        None => Ok(None),
    }
}
