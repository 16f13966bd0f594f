//! Fraction-free determinants.

use num_bigint::BigInt;

use super::poly::{IntPoly, Poly};
use crate::num::IntegralDomain;

/// Determinant by Bareiss elimination. Every division is exact, so this works
/// over any integral domain with [`crate::num::ExactDiv`], including `Z[x]`.
pub fn bareiss_det<T: IntegralDomain>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return T::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num.exact_div(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det(xI - M)` for an integer matrix.
pub fn characteristic_polynomial(m: &[Vec<BigInt>]) -> IntPoly {
    let n = m.len();
    let shifted: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let entry = Poly::constant(-m[i][j].clone());
                    if i == j {
                        entry + Poly::x()
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();
    bareiss_det(shifted)
}
