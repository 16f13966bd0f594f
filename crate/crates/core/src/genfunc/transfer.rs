//! Transfer matrix for the `{123, 1k(k-1)...2}` recurrence.
//!
//! With `a` taken large enough that the summation range never clamps, the
//! recurrence only looks at `(b, L)`, and each step consumes one letter. The
//! letter-graded state vector therefore obeys `v(N) = M v(N-1)` once `N`
//! clears the clamped region, which makes every component rational with
//! denominator dividing `det(I - xM)`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::matrix::characteristic_polynomial;
use super::poly::IntPoly;
use super::rational_gf::RationalGF;
use crate::avoid123::remove_zeros;
use crate::avoid123_revk::series_123;
use crate::error::{Error, Result};

pub const DEFAULT_STATE_CAP: usize = 2_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransferState {
    pub b: u32,
    pub tail: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct TransferSystem {
    pub r: u32,
    pub k: usize,
    /// States in discovery order; the seed `(r, [])` is first.
    pub states: Vec<TransferState>,
    /// `matrix[s][s']` = number of one-letter transitions from `s` to `s'`.
    pub matrix: Vec<Vec<u64>>,
}

impl TransferSystem {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn index_of(&self, s: &TransferState) -> Option<usize> {
        self.states.iter().position(|t| t == s)
    }

    /// `det(xI - M)`.
    pub fn characteristic_polynomial(&self) -> IntPoly {
        let m: Vec<Vec<BigInt>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        characteristic_polynomial(&m)
    }
}

fn successors(r: u32, k: usize, s: &TransferState) -> Vec<TransferState> {
    let t = s.tail.len();
    let mut out = Vec::new();
    if s.b >= 1 {
        out.push(TransferState {
            b: s.b - 1,
            tail: s.tail.clone(),
        });
    }
    if t >= 1 {
        let mut tail = s.tail.clone();
        tail[t - 1] -= 1;
        out.push(TransferState {
            b: s.b,
            tail: remove_zeros(&tail),
        });
    }
    if let Some(room) = (k - 2).checked_sub(t + usize::from(s.b >= 1)) {
        for d in 0..=room {
            let mut tail = vec![r; d];
            if s.b > 0 {
                tail.push(s.b);
            }
            tail.extend_from_slice(&s.tail);
            out.push(TransferState { b: r - 1, tail });
        }
    }
    out
}

/// Closure of the seed `(r, [])` under the unclamped transitions.
pub fn build_transfer_system(r: u32, k: usize, cap: usize) -> Result<TransferSystem> {
    if r == 0 || k < 3 {
        return Err(Error::Input(format!("need r >= 1 and k >= 3, got r={r}, k={k}")));
    }
    let seed = TransferState { b: r, tail: Vec::new() };
    let mut index: HashMap<TransferState, usize> = HashMap::from([(seed.clone(), 0)]);
    let mut states = vec![seed];
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    while next < states.len() {
        let mut row = Vec::new();
        for succ in successors(r, k, &states[next]) {
            let id = match index.get(&succ) {
                Some(&id) => id,
                None => {
                    if states.len() == cap {
                        return Err(Error::Resource(format!(
                            "transfer system for r={r}, k={k} exceeds {cap} states"
                        )));
                    }
                    index.insert(succ.clone(), states.len());
                    states.push(succ);
                    states.len() - 1
                }
            };
            row.push(id);
        }
        edges.push(row);
        next += 1;
    }
    let n = states.len();
    let mut matrix = vec![vec![0u64; n]; n];
    for (i, row) in edges.iter().enumerate() {
        for &j in row {
            matrix[i][j] += 1;
        }
    }
    Ok(TransferSystem { r, k, states, matrix })
}

/// Rigorous generating function `sum_n count(n) x^n` for the 123 family.
pub fn derive_gf_123(r: u32, k: usize) -> Result<RationalGF> {
    derive_gf_123_with_cap(r, k, DEFAULT_STATE_CAP)
}

pub fn derive_gf_123_with_cap(r: u32, k: usize, cap: usize) -> Result<RationalGF> {
    let system = build_transfer_system(r, k, cap)?;
    let m = system.len();
    // det(I - xM) is the reversal of det(xI - M); constant term 1
    let den = system.characteristic_polynomial().reversed(m);
    let den_deg = den.degree().unwrap_or(0);

    let rr = r as usize;
    // past 2r(k-1) letters every reachable state has a >= k-1, so nothing clamps
    let clamp = 2 * rr * (k - 1);
    let num_bound = clamp + m;
    let len = num_bound + 1 + den_deg + 2;
    let alphabet = len.div_ceil(rr);
    let counts: Vec<BigUint> = series_123(r, k, alphabet)?;
    let mut letter_series = vec![BigInt::zero(); alphabet * rr + 1];
    for (n, c) in counts.into_iter().enumerate() {
        letter_series[n * rr] = BigInt::from(c);
    }
    let series = IntPoly::new(letter_series);
    let product = series.mul_truncated(&den, len);
    if let Some(bad) = (num_bound + 1..len).find(|&i| !product.coeff(i).is_zero()) {
        return Err(Error::Invariant(format!(
            "guard coefficient {bad} of series * denominator is nonzero for r={r}, k={k}"
        )));
    }
    let num = product.truncate(num_bound + 1);

    let reduced = RationalGF::new(num, den)?.canonical();
    let (Some(n), Some(d)) = (reduced.numerator().compress(rr), reduced.denominator().compress(rr)) else {
        return Err(Error::Invariant(format!(
            "generating function for r={r}, k={k} is not a series in x^{r}"
        )));
    };
    Ok(RationalGF::new(n, d)?.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::avoid123::count_avoid123_uniform;
    use num_traits::One;
    use proptest::prelude::*;

    fn big_series(r: u32, k: usize, n: usize) -> Vec<BigInt> {
        series_123::<BigUint>(r, k, n)
            .unwrap()
            .into_iter()
            .map(BigInt::from)
            .collect()
    }

    #[test]
    fn permutations_k3() {
        let sys = build_transfer_system(1, 3, 100).unwrap();
        let zero_tail = |b| TransferState { b, tail: vec![] };
        assert_eq!(sys.states[0], zero_tail(1));
        assert!(sys.index_of(&zero_tail(0)).is_some());
        assert!(sys.states.iter().any(|s| s.tail.len() == 1));
        let gf = derive_gf_123(1, 3).unwrap();
        assert_eq!(gf, RationalGF::from_i64(&[1, -1], &[1, -2]).unwrap());
    }

    #[test]
    fn every_state_has_a_transition() {
        for (r, k) in [(1, 3), (1, 5), (2, 3), (2, 4), (3, 4)] {
            let sys = build_transfer_system(r, k, 1000).unwrap();
            assert_eq!(sys.matrix.len(), sys.len());
            for (s, row) in sys.states.iter().zip(&sys.matrix) {
                assert!(row.iter().sum::<u64>() >= 1, "{s:?} has no transition");
            }
            let bound: usize = (r as usize + 1) * (0..=k - 2).map(|t| (r as usize).pow(t as u32)).sum::<usize>();
            assert!(sys.len() <= bound);
        }
    }

    #[test]
    fn characteristic_polynomial_is_monic_of_full_degree() {
        let sys = build_transfer_system(2, 4, 1000).unwrap();
        let cp = sys.characteristic_polynomial();
        assert_eq!(cp.degree(), Some(sys.len()));
        assert!(cp.leading().unwrap().is_one());
    }

    #[test]
    fn state_cap_is_a_resource_error() {
        assert!(matches!(build_transfer_system(3, 6, 10), Err(Error::Resource(_))));
        assert!(matches!(derive_gf_123_with_cap(3, 6, 10), Err(Error::Resource(_))));
    }

    #[test]
    fn large_k_gives_catalan_prefix() {
        let gf = derive_gf_123(1, 9).unwrap();
        let cat = [1u64, 1, 2, 5, 14, 42, 132, 429];
        let got = gf.expand_series(7).unwrap();
        assert_eq!(got, cat.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>());
    }

    #[test]
    fn repeated_letters_self_consistent() {
        let gf = derive_gf_123(2, 3).unwrap();
        assert_eq!(gf.expand_series(25).unwrap(), big_series(2, 3, 25));
    }

    #[test]
    fn large_k_repeated_letters_match_single_pattern() {
        // k beyond the alphabet: only 123 matters
        let gf = derive_gf_123(2, 5).unwrap();
        let got = gf.expand_series(4).unwrap();
        for (n, v) in got.iter().enumerate() {
            let plain: BigUint = count_avoid123_uniform(n, 2).unwrap();
            assert_eq!(*v, BigInt::from(plain));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]
        #[test]
        fn derived_gf_matches_engine((r, k) in prop::sample::select(vec![(1u32, 3usize), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)])) {
            let sys = build_transfer_system(r, k, DEFAULT_STATE_CAP).unwrap();
            let n = 25.max(2 * sys.len());
            let gf = derive_gf_123(r, k).unwrap();
            prop_assert_eq!(gf.expand_series(n).unwrap(), big_series(r, k, n));
        }
    }
}
