//! Words avoiding 123 with prescribed letter multiplicities.
//!
//! `A(L) = sum_i A([l_1, ..., l_{i-1}, l_i - 1, l_{i+1} + ... + l_n])`, `A([]) = 1`:
//! a word starting with `i` must list every larger letter in weakly decreasing
//! order, so all of them collapse onto a single letter `i + 1`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::num::Count;

/// Drops zero entries, preserving order.
pub fn remove_zeros(counts: &[u32]) -> Vec<u32> {
    counts.iter().copied().filter(|&c| c != 0).collect()
}

/// Memoized counter for 123-avoiding words.
#[derive(Debug, Default)]
pub struct Avoid123Engine<C: Count> {
    memo: HashMap<Vec<u32>, C>,
}

impl<C: Count> Avoid123Engine<C> {
    pub fn new() -> Self {
        Avoid123Engine { memo: HashMap::new() }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Number of 123-avoiding words using letter `i` exactly `counts[i-1]` times.
    pub fn count(&mut self, counts: &[u32]) -> Result<C> {
        let key = remove_zeros(counts);
        self.count_canonical(key)
    }

    /// 123-avoiding words on `[n]^r`.
    pub fn count_uniform(&mut self, n: usize, r: u32) -> Result<C> {
        if r == 0 {
            return Err(Error::Input("r must be >= 1".into()));
        }
        self.count(&vec![r; n])
    }

    fn count_canonical(&mut self, counts: Vec<u32>) -> Result<C> {
        if counts.is_empty() {
            return Ok(C::one());
        }
        if let Some(v) = self.memo.get(&counts) {
            return Ok(v.clone());
        }
        let mut total = C::zero();
        let mut tail: u32 = counts.iter().sum();
        for i in 0..counts.len() {
            tail -= counts[i];
            let mut next = Vec::with_capacity(i + 2);
            next.extend_from_slice(&counts[..i]);
            if counts[i] > 1 {
                next.push(counts[i] - 1);
            }
            if tail > 0 {
                next.push(tail);
            }
            let sub = self.count_canonical(next)?;
            total = total.checked_add(&sub).ok_or(Error::Overflow)?;
        }
        self.memo.insert(counts, total.clone());
        Ok(total)
    }
}

/// One-shot convenience wrapper.
pub fn count_avoid123<C: Count>(counts: &[u32]) -> Result<C> {
    Avoid123Engine::new().count(counts)
}

pub fn count_avoid123_uniform<C: Count>(n: usize, r: u32) -> Result<C> {
    Avoid123Engine::new().count_uniform(n, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::multinomial;
    use crate::oracle::{brute_count, OracleConfig, Pattern};
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn small_values() {
        assert_eq!(count_avoid123::<BigUint>(&[]).unwrap(), big(1));
        assert_eq!(count_avoid123::<BigUint>(&[2, 2]).unwrap(), big(6));
        assert_eq!(count_avoid123::<BigUint>(&[1, 1, 1]).unwrap(), big(5));
        assert_eq!(count_avoid123_uniform::<BigUint>(0, 3).unwrap(), big(1));
        assert_eq!(count_avoid123_uniform::<BigUint>(3, 1).unwrap(), big(5));
        assert_eq!(count_avoid123_uniform::<BigUint>(4, 1).unwrap(), big(14));
    }

    #[test]
    fn matches_oracle_on_222() {
        let p = [Pattern::increasing(3)];
        let brute: BigUint = brute_count(&[2, 2, 2], &p, OracleConfig::default()).unwrap();
        assert_eq!(count_avoid123::<BigUint>(&[2, 2, 2]).unwrap(), brute);
    }

    #[test]
    fn catalan_numbers() {
        // C_n computed independently as binom(2n, n) / (n + 1)
        for n in 0..=8usize {
            let catalan = multinomial(&[n, n]) / BigUint::from(n + 1);
            assert_eq!(count_avoid123_uniform::<BigUint>(n, 1).unwrap(), catalan, "n={n}");
        }
    }

    #[test]
    fn zero_insensitive() {
        let a: BigUint = count_avoid123(&[0, 2, 0, 1, 3, 0]).unwrap();
        let b: BigUint = count_avoid123(&[2, 1, 3]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn fixed_width_overflow_is_reported() {
        assert_eq!(count_avoid123_uniform::<u64>(40, 1), Err(Error::Overflow));
    }

    proptest! {
        #[test]
        fn oracle_equivalence(counts in prop::collection::vec(0u32..4, 0..6)) {
            let total: u32 = counts.iter().sum();
            prop_assume!(total <= 9);
            let usize_counts: Vec<usize> = counts.iter().map(|&c| c as usize).collect();
            let brute: BigUint = brute_count(&usize_counts, &[Pattern::increasing(3)], OracleConfig::default()).unwrap();
            prop_assert_eq!(count_avoid123::<BigUint>(&counts).unwrap(), brute);
        }

        #[test]
        fn two_letter_degeneracy(a in 0u32..8, b in 0u32..8) {
            let got: BigUint = count_avoid123(&[a, b]).unwrap();
            prop_assert_eq!(got, multinomial(&[a as usize, b as usize]));
        }
    }
}
