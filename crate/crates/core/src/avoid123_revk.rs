//! Words on `[n]^r` avoiding both 123 and `1k(k-1)...2`.
//!
//! `A(r, a, b, L)` counts words with `r` copies of `1..=a`, `b` copies of
//! `a+1` and `L[i]` copies of `a+1+i` that avoid both patterns even after
//! `a+1` is prepended. The first letter of such a word is either `a+1`, the
//! largest tracked letter `a+1+t`, or some `i <= a` that leaves at most
//! `k-2` distinct larger letters behind it.

use std::collections::HashMap;

use crate::avoid123::remove_zeros;
use crate::error::{Error, Result};
use crate::num::Count;

/// Memo key: `a` untouched letters, `b` copies of `a+1`, canonical tail.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct State123 {
    pub a: usize,
    pub b: u32,
    pub tail: Vec<u32>,
}

impl State123 {
    pub fn new(a: usize, b: u32, tail: Vec<u32>) -> Self {
        State123 { a, b, tail }
    }
}

/// Lower end of the summation over first letters `i <= a`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SumRange {
    /// `i >= a - (k-2) + t + 1` regardless of `b`.
    PlusOne,
    /// `i >= a - (k-2) + t + [b >= 1]`: exactly the `i` that leave at most
    /// `k-2` distinct larger letters. Agrees with `PlusOne` whenever `b >= 1`.
    #[default]
    Tight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config123 {
    pub r: u32,
    pub k: usize,
    pub range: SumRange,
    pub debug_invariants: bool,
}

impl Config123 {
    pub fn new(r: u32, k: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::Input("r must be >= 1".into()));
        }
        if k < 3 {
            return Err(Error::Input(format!("k must be >= 3, got {k}")));
        }
        Ok(Config123 {
            r,
            k,
            range: SumRange::Tight,
            debug_invariants: false,
        })
    }

    pub fn with_range(mut self, range: SumRange) -> Self {
        self.range = range;
        self
    }

    pub fn with_debug_invariants(mut self, on: bool) -> Self {
        self.debug_invariants = on;
        self
    }
}

#[derive(Debug)]
pub struct Avoid123RevKEngine<C: Count> {
    config: Config123,
    memo: HashMap<State123, C>,
    checks: u64,
}

impl<C: Count> Avoid123RevKEngine<C> {
    pub fn new(config: Config123) -> Self {
        Avoid123RevKEngine {
            config,
            memo: HashMap::new(),
            checks: 0,
        }
    }

    pub fn config(&self) -> Config123 {
        self.config
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Number of states whose invariants were checked (only with `debug_invariants`).
    pub fn invariant_checks(&self) -> u64 {
        self.checks
    }

    fn validate(&mut self, s: &State123) -> Result<()> {
        let Config123 { r, k, .. } = self.config;
        if s.b > r {
            return Err(Error::Invariant(format!("b = {} exceeds r = {r}", s.b)));
        }
        if s.tail.len() > k - 2 {
            return Err(Error::Invariant(format!(
                "|L| = {} exceeds k-2 = {}",
                s.tail.len(),
                k - 2
            )));
        }
        if let Some(&bad) = s.tail.iter().find(|&&l| l == 0 || l > r) {
            return Err(Error::Invariant(format!("tail entry {bad} outside 1..={r}")));
        }
        Ok(())
    }

    /// `A(r, a, b, L)` for this engine's `r` and `k`.
    pub fn count_state(&mut self, state: &State123) -> Result<C> {
        self.validate(state)?;
        self.count_rec(state.clone())
    }

    fn count_rec(&mut self, s: State123) -> Result<C> {
        if s.a == 0 && s.b == 0 && s.tail.is_empty() {
            return Ok(C::one());
        }
        if let Some(v) = self.memo.get(&s) {
            return Ok(v.clone());
        }
        if self.config.debug_invariants {
            self.checks += 1;
            self.validate(&s)?;
        }
        let Config123 { r, k, range, .. } = self.config;
        let t = s.tail.len();
        let b_present = usize::from(s.b >= 1);
        let slack = match range {
            SumRange::PlusOne => 1,
            SumRange::Tight => b_present,
        };
        // i >= a - (k-2) + t + slack, and letters below 1 do not exist
        let lower = (s.a + t + slack).saturating_sub(k - 2).max(1);

        let mut total = C::zero();
        for i in lower..=s.a {
            let mut tail = vec![r; s.a - i];
            if s.b > 0 {
                tail.push(s.b);
            }
            tail.extend_from_slice(&s.tail);
            let sub = self.count_rec(State123::new(i - 1, r - 1, tail))?;
            total = total.checked_add(&sub).ok_or(Error::Overflow)?;
        }
        if s.b >= 1 {
            let sub = self.count_rec(State123::new(s.a, s.b - 1, s.tail.clone()))?;
            total = total.checked_add(&sub).ok_or(Error::Overflow)?;
        }
        if t >= 1 {
            let mut tail = s.tail.clone();
            tail[t - 1] -= 1;
            let sub = self.count_rec(State123::new(s.a, s.b, remove_zeros(&tail)))?;
            total = total.checked_add(&sub).ok_or(Error::Overflow)?;
        }
        self.memo.insert(s, total.clone());
        Ok(total)
    }

    /// Words on `[n]^r` avoiding 123 and `1k(k-1)...2`.
    ///
    /// Starts from `A(r, n-1, r, [])`: prepending the maximal letter `n` can
    /// create neither pattern, so the prepend condition is vacuous.
    pub fn count_words(&mut self, n: usize) -> Result<C> {
        if n == 0 {
            return Ok(C::one());
        }
        self.count_rec(State123::new(n - 1, self.config.r, Vec::new()))
    }

    /// `[count_words(0), ..., count_words(terms)]` from one memo table.
    pub fn series(&mut self, terms: usize) -> Result<Vec<C>> {
        (0..=terms).map(|n| self.count_words(n)).collect()
    }
}

pub fn count_words_123<C: Count>(n: usize, r: u32, k: usize) -> Result<C> {
    Avoid123RevKEngine::new(Config123::new(r, k)?).count_words(n)
}

pub fn series_123<C: Count>(r: u32, k: usize, terms: usize) -> Result<Vec<C>> {
    Avoid123RevKEngine::new(Config123::new(r, k)?).series(terms)
}
