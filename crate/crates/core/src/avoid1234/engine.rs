use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::num::Count;

use super::ops::{fix, has_decreasing_run, reduce, remove};
use super::state::State1234;

/// What happens to the activated sequences that survive when a letter
/// larger than some live minimum is placed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SurvivorRule {
    /// Surviving sequences are kept unchanged. The placed letter is not
    /// recorded anywhere, so activated sequences never grow.
    Literal,
    /// The placed letter is appended to every surviving sequence, and the
    /// placement is rejected if a sequence gains a strictly decreasing run
    /// of length `k-1`.
    #[default]
    AppendAndCheck,
}

/// Length of the window of tracked letters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WindowRule {
    /// `6(k-2)+2`. Enough for permutations; for `r >= 2` up to `2r(k-2)+1`
    /// used-up minima can crowd the window and the engine reports an
    /// invariant violation instead of a count.
    Narrow,
    /// `(2r+4)(k-2)+2`: room for every live minimum, every activated letter
    /// and the `2(k-2)+1` candidates. Equal to `Narrow` when `r = 1`.
    #[default]
    Sufficient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config1234 {
    pub r: u8,
    pub k: usize,
    pub rule: SurvivorRule,
    pub window_rule: WindowRule,
    pub debug_invariants: bool,
}

impl Config1234 {
    pub fn new(r: u32, k: usize) -> Result<Self> {
        if r == 0 || r > u8::MAX as u32 {
            return Err(Error::Input(format!("r must be in 1..=255, got {r}")));
        }
        if k < 3 {
            return Err(Error::Input(format!("k must be >= 3, got {k}")));
        }
        if (2 * r as usize + 4) * (k - 2) + 2 > u8::MAX as usize {
            return Err(Error::Input(format!(
                "r = {r}, k = {k} is too large for the window encoding"
            )));
        }
        Ok(Config1234 {
            r: r as u8,
            k,
            rule: SurvivorRule::default(),
            window_rule: WindowRule::default(),
            debug_invariants: false,
        })
    }

    pub fn with_window_rule(mut self, window_rule: WindowRule) -> Self {
        self.window_rule = window_rule;
        self
    }

    pub fn with_rule(mut self, rule: SurvivorRule) -> Self {
        self.rule = rule;
        self
    }

    pub fn with_debug_invariants(mut self, on: bool) -> Self {
        self.debug_invariants = on;
        self
    }

    pub fn window(&self) -> usize {
        match self.window_rule {
            WindowRule::Narrow => 6 * (self.k - 2) + 2,
            WindowRule::Sufficient => (2 * self.r as usize + 4) * (self.k - 2) + 2,
        }
    }

    /// Most letters that can follow a new letter: `2(k-2)`.
    fn max_above(&self) -> usize {
        2 * (self.k - 2)
    }

    pub fn max_minima(&self) -> usize {
        2 * self.r as usize * (self.k - 2) + 1
    }

    pub fn max_sequence(&self) -> usize {
        2 * self.r as usize * (self.k - 2)
    }
}

#[derive(Debug)]
pub struct Avoid1234Engine<C: Count> {
    config: Config1234,
    memo: HashMap<State1234, C>,
    checks: u64,
}

impl<C: Count> Avoid1234Engine<C> {
    pub fn new(config: Config1234) -> Self {
        Avoid1234Engine {
            config,
            memo: HashMap::new(),
            checks: 0,
        }
    }

    pub fn config(&self) -> Config1234 {
        self.config
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn invariant_checks(&self) -> u64 {
        self.checks
    }

    pub fn memo(&self) -> &HashMap<State1234, C> {
        &self.memo
    }

    pub(crate) fn memo_mut(&mut self) -> &mut HashMap<State1234, C> {
        &mut self.memo
    }

    /// Takes over another engine's memo entries. Both must share `r` and `k`.
    pub fn absorb(&mut self, other: Avoid1234Engine<C>) -> Result<()> {
        let (a, b) = (self.config, other.config);
        if (a.r, a.k, a.window()) != (b.r, b.k, b.window()) {
            return Err(Error::Input(
                "cannot merge memo tables of different configurations".into(),
            ));
        }
        self.checks += other.checks;
        self.memo.extend(other.memo);
        Ok(())
    }

    /// Checks the structural invariants of a state, including the bounds
    /// `u <= 2r(k-2)+1` and `|S_i| <= 2r(k-2)`.
    pub fn validate(&self, s: &State1234) -> Result<()> {
        let cfg = &self.config;
        let t = cfg.window();
        if s.counts.len() != t {
            return Err(Error::Invariant(format!(
                "|L| = {} but the window is {t}",
                s.counts.len()
            )));
        }
        if let Some(&c) = s.counts.iter().find(|&&c| c > cfg.r) {
            return Err(Error::Invariant(format!("window entry {c} exceeds r = {}", cfg.r)));
        }
        if s.mins.len() != s.seqs.len() {
            return Err(Error::Invariant(format!(
                "|M| = {} but |S| = {}",
                s.mins.len(),
                s.seqs.len()
            )));
        }
        if s.mins.len() > cfg.max_minima() {
            return Err(Error::Invariant(format!(
                "u = {} exceeds {}",
                s.mins.len(),
                cfg.max_minima()
            )));
        }
        if let Some(q) = s.seqs.iter().find(|q| q.len() > cfg.max_sequence()) {
            return Err(Error::Invariant(format!(
                "|S_i| = {} exceeds {}",
                q.len(),
                cfg.max_sequence()
            )));
        }
        if s.mins.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Invariant(format!(
                "minima {:?} are not strictly decreasing",
                s.mins
            )));
        }
        let in_range = |x: &u8| (1..=t as u8).contains(x);
        if !s.mins.iter().all(in_range) || !s.seqs.iter().flatten().all(in_range) {
            return Err(Error::Invariant(format!("offset outside 1..={t} in {s}")));
        }
        Ok(())
    }

    /// `A(r, k, a, M, S, L)`: the number of ways to complete a partial word
    /// described by `state`.
    pub fn count_state(&mut self, state: &State1234) -> Result<C> {
        self.validate(state)?;
        self.count_rec(state)
    }

    fn count_rec(&mut self, s: &State1234) -> Result<C> {
        if s.is_terminal() {
            return Ok(C::one());
        }
        if let Some(v) = self.memo.get(s) {
            return Ok(v.clone());
        }
        if self.config.debug_invariants {
            self.checks += 1;
            self.validate(s)?;
        }
        let mut total = C::zero();
        for i in self.candidates(s)? {
            if let Some(next) = self.place(s, i)? {
                let sub = self.count_rec(&next)?;
                total = total.checked_add(&sub).ok_or(Error::Overflow)?;
            }
        }
        self.memo.insert(s.clone(), total.clone());
        Ok(total)
    }

    /// Offsets that may come next: the largest `2(k-2)+1` letters with
    /// copies remaining. A smaller letter would be followed by more than
    /// `2(k-2)` distinct larger letters, which forces 123 or `(k-1)...1` above it.
    fn candidates(&self, s: &State1234) -> Result<Vec<u8>> {
        let limit = self.config.max_above() + 1;
        let picked: Vec<u8> = (1..=s.counts.len())
            .rev()
            .filter(|&j| s.counts[j - 1] > 0)
            .take(limit)
            .map(|j| j as u8)
            .collect();
        // fresh letters below the window are never candidates
        if s.a > 0 && picked.len() < limit {
            return Err(Error::Invariant(format!(
                "window holds only {} available letters with a = {} in {s}",
                picked.len(),
                s.a
            )));
        }
        Ok(picked)
    }

    /// The state after placing offset `i`, or `None` if every completion
    /// would contain a forbidden pattern.
    fn place(&self, s: &State1234, i: u8) -> Result<Option<State1234>> {
        let cfg = &self.config;
        let u = s.mins.len();
        let mut mins;
        let mut seqs;
        if u == 0 || i <= s.mins[u - 1] {
            mins = s.mins.clone();
            seqs = s.seqs.clone();
            if u == 0 {
                mins.push(i);
                seqs.push(Vec::new());
            } else if i == s.mins[u - 1] {
                // another copy of the current minimum: it can start no pattern
                // that the earlier copy does not already start
            } else if s.seqs[u - 1].is_empty() {
                mins[u - 1] = i;
            } else {
                mins.push(i);
                seqs.push(Vec::new());
            }
        } else {
            let h = s.mins.iter().position(|&m| m < i).expect("i exceeds the last minimum");
            if let Some(&low) = s.seqs[0].iter().min() {
                let larger_left = s.counts[i as usize..].iter().any(|&c| c > 0);
                if i > low && larger_left {
                    return Ok(None);
                }
            }
            for j in 0..h {
                if has_decreasing_run(&fix(s.mins[j], &s.seqs[j], &s.counts), cfg.k - 1) {
                    return Ok(None);
                }
            }
            mins = s.mins[h..].to_vec();
            seqs = s.seqs[h..].to_vec();
            if cfg.rule == SurvivorRule::AppendAndCheck {
                for q in seqs.iter_mut() {
                    q.push(i);
                    if has_decreasing_run(q, cfg.k - 1) {
                        return Ok(None);
                    }
                }
            }
        }
        let mut counts = reduce(&s.counts, i)?;

        let t = counts.len() as u8;
        let dead: Vec<u8> = (1..=t)
            .filter(|&j| counts[j as usize - 1] == 0 && !mins.contains(&j) && !seqs.iter().any(|q| q.contains(&j)))
            .collect();
        for &j in &dead {
            remove(cfg.r, &mut mins, &mut seqs, &mut counts, j);
        }
        let a = if dead.len() <= s.a {
            s.a - dead.len()
        } else {
            // fewer fresh letters than slots: the excess bottom entries do not exist
            let mut missing = dead.len() - s.a;
            for c in counts.iter_mut() {
                if missing == 0 {
                    break;
                }
                if *c > 0 {
                    *c = 0;
                    missing -= 1;
                }
            }
            0
        };
        Ok(Some(State1234 { a, mins, seqs, counts }))
    }

    /// Starting state for words on `[n]^r`.
    pub fn initial_state(&self, n: usize) -> State1234 {
        let t = self.config.window();
        let r = self.config.r;
        if n >= t {
            State1234::new(n - t, Vec::new(), Vec::new(), vec![r; t])
        } else {
            let mut counts = vec![r; n];
            counts.resize(t, 0);
            State1234::new(0, Vec::new(), Vec::new(), counts)
        }
    }

    /// Words on `[n]^r` avoiding 1234 and `1k(k-1)...2`.
    pub fn count_words(&mut self, n: usize) -> Result<C> {
        if n == 0 {
            return Ok(C::one());
        }
        let s = self.initial_state(n);
        self.count_rec(&s)
    }

    /// `[count_words(0), ..., count_words(terms)]` from one memo table.
    pub fn series(&mut self, terms: usize) -> Result<Vec<C>> {
        (0..=terms).map(|n| self.count_words(n)).collect()
    }
}

pub fn count_words_1234<C: Count>(n: usize, r: u32, k: usize) -> Result<C> {
    Avoid1234Engine::new(Config1234::new(r, k)?).count_words(n)
}

pub fn series_1234<C: Count>(r: u32, k: usize, terms: usize) -> Result<Vec<C>> {
    Avoid1234Engine::new(Config1234::new(r, k)?).series(terms)
}
