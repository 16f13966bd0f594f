//! Ground-truth pattern containment and exhaustive enumeration of multiset words.
//!
//! Everything here is deliberately naive: it is the reference the engines are
//! checked against, so it only runs at small sizes guarded by [`OracleConfig`].

use std::fmt;

use crate::error::{Error, Result};
use crate::num::Count;

/// A word over the positive integers. Letters may repeat.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Input("word letters must be >= 1".into()));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// A permutation pattern: the letters are exactly `1..=len` in some order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern(Vec<u32>);

impl Pattern {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let k = letters.len();
        let mut seen = vec![false; k + 1];
        for &l in &letters {
            let idx = l as usize;
            if idx == 0 || idx > k || seen[idx] {
                return Err(Error::Input(format!("{letters:?} is not a permutation of 1..={k}")));
            }
            seen[idx] = true;
        }
        Ok(Pattern(letters))
    }

    /// Parses a digit string such as `"1432"`.
    pub fn parse(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Input(format!("bad pattern digit {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Pattern::new(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `12...m`.
    pub fn increasing(m: usize) -> Self {
        Pattern((1..=m as u32).collect())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The pattern `1 k (k-1) ... 2`.
pub fn rev_k_pattern(k: usize) -> Result<Pattern> {
    if k < 3 {
        return Err(Error::Input(format!("k must be >= 3, got {k}")));
    }
    let mut letters = vec![1u32];
    letters.extend((2..=k as u32).rev());
    Ok(Pattern(letters))
}

/// True iff some subsequence of `word` is order-isomorphic to `pattern`.
///
/// Both `<` and `>` are strict, so two equal letters never match two
/// (necessarily distinct) pattern values.
pub fn contains(word: &[u32], pattern: &Pattern) -> bool {
    let p = pattern.letters();
    if p.is_empty() {
        return true;
    }
    if p.len() > word.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(p.len());
    extend_match(word, p, 0, &mut chosen, false)
}

/// Is there an occurrence of `pattern` that uses the last letter of `word`?
pub fn contains_ending_at_last(word: &[u32], pattern: &Pattern) -> bool {
    let p = pattern.letters();
    if p.is_empty() || p.len() > word.len() {
        return p.is_empty();
    }
    let mut chosen = Vec::with_capacity(p.len());
    extend_match(word, p, 0, &mut chosen, true)
}

fn extend_match(word: &[u32], p: &[u32], from: usize, chosen: &mut Vec<u32>, anchored: bool) -> bool {
    let depth = chosen.len();
    if depth == p.len() {
        return true;
    }
    let still_needed = p.len() - depth;
    // anchored: the last pattern letter must land on the last word letter
    let start = if anchored && still_needed == 1 {
        word.len() - 1
    } else {
        from
    };
    for pos in start..=word.len() - still_needed {
        let w = word[pos];
        let consistent = chosen.iter().zip(p).all(|(&cw, &cp)| {
            let pv = p[depth];
            (cw < w) == (cp < pv) && (cw > w) == (cp > pv)
        });
        if consistent {
            chosen.push(w);
            if extend_match(word, p, pos + 1, chosen, anchored) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Avoids every pattern in `patterns`.
pub fn avoids_all(word: &[u32], patterns: &[Pattern]) -> bool {
    patterns.iter().all(|p| !contains(word, p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Refuse to enumerate words longer than this.
    pub max_letters: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_letters: 12 }
    }
}

/// Lexicographic iterator over the distinct arrangements of a multiset.
#[derive(Clone, Debug)]
pub struct MultisetWords {
    current: Vec<u32>,
    done: bool,
}

impl Iterator for MultisetWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let out = Word(self.current.clone());
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn multiset_word(counts: &[usize]) -> Vec<u32> {
    counts
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(i as u32 + 1, c))
        .collect()
}

/// Every word using letter `i` exactly `counts[i-1]` times, in lexicographic order.
pub fn enumerate_words(counts: &[usize], config: OracleConfig) -> Result<MultisetWords> {
    let letters: usize = counts.iter().sum();
    if letters > config.max_letters {
        return Err(Error::OracleLimit {
            letters,
            limit: config.max_letters,
        });
    }
    Ok(MultisetWords {
        current: multiset_word(counts),
        done: false,
    })
}

/// Number of words with letter multiplicities `counts` avoiding every pattern.
pub fn brute_count<C: Count>(counts: &[usize], patterns: &[Pattern], config: OracleConfig) -> Result<C> {
    let mut total = C::zero();
    for w in enumerate_words(counts, config)? {
        if avoids_all(w.letters(), patterns) {
            total = total.checked_add(&C::one()).ok_or(Error::Overflow)?;
        }
    }
    Ok(total)
}

/// Number of ways to extend `prefix` by the multiset `remaining` (letter `i`
/// used `remaining[i-1]` more times) so that the full word avoids every pattern.
///
/// Depth-first with pruning on the prefix: containment is monotone under
/// extension, so a prefix that already contains a pattern is abandoned.
pub fn count_completions<C: Count>(prefix: &[u32], remaining: &[usize], patterns: &[Pattern]) -> Result<C> {
    let mut word = prefix.to_vec();
    let mut rem = remaining.to_vec();
    if !avoids_all(&word, patterns) {
        return Ok(C::zero());
    }
    completions_rec(&mut word, &mut rem, patterns)
}

fn completions_rec<C: Count>(word: &mut Vec<u32>, rem: &mut [usize], patterns: &[Pattern]) -> Result<C> {
    if rem.iter().all(|&c| c == 0) {
        return Ok(C::one());
    }
    let mut total = C::zero();
    for idx in 0..rem.len() {
        if rem[idx] == 0 {
            continue;
        }
        rem[idx] -= 1;
        word.push(idx as u32 + 1);
        if !patterns.iter().any(|p| contains_ending_at_last(word, p)) {
            let sub: C = completions_rec(word, rem, patterns)?;
            total = total.checked_add(&sub).ok_or(Error::Overflow)?;
        }
        word.pop();
        rem[idx] += 1;
    }
    Ok(total)
}
