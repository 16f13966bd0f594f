use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `(a, M, S, L)`: `a` untouched letters below the window, the live
/// left-to-right minima `M` (as window offsets, decreasing), one activated
/// sequence per minimum, and the remaining copies `L` of letters `a+1..=a+t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct State1234 {
    pub a: usize,
    pub mins: Vec<u8>,
    pub seqs: Vec<Vec<u8>>,
    pub counts: Vec<u8>,
}

impl State1234 {
    pub fn new(a: usize, mins: Vec<u8>, seqs: Vec<Vec<u8>>, counts: Vec<u8>) -> Self {
        State1234 { a, mins, seqs, counts }
    }

    pub fn is_terminal(&self) -> bool {
        self.a == 0 && self.counts.iter().all(|&c| c == 0)
    }

    /// Letters still to be placed.
    pub fn letters_left(&self, r: u8) -> usize {
        self.a * r as usize + self.counts.iter().map(|&c| c as usize).sum::<usize>()
    }
}

fn join(xs: &[u8]) -> String {
    xs.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
}

fn split(s: &str) -> Result<Vec<u8>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.parse::<u8>()
                .map_err(|e| Error::Cache(format!("bad list entry {x:?}: {e}")))
        })
        .collect()
}

/// Canonical text form `a|M|S|L`: lists comma-separated, sequences
/// semicolon-separated (one per minimum, so `|S|` is recovered from `|M|`).
impl fmt::Display for State1234 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seqs: Vec<String> = self.seqs.iter().map(|s| join(s)).collect();
        write!(
            f,
            "{}|{}|{}|{}",
            self.a,
            join(&self.mins),
            seqs.join(";"),
            join(&self.counts)
        )
    }
}

impl FromStr for State1234 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('|').collect();
        let [a, mins, seqs, counts] = parts[..] else {
            return Err(Error::Cache(format!("state key {s:?} does not have four fields")));
        };
        let a = a
            .parse::<usize>()
            .map_err(|e| Error::Cache(format!("bad a in {s:?}: {e}")))?;
        let mins = split(mins)?;
        let seqs = if mins.is_empty() {
            if !seqs.is_empty() {
                return Err(Error::Cache(format!("sequences without minima in {s:?}")));
            }
            Vec::new()
        } else {
            seqs.split(';').map(split).collect::<Result<Vec<_>>>()?
        };
        if seqs.len() != mins.len() {
            return Err(Error::Cache(format!("|S| != |M| in {s:?}")));
        }
        Ok(State1234 {
            a,
            mins,
            seqs,
            counts: split(counts)?,
        })
    }
}
