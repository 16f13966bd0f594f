//! Fix / Reduce / Remove on window offsets, plus the decreasing-run test.
//!
//! Offsets are 1-based positions in the window `L`, so offset `j` stands
//! for letter `a + j`.

use crate::error::{Error, Result};

/// `seq` followed by every offset `j > m`, each repeated `counts[j-1]` times,
/// in decreasing order of `j`.
pub fn fix(m: u8, seq: &[u8], counts: &[u8]) -> Vec<u8> {
    let mut out = seq.to_vec();
    for j in (m as usize + 1..=counts.len()).rev() {
        out.extend(std::iter::repeat_n(j as u8, counts[j - 1] as usize));
    }
    out
}

/// `counts` with entry `i` decremented.
pub fn reduce(counts: &[u8], i: u8) -> Result<Vec<u8>> {
    let mut out = counts.to_vec();
    match out.get_mut(i as usize - 1) {
        Some(c) if *c > 0 => {
            *c -= 1;
            Ok(out)
        }
        _ => Err(Error::Invariant(format!("reduce at offset {i} with nothing remaining"))),
    }
}

/// Drops window entry `i`, shifts offsets below `i` up by one and brings a
/// fresh letter with `r` copies in at the bottom.
pub fn remove(r: u8, mins: &mut [u8], seqs: &mut [Vec<u8>], counts: &mut Vec<u8>, i: u8) {
    for m in mins.iter_mut() {
        if *m < i {
            *m += 1;
        }
    }
    for s in seqs.iter_mut() {
        for x in s.iter_mut() {
            if *x < i {
                *x += 1;
            }
        }
    }
    counts.remove(i as usize - 1);
    counts.insert(0, r);
}

/// Owned variant of [`remove`] returning the new `(M, S, L)`.
pub fn removed(r: u8, mins: &[u8], seqs: &[Vec<u8>], counts: &[u8], i: u8) -> (Vec<u8>, Vec<Vec<u8>>, Vec<u8>) {
    let (mut m, mut s, mut l) = (mins.to_vec(), seqs.to_vec(), counts.to_vec());
    remove(r, &mut m, &mut s, &mut l, i);
    (m, s, l)
}

/// Length of the longest strictly decreasing subsequence (patience sorting).
pub fn longest_decreasing(seq: &[u8]) -> usize {
    // tails[j] = largest possible last element of a strictly decreasing run of length j+1
    let mut tails: Vec<u8> = Vec::new();
    for &x in seq {
        let pos = tails.partition_point(|&t| t > x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

/// True iff `seq` has a strictly decreasing subsequence of length `len`.
pub fn has_decreasing_run(seq: &[u8], len: usize) -> bool {
    longest_decreasing(seq) >= len
}
