//! Brute-force constructions and inversions.
//!
//! Everything here materializes and sorts conjugates or suffixes. The cost is
//! `O(n^2 lg n)` and nobody should run it on large inputs; it exists so that
//! the other engines have something simple to be checked against.

use std::cmp::Ordering;

use crate::lyndon::{lyndon_conjugate, LyndonFactorization};
use crate::text::{check_nonempty_text, check_text, sentinel_row, Transform, TransformKind};
use crate::{Error, Result, SENTINEL};

/// Compares `u^ω` with `v^ω`. Two infinite powers that agree on their first
/// `|u| + |v|` symbols agree everywhere.
pub fn omega_cmp(u: &[u8], v: &[u8]) -> Ordering {
    omega_cmp_by(u.len(), |k| u[k], v.len(), |k| v[k])
}

fn omega_cmp_by(
    ulen: usize,
    u: impl Fn(usize) -> u8,
    vlen: usize,
    v: impl Fn(usize) -> u8,
) -> Ordering {
    for k in 0..ulen + vlen {
        match u(k % ulen).cmp(&v(k % vlen)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Extended BWT of a list of words: last symbols of all conjugates of all
/// words, ω-sorted. Ties keep insertion order.
fn ebwt(words: &[&[u8]]) -> Vec<u8> {
    let mut conjugates: Vec<(usize, usize)> = words
        .iter()
        .enumerate()
        .flat_map(|(w, word)| (0..word.len()).map(move |r| (w, r)))
        .collect();
    conjugates.sort_by(|&(wa, ra), &(wb, rb)| {
        let (a, b) = (words[wa], words[wb]);
        omega_cmp_by(
            a.len(),
            |k| a[(ra + k) % a.len()],
            b.len(),
            |k| b[(rb + k) % b.len()],
        )
    });
    conjugates
        .into_iter()
        .map(|(w, r)| {
            let word = words[w];
            word[(r + word.len() - 1) % word.len()]
        })
        .collect()
}

/// BBWT of an arbitrary byte string, the sentinel treated as an ordinary
/// smallest symbol.
pub fn bbwt_of_bytes(text: &[u8]) -> Vec<u8> {
    if text.is_empty() {
        return Vec::new();
    }
    let mut ends = Vec::new();
    let mut k = 0;
    while k < text.len() {
        let block = crate::lyndon::factor_block(text, k);
        for _ in 0..block.repeats {
            k += block.period;
            ends.push(k);
        }
    }
    let starts = std::iter::once(0).chain(ends.iter().copied());
    let words: Vec<&[u8]> = starts.zip(&ends).map(|(s, &e)| &text[s..e]).collect();
    ebwt(&words)
}

/// Bijective BWT by sorting the conjugates of every Lyndon factor.
pub fn oracle_bbwt(text: &[u8]) -> Result<Transform> {
    check_nonempty_text(text)?;
    let f = LyndonFactorization::of(text)?;
    let words: Vec<&[u8]> = f.factors(text).collect();
    Ok(Transform {
        kind: TransformKind::Bbwt,
        data: ebwt(&words),
    })
}

/// BWT of `text$` by sorting suffixes.
pub fn oracle_bwt(text: &[u8]) -> Result<Transform> {
    check_nonempty_text(text)?;
    let mut t = text.to_vec();
    t.push(SENTINEL);
    let mut sa: Vec<usize> = (0..t.len()).collect();
    sa.sort_by(|&a, &b| t[a..].cmp(&t[b..]));
    let data = sa
        .into_iter()
        .map(|i| if i == 0 { t[t.len() - 1] } else { t[i - 1] })
        .collect();
    Ok(Transform {
        kind: TransformKind::Bwt,
        data,
    })
}

/// BWT as the BBWT of `$text`, which is a single Lyndon word. Must agree with
/// [`oracle_bwt`].
pub fn oracle_bwt_prepended(text: &[u8]) -> Result<Transform> {
    check_nonempty_text(text)?;
    let mut t = Vec::with_capacity(text.len() + 1);
    t.push(SENTINEL);
    t.extend_from_slice(text);
    Ok(Transform {
        kind: TransformKind::Bwt,
        data: ebwt(&[&t]),
    })
}

/// BWTC by sorting all cyclic rotations (stable on equal rotations).
pub fn oracle_bwtc(text: &[u8]) -> Result<Transform> {
    check_nonempty_text(text)?;
    Ok(Transform {
        kind: TransformKind::Bwtc,
        data: ebwt(&[text]),
    })
}

/// Row (1-based) of `text` itself among its sorted rotations: the row whose
/// forward step yields `text[0]`.
pub fn oracle_bwtc_start_row(text: &[u8]) -> Result<usize> {
    check_nonempty_text(text)?;
    let n = text.len();
    let mut rows: Vec<usize> = (0..n).collect();
    rows.sort_by(|&a, &b| (0..n).map(|k| text[(a + k) % n]).cmp((0..n).map(|k| text[(b + k) % n])));
    Ok(rows.iter().position(|&r| r == 0).unwrap() + 1)
}

/// LF mapping, 0-based, by a stable counting sort.
fn lf_map(s: &[u8]) -> Vec<usize> {
    let mut next = [0usize; 257];
    for &b in s {
        next[b as usize + 1] += 1;
    }
    for c in 1..257 {
        next[c] += next[c - 1];
    }
    s.iter()
        .map(|&b| {
            let row = next[b as usize];
            next[b as usize] += 1;
            row
        })
        .collect()
}

/// Inverts a BBWT by decomposing its LF permutation into cycles.
pub fn oracle_invert_bbwt(t: &Transform) -> Result<Vec<u8>> {
    let s = &t.data;
    check_nonempty_text(s)?;
    let lf = lf_map(s);
    let mut seen = vec![false; s.len()];
    let mut words = Vec::new();
    for start in 0..s.len() {
        if seen[start] {
            continue;
        }
        let mut word = Vec::new();
        let mut r = start;
        while !seen[r] {
            seen[r] = true;
            word.push(s[r]);
            r = lf[r];
        }
        if r != start {
            return Err(Error::Corrupt("LF walk left its cycle"));
        }
        word.reverse();
        let j = lyndon_conjugate(&word).map_err(|_| Error::Corrupt("non-primitive LF cycle"))?;
        word.rotate_left(j);
        words.push(word);
    }
    words.sort_by(|a, b| b.cmp(a));
    Ok(words.concat())
}

/// Inverts a BWT by walking LF from the sentinel's suffix.
pub fn oracle_invert_bwt(t: &Transform) -> Result<Vec<u8>> {
    let s = &t.data;
    sentinel_row(s)?;
    let lf = lf_map(s);
    let n = s.len() - 1;
    let mut out = Vec::with_capacity(n);
    // Row 0 is the suffix "$"; its last symbol is T[n].
    let mut r = 0;
    for _ in 0..n {
        if s[r] == SENTINEL {
            return Err(Error::Corrupt("sentinel reached before the text was complete"));
        }
        out.push(s[r]);
        r = lf[r];
    }
    if s[r] != SENTINEL {
        return Err(Error::Corrupt("LF walk did not return to the sentinel"));
    }
    out.reverse();
    Ok(out)
}

/// Inverts a BWTC given the row of the wanted rotation.
pub fn oracle_invert_bwtc(t: &Transform, row: usize) -> Result<Vec<u8>> {
    let s = &t.data;
    check_nonempty_text(s)?;
    if row == 0 || row > s.len() {
        return Err(Error::OutOfRange { pos: row, len: s.len() });
    }
    let lf = lf_map(s);
    let mut out = Vec::with_capacity(s.len());
    let mut r = row - 1;
    for _ in 0..s.len() {
        out.push(s[r]);
        r = lf[r];
    }
    if r != row - 1 {
        return Err(Error::Corrupt("LF cycle length does not divide n"));
    }
    out.reverse();
    Ok(out)
}

/// Convenience for tests: the raw bytes of a transform of `text`.
pub fn transform_bytes(kind: TransformKind, text: &[u8]) -> Result<Vec<u8>> {
    check_text(text)?;
    Ok(match kind {
        TransformKind::Bwt => oracle_bwt(text)?.data,
        TransformKind::Bbwt => oracle_bbwt(text)?.data,
        TransformKind::Bwtc => oracle_bwtc(text)?.data,
    })
}
