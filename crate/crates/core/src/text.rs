//! Alphabet conventions and the scan primitives shared by every engine.
//!
//! Symbols are bytes. Byte `0` is the sentinel `$`, which sorts before every
//! other symbol and never appears in ordinary text. Every position in the
//! public API is 1-based: `rank(buf, c, 0) == 0` and `select(buf, c, 0) == 0`.
//!
//! The functions here only scan; none of them allocate. The in-place engine
//! builds LF and FL steps from them in `O(n)` time each.

use std::fmt;

use crate::{Error, Result};

/// The reserved sentinel symbol `$`.
pub const SENTINEL: u8 = 0;

/// Number of distinct symbols.
pub const SIGMA: usize = 256;

/// Rejects text that contains the sentinel byte.
pub fn check_text(buf: &[u8]) -> Result<()> {
    match buf.iter().position(|&b| b == SENTINEL) {
        Some(offset) => Err(Error::SentinelInText { offset }),
        None => Ok(()),
    }
}

/// Like [`check_text`], but additionally rejects the empty string.
pub fn check_nonempty_text(buf: &[u8]) -> Result<()> {
    if buf.is_empty() {
        return Err(Error::Empty);
    }
    check_text(buf)
}

/// Position of the single sentinel of a BWT, 1-based.
pub fn sentinel_row(buf: &[u8]) -> Result<usize> {
    let mut found = None;
    let mut count = 0;
    for (i, &b) in buf.iter().enumerate() {
        if b == SENTINEL {
            count += 1;
            found = Some(i + 1);
        }
    }
    match (count, found) {
        (1, Some(row)) => Ok(row),
        _ => Err(Error::SentinelCount { found: count }),
    }
}

/// Occurrences of `c` in `buf[1..=i]`.
pub fn rank(buf: &[u8], c: u8, i: usize) -> Result<usize> {
    if i > buf.len() {
        return Err(Error::OutOfRange { pos: i, len: buf.len() });
    }
    Ok(rank_unchecked(buf, c, i))
}

#[inline]
pub(crate) fn rank_unchecked(buf: &[u8], c: u8, i: usize) -> usize {
    buf[..i].iter().filter(|&&b| b == c).count()
}

/// Position of the `j`-th occurrence of `c`.
pub fn select(buf: &[u8], c: u8, j: usize) -> Result<usize> {
    if j == 0 {
        return Ok(0);
    }
    select_unchecked(buf, c, j).ok_or(Error::NotFound { symbol: c, nth: j })
}

#[inline]
pub(crate) fn select_unchecked(buf: &[u8], c: u8, j: usize) -> Option<usize> {
    debug_assert!(j > 0);
    let mut seen = 0;
    for (i, &b) in buf.iter().enumerate() {
        if b == c {
            seen += 1;
            if seen == j {
                return Some(i + 1);
            }
        }
    }
    None
}

/// Number of symbols in `buf` strictly smaller than `c`.
pub fn count_smaller(buf: &[u8], c: u8) -> usize {
    buf.iter().filter(|&&b| b < c).count()
}

/// Cumulative symbol histogram: `table[c]` counts symbols smaller than `c`.
///
/// Index `256` holds the total length, so `table[c + 1] - table[c]` is the
/// number of occurrences of `c`. Lives on the stack; 257 words.
#[derive(Clone, PartialEq, Eq)]
pub struct CountTable {
    counts: [usize; SIGMA + 1],
}

impl CountTable {
    pub fn new(buf: &[u8]) -> Self {
        let mut counts = [0usize; SIGMA + 1];
        for &b in buf {
            counts[b as usize + 1] += 1;
        }
        for c in 1..=SIGMA {
            counts[c] += counts[c - 1];
        }
        CountTable { counts }
    }

    /// Symbols strictly smaller than `c`.
    #[inline]
    pub fn smaller(&self, c: u8) -> usize {
        self.counts[c as usize]
    }

    #[inline]
    pub fn occurrences(&self, c: u8) -> usize {
        self.counts[c as usize + 1] - self.counts[c as usize]
    }

    #[inline]
    pub fn total(&self) -> usize {
        self.counts[SIGMA]
    }

    /// `First[i]`, the `i`-th smallest symbol (1-based). Binary search over
    /// the 257 boundaries.
    pub fn first_symbol(&self, i: usize) -> Option<u8> {
        if i == 0 || i > self.total() {
            return None;
        }
        // Largest c with counts[c] < i.
        let c = self.counts[..SIGMA].partition_point(|&v| v < i) - 1;
        Some(c as u8)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.counts
    }
}

impl fmt::Debug for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                (0..SIGMA)
                    .filter(|&c| self.counts[c + 1] > self.counts[c])
                    .map(|c| (c as u8, self.counts[c])),
            )
            .finish()
    }
}

/// One-pass [`CountTable`] of `buf`.
pub fn build_count_table(buf: &[u8]) -> CountTable {
    CountTable::new(buf)
}

fn check_row(buf: &[u8], i: usize) -> Result<()> {
    if i == 0 || i > buf.len() {
        Err(Error::OutOfRange { pos: i, len: buf.len() })
    } else {
        Ok(())
    }
}

/// Backward step: `LF[i] = C[buf[i]] + rank(buf, buf[i], i)`.
pub fn lf_step(buf: &[u8], i: usize) -> Result<usize> {
    check_row(buf, i)?;
    Ok(lf_unchecked(buf, i))
}

/// Backward step with a cached count table of `buf`.
pub fn lf_step_with(buf: &[u8], table: &CountTable, i: usize) -> Result<usize> {
    check_row(buf, i)?;
    let c = buf[i - 1];
    Ok(table.smaller(c) + rank_unchecked(buf, c, i))
}

/// Two scans, no table.
#[inline]
pub(crate) fn lf_unchecked(buf: &[u8], i: usize) -> usize {
    let c = buf[i - 1];
    let mut smaller = 0;
    let mut equal = 0;
    for (k, &b) in buf.iter().enumerate() {
        if b < c {
            smaller += 1;
        } else if b == c && k < i {
            equal += 1;
        }
    }
    smaller + equal
}

/// `First[i]` without a cached table.
pub fn first_symbol(buf: &[u8], i: usize) -> Result<u8> {
    check_row(buf, i)?;
    Ok(CountTable::new(buf)
        .first_symbol(i)
        .expect("row checked against length"))
}

/// Forward step: `FL[i] = select(buf, f, i - C[f])` with `f = First[i]`.
pub fn fl_step(buf: &[u8], i: usize) -> Result<usize> {
    check_row(buf, i)?;
    Ok(fl_unchecked(buf, i))
}

/// Forward step with a cached count table of `buf`.
pub fn fl_step_with(buf: &[u8], table: &CountTable, i: usize) -> Result<usize> {
    check_row(buf, i)?;
    let f = table.first_symbol(i).expect("row checked against length");
    Ok(select_unchecked(buf, f, i - table.smaller(f)).expect("table matches buffer"))
}

#[inline]
pub(crate) fn fl_unchecked(buf: &[u8], i: usize) -> usize {
    let table = CountTable::new(buf);
    let f = table.first_symbol(i).expect("valid row");
    select_unchecked(buf, f, i - table.smaller(f)).expect("table matches buffer")
}

/// Which member of the transform family a string holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransformKind {
    /// Suffix-sorted BWT of `T$`; contains exactly one sentinel.
    Bwt,
    /// Bijective BWT; sentinel-free.
    Bbwt,
    /// BWT over the cyclic rotations of `T`; sentinel-free.
    Bwtc,
}

impl TransformKind {
    pub fn name(self) -> &'static str {
        match self {
            TransformKind::Bwt => "bwt",
            TransformKind::Bbwt => "bbwt",
            TransformKind::Bwtc => "bwtc",
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A transform string tagged with its kind.
#[derive(Clone, PartialEq, Eq)]
pub struct Transform {
    pub kind: TransformKind,
    pub data: Vec<u8>,
}

impl Transform {
    /// Wraps `data`, checking the sentinel invariant of `kind`.
    pub fn new(kind: TransformKind, data: Vec<u8>) -> Result<Self> {
        match kind {
            TransformKind::Bwt => {
                sentinel_row(&data)?;
            }
            TransformKind::Bbwt | TransformKind::Bwtc => check_text(&data)?,
        }
        Ok(Transform { kind, data })
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn into_inner(self) -> Vec<u8> {
        self.data
    }
}

impl fmt::Debug for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, display(&self.data))
    }
}

/// Renders a byte string with the sentinel shown as `$`.
pub fn display(buf: &[u8]) -> String {
    buf.iter()
        .map(|&b| if b == SENTINEL { '$' } else { b as char })
        .collect()
}

/// Parses the `$` notation used in tests and docs back into bytes.
pub fn from_display(s: &str) -> Vec<u8> {
    s.bytes().map(|b| if b == b'$' { SENTINEL } else { b }).collect()
}

/// Number of maximal character runs.
pub fn run_count(buf: &[u8]) -> usize {
    if buf.is_empty() {
        return 0;
    }
    1 + buf.windows(2).filter(|w| w[0] != w[1]).count()
}
