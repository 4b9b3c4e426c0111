//! Run-length compressed engine.
//!
//! All transforms are kept as [`RunLengthString`]s; work is `O(n lg r)`
//! and space proportional to the number of runs.

mod seq;
mod string;
mod wavelet;

use std::collections::BTreeMap;

pub use seq::WeightedSeq;
pub use string::{BoundaryIndex, Run, RunLengthString};
pub use wavelet::DynamicWaveletMatrix;

use crate::lyndon::{duval_factorize_streamed, least_rotation, SymbolCursor};
use crate::text::check_nonempty_text;
use crate::{Error, Result, SENTINEL};

/// Prepends `c` to the text behind the RLBWT `s`, whose sentinel sits at
/// `sentinel_row`. Returns the new sentinel row.
pub fn rlbwt_extend(s: &mut RunLengthString, c: u8, sentinel_row: usize) -> Result<usize> {
    if s.access(sentinel_row)? != SENTINEL {
        return Err(Error::Corrupt("sentinel row does not hold the sentinel"));
    }
    s.replace(sentinel_row, c)?;
    let row = s.count_smaller(c) + s.rank(c, sentinel_row)? + 1;
    s.insert(row, SENTINEL)?;
    Ok(row)
}

/// RLBWT built by reading a text right to left.
#[derive(Clone, Debug)]
pub struct OnlineRlbwt {
    bwt: RunLengthString,
    sentinel_row: usize,
}

impl Default for OnlineRlbwt {
    fn default() -> Self {
        Self::new()
    }
}

impl OnlineRlbwt {
    /// The RLBWT of the empty text, `$`.
    pub fn new() -> Self {
        OnlineRlbwt {
            bwt: RunLengthString::compress(&[SENTINEL]),
            sentinel_row: 1,
        }
    }

    pub fn prepend(&mut self, c: u8) -> Result<()> {
        if c == SENTINEL {
            return Err(Error::SentinelInText { offset: 0 });
        }
        self.sentinel_row = rlbwt_extend(&mut self.bwt, c, self.sentinel_row)?;
        Ok(())
    }

    pub fn sentinel_row(&self) -> usize {
        self.sentinel_row
    }

    pub fn bwt(&self) -> &RunLengthString {
        &self.bwt
    }

    pub fn into_bwt(self) -> RunLengthString {
        self.bwt
    }
}

/// RLBWT of `T$`.
pub fn rlbwt(text: &[u8]) -> Result<RunLengthString> {
    check_nonempty_text(text)?;
    let mut online = OnlineRlbwt::new();
    for &c in text.iter().rev() {
        online.prepend(c)?;
    }
    Ok(online.into_bwt())
}

/// Inserts a Lyndon word (given last symbol first) into an RLBBWT whose
/// factors are all at least as large.
fn insert_factor_reversed(
    bbwt: &mut RunLengthString,
    reversed: impl IntoIterator<Item = u8>,
) -> Result<()> {
    let mut p = 0;
    for c in reversed {
        p = if p == 0 { 1 } else { bbwt.lf(p)? + 1 };
        bbwt.insert(p, c)?;
    }
    Ok(())
}

/// RLBBWT of `text`, merging Lyndon factors left to right.
pub fn rlbbwt(text: &[u8]) -> Result<RunLengthString> {
    check_nonempty_text(text)?;
    let mut out = RunLengthString::new();
    let mut start = 0;
    crate::lyndon::duval_factorize(text, |end| {
        let factor = &text[start..end];
        start = end;
        insert_factor_reversed(&mut out, factor.iter().rev().copied())
            .expect("factors arrive in non-increasing order");
    })?;
    Ok(out)
}

/// RLBWTC of `text` with the row of the text itself among its rotations.
/// The primitive root is rotated to its Lyndon conjugate, whose BWTC is its
/// BBWT; runs are then stretched by the exponent.
pub fn rlbwtc(text: &[u8]) -> Result<(RunLengthString, usize)> {
    check_nonempty_text(text)?;
    let (root_len, exponent) = crate::lyndon::primitive_root(text)?;
    let root = &text[..root_len];
    let j = least_rotation(root);
    let mut lyndon = root[j..].to_vec();
    lyndon.extend_from_slice(&root[..j]);
    let mut compact = RunLengthString::new();
    insert_factor_reversed(&mut compact, lyndon.iter().rev().copied())?;

    let d = (root_len - j) % root_len;
    let mut row = 1;
    for _ in 0..d {
        row = compact.fl(row)?;
    }
    let stretched = compact
        .runs()
        .into_iter()
        .map(|r| Run::new(r.symbol, r.len * exponent));
    Ok((RunLengthString::from_runs(stretched)?, (row - 1) * exponent + 1))
}

/// Text of an RLBWT of `T$`.
pub fn invert_rlbwt(s: &RunLengthString) -> Result<Vec<u8>> {
    let n = s.len();
    if s.occurrences(SENTINEL) != 1 {
        return Err(Error::SentinelCount { found: s.occurrences(SENTINEL) });
    }
    let mut out = Vec::with_capacity(n - 1);
    // Row 1 is the rotation starting with `$`; its last symbol ends the text.
    let mut row = 1;
    for _ in 1..n {
        let c = s.access(row)?;
        if c == SENTINEL {
            return Err(Error::Corrupt("sentinel reached before the text start"));
        }
        out.push(c);
        row = s.lf(row)?;
    }
    if s.access(row)? != SENTINEL {
        return Err(Error::Corrupt("LF walk does not end at the sentinel"));
    }
    out.reverse();
    Ok(out)
}

/// Text of an RLBWTC given the row of the text among its rotations.
pub fn invert_rlbwtc(s: &RunLengthString, row: usize) -> Result<Vec<u8>> {
    let n = s.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    if row == 0 || row > n {
        return Err(Error::OutOfRange { pos: row, len: n });
    }
    // The text's last symbol is at its own row; walking LF n times reads the
    // text backwards, repeating the root for powers.
    let mut out = Vec::with_capacity(n);
    let mut r = row;
    for _ in 0..n {
        out.push(s.access(r)?);
        r = s.lf(r)?;
    }
    if r != row {
        return Err(Error::Corrupt("LF walk does not close"));
    }
    out.reverse();
    let expected = rlbwtc(&out)?;
    if expected.0 != *s || expected.1 != row {
        return Err(Error::Corrupt("not a BWTC"));
    }
    Ok(out)
}

/// Text of an RLBBWT.
pub fn invert_rlbbwt(s: &RunLengthString) -> Result<Vec<u8>> {
    invert_rlbwt(&convert_rlbbwt_to_rlbwt(s)?)
}

/// Counters from the RLBBWT to RLBWT conversion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConversionStats {
    /// Rows visited: every symbol once, plus the return to row 1 that
    /// closes each factor's cycle.
    pub row_visits: usize,
    pub factors: usize,
}

/// Converts an RLBBWT of `T` into the RLBWT of `T$`.
///
/// The cycle through row 1 is the last Lyndon factor; walking it with LF
/// yields that factor backwards, which is the order the online builder
/// consumes. The visited symbols are then removed run by run, leaving the
/// RLBBWT of the remaining factors.
pub fn convert_rlbbwt_to_rlbwt(s: &RunLengthString) -> Result<RunLengthString> {
    Ok(convert_rlbbwt_to_rlbwt_counted(s)?.0)
}

pub fn convert_rlbbwt_to_rlbwt_counted(
    s: &RunLengthString,
) -> Result<(RunLengthString, ConversionStats)> {
    if s.is_empty() {
        return Err(Error::Empty);
    }
    if s.occurrences(SENTINEL) > 0 {
        let offset = s.select(SENTINEL, 1)? - 1;
        return Err(Error::SentinelInText { offset });
    }
    let total = s.len();
    let mut rest = s.clone();
    let mut online = OnlineRlbwt::new();
    let mut stats = ConversionStats::default();
    let mut visits: BTreeMap<usize, usize> = BTreeMap::new();
    while !rest.is_empty() {
        stats.factors += 1;
        visits.clear();
        let mut row = 1;
        let mut steps = 0;
        loop {
            let (k, _) = rest.locate(row)?;
            *visits.entry(k).or_default() += 1;
            online.prepend(rest.access(row)?)?;
            row = rest.lf(row)?;
            steps += 1;
            if row == 1 {
                break;
            }
            if steps > rest.len() {
                return Err(Error::Corrupt("LF cycle through row 1 does not close"));
            }
        }
        stats.row_visits += steps + 1;
        // Removing from the right keeps lower run indices valid; a merge
        // only ever grows the run to the left, which has the same symbol.
        for (&k, &count) in visits.iter().rev() {
            rest.shrink_run(k, count);
        }
    }
    debug_assert_eq!(online.bwt().len(), total + 1);
    Ok((online.into_bwt(), stats))
}

/// Reads an RLBWT forward from its sentinel with FL steps.
struct FlCursor<'a> {
    bwt: &'a RunLengthString,
    first: BoundaryIndex,
    sentinel: usize,
}

impl FlCursor<'_> {
    fn fl(&self, row: usize) -> usize {
        let (c, start) = self.first.first(row).expect("row in range");
        self.bwt
            .select(c, row - start + 1)
            .expect("boundaries match the string")
    }
}

impl SymbolCursor for FlCursor<'_> {
    type Pos = usize;

    fn start(&mut self) -> Option<usize> {
        self.advance(self.sentinel)
    }

    fn advance(&mut self, row: usize) -> Option<usize> {
        let next = self.fl(row);
        (self.bwt.access(next).expect("row in range") != SENTINEL).then_some(next)
    }

    fn symbol(&mut self, row: usize) -> u8 {
        self.bwt.access(row).expect("row in range")
    }
}

/// Converts an RLBWT of `T$` into the RLBBWT of `T`.
///
/// Duval's algorithm runs on the text simulated by FL steps from the
/// sentinel. Each finished factor is read backwards with LF steps from the
/// row of its last symbol and merged into the output as the new smallest
/// factor.
pub fn convert_rlbwt_to_rlbbwt(s: &RunLengthString) -> Result<RunLengthString> {
    if s.occurrences(SENTINEL) != 1 {
        return Err(Error::SentinelCount { found: s.occurrences(SENTINEL) });
    }
    if s.len() == 1 {
        return Err(Error::Empty);
    }
    let sentinel = s.select(SENTINEL, 1)?;
    let mut cursor = FlCursor {
        bwt: s,
        first: BoundaryIndex::new(s),
        sentinel,
    };
    let mut out = RunLengthString::new();
    let mut failure = None;
    duval_factorize_streamed(&mut cursor, |end| {
        if failure.is_some() {
            return;
        }
        let mut row = end.last;
        let mut p = 0;
        for _ in 0..end.len {
            let step = (|| -> Result<()> {
                let c = s.access(row)?;
                p = if p == 0 { 1 } else { out.lf(p)? + 1 };
                out.insert(p, c)?;
                row = s.lf(row)?;
                Ok(())
            })();
            if let Err(e) = step {
                failure = Some(e);
                return;
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// RLBWT of the text behind the run-length text `text`, consuming the text
/// from its last run while freeing consumed runs. Also returns the peak of
/// live text runs plus live BWT runs.
pub fn rlbwt_from_rle_text(text: &RunLengthString) -> Result<(RunLengthString, usize)> {
    if text.is_empty() {
        return Err(Error::Empty);
    }
    if text.occurrences(SENTINEL) > 0 {
        let offset = text.select(SENTINEL, 1)? - 1;
        return Err(Error::SentinelInText { offset });
    }
    let mut runs = text.runs();
    let mut online = OnlineRlbwt::new();
    let mut peak = runs.len() + online.bwt().run_count();
    while let Some(last) = runs.last_mut() {
        let c = last.symbol;
        last.len -= 1;
        if last.len == 0 {
            runs.pop();
        }
        online.prepend(c)?;
        peak = peak.max(runs.len() + online.bwt().run_count());
    }
    Ok((online.into_bwt(), peak))
}
