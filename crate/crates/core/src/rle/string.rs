use std::fmt;

use super::seq::WeightedSeq;
use super::wavelet::DynamicWaveletMatrix;
use crate::text::{display, SIGMA};
use crate::{Error, Result};

/// A maximal run of one symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Run {
    pub symbol: u8,
    pub len: usize,
}

impl Run {
    pub fn new(symbol: u8, len: usize) -> Self {
        Run { symbol, len }
    }
}

/// Fenwick tree over the 256 symbol counts.
#[derive(Clone)]
struct SymbolCounts {
    tree: [usize; SIGMA + 1],
    counts: [usize; SIGMA],
}

impl SymbolCounts {
    fn new() -> Self {
        SymbolCounts {
            tree: [0; SIGMA + 1],
            counts: [0; SIGMA],
        }
    }

    fn add(&mut self, c: u8, delta: isize) {
        self.counts[c as usize] = self.counts[c as usize].wrapping_add_signed(delta);
        let mut i = c as usize + 1;
        while i <= SIGMA {
            self.tree[i] = self.tree[i].wrapping_add_signed(delta);
            i += i & i.wrapping_neg();
        }
    }

    /// Total count of symbols `< c`.
    fn smaller(&self, c: u8) -> usize {
        let mut i = c as usize;
        let mut acc = 0;
        while i > 0 {
            acc += self.tree[i];
            i &= i - 1;
        }
        acc
    }

    /// Symbol at 1-based position `i` of the sorted string.
    fn first(&self, i: usize) -> u8 {
        // Largest prefix of symbols whose total is < i.
        let mut pos = 0;
        let mut rest = i;
        let mut step = SIGMA;
        while step > 0 {
            let next = pos + step;
            if next <= SIGMA && self.tree[next] < rest {
                pos = next;
                rest -= self.tree[next];
            }
            step >>= 1;
        }
        pos as u8
    }
}

/// A byte string stored as maximal runs, with access, rank, select, insert
/// and delete in `O(lg r)` expected time.
///
/// Runs live in a treap weighted by length. Run heads are mirrored in a
/// dynamic wavelet matrix, which tells how many runs of a symbol precede a
/// given run, and every symbol has its own treap of run lengths for the
/// within-symbol partial sums. Positions are 1-based throughout.
#[derive(Clone)]
pub struct RunLengthString {
    runs: WeightedSeq<u8>,
    heads: DynamicWaveletMatrix,
    by_symbol: Vec<WeightedSeq<()>>,
    counts: SymbolCounts,
}

impl Default for RunLengthString {
    fn default() -> Self {
        Self::new()
    }
}

impl RunLengthString {
    pub fn new() -> Self {
        RunLengthString {
            runs: WeightedSeq::new(),
            heads: DynamicWaveletMatrix::new(),
            by_symbol: (0..SIGMA).map(|_| WeightedSeq::new()).collect(),
            counts: SymbolCounts::new(),
        }
    }

    pub fn compress(buf: &[u8]) -> Self {
        let runs = buf.chunk_by(|a, b| a == b).map(|r| Run::new(r[0], r.len()));
        Self::from_runs(runs).expect("runs of a slice are maximal")
    }

    /// Builds from runs; adjacent runs must differ and lengths be positive.
    pub fn from_runs(runs: impl IntoIterator<Item = Run>) -> Result<Self> {
        let mut s = Self::new();
        let mut prev: Option<u8> = None;
        for run in runs {
            if run.len == 0 {
                return Err(Error::Corrupt("zero-length run"));
            }
            if prev == Some(run.symbol) {
                return Err(Error::Corrupt("adjacent runs share a symbol"));
            }
            prev = Some(run.symbol);
            let k = s.run_count();
            s.insert_run(k, run.symbol, run.len);
        }
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.runs.total() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn run_count(&self) -> usize {
        self.runs.len()
    }

    pub fn run(&self, k: usize) -> Run {
        let (len, &symbol) = self.runs.get(k);
        Run::new(symbol, len as usize)
    }

    pub fn runs(&self) -> Vec<Run> {
        let mut out = Vec::with_capacity(self.run_count());
        self.runs
            .for_each(|len, &symbol| out.push(Run::new(symbol, len as usize)));
        out
    }

    pub fn decompress(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.len());
        self.runs.for_each(|len, &symbol| {
            out.extend(std::iter::repeat_n(symbol, len as usize));
        });
        out
    }

    /// Occurrences of `c` in the whole string.
    pub fn occurrences(&self, c: u8) -> usize {
        self.counts.counts[c as usize]
    }

    /// Symbols strictly smaller than `c`.
    pub fn count_smaller(&self, c: u8) -> usize {
        self.counts.smaller(c)
    }

    fn check_pos(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return Err(Error::OutOfRange { pos: i, len: self.len() });
        }
        Ok(())
    }

    /// Run index (0-based) holding position `i`, and the 1-based offset of
    /// `i` inside that run.
    pub fn locate(&self, i: usize) -> Result<(usize, usize)> {
        self.check_pos(i)?;
        let (k, off) = self.runs.locate(i as u64).expect("checked");
        Ok((k, off as usize))
    }

    pub fn access(&self, i: usize) -> Result<u8> {
        let (k, _) = self.locate(i)?;
        Ok(self.runs.value(k))
    }

    /// Occurrences of `c` in positions `1..=i`.
    pub fn rank(&self, c: u8, i: usize) -> Result<usize> {
        if i > self.len() {
            return Err(Error::OutOfRange { pos: i, len: self.len() });
        }
        if i == 0 {
            return Ok(0);
        }
        let (k, off) = self.locate(i)?;
        let before = self.heads.rank(c, k);
        let mut r = self.by_symbol[c as usize].prefix(before) as usize;
        if self.runs.value(k) == c {
            r += off;
        }
        Ok(r)
    }

    /// Position of the `j`-th (1-based) occurrence of `c`.
    pub fn select(&self, c: u8, j: usize) -> Result<usize> {
        let not_found = Error::NotFound { symbol: c, nth: j };
        let (m, off) = self.by_symbol[c as usize]
            .locate(j as u64)
            .ok_or(not_found.clone())?;
        let k = self.heads.select(c, m).ok_or(not_found)?;
        Ok(self.runs.prefix(k) as usize + off as usize)
    }

    /// `C[c] + rank(c, i)` for `c` the symbol at row `i`.
    pub fn lf(&self, i: usize) -> Result<usize> {
        let c = self.access(i)?;
        Ok(self.count_smaller(c) + self.rank(c, i)?)
    }

    /// Symbol at row `i` of the sorted string.
    pub fn first_symbol(&self, i: usize) -> Result<u8> {
        self.check_pos(i)?;
        Ok(self.counts.first(i))
    }

    pub fn fl(&self, i: usize) -> Result<usize> {
        let f = self.first_symbol(i)?;
        self.select(f, i - self.count_smaller(f))
    }

    fn insert_run(&mut self, k: usize, c: u8, len: usize) {
        let m = self.heads.rank(c, k);
        self.runs.insert(k, len as u64, c);
        self.heads.insert(k, c);
        self.by_symbol[c as usize].insert(m, len as u64, ());
        self.counts.add(c, len as isize);
    }

    fn remove_run(&mut self, k: usize) -> Run {
        let c = self.runs.value(k);
        let m = self.heads.rank(c, k);
        let (len, _) = self.runs.remove(k);
        self.heads.remove(k);
        self.by_symbol[c as usize].remove(m);
        self.counts.add(c, -(len as isize));
        Run::new(c, len as usize)
    }

    /// Sets the length of run `k`, which must stay positive.
    fn set_run_len(&mut self, k: usize, len: usize) {
        let c = self.runs.value(k);
        let m = self.heads.rank(c, k);
        let old = self.runs.weight(k) as usize;
        self.runs.set_weight(k, len as u64);
        self.by_symbol[c as usize].set_weight(m, len as u64);
        self.counts.add(c, len as isize - old as isize);
    }

    /// Merges run `k` into run `k - 1` if both carry the same symbol.
    fn merge_at(&mut self, k: usize) {
        if k == 0 || k >= self.run_count() {
            return;
        }
        if self.runs.value(k - 1) != self.runs.value(k) {
            return;
        }
        let right = self.remove_run(k);
        let left = self.runs.weight(k - 1) as usize;
        self.set_run_len(k - 1, left + right.len);
    }

    /// Inserts `c` so it becomes position `i` (`1 ≤ i ≤ n + 1`).
    pub fn insert(&mut self, i: usize, c: u8) -> Result<()> {
        let n = self.len();
        if i == 0 || i > n + 1 {
            return Err(Error::OutOfRange { pos: i, len: n + 1 });
        }
        if i > 1 {
            let (k, _) = self.locate(i - 1)?;
            if self.runs.value(k) == c {
                let len = self.runs.weight(k) as usize;
                self.set_run_len(k, len + 1);
                return Ok(());
            }
        }
        if i <= n {
            let (k, off) = self.locate(i)?;
            let len = self.runs.weight(k) as usize;
            if self.runs.value(k) == c {
                self.set_run_len(k, len + 1);
                return Ok(());
            }
            if off > 1 {
                let d = self.runs.value(k);
                self.set_run_len(k, off - 1);
                self.insert_run(k + 1, d, len - off + 1);
                self.insert_run(k + 1, c, 1);
            } else {
                self.insert_run(k, c, 1);
            }
        } else {
            let k = self.run_count();
            self.insert_run(k, c, 1);
        }
        Ok(())
    }

    /// Removes position `i` and returns its symbol.
    pub fn delete(&mut self, i: usize) -> Result<u8> {
        let (k, _) = self.locate(i)?;
        let c = self.runs.value(k);
        self.shrink_run(k, 1);
        Ok(c)
    }

    /// Shortens run `k` by `by`; an emptied run is removed and its
    /// neighbors merged. Returns whether the run was removed.
    pub fn shrink_run(&mut self, k: usize, by: usize) -> bool {
        let len = self.runs.weight(k) as usize;
        assert!(by <= len, "cannot shrink run of length {len} by {by}");
        if by < len {
            self.set_run_len(k, len - by);
            false
        } else {
            self.remove_run(k);
            self.merge_at(k);
            true
        }
    }

    /// Replaces the symbol at position `i`.
    pub fn replace(&mut self, i: usize, c: u8) -> Result<u8> {
        let old = self.delete(i)?;
        self.insert(i, c)?;
        Ok(old)
    }
}

impl PartialEq for RunLengthString {
    fn eq(&self, other: &Self) -> bool {
        self.runs() == other.runs()
    }
}

impl Eq for RunLengthString {}

impl fmt::Debug for RunLengthString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (idx, run) in self.runs().iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", display(&[run.symbol]), run.len)?;
        }
        f.write_str("]")
    }
}

/// Maps sorted-string rows to their first symbol by binary search over the
/// symbol boundaries of a fixed count table.
#[derive(Clone, Debug)]
pub struct BoundaryIndex {
    starts: Vec<(usize, u8)>,
}

impl BoundaryIndex {
    pub fn new(s: &RunLengthString) -> Self {
        let mut starts = Vec::new();
        let mut acc = 0;
        for c in 0..=u8::MAX {
            let k = s.occurrences(c);
            if k > 0 {
                starts.push((acc + 1, c));
                acc += k;
            }
        }
        BoundaryIndex { starts }
    }

    /// Symbol whose interval contains row `i` (rows are 1-based), and the
    /// interval's first row.
    pub fn first(&self, i: usize) -> Option<(u8, usize)> {
        let idx = self.starts.partition_point(|&(start, _)| start <= i);
        let (start, c) = *self.starts.get(idx.checked_sub(1)?)?;
        Some((c, start))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::from_display;

    fn rls(s: &str) -> RunLengthString {
        RunLengthString::compress(&from_display(s))
    }

    #[test]
    fn access_examples() {
        assert_eq!(rls("aaa").access(2), Ok(b'a'));
        let s = rls("bbcbbb$aaa");
        assert_eq!(s.run_count(), 5);
        assert_eq!(s.access(7), Ok(0));
        assert_eq!(s.access(10), Ok(b'a'));
        assert!(s.access(11).is_err());
        assert!(s.access(0).is_err());
        assert_eq!(format!("{s:?}"), "[(b,2),(c,1),(b,3),($,1),(a,3)]");
    }

    #[test]
    fn rank_select_examples() {
        let s = rls("aaabb");
        assert_eq!(s.rank(b'b', 4), Ok(1));
        assert_eq!(s.select(b'a', 3), Ok(3));
        assert_eq!(RunLengthString::new().rank(b'a', 0), Ok(0));
        assert!(s.select(b'c', 1).is_err());
    }

    #[test]
    fn insert_delete_examples() {
        let mut s = RunLengthString::new();
        s.insert(1, b'a').unwrap();
        assert_eq!(s.runs(), [Run::new(b'a', 1)]);

        let mut s = rls("aa");
        s.insert(2, b'b').unwrap();
        assert_eq!(s, rls("aba"));
        assert_eq!(s.delete(2), Ok(b'b'));
        assert_eq!(s.runs(), [Run::new(b'a', 2)]);
    }

    #[test]
    fn from_runs_rejects_bad_runs() {
        assert!(RunLengthString::from_runs([Run::new(b'a', 0)]).is_err());
        assert!(RunLengthString::from_runs([Run::new(b'a', 1), Run::new(b'a', 2)]).is_err());
    }

    #[test]
    fn lf_fl_examples() {
        let s = rls("bbcbbb$aaa");
        let plain = from_display("bbcbbb$aaa");
        for i in 1..=plain.len() {
            assert_eq!(s.lf(i).unwrap(), crate::text::lf_step(&plain, i).unwrap());
            assert_eq!(s.fl(i).unwrap(), crate::text::fl_step(&plain, i).unwrap());
        }
    }

    #[test]
    fn boundary_index() {
        let b = BoundaryIndex::new(&rls("bbcbbb$aaa"));
        assert_eq!(b.first(1), Some((0, 1)));
        assert_eq!(b.first(2), Some((b'a', 2)));
        assert_eq!(b.first(4), Some((b'a', 2)));
        assert_eq!(b.first(5), Some((b'b', 5)));
        assert_eq!(b.first(10), Some((b'c', 10)));
        assert_eq!(b.first(0), None);
    }
}
