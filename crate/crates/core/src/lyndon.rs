//! Lyndon words: Duval's factorization, Lyndon conjugates and primitive roots.
//!
//! Duval's algorithm is exposed twice. [`duval_factorize`] runs over a slice.
//! [`duval_factorize_streamed`] runs over any [`SymbolCursor`], a forward-only
//! reader whose positions can be remembered and jumped back to; that is all
//! the algorithm needs, so it also runs over FL steps of a BWT without ever
//! materializing the text.

use crate::text::check_nonempty_text;
use crate::{Error, Result};

/// End positions (1-based, strictly increasing, last = `n`) of the Lyndon
/// factors of a text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyndonFactorization {
    ends: Vec<usize>,
}

impl LyndonFactorization {
    pub fn of(text: &[u8]) -> Result<Self> {
        let mut ends = Vec::new();
        duval_factorize(text, |end| ends.push(end))?;
        Ok(LyndonFactorization { ends })
    }

    pub fn ends(&self) -> &[usize] {
        &self.ends
    }

    /// Number of factors `t`.
    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    /// Slices `text` into its factors; `text` must be the factorized string.
    pub fn factors<'a>(&'a self, text: &'a [u8]) -> impl Iterator<Item = &'a [u8]> + 'a {
        let starts = std::iter::once(0).chain(self.ends.iter().copied());
        starts.zip(self.ends.iter()).map(move |(s, &e)| &text[s..e])
    }
}

/// One outer iteration of Duval's algorithm: the factor starting at the
/// current position is repeated `repeats` times, each copy `period` long.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorBlock {
    pub period: usize,
    pub repeats: usize,
    /// Symbol comparisons spent finding this block.
    pub comparisons: usize,
}

/// Duval's scan over `buf[start..]`.
pub(crate) fn factor_block(buf: &[u8], start: usize) -> FactorBlock {
    let n = buf.len();
    debug_assert!(start < n);
    let mut i = start;
    let mut j = start + 1;
    let mut comparisons = 0;
    while j < n {
        comparisons += 1;
        let (a, b) = (buf[i], buf[j]);
        if a > b {
            break;
        }
        if a < b {
            i = start;
        } else {
            i += 1;
        }
        j += 1;
    }
    let period = j - i;
    FactorBlock {
        period,
        repeats: (i - start) / period + 1,
        comparisons,
    }
}

/// Reports the end position of every Lyndon factor, left to right.
pub fn duval_factorize(buf: &[u8], visitor: impl FnMut(usize)) -> Result<()> {
    duval_factorize_counted(buf, visitor).map(|_| ())
}

/// [`duval_factorize`] returning the number of symbol comparisons made.
/// Never exceeds `2n`.
pub fn duval_factorize_counted(buf: &[u8], mut visitor: impl FnMut(usize)) -> Result<usize> {
    check_nonempty_text(buf)?;
    let mut k = 0;
    let mut comparisons = 0;
    while k < buf.len() {
        let block = factor_block(buf, k);
        comparisons += block.comparisons;
        for _ in 0..block.repeats {
            k += block.period;
            visitor(k);
        }
    }
    Ok(comparisons)
}

/// A forward reader over a virtual text.
///
/// Positions are opaque handles. Duval's algorithm only ever moves a handle
/// one step forward or copies another handle, so nothing else is required.
pub trait SymbolCursor {
    type Pos: Copy;

    /// Handle of the first symbol, `None` for an empty text.
    fn start(&mut self) -> Option<Self::Pos>;

    /// Handle of the symbol after `pos`, `None` past the end.
    fn advance(&mut self, pos: Self::Pos) -> Option<Self::Pos>;

    fn symbol(&mut self, pos: Self::Pos) -> u8;
}

/// Cursor over a plain slice.
pub struct SliceCursor<'a>(pub &'a [u8]);

impl SymbolCursor for SliceCursor<'_> {
    type Pos = usize;

    fn start(&mut self) -> Option<usize> {
        (!self.0.is_empty()).then_some(0)
    }

    fn advance(&mut self, pos: usize) -> Option<usize> {
        (pos + 1 < self.0.len()).then_some(pos + 1)
    }

    fn symbol(&mut self, pos: usize) -> u8 {
        self.0[pos]
    }
}

/// Duval's scan starting at handle `start`.
pub fn first_block_streamed<C: SymbolCursor>(cursor: &mut C, start: C::Pos) -> FactorBlock {
    let mut ip = start;
    let mut i = 0usize;
    let mut jp = cursor.advance(start);
    let mut j = 1usize;
    let mut comparisons = 0;
    while let Some(jpos) = jp {
        comparisons += 1;
        let a = cursor.symbol(ip);
        let b = cursor.symbol(jpos);
        if a > b {
            break;
        }
        if a < b {
            ip = start;
            i = 0;
        } else {
            ip = cursor.advance(ip).expect("i trails j");
            i += 1;
        }
        jp = cursor.advance(jpos);
        j += 1;
    }
    let period = j - i;
    FactorBlock {
        period,
        repeats: i / period + 1,
        comparisons,
    }
}

/// A factor end reported by [`duval_factorize_streamed`].
#[derive(Clone, Copy, Debug)]
pub struct FactorEnd<P> {
    /// 1-based end position in the virtual text.
    pub end: usize,
    /// Length of the factor.
    pub len: usize,
    /// Cursor handle of the factor's last symbol.
    pub last: P,
}

/// Duval's factorization over a cursor. Produces the same ends as
/// [`duval_factorize`] on the materialized text.
///
/// Returns the number of symbol comparisons.
pub fn duval_factorize_streamed<C: SymbolCursor>(
    cursor: &mut C,
    mut visitor: impl FnMut(FactorEnd<C::Pos>),
) -> Result<usize> {
    let mut next = cursor.start();
    if next.is_none() {
        return Err(Error::Empty);
    }
    let mut end = 0;
    let mut comparisons = 0;
    while let Some(start) = next {
        let block = first_block_streamed(cursor, start);
        comparisons += block.comparisons;
        let mut pos = start;
        for copy in 0..block.repeats {
            if copy > 0 {
                pos = cursor
                    .advance(pos)
                    .ok_or(Error::Corrupt("cursor exhausted inside a factor"))?;
            }
            for _ in 1..block.period {
                pos = cursor
                    .advance(pos)
                    .ok_or(Error::Corrupt("cursor exhausted inside a factor"))?;
            }
            end += block.period;
            visitor(FactorEnd {
                end,
                len: block.period,
                last: pos,
            });
        }
        next = cursor.advance(pos);
    }
    Ok(comparisons)
}

/// Whether `buf` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(buf: &[u8]) -> Result<bool> {
    if buf.is_empty() {
        return Err(Error::Empty);
    }
    let block = factor_block(buf, 0);
    Ok(block.repeats == 1 && block.period == buf.len())
}

/// Rotation index `j` such that `buf[j..] ++ buf[..j]` is a Lyndon word.
pub fn lyndon_conjugate(buf: &[u8]) -> Result<usize> {
    if !is_primitive(buf)? {
        return Err(Error::NotPrimitive);
    }
    Ok(least_rotation(buf))
}

/// Start of the least rotation, by Duval's scan over `buf ++ buf` read
/// modulo `n`: the last factor starting in the first copy is the answer.
/// `O(n)` time, `O(1)` words.
pub(crate) fn least_rotation(buf: &[u8]) -> usize {
    let n = buf.len();
    let at = |x: usize| buf[x % n];
    let mut i = 0;
    let mut answer = 0;
    while i < n {
        answer = i;
        let mut k = i;
        let mut j = i + 1;
        while j < 2 * n && at(k) <= at(j) {
            k = if at(k) < at(j) { i } else { k + 1 };
            j += 1;
        }
        while i <= k {
            i += j - k;
        }
    }
    answer
}

/// Primitivity by the smallest period dividing `n`.
pub fn is_primitive(buf: &[u8]) -> Result<bool> {
    Ok(primitive_root(buf)?.1 == 1)
}

/// Primitivity by comparing the text against each of its rotations, `O(n^2)`
/// time and `O(1)` words.
pub fn is_primitive_pairwise(buf: &[u8]) -> Result<bool> {
    let n = buf.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    for shift in 1..n {
        if (0..n).all(|i| buf[i] == buf[(i + shift) % n]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(root_length, exponent)` with `buf = buf[..root_length]^exponent` and
/// the root primitive.
pub fn primitive_root(buf: &[u8]) -> Result<(usize, usize)> {
    let n = buf.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    for p in 1..=n {
        if n.is_multiple_of(p) && (p..n).all(|i| buf[i] == buf[i - p]) {
            return Ok((p, n / p));
        }
    }
    unreachable!("p = n always qualifies")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ends(buf: &[u8]) -> Vec<usize> {
        LyndonFactorization::of(buf).unwrap().ends().to_vec()
    }

    fn rotate(buf: &[u8], j: usize) -> Vec<u8> {
        let mut v = buf.to_vec();
        v.rotate_left(j);
        v
    }

    /// Definition check: strictly smaller than every proper suffix.
    fn is_lyndon_naive(w: &[u8]) -> bool {
        !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
    }

    /// Repeatedly takes the longest Lyndon prefix.
    fn factorize_naive(t: &[u8]) -> Vec<usize> {
        let mut ends = Vec::new();
        let mut k = 0;
        while k < t.len() {
            let len = (1..=t.len() - k)
                .rev()
                .find(|&l| is_lyndon_naive(&t[k..k + l]))
                .unwrap();
            k += len;
            ends.push(k);
        }
        ends
    }

    #[test]
    fn is_lyndon_examples() {
        assert!(is_lyndon(b"a").unwrap());
        assert!(is_lyndon(b"abb").unwrap());
        assert!(!is_lyndon(b"abab").unwrap());
        assert_eq!(is_lyndon(b""), Err(Error::Empty));
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(ends(b"bacabbabb"), [1, 3, 6, 9]);
        assert_eq!(ends(b"aaa"), [1, 2, 3]);
        assert_eq!(ends(b"banana"), [1, 3, 5, 6]);
        assert_eq!(duval_factorize(b"", |_| {}), Err(Error::Empty));
        assert!(matches!(
            duval_factorize(b"a\0b", |_| {}),
            Err(Error::SentinelInText { offset: 1 })
        ));
    }

    #[test]
    fn factors_slice_text() {
        let text = b"bacabbabb";
        let f = LyndonFactorization::of(text).unwrap();
        let parts: Vec<&[u8]> = f.factors(text).collect();
        assert_eq!(parts, [&b"b"[..], b"ac", b"abb", b"abb"]);
    }

    #[test]
    fn streamed_examples() {
        let mut got = Vec::new();
        duval_factorize_streamed(&mut SliceCursor(b"bacabbabb"), |e| got.push(e.end)).unwrap();
        assert_eq!(got, [1, 3, 6, 9]);
        got.clear();
        duval_factorize_streamed(&mut SliceCursor(b"ab"), |e| got.push(e.end)).unwrap();
        assert_eq!(got, [2]);
        assert_eq!(
            duval_factorize_streamed(&mut SliceCursor(b""), |_| {}).unwrap_err(),
            Error::Empty
        );
    }

    #[test]
    fn streamed_reports_last_handles() {
        let text = b"bacabbabb";
        let mut lasts = Vec::new();
        duval_factorize_streamed(&mut SliceCursor(text), |e| lasts.push((e.last, e.len))).unwrap();
        assert_eq!(lasts, [(0, 1), (2, 2), (5, 3), (8, 3)]);
    }

    #[test]
    fn conjugate_examples() {
        let j = lyndon_conjugate(b"bacabbabb").unwrap();
        assert_eq!(j, 3);
        assert_eq!(rotate(b"bacabbabb", j), b"abbabbbac");
        assert_eq!(lyndon_conjugate(b"ab").unwrap(), 0);
        let j = lyndon_conjugate(b"cba").unwrap();
        assert_eq!((j, rotate(b"cba", j)), (2, b"acb".to_vec()));
        assert_eq!(lyndon_conjugate(b"abab"), Err(Error::NotPrimitive));
    }

    #[test]
    fn primitive_examples() {
        assert!(is_primitive(b"a").unwrap());
        assert!(!is_primitive(b"abab").unwrap());
        assert!(is_primitive(b"bacabbabb").unwrap());
        assert_eq!(primitive_root(b"aaa").unwrap(), (1, 3));
        assert_eq!(primitive_root(b"abab").unwrap(), (2, 2));
        assert_eq!(primitive_root(b"abaaba").unwrap(), (3, 2));
        assert_eq!(primitive_root(b""), Err(Error::Empty));
        assert_eq!(is_primitive_pairwise(b""), Err(Error::Empty));
    }

    #[test]
    fn conjugate_unique_exhaustive_binary() {
        // Every binary string up to length 12.
        for n in 1..=12usize {
            for bits in 0u32..(1 << n) {
                let t: Vec<u8> = (0..n).map(|i| b'a' + ((bits >> i) & 1) as u8).collect();
                let primitive = is_primitive(&t).unwrap();
                assert_eq!(primitive, is_primitive_pairwise(&t).unwrap());
                let lyndon_rotations: Vec<usize> =
                    (0..n).filter(|&j| is_lyndon_naive(&rotate(&t, j))).collect();
                if primitive {
                    assert_eq!(lyndon_rotations, [lyndon_conjugate(&t).unwrap()]);
                } else {
                    assert!(lyndon_rotations.is_empty());
                }
                assert_eq!(ends(&t), factorize_naive(&t));
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn text() -> impl Strategy<Value = Vec<u8>> {
            prop_oneof![
                prop::collection::vec(b'a'..=b'b', 1..300),
                prop::collection::vec(b'a'..=b'd', 1..300),
                prop::collection::vec(1u8..=255, 1..300),
            ]
        }

        proptest! {
            #[test]
            fn factorization_is_chen_fox_lyndon(t in text()) {
                let f = LyndonFactorization::of(&t).unwrap();
                let parts: Vec<&[u8]> = f.factors(&t).collect();
                prop_assert_eq!(parts.concat(), t.clone());
                for p in &parts {
                    prop_assert!(is_lyndon_naive(p));
                    prop_assert!(is_lyndon(p).unwrap());
                }
                for w in parts.windows(2) {
                    prop_assert!(w[0] >= w[1]);
                }
                prop_assert_eq!(f.ends(), &factorize_naive(&t)[..]);
            }

            #[test]
            fn comparisons_bounded_by_2n(t in text()) {
                let c = duval_factorize_counted(&t, |_| {}).unwrap();
                prop_assert!(c <= 2 * t.len());
                let s = duval_factorize_streamed(&mut SliceCursor(&t), |_| {}).unwrap();
                prop_assert_eq!(c, s);
            }

            #[test]
            fn streamed_matches_slice(t in text()) {
                let mut got = Vec::new();
                duval_factorize_streamed(&mut SliceCursor(&t), |e| got.push(e.end)).unwrap();
                let expect = LyndonFactorization::of(&t).unwrap();
                prop_assert_eq!(&got[..], expect.ends());
            }

            #[test]
            fn conjugate_is_lyndon(t in prop::collection::vec(b'a'..=b'c', 1..64)) {
                match lyndon_conjugate(&t) {
                    Ok(j) => {
                        prop_assert!(is_lyndon_naive(&rotate(&t, j)));
                        prop_assert_eq!(
                            (0..t.len()).filter(|&r| is_lyndon_naive(&rotate(&t, r))).count(),
                            1
                        );
                    }
                    Err(e) => {
                        prop_assert_eq!(e, Error::NotPrimitive);
                        prop_assert!(!is_primitive_pairwise(&t).unwrap());
                    }
                }
            }

            #[test]
            fn root_reproduces_text(t in text(), k in 1usize..4) {
                let text = t.repeat(k);
                let (len, exp) = primitive_root(&text).unwrap();
                prop_assert_eq!(text[..len].repeat(exp), text.clone());
                prop_assert!(is_primitive(&text[..len]).unwrap());
                prop_assert!(is_primitive_pairwise(&text[..len]).unwrap());
                prop_assert_eq!(exp % k, 0);
            }
        }
    }
}
