//! Quadratic-time transforms that rewrite their input buffer.
//!
//! Apart from the buffer, every operation here keeps a constant number of
//! machine words and at most one [`CountTable`] on the stack; nothing is
//! heap-allocated. LF steps are simulated by one scan of the current
//! transform region and FL steps by a count table plus one select scan, so
//! each step is `O(n)` and every operation is `O(n^2)`.
//!
//! Inserting or deleting a row inside a loop is a shift within the same
//! allocation. Operations that need a sentinel slot (`construct_bwt`,
//! `convert_bbwt_to_bwt`) push one byte onto the `Vec`; reserve it up front
//! if the buffer must not reallocate.

use crate::lyndon::{factor_block, first_block_streamed, least_rotation, SymbolCursor};
use crate::text::{
    check_nonempty_text, fl_unchecked, lf_unchecked, rank_unchecked, select_unchecked,
    sentinel_row, CountTable,
};
use crate::{Error, Result, SENTINEL};

// ---------------------------------------------------------------------------
// Construction of BBWT and BWTC
// ---------------------------------------------------------------------------

/// Rewrites `buf` from a text into its BBWT.
///
/// Factors are found by Duval's scan and merged left to right: the factor's
/// last symbol is prepended to the transform built so far, then each
/// preceding symbol is inserted at `LF[p] + 1`.
pub fn construct_bbwt(buf: &mut [u8]) -> Result<()> {
    check_nonempty_text(buf)?;
    bbwt_unchecked(buf);
    Ok(())
}

/// [`construct_bbwt`] that calls `observer` with the transform prefix after
/// each factor is merged.
pub fn construct_bbwt_observed(buf: &mut [u8], mut observer: impl FnMut(&[u8])) -> Result<()> {
    check_nonempty_text(buf)?;
    bbwt_impl(buf, &mut observer);
    Ok(())
}

fn bbwt_unchecked(buf: &mut [u8]) {
    bbwt_impl(buf, &mut |_| {});
}

fn bbwt_impl(buf: &mut [u8], observer: &mut dyn FnMut(&[u8])) {
    let n = buf.len();
    let mut done = 0;
    while done < n {
        // Only buf[done..] is read here; merging touches buf[..end] only, so
        // later copies in the same block are still intact text.
        let block = factor_block(buf, done);
        for _ in 0..block.repeats {
            let end = done + block.period;
            merge_factor(buf, done, end);
            observer(&buf[..end]);
            done = end;
        }
    }
}

/// `buf[..start]` is the BBWT of the preceding factors and `buf[start..end]`
/// the next (smallest so far) Lyndon factor; leaves the BBWT of both in
/// `buf[..end]`.
fn merge_factor(buf: &mut [u8], start: usize, end: usize) {
    // Prepend the factor's last symbol. The rest of the factor now sits in
    // buf[start + 1..end].
    buf[..end].rotate_right(1);
    let mut len = start + 1;
    let mut p = 1;
    while len < end {
        p = lf_unchecked(&buf[..len], p) + 1;
        // Next symbol to insert is the last one still pending.
        buf[p - 1..end].rotate_right(1);
        len += 1;
    }
}

/// Rewrites `buf` into its BWTC and returns the row (1-based) of the text
/// itself among its sorted rotations, which [`invert_bwtc`] needs back.
///
/// A primitive text is rotated to its Lyndon conjugate, whose BWTC equals its
/// BBWT. A power `P^k` is handled on `P` and every symbol then expanded into
/// a run of `k` copies.
pub fn construct_bwtc(buf: &mut [u8]) -> Result<usize> {
    check_nonempty_text(buf)?;
    let n = buf.len();
    let (root_len, exponent) = if crate::lyndon::is_primitive_pairwise(buf)? {
        (n, 1)
    } else {
        crate::lyndon::primitive_root(buf)?
    };
    let root = &mut buf[..root_len];
    let j = least_rotation(root);
    root.rotate_left(j);
    bbwt_unchecked(root);

    // Row 1 now holds the Lyndon conjugate L; the root is L rotated left by
    // `d`, so its row is FL^d(1).
    let d = (root_len - j) % root_len;
    let table = CountTable::new(root);
    let mut row = 1;
    for _ in 0..d {
        row = fl_with(root, &table, row);
    }

    for i in (0..root_len).rev() {
        let c = buf[i];
        buf[i * exponent..(i + 1) * exponent].fill(c);
    }
    Ok((row - 1) * exponent + 1)
}

// ---------------------------------------------------------------------------
// Inversions
// ---------------------------------------------------------------------------

/// One step of the in-place inversion: the sentinel-marked row `p` of
/// `buf[..len]` is followed forward, the symbol found there is returned and
/// replaced by the sentinel, and row `p` is deleted. The freed slot is
/// `buf[len - 1]`. Returns the symbol and the new marked row.
fn extract_step(buf: &mut [u8], len: usize, p: usize) -> (u8, usize) {
    let region = &mut buf[..len];
    let q = fl_unchecked(region, p);
    let c = region[q - 1];
    region[q - 1] = SENTINEL;
    region[p - 1..].rotate_left(1);
    (c, if q > p { q - 1 } else { q })
}

/// Restores the text from a BWT of `T$`, shrinking the buffer to `T`.
pub fn invert_bwt(buf: &mut Vec<u8>) -> Result<()> {
    let mut p = sentinel_row(buf)?;
    let total = buf.len();
    let mut len = total;
    while len > 1 {
        let (c, q) = extract_step(buf, len, p);
        len -= 1;
        buf[len] = c;
        p = q;
    }
    // buf = $ followed by the text reversed.
    buf.reverse();
    buf.truncate(total - 1);
    Ok(())
}

/// Restores a text from its BWTC, given the row of the text among the
/// sorted rotations (as returned by [`construct_bwtc`]).
///
/// The walk always starts at row 1, the Lyndon conjugate, where the
/// inversion is well defined; the requested rotation is then recovered from
/// the LF distance between `row` and row 1. Powers `P^k` are recognized by
/// the length of the LF cycle through `row`.
pub fn invert_bwtc(buf: &mut [u8], row: usize) -> Result<()> {
    check_nonempty_text(buf)?;
    let n = buf.len();
    if row == 0 || row > n {
        return Err(Error::OutOfRange { pos: row, len: n });
    }

    let mut cycle = 1;
    let mut q = lf_unchecked(buf, row);
    while q != row {
        q = lf_unchecked(buf, q);
        cycle += 1;
        if cycle > n {
            return Err(Error::Corrupt("LF walk does not close"));
        }
    }
    if !n.is_multiple_of(cycle) {
        return Err(Error::Corrupt("LF cycle length does not divide n"));
    }
    let exponent = n / cycle;
    let mut row = row;
    if exponent > 1 {
        if (0..n).any(|i| buf[i] != buf[i - i % exponent]) {
            return Err(Error::Corrupt("runs are not multiples of the exponent"));
        }
        for i in 0..cycle {
            buf[i] = buf[i * exponent];
        }
        row = (row - 1) / exponent + 1;
    }
    let region = &mut buf[..cycle];

    let mut d = 0;
    let mut q = row;
    while q != 1 {
        q = lf_unchecked(region, q);
        d += 1;
        if d > cycle {
            return Err(Error::Corrupt("row 1 is not on the LF cycle"));
        }
    }

    invert_from_first_row(region)?;
    region.rotate_left(d);
    for copy in 1..exponent {
        buf.copy_within(0..cycle, copy * cycle);
    }
    Ok(())
}

/// Inverts a primitive BWTC starting at row 1, leaving the Lyndon conjugate.
pub fn invert_bwtc_lyndon(buf: &mut [u8]) -> Result<()> {
    check_nonempty_text(buf)?;
    let cycle = {
        let mut len = 1;
        let mut q = lf_unchecked(buf, 1);
        while q != 1 && len <= buf.len() {
            q = lf_unchecked(buf, q);
            len += 1;
        }
        len
    };
    if cycle != buf.len() {
        return Err(Error::Corrupt("BWTC of a non-primitive text needs a start row"));
    }
    invert_from_first_row(buf)
}

/// For a Lyndon word the BWTC and BBWT coincide, and the whole region is a
/// single factor.
fn invert_from_first_row(region: &mut [u8]) -> Result<()> {
    if extract_last_factor(region, region.len())? != region.len() {
        return Err(Error::Corrupt("BWTC splits into several factors"));
    }
    Ok(())
}

/// Cuts the last Lyndon factor out of the BBWT in `buf[..len]`, leaving the
/// BBWT of the remaining factors in `buf[..len - |T_x|]` and the factor, in
/// text order, right after it. Returns the factor length.
///
/// A sentinel inserted after row 1 would turn the last factor `T_x` into
/// `$T_x`, a Lyndon word, after which the BWT inversion applies. The first
/// inversion step is done without materializing that sentinel: it lands on
/// the first occurrence of the smallest symbol, which is `T_x[1]`.
fn extract_last_factor(buf: &mut [u8], len: usize) -> Result<usize> {
    let (mut len, start_len) = (len, len);
    let smallest = *buf[..len].iter().min().expect("nonempty region");
    let q = buf[..len].iter().position(|&b| b == smallest).unwrap() + 1;
    let mut pending = buf[q - 1];
    buf[q - 1] = SENTINEL;
    let mut p = q;
    let mut steps = 0;
    while p != 1 {
        steps += 1;
        if steps > start_len {
            return Err(Error::Corrupt("inversion walk does not reach row 1"));
        }
        let (c, q) = extract_step(buf, len, p);
        len -= 1;
        buf[len] = pending;
        pending = c;
        p = q;
    }
    // Row 1 holds the sentinel now; drop it.
    buf[..len].rotate_left(1);
    len -= 1;
    buf[len] = pending;
    let factor = start_len - len;
    buf[len..start_len].reverse();
    Ok(factor)
}

/// Restores the text from its BBWT. Factors come out last to first; each is
/// placed in front of the ones already restored.
pub fn invert_bbwt(buf: &mut [u8]) -> Result<()> {
    check_nonempty_text(buf)?;
    let mut len = buf.len();
    while len > 0 {
        len -= extract_last_factor(buf, len)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// BWT construction and BBWT -> BWT
// ---------------------------------------------------------------------------

/// `buf[text_end..]` is the BWT of some `W$` with its sentinel at row
/// `sentinel` (1-based within that region). Prepends `buf[..text_end]` to
/// `W`, one symbol at a time from the right, and returns the final sentinel
/// row. Afterwards all of `buf` is the BWT.
fn extend_left(buf: &mut [u8], text_end: usize, mut sentinel: usize) -> usize {
    for i in (0..text_end).rev() {
        let c = buf[i];
        let region = &mut buf[i + 1..];
        region[sentinel - 1] = c;
        let q = lf_unchecked(region, sentinel) + 1;
        buf.copy_within(i + 1..i + q, i);
        buf[i + q - 1] = SENTINEL;
        sentinel = q;
    }
    sentinel
}

/// Rewrites a text into the BWT of `T$`, growing the buffer by one byte.
/// Symbols are consumed right to left; each step replaces the sentinel by
/// the new symbol and reinserts the sentinel one backward step later.
pub fn construct_bwt(buf: &mut Vec<u8>) -> Result<()> {
    check_nonempty_text(buf)?;
    let n = buf.len();
    buf.push(SENTINEL);
    extend_left(buf, n, 1);
    Ok(())
}

/// Rewrites a BBWT of `T` into the BWT of `T$`, growing the buffer by one
/// byte. Each Lyndon factor is cut out of the BBWT and, once complete, fed
/// into the BWT right to left.
pub fn convert_bbwt_to_bwt(buf: &mut Vec<u8>) -> Result<()> {
    check_nonempty_text(buf)?;
    let n = buf.len();
    buf.push(SENTINEL);
    let mut len = n;
    let mut sentinel = 1;
    while len > 0 {
        let factor = extract_last_factor(buf, len)?;
        len -= factor;
        sentinel = extend_left(&mut buf[len..], factor, sentinel);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// BWT -> BBWT
// ---------------------------------------------------------------------------

fn fl_with(buf: &[u8], table: &CountTable, i: usize) -> usize {
    let f = table.first_symbol(i).expect("row in range");
    select_unchecked(buf, f, i - table.smaller(f)).expect("table matches buffer")
}

fn lf_with(buf: &[u8], table: &CountTable, i: usize) -> usize {
    let c = buf[i - 1];
    table.smaller(c) + rank_unchecked(buf, c, i)
}

/// Forward reader over the text still attached to the sentinel's cycle.
struct FlCursor<'a> {
    buf: &'a [u8],
    table: &'a CountTable,
    sentinel: usize,
}

impl SymbolCursor for FlCursor<'_> {
    type Pos = usize;

    fn start(&mut self) -> Option<usize> {
        self.advance(self.sentinel)
    }

    fn advance(&mut self, row: usize) -> Option<usize> {
        let next = fl_with(self.buf, self.table, row);
        (self.buf[next - 1] != SENTINEL).then_some(next)
    }

    fn symbol(&mut self, row: usize) -> u8 {
        self.buf[row - 1]
    }
}

/// Rewrites the BWT of `T$` into the BBWT of `T$` (which is `$` followed by
/// the BBWT of `T`). The buffer length is unchanged.
///
/// The BWT is read in text order with FL steps to find Lyndon factors. Each
/// factor `T_x` is cut into its own LF cycle: with `p` the row preceding
/// `T_x`'s last symbol and `i_f = FL[p]`, the entries at `i_f` and at the
/// sentinel are exchanged. The rows of `T_x` now sort later than before,
/// since their context continues with `T_x` instead of `T_{x+1} ... $`; row
/// `p` has to move past the `m` rows right below it, where `m` counts the
/// copies of `T_x`'s last symbol strictly between `i_f` and the sentinel.
/// Moving a row is a rotation of the last column over that block. When the
/// moved symbol `c` passes `k` copies of itself, the row one backward step
/// earlier must likewise move past `k` rows of the `c` interval, so the
/// repair recurses along LF until nothing is passed.
pub fn convert_bwt_to_bbwt(buf: &mut [u8]) -> Result<()> {
    convert_bwt_to_bbwt_impl(buf, false)
}

/// [`convert_bwt_to_bbwt`] that checks every cut factor: an LF walk from the
/// row of its last symbol must close after exactly `|T_x|` steps and spell
/// `T_x` backwards. Allocates a copy of each factor.
pub fn convert_bwt_to_bbwt_verified(buf: &mut [u8]) -> Result<()> {
    convert_bwt_to_bbwt_impl(buf, true)
}

fn convert_bwt_to_bbwt_impl(buf: &mut [u8], verify: bool) -> Result<()> {
    sentinel_row(buf)?;
    let n = buf.len();
    // The symbol multiset never changes, only positions.
    let table = CountTable::new(buf);
    let mut factors = 0;
    loop {
        let sentinel = sentinel_row(buf)?;
        if sentinel == 1 {
            return Ok(());
        }
        let block = {
            let mut cursor = FlCursor {
                buf,
                table: &table,
                sentinel,
            };
            let start = cursor
                .start()
                .ok_or(Error::Corrupt("sentinel cycle is empty"))?;
            first_block_streamed(&mut cursor, start)
        };
        for _ in 0..block.repeats {
            factors += 1;
            if factors > n {
                return Err(Error::Corrupt("too many factors"));
            }
            if verify {
                cut_factor_verified(buf, &table, block.period)?;
            } else {
                cut_factor(buf, &table, block.period)?;
            }
        }
    }
}

/// Cuts the factor of length `len` that follows the sentinel. Returns the
/// row holding the factor's last symbol afterwards.
fn cut_factor(buf: &mut [u8], table: &CountTable, len: usize) -> Result<usize> {
    let n = buf.len();
    let i_sentinel = sentinel_row(buf)?;
    let mut p = i_sentinel;
    for _ in 1..len {
        p = fl_with(buf, table, p);
    }
    let i_f = fl_with(buf, table, p);
    if i_f >= i_sentinel {
        return Err(Error::Corrupt("factor end does not precede the sentinel"));
    }
    let f = buf[i_f - 1];
    let m = buf[i_f..i_sentinel - 1].iter().filter(|&&b| b == f).count();
    buf.swap(i_f - 1, i_sentinel - 1);

    // Row of the rotation equal to the factor itself; it holds the factor's
    // last symbol and may itself be moved by the repair.
    let mut tracked = i_sentinel;
    let mut row = p;
    let mut pass = m;
    let mut depth = 0;
    while pass > 0 {
        depth += 1;
        if depth > n || row + pass > n {
            return Err(Error::Corrupt("swap repair ran past the transform"));
        }
        let c = buf[row - 1];
        let next = lf_with(buf, table, row);
        let next_pass = buf[row..row + pass].iter().filter(|&&b| b == c).count();
        buf[row - 1..row + pass].rotate_left(1);
        if tracked == row {
            tracked = row + pass;
        } else if tracked > row && tracked <= row + pass {
            tracked -= 1;
        }
        row = next;
        pass = next_pass;
    }
    Ok(tracked)
}

fn cut_factor_verified(buf: &mut [u8], table: &CountTable, len: usize) -> Result<usize> {
    let sentinel = sentinel_row(buf)?;
    let mut factor = Vec::with_capacity(len);
    let mut row = sentinel;
    for _ in 0..len {
        row = fl_with(buf, table, row);
        factor.push(buf[row - 1]);
    }
    let last_row = cut_factor(buf, table, len)?;
    let mut row = last_row;
    for expected in factor.iter().rev() {
        if buf[row - 1] != *expected {
            return Err(Error::Corrupt("cut factor does not spell the factor"));
        }
        row = lf_with(buf, table, row);
    }
    if row != last_row {
        return Err(Error::Corrupt("cut factor does not form a closed cycle"));
    }
    Ok(last_row)
}
