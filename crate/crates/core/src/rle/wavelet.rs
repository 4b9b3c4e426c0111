//! Dynamic wavelet matrix over bytes: access, rank, select, insert and
//! remove in `O(8 lg m)` expected time.

use super::seq::WeightedSeq;

const LEVELS: usize = 8;

#[derive(Clone, Debug, Default)]
pub struct DynamicWaveletMatrix {
    levels: [Bits; LEVELS],
}

#[derive(Clone, Debug, Default)]
struct Bits {
    seq: WeightedSeq<()>,
}

impl Bits {
    fn len(&self) -> usize {
        self.seq.len()
    }
    fn zeros(&self) -> usize {
        self.len() - self.seq.total() as usize
    }
    fn get(&self, i: usize) -> bool {
        self.seq.weight(i) == 1
    }
    fn rank1(&self, i: usize) -> usize {
        self.seq.prefix(i) as usize
    }
    fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }
    /// Index of the `j`-th (0-based) bit equal to `bit`.
    fn select(&self, bit: bool, j: usize) -> usize {
        if bit {
            self.seq.locate(j as u64 + 1).expect("select in range").0
        } else {
            self.seq.locate_zero(j as u64 + 1).expect("select in range")
        }
    }
    /// Position in the next level of the item at `i` carrying `bit`.
    fn descend(&self, bit: bool, i: usize) -> usize {
        if bit {
            self.zeros() + self.rank1(i)
        } else {
            self.rank0(i)
        }
    }
}

fn bit(c: u8, level: usize) -> bool {
    (c >> (LEVELS - 1 - level)) & 1 == 1
}

impl DynamicWaveletMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.levels[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Symbol at `i` (0-based).
    pub fn access(&self, mut i: usize) -> u8 {
        let mut c = 0u8;
        for level in &self.levels {
            let b = level.get(i);
            c = (c << 1) | u8::from(b);
            i = level.descend(b, i);
        }
        c
    }

    /// Occurrences of `c` in `0..i`.
    pub fn rank(&self, c: u8, i: usize) -> usize {
        let (mut lo, mut hi) = (0, i);
        for (l, level) in self.levels.iter().enumerate() {
            let b = bit(c, l);
            lo = level.descend(b, lo);
            hi = level.descend(b, hi);
        }
        hi - lo
    }

    /// Index of the `j`-th (0-based) occurrence of `c`.
    pub fn select(&self, c: u8, j: usize) -> Option<usize> {
        if j >= self.rank(c, self.len()) {
            return None;
        }
        let mut lo = 0;
        for (l, level) in self.levels.iter().enumerate() {
            lo = level.descend(bit(c, l), lo);
        }
        let mut pos = lo + j;
        for (l, level) in self.levels.iter().enumerate().rev() {
            let b = bit(c, l);
            let within = if b { pos - level.zeros() } else { pos };
            pos = level.select(b, within);
        }
        Some(pos)
    }

    /// Inserts `c` so that it lands at index `i`.
    pub fn insert(&mut self, mut i: usize, c: u8) {
        assert!(i <= self.len(), "insert index {i} out of range");
        for (l, level) in self.levels.iter_mut().enumerate() {
            let b = bit(c, l);
            level.seq.insert(i, u64::from(b), ());
            i = level.descend(b, i);
        }
    }

    /// Removes and returns the symbol at index `i`.
    pub fn remove(&mut self, mut i: usize) -> u8 {
        assert!(i < self.len(), "remove index {i} out of range");
        let mut c = 0u8;
        for level in self.levels.iter_mut() {
            let b = level.get(i);
            c = (c << 1) | u8::from(b);
            let next = level.descend(b, i);
            level.seq.remove(i);
            i = next;
        }
        c
    }
}
