//! Inputs shared by the criterion benches.

use bwtforge::oracle;
use bwtforge::TransformKind;
pub use bwtforge_cli::corpus::Family;

pub const SEED: u64 = 0xbe7c_4000;

/// Sizes `2^lo ..= 2^hi`.
pub fn ladder(lo: u32, hi: u32) -> impl Iterator<Item = usize> {
    (lo..=hi).map(|log| 1usize << log)
}

pub fn text(family: Family, n: usize) -> Vec<u8> {
    family.generate(n, SEED)
}

/// BWT of `T$` for a family text, computed once outside the timed loop.
pub fn bwt(family: Family, n: usize) -> Vec<u8> {
    oracle::transform_bytes(TransformKind::Bwt, &text(family, n)).expect("family texts are sentinel-free")
}

pub fn bbwt(family: Family, n: usize) -> Vec<u8> {
    let mut buf = text(family, n);
    bwtforge::inplace::construct_bbwt(&mut buf).expect("family texts are sentinel-free");
    buf
}
