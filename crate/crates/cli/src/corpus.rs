//! Generated inputs for `verify --random` and `bench`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const SEED_VAR: &str = "BWTFORGE_SEED";
pub const DEFAULT_SEED: u64 = 0x5eed_b3f7;

/// Seed from `BWTFORGE_SEED` (decimal or `0x` hex), else the default.
pub fn seed_from_env() -> Result<u64, String> {
    match std::env::var(SEED_VAR) {
        Ok(v) => parse_seed(&v).ok_or_else(|| format!("{SEED_VAR}={v:?} is not a u64")),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn parse_seed(v: &str) -> Option<u64> {
    let v = v.trim();
    match v.strip_prefix("0x").or_else(|| v.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16).ok(),
        None => v.parse().ok(),
    }
}

/// Random sentinel-free text over the `sigma` symbols starting at `a`
/// (or all 255 non-zero bytes when `sigma` is 255 or more).
pub fn random_text(rng: &mut impl Rng, n: usize, sigma: usize) -> Vec<u8> {
    let (lo, hi) = if sigma >= 255 { (1u8, 255u8) } else { (b'a', b'a' + sigma as u8 - 1) };
    (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
}

/// `count` texts of length 1..=max_len over alphabets of size 2, 4 and 255,
/// with some periodic ones mixed in.
pub fn random_corpus(seed: u64, count: usize, max_len: usize) -> Vec<Vec<u8>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=max_len);
            let sigma = [2, 4, 255][i % 3];
            if i % 7 == 6 {
                let period = rng.gen_range(1..=4.min(n));
                let root = random_text(&mut rng, period, sigma);
                root.iter().copied().cycle().take(n).collect()
            } else {
                random_text(&mut rng, n, sigma)
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    RandomBytes,
    RandomBinary,
    AbPower,
    Unary,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::RandomBytes, Family::RandomBinary, Family::AbPower, Family::Unary];

    pub fn name(self) -> &'static str {
        match self {
            Family::RandomBytes => "random-bytes",
            Family::RandomBinary => "random-binary",
            Family::AbPower => "(ab)^k",
            Family::Unary => "a^k",
        }
    }

    pub fn generate(self, n: usize, seed: u64) -> Vec<u8> {
        let mut rng = StdRng::seed_from_u64(seed ^ n as u64);
        match self {
            Family::RandomBytes => random_text(&mut rng, n, 255),
            Family::RandomBinary => random_text(&mut rng, n, 2),
            Family::AbPower => b"ab".iter().copied().cycle().take(n).collect(),
            Family::Unary => vec![b'a'; n],
        }
    }
}
