mod construction;
mod conversion;
mod inversion;

use criterion::{criterion_group, criterion_main};

criterion_group!(construct, construction::bench_bbwt, construction::bench_bwt);
criterion_group!(convert, conversion::bench);
criterion_group!(invert, inversion::bench);

criterion_main!(construct, convert, invert);
