use bwtforge::{inplace, rle, RunLengthString};
use bwtforge_bench::{bwt, ladder, Family};
use criterion::{BatchSize, BenchmarkId, Criterion};

pub fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("invert-bwt");
    group.sample_size(10);
    for n in ladder(10, 13) {
        let s = bwt(Family::RandomBytes, n);
        group.bench_with_input(BenchmarkId::new("inplace", n), &s, |b, s| {
            b.iter_batched_ref(
                || s.clone(),
                |buf| inplace::invert_bwt(buf).unwrap(),
                BatchSize::LargeInput,
            )
        });
        let rl = RunLengthString::compress(&s);
        group.bench_with_input(BenchmarkId::new("rle", n), &rl, |b, s| b.iter(|| rle::invert_rlbwt(s).unwrap()));
    }
    group.finish();
}
