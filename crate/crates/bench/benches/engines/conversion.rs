use bwtforge::{inplace, rle, RunLengthString};
use bwtforge_bench::{bbwt, bwt, ladder, Family};
use criterion::{BatchSize, BenchmarkId, Criterion};

pub fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("convert");
    group.sample_size(10);
    for family in [Family::AbPower, Family::Unary] {
        for n in ladder(10, 13) {
            let from_bwt = bwt(family, n);
            let from_bbwt = bbwt(family, n);
            let id = |what: &str| BenchmarkId::new(format!("{what}/{}", family.name()), n);
            group.bench_with_input(id("inplace-bwt-bbwt"), &from_bwt, |b, s| {
                b.iter_batched_ref(|| s.clone(), |buf| inplace::convert_bwt_to_bbwt(buf).unwrap(), BatchSize::LargeInput)
            });
            let rl = RunLengthString::compress(&from_bwt);
            group.bench_with_input(id("rle-bwt-bbwt"), &rl, |b, s| b.iter(|| rle::convert_rlbwt_to_rlbbwt(s).unwrap()));
            let rl = RunLengthString::compress(&from_bbwt);
            group.bench_with_input(id("rle-bbwt-bwt"), &rl, |b, s| b.iter(|| rle::convert_rlbbwt_to_rlbwt(s).unwrap()));
        }
    }
    group.finish();
}
