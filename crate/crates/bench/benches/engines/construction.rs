use bwtforge::{inplace, rle};
use bwtforge_bench::{ladder, text, Family};
use criterion::{BenchmarkId, Criterion, Throughput};

pub fn bench_bbwt(c: &mut Criterion) {
    let mut group = c.benchmark_group("bbwt");
    group.sample_size(10);
    for family in [Family::RandomBinary, Family::AbPower] {
        for n in ladder(10, 13) {
            let t = text(family, n);
            group.throughput(Throughput::Bytes(n as u64));
            group.bench_with_input(BenchmarkId::new(format!("inplace/{}", family.name()), n), &t, |b, t| {
                b.iter_batched_ref(|| t.clone(), |buf| inplace::construct_bbwt(buf).unwrap(), criterion::BatchSize::LargeInput)
            });
            group.bench_with_input(BenchmarkId::new(format!("rle/{}", family.name()), n), &t, |b, t| {
                b.iter(|| rle::rlbbwt(t).unwrap())
            });
        }
    }
    group.finish();
}

pub fn bench_bwt(c: &mut Criterion) {
    let mut group = c.benchmark_group("bwt");
    group.sample_size(10);
    for n in ladder(10, 14) {
        let t = text(Family::RandomBytes, n);
        group.throughput(Throughput::Bytes(n as u64));
        group.bench_with_input(BenchmarkId::new("rle/online", n), &t, |b, t| b.iter(|| rle::rlbwt(t).unwrap()));
    }
    group.finish();
}
