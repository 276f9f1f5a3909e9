use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use naf_core::comparator::{merit, pbom_sweep, SystemKind, SystemModel};
use naf_core::trit::parse_trits;
use naf_core::{
    classify, decode_real, encode_real, recode_chain, recode_oracle, round_real, Dyadic,
};
use num_bigint::BigInt;

fn recoding(c: &mut Criterion) {
    let x = parse_trits("00111011000T01101110001T1TTT0TT0").unwrap();
    let v = x.int_value();
    c.bench_function("recode_chain/32", |b| {
        b.iter(|| recode_chain(black_box(&x)))
    });
    c.bench_function("recode_oracle/32", |b| {
        b.iter(|| recode_oracle(black_box(&v)))
    });
    let big: BigInt = (BigInt::from(0x5DEECE66Du64) << 200) + 12345;
    c.bench_function("recode_oracle/237-bit", |b| {
        b.iter(|| recode_oracle(black_box(&big)))
    });
}

fn real_codec(c: &mut Criterion) {
    let mut g = c.benchmark_group("real");
    let x: Dyadic = "-104.5".parse().unwrap();
    let y = Dyadic::new(0x3243_F6A8_885A_308D_i64, -60);
    for n in [16usize, 32, 64] {
        let f = encode_real(&x, n).unwrap();
        g.bench_with_input(BenchmarkId::new("encode", n), &n, |b, &n| {
            b.iter(|| encode_real(black_box(&x), n))
        });
        g.bench_with_input(BenchmarkId::new("decode", n), &f, |b, f| {
            b.iter(|| decode_real(black_box(f)))
        });
        g.bench_with_input(BenchmarkId::new("round", n), &n, |b, &n| {
            b.iter(|| round_real(black_box(&y), n))
        });
        g.bench_with_input(BenchmarkId::new("classify", n), &f, |b, f| {
            b.iter(|| classify(black_box(f)))
        });
    }
    g.finish();
}

fn comparator(c: &mut Criterion) {
    let models: Vec<SystemModel> = [SystemKind::Ieee, SystemKind::Posit, SystemKind::Nonadj]
        .into_iter()
        .map(|k| SystemModel::new(k, 32).unwrap())
        .collect();
    c.bench_function("pbom_sweep/3x1401", |b| {
        b.iter(|| pbom_sweep(black_box(&models), -700, 700))
    });
    let nonadj = SystemModel::new(SystemKind::Nonadj, 32).unwrap();
    c.bench_function("merit/nonadj32", |b| b.iter(|| merit(black_box(&nonadj))));
}

criterion_group!(benches, recoding, real_codec, comparator);
criterion_main!(benches);
