use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use flagcycle::cycle::{neutral_fiber, parabolic_data};
use flagcycle::pipeline::{run_table, TableOptions};
use flagcycle::realform::{grade_roots, hermitian_data};
use flagcycle::rootsys::{RootSystem, DEFAULT_WEYL_CAP};
use flagcycle::snow::{w0_max_length_bruteforce, w0_max_length_fast, AmplenessInput};
use flagcycle::Parallelism;

fn table_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("table sweep serial vs parallel");
    group.sample_size(10);
    for t in ["B3", "D4", "F4"] {
        for (label, par) in [
            ("serial", Parallelism::Serial),
            ("parallel", Parallelism::Parallel),
        ] {
            group.bench_with_input(BenchmarkId::new(label, t), &t, |b, t| {
                let opts = TableOptions {
                    parallelism: par,
                    ..Default::default()
                };
                b.iter(|| run_table(t.parse().unwrap(), &opts))
            });
        }
    }
    group.finish();
}

fn w0_scan(c: &mut Criterion) {
    // E7 with 𝔨 = D6 + A1 (|W_K| = 46080) over the full flag
    let rs = RootSystem::new("E7".parse().unwrap());
    let grading = grade_roots(&rs, &[0]).unwrap();
    let h = hermitian_data(&rs, &grading).unwrap();
    let pd = parabolic_data(&rs, &grading, &[]).unwrap();
    let input = AmplenessInput {
        rs: &rs,
        k_simples: h.k_simples.clone(),
        fiber: neutral_fiber(&pd, &grading).unwrap(),
        levi_correction: pd.levi_correction,
        dim_c: pd.dim_c,
    };
    let mut group = c.benchmark_group("W0 maximum on E7");
    group.sample_size(10);
    group.bench_function("bruteforce serial", |b| {
        b.iter(|| w0_max_length_bruteforce(&input, DEFAULT_WEYL_CAP, Parallelism::Serial).unwrap())
    });
    group.bench_function("bruteforce parallel", |b| {
        b.iter(|| {
            w0_max_length_bruteforce(&input, DEFAULT_WEYL_CAP, Parallelism::Parallel).unwrap()
        })
    });
    group.bench_function("fast", |b| b.iter(|| w0_max_length_fast(&input)));
    group.finish();
}

criterion_group!(benches, table_sweep, w0_scan);
criterion_main!(benches);
