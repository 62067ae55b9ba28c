//! Compares the sequential and rayon-parallel amplitude kernels on the same
//! workloads: single- and two-qubit gate application at several register
//! widths, plus a full Grover iterate.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex;
use qsim::circuit::gates;
use qsim::state::kernel::apply_gate_seq;
#[cfg(feature = "parallel")]
use qsim::state::kernel::apply_gate_par;
use qsim::state::{random_state, RandomSource};

type C64 = Complex<f64>;

fn bench_single_qubit_gate(c: &mut Criterion) {
    let mut group = c.benchmark_group("hadamard_kernel");
    for n in [12usize, 16, 20] {
        let mut rng = RandomSource::new(1);
        let state = random_state(n, &mut rng);
        let gate = gates::hadamard();
        let mut out = vec![C64::new(0.0, 0.0); 1 << n];

        group.bench_with_input(BenchmarkId::new("seq", n), &n, |b, _| {
            b.iter(|| apply_gate_seq(state.amplitudes(), &mut out, n, &gate, &[n / 2]));
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", n), &n, |b, _| {
            b.iter(|| apply_gate_par(state.amplitudes(), &mut out, n, &gate, &[n / 2]));
        });
    }
    group.finish();
}

fn bench_two_qubit_gate(c: &mut Criterion) {
    let mut group = c.benchmark_group("cnot_kernel");
    for n in [12usize, 16, 20] {
        let mut rng = RandomSource::new(2);
        let state = random_state(n, &mut rng);
        let gate = gates::cnot();
        let mut out = vec![C64::new(0.0, 0.0); 1 << n];

        group.bench_with_input(BenchmarkId::new("seq", n), &n, |b, _| {
            b.iter(|| apply_gate_seq(state.amplitudes(), &mut out, n, &gate, &[0, n - 1]));
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", n), &n, |b, _| {
            b.iter(|| apply_gate_par(state.amplitudes(), &mut out, n, &gate, &[0, n - 1]));
        });
    }
    group.finish();
}

fn bench_grover_iterate(c: &mut Criterion) {
    use qsim::query::{grover_iterate_in_place, BitOracle};
    let mut group = c.benchmark_group("grover_iterate");
    for n in [14usize, 18] {
        let big_n = 1usize << n;
        let mut bits = vec![false; big_n];
        bits[big_n / 3] = true;
        group.bench_with_input(BenchmarkId::new("direct", n), &n, |b, _| {
            let mut oracle = BitOracle::new(bits.clone()).unwrap();
            let mut amps = vec![C64::new((1.0 / big_n as f64).sqrt(), 0.0); big_n];
            b.iter(|| grover_iterate_in_place(&mut oracle, &mut amps));
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_single_qubit_gate,
    bench_two_qubit_gate,
    bench_grover_iterate
);
criterion_main!(benches);
