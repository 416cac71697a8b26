use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use foilsim_bench::{photon_for_eta, reference_foil, reference_plan};
use foilsim_core::experiment::{run_single_photon_trial, RunOutput};
use foilsim_core::oscillator::{
    kick_matrix_element, kick_matrix_element_numeric, KickSpec, Parity,
};
use foilsim_core::scattering::{r_bound, ratio_r, ExcitationMode};
use std::hint::black_box;

fn bench_matrix_elements(c: &mut Criterion) {
    let mut group = c.benchmark_group("kick_matrix_element");
    group.bench_function("closed_form_n20", |b| {
        b.iter(|| kick_matrix_element(black_box(20), black_box(1.0), Parity::Even).unwrap())
    });
    let foil = reference_foil();
    let photon = photon_for_eta(&foil, 1.0);
    let kick = KickSpec::elastic_reflection(photon.wavenumber(), Parity::Even).unwrap();
    group.bench_function("quadrature_oracle_n10", |b| {
        b.iter(|| kick_matrix_element_numeric(black_box(10), &foil, &kick).unwrap())
    });
    group.finish();
}

fn bench_ratio_curves(c: &mut Criterion) {
    c.bench_function("r_bound_grid_1000", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for i in 1..=1000 {
                let eta = f64::from(i) * 3e-3;
                acc += r_bound(black_box(eta)).unwrap();
                acc += ratio_r(black_box(eta), ExcitationMode::Exact).unwrap();
            }
            acc
        })
    });
}

fn bench_monte_carlo(c: &mut Criterion) {
    let plan = reference_plan(1);
    c.bench_function("single_photon_trial", |b| {
        let mut trial = 0u64;
        b.iter(|| {
            trial += 1;
            run_single_photon_trial(&plan, black_box(trial))
        })
    });
    c.bench_function("run_10k_trials", |b| {
        let plan = reference_plan(10_000);
        b.iter_batched(
            || plan,
            |p| {
                let RunOutput::SinglePhoton(records) =
                    foilsim_core::experiment::run(&p).unwrap()
                else {
                    unreachable!()
                };
                records.len()
            },
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(benches, bench_matrix_elements, bench_ratio_curves, bench_monte_carlo);
criterion_main!(benches);
