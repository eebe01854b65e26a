use criterion::{criterion_group, criterion_main, Criterion};
use hadvp::constants::M_ELECTRON;
use hadvp::nuclear::NuclearModel;
use hadvp::polarization::builtin_params;
use hadvp::shifts::{shift_central, ShiftMethod, ShiftRequest};
use hadvp::solver::{solve_dirac_fns, SolverConfig};
use hadvp::wavefunctions::BoundStateLabel;
use hadvp::RadialPotential;

fn bench_solver(c: &mut Criterion) {
    let model = NuclearModel::sphere_from_rms_fm(82, 5.5012).unwrap();
    let label = BoundStateLabel::new(1, -1, M_ELECTRON, 82).unwrap();
    let params = builtin_params();

    let mut g = c.benchmark_group("solver");
    g.sample_size(10);
    g.bench_function("solve_1s_z82_default_grid", |b| {
        b.iter(|| {
            solve_dirac_fns(&model, None, &SolverConfig::with_states(vec![label])).unwrap()
        })
    });
    let spectrum = solve_dirac_fns(&model, None, &SolverConfig::with_states(vec![label])).unwrap();
    let pot = RadialPotential::closed_form(82, &params, &model).unwrap();
    g.bench_function("expectation_value_1s_z82", |b| {
        b.iter(|| spectrum.expectation_value(&label, &pot).unwrap())
    });
    g.bench_function("rel_fns_approx_shift_z82", |b| {
        b.iter(|| {
            shift_central(&ShiftRequest::new(
                label,
                model.clone(),
                ShiftMethod::RelFnsApprox,
                params.clone(),
            ))
            .unwrap()
        })
    });
    g.finish();
}

criterion_group!(benches, bench_solver);
criterion_main!(benches);
