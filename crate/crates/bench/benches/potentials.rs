use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hadvp::nuclear::NuclearModel;
use hadvp::polarization::builtin_params;
use hadvp::potentials::{
    uehling_convolved, uehling_full, uehling_leptonic, uehling_point_approx,
    uehling_sphere_closed, PotentialMethod, PotentialSpec,
};
use hadvp::shifts::shift_1s_closed_form;
use hadvp::LoopSpecies;

fn bench_potentials(c: &mut Criterion) {
    let params = builtin_params();
    let model = NuclearModel::sphere_from_rms_fm(82, 5.5012).unwrap();
    let radius = model.support_radius();

    c.bench_function("uehling_point_approx", |b| {
        b.iter(|| uehling_point_approx(82, &params, black_box(1.3)).unwrap())
    });
    c.bench_function("uehling_sphere_closed", |b| {
        b.iter(|| uehling_sphere_closed(82, &params, radius, black_box(0.7 * radius)).unwrap())
    });
    c.bench_function("uehling_convolved_sphere", |b| {
        b.iter(|| uehling_convolved(82, &params, &model, black_box(0.7 * radius)).unwrap())
    });
    let spec = PotentialSpec {
        species: LoopSpecies::HadronicParametrized,
        params: params.clone(),
        model: model.clone(),
        method: PotentialMethod::FullQuadrature,
    };
    let mut slow = c.benchmark_group("slow");
    slow.sample_size(10);
    slow.bench_function("uehling_full_sphere", |b| {
        b.iter(|| uehling_full(&spec, black_box(0.7 * radius)).unwrap())
    });
    slow.finish();
    c.bench_function("uehling_leptonic_muon", |b| {
        b.iter(|| uehling_leptonic(LoopSpecies::MuonLoop, 1, black_box(3.0)).unwrap())
    });
    c.bench_function("shift_1s_closed_form_z82", |b| {
        b.iter(|| shift_1s_closed_form(82, hadvp::constants::M_ELECTRON, &params).unwrap())
    });
}

criterion_group!(benches, bench_potentials);
criterion_main!(benches);
