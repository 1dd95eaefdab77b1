use criterion::{black_box, criterion_group, criterion_main, Criterion};
use intform_core::commutative::expand_hat_series;
use intform_core::forms::{membership, FormKind};
use intform_core::lie::a4::{A4Basis, A4Root};
use intform_core::pbw::identities::{verify_uea_identity, Params, Reading, UeaIdentity};
use intform_core::pbw::{pbw4, UeaElement};
use intform_core::SequenceSpec;

fn expansion(c: &mut Criterion) {
    c.bench_function("expand_hat_series_cpow2_12", |b| b.iter(|| expand_hat_series(black_box(&SequenceSpec::Cpow2), 12).unwrap()));
}

fn forms(c: &mut Criterion) {
    let p = expand_hat_series(&SequenceSpec::Cpow2, 8).unwrap().coeff(8).clone();
    c.bench_function("membership_mix_degree_8", |b| b.iter(|| membership(black_box(&p), FormKind::Mix)));
}

fn straightening(c: &mut Criterion) {
    let pbw = pbw4();
    let x = UeaElement::generator(A4Basis::XP(A4Root::A1, 0));
    let y = UeaElement::generator(A4Basis::XM(A4Root::A1, 1));
    let xs = pbw.divided_power(&x, 3);
    let ys = pbw.divided_power(&y, 3);
    c.bench_function("straighten_x3_y3", |b| b.iter(|| pbw.mul(black_box(&ys), black_box(&xs))));
}

fn identities(c: &mut Criterion) {
    let p = Params::rs(0, 1);
    c.bench_function("uea_commuplus_1_n4", |b| {
        b.iter(|| verify_uea_identity(UeaIdentity::Commuplus1, Reading::Operative, black_box(&p), 4).unwrap())
    });
}

criterion_group!(benches, expansion, forms, straightening, identities);
criterion_main!(benches);
