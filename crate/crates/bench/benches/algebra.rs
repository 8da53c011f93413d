use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use twistdesc_core::bialgebra::{graded_log_identity, Antipode};
use twistdesc_core::hopf::{cosym_coproduct, symmetrized_product};
use twistdesc_core::{enumerate_set_compositions, CompHopf, IncreasingTree, LinComb, SetComposition};

fn bijection(c: &mut Criterion) {
    let comps = enumerate_set_compositions(6);
    c.bench_function("tau then sigma over Comp_6", |b| {
        b.iter(|| {
            for p in &comps {
                let t = IncreasingTree::tau(p);
                assert_eq!(&t.sigma().unwrap(), p);
            }
        })
    });
}

fn products(c: &mut Criterion) {
    let p = "2|1,3".parse().unwrap();
    let q = "1,3|2".parse().unwrap();
    c.bench_function("symmetrized product, degree 3 by 3", |b| {
        b.iter(|| symmetrized_product(&p, &q).unwrap())
    });
    let big = "3,6|1|2,5|4,7".parse().unwrap();
    c.bench_function("cosymmetrized coproduct, degree 7", |b| {
        b.iter(|| cosym_coproduct(&big).unwrap())
    });
}

fn logarithm(c: &mut Criterion) {
    let p: SetComposition = "2|1,4|3".parse().unwrap();
    c.bench_function("e1 in degree 4, cold cache", |b| {
        b.iter_batched(
            || graded_log_identity(CompHopf::RestrictedCosym),
            |e| e.apply(&LinComb::basis(p.clone())),
            BatchSize::SmallInput,
        )
    });
    c.bench_function("antipode table to degree 4", |b| {
        b.iter(|| Antipode::up_to(&CompHopf::RestrictedCosym, 4))
    });
}

criterion_group!(benches, bijection, products, logarithm);
criterion_main!(benches);
