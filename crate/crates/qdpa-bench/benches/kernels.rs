//! Benchmarks for the kernels the verification suites lean on: Gaussian
//! binomials, the monomial product, Weyl normal ordering, operator
//! application, and a full graded decomposition.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qdpa::galg::{AlgebraKind, Element};
use qdpa::lattice::MultiIndex;
use qdpa::ops::PrimOp;
use qdpa::qarith::{qbinom, qbinom_poly, ScalarField};
use qdpa::repn::decompose;
use qdpa::uq::UqRealization;
use qdpa::weyl::{normalize, WeylVariant};

fn bench_qbinom(c: &mut Criterion) {
    c.bench_function("qbinom_poly 30 choose 15", |b| {
        b.iter(|| std::hint::black_box(qbinom_poly(30, 15)))
    });
    let root = ScalarField::root_of_unity(6).unwrap();
    c.bench_function("qbinom root:6 m<=20", |b| {
        b.iter(|| {
            for m in 0..=20 {
                for r in 0..=m {
                    std::hint::black_box(qbinom(m, r, &root));
                }
            }
        })
    });
}

fn bench_monomial_mul(c: &mut Criterion) {
    let g = ScalarField::Generic;
    let a = Element::monomial(AlgebraKind::DividedPower, MultiIndex::new(vec![3, 1, 2]), g)
        .unwrap();
    let b2 = Element::monomial(AlgebraKind::DividedPower, MultiIndex::new(vec![1, 4, 0]), g)
        .unwrap();
    c.bench_function("divided power monomial product", |b| {
        b.iter(|| std::hint::black_box(a.mul(&b2)))
    });
}

fn bench_normalize(c: &mut Criterion) {
    let g = ScalarField::Generic;
    let n = 3;
    let alphabet: Vec<PrimOp> = {
        let mut v = Vec::new();
        for i in 1..=n {
            v.push(PrimOp::x(n, i));
            v.push(PrimOp::del(i));
            v.push(PrimOp::sigma(i));
            v.push(PrimOp::sigma_inv(i));
            v.push(PrimOp::theta_unit(n, i, false));
            v.push(PrimOp::theta_unit(n, i, true));
        }
        v
    };
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    c.bench_function("weyl normalize length-8 words", |b| {
        b.iter_batched(
            || {
                (0..8)
                    .map(|_| alphabet[rng.gen_range(0..alphabet.len())].clone())
                    .collect::<Vec<_>>()
            },
            |w| std::hint::black_box(normalize(&w, WeylVariant::Plus, n, &g)),
            BatchSize::SmallInput,
        )
    });
}

fn bench_uq_apply(c: &mut Criterion) {
    let g = ScalarField::Generic;
    let r = UqRealization::new(3, AlgebraKind::DividedPower, g).unwrap();
    let x = Element::monomial(AlgebraKind::DividedPower, MultiIndex::new(vec![2, 3, 1]), g)
        .unwrap();
    let e1 = r.e(1);
    c.bench_function("e_1 applied to a monomial", |b| {
        b.iter(|| std::hint::black_box(e1.apply(&x)))
    });
}

fn bench_decompose(c: &mut Criterion) {
    let f3 = ScalarField::root_of_unity(3).unwrap();
    c.bench_function("decompose restricted n=2 l=3", |b| {
        b.iter(|| std::hint::black_box(decompose(AlgebraKind::Restricted(3), 2, f3, None)))
    });
}

criterion_group!(
    benches,
    bench_qbinom,
    bench_monomial_mul,
    bench_normalize,
    bench_uq_apply,
    bench_decompose
);
criterion_main!(benches);
