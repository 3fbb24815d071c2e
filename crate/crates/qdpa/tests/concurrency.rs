//! Values are immutable and thread-safe: everything can be shared across
//! threads and the pure operations agree with the single-threaded results.

use std::sync::Arc;
use std::thread;

use qdpa::galg::{AlgebraKind, Element};
use qdpa::lattice::{monomials_up_to_degree, MultiIndex};
use qdpa::ops::{OpExpr, PrimOp};
use qdpa::qarith::{qbinom, Scalar, ScalarField};
use qdpa::weyl::WeylElement;

#[test]
fn core_types_are_send_and_sync() {
    fn check<T: Send + Sync>() {}
    check::<Scalar>();
    check::<ScalarField>();
    check::<MultiIndex>();
    check::<Element>();
    check::<OpExpr>();
    check::<WeylElement>();
}

#[test]
fn concurrent_products_agree() {
    let f = ScalarField::Generic;
    let basis = Arc::new(monomials_up_to_degree(2, 5, i64::MAX));
    let expected: Vec<Scalar> = basis
        .iter()
        .flat_map(|a| {
            basis.iter().map(move |b| {
                let xa = Element::monomial(AlgebraKind::DividedPower, a.clone(), f).unwrap();
                let xb = Element::monomial(AlgebraKind::DividedPower, b.clone(), f).unwrap();
                xa.mul(&xb).coeff(&(a + b))
            })
        })
        .collect();
    let mut handles = Vec::new();
    for _ in 0..4 {
        let basis = Arc::clone(&basis);
        handles.push(thread::spawn(move || {
            basis
                .iter()
                .flat_map(|a| {
                    basis.iter().map(move |b| {
                        let xa =
                            Element::monomial(AlgebraKind::DividedPower, a.clone(), f).unwrap();
                        let xb =
                            Element::monomial(AlgebraKind::DividedPower, b.clone(), f).unwrap();
                        xa.mul(&xb).coeff(&(a + b))
                    })
                })
                .collect::<Vec<Scalar>>()
        }));
    }
    for h in handles {
        assert_eq!(h.join().unwrap(), expected);
    }
    // root-of-unity arithmetic across threads, including the cyclotomic caches
    let root = ScalarField::root_of_unity(6).unwrap();
    let h = thread::spawn(move || qbinom(7, 3, &root));
    assert_eq!(h.join().unwrap(), qbinom(7, 3, &root));
    // normal forms move between threads
    let nf = qdpa::weyl::normalize(
        &[PrimOp::del(1), PrimOp::x(2, 1)],
        qdpa::weyl::WeylVariant::Plus,
        2,
        &f,
    );
    let h = thread::spawn(move || nf.num_terms());
    assert_eq!(h.join().unwrap(), 2);
}
