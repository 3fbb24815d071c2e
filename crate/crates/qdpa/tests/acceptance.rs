//! The acceptance gate: eight criteria, one test each, every check exact
//! (identically zero difference in the scalar field). Each test prints one
//! pass/fail line (visible with `--nocapture`; failures always show it).

use std::time::{Duration, Instant};

use qdpa::galg::AlgebraKind;
use qdpa::lattice::MultiIndex;
use qdpa::qarith::{char_q, lusztig_factorization, qbinom, qint, ScalarField};
use qdpa::suites::{
    order_independence_violations, random_word_soundness, run_suite, word_soundness_exhaustive,
    LawStatus, SuiteParams, SuiteReport,
};
use qdpa::uq::{
    check_module_algebra, check_nilpotency, check_uq_relations, lusztig_rootvector_recursion,
    verify_rootvector_identities, UqRealization,
};
use qdpa::weyl::WeylVariant;

fn root(m: u32) -> ScalarField {
    ScalarField::root_of_unity(m).unwrap()
}

fn collect_failures(tag: &str, report: &SuiteReport, failures: &mut Vec<String>) {
    for law in &report.laws {
        if law.status == LawStatus::Fail {
            failures.push(format!(
                "{tag}: {}/{} ({})",
                law.suite,
                law.law,
                law.counterexample.clone().unwrap_or_default()
            ));
        }
    }
}

fn finish(criterion: &str, t0: Instant, limit: Duration, failures: Vec<String>) {
    let elapsed = t0.elapsed();
    if failures.is_empty() && elapsed <= limit {
        println!("{criterion}: PASS ({elapsed:.2?})");
        return;
    }
    if failures.is_empty() {
        println!("{criterion}: FAIL (runtime {elapsed:.2?} exceeds {limit:.2?})");
        panic!("{criterion}: runtime {elapsed:.2?} exceeds the {limit:.2?} budget");
    }
    println!("{criterion}: FAIL ({elapsed:.2?})");
    panic!(
        "{criterion}: {} failure(s):\n  {}",
        failures.len(),
        failures.join("\n  ")
    );
}

fn suite_params(
    n: usize,
    field: ScalarField,
    kind: AlgebraKind,
    degree: i64,
) -> SuiteParams {
    SuiteParams {
        n,
        field,
        kind,
        degree,
        ..Default::default()
    }
}

/// Criterion 1: Pascal recursion, symmetry, bar-invariance, and the product
/// generating function for all n <= 12 at generic q; the base-l digit
/// factorization identities for all 0 <= r <= m <= 30 at l in {3, 5}, in
/// both the order-l (odd) and order-2l root-of-unity modes. Runtime < 10 s.
#[test]
fn criterion_1_q_arithmetic() {
    let t0 = Instant::now();
    let mut failures = Vec::new();

    let report = run_suite(
        "qarith",
        &suite_params(2, ScalarField::Generic, AlgebraKind::DividedPower, 12),
    )
    .unwrap();
    collect_failures("generic", &report, &mut failures);

    for order in [3u32, 5, 6, 10] {
        let field = root(order);
        let report = run_suite(
            "qarith",
            &suite_params(2, field, AlgebraKind::DividedPower, 12),
        )
        .unwrap();
        collect_failures(&format!("root:{order}"), &report, &mut failures);

        // The digit identities exactly as stated, unsigned, in this mode:
        // qbinom(m, r) = qbinom(m0, r0) * C(m1, r1) and qbinom(m, l) = m1.
        let l = char_q(&field) as i64;
        for m in 0..=30i64 {
            for r in 0..=m {
                let direct = qbinom(m, r, &field);
                let digits = lusztig_factorization(m, r, l, &field).unwrap();
                if direct != digits {
                    failures.push(format!(
                        "root:{order}: digit factorization fails at (m,r)=({m},{r}): \
                         qbinom = {direct}, digit product = {digits}"
                    ));
                }
            }
            let (_, m1) = qdpa::qarith::digits(m, l);
            if qbinom(m, l, &field) != field.from_int(m1) {
                failures.push(format!(
                    "root:{order}: qbinom({m},{l}) = {} but the digit column predicts {m1}",
                    qbinom(m, l, &field)
                ));
            }
        }
    }

    if failures.len() > 4 {
        let shown = failures[..2].join("\n  ");
        let n = failures.len();
        failures = vec![format!("{shown}\n  ... {n} violations in total")];
    }
    finish("criterion 1 (q-arithmetic)", t0, Duration::from_secs(10), failures);
}

/// Criterion 2: bicharacter axioms and the 2-cocycle identity on 1000
/// random triples, dimensions up to 4. Runtime < 5 s.
#[test]
fn criterion_2_bicharacter() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for field in [ScalarField::Generic, root(6)] {
        let report = run_suite(
            "lattice",
            &suite_params(4, field, AlgebraKind::DividedPower, 5),
        )
        .unwrap();
        collect_failures(&field.to_string(), &report, &mut failures);
    }
    finish("criterion 2 (bicharacter)", t0, Duration::from_secs(5), failures);
}

/// Criterion 3: associativity and bicharacter commutativity on all monomial
/// triples with |a|+|b|+|c| <= 8 for n <= 3 in all three kinds; the
/// restricted algebra at n = 2, l = 3 has exactly 9 basis elements with
/// vanishing cubes; centrality of the l-th divided powers at l in {3, 5}.
/// Runtime < 60 s.
#[test]
fn criterion_3_algebra() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=3usize {
        let combos: Vec<(ScalarField, AlgebraKind)> = vec![
            (ScalarField::Generic, AlgebraKind::DividedPower),
            (root(6), AlgebraKind::DividedPower),
            (root(3), AlgebraKind::Restricted(3)),
            (ScalarField::Generic, AlgebraKind::Exterior),
        ];
        for (field, kind) in combos {
            let report = run_suite("galg", &suite_params(n, field, kind, 8)).unwrap();
            collect_failures(&format!("n={n} {kind} {field}"), &report, &mut failures);
        }
    }
    // centrality at l = 3 and l = 5 (odd orders)
    for l in [3u32, 5] {
        let report = run_suite(
            "galg",
            &suite_params(2, root(l), AlgebraKind::DividedPower, 6),
        )
        .unwrap();
        collect_failures(&format!("centrality l={l}"), &report, &mut failures);
    }
    finish("criterion 3 (algebra)", t0, Duration::from_secs(60), failures);
}

/// Criterion 4: the operator-calculus laws on all pairs |b|+|c| <= 8;
/// normal-ordering soundness for every word of length <= 5 over the
/// generator alphabet at n = 2 (both variants) and 500 random words at
/// n = 3; rewrite-order independence on 500 random words. Runtime < 3 min.
#[test]
fn criterion_4_operators_weyl() {
    let t0 = Instant::now();
    let mut failures = Vec::new();

    for n in [2usize, 3] {
        let report = run_suite(
            "ops",
            &suite_params(n, ScalarField::Generic, AlgebraKind::DividedPower, 8),
        )
        .unwrap();
        collect_failures(&format!("ops n={n} generic"), &report, &mut failures);
    }
    let report = run_suite("ops", &suite_params(2, root(6), AlgebraKind::DividedPower, 8)).unwrap();
    collect_failures("ops n=2 root:6", &report, &mut failures);

    let generic = ScalarField::Generic;
    for variant in [WeylVariant::Plus, WeylVariant::Minus] {
        let (count, cx) = word_soundness_exhaustive(2, 5, 6, &generic, variant);
        assert!(count > 271_000, "expected the full word tree, saw {count}");
        if let Some(c) = cx {
            failures.push(format!("exhaustive words (variant {variant}): {c}"));
        }
    }
    if let Some(c) = random_word_soundness(3, 500, 8, 6, &generic, WeylVariant::Plus, 0x51) {
        failures.push(format!("random words n=3: {c}"));
    }
    if let Some(c) = order_independence_violations(3, 500, 8, &generic, WeylVariant::Plus, 0x52) {
        failures.push(format!("order independence: {c}"));
    }
    for field in [generic, root(6)] {
        let report = run_suite(
            "weyl",
            &suite_params(2, field, AlgebraKind::DividedPower, 6),
        )
        .unwrap();
        collect_failures(&format!("weyl {field}"), &report, &mut failures);
    }
    finish("criterion 4 (operators/Weyl)", t0, Duration::from_secs(180), failures);
}

/// Criterion 5: the Hopf axioms of all presented quantum groups at
/// n in {2, 3}, degree 5, generic and root modes; the braided Hopf laws up
/// to degree 4; the two-term collapse of the l-th power coproduct at
/// l in {3, 5}. Runtime < 3 min.
#[test]
fn criterion_5_hopf() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for n in [2usize, 3] {
        for field in [ScalarField::Generic, root(3), root(5)] {
            let report = run_suite(
                "hopf",
                &suite_params(n, field, AlgebraKind::DividedPower, 5),
            )
            .unwrap();
            collect_failures(&format!("n={n} {field}"), &report, &mut failures);
        }
    }
    finish("criterion 5 (Hopf)", t0, Duration::from_secs(180), failures);
}

/// Criterion 6: the full defining-relation suite and module-algebra suite
/// at n in {2, 3, 4}, degree 6, generic q, and on the full 27-dimensional
/// restricted algebra at l = 3 (both char-3 orders). Runtime < 3 min.
#[test]
fn criterion_6_uq_realization() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for n in [2usize, 3, 4] {
        let r = UqRealization::new(n, AlgebraKind::DividedPower, ScalarField::Generic).unwrap();
        for c in check_uq_relations(&r, 6)
            .results
            .into_iter()
            .chain(check_module_algebra(&r, 6).results)
        {
            if !c.ok {
                failures.push(format!(
                    "n={n} generic: {} ({})",
                    c.law,
                    c.counterexample.unwrap_or_default()
                ));
            }
        }
    }
    for order in [3u32, 6] {
        let r = UqRealization::new(3, AlgebraKind::Restricted(3), root(order)).unwrap();
        for c in check_uq_relations(&r, 0)
            .results
            .into_iter()
            .chain(check_module_algebra(&r, 0).results)
            .chain(check_nilpotency(&r).results)
        {
            if !c.ok {
                failures.push(format!(
                    "restricted root:{order}: {} ({})",
                    c.law,
                    c.counterexample.unwrap_or_default()
                ));
            }
        }
    }
    // extra coverage at small rank in the remaining root modes
    for order in [5u32, 6] {
        let r = UqRealization::new(2, AlgebraKind::DividedPower, root(order)).unwrap();
        for c in check_uq_relations(&r, 5).results {
            if !c.ok {
                failures.push(format!("n=2 root:{order}: {}", c.law));
            }
        }
    }
    finish("criterion 6 (U_q realization)", t0, Duration::from_secs(180), failures);
}

/// Criterion 7: the q-bracket factorizations with k-independence at n = 4,
/// the torus commutator, the braid-image recursion steps, and the full
/// recursion reproducing every closed-form root vector at n in {3, 4}.
/// Runtime < 2 min.
#[test]
fn criterion_7_root_vectors() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for n in [3usize, 4] {
        let r = UqRealization::new(n, AlgebraKind::DividedPower, ScalarField::Generic).unwrap();
        for c in verify_rootvector_identities(&r, 6).results {
            if !c.ok {
                failures.push(format!(
                    "n={n}: {} ({})",
                    c.law,
                    c.counterexample.unwrap_or_default()
                ));
            }
        }
        let (map, rec) = lusztig_rootvector_recursion(&r, 6);
        assert_eq!(map.len(), n * (n - 1));
        for c in rec.results {
            if !c.ok {
                failures.push(format!(
                    "n={n} recursion: {} ({})",
                    c.law,
                    c.counterexample.unwrap_or_default()
                ));
            }
        }
    }
    finish("criterion 7 (root vectors)", t0, Duration::from_secs(120), failures);
}

/// Criterion 8: the restricted algebra at n = 2, l = 3 decomposes with
/// dimension vector (1,2,3,2,1) and weights (0, w1, 2w1, w1, 0); the generic
/// graded components are simple of the symmetric-power dimension with
/// highest weight vector x^((s,0,...,0)) for n <= 3, s <= 5; the exterior
/// components are the basic simple modules for n <= 4. Runtime < 2 min.
#[test]
fn criterion_8_decompositions() {
    let t0 = Instant::now();
    let mut failures = Vec::new();

    // the explicit l = 3 table
    let rep = qdpa::repn::decompose(AlgebraKind::Restricted(3), 2, root(3), None).unwrap();
    if rep.dimension_vector() != vec![1, 2, 3, 2, 1] || rep.total_dimension() != 9 {
        failures.push(format!("dimension vector {:?}", rep.dimension_vector()));
    }
    let weights: Vec<String> = rep
        .components
        .iter()
        .map(|c| c.summands[0].weight_label.clone())
        .collect();
    if weights != vec!["0", "w1", "2*w1", "w1", "0"] {
        failures.push(format!("weight labels {weights:?}"));
    }
    let hw3: Vec<i64> = rep.components[3].summands[0].weight_exponents.clone();
    if hw3 != vec![1] {
        failures.push(format!("degree-3 exponents {hw3:?}"));
    }
    if rep.components[3].summands[0].vector != format!("x{}", MultiIndex::new(vec![2, 1])) {
        failures.push(format!(
            "degree-3 hw vector {}",
            rep.components[3].summands[0].vector
        ));
    }

    for n in 2..=3usize {
        let report = run_suite(
            "repn",
            &suite_params(n, ScalarField::Generic, AlgebraKind::DividedPower, 5),
        )
        .unwrap();
        collect_failures(&format!("divided n={n}"), &report, &mut failures);
    }
    for (n, order) in [(2usize, 3u32), (2, 6), (3, 3)] {
        let report = run_suite(
            "repn",
            &suite_params(n, root(order), AlgebraKind::Restricted(3), 5),
        )
        .unwrap();
        collect_failures(&format!("restricted n={n} root:{order}"), &report, &mut failures);
    }
    for n in 2..=4usize {
        let report = run_suite(
            "repn",
            &suite_params(n, ScalarField::Generic, AlgebraKind::Exterior, 5),
        )
        .unwrap();
        collect_failures(&format!("exterior n={n}"), &report, &mut failures);
    }
    finish("criterion 8 (decompositions)", t0, Duration::from_secs(120), failures);
}

/// Cross-cutting gate: the q-integer examples frozen from independent
/// oracles stay pinned (polynomial division, brute-force star products,
/// explicit braided expansion).
#[test]
fn frozen_oracle_values() {
    let g = ScalarField::Generic;
    // [3] by polynomial division of (v^3 - v^-3)/(v - v^-1)
    let expect = qdpa::qarith::LaurentPoly::from_terms(
        [(2i64, 1i64), (0, 1), (-2, 1)]
            .into_iter()
            .map(|(e, c)| (e, qdpa::qarith::rat(c))),
    );
    assert_eq!(qint(3, &g), g.from_laurent(&expect));
    assert!(qint(3, &root(6)).is_zero());
    // star((1,2,3),(4,5,6)) = 35 by the brute-force double sum
    assert_eq!(
        qdpa::lattice::star(
            &MultiIndex::new(vec![1, 2, 3]),
            &MultiIndex::new(vec![4, 5, 6])
        ),
        35
    );
    println!("frozen oracle values: PASS");
}
