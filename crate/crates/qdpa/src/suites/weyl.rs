//! Weyl-algebra laws: the defining relations as normal forms, soundness of
//! normal ordering against the direct action, independence of the rewrite
//! order, associativity of the product, and the torus form of `x_i del_i`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::galg::{AlgebraKind, Element};
use crate::lattice::MultiIndex;
use crate::ops::{basis_monomials, ops_agree_on_monomials, OpExpr, PrimOp};
use crate::qarith::ScalarField;
use crate::weyl::{
    normalize, normalize_with_strategy, RewriteStrategy, WeylElement, WeylVariant,
};

use super::{SuiteParams, SuiteReport};

const S: &str = "weyl";

/// The generator alphabet: `x_i`, `del_i`, `sigma_i^{+-1}`, `Theta(+-e_i)`.
pub fn generator_alphabet(n: usize) -> Vec<PrimOp> {
    let mut out = Vec::with_capacity(6 * n);
    for i in 1..=n {
        out.push(PrimOp::x(n, i));
        out.push(PrimOp::del(i));
        out.push(PrimOp::sigma(i));
        out.push(PrimOp::sigma_inv(i));
        out.push(PrimOp::theta_unit(n, i, false));
        out.push(PrimOp::theta_unit(n, i, true));
    }
    out
}

fn word_agrees(
    word: &[PrimOp],
    variant: WeylVariant,
    n: usize,
    field: &ScalarField,
    basis: &[MultiIndex],
) -> Option<String> {
    let nf = normalize(word, variant, n, field);
    let direct = OpExpr::word(word);
    for beta in basis {
        let x = Element::monomial(AlgebraKind::DividedPower, beta.clone(), *field).unwrap();
        if nf.apply(&x) != direct.apply(&x) {
            return Some(format!("word {word:?} on x{beta}"));
        }
    }
    None
}

/// Check `apply(normalize(w)) = apply(w)` for every word over the generator
/// alphabet up to `max_len`, on all basis monomials of degree
/// `<= action_degree`. Returns the number of words checked and the first
/// counterexample.
///
/// Walks the word tree depth-first, extending each word on the left: the
/// direct action images extend by one primitive application, and the normal
/// form extends through the closed-form crossing rules. The comparison at
/// each node is the actual soundness check.
pub fn word_soundness_exhaustive(
    n: usize,
    max_len: usize,
    action_degree: i64,
    field: &ScalarField,
    variant: WeylVariant,
) -> (usize, Option<String>) {
    let alphabet = generator_alphabet(n);
    let basis = basis_monomials(AlgebraKind::DividedPower, n, action_degree);
    let kind = AlgebraKind::DividedPower;

    type Image = Option<(MultiIndex, crate::qarith::Scalar)>;
    struct Node {
        word: Vec<PrimOp>,
        images: Vec<Image>,
        nf: WeylElement,
    }

    fn check(node: &Node, basis: &[MultiIndex], field: &ScalarField, kind: AlgebraKind) -> Option<String> {
        for (k, beta) in basis.iter().enumerate() {
            // accumulate the normal form's action on x^(beta)
            let mut acc: Vec<(MultiIndex, crate::qarith::Scalar)> = Vec::new();
            for (w, c) in node.nf.terms() {
                if let Some((t, s)) = w.apply_monomial(beta, field, kind) {
                    let cs = c * &s;
                    if cs.is_zero() {
                        continue;
                    }
                    match acc.iter_mut().find(|(u, _)| *u == t) {
                        Some((_, existing)) => *existing = &*existing + &cs,
                        None => acc.push((t, cs)),
                    }
                }
            }
            acc.retain(|(_, c)| !c.is_zero());
            let ok = match &node.images[k] {
                None => acc.is_empty(),
                Some((t, c)) => acc.len() == 1 && acc[0].0 == *t && acc[0].1 == *c,
            };
            if !ok {
                return Some(format!("word {:?} on x{beta}", node.word));
            }
        }
        None
    }

    let root = Node {
        word: Vec::new(),
        images: basis
            .iter()
            .map(|b| Some((b.clone(), field.one())))
            .collect(),
        nf: WeylElement::one(variant, n, *field),
    };
    let mut count = 0usize;
    let mut stack = vec![root];
    while let Some(node) = stack.pop() {
        count += 1;
        if let Some(cx) = check(&node, &basis, field, kind) {
            return (count, Some(cx));
        }
        if node.word.len() == max_len {
            continue;
        }
        for p in &alphabet {
            let images: Vec<Image> = node
                .images
                .iter()
                .map(|img| {
                    img.as_ref()
                        .and_then(|(t, c)| p.apply_monomial(t, c, kind, field))
                })
                .collect();
            let nf = node.nf.mul_prim_left(p);
            let mut word = node.word.clone();
            word.insert(0, p.clone());
            stack.push(Node { word, images, nf });
        }
    }
    (count, None)
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &[PrimOp], max_len: usize) -> Vec<PrimOp> {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| alphabet[rng.gen_range(0..alphabet.len())].clone())
        .collect()
}

/// Soundness on random words.
pub fn random_word_soundness(
    n: usize,
    words: usize,
    max_len: usize,
    action_degree: i64,
    field: &ScalarField,
    variant: WeylVariant,
    seed: u64,
) -> Option<String> {
    let alphabet = generator_alphabet(n);
    let basis = basis_monomials(AlgebraKind::DividedPower, n, action_degree);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..words {
        let w = random_word(&mut rng, &alphabet, max_len);
        if let Some(cx) = word_agrees(&w, variant, n, field, &basis) {
            return Some(cx);
        }
    }
    None
}

/// Normalize random words under different redex-selection orders and demand
/// identical normal forms.
pub fn order_independence_violations(
    n: usize,
    words: usize,
    max_len: usize,
    field: &ScalarField,
    variant: WeylVariant,
    seed: u64,
) -> Option<String> {
    let alphabet = generator_alphabet(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..words {
        let w = random_word(&mut rng, &alphabet, max_len);
        let a = normalize_with_strategy(&w, variant, n, field, RewriteStrategy::Leftmost);
        let b = normalize_with_strategy(&w, variant, n, field, RewriteStrategy::Rightmost);
        let c = normalize_with_strategy(
            &w,
            variant,
            n,
            field,
            RewriteStrategy::Random(seed ^ k as u64),
        );
        if a != b || a != c {
            return Some(format!("word {w:?}"));
        }
    }
    None
}

pub fn suite(params: &SuiteParams) -> SuiteReport {
    let mut report = SuiteReport::new();
    let f = params.field;
    let n = params.n;
    let variant = params.variant;
    let bound = params.degree.max(4);

    // the defining relations, as normal-form computations
    let mut cx = None;
    for i in 1..=n {
        for j in 1..=n {
            // del_i x_j
            let got = normalize(&[PrimOp::del(i), PrimOp::x(n, j)], variant, n, &f);
            let expected_terms = if i == j { 2 } else { 1 };
            if got.num_terms() != expected_terms {
                cx = Some(format!("d{i} x{j} has {} terms", got.num_terms()));
            }
            // sigma_i x_j and sigma_i del_j single-term swaps
            for w in [
                vec![PrimOp::sigma(i), PrimOp::x(n, j)],
                vec![PrimOp::sigma(i), PrimOp::del(j)],
                vec![PrimOp::theta_unit(n, i, false), PrimOp::x(n, j)],
                vec![PrimOp::theta_unit(n, i, false), PrimOp::del(j)],
            ] {
                let got = normalize(&w, variant, n, &f);
                if got.num_terms() != 1 {
                    cx = Some(format!("{w:?} is not a single normal word"));
                }
            }
        }
    }
    report.push(S, "defining relations reach normal form", "weyl-defining-relations", cx);

    // x_i del_i = (sigma_i - sigma_i^{-1})/(q - q^{-1}) as actions
    let mut cx = None;
    for i in 1..=n {
        let w = normalize(&[PrimOp::x(n, i), PrimOp::del(i)], variant, n, &f);
        let denom = &f.q_power(1) - &f.q_power(-1);
        let rhs = OpExpr::sum(vec![
            OpExpr::scale(&f.one() / &denom, OpExpr::prim(PrimOp::sigma(i))),
            OpExpr::scale(&(-&f.one()) / &denom, OpExpr::prim(PrimOp::sigma_inv(i))),
        ]);
        if let Some(c) = ops_agree_on_monomials(
            &w.to_op_expr(),
            &rhs,
            AlgebraKind::DividedPower,
            n,
            &f,
            bound,
        ) {
            cx = Some(format!("i={i}: {c}"));
        }
        // and del_i x_i = (q sigma_i - (q sigma_i)^{-1})/(q - q^{-1})
        let w = normalize(&[PrimOp::del(i), PrimOp::x(n, i)], variant, n, &f);
        let rhs = OpExpr::sum(vec![
            OpExpr::scale(&f.q_power(1) / &denom, OpExpr::prim(PrimOp::sigma(i))),
            OpExpr::scale(
                &(-&f.q_power(-1)) / &denom,
                OpExpr::prim(PrimOp::sigma_inv(i)),
            ),
        ]);
        if let Some(c) = ops_agree_on_monomials(
            &w.to_op_expr(),
            &rhs,
            AlgebraKind::DividedPower,
            n,
            &f,
            bound,
        ) {
            cx = Some(format!("d{i} x{i} torus form: {c}"));
        }
    }
    report.push(S, "the x del words close on the torus", "weyl-torus-forms", cx);

    // soundness on a sample of words
    let cx = random_word_soundness(n, 200, 6, bound, &f, variant, params.seed);
    report.push(
        S,
        "normal ordering preserves the action (random words)",
        "weyl-representation-soundness",
        cx,
    );

    // order independence
    let cx = order_independence_violations(n, 200, 6, &f, variant, params.seed ^ 0xabcd);
    report.push(
        S,
        "normal form independent of rewrite order",
        "weyl-local-confluence",
        cx,
    );

    // product associativity on random elements
    let alphabet = generator_alphabet(n);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ 0x77);
    let mut cx = None;
    for _ in 0..40 {
        let a = normalize(&random_word(&mut rng, &alphabet, 3), variant, n, &f);
        let b = normalize(&random_word(&mut rng, &alphabet, 3), variant, n, &f);
        let c = normalize(&random_word(&mut rng, &alphabet, 3), variant, n, &f);
        if a.mul(&b).mul(&c) != a.mul(&b.mul(&c)) {
            cx = Some("associativity failed on random words".into());
            break;
        }
        let unit = WeylElement::one(variant, n, f);
        if unit.mul(&a) != a || a.mul(&unit) != a {
            cx = Some("unit law failed".into());
            break;
        }
    }
    report.push(S, "product is associative with unit", "weyl-mul-associative", cx);

    report
}
