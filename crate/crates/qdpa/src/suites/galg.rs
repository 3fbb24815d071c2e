//! Algebra laws: associativity and kind-bicharacter commutativity of the
//! monomial product, restricted truncation soundness, centrality of the
//! l-th divided powers, dimension counts, and the basis-change isomorphism.

use crate::galg::{
    divided_to_monomial, factor_high_divided_power, monomial_to_divided, multi_qbinom,
    quantum_space_monomial_mul, AlgebraKind, Element,
};
use crate::lattice::{monomials_up_to_degree, MultiIndex};
use crate::qarith::{char_q, ScalarField};

use super::{SuiteParams, SuiteReport};

const S: &str = "galg";

pub fn suite(params: &SuiteParams) -> SuiteReport {
    let mut report = SuiteReport::new();
    let kind = params.kind;
    let f = params.field;
    let n = params.n;

    if kind.validate(&f).is_err() {
        report.skip(
            S,
            "algebra laws",
            "galg-kind-field",
            format!("kind {kind} needs char(q) to match"),
        );
        return report;
    }

    let cap = kind.max_entry();
    let bound = params.degree.max(4);
    let basis = monomials_up_to_degree(n, bound, cap);
    let mono =
        |a: &MultiIndex| Element::monomial(kind, a.clone(), f).expect("basis exponent in range");

    // associativity on monomial triples with |a|+|b|+|c| <= bound
    let mut cx = None;
    'assoc: for a in &basis {
        for b in &basis {
            if a.degree() + b.degree() > bound {
                continue;
            }
            for c in &basis {
                if a.degree() + b.degree() + c.degree() > bound {
                    continue;
                }
                let lhs = mono(a).mul(&mono(b)).mul(&mono(c));
                let rhs = mono(a).mul(&mono(b).mul(&mono(c)));
                if lhs != rhs {
                    cx = Some(format!("(x{a}, x{b}, x{c})"));
                    break 'assoc;
                }
            }
        }
    }
    report.push(S, format!("associativity in {kind}"), "galg-associativity", cx);

    // commutation against the kind's own bicharacter
    let mut cx = None;
    'comm: for a in &basis {
        for b in &basis {
            if a.degree() + b.degree() > bound {
                continue;
            }
            let lhs = mono(a).mul(&mono(b));
            let rhs = mono(b).mul(&mono(a)).scale(&kind.kind_theta(a, b, &f));
            if lhs != rhs {
                cx = Some(format!("(x{a}, x{b})"));
                break 'comm;
            }
        }
    }
    report.push(
        S,
        format!("bicharacter commutativity in {kind}"),
        "galg-theta-commutativity",
        cx,
    );

    match kind {
        AlgebraKind::Restricted(l) => {
            // dimension count
            let full = monomials_up_to_degree(n, n as i64 * (l as i64 - 1), cap);
            let cx = if full.len() as u64 == (l as u64).pow(n as u32) {
                None
            } else {
                Some(format!("{} basis monomials", full.len()))
            };
            report.push(S, "restricted dimension is l^n", "restricted-dimension", cx);

            // l-th powers vanish
            let mut cx = None;
            for a in &full {
                if a.is_zero() {
                    continue;
                }
                if !mono(a).pow(l).is_zero() {
                    cx = Some(format!("x{a}"));
                }
            }
            report.push(S, "(x^(a))^l = 0 for a != 0", "restricted-lth-power-zero", cx);

            // truncation soundness: the divided power product of any two
            // in-box monomials has vanishing coefficient on out-of-box terms
            let mut cx = None;
            'trunc: for a in &full {
                for b in &full {
                    let gamma = a + b;
                    if gamma.entries().iter().all(|&e| e <= l as i64 - 1) {
                        continue;
                    }
                    if !multi_qbinom(&gamma, a, &f).is_zero() {
                        cx = Some(format!("(x{a}, x{b})"));
                        break 'trunc;
                    }
                }
            }
            report.push(
                S,
                "out-of-box products carry vanishing binomials",
                "restricted-truncation-sound",
                cx,
            );
        }
        AlgebraKind::DividedPower => match f {
            ScalarField::Generic => {
                // divided <-> monomial basis change is an algebra isomorphism
                // onto x^a x^b = q^{a*b} x^{a+b}
                let mut cx = None;
                'iso: for a in &basis {
                    for b in &basis {
                        if a.degree() + b.degree() > bound {
                            continue;
                        }
                        let lhs = divided_to_monomial(&mono(a).mul(&mono(b))).unwrap();
                        let ca = divided_to_monomial(&mono(a)).unwrap().coeff(a);
                        let cb = divided_to_monomial(&mono(b)).unwrap().coeff(b);
                        let (gamma, s) = quantum_space_monomial_mul(&f, a, b);
                        let rhs = Element::monomial(kind, gamma, f)
                            .unwrap()
                            .scale(&(&(&s * &ca) * &cb));
                        if lhs != rhs {
                            cx = Some(format!("(x{a}, x{b})"));
                            break 'iso;
                        }
                    }
                }
                report.push(
                    S,
                    "basis change onto the quantum n-space relations",
                    "basis-change-isomorphism",
                    cx,
                );

                let mut cx = None;
                for a in &basis {
                    let e = mono(a);
                    if monomial_to_divided(&divided_to_monomial(&e).unwrap()).unwrap() != e {
                        cx = Some(format!("x{a}"));
                    }
                }
                report.push(S, "basis change round trip", "basis-change-round-trip", cx);
            }
            ScalarField::RootOfUnity(_) => {
                let l = char_q(&f) as i64;
                if f.q_power_is_one(l) {
                    // centrality of the l-th divided powers at q^l = 1
                    let mut cx = None;
                    for i in 1..=n {
                        let mut v = MultiIndex::zero(n);
                        v.set(i, l);
                        let xl = mono(&v);
                        for a in &basis {
                            let e = mono(a);
                            if xl.mul(&e) != e.mul(&xl) {
                                cx = Some(format!("x_{i}^(l) with x{a}"));
                            }
                        }
                    }
                    report.push(
                        S,
                        "the x_i^(l) are central when q^l = 1",
                        "lth-power-centrality",
                        cx,
                    );

                    // digit decomposition of high divided powers
                    let mut cx = None;
                    for m in 0..=(2 * l + 2) {
                        match factor_high_divided_power(n, 1, m, l as u32, &f) {
                            Err(e) => cx = Some(format!("m={m}: {e}")),
                            Ok((m0, m1, coeff)) => {
                                // x^(m) = coeff * x^(m0) * (x^(l))^{m1}
                                let mut v0 = MultiIndex::zero(n);
                                v0.set(1, m0);
                                let mut vl = MultiIndex::zero(n);
                                vl.set(1, l);
                                let mut vm = MultiIndex::zero(n);
                                vm.set(1, m);
                                let rebuilt = mono(&v0)
                                    .mul(&mono(&vl).pow(m1 as u32))
                                    .scale(&coeff);
                                if rebuilt != mono(&vm) {
                                    cx = Some(format!("m={m}"));
                                }
                            }
                        }
                    }
                    report.push(
                        S,
                        "digit decomposition of high divided powers",
                        "high-power-factorization",
                        cx,
                    );
                } else {
                    report.skip(
                        S,
                        "the x_i^(l) are central when q^l = 1",
                        "lth-power-centrality",
                        "q^l = -1 at this order",
                    );
                }
            }
        },
        AlgebraKind::Exterior => {
            // squares vanish
            let mut cx = None;
            for i in 1..=n {
                let xi = Element::generator(kind, n, i, f).unwrap();
                if !xi.mul(&xi).is_zero() {
                    cx = Some(format!("x_{i}^2"));
                }
            }
            report.push(S, "generator squares vanish", "exterior-squares-vanish", cx);
        }
    }

    report
}
