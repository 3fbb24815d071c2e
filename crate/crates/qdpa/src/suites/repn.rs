//! Module-decomposition laws: dimensions, highest weight vectors, weight
//! labels, and simplicity for the three graded module families.

use crate::galg::{AlgebraKind, Element};
use crate::lattice::MultiIndex;
use crate::qarith::char_q;
use crate::repn::{decompose, GradedComponent, ModuleAction};

use super::{SuiteParams, SuiteReport};

const S: &str = "repn";

fn binom_u(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc = 1usize;
    for i in 1..=r {
        acc = acc * (n - r + i) / i;
    }
    acc
}

pub fn suite(params: &SuiteParams) -> SuiteReport {
    let mut report = SuiteReport::new();
    let f = params.field;
    let n = params.n;

    match params.kind {
        AlgebraKind::DividedPower => {
            if !f.is_generic() {
                report.skip(
                    S,
                    "graded simple modules of the divided power algebra",
                    "divided-power-components",
                    "the unbounded components are simple at generic q",
                );
                return report;
            }
            let top = params.degree.min(5);
            let rep = decompose(AlgebraKind::DividedPower, n, f, Some(top)).unwrap();
            let mut cx = None;
            for (s, c) in rep.components.iter().enumerate() {
                let expect_dim = binom_u(n + s - 1, n - 1);
                if c.dimension != expect_dim {
                    cx = Some(format!("degree {s}: dim {} != {expect_dim}", c.dimension));
                    break;
                }
                if c.summands.len() != 1 {
                    cx = Some(format!("degree {s}: {} highest weights", c.summands.len()));
                    break;
                }
                let hw = &c.summands[0];
                let mut lead = MultiIndex::zero(n);
                lead.set(1, s as i64);
                if hw.vector != format!("x{lead}") && !(s == 0 && hw.vector == "1") {
                    cx = Some(format!("degree {s}: hw {}", hw.vector));
                    break;
                }
                // weight s*lambda_1 has exponents (s, 0, ..., 0)
                let mut expect_exp = vec![0i64; n - 1];
                expect_exp[0] = s as i64;
                if hw.weight_exponents != expect_exp
                    || !hw.simple
                    || hw.submodule_dimension != c.dimension
                {
                    cx = Some(format!("degree {s}: weight/simplicity mismatch"));
                    break;
                }
            }
            report.push(
                S,
                "components are simple with highest weight s*w1",
                "divided-power-components",
                cx,
            );
        }
        AlgebraKind::Restricted(l) => {
            if params.kind.validate(&f).is_err() {
                report.skip(
                    S,
                    "restricted decomposition",
                    "restricted-components",
                    "char(q) mismatch",
                );
                return report;
            }
            let rep = decompose(AlgebraKind::Restricted(l), n, f, None).unwrap();
            let top = n as i64 * (l as i64 - 1);
            let mut cx = None;
            if rep.total_dimension() != (l as usize).pow(n as u32) {
                cx = Some(format!("total dim {}", rep.total_dimension()));
            }
            for (s, c) in rep.components.iter().enumerate() {
                let s = s as i64;
                if c.summands.len() != 1 {
                    cx = Some(format!("degree {s}: {} highest weights", c.summands.len()));
                    break;
                }
                let hw = &c.summands[0];
                if !hw.simple || hw.submodule_dimension != c.dimension || !c.complete {
                    cx = Some(format!("degree {s}: not simple"));
                    break;
                }
                // staircase highest weight vector and its predicted label:
                // s = (i-1)(l-1) + s_i with 0 <= s_i <= l-1
                let (i, si) = staircase(s, l as i64, n as i64);
                let mut lead = MultiIndex::zero(n);
                for a in 1..i {
                    lead.set(a as usize, l as i64 - 1);
                }
                if i as usize <= n {
                    lead.set(i as usize, si);
                }
                let expect: Vec<i64> =
                    (1..n).map(|j| lead.get(j) - lead.get(j + 1)).collect();
                if hw.weight_exponents != expect {
                    cx = Some(format!(
                        "degree {s}: exponents {:?} vs predicted {:?}",
                        hw.weight_exponents, expect
                    ));
                    break;
                }
                let rendered = if lead.is_zero() {
                    "1".to_string()
                } else {
                    format!("x{lead}")
                };
                if hw.vector != rendered {
                    cx = Some(format!("degree {s}: hw {} vs x{lead}", hw.vector));
                    break;
                }
                let _ = top;
            }
            report.push(
                S,
                "restricted components are simple with staircase weights",
                "restricted-components",
                cx,
            );
        }
        AlgebraKind::Exterior => {
            let rep = decompose(AlgebraKind::Exterior, n, f, None).unwrap();
            let mut cx = None;
            for (s, c) in rep.components.iter().enumerate() {
                if c.dimension != binom_u(n, s) {
                    cx = Some(format!("degree {s}: dim {}", c.dimension));
                    break;
                }
                let hw = &c.summands[0];
                if !hw.simple || hw.submodule_dimension != c.dimension {
                    cx = Some(format!("degree {s}: not simple"));
                    break;
                }
                // hw is x_1...x_s with weight lambda_s
                let expect: Vec<i64> = (1..n)
                    .map(|j| i64::from(j == s))
                    .collect();
                if hw.weight_exponents != expect {
                    cx = Some(format!("degree {s}: exponents {:?}", hw.weight_exponents));
                    break;
                }
            }
            report.push(
                S,
                "exterior components are the basic simple modules",
                "exterior-components",
                cx,
            );

            // the orbit formulas of the induced action: coefficient-one
            // f-chains move the top variable outward
            let mut cx = None;
            let action = ModuleAction::for_kind(AlgebraKind::Exterior, n, f).unwrap();
            for s in 1..=n {
                let mut v = vec![0i64; n];
                for e in v.iter_mut().take(s) {
                    *e = 1;
                }
                let xs =
                    Element::monomial(AlgebraKind::Exterior, MultiIndex::new(v), f).unwrap();
                for js in s..=n {
                    // f_{js-1} ... f_s moves slot s to slot js
                    let mut cur = xs.clone();
                    for t in s..js {
                        cur = action.apply_f(t, &cur);
                    }
                    let mut expect = vec![0i64; n];
                    for e in expect.iter_mut().take(s - 1) {
                        *e = 1;
                    }
                    expect[js - 1] = 1;
                    let expect = Element::monomial(
                        AlgebraKind::Exterior,
                        MultiIndex::new(expect),
                        f,
                    )
                    .unwrap();
                    if cur != expect {
                        cx = Some(format!("s={s}, target slot {js}"));
                    }
                }
            }
            report.push(S, "f-chains walk the orbit with coefficient one", "exterior-orbit", cx);
        }
    }

    // graded component dimension formulas hold for all kinds
    let mut cx = None;
    for s in 0..=params.degree.min(5) {
        if params.kind.validate(&f).is_err() {
            break;
        }
        let c = GradedComponent::new(params.kind, n, s, f).unwrap();
        let expect = match params.kind {
            AlgebraKind::DividedPower => binom_u(n + s as usize - 1, n - 1),
            AlgebraKind::Exterior => binom_u(n, s as usize),
            AlgebraKind::Restricted(l) => {
                crate::lattice::monomials_of_degree(n, s, l as i64 - 1).len()
            }
        };
        if c.dim() != expect {
            cx = Some(format!("degree {s}: {} vs {expect}", c.dim()));
        }
    }
    report.push(S, "graded dimension formulas", "graded-dimensions", cx);
    let _ = char_q(&f);

    report
}

/// `s = (i-1)(l-1) + s_i` with `0 <= s_i <= l-1` and `1 <= i`.
fn staircase(s: i64, l: i64, n: i64) -> (i64, i64) {
    if s == 0 {
        return (1, 0);
    }
    let mut i = s / (l - 1) + 1;
    let mut si = s - (i - 1) * (l - 1);
    if si == 0 {
        i -= 1;
        si = l - 1;
    }
    let _ = n;
    (i, si)
}
