//! Operator-calculus laws: Theta additivity, the twisted Leibniz rules for
//! the q-derivatives and their multiplication-composites, the derivative
//! commutation rule, multiplicativity of the automorphisms, and the
//! multi-index Pascal identity behind the Leibniz proof.

use crate::galg::{multi_qbinom, AlgebraKind, Element};
use crate::lattice::{monomials_up_to_degree, theta_exponent, MultiIndex};
use crate::ops::{check_twisted_derivation, ops_agree_on_monomials, OpExpr, PrimOp};

use super::{SuiteParams, SuiteReport};

const S: &str = "ops";

pub fn suite(params: &SuiteParams) -> SuiteReport {
    let mut report = SuiteReport::new();
    let f = params.field;
    let n = params.n;
    let kind = if matches!(params.kind, AlgebraKind::Exterior) {
        AlgebraKind::DividedPower
    } else {
        params.kind
    };
    if kind.validate(&f).is_err() {
        report.skip(S, "operator laws", "ops-kind-field", "kind/field mismatch");
        return report;
    }
    let bound = params.degree.max(4);
    let agree = |a: &OpExpr, b: &OpExpr| ops_agree_on_monomials(a, b, kind, n, &f, bound);
    let small: Vec<MultiIndex> = monomials_up_to_degree(n, 2, kind.max_entry());

    // Theta additivity and the simple-root specialization
    let mut cx = None;
    for a in &small {
        for b in &small {
            let lhs = OpExpr::compose(
                OpExpr::prim(PrimOp::Theta(a.clone())),
                OpExpr::prim(PrimOp::Theta(b.clone())),
            );
            let rhs = OpExpr::prim(PrimOp::Theta(a + b));
            if let Some(c) = agree(&lhs, &rhs) {
                cx = Some(format!("Theta{a} Theta{b}: {c}"));
            }
        }
    }
    report.push(S, "Theta(a) Theta(b) = Theta(a+b)", "theta-op-additivity", cx);

    let mut cx = None;
    for i in 1..n {
        let lhs = OpExpr::prim(PrimOp::Theta(-&MultiIndex::simple_root(n, i)));
        let rhs = OpExpr::compose(
            OpExpr::prim(PrimOp::sigma(i)),
            OpExpr::prim(PrimOp::sigma(i + 1)),
        );
        if let Some(c) = agree(&lhs, &rhs) {
            cx = Some(format!("i={i}: {c}"));
        }
    }
    report.push(S, "Theta(-alpha_i) = sigma_i sigma_{i+1}", "theta-simple-root", cx);

    // twisted Leibniz for the q-derivatives, both sign choices
    let mut cx = None;
    for i in 1..=n {
        for plus in [true, false] {
            let d = OpExpr::prim(PrimOp::del(i));
            let sig = if plus {
                OpExpr::prim(PrimOp::sigma(i))
            } else {
                OpExpr::prim(PrimOp::sigma_inv(i))
            };
            let sl = OpExpr::compose(OpExpr::prim(PrimOp::theta_unit(n, i, true)), sig);
            let tr = if plus {
                OpExpr::prim(PrimOp::sigma_inv(i))
            } else {
                OpExpr::prim(PrimOp::sigma(i))
            };
            if let Some(c) = check_twisted_derivation(&d, &sl, &tr, kind, n, &f, bound) {
                cx = Some(format!("d{i}, sign {}: {c}", if plus { "+" } else { "-" }));
            }
        }
    }
    report.push(S, "q-derivatives are twisted derivations", "del-twisted-leibniz", cx);

    // the composite x^(a) del_i, both signs, small a
    let mut cx = None;
    for a in &small {
        for i in 1..=n {
            for plus in [true, false] {
                let d = OpExpr::compose(
                    OpExpr::prim(PrimOp::MulBy(a.clone())),
                    OpExpr::prim(PrimOp::del(i)),
                );
                let shift = a - &MultiIndex::unit(n, i);
                let sig = if plus {
                    OpExpr::prim(PrimOp::sigma(i))
                } else {
                    OpExpr::prim(PrimOp::sigma_inv(i))
                };
                let sl = OpExpr::compose(OpExpr::prim(PrimOp::Theta(shift)), sig);
                let tr = if plus {
                    OpExpr::prim(PrimOp::sigma_inv(i))
                } else {
                    OpExpr::prim(PrimOp::sigma(i))
                };
                if let Some(c) =
                    check_twisted_derivation(&d, &sl, &tr, kind, n, &f, bound)
                {
                    cx = Some(format!("x{a} d{i}: {c}"));
                }
            }
        }
    }
    report.push(
        S,
        "multiplication-derivative composites are twisted derivations",
        "composite-twisted-leibniz",
        cx,
    );

    // derivative commutation
    let mut cx = None;
    for i in 1..=n {
        for j in 1..=n {
            let lhs = OpExpr::compose(
                OpExpr::prim(PrimOp::del(i)),
                OpExpr::prim(PrimOp::del(j)),
            );
            let e = theta_exponent(&MultiIndex::unit(n, i), &MultiIndex::unit(n, j));
            let rhs = OpExpr::scale(
                f.q_power(e),
                OpExpr::compose(OpExpr::prim(PrimOp::del(j)), OpExpr::prim(PrimOp::del(i))),
            );
            if let Some(c) = agree(&lhs, &rhs) {
                cx = Some(format!("(i,j)=({i},{j}): {c}"));
            }
        }
    }
    report.push(S, "d_i d_j = theta(e_i,e_j) d_j d_i", "del-del-commutation", cx);

    // sigma and Theta act as algebra maps
    let basis = monomials_up_to_degree(n, bound, kind.max_entry());
    let mono = |a: &MultiIndex| Element::monomial(kind, a.clone(), f).unwrap();
    let mut cx = None;
    'maps: for a in &basis {
        for b in &basis {
            if a.degree() + b.degree() > bound {
                continue;
            }
            let xa = mono(a);
            let xb = mono(b);
            let ab = xa.mul(&xb);
            for i in 1..=n {
                let s = OpExpr::prim(PrimOp::sigma(i));
                if s.apply(&ab) != s.apply(&xa).mul(&s.apply(&xb)) {
                    cx = Some(format!("sigma_{i} on (x{a}, x{b})"));
                    break 'maps;
                }
            }
            for t in &small {
                let th = OpExpr::prim(PrimOp::Theta(t.clone()));
                if th.apply(&ab) != th.apply(&xa).mul(&th.apply(&xb)) {
                    cx = Some(format!("Theta{t} on (x{a}, x{b})"));
                    break 'maps;
                }
            }
        }
    }
    report.push(S, "sigma and Theta are algebra automorphisms", "automorphism-multiplicative", cx);

    // associativity written through the bicharacter (operator-level form)
    let mut cx = None;
    'forms: for a in &small {
        for b in &basis {
            for c in &basis {
                if b.degree() + c.degree() + a.degree() > bound {
                    continue;
                }
                let xa = mono(a);
                let xb = mono(b);
                let xc = mono(c);
                let lhs = xa.mul(&xb.mul(&xc));
                let mid = xa.mul(&xb).mul(&xc);
                let twisted = xb
                    .mul(&xa.mul(&xc))
                    .scale(&f.q_power(theta_exponent(a, b)));
                let theta_form = OpExpr::prim(PrimOp::Theta(a.clone()))
                    .apply(&xb)
                    .mul(&xa.mul(&xc));
                if lhs != mid || lhs != twisted || lhs != theta_form {
                    cx = Some(format!("(x{a}, x{b}, x{c})"));
                    break 'forms;
                }
            }
        }
    }
    report.push(
        S,
        "left multiplication braids through the bicharacter",
        "mulop-theta-associativity",
        cx,
    );

    // multi-index Pascal identity, both signs
    let mut cx = None;
    'pascal: for beta in &basis {
        for gamma in &basis {
            if beta.degree() + gamma.degree() > bound.max(8) {
                continue;
            }
            let total = beta + gamma;
            let lhs = multi_qbinom(&total, beta, &f);
            for i in 1..=n {
                let ei = MultiIndex::unit(n, i);
                let dropped = &total - &ei;
                for plus in [true, false] {
                    let (e1, e2) = if plus {
                        (-gamma.get(i), beta.get(i))
                    } else {
                        (gamma.get(i), -beta.get(i))
                    };
                    let rhs = &(&multi_qbinom(&dropped, &(beta - &ei), &f)
                        * &f.q_power(e1))
                        + &(&f.q_power(e2) * &multi_qbinom(&dropped, beta, &f));
                    if lhs != rhs {
                        cx = Some(format!("beta={beta}, gamma={gamma}, i={i}"));
                        break 'pascal;
                    }
                }
            }
        }
    }
    report.push(S, "multi-index Pascal identity", "multi-binomial-pascal", cx);

    report
}
