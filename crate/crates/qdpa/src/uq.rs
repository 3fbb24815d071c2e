//! The operator realization of `U_q(sl_n)` and `U_q(gl_n)` on the divided
//! power algebras, root vectors, q-brackets, and the braid-recursion
//! identification of the root vectors.
//!
//! Generators act by `e_i = x_i del_{i+1} sigma_i`,
//! `f_i = sigma_i^{-1} x_{i+1} del_i`, `K_i = sigma_i sigma_{i+1}^{-1}`
//! (and `k_i = sigma_i` for the gl variant), with closed forms
//! `e_i(x^(b)) = [b_i + 1] x^(b + eps_i - eps_{i+1})` and
//! `f_i(x^(b)) = [b_{i+1} + 1] x^(b - eps_i + eps_{i+1})`.
//! Root vectors are `e_ij = x_i del_j sigma_i` for `i < j` and
//! `sigma_j^{-1} x_i del_j` for `i > j`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::galg::{AlgebraKind, Element};
use crate::lattice::MultiIndex;
use crate::ops::{basis_monomials, ops_agree_on_monomials, OpExpr, PrimOp};
use crate::qarith::{qint, Scalar, ScalarField};

/// The realization of `U_q(sl_n)` (plus the gl extension) acting on the
/// rank-n divided power or restricted algebra. Simple-root indexes run over
/// `1 <= i <= n-1`.
#[derive(Debug, Clone)]
pub struct UqRealization {
    pub n: usize,
    pub kind: AlgebraKind,
    pub field: ScalarField,
}

impl UqRealization {
    pub fn new(n: usize, kind: AlgebraKind, field: ScalarField) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid("rank parameter n must be >= 2".into()));
        }
        kind.validate(&field)?;
        if kind == AlgebraKind::Exterior {
            return Err(Error::UnsupportedKind(
                "the exterior module uses the structural recursion in repn".into(),
            ));
        }
        Ok(UqRealization { n, kind, field })
    }

    /// `e_i = x_i del_{i+1} sigma_i` (sigma applied first).
    pub fn e(&self, i: usize) -> OpExpr {
        self.check_simple(i);
        OpExpr::word(&[
            PrimOp::x(self.n, i),
            PrimOp::del(i + 1),
            PrimOp::sigma(i),
        ])
    }

    /// `f_i = sigma_i^{-1} x_{i+1} del_i`.
    pub fn f(&self, i: usize) -> OpExpr {
        self.check_simple(i);
        OpExpr::word(&[
            PrimOp::sigma_inv(i),
            PrimOp::x(self.n, i + 1),
            PrimOp::del(i),
        ])
    }

    /// `K_i = sigma_i sigma_{i+1}^{-1}`.
    pub fn k(&self, i: usize) -> OpExpr {
        self.check_simple(i);
        OpExpr::word(&[PrimOp::sigma(i), PrimOp::sigma_inv(i + 1)])
    }

    pub fn k_inv(&self, i: usize) -> OpExpr {
        self.check_simple(i);
        OpExpr::word(&[PrimOp::sigma_inv(i), PrimOp::sigma(i + 1)])
    }

    /// The gl-variant torus: `k_i = sigma_i` for `1 <= i <= n`.
    pub fn k_gl(&self, i: usize) -> OpExpr {
        assert!(1 <= i && i <= self.n);
        OpExpr::prim(PrimOp::sigma(i))
    }

    pub fn k_gl_inv(&self, i: usize) -> OpExpr {
        assert!(1 <= i && i <= self.n);
        OpExpr::prim(PrimOp::sigma_inv(i))
    }

    fn check_simple(&self, i: usize) {
        assert!(
            1 <= i && i < self.n,
            "simple root index {i} out of range for rank {}",
            self.n
        );
    }

    /// The Cartan integer `a_ij` of type A_{n-1}.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    }

    /// Closed-form action of `e_i` on one monomial.
    pub fn e_closed(&self, i: usize, beta: &MultiIndex) -> Option<(MultiIndex, Scalar)> {
        if beta.get(i + 1) == 0 {
            return None;
        }
        let c = qint(beta.get(i) + 1, &self.field);
        if c.is_zero() {
            return None;
        }
        let target = &(beta + &MultiIndex::unit(self.n, i)) - &MultiIndex::unit(self.n, i + 1);
        Some((target, c))
    }

    /// Closed-form action of `f_i` on one monomial.
    pub fn f_closed(&self, i: usize, beta: &MultiIndex) -> Option<(MultiIndex, Scalar)> {
        if beta.get(i) == 0 {
            return None;
        }
        let c = qint(beta.get(i + 1) + 1, &self.field);
        if c.is_zero() {
            return None;
        }
        let target = &(beta - &MultiIndex::unit(self.n, i)) + &MultiIndex::unit(self.n, i + 1);
        Some((target, c))
    }

    /// The basis the relation checks run over: all monomials of degree
    /// `<= bound` (for the restricted kind its entire `l^n` basis).
    pub fn test_basis(&self, degree_bound: i64) -> Vec<MultiIndex> {
        match self.kind {
            AlgebraKind::Restricted(l) => {
                basis_monomials(self.kind, self.n, (l as i64 - 1) * self.n as i64)
            }
            _ => basis_monomials(self.kind, self.n, degree_bound),
        }
    }

    fn monomial(&self, beta: &MultiIndex) -> Element {
        Element::monomial(self.kind, beta.clone(), self.field).unwrap()
    }
}

/// One named check outcome.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CheckResult {
    pub law: String,
    pub ok: bool,
    pub counterexample: Option<String>,
}

/// A list of named check outcomes.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CheckReport {
    pub results: Vec<CheckResult>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport {
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, law: impl Into<String>, counterexample: Option<String>) {
        let cx = counterexample;
        self.results.push(CheckResult {
            law: law.into(),
            ok: cx.is_none(),
            counterexample: cx,
        });
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.ok)
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.results.extend(other.results);
    }
}

impl Default for CheckReport {
    fn default() -> Self {
        Self::new()
    }
}

/// `(K_i - K_i^{-1}) / (q - q^{-1})` as an operator expression.
fn cartan_commutator_rhs(r: &UqRealization, i: usize) -> OpExpr {
    let f = &r.field;
    let denom = &f.q_power(1) - &f.q_power(-1);
    OpExpr::sum(vec![
        OpExpr::scale(&f.one() / &denom, r.k(i)),
        OpExpr::scale(&(-&f.one()) / &denom, r.k_inv(i)),
    ])
}

/// Verify the full defining-relation suite of `U_q(sl_n)` (and the gl
/// extension) as operator identities on the test basis.
pub fn check_uq_relations(r: &UqRealization, degree_bound: i64) -> CheckReport {
    let mut report = CheckReport::new();
    let n = r.n;
    let f = &r.field;
    let agree = |lhs: &OpExpr, rhs: &OpExpr| {
        ops_agree_on_monomials(lhs, rhs, r.kind, n, f, effective_bound(r, degree_bound))
    };
    let identity = OpExpr::Identity;

    for i in 1..n {
        let cx = agree(&OpExpr::compose(r.k(i), r.k_inv(i)), &identity);
        report.push(format!("K{i} K{i}^-1 = 1"), cx);
        for j in 1..n {
            if i < j {
                let cx = agree(
                    &OpExpr::compose(r.k(i), r.k(j)),
                    &OpExpr::compose(r.k(j), r.k(i)),
                );
                report.push(format!("K{i} K{j} = K{j} K{i}"), cx);
            }
            // K_i e_j K_i^{-1} = q^{a_ij} e_j and the f mirror
            let lhs = OpExpr::compose(r.k(i), OpExpr::compose(r.e(j), r.k_inv(i)));
            let rhs = OpExpr::scale(f.q_power(r.cartan(i, j)), r.e(j));
            report.push(format!("K{i} e{j} K{i}^-1 = q^a e{j}"), agree(&lhs, &rhs));
            let lhs = OpExpr::compose(r.k(i), OpExpr::compose(r.f(j), r.k_inv(i)));
            let rhs = OpExpr::scale(f.q_power(-r.cartan(i, j)), r.f(j));
            report.push(format!("K{i} f{j} K{i}^-1 = q^-a f{j}"), agree(&lhs, &rhs));

            // [e_i, f_j] = delta_ij (K_i - K_i^{-1})/(q - q^{-1})
            let comm = OpExpr::sum(vec![
                OpExpr::compose(r.e(i), r.f(j)),
                OpExpr::scale(f.from_int(-1), OpExpr::compose(r.f(j), r.e(i))),
            ]);
            let rhs = if i == j {
                cartan_commutator_rhs(r, i)
            } else {
                OpExpr::sum(vec![])
            };
            report.push(format!("[e{i}, f{j}] commutator"), agree(&comm, &rhs));
        }
    }

    // Serre relations
    for i in 1..n {
        for j in 1..n {
            if i == j {
                continue;
            }
            if i.abs_diff(j) > 1 {
                let cx = agree(
                    &OpExpr::compose(r.e(i), r.e(j)),
                    &OpExpr::compose(r.e(j), r.e(i)),
                );
                report.push(format!("e{i} e{j} = e{j} e{i}"), cx);
                let cx = agree(
                    &OpExpr::compose(r.f(i), r.f(j)),
                    &OpExpr::compose(r.f(j), r.f(i)),
                );
                report.push(format!("f{i} f{j} = f{j} f{i}"), cx);
            } else {
                let serre = |a: &OpExpr, b: &OpExpr| {
                    OpExpr::sum(vec![
                        OpExpr::compose(a.clone(), OpExpr::compose(a.clone(), b.clone())),
                        OpExpr::scale(
                            -&(&f.q_power(1) + &f.q_power(-1)),
                            OpExpr::compose(a.clone(), OpExpr::compose(b.clone(), a.clone())),
                        ),
                        OpExpr::compose(b.clone(), OpExpr::compose(a.clone(), a.clone())),
                    ])
                };
                let zero = OpExpr::sum(vec![]);
                report.push(
                    format!("Serre e{i} e{j}"),
                    agree(&serre(&r.e(i), &r.e(j)), &zero),
                );
                report.push(
                    format!("Serre f{i} f{j}"),
                    agree(&serre(&r.f(i), &r.f(j)), &zero),
                );
            }
        }
    }

    // gl variant: k_i = sigma_i satisfies the weight-pairing relations
    for i in 1..=n {
        let cx = agree(&OpExpr::compose(r.k_gl(i), r.k_gl_inv(i)), &identity);
        report.push(format!("k{i} k{i}^-1 = 1"), cx);
        for j in 1..n {
            let pairing = crate::lattice::inner(
                &MultiIndex::unit(n, i),
                &MultiIndex::simple_root(n, j),
            );
            let lhs = OpExpr::compose(r.k_gl(i), OpExpr::compose(r.e(j), r.k_gl_inv(i)));
            let rhs = OpExpr::scale(f.q_power(pairing), r.e(j));
            report.push(format!("k{i} e{j} k{i}^-1"), agree(&lhs, &rhs));
            let lhs = OpExpr::compose(r.k_gl(i), OpExpr::compose(r.f(j), r.k_gl_inv(i)));
            let rhs = OpExpr::scale(f.q_power(-pairing), r.f(j));
            report.push(format!("k{i} f{j} k{i}^-1"), agree(&lhs, &rhs));
        }
        if i < n {
            let cx = agree(
                &r.k(i),
                &OpExpr::compose(r.k_gl(i), r.k_gl_inv(i + 1)),
            );
            report.push(format!("K{i} = k{i} k{}^-1", i + 1), cx);
        }
    }

    // closed-form agreement for the generator actions
    let mut cx = None;
    'outer: for beta in r.test_basis(effective_bound(r, degree_bound)) {
        for i in 1..n {
            let x = r.monomial(&beta);
            let via_ops = r.e(i).apply(&x);
            let closed = match r.e_closed(i, &beta) {
                None => Element::zero(r.kind, n, *f),
                Some((t, c)) => r.monomial(&t).scale(&c),
            };
            if via_ops != closed {
                cx = Some(format!("e{i} on x{beta}"));
                break 'outer;
            }
            let via_ops = r.f(i).apply(&x);
            let closed = match r.f_closed(i, &beta) {
                None => Element::zero(r.kind, n, *f),
                Some((t, c)) => r.monomial(&t).scale(&c),
            };
            if via_ops != closed {
                cx = Some(format!("f{i} on x{beta}"));
                break 'outer;
            }
        }
    }
    report.push("generator closed forms", cx);

    report
}

fn effective_bound(r: &UqRealization, degree_bound: i64) -> i64 {
    match r.kind {
        AlgebraKind::Restricted(l) => (l as i64 - 1) * r.n as i64,
        _ => degree_bound,
    }
}

/// Verify the module-algebra laws: counit on the unit, `K` and `k` act as
/// algebra maps, and the twisted Leibniz rules for `e_i` and `f_i`, on all
/// monomial pairs with total degree `<= degree_bound`.
pub fn check_module_algebra(r: &UqRealization, degree_bound: i64) -> CheckReport {
    let mut report = CheckReport::new();
    let n = r.n;
    let bound = effective_bound(r, degree_bound);
    let basis = r.test_basis(bound);
    let unit = Element::unit(r.kind, n, r.field);

    // u(1) = eps(u) 1
    let mut cx = None;
    for i in 1..n {
        if !r.e(i).apply(&unit).is_zero() || !r.f(i).apply(&unit).is_zero() {
            cx = Some(format!("e{i}/f{i} on 1"));
        }
        if r.k(i).apply(&unit) != unit {
            cx = Some(format!("K{i} on 1"));
        }
    }
    report.push("u(1) = eps(u) 1", cx);

    let pairs = || {
        basis.iter().flat_map(|b| {
            basis
                .iter()
                .filter(move |g| b.degree() + g.degree() <= bound)
                .map(move |g| (b, g))
        })
    };

    // K_i and k_i multiplicative
    let mut cx = None;
    'k: for (beta, gamma) in pairs() {
        let a = r.monomial(beta);
        let b = r.monomial(gamma);
        let ab = a.mul(&b);
        for i in 1..n {
            if r.k(i).apply(&ab) != r.k(i).apply(&a).mul(&r.k(i).apply(&b)) {
                cx = Some(format!("K{i} on (x{beta}, x{gamma})"));
                break 'k;
            }
        }
        for i in 1..=n {
            if r.k_gl(i).apply(&ab) != r.k_gl(i).apply(&a).mul(&r.k_gl(i).apply(&b)) {
                cx = Some(format!("k{i} on (x{beta}, x{gamma})"));
                break 'k;
            }
        }
    }
    report.push("K_i(ab) = K_i(a) K_i(b)", cx);

    // e_i(ab) = a e_i(b) + e_i(a) K_i(b)
    let mut cx = None;
    'e: for (beta, gamma) in pairs() {
        let a = r.monomial(beta);
        let b = r.monomial(gamma);
        let ab = a.mul(&b);
        for i in 1..n {
            let lhs = r.e(i).apply(&ab);
            let rhs = a
                .mul(&r.e(i).apply(&b))
                .add(&r.e(i).apply(&a).mul(&r.k(i).apply(&b)));
            if lhs != rhs {
                cx = Some(format!("e{i} on (x{beta}, x{gamma})"));
                break 'e;
            }
        }
    }
    report.push("e_i(ab) = a e_i(b) + e_i(a) K_i(b)", cx);

    // f_i(ab) = K_i^{-1}(a) f_i(b) + f_i(a) b
    let mut cx = None;
    'f: for (beta, gamma) in pairs() {
        let a = r.monomial(beta);
        let b = r.monomial(gamma);
        let ab = a.mul(&b);
        for i in 1..n {
            let lhs = r.f(i).apply(&ab);
            let rhs = r
                .k_inv(i)
                .apply(&a)
                .mul(&r.f(i).apply(&b))
                .add(&r.f(i).apply(&a).mul(&b));
            if lhs != rhs {
                cx = Some(format!("f{i} on (x{beta}, x{gamma})"));
                break 'f;
            }
        }
    }
    report.push("f_i(ab) = K_i^-1(a) f_i(b) + f_i(a) b", cx);

    report
}

/// Nilpotency on the restricted algebra: `e_i^l` and `f_i^l` act as zero.
pub fn check_nilpotency(r: &UqRealization) -> CheckReport {
    let mut report = CheckReport::new();
    let AlgebraKind::Restricted(l) = r.kind else {
        report.push("nilpotency needs the restricted kind", Some("wrong kind".into()));
        return report;
    };
    let zero = OpExpr::sum(vec![]);
    let mut cx = None;
    for i in 1..r.n {
        let mut e_pow = OpExpr::Identity;
        let mut f_pow = OpExpr::Identity;
        for _ in 0..l {
            e_pow = OpExpr::compose(r.e(i), e_pow);
            f_pow = OpExpr::compose(r.f(i), f_pow);
        }
        let bound = effective_bound(r, 0);
        if let Some(c) =
            ops_agree_on_monomials(&e_pow, &zero, r.kind, r.n, &r.field, bound)
        {
            cx = Some(format!("e{i}^{l}: {c}"));
        }
        if let Some(c) =
            ops_agree_on_monomials(&f_pow, &zero, r.kind, r.n, &r.field, bound)
        {
            cx = Some(format!("f{i}^{l}: {c}"));
        }
    }
    report.push("e_i^l = f_i^l = 0 on the restricted algebra", cx);
    report
}

// ---------------------------------------------------------------------------
// root vectors
// ---------------------------------------------------------------------------

/// The root-vector operators `e_ij` attached to a realization.
#[derive(Debug, Clone)]
pub struct RootVectorSet {
    pub n: usize,
    pub kind: AlgebraKind,
    pub field: ScalarField,
}

impl RootVectorSet {
    pub fn new(r: &UqRealization) -> Self {
        RootVectorSet {
            n: r.n,
            kind: r.kind,
            field: r.field,
        }
    }

    /// `E_ij = x_i del_j`.
    pub fn capital_e(&self, i: usize, j: usize) -> OpExpr {
        OpExpr::word(&[PrimOp::x(self.n, i), PrimOp::del(j)])
    }

    /// `e_ij = E_ij sigma_i` for `i < j`, `sigma_j^{-1} E_ij` for `i > j`.
    pub fn root_vector(&self, i: usize, j: usize) -> Result<OpExpr> {
        if i == j || i < 1 || j < 1 || i > self.n || j > self.n {
            return Err(Error::Invalid(format!("root vector needs 1 <= i != j <= n, got ({i},{j})")));
        }
        Ok(if i < j {
            OpExpr::compose(self.capital_e(i, j), OpExpr::prim(PrimOp::sigma(i)))
        } else {
            OpExpr::compose(OpExpr::prim(PrimOp::sigma_inv(j)), self.capital_e(i, j))
        })
    }

    /// Closed-form action of `e_ij` on one monomial:
    /// `[b_i + 1] q^{-sum_{i<s<j} b_s} x^(b + eps_i - eps_j)` for `i < j`,
    /// `[b_i + 1] q^{ sum_{j<s<i} b_s} x^(b - eps_j + eps_i)` for `i > j`.
    pub fn closed_form(&self, i: usize, j: usize, beta: &MultiIndex) -> Option<(MultiIndex, Scalar)> {
        if beta.get(j) == 0 {
            return None;
        }
        let c = qint(beta.get(i) + 1, &self.field);
        if c.is_zero() {
            return None;
        }
        let e: i64 = if i < j {
            -beta.entries()[i..j - 1].iter().sum::<i64>()
        } else {
            beta.entries()[j..i - 1].iter().sum::<i64>()
        };
        let target = &(beta + &MultiIndex::unit(self.n, i)) - &MultiIndex::unit(self.n, j);
        Some((target, &c * &self.field.q_power(e)))
    }

    /// The closed form as an operator-equality check against the composite.
    pub fn closed_form_agrees(&self, i: usize, j: usize, degree_bound: i64) -> Option<String> {
        let op = self.root_vector(i, j).unwrap();
        for beta in basis_monomials(self.kind, self.n, degree_bound) {
            let x = Element::monomial(self.kind, beta.clone(), self.field).unwrap();
            let got = op.apply(&x);
            let expect = match self.closed_form(i, j, &beta) {
                None => Element::zero(self.kind, self.n, self.field),
                Some((t, c)) => Element::monomial(self.kind, t, self.field)
                    .map(|m| m.scale(&c))
                    .unwrap_or_else(|_| Element::zero(self.kind, self.n, self.field)),
            };
            if got != expect {
                return Some(format!("e({i},{j}) on x{beta}: {got} vs {expect}"));
            }
        }
        None
    }
}

/// `[a, b]_{q^{+-1}} = a b - q^{+-1} b a`.
pub fn qbracket(a: &OpExpr, b: &OpExpr, plus: bool, field: &ScalarField) -> OpExpr {
    let e = if plus { 1 } else { -1 };
    OpExpr::sum(vec![
        OpExpr::compose(a.clone(), b.clone()),
        OpExpr::scale(-&field.q_power(e), OpExpr::compose(b.clone(), a.clone())),
    ])
}

/// Root-vector identity suite: the q-bracket factorizations with
/// k-independence, the Cartan-type commutator for `e_ij e_ji`, both nested
/// bracket association orders, and the inner recursion steps.
pub fn verify_rootvector_identities(
    r: &UqRealization,
    degree_bound: i64,
) -> CheckReport {
    let mut report = CheckReport::new();
    let rv = RootVectorSet::new(r);
    let n = r.n;
    let f = &r.field;
    let bound = effective_bound(r, degree_bound);
    let agree =
        |lhs: &OpExpr, rhs: &OpExpr| ops_agree_on_monomials(lhs, rhs, r.kind, n, f, bound);

    // closed forms for every pair
    let mut cx = None;
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            if let Some(c) = rv.closed_form_agrees(i, j, bound) {
                cx = Some(c);
            }
        }
    }
    report.push("root vector closed forms", cx);

    // boundary cases e_{i,i+1} = e_i, e_{i+1,i} = f_i
    let mut cx = None;
    for i in 1..n {
        if let Some(c) = agree(&rv.root_vector(i, i + 1).unwrap(), &r.e(i)) {
            cx = Some(format!("e({i},{}) vs e{i}: {c}", i + 1));
        }
        if let Some(c) = agree(&rv.root_vector(i + 1, i).unwrap(), &r.f(i)) {
            cx = Some(format!("e({},{i}) vs f{i}: {c}", i + 1));
        }
    }
    report.push("boundary root vectors are the generators", cx);

    // q-bracket factorization, all intermediate k (k-independence)
    let mut cx = None;
    for i in 1..=n {
        for j in 1..=n {
            if i < j {
                for k in i + 1..j {
                    let lhs = qbracket(
                        &rv.root_vector(i, k).unwrap(),
                        &rv.root_vector(k, j).unwrap(),
                        true,
                        f,
                    );
                    if let Some(c) = agree(&lhs, &rv.root_vector(i, j).unwrap()) {
                        cx = Some(format!("[e({i},{k}), e({k},{j})]_q: {c}"));
                    }
                }
            } else if j < i {
                for k in j + 1..i {
                    let lhs = qbracket(
                        &rv.root_vector(i, k).unwrap(),
                        &rv.root_vector(k, j).unwrap(),
                        false,
                        f,
                    );
                    if let Some(c) = agree(&lhs, &rv.root_vector(i, j).unwrap()) {
                        cx = Some(format!("[e({i},{k}), e({k},{j})]_q^-1: {c}"));
                    }
                }
            }
        }
    }
    report.push("q-bracket factorization, independent of k", cx);

    // e_ij e_ji - e_ji e_ij = (sigma_i sigma_j^{-1} - sigma_i^{-1} sigma_j)/(q - q^{-1})
    let mut cx = None;
    for i in 1..=n {
        for j in i + 1..=n {
            let eij = rv.root_vector(i, j).unwrap();
            let eji = rv.root_vector(j, i).unwrap();
            let lhs = OpExpr::sum(vec![
                OpExpr::compose(eij.clone(), eji.clone()),
                OpExpr::scale(f.from_int(-1), OpExpr::compose(eji, eij)),
            ]);
            let denom = &f.q_power(1) - &f.q_power(-1);
            let rhs = OpExpr::sum(vec![
                OpExpr::scale(
                    &f.one() / &denom,
                    OpExpr::word(&[PrimOp::sigma(i), PrimOp::sigma_inv(j)]),
                ),
                OpExpr::scale(
                    &(-&f.one()) / &denom,
                    OpExpr::word(&[PrimOp::sigma_inv(i), PrimOp::sigma(j)]),
                ),
            ]);
            if let Some(c) = agree(&lhs, &rhs) {
                cx = Some(format!("e({i},{j}) e({j},{i}) commutator: {c}"));
            }
        }
    }
    report.push("opposite root vectors close on the torus", cx);

    // nested q-bracket expansions, both association orders
    let mut cx = None;
    for i in 1..=n {
        for j in 1..=n {
            if i.abs_diff(j) < 2 {
                continue;
            }
            let plus = i < j;
            let step: Vec<usize> = if i < j {
                (i..=j).collect()
            } else {
                (j..=i).rev().collect()
            };
            // left-nested: [[..[e_{s0 s1}, e_{s1 s2}]_q, ...], e_{s_{m-1} s_m}]_q
            let mut left = rv.root_vector(step[0], step[1]).unwrap();
            for w in step.windows(2).skip(1) {
                left = qbracket(
                    &left,
                    &rv.root_vector(w[0], w[1]).unwrap(),
                    plus,
                    f,
                );
            }
            // right-nested
            let m = step.len();
            let mut right = rv.root_vector(step[m - 2], step[m - 1]).unwrap();
            for w in step.windows(2).rev().skip(1) {
                right = qbracket(
                    &rv.root_vector(w[0], w[1]).unwrap(),
                    &right,
                    plus,
                    f,
                );
            }
            let target = rv.root_vector(i, j).unwrap();
            if let Some(c) = agree(&left, &target) {
                cx = Some(format!("left-nested chain to e({i},{j}): {c}"));
            }
            if let Some(c) = agree(&right, &target) {
                cx = Some(format!("right-nested chain to e({i},{j}): {c}"));
            }
        }
    }
    report.push("nested q-bracket chains, both association orders", cx);

    // inner recursion steps: [e_ij, -f_i K_i^{-1}]_q = e_{i+1,j} for i+1 < j,
    // and the mirror [-K_i e_i, e_ji]_{q^{-1}} = e_{j,i+1}
    let mut cx = None;
    for i in 1..n {
        for j in i + 2..=n {
            let ti_e = OpExpr::scale(
                f.from_int(-1),
                OpExpr::compose(r.f(i), r.k_inv(i)),
            );
            let lhs = qbracket(&rv.root_vector(i, j).unwrap(), &ti_e, true, f);
            if let Some(c) = agree(&lhs, &rv.root_vector(i + 1, j).unwrap()) {
                cx = Some(format!("[e({i},{j}), T(e{i})]_q: {c}"));
            }
            let ti_f = OpExpr::scale(
                f.from_int(-1),
                OpExpr::compose(r.k(i), r.e(i)),
            );
            let lhs = qbracket(&ti_f, &rv.root_vector(j, i).unwrap(), false, f);
            if let Some(c) = agree(&lhs, &rv.root_vector(j, i + 1).unwrap()) {
                cx = Some(format!("[T(f{i}), e({j},{i})]_q^-1: {c}"));
            }
        }
    }
    report.push("braid-image recursion steps", cx);

    report
}

/// Build every root vector by the braid-word recursion (base: simple
/// generators; column steps through the q-brackets and the braid images
/// `-f_i K_i^{-1}` / `-K_i e_i`), and check each against the closed-form
/// operator. Returns the constructed operators keyed by `(i, j)`.
pub fn lusztig_rootvector_recursion(
    r: &UqRealization,
    degree_bound: i64,
) -> (BTreeMap<(usize, usize), OpExpr>, CheckReport) {
    let mut report = CheckReport::new();
    let rv = RootVectorSet::new(r);
    let n = r.n;
    let f = &r.field;
    let bound = effective_bound(r, degree_bound);
    let mut map: BTreeMap<(usize, usize), OpExpr> = BTreeMap::new();

    // positive side, columns j = 2..n in the fixed reduced-word ordering
    for j in 2..=n {
        // base of the column
        if j == 2 {
            map.insert((1, 2), r.e(1));
        } else {
            let prev = map[&(1, j - 1)].clone();
            map.insert((1, j), qbracket(&prev, &r.e(j - 1), true, f));
        }
        // walk down the column with the braid image of e_i
        for i in 1..j - 1 {
            let ti_e = OpExpr::scale(f.from_int(-1), OpExpr::compose(r.f(i), r.k_inv(i)));
            let cur = map[&(i, j)].clone();
            map.insert((i + 1, j), qbracket(&cur, &ti_e, true, f));
        }
    }

    // negative side, mirrored: base f_{j-1}, column step down to (j, 1),
    // then climb with the braid image of f_i
    for j in 2..=n {
        if j == 2 {
            map.insert((2, 1), r.f(1));
            continue;
        }
        map.insert((j, j - 1), r.f(j - 1));
        let base = map[&(j, j - 1)].clone();
        let prev = map[&(j - 1, 1)].clone();
        map.insert((j, 1), qbracket(&base, &prev, false, f));
        // e_{j,i+1} = [-K_i e_i, e_{j,i}]_{q^{-1}} for i+1 <= j-2
        for i in 1..=j.saturating_sub(3) {
            let ti_f = OpExpr::scale(f.from_int(-1), OpExpr::compose(r.k(i), r.e(i)));
            let cur = map[&(j, i)].clone();
            map.insert((j, i + 1), qbracket(&ti_f, &cur, false, f));
        }
    }

    let mut cx = None;
    for ((i, j), op) in &map {
        let target = rv.root_vector(*i, *j).unwrap();
        if let Some(c) = ops_agree_on_monomials(op, &target, r.kind, n, f, bound) {
            cx = Some(format!("recursion for e({i},{j}): {c}"));
        }
    }
    assert_eq!(map.len(), n * (n - 1), "one operator per ordered pair");
    report.push("braid recursion reproduces all root vectors", cx);
    (map, report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> ScalarField {
        ScalarField::Generic
    }

    fn dp(n: usize) -> UqRealization {
        UqRealization::new(n, AlgebraKind::DividedPower, g()).unwrap()
    }

    fn mono(_n: usize, v: &[i64]) -> Element {
        Element::monomial(AlgebraKind::DividedPower, MultiIndex::new(v.to_vec()), g()).unwrap()
    }

    #[test]
    fn generator_actions() {
        let r = dp(2);
        // [e_1, f_1] on x^((2,0)) = [2] x^((2,0))
        let x = mono(2, &[2, 0]);
        let ef = r.e(1).apply(&r.f(1).apply(&x));
        let fe = r.f(1).apply(&r.e(1).apply(&x));
        let got = ef.sub(&fe);
        assert_eq!(got, x.scale(&qint(2, &g())));
        // matches (q^2 - q^-2)/(q - q^-1)
        let f = g();
        let expect = &(&f.q_power(2) - &f.q_power(-2)) / &(&f.q_power(1) - &f.q_power(-1));
        assert_eq!(got, x.scale(&expect));
    }

    #[test]
    fn relations_pass_small_rank() {
        for n in [2usize, 3] {
            let r = dp(n);
            let rep = check_uq_relations(&r, 4);
            for c in &rep.results {
                assert!(c.ok, "n={n}: {} ({:?})", c.law, c.counterexample);
            }
        }
    }

    #[test]
    fn module_algebra_passes() {
        let r = dp(2);
        let rep = check_module_algebra(&r, 5);
        assert!(rep.passed(), "{:?}", rep.results);
    }

    #[test]
    fn restricted_suite_and_nilpotency() {
        let field = ScalarField::root_of_unity(3).unwrap();
        let r = UqRealization::new(2, AlgebraKind::Restricted(3), field).unwrap();
        assert!(check_uq_relations(&r, 0).passed());
        assert!(check_module_algebra(&r, 0).passed());
        assert!(check_nilpotency(&r).passed());
    }

    #[test]
    fn root_vector_closed_forms() {
        let r = dp(3);
        let rv = RootVectorSet::new(&r);
        // e_13 on x^((1,1,1)) = [2] q^{-1} x^((2,1,0))
        let x = mono(3, &[1, 1, 1]);
        let got = rv.root_vector(1, 3).unwrap().apply(&x);
        let f = g();
        let expect = mono(3, &[2, 1, 0]).scale(&(&qint(2, &f) * &f.q_power(-1)));
        assert_eq!(got, expect);
        // e_31 on x^((1,1,1)) = [2] q x^((0,1,2))
        let got = rv.root_vector(3, 1).unwrap().apply(&x);
        let expect = mono(3, &[0, 1, 2]).scale(&(&qint(2, &f) * &f.q_power(1)));
        assert_eq!(got, expect);
        assert!(rv.root_vector(2, 2).is_err());
    }

    #[test]
    fn qbracket_identities() {
        let r = dp(3);
        let rv = RootVectorSet::new(&r);
        let f = g();
        // [e_12, e_23]_q = e_13
        let lhs = qbracket(
            &rv.root_vector(1, 2).unwrap(),
            &rv.root_vector(2, 3).unwrap(),
            true,
            &f,
        );
        assert!(ops_agree_on_monomials(
            &lhs,
            &rv.root_vector(1, 3).unwrap(),
            AlgebraKind::DividedPower,
            3,
            &f,
            5
        )
        .is_none());
        // [e_32, e_21]_{q^-1} = e_31
        let lhs = qbracket(
            &rv.root_vector(3, 2).unwrap(),
            &rv.root_vector(2, 1).unwrap(),
            false,
            &f,
        );
        assert!(ops_agree_on_monomials(
            &lhs,
            &rv.root_vector(3, 1).unwrap(),
            AlgebraKind::DividedPower,
            3,
            &f,
            5
        )
        .is_none());
        // [a, a]_q = (1 - q) a^2
        let a = rv.root_vector(1, 2).unwrap();
        let lhs = qbracket(&a, &a, true, &f);
        let rhs = OpExpr::scale(
            &f.one() - &f.q_power(1),
            OpExpr::compose(a.clone(), a.clone()),
        );
        assert!(
            ops_agree_on_monomials(&lhs, &rhs, AlgebraKind::DividedPower, 3, &f, 5).is_none()
        );
    }

    #[test]
    fn identity_suite_n3() {
        let r = dp(3);
        let rep = verify_rootvector_identities(&r, 5);
        for c in &rep.results {
            assert!(c.ok, "{} ({:?})", c.law, c.counterexample);
        }
    }

    #[test]
    fn recursion_small() {
        let r = dp(3);
        let (map, rep) = lusztig_rootvector_recursion(&r, 5);
        assert!(rep.passed(), "{:?}", rep.results);
        assert_eq!(map.len(), 6);
        // e_{a_23} is the simple generator e_2 itself
        let f = g();
        assert!(ops_agree_on_monomials(
            &map[&(2, 3)],
            &r.e(2),
            AlgebraKind::DividedPower,
            3,
            &f,
            5
        )
        .is_none());
    }
}
