//! Presentations of the operator quantum groups and verification of their
//! Hopf axioms in the representation on the divided power algebra.
//!
//! Three ordinary Hopf algebras are presented by generators and relations:
//! the q-derivative group (two coproduct variants), the augmented divided
//! power group (Theta's adjoined to the x_i), and the quantum n-space group
//! (Theta's, sigma's, and x_i). Coproduct legs and antipode images are kept
//! as formal generator words so the antipode can act anti-multiplicatively;
//! every check realizes the words as operators and compares actions on
//! basis monomials, pairs, or triples up to a degree bound.

use std::collections::BTreeMap;
use std::fmt;

use crate::galg::{AlgebraKind, Element};
use crate::lattice::{theta_exponent, MultiIndex};
use crate::ops::{basis_monomials, OpExpr, PrimOp};
use crate::qarith::{char_q, qbinom, Scalar, ScalarField};
use crate::weyl::WeylVariant;

/// A formal generator of one of the presented quantum groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gen {
    ThetaP(usize),
    ThetaM(usize),
    Sigma(usize),
    SigmaInv(usize),
    Del(usize),
    X(usize),
    /// The divided power `x_i^(l)`; only present when `q^l = 1`.
    Xl(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::ThetaP(i) => write!(f, "Th(+e{i})"),
            Gen::ThetaM(i) => write!(f, "Th(-e{i})"),
            Gen::Sigma(i) => write!(f, "s{i}"),
            Gen::SigmaInv(i) => write!(f, "s{i}^-1"),
            Gen::Del(i) => write!(f, "d{i}"),
            Gen::X(i) => write!(f, "x{i}"),
            Gen::Xl(i) => write!(f, "x{i}^(l)"),
        }
    }
}

/// A scalar multiple of a word in the generators.
#[derive(Debug, Clone)]
pub struct GenWord {
    pub coeff: Scalar,
    pub gens: Vec<Gen>,
}

impl GenWord {
    pub fn new(coeff: Scalar, gens: Vec<Gen>) -> Self {
        GenWord { coeff, gens }
    }

    pub fn one(field: &ScalarField, gens: Vec<Gen>) -> Self {
        GenWord {
            coeff: field.one(),
            gens,
        }
    }
}

/// One pure tensor `coeff * (left (x) right)` of a coproduct.
#[derive(Debug, Clone)]
pub struct TensorTerm {
    pub coeff: Scalar,
    pub left: Vec<Gen>,
    pub right: Vec<Gen>,
}

/// A named defining relation: sum of words = sum of words.
#[derive(Debug, Clone)]
pub struct Relation {
    pub label: String,
    pub lhs: Vec<GenWord>,
    pub rhs: Vec<GenWord>,
}

/// Which quantum group to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationName {
    /// q-derivative group, coproduct variant `+` or `-`.
    Dq(WeylVariant),
    /// Divided power algebra with the Theta group adjoined.
    FrakAq,
    /// The quantum n-space group (Theta's, sigma's, x's).
    FrakUq,
    /// The braided Hopf structure on `A_q` itself (handled separately).
    BraidedAq,
}

impl fmt::Display for PresentationName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationName::Dq(WeylVariant::Plus) => write!(f, "dq+"),
            PresentationName::Dq(WeylVariant::Minus) => write!(f, "dq-"),
            PresentationName::FrakAq => write!(f, "aq"),
            PresentationName::FrakUq => write!(f, "uq"),
            PresentationName::BraidedAq => write!(f, "braided-aq"),
        }
    }
}

/// A presented quantum group over a fixed dimension and field.
#[derive(Debug, Clone)]
pub struct HopfPresentation {
    pub name: PresentationName,
    pub dim: usize,
    pub field: ScalarField,
}

impl HopfPresentation {
    pub fn new(name: PresentationName, dim: usize, field: ScalarField) -> Self {
        HopfPresentation { name, dim, field }
    }

    /// `l = char(q)` when `q^l = 1` (so the `x^(l)` extras apply), else None.
    fn root_l(&self) -> Option<i64> {
        match self.field {
            ScalarField::Generic => None,
            ScalarField::RootOfUnity(_) => {
                let l = char_q(&self.field) as i64;
                if self.field.q_power_is_one(l) {
                    Some(l)
                } else {
                    None
                }
            }
        }
    }

    pub fn generators(&self) -> Vec<Gen> {
        let n = self.dim;
        let mut gens = Vec::new();
        match self.name {
            PresentationName::Dq(_) => {
                for i in 1..=n {
                    gens.push(Gen::ThetaP(i));
                    gens.push(Gen::ThetaM(i));
                    gens.push(Gen::Sigma(i));
                    gens.push(Gen::SigmaInv(i));
                    gens.push(Gen::Del(i));
                }
            }
            PresentationName::FrakAq => {
                for i in 1..=n {
                    gens.push(Gen::ThetaP(i));
                    gens.push(Gen::ThetaM(i));
                    gens.push(Gen::X(i));
                }
                if self.root_l().is_some() {
                    for i in 1..=n {
                        gens.push(Gen::Xl(i));
                    }
                }
            }
            PresentationName::FrakUq => {
                for i in 1..=n {
                    gens.push(Gen::ThetaP(i));
                    gens.push(Gen::ThetaM(i));
                    gens.push(Gen::Sigma(i));
                    gens.push(Gen::SigmaInv(i));
                    gens.push(Gen::X(i));
                }
            }
            PresentationName::BraidedAq => {
                for i in 1..=n {
                    gens.push(Gen::X(i));
                }
            }
        }
        gens
    }

    /// Realize one generator as an operator on `A_q`.
    pub fn realize_gen(&self, g: &Gen) -> OpExpr {
        let n = self.dim;
        match g {
            Gen::ThetaP(i) => OpExpr::prim(PrimOp::theta_unit(n, *i, false)),
            Gen::ThetaM(i) => OpExpr::prim(PrimOp::theta_unit(n, *i, true)),
            Gen::Sigma(i) => OpExpr::prim(PrimOp::sigma(*i)),
            Gen::SigmaInv(i) => OpExpr::prim(PrimOp::sigma_inv(*i)),
            Gen::Del(i) => OpExpr::prim(PrimOp::del(*i)),
            Gen::X(i) => OpExpr::prim(PrimOp::x(n, *i)),
            Gen::Xl(i) => {
                let l = self.root_l().expect("x^(l) generators need q^l = 1");
                let mut a = MultiIndex::zero(n);
                a.set(*i, l);
                OpExpr::prim(PrimOp::MulBy(a))
            }
        }
    }

    /// Realize a word (mathematical order) as an operator.
    pub fn realize_word(&self, gens: &[Gen]) -> OpExpr {
        gens.iter().rev().fold(OpExpr::Identity, |acc, g| {
            OpExpr::compose(self.realize_gen(g), acc)
        })
    }

    pub fn realize_genword(&self, w: &GenWord) -> OpExpr {
        OpExpr::scale(w.coeff.clone(), self.realize_word(&w.gens))
    }

    fn theta_gen(&self, i: usize, negative: bool) -> Gen {
        if negative {
            Gen::ThetaM(i)
        } else {
            Gen::ThetaP(i)
        }
    }

    /// The defining relations.
    pub fn relations(&self) -> Vec<Relation> {
        let n = self.dim;
        let f = &self.field;
        let one = |gens: Vec<Gen>| vec![GenWord::one(f, gens)];
        let scaled = |c: Scalar, gens: Vec<Gen>| vec![GenWord::new(c, gens)];
        let mut rels: Vec<Relation> = Vec::new();
        let mut rel = |label: String, lhs: Vec<GenWord>, rhs: Vec<GenWord>| {
            rels.push(Relation { label, lhs, rhs });
        };

        let has_sigma = matches!(
            self.name,
            PresentationName::Dq(_) | PresentationName::FrakUq
        );
        let has_theta = !matches!(self.name, PresentationName::BraidedAq);

        if has_theta {
            for i in 1..=n {
                rel(
                    format!("Th(e{i}) Th(-e{i}) = 1"),
                    one(vec![Gen::ThetaP(i), Gen::ThetaM(i)]),
                    one(vec![]),
                );
                for j in i + 1..=n {
                    rel(
                        format!("Th(e{i}) Th(e{j}) = Th(e{j}) Th(e{i})"),
                        one(vec![Gen::ThetaP(i), Gen::ThetaP(j)]),
                        one(vec![Gen::ThetaP(j), Gen::ThetaP(i)]),
                    );
                }
            }
        }
        if has_sigma {
            for i in 1..=n {
                rel(
                    format!("s{i} s{i}^-1 = 1"),
                    one(vec![Gen::Sigma(i), Gen::SigmaInv(i)]),
                    one(vec![]),
                );
                for j in i + 1..=n {
                    rel(
                        format!("s{i} s{j} = s{j} s{i}"),
                        one(vec![Gen::Sigma(i), Gen::Sigma(j)]),
                        one(vec![Gen::Sigma(j), Gen::Sigma(i)]),
                    );
                }
                for j in 1..=n {
                    rel(
                        format!("s{i} Th(e{j}) = Th(e{j}) s{i}"),
                        one(vec![Gen::Sigma(i), Gen::ThetaP(j)]),
                        one(vec![Gen::ThetaP(j), Gen::Sigma(i)]),
                    );
                }
            }
            for i in 1..n {
                // Theta(-e_i + e_{i+1}) = sigma_i sigma_{i+1}
                rel(
                    format!("Th(-e{i}) Th(e{})", i + 1),
                    one(vec![Gen::ThetaM(i), Gen::ThetaP(i + 1)]),
                    one(vec![Gen::Sigma(i), Gen::Sigma(i + 1)]),
                );
            }
        }

        match self.name {
            PresentationName::Dq(_) => {
                for i in 1..=n {
                    for j in 1..=n {
                        let th = theta_exponent(
                            &MultiIndex::unit(n, i),
                            &MultiIndex::unit(n, j),
                        );
                        rel(
                            format!("Th(e{j}) d{i} = theta(e{i},e{j}) d{i} Th(e{j})"),
                            one(vec![Gen::ThetaP(j), Gen::Del(i)]),
                            scaled(f.q_power(th), vec![Gen::Del(i), Gen::ThetaP(j)]),
                        );
                        let d = if i == j { -1 } else { 0 };
                        rel(
                            format!("s{j} d{i} = q^(-d_ij) d{i} s{j}"),
                            one(vec![Gen::Sigma(j), Gen::Del(i)]),
                            scaled(f.q_power(d), vec![Gen::Del(i), Gen::Sigma(j)]),
                        );
                        if i < j {
                            rel(
                                format!("d{i} d{j} = theta(e{i},e{j}) d{j} d{i}"),
                                one(vec![Gen::Del(i), Gen::Del(j)]),
                                scaled(f.q_power(th), vec![Gen::Del(j), Gen::Del(i)]),
                            );
                        }
                    }
                }
            }
            PresentationName::FrakAq => {
                for i in 1..=n {
                    for j in 1..=n {
                        let th = theta_exponent(
                            &MultiIndex::unit(n, j),
                            &MultiIndex::unit(n, i),
                        );
                        rel(
                            format!("Th(e{j}) x{i} = theta(e{j},e{i}) x{i} Th(e{j})"),
                            one(vec![Gen::ThetaP(j), Gen::X(i)]),
                            scaled(f.q_power(th), vec![Gen::X(i), Gen::ThetaP(j)]),
                        );
                        if i < j {
                            rel(
                                format!("x{i} x{j} = theta(e{i},e{j}) x{j} x{i}"),
                                one(vec![Gen::X(i), Gen::X(j)]),
                                scaled(f.q_power(-th), vec![Gen::X(j), Gen::X(i)]),
                            );
                        }
                    }
                }
                if self.root_l().is_some() {
                    for i in 1..=n {
                        for j in 1..=n {
                            rel(
                                format!("Th(e{j}) x{i}^(l) = x{i}^(l) Th(e{j})"),
                                one(vec![Gen::ThetaP(j), Gen::Xl(i)]),
                                one(vec![Gen::Xl(i), Gen::ThetaP(j)]),
                            );
                            rel(
                                format!("x{j} x{i}^(l) = x{i}^(l) x{j}"),
                                one(vec![Gen::X(j), Gen::Xl(i)]),
                                one(vec![Gen::Xl(i), Gen::X(j)]),
                            );
                        }
                    }
                }
            }
            PresentationName::FrakUq => {
                for i in 1..=n {
                    for j in 1..=n {
                        let th = theta_exponent(
                            &MultiIndex::unit(n, i),
                            &MultiIndex::unit(n, j),
                        );
                        rel(
                            format!("Th(e{i}) x{j} = theta(e{i},e{j}) x{j} Th(e{i})"),
                            one(vec![Gen::ThetaP(i), Gen::X(j)]),
                            scaled(f.q_power(th), vec![Gen::X(j), Gen::ThetaP(i)]),
                        );
                        let d = if i == j { 1 } else { 0 };
                        rel(
                            format!("s{i} x{j} = q^(d_ij) x{j} s{i}"),
                            one(vec![Gen::Sigma(i), Gen::X(j)]),
                            scaled(f.q_power(d), vec![Gen::X(j), Gen::Sigma(i)]),
                        );
                        if i < j {
                            rel(
                                format!("x{i} x{j} = theta(e{i},e{j}) x{j} x{i}"),
                                one(vec![Gen::X(i), Gen::X(j)]),
                                scaled(f.q_power(th), vec![Gen::X(j), Gen::X(i)]),
                            );
                        }
                    }
                }
                if let Some(l) = self.root_l() {
                    for i in 1..=n {
                        rel(
                            format!("Th(e{i})^l = 1"),
                            one(vec![self.theta_gen(i, false); l as usize]),
                            one(vec![]),
                        );
                        rel(
                            format!("s{i}^l = 1"),
                            one(vec![Gen::Sigma(i); l as usize]),
                            one(vec![]),
                        );
                    }
                }
            }
            PresentationName::BraidedAq => {}
        }
        rels
    }

    /// The coproduct of a generator as a sum of pure tensors of words.
    pub fn coproduct(&self, g: &Gen) -> Vec<TensorTerm> {
        let f = &self.field;
        let grouplike = |g: &Gen| {
            vec![TensorTerm {
                coeff: f.one(),
                left: vec![g.clone()],
                right: vec![g.clone()],
            }]
        };
        match (self.name, g) {
            (_, Gen::ThetaP(_) | Gen::ThetaM(_) | Gen::Sigma(_) | Gen::SigmaInv(_)) => {
                grouplike(g)
            }
            (PresentationName::Dq(variant), Gen::Del(i)) => {
                // D(d_i) = d_i (x) s_i^{-+1} + Th(-e_i) s_i^{+-1} (x) d_i
                let (right1, mid) = match variant {
                    WeylVariant::Plus => (Gen::SigmaInv(*i), Gen::Sigma(*i)),
                    WeylVariant::Minus => (Gen::Sigma(*i), Gen::SigmaInv(*i)),
                };
                vec![
                    TensorTerm {
                        coeff: f.one(),
                        left: vec![Gen::Del(*i)],
                        right: vec![right1],
                    },
                    TensorTerm {
                        coeff: f.one(),
                        left: vec![Gen::ThetaM(*i), mid],
                        right: vec![Gen::Del(*i)],
                    },
                ]
            }
            (PresentationName::FrakAq, Gen::X(i)) => vec![
                TensorTerm {
                    coeff: f.one(),
                    left: vec![Gen::X(*i)],
                    right: vec![],
                },
                TensorTerm {
                    coeff: f.one(),
                    left: vec![Gen::ThetaP(*i)],
                    right: vec![Gen::X(*i)],
                },
            ],
            (PresentationName::FrakAq, Gen::Xl(i)) => vec![
                TensorTerm {
                    coeff: f.one(),
                    left: vec![Gen::Xl(*i)],
                    right: vec![],
                },
                TensorTerm {
                    coeff: f.one(),
                    left: vec![],
                    right: vec![Gen::Xl(*i)],
                },
            ],
            (PresentationName::FrakUq, Gen::X(i)) => vec![
                TensorTerm {
                    coeff: f.one(),
                    left: vec![Gen::X(*i)],
                    right: vec![Gen::Sigma(*i)],
                },
                TensorTerm {
                    coeff: f.one(),
                    left: vec![Gen::ThetaP(*i), Gen::SigmaInv(*i)],
                    right: vec![Gen::X(*i)],
                },
            ],
            _ => panic!("no coproduct rule for {g} in {}", self.name),
        }
    }

    pub fn counit(&self, g: &Gen) -> Scalar {
        match g {
            Gen::ThetaP(_) | Gen::ThetaM(_) | Gen::Sigma(_) | Gen::SigmaInv(_) => {
                self.field.one()
            }
            Gen::Del(_) | Gen::X(_) | Gen::Xl(_) => self.field.zero(),
        }
    }

    pub fn antipode(&self, g: &Gen) -> GenWord {
        let f = &self.field;
        match (self.name, g) {
            (_, Gen::ThetaP(i)) => GenWord::one(f, vec![Gen::ThetaM(*i)]),
            (_, Gen::ThetaM(i)) => GenWord::one(f, vec![Gen::ThetaP(*i)]),
            (_, Gen::Sigma(i)) => GenWord::one(f, vec![Gen::SigmaInv(*i)]),
            (_, Gen::SigmaInv(i)) => GenWord::one(f, vec![Gen::Sigma(*i)]),
            (PresentationName::Dq(variant), Gen::Del(i)) => {
                // S(d_i) = -q^{+-1} Th(e_i) d_i
                let e = match variant {
                    WeylVariant::Plus => 1,
                    WeylVariant::Minus => -1,
                };
                GenWord::new(-&f.q_power(e), vec![Gen::ThetaP(*i), Gen::Del(*i)])
            }
            (PresentationName::FrakAq, Gen::X(i)) => {
                GenWord::new(-&f.one(), vec![Gen::ThetaM(*i), Gen::X(*i)])
            }
            (PresentationName::FrakAq, Gen::Xl(i)) => {
                GenWord::new(-&f.one(), vec![Gen::Xl(*i)])
            }
            (PresentationName::FrakUq, Gen::X(i)) => {
                GenWord::new(-&f.q_power(1), vec![Gen::ThetaM(*i), Gen::X(*i)])
            }
            _ => panic!("no antipode rule for {g} in {}", self.name),
        }
    }

    /// Antipode of a word: anti-multiplicative extension.
    pub fn antipode_word(&self, gens: &[Gen]) -> GenWord {
        let mut coeff = self.field.one();
        let mut out = Vec::new();
        for g in gens.iter().rev() {
            let s = self.antipode(g);
            coeff = &coeff * &s.coeff;
            out.extend(s.gens);
        }
        GenWord::new(coeff, out)
    }

    /// Coproduct of a word: the product of the generator coproducts in the
    /// (untwisted) tensor algebra.
    pub fn coproduct_word(&self, gens: &[Gen]) -> Vec<TensorTerm> {
        let mut acc = vec![TensorTerm {
            coeff: self.field.one(),
            left: vec![],
            right: vec![],
        }];
        for g in gens {
            let dg = self.coproduct(g);
            let mut next = Vec::with_capacity(acc.len() * dg.len());
            for t in &acc {
                for u in &dg {
                    let mut left = t.left.clone();
                    left.extend(u.left.iter().cloned());
                    let mut right = t.right.clone();
                    right.extend(u.right.iter().cloned());
                    next.push(TensorTerm {
                        coeff: &t.coeff * &u.coeff,
                        left,
                        right,
                    });
                }
            }
            acc = next;
        }
        acc
    }
}

/// Evaluate a sum of tensor terms on a monomial pair.
fn apply_tensor(
    p: &HopfPresentation,
    terms: &[TensorTerm],
    coeff: &Scalar,
    beta: &MultiIndex,
    gamma: &MultiIndex,
    kind: AlgebraKind,
    acc: &mut BTreeMap<(MultiIndex, MultiIndex), Scalar>,
) {
    let xb = Element::monomial(kind, beta.clone(), p.field).unwrap();
    let xg = Element::monomial(kind, gamma.clone(), p.field).unwrap();
    for t in terms {
        let u = p.realize_word(&t.left).apply(&xb);
        let v = p.realize_word(&t.right).apply(&xg);
        for (bu, cu) in u.terms() {
            for (bv, cv) in v.terms() {
                let c = &(&(&t.coeff * cu) * cv) * coeff;
                let key = (bu.clone(), bv.clone());
                let entry = acc.remove(&key);
                let sum = match entry {
                    None => c,
                    Some(prev) => &prev + &c,
                };
                if !sum.is_zero() {
                    acc.insert(key, sum);
                }
            }
        }
    }
}

/// One axiom's verdict.
#[derive(Debug, Clone, serde::Serialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub ok: bool,
    pub counterexample: Option<String>,
}

/// The full report of [`verify_hopf`].
#[derive(Debug, Clone, serde::Serialize)]
pub struct HopfReport {
    pub presentation: String,
    pub results: Vec<AxiomResult>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.ok)
    }

    fn push(&mut self, axiom: impl Into<String>, counterexample: Option<String>) {
        let cx = counterexample;
        self.results.push(AxiomResult {
            axiom: axiom.into(),
            ok: cx.is_none(),
            counterexample: cx,
        });
    }
}

/// Verify the Hopf axioms of an (ordinary) presented quantum group in the
/// representation: defining relations hold; the coproduct preserves them;
/// coassociativity, counit, and antipode laws hold on generators. All checks
/// run on basis monomials / pairs / triples of total degree `<= degree_bound`.
pub fn verify_hopf(p: &HopfPresentation, degree_bound: i64) -> HopfReport {
    assert!(
        p.name != PresentationName::BraidedAq,
        "the braided structure is verified by the braided suite"
    );
    let kind = AlgebraKind::DividedPower;
    let mut report = HopfReport {
        presentation: p.name.to_string(),
        results: Vec::new(),
    };
    let basis = basis_monomials(kind, p.dim, degree_bound);

    // (0) defining relations hold as operators
    for r in p.relations() {
        let lhs = OpExpr::sum(r.lhs.iter().map(|w| p.realize_genword(w)).collect());
        let rhs = OpExpr::sum(r.rhs.iter().map(|w| p.realize_genword(w)).collect());
        let cx = crate::ops::ops_agree_on_monomials(&lhs, &rhs, kind, p.dim, &p.field, degree_bound);
        report.push(format!("relation: {}", r.label), cx);
    }

    // (1) the coproduct preserves every defining relation (checked on pairs)
    for r in p.relations() {
        let mut cx = None;
        'outer: for beta in &basis {
            for gamma in &basis {
                if beta.degree() + gamma.degree() > degree_bound {
                    continue;
                }
                let mut left = BTreeMap::new();
                let mut right = BTreeMap::new();
                for w in &r.lhs {
                    let terms = p.coproduct_word(&w.gens);
                    apply_tensor(p, &terms, &w.coeff, beta, gamma, kind, &mut left);
                }
                for w in &r.rhs {
                    let terms = p.coproduct_word(&w.gens);
                    apply_tensor(p, &terms, &w.coeff, beta, gamma, kind, &mut right);
                }
                if left != right {
                    cx = Some(format!("on (x{beta}, x{gamma})"));
                    break 'outer;
                }
            }
        }
        report.push(format!("coproduct preserves: {}", r.label), cx);
    }

    // (2) coassociativity on generators, evaluated on triples
    for g in p.generators() {
        let d = p.coproduct(&g);
        let mut cx = None;
        'outer: for beta in &basis {
            for gamma in &basis {
                if beta.degree() + gamma.degree() > degree_bound {
                    continue;
                }
                for delta in &basis {
                    if beta.degree() + gamma.degree() + delta.degree() > degree_bound {
                        continue;
                    }
                    let mut lhs: BTreeMap<(MultiIndex, MultiIndex, MultiIndex), Scalar> =
                        BTreeMap::new();
                    let mut rhs = lhs.clone();
                    let xb = Element::monomial(kind, beta.clone(), p.field).unwrap();
                    let xg = Element::monomial(kind, gamma.clone(), p.field).unwrap();
                    let xd = Element::monomial(kind, delta.clone(), p.field).unwrap();
                    for t in &d {
                        // (D (x) id): expand D(left) on (beta, gamma), keep right on delta
                        for u in p.coproduct_word(&t.left) {
                            let a = p.realize_word(&u.left).apply(&xb);
                            let b = p.realize_word(&u.right).apply(&xg);
                            let c = p.realize_word(&t.right).apply(&xd);
                            accumulate3(&mut lhs, &a, &b, &c, &(&t.coeff * &u.coeff));
                        }
                        // (id (x) D)
                        for u in p.coproduct_word(&t.right) {
                            let a = p.realize_word(&t.left).apply(&xb);
                            let b = p.realize_word(&u.left).apply(&xg);
                            let c = p.realize_word(&u.right).apply(&xd);
                            accumulate3(&mut rhs, &a, &b, &c, &(&t.coeff * &u.coeff));
                        }
                    }
                    if lhs != rhs {
                        cx = Some(format!("on (x{beta}, x{gamma}, x{delta})"));
                        break 'outer;
                    }
                }
            }
        }
        report.push(format!("coassociativity on {g}"), cx);
    }

    // (3) counit law and (4) antipode law on generators
    for g in p.generators() {
        let d = p.coproduct(&g);
        let realized = p.realize_word(std::slice::from_ref(&g));

        // (eps (x) id) D(g) = g = (id (x) eps) D(g)
        let counit_left = OpExpr::sum(
            d.iter()
                .map(|t| {
                    let eps: Scalar = t
                        .left
                        .iter()
                        .fold(p.field.one(), |acc, h| &acc * &p.counit(h));
                    OpExpr::scale(&eps * &t.coeff, p.realize_word(&t.right))
                })
                .collect(),
        );
        let counit_right = OpExpr::sum(
            d.iter()
                .map(|t| {
                    let eps: Scalar = t
                        .right
                        .iter()
                        .fold(p.field.one(), |acc, h| &acc * &p.counit(h));
                    OpExpr::scale(&eps * &t.coeff, p.realize_word(&t.left))
                })
                .collect(),
        );
        let cx1 = crate::ops::ops_agree_on_monomials(
            &counit_left,
            &realized,
            kind,
            p.dim,
            &p.field,
            degree_bound,
        );
        let cx2 = crate::ops::ops_agree_on_monomials(
            &counit_right,
            &realized,
            kind,
            p.dim,
            &p.field,
            degree_bound,
        );
        report.push(format!("counit law on {g}"), cx1.or(cx2));

        // m (S (x) id) D(g) = eps(g) 1 = m (id (x) S) D(g)
        let eps_g = p.counit(&g);
        let target = OpExpr::scale(eps_g.clone(), OpExpr::Identity);
        let s_left = OpExpr::sum(
            d.iter()
                .map(|t| {
                    let sw = p.antipode_word(&t.left);
                    OpExpr::scale(
                        &t.coeff * &sw.coeff,
                        OpExpr::compose(
                            p.realize_word(&sw.gens),
                            p.realize_word(&t.right),
                        ),
                    )
                })
                .collect(),
        );
        let s_right = OpExpr::sum(
            d.iter()
                .map(|t| {
                    let sw = p.antipode_word(&t.right);
                    OpExpr::scale(
                        &t.coeff * &sw.coeff,
                        OpExpr::compose(
                            p.realize_word(&t.left),
                            p.realize_word(&sw.gens),
                        ),
                    )
                })
                .collect(),
        );
        let cx1 = crate::ops::ops_agree_on_monomials(
            &s_left,
            &target,
            kind,
            p.dim,
            &p.field,
            degree_bound,
        );
        let cx2 = crate::ops::ops_agree_on_monomials(
            &s_right,
            &target,
            kind,
            p.dim,
            &p.field,
            degree_bound,
        );
        report.push(format!("antipode law on {g}"), cx1.or(cx2));
    }

    report
}

fn accumulate3(
    acc: &mut BTreeMap<(MultiIndex, MultiIndex, MultiIndex), Scalar>,
    a: &Element,
    b: &Element,
    c: &Element,
    coeff: &Scalar,
) {
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            for (kc, cc) in c.terms() {
                let v = &(&(&(ca * cb) * cc) * coeff) * &a.field().one();
                let key = (ka.clone(), kb.clone(), kc.clone());
                let sum = match acc.remove(&key) {
                    None => v,
                    Some(prev) => &prev + &v,
                };
                if !sum.is_zero() {
                    acc.insert(key, sum);
                }
            }
        }
    }
}

/// The closed-form q-binomial expansion of `D(x_i^m)` in the quantum n-space
/// group: `sum_k [m choose k] x_i^{m-k} Th(e_i)^k s_i^{-k} (x) x_i^k s_i^{m-k}`.
pub fn qbinomial_coproduct_expansion(
    p: &HopfPresentation,
    i: usize,
    m: i64,
) -> Vec<TensorTerm> {
    assert_eq!(p.name, PresentationName::FrakUq);
    let mut out = Vec::new();
    for k in 0..=m {
        let mut left = Vec::new();
        for _ in 0..(m - k) {
            left.push(Gen::X(i));
        }
        for _ in 0..k {
            left.push(Gen::ThetaP(i));
        }
        for _ in 0..k {
            left.push(Gen::SigmaInv(i));
        }
        let mut right = Vec::new();
        for _ in 0..k {
            right.push(Gen::X(i));
        }
        for _ in 0..(m - k) {
            right.push(Gen::Sigma(i));
        }
        out.push(TensorTerm {
            coeff: qbinom(m, k, &p.field),
            left,
            right,
        });
    }
    out
}

/// Compare two tensor-term sums as operators on pairs up to a degree bound.
pub fn tensor_sums_agree(
    p: &HopfPresentation,
    lhs: &[TensorTerm],
    rhs: &[TensorTerm],
    degree_bound: i64,
) -> Option<String> {
    let kind = AlgebraKind::DividedPower;
    let basis = basis_monomials(kind, p.dim, degree_bound);
    let one = p.field.one();
    for beta in &basis {
        for gamma in &basis {
            if beta.degree() + gamma.degree() > degree_bound {
                continue;
            }
            let mut a = BTreeMap::new();
            let mut b = BTreeMap::new();
            apply_tensor(p, lhs, &one, beta, gamma, kind, &mut a);
            apply_tensor(p, rhs, &one, beta, gamma, kind, &mut b);
            if a != b {
                return Some(format!("on (x{beta}, x{gamma})"));
            }
        }
    }
    None
}

/// `D(x_i)^m` by tensor multiplication, as tensor terms.
pub fn coproduct_power(p: &HopfPresentation, i: usize, m: i64) -> Vec<TensorTerm> {
    let word = vec![Gen::X(i); m as usize];
    p.coproduct_word(&word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> ScalarField {
        ScalarField::Generic
    }

    #[test]
    fn dq_plus_passes_small() {
        let p = HopfPresentation::new(PresentationName::Dq(WeylVariant::Plus), 2, g());
        let report = verify_hopf(&p, 3);
        for r in &report.results {
            assert!(r.ok, "failed: {} ({:?})", r.axiom, r.counterexample);
        }
    }

    #[test]
    fn dq_minus_passes_small() {
        let p = HopfPresentation::new(PresentationName::Dq(WeylVariant::Minus), 2, g());
        assert!(verify_hopf(&p, 3).passed());
    }

    #[test]
    fn frak_aq_and_uq_pass_small() {
        for name in [PresentationName::FrakAq, PresentationName::FrakUq] {
            let p = HopfPresentation::new(name, 2, g());
            let report = verify_hopf(&p, 3);
            for r in &report.results {
                assert!(r.ok, "{name}: failed {} ({:?})", r.axiom, r.counterexample);
            }
        }
    }

    #[test]
    fn antipode_convolution_identity_for_del() {
        // m (1 (x) S) D(d_i) = d_i s_i - q s_i d_i = 0 in the representation.
        let f = g();
        let p = HopfPresentation::new(PresentationName::Dq(WeylVariant::Plus), 2, f);
        let lhs = OpExpr::sum(vec![
            OpExpr::compose(
                OpExpr::prim(PrimOp::del(1)),
                OpExpr::prim(PrimOp::sigma(1)),
            ),
            OpExpr::scale(
                -&f.q_power(1),
                OpExpr::compose(
                    OpExpr::prim(PrimOp::sigma(1)),
                    OpExpr::prim(PrimOp::del(1)),
                ),
            ),
        ]);
        let zero = OpExpr::sum(vec![]);
        assert!(crate::ops::ops_agree_on_monomials(
            &lhs,
            &zero,
            AlgebraKind::DividedPower,
            2,
            &p.field,
            6
        )
        .is_none());
    }

    #[test]
    fn qbinomial_expansion_matches_power() {
        let p = HopfPresentation::new(PresentationName::FrakUq, 2, g());
        for m in 1..=3 {
            let lhs = coproduct_power(&p, 1, m);
            let rhs = qbinomial_coproduct_expansion(&p, 1, m);
            assert!(tensor_sums_agree(&p, &lhs, &rhs, 4).is_none(), "m={m}");
        }
    }

    #[test]
    fn lth_power_coproduct_collapses_at_odd_roots() {
        let f = ScalarField::root_of_unity(3).unwrap();
        let p = HopfPresentation::new(PresentationName::FrakUq, 2, f);
        let rhs = qbinomial_coproduct_expansion(&p, 1, 3);
        // {3 k} = 0 for 0 < k < 3, so only two terms survive
        let surviving: Vec<_> = rhs.iter().filter(|t| !t.coeff.is_zero()).collect();
        assert_eq!(surviving.len(), 2);
        // and they are x^l (x) 1 and 1 (x) x^l up to sigma/theta powers that
        // act trivially at q^3 = 1
        let lhs = coproduct_power(&p, 1, 3);
        let two_term = vec![
            TensorTerm {
                coeff: f.one(),
                left: vec![Gen::X(1); 3],
                right: vec![],
            },
            TensorTerm {
                coeff: f.one(),
                left: vec![],
                right: vec![Gen::X(1); 3],
            },
        ];
        assert!(tensor_sums_agree(&p, &lhs, &two_term, 4).is_none());
    }
}
