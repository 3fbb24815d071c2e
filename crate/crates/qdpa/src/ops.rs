//! Primitive operators on the divided power algebra and expressions built
//! from them.
//!
//! The primitives act on basis monomials by
//! - `sigma_i^{+-1}: x^(b) -> q^{+-b_i} x^(b)`
//! - `del_i: x^(b) -> q^{-eps_i*b} x^(b - eps_i)` (zero when `b_i = 0`)
//! - `Theta(a): x^(b) -> theta(a, b) x^(b)`
//! - `MulBy(a): x^(b) -> x^(a) x^(b)` (left multiplication)
//!
//! so every primitive sends a basis monomial to a scalar multiple of a basis
//! monomial, and [`OpExpr`] closes them under composition, sums, and scalar
//! multiples, acting linearly.

use std::fmt;

use crate::error::{Error, Result};
use crate::galg::{monomial_mul, AlgebraKind, Element};
use crate::lattice::{monomials_up_to_degree, theta_exponent, MultiIndex};
use crate::qarith::{Scalar, ScalarField};

/// A primitive operator. Axes are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimOp {
    Sigma { axis: usize, inverse: bool },
    Del { axis: usize },
    Theta(MultiIndex),
    MulBy(MultiIndex),
}

impl PrimOp {
    pub fn sigma(axis: usize) -> Self {
        PrimOp::Sigma {
            axis,
            inverse: false,
        }
    }

    pub fn sigma_inv(axis: usize) -> Self {
        PrimOp::Sigma {
            axis,
            inverse: true,
        }
    }

    pub fn del(axis: usize) -> Self {
        PrimOp::Del { axis }
    }

    /// `x_i` as a multiplication operator.
    pub fn x(dim: usize, axis: usize) -> Self {
        PrimOp::MulBy(MultiIndex::unit(dim, axis))
    }

    pub fn theta_unit(dim: usize, axis: usize, negative: bool) -> Self {
        let e = MultiIndex::unit(dim, axis);
        PrimOp::Theta(if negative { -&e } else { e })
    }

    pub fn validate(&self, dim: usize, kind: AlgebraKind) -> Result<()> {
        let check_axis = |axis: usize| {
            if 1 <= axis && axis <= dim {
                Ok(())
            } else {
                Err(Error::AxisOutOfRange { axis, dim })
            }
        };
        match self {
            PrimOp::Sigma { axis, .. } => check_axis(*axis),
            PrimOp::Del { axis } => {
                check_axis(*axis)?;
                if kind == AlgebraKind::Exterior {
                    return Err(Error::UnsupportedKind(
                        "q-derivatives act on the divided power algebras, not the exterior one"
                            .into(),
                    ));
                }
                Ok(())
            }
            PrimOp::Theta(a) => {
                if a.dim() == dim {
                    Ok(())
                } else {
                    Err(Error::DimensionMismatch(a.dim(), dim))
                }
            }
            PrimOp::MulBy(a) => {
                if a.dim() != dim {
                    return Err(Error::DimensionMismatch(a.dim(), dim));
                }
                if !kind.admits(a) {
                    return Err(Error::ExponentOutOfRange {
                        kind: kind.to_string(),
                        detail: a.to_string(),
                    });
                }
                Ok(())
            }
        }
    }

    /// Action on one basis monomial with coefficient `c`: the image is at
    /// most one scalar multiple of a monomial.
    pub fn apply_monomial(
        &self,
        beta: &MultiIndex,
        c: &Scalar,
        kind: AlgebraKind,
        field: &ScalarField,
    ) -> Option<(MultiIndex, Scalar)> {
        match self {
            PrimOp::Sigma { axis, inverse } => {
                let e = if *inverse {
                    -beta.get(*axis)
                } else {
                    beta.get(*axis)
                };
                Some((beta.clone(), c * &field.q_power(e)))
            }
            PrimOp::Del { axis } => {
                if beta.get(*axis) == 0 {
                    return None;
                }
                let prefix: i64 = beta.entries()[..*axis - 1].iter().sum();
                let mut out = beta.clone();
                out.set(*axis, beta.get(*axis) - 1);
                Some((out, c * &field.q_power(-prefix)))
            }
            PrimOp::Theta(a) => Some((
                beta.clone(),
                c * &field.q_power(theta_exponent(a, beta)),
            )),
            PrimOp::MulBy(a) => {
                let (gamma, s) = monomial_mul(kind, field, a, beta)?;
                Some((gamma, c * &s))
            }
        }
    }
}

impl fmt::Display for PrimOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimOp::Sigma { axis, inverse } => {
                if *inverse {
                    write!(f, "s{axis}^-1")
                } else {
                    write!(f, "s{axis}")
                }
            }
            PrimOp::Del { axis } => write!(f, "d{axis}"),
            PrimOp::Theta(a) => write!(f, "th{a}"),
            PrimOp::MulBy(a) => write!(f, "mul x{a}"),
        }
    }
}

/// An operator expression: primitives closed under composition, sums, and
/// scalar multiples. `compose(a, b)` applies `b` first.
#[derive(Debug, Clone, PartialEq)]
pub enum OpExpr {
    Identity,
    Prim(PrimOp),
    Compose(Box<OpExpr>, Box<OpExpr>),
    Sum(Vec<OpExpr>),
    Scale(Scalar, Box<OpExpr>),
}

impl OpExpr {
    pub fn prim(p: PrimOp) -> Self {
        OpExpr::Prim(p)
    }

    /// `a . b`: apply `b` first, then `a`.
    pub fn compose(a: OpExpr, b: OpExpr) -> Self {
        match (a, b) {
            (OpExpr::Identity, x) | (x, OpExpr::Identity) => x,
            (a, b) => OpExpr::Compose(Box::new(a), Box::new(b)),
        }
    }

    /// Composition of a slice in mathematical order: `word[0]` is applied last.
    pub fn word(prims: &[PrimOp]) -> Self {
        prims
            .iter()
            .rev()
            .fold(OpExpr::Identity, |acc, p| {
                OpExpr::compose(OpExpr::Prim(p.clone()), acc)
            })
    }

    /// A sum of operators; the empty sum is the zero operator.
    pub fn sum(terms: Vec<OpExpr>) -> Self {
        match terms.len() {
            1 => terms.into_iter().next().unwrap(),
            _ => OpExpr::Sum(terms),
        }
    }

    pub fn scale(c: Scalar, inner: OpExpr) -> Self {
        OpExpr::Scale(c, Box::new(inner))
    }

    /// Apply to an element, linearly.
    pub fn apply(&self, a: &Element) -> Element {
        match self {
            OpExpr::Identity => a.clone(),
            OpExpr::Prim(p) => {
                let mut out = Element::zero(a.kind(), a.dim(), a.field());
                for (beta, c) in a.terms() {
                    if let Some((gamma, s)) =
                        p.apply_monomial(beta, c, a.kind(), &a.field())
                    {
                        out.add_term(gamma, s);
                    }
                }
                out
            }
            OpExpr::Compose(f, g) => f.apply(&g.apply(a)),
            OpExpr::Sum(terms) => {
                let mut out = Element::zero(a.kind(), a.dim(), a.field());
                for t in terms {
                    out = out.add(&t.apply(a));
                }
                out
            }
            OpExpr::Scale(c, inner) => inner.apply(a).scale(c),
        }
    }

    pub fn validate(&self, dim: usize, kind: AlgebraKind) -> Result<()> {
        match self {
            OpExpr::Identity => Ok(()),
            OpExpr::Prim(p) => p.validate(dim, kind),
            OpExpr::Compose(f, g) => {
                f.validate(dim, kind)?;
                g.validate(dim, kind)
            }
            OpExpr::Sum(terms) => terms.iter().try_for_each(|t| t.validate(dim, kind)),
            OpExpr::Scale(_, inner) => inner.validate(dim, kind),
        }
    }
}

/// Compose a sequence left-to-right in application order: `ops[0]` applied
/// first. (The reverse of [`OpExpr::word`]'s convention.)
pub fn pipeline(ops: &[OpExpr]) -> OpExpr {
    ops.iter()
        .fold(OpExpr::Identity, |acc, op| OpExpr::compose(op.clone(), acc))
}

/// Check that two operators act identically on every basis monomial of the
/// kind up to the degree bound (for the restricted kind, its whole basis).
/// Returns a counterexample description, or `None` when they agree.
pub fn ops_agree_on_monomials(
    lhs: &OpExpr,
    rhs: &OpExpr,
    kind: AlgebraKind,
    dim: usize,
    field: &ScalarField,
    degree_bound: i64,
) -> Option<String> {
    for beta in basis_monomials(kind, dim, degree_bound) {
        let x = Element::monomial(kind, beta.clone(), *field).unwrap();
        let a = lhs.apply(&x);
        let b = rhs.apply(&x);
        if a != b {
            return Some(format!("on x{beta}: {a} vs {b}"));
        }
    }
    None
}

/// The test basis: all monomials of the kind with degree `<= bound`; the
/// restricted kind caps entries at `l - 1` (so a large bound walks its whole
/// `l^n`-dimensional basis).
pub fn basis_monomials(kind: AlgebraKind, dim: usize, bound: i64) -> Vec<MultiIndex> {
    monomials_up_to_degree(dim, bound, kind.max_entry())
}

/// Check the twisted Leibniz rule
/// `d(a b) = sigma_left(a) d(b) + d(a) tau_right(b)`
/// on all basis monomial pairs with `|beta| + |gamma| <= degree_bound`.
/// Returns a counterexample description, or `None` when the rule holds.
pub fn check_twisted_derivation(
    d: &OpExpr,
    sigma_left: &OpExpr,
    tau_right: &OpExpr,
    kind: AlgebraKind,
    dim: usize,
    field: &ScalarField,
    degree_bound: i64,
) -> Option<String> {
    let basis = basis_monomials(kind, dim, degree_bound);
    for beta in &basis {
        for gamma in &basis {
            if beta.degree() + gamma.degree() > degree_bound {
                continue;
            }
            let a = Element::monomial(kind, beta.clone(), *field).unwrap();
            let b = Element::monomial(kind, gamma.clone(), *field).unwrap();
            let lhs = d.apply(&a.mul(&b));
            let rhs = sigma_left.apply(&a).mul(&d.apply(&b)).add(
                &d.apply(&a).mul(&tau_right.apply(&b)),
            );
            if lhs != rhs {
                return Some(format!("on (x{beta}, x{gamma}): {lhs} vs {rhs}"));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::qint;

    fn g() -> ScalarField {
        ScalarField::Generic
    }

    fn dp(v: &[i64], f: &ScalarField) -> Element {
        Element::monomial(AlgebraKind::DividedPower, MultiIndex::new(v.to_vec()), *f).unwrap()
    }

    #[test]
    fn primitive_actions() {
        let f = g();
        let x = dp(&[2, 1], &f);
        // sigma_1 scales by q^{beta_1}
        let s1 = OpExpr::prim(PrimOp::sigma(1));
        assert_eq!(s1.apply(&x), x.scale(&f.q_power(2)));
        // del_2 : q^{-beta_1} x^{(2,0)}
        let d2 = OpExpr::prim(PrimOp::del(2));
        assert_eq!(d2.apply(&x), dp(&[2, 0], &f).scale(&f.q_power(-2)));
        // underflow annihilates
        let d1 = OpExpr::prim(PrimOp::del(1));
        assert!(d1.apply(&dp(&[0, 1], &f)).is_zero());
        // Theta(-alpha_1) = sigma_1 sigma_2 as operators
        let th = OpExpr::prim(PrimOp::Theta(-&MultiIndex::simple_root(2, 1)));
        let ss = OpExpr::compose(
            OpExpr::prim(PrimOp::sigma(1)),
            OpExpr::prim(PrimOp::sigma(2)),
        );
        assert!(ops_agree_on_monomials(&th, &ss, AlgebraKind::DividedPower, 2, &f, 6).is_none());
    }

    #[test]
    fn linearity_and_composition() {
        let f = g();
        let a = dp(&[1, 0], &f);
        let b = dp(&[0, 2], &f);
        let combo = a.add(&b.scale(&qint(3, &f)));
        let op = OpExpr::compose(
            OpExpr::prim(PrimOp::del(2)),
            OpExpr::prim(PrimOp::sigma(1)),
        );
        let lhs = op.apply(&combo);
        let rhs = op.apply(&a).add(&op.apply(&b).scale(&qint(3, &f)));
        assert_eq!(lhs, rhs);
        // word() puts the rightmost primitive first
        let w = OpExpr::word(&[PrimOp::x(2, 1), PrimOp::del(2), PrimOp::sigma(1)]);
        let y = dp(&[3, 1], &f);
        let step = OpExpr::prim(PrimOp::sigma(1)).apply(&y);
        let step = OpExpr::prim(PrimOp::del(2)).apply(&step);
        let step = OpExpr::prim(PrimOp::x(2, 1)).apply(&step);
        assert_eq!(w.apply(&y), step);
    }

    #[test]
    fn twisted_derivation_signs() {
        let f = g();
        let dim = 2;
        for i in 1..=dim {
            let d = OpExpr::prim(PrimOp::del(i));
            // (Theta(-eps_i) sigma_i, sigma_i^{-1})-derivation
            let sl = OpExpr::compose(
                OpExpr::prim(PrimOp::theta_unit(dim, i, true)),
                OpExpr::prim(PrimOp::sigma(i)),
            );
            let tr = OpExpr::prim(PrimOp::sigma_inv(i));
            assert!(check_twisted_derivation(
                &d,
                &sl,
                &tr,
                AlgebraKind::DividedPower,
                dim,
                &f,
                6
            )
            .is_none());
            // the other sign choice
            let sl2 = OpExpr::compose(
                OpExpr::prim(PrimOp::theta_unit(dim, i, true)),
                OpExpr::prim(PrimOp::sigma_inv(i)),
            );
            let tr2 = OpExpr::prim(PrimOp::sigma(i));
            assert!(check_twisted_derivation(
                &d,
                &sl2,
                &tr2,
                AlgebraKind::DividedPower,
                dim,
                &f,
                6
            )
            .is_none());
            // untwisted Leibniz fails for generic q
            assert!(check_twisted_derivation(
                &d,
                &OpExpr::Identity,
                &OpExpr::Identity,
                AlgebraKind::DividedPower,
                dim,
                &f,
                4
            )
            .is_some());
        }
    }

    #[test]
    fn composite_twisted_derivation() {
        // x^(alpha) del_i is a (Theta(alpha - eps_i) sigma_i^{+-1}, sigma_i^{-+1})-derivation
        let f = g();
        let dim = 2;
        for alpha in [MultiIndex::new(vec![1, 0]), MultiIndex::new(vec![1, 1])] {
            for i in 1..=dim {
                let d = OpExpr::compose(
                    OpExpr::prim(PrimOp::MulBy(alpha.clone())),
                    OpExpr::prim(PrimOp::del(i)),
                );
                let shift = &alpha - &MultiIndex::unit(dim, i);
                let sl = OpExpr::compose(
                    OpExpr::prim(PrimOp::Theta(shift)),
                    OpExpr::prim(PrimOp::sigma(i)),
                );
                let tr = OpExpr::prim(PrimOp::sigma_inv(i));
                assert!(check_twisted_derivation(
                    &d,
                    &sl,
                    &tr,
                    AlgebraKind::DividedPower,
                    dim,
                    &f,
                    5
                )
                .is_none());
            }
        }
    }

    #[test]
    fn validation() {
        let f = g();
        let _ = f;
        assert!(PrimOp::del(3).validate(2, AlgebraKind::DividedPower).is_err());
        assert!(PrimOp::del(1).validate(2, AlgebraKind::Exterior).is_err());
        assert!(PrimOp::sigma(1).validate(2, AlgebraKind::Exterior).is_ok());
        assert!(PrimOp::MulBy(MultiIndex::new(vec![2, 0]))
            .validate(2, AlgebraKind::Exterior)
            .is_err());
    }
}
