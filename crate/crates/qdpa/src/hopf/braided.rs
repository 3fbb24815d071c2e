//! The braided Hopf structure on the divided power algebra.
//!
//! The tensor square `A_q (x) A_q` multiplies through the braiding
//! `psi(b (x) c) = theta(deg b, deg c) c (x) b`, so
//! `(a (x) b)(c (x) d) = theta(deg b, deg c) ac (x) bd` on homogeneous legs.
//! The coproduct is the algebra map with `D(x_i) = x_i (x) 1 + 1 (x) x_i`,
//! the counit kills positive degree, and the antipode is `S(x_i) = -x_i`
//! extended braided-anti-multiplicatively:
//! `S(ab) = theta(deg a, deg b) S(b) S(a)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::galg::{AlgebraKind, Element};
use crate::lattice::{theta_exponent, MultiIndex};
use crate::qarith::{qint, Scalar, ScalarField};

/// An element of `A_q (x) A_q`: finitely supported map on monomial pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct BraidedTensorElement {
    kind: AlgebraKind,
    field: ScalarField,
    dim: usize,
    terms: BTreeMap<(MultiIndex, MultiIndex), Scalar>,
}

impl BraidedTensorElement {
    pub fn zero(kind: AlgebraKind, dim: usize, field: ScalarField) -> Self {
        BraidedTensorElement {
            kind,
            field,
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// `1 (x) 1`.
    pub fn unit(kind: AlgebraKind, dim: usize, field: ScalarField) -> Self {
        let mut out = Self::zero(kind, dim, field);
        out.add_term(
            (MultiIndex::zero(dim), MultiIndex::zero(dim)),
            field.one(),
        );
        out
    }

    /// The outer product `a (x) b`.
    pub fn pure(a: &Element, b: &Element) -> Self {
        assert_eq!(a.kind(), b.kind());
        assert_eq!(a.field(), b.field());
        assert_eq!(a.dim(), b.dim());
        let mut out = Self::zero(a.kind(), a.dim(), a.field());
        for (alpha, ca) in a.terms() {
            for (beta, cb) in b.terms() {
                out.add_term((alpha.clone(), beta.clone()), ca * cb);
            }
        }
        out
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(MultiIndex, MultiIndex), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &MultiIndex, right: &MultiIndex) -> Scalar {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&mut self, key: (MultiIndex, MultiIndex), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &BraidedTensorElement) -> BraidedTensorElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> BraidedTensorElement {
        let mut out = Self::zero(self.kind, self.dim, self.field);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    /// The braided product.
    pub fn braided_mul(&self, other: &BraidedTensorElement) -> BraidedTensorElement {
        assert_eq!(self.kind, other.kind, "kind mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = Self::zero(self.kind, self.dim, self.field);
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let twist = self.field.q_power(theta_exponent(b, c));
                let Some((ac, s1)) = crate::galg::monomial_mul(self.kind, &self.field, a, c)
                else {
                    continue;
                };
                let Some((bd, s2)) = crate::galg::monomial_mul(self.kind, &self.field, b, d)
                else {
                    continue;
                };
                let coeff = &(&(&twist * &s1) * &s2) * &(c1 * c2);
                out.add_term((ac, bd), coeff);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> BraidedTensorElement {
        let mut acc = Self::unit(self.kind, self.dim, self.field);
        for _ in 0..n {
            acc = acc.braided_mul(self);
        }
        acc
    }

    /// The multiplication map `m: a (x) b -> ab` back into the algebra.
    pub fn multiply_out(&self) -> Element {
        let mut out = Element::zero(self.kind, self.dim, self.field);
        for ((a, b), c) in &self.terms {
            if let Some((ab, s)) = crate::galg::monomial_mul(self.kind, &self.field, a, b) {
                out.add_term(ab, &s * c);
            }
        }
        out
    }

    /// The braiding `psi(a (x) b) = theta(deg a, deg b) b (x) a`.
    pub fn braiding(&self) -> BraidedTensorElement {
        let mut out = Self::zero(self.kind, self.dim, self.field);
        for ((a, b), c) in &self.terms {
            let twist = self.field.q_power(theta_exponent(a, b));
            out.add_term((b.clone(), a.clone()), &twist * c);
        }
        out
    }
}

/// Whether the braided coproduct is available: generic mode always; at a
/// root of unity only degree <= 1 (the generator coproducts need no
/// division, everything higher does, and the scalar field has
/// characteristic zero).
fn coproduct_supported(a: &Element) -> Result<()> {
    if a.field().is_generic() {
        return Ok(());
    }
    if a.terms().all(|(alpha, _)| alpha.degree() <= 1) {
        return Ok(());
    }
    Err(Error::UnsupportedField(
        "braided coproduct beyond degree 1 needs invertible q-factorials (generic mode)".into(),
    ))
}

/// The braided coproduct, computed on a monomial by expanding the product of
/// generator coproducts and dividing by `[alpha]!`.
pub fn braided_coproduct(a: &Element) -> Result<BraidedTensorElement> {
    coproduct_supported(a)?;
    let (kind, dim, field) = (a.kind(), a.dim(), a.field());
    let mut out = BraidedTensorElement::zero(kind, dim, field);
    for (alpha, c) in a.terms() {
        let mut acc = BraidedTensorElement::unit(kind, dim, field);
        let mut fact = field.one();
        for i in 1..=dim {
            let xi = Element::generator(kind, dim, i, field).unwrap();
            let unit = Element::unit(kind, dim, field);
            let dxi = BraidedTensorElement::pure(&xi, &unit)
                .add(&BraidedTensorElement::pure(&unit, &xi));
            for _ in 0..alpha.get(i) {
                acc = acc.braided_mul(&dxi);
            }
            for k in 1..=alpha.get(i) {
                fact = &fact * &qint(k, &field);
            }
        }
        let scaled = acc.scale(&(c / &fact));
        out = out.add(&scaled);
    }
    Ok(out)
}

/// The braided antipode: `S(x_i) = -x_i`, extended anti-multiplicatively
/// with the bicharacter twist, linearly on elements.
pub fn braided_antipode(a: &Element) -> Element {
    let (kind, dim, field) = (a.kind(), a.dim(), a.field());
    let mut out = Element::zero(kind, dim, field);
    for (alpha, c) in a.terms() {
        let s = antipode_monomial(kind, dim, &field, alpha);
        out = out.add(&s.scale(c));
    }
    out
}

fn antipode_monomial(
    kind: AlgebraKind,
    dim: usize,
    field: &ScalarField,
    alpha: &MultiIndex,
) -> Element {
    if alpha.is_zero() {
        return Element::unit(kind, dim, *field);
    }
    // first nonzero axis: x^(alpha) = (1/[alpha_i]) x_i x^(alpha - eps_i)
    // (the star factor vanishes because all earlier entries are zero)
    let i = (1..=dim).find(|&i| alpha.get(i) != 0).unwrap();
    let ei = MultiIndex::unit(dim, i);
    let rest = alpha - &ei;
    let c = qint(alpha.get(i), field);
    let twist = field.q_power(theta_exponent(&ei, &rest));
    let s_rest = antipode_monomial(kind, dim, field, &rest);
    let s_xi = Element::generator(kind, dim, i, *field).unwrap().neg();
    s_rest.mul(&s_xi).scale(&(&twist / &c))
}

/// Three-fold tensors, used for coassociativity checks.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3 {
    pub terms: BTreeMap<(MultiIndex, MultiIndex, MultiIndex), Scalar>,
}

impl Tensor3 {
    pub fn zero() -> Self {
        Tensor3 {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, key: (MultiIndex, MultiIndex, MultiIndex), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}

/// `(D (x) id) D(a)` and `(id (x) D) D(a)` as three-fold tensors.
pub fn coassociativity_sides(a: &Element) -> Result<(Tensor3, Tensor3)> {
    let d = braided_coproduct(a)?;
    let (kind, field) = (a.kind(), a.field());
    let mut lhs = Tensor3::zero();
    let mut rhs = Tensor3::zero();
    for ((u, v), c) in d.terms() {
        let du = braided_coproduct(&Element::monomial(kind, u.clone(), field).unwrap())?;
        for ((u1, u2), cu) in du.terms() {
            lhs.add_term((u1.clone(), u2.clone(), v.clone()), &(c * cu) * &field.one());
        }
        let dv = braided_coproduct(&Element::monomial(kind, v.clone(), field).unwrap())?;
        for ((v1, v2), cv) in dv.terms() {
            rhs.add_term((u.clone(), v1.clone(), v2.clone()), &(c * cv) * &field.one());
        }
    }
    Ok((lhs, rhs))
}

/// The counit: the coefficient of the unit monomial.
pub fn counit(a: &Element) -> Scalar {
    a.coeff(&MultiIndex::zero(a.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> ScalarField {
        ScalarField::Generic
    }

    fn dp(v: &[i64]) -> Element {
        Element::monomial(AlgebraKind::DividedPower, MultiIndex::new(v.to_vec()), g()).unwrap()
    }

    fn mi(v: &[i64]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn braided_mul_examples() {
        let f = g();
        let unit = Element::unit(AlgebraKind::DividedPower, 2, f);
        let x1 = dp(&[1, 0]);
        let x2 = dp(&[0, 1]);
        // (x1 (x) 1)(1 (x) x1) = x1 (x) x1
        let lhs = BraidedTensorElement::pure(&x1, &unit)
            .braided_mul(&BraidedTensorElement::pure(&unit, &x1));
        assert_eq!(lhs, BraidedTensorElement::pure(&x1, &x1));
        // (1 (x) x1)(x2 (x) 1) = q^{-1} x2 (x) x1
        let lhs = BraidedTensorElement::pure(&unit, &x1)
            .braided_mul(&BraidedTensorElement::pure(&x2, &unit));
        assert_eq!(
            lhs,
            BraidedTensorElement::pure(&x2, &x1).scale(&f.q_power(-1))
        );
        // unit is a unit
        let e = BraidedTensorElement::pure(&x1, &x2).scale(&qint(3, &f));
        let one = BraidedTensorElement::unit(AlgebraKind::DividedPower, 2, f);
        assert_eq!(one.braided_mul(&e), e);
        assert_eq!(e.braided_mul(&one), e);
    }

    #[test]
    fn coproduct_on_generators_and_unit() {
        let f = g();
        let x1 = dp(&[1, 0]);
        let unit = Element::unit(AlgebraKind::DividedPower, 2, f);
        let d = braided_coproduct(&x1).unwrap();
        let expect = BraidedTensorElement::pure(&x1, &unit)
            .add(&BraidedTensorElement::pure(&unit, &x1));
        assert_eq!(d, expect);
        assert_eq!(
            braided_coproduct(&unit).unwrap(),
            BraidedTensorElement::unit(AlgebraKind::DividedPower, 2, f)
        );
    }

    #[test]
    fn coproduct_of_second_divided_power() {
        // Expanding D(x1)^2 / [2]: the legs of degree eps_1 commute
        // (theta(eps_1, eps_1) = 1), so the middle coefficient is 2/[2].
        let f = g();
        let d = braided_coproduct(&dp(&[2, 0])).unwrap();
        let middle = d.coeff(&mi(&[1, 0]), &mi(&[1, 0]));
        assert_eq!(middle, &f.from_int(2) / &qint(2, &f));
        assert!(d.coeff(&mi(&[2, 0]), &mi(&[0, 0])).is_one());
        assert!(d.coeff(&mi(&[0, 0]), &mi(&[2, 0])).is_one());
        assert_eq!(d.num_terms(), 3);
        // direct expansion agrees with the packaged computation
        let x1 = dp(&[1, 0]);
        let direct = braided_coproduct(&x1)
            .unwrap()
            .pow(2)
            .scale(&(&f.one() / &qint(2, &f)));
        assert_eq!(d, direct);
    }

    #[test]
    fn coproduct_is_braided_multiplicative() {
        use crate::lattice::monomials_up_to_degree;
        for alpha in monomials_up_to_degree(2, 4, i64::MAX) {
            for beta in monomials_up_to_degree(2, 4, i64::MAX) {
                let a = Element::monomial(AlgebraKind::DividedPower, alpha.clone(), g()).unwrap();
                let b = Element::monomial(AlgebraKind::DividedPower, beta.clone(), g()).unwrap();
                let lhs = braided_coproduct(&a.mul(&b)).unwrap();
                let rhs = braided_coproduct(&a)
                    .unwrap()
                    .braided_mul(&braided_coproduct(&b).unwrap());
                assert_eq!(lhs, rhs, "alpha={alpha}, beta={beta}");
            }
        }
    }

    #[test]
    fn antipode_law_and_antihomomorphism() {
        use crate::lattice::monomials_up_to_degree;
        let f = g();
        for alpha in monomials_up_to_degree(2, 4, i64::MAX) {
            let a = Element::monomial(AlgebraKind::DividedPower, alpha.clone(), f).unwrap();
            // m (S (x) 1) D = eta eps = m (1 (x) S) D
            let d = braided_coproduct(&a).unwrap();
            let mut left = Element::zero(AlgebraKind::DividedPower, 2, f);
            let mut right = Element::zero(AlgebraKind::DividedPower, 2, f);
            for ((u, v), c) in d.terms() {
                let eu = Element::monomial(AlgebraKind::DividedPower, u.clone(), f).unwrap();
                let ev = Element::monomial(AlgebraKind::DividedPower, v.clone(), f).unwrap();
                left = left.add(&braided_antipode(&eu).mul(&ev).scale(c));
                right = right.add(&eu.mul(&braided_antipode(&ev)).scale(c));
            }
            let expect = Element::unit(AlgebraKind::DividedPower, 2, f).scale(&counit(&a));
            assert_eq!(left, expect, "alpha={alpha}");
            assert_eq!(right, expect, "alpha={alpha}");
        }
        // S(ab) = theta(a, b) S(b) S(a) on monomial pairs
        for alpha in monomials_up_to_degree(2, 3, i64::MAX) {
            for beta in monomials_up_to_degree(2, 3, i64::MAX) {
                let a = Element::monomial(AlgebraKind::DividedPower, alpha.clone(), f).unwrap();
                let b = Element::monomial(AlgebraKind::DividedPower, beta.clone(), f).unwrap();
                let lhs = braided_antipode(&a.mul(&b));
                let twist = f.q_power(theta_exponent(&alpha, &beta));
                let rhs = braided_antipode(&b).mul(&braided_antipode(&a)).scale(&twist);
                assert_eq!(lhs, rhs, "alpha={alpha}, beta={beta}");
            }
        }
    }

    #[test]
    fn coproduct_rejected_at_roots_beyond_degree_one() {
        let f = ScalarField::root_of_unity(3).unwrap();
        let x1 =
            Element::monomial(AlgebraKind::DividedPower, mi(&[1, 0]), f).unwrap();
        assert!(braided_coproduct(&x1).is_ok());
        let x2 =
            Element::monomial(AlgebraKind::DividedPower, mi(&[2, 0]), f).unwrap();
        assert!(braided_coproduct(&x2).is_err());
    }
}
