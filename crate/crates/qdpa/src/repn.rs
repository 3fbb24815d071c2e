//! Exact linear algebra over scalars and module-structure analysis: graded
//! components, highest weight vectors, submodule generation, and
//! decomposition reports.
//!
//! The exterior algebra's module structure is not given by the q-derivative
//! operators (those act on the divided power side); it is induced from the
//! basic module by the comultiplication, which concretely is the twisted
//! Leibniz recursion `e_i(ab) = a e_i(b) + e_i(a) K_i(b)`,
//! `f_i(ab) = K_i^{-1}(a) f_i(b) + f_i(a) b` seeded by
//! `e_i(x_j) = delta_{i+1,j} x_i`, `f_i(x_j) = delta_{ij} x_{i+1}`,
//! `K_i(x_j) = q^{delta_ij - delta_{i+1,j}} x_j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::galg::{AlgebraKind, Element};
use crate::lattice::{monomials_of_degree, MultiIndex};
use crate::ops::OpExpr;
use crate::qarith::{Scalar, ScalarField};
use crate::uq::UqRealization;

// ---------------------------------------------------------------------------
// exact linear algebra
// ---------------------------------------------------------------------------

/// A dense matrix over [`Scalar`], row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarMatrix {
    pub rows: usize,
    pub cols: usize,
    field: ScalarField,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zero(rows: usize, cols: usize, field: ScalarField) -> Self {
        ScalarMatrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    let e = self.get(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc = &acc + &(e * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Stack matrices vertically (same column count).
    pub fn vstack(mats: &[&ScalarMatrix]) -> ScalarMatrix {
        assert!(!mats.is_empty());
        let cols = mats[0].cols;
        let field = mats[0].field;
        let rows = mats.iter().map(|m| m.rows).sum();
        let mut out = ScalarMatrix::zero(rows, cols, field);
        let mut off = 0;
        for m in mats {
            assert_eq!(m.cols, cols);
            for r in 0..m.rows {
                for c in 0..cols {
                    out.set(off + r, c, m.get(r, c).clone());
                }
            }
            off += m.rows;
        }
        out
    }

    /// Nullspace basis by exact Gaussian elimination, pivoting on the first
    /// nonzero entry in column (basis) order.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut row = 0;
        for col in 0..m.cols {
            // find pivot in this column at or below `row`
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            // swap into place
            if p != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(p, c).clone();
                    m.set(row, c, b);
                    m.set(p, c, a);
                }
            }
            // normalize pivot row
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            // eliminate everywhere else
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == m.rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..m.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); m.cols];
            v[free] = self.field.one();
            for &(r, c) in &pivots {
                v[c] = -m.get(r, free);
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.cols - self.nullspace().len()
    }
}

/// A subspace kept as a reduced row-echelon basis; supports growth and
/// coordinate extraction.
#[derive(Debug, Clone)]
pub struct RowSpace {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Reduce `v` against the basis; returns the residual.
    fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for c in 0..self.cols {
                if !row[c].is_zero() {
                    v[c] = &v[c] - &(&factor * &row[c]);
                }
            }
        }
        v
    }

    /// Insert a vector; returns true when the span grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for c in &mut v {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        // back-eliminate: keep the basis fully reduced
        for (row, &rp) in self.rows.iter_mut().zip(&self.pivots) {
            let _ = rp;
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for c in 0..self.cols {
                if !v[c].is_zero() {
                    row[c] = &row[c] - &(&factor * &v[c]);
                }
            }
        }
        // keep rows ordered by pivot
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.rows.len());
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| c.is_zero())
    }

    /// Coordinates of `v` in this basis (None when `v` is outside the span).
    /// The basis is fully reduced, so coordinates are the pivot entries.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

// ---------------------------------------------------------------------------
// graded components and module actions
// ---------------------------------------------------------------------------

/// One graded piece: the span of the degree-`s` basis monomials of the kind.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedComponent {
    pub kind: AlgebraKind,
    pub n: usize,
    pub degree: i64,
    pub field: ScalarField,
    pub basis: Vec<MultiIndex>,
}

impl GradedComponent {
    pub fn new(kind: AlgebraKind, n: usize, degree: i64, field: ScalarField) -> Result<Self> {
        kind.validate(&field)?;
        Ok(GradedComponent {
            kind,
            n,
            degree,
            field,
            basis: monomials_of_degree(n, degree, kind.max_entry()),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, alpha: &MultiIndex) -> Option<usize> {
        self.basis.iter().position(|b| b == alpha)
    }

    /// Expand an element supported in this degree into coordinates.
    pub fn coordinates(&self, a: &Element) -> Result<Vec<Scalar>> {
        let mut v = vec![self.field.zero(); self.dim()];
        for (alpha, c) in a.terms() {
            let Some(i) = self.index_of(alpha) else {
                return Err(Error::NotHomogeneous(format!(
                    "x{alpha} is not in the degree-{} component",
                    self.degree
                )));
            };
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn element_from(&self, coords: &[Scalar]) -> Element {
        let mut out = Element::zero(self.kind, self.n, self.field);
        for (alpha, c) in self.basis.iter().zip(coords) {
            if !c.is_zero() {
                out = out.add(
                    &Element::monomial(self.kind, alpha.clone(), self.field)
                        .unwrap()
                        .scale(c),
                );
            }
        }
        out
    }
}

/// The `U_q(sl_n)` action a decomposition runs under: the q-derivative
/// operators for the divided power / restricted kinds, the structural
/// recursion for the exterior kind.
#[derive(Debug, Clone)]
pub enum ModuleAction {
    Operators(UqRealization),
    Exterior { n: usize, field: ScalarField },
}

impl ModuleAction {
    pub fn for_kind(kind: AlgebraKind, n: usize, field: ScalarField) -> Result<Self> {
        match kind {
            AlgebraKind::Exterior => Ok(ModuleAction::Exterior { n, field }),
            _ => Ok(ModuleAction::Operators(UqRealization::new(n, kind, field)?)),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            ModuleAction::Operators(r) => r.n,
            ModuleAction::Exterior { n, .. } => *n,
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        match self {
            ModuleAction::Operators(r) => r.kind,
            ModuleAction::Exterior { .. } => AlgebraKind::Exterior,
        }
    }

    pub fn field(&self) -> ScalarField {
        match self {
            ModuleAction::Operators(r) => r.field,
            ModuleAction::Exterior { field, .. } => *field,
        }
    }

    pub fn apply_e(&self, i: usize, a: &Element) -> Element {
        match self {
            ModuleAction::Operators(r) => r.e(i).apply(a),
            ModuleAction::Exterior { .. } => self.exterior_recurse(a, &ExtGen::E(i)),
        }
    }

    pub fn apply_f(&self, i: usize, a: &Element) -> Element {
        match self {
            ModuleAction::Operators(r) => r.f(i).apply(a),
            ModuleAction::Exterior { .. } => self.exterior_recurse(a, &ExtGen::F(i)),
        }
    }

    pub fn apply_k(&self, i: usize, a: &Element) -> Element {
        match self {
            ModuleAction::Operators(r) => r.k(i).apply(a),
            ModuleAction::Exterior { .. } => self.exterior_recurse(a, &ExtGen::K(i, false)),
        }
    }

    pub fn apply_k_inv(&self, i: usize, a: &Element) -> Element {
        match self {
            ModuleAction::Operators(r) => r.k_inv(i).apply(a),
            ModuleAction::Exterior { .. } => self.exterior_recurse(a, &ExtGen::K(i, true)),
        }
    }

    fn exterior_recurse(&self, a: &Element, g: &ExtGen) -> Element {
        let (n, field) = (self.n(), self.field());
        let mut out = Element::zero(AlgebraKind::Exterior, n, field);
        for (alpha, c) in a.terms() {
            out = out.add(&exterior_monomial_action(n, &field, g, alpha).scale(c));
        }
        out
    }
}

enum ExtGen {
    E(usize),
    F(usize),
    K(usize, bool),
}

/// Action on one exterior monomial via the twisted Leibniz recursion on the
/// factorization `x^S = x_j x^(S - j)` at the smallest index `j`.
fn exterior_monomial_action(
    n: usize,
    field: &ScalarField,
    g: &ExtGen,
    alpha: &MultiIndex,
) -> Element {
    let kind = AlgebraKind::Exterior;
    let zero = || Element::zero(kind, n, *field);
    let mono = |m: &MultiIndex| Element::monomial(kind, m.clone(), *field).unwrap();
    // K_i is diagonal: q^{alpha_i - alpha_{i+1}}
    if let ExtGen::K(i, inv) = g {
        let mut e = alpha.get(*i) - alpha.get(*i + 1);
        if *inv {
            e = -e;
        }
        return mono(alpha).scale(&field.q_power(e));
    }
    let Some(j) = (1..=n).find(|&j| alpha.get(j) != 0) else {
        // the unit: e_i(1) = f_i(1) = 0
        return zero();
    };
    let ej = MultiIndex::unit(n, j);
    let rest = alpha - &ej;
    let xj = mono(&ej);
    let xrest = mono(&rest);
    match g {
        ExtGen::E(i) => {
            // e_i(x_j rest) = x_j e_i(rest) + e_i(x_j) K_i(rest)
            let term1 = xj.mul(&exterior_monomial_action(n, field, g, &rest));
            let seed = if j == *i + 1 {
                mono(&MultiIndex::unit(n, *i))
            } else {
                zero()
            };
            let term2 = seed.mul(&exterior_monomial_action(
                n,
                field,
                &ExtGen::K(*i, false),
                &rest,
            ));
            term1.add(&term2)
        }
        ExtGen::F(i) => {
            // f_i(x_j rest) = K_i^{-1}(x_j) f_i(rest) + f_i(x_j) rest
            let kx = exterior_monomial_action(n, field, &ExtGen::K(*i, true), &ej);
            let term1 = kx.mul(&exterior_monomial_action(n, field, g, &rest));
            let seed = if j == *i {
                mono(&MultiIndex::unit(n, *i + 1))
            } else {
                zero()
            };
            let term2 = seed.mul(&xrest);
            term1.add(&term2)
        }
        ExtGen::K(..) => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// matrices of operators, highest weight vectors, submodules
// ---------------------------------------------------------------------------

/// The matrix of a degree-homogeneous operator from `c` into the target
/// component it maps to. Rows index the target basis, columns the source.
pub fn operator_matrix(
    op: &OpExpr,
    c: &GradedComponent,
) -> Result<(ScalarMatrix, GradedComponent)> {
    let images: Vec<Element> = c
        .basis
        .iter()
        .map(|b| op.apply(&Element::monomial(c.kind, b.clone(), c.field).unwrap()))
        .collect();
    matrix_from_images(c, &images)
}

/// Shared builder used for both operator expressions and module actions.
fn matrix_from_images(
    c: &GradedComponent,
    images: &[Element],
) -> Result<(ScalarMatrix, GradedComponent)> {
    let mut target_degree: Option<i64> = None;
    for img in images {
        for (alpha, _) in img.terms() {
            let d = alpha.degree();
            match target_degree {
                None => target_degree = Some(d),
                Some(t) if t != d => {
                    return Err(Error::NotHomogeneous(format!(
                        "images land in degrees {t} and {d}"
                    )));
                }
                _ => {}
            }
        }
    }
    let target = match target_degree {
        None => c.clone(), // zero operator: keep the source as target
        Some(d) => GradedComponent::new(c.kind, c.n, d, c.field)?,
    };
    let mut m = ScalarMatrix::zero(target.dim(), c.dim(), c.field);
    for (col, img) in images.iter().enumerate() {
        for (alpha, coeff) in img.terms() {
            let row = target
                .index_of(alpha)
                .expect("image monomial is in the target component");
            m.set(row, col, coeff.clone());
        }
    }
    Ok((m, target))
}

fn action_matrix(
    action: &ModuleAction,
    apply: impl Fn(&Element) -> Element,
    c: &GradedComponent,
) -> ScalarMatrix {
    let _ = action;
    let images: Vec<Element> = c
        .basis
        .iter()
        .map(|b| apply(&Element::monomial(c.kind, b.clone(), c.field).unwrap()))
        .collect();
    let (m, target) = matrix_from_images(c, &images).expect("e_i/f_i/K_i are degree-homogeneous");
    assert_eq!(
        target.degree, c.degree,
        "e_i, f_i, K_i preserve the total degree"
    );
    m
}

/// Basis of the joint kernel of all `e_i` on the component, by exact
/// Gaussian elimination; every returned vector is checked to be a
/// simultaneous `K_i` eigenvector.
pub fn highest_weight_vectors(
    c: &GradedComponent,
    action: &ModuleAction,
) -> Vec<Vec<Scalar>> {
    let n = action.n();
    if c.dim() == 0 {
        return Vec::new();
    }
    let mats: Vec<ScalarMatrix> = (1..n)
        .map(|i| action_matrix(action, |a| action.apply_e(i, a), c))
        .collect();
    let refs: Vec<&ScalarMatrix> = mats.iter().collect();
    let stacked = ScalarMatrix::vstack(&refs);
    let kernel = stacked.nullspace();
    // each kernel vector must be a simultaneous K_i eigenvector
    for v in &kernel {
        for i in 1..n {
            let kmat = action_matrix(action, |a| action.apply_k(i, a), c);
            let kv = kmat.apply(v);
            let lead = v.iter().position(|x| !x.is_zero()).unwrap();
            let lambda = &kv[lead] / &v[lead];
            for (a, b) in kv.iter().zip(v) {
                assert!(
                    (a - &(&lambda * b)).is_zero(),
                    "kernel vector is not a K_{i}-eigenvector"
                );
            }
        }
    }
    kernel
}

/// Close the span of `vectors` under all `e_i` and `f_i`; returns the
/// invariant subspace as a reduced row space.
pub fn generate_submodule(
    vectors: &[Vec<Scalar>],
    action: &ModuleAction,
    c: &GradedComponent,
) -> RowSpace {
    let n = action.n();
    let mut space = RowSpace::new(c.dim());
    for v in vectors {
        space.insert(v.clone());
    }
    let e_mats: Vec<ScalarMatrix> = (1..n)
        .map(|i| action_matrix(action, |a| action.apply_e(i, a), c))
        .collect();
    let f_mats: Vec<ScalarMatrix> = (1..n)
        .map(|i| action_matrix(action, |a| action.apply_f(i, a), c))
        .collect();
    loop {
        let mut grew = false;
        let snapshot: Vec<Vec<Scalar>> = space.basis().to_vec();
        for v in &snapshot {
            for m in e_mats.iter().chain(&f_mats) {
                if space.insert(m.apply(v)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return space;
        }
    }
}

// ---------------------------------------------------------------------------
// decomposition reports
// ---------------------------------------------------------------------------

/// One highest-weight summand of a graded component.
#[derive(Debug, Clone, serde::Serialize)]
pub struct HighestWeightSummand {
    /// Rendering of the highest weight vector as an element.
    pub vector: String,
    /// `K_i`-eigenvalue exponents `<lambda, alpha_i>`, i = 1..n-1.
    pub weight_exponents: Vec<i64>,
    /// The weight in the fundamental-weight basis, e.g. `2*w1`.
    pub weight_label: String,
    pub submodule_dimension: usize,
    pub simple: bool,
}

/// The decomposition of one graded component.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ComponentDecomposition {
    pub degree: i64,
    pub dimension: usize,
    pub summands: Vec<HighestWeightSummand>,
    /// Whether the summand dimensions add up to the component dimension.
    pub complete: bool,
}

/// The decomposition of a graded algebra, component by component.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DecompositionReport {
    pub kind: String,
    pub n: usize,
    pub field: String,
    pub components: Vec<ComponentDecomposition>,
}

impl DecompositionReport {
    pub fn total_dimension(&self) -> usize {
        self.components.iter().map(|c| c.dimension).sum()
    }

    pub fn dimension_vector(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dimension).collect()
    }
}

impl fmt::Display for DecompositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} algebra, n = {}, q = {}:",
            self.kind, self.n, self.field
        )?;
        for c in &self.components {
            write!(f, "  degree {}: dim {}", c.degree, c.dimension)?;
            for s in &c.summands {
                write!(
                    f,
                    "; hw {} weight {} -> submodule dim {}{}",
                    s.vector,
                    s.weight_label,
                    s.submodule_dimension,
                    if s.simple { " (simple)" } else { "" }
                )?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn weight_label(exponents: &[i64]) -> String {
    let parts: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("w{}", i + 1)
            } else {
                format!("{}*w{}", e, i + 1)
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Decompose the degree-`s` component: highest weight vectors, their
/// weights, generated submodules, and simplicity (no proper invariant
/// subspace, witnessed by re-running the highest-weight search inside).
pub fn decompose_component(
    c: &GradedComponent,
    action: &ModuleAction,
) -> ComponentDecomposition {
    let n = action.n();
    let hws = highest_weight_vectors(c, action);
    let mut summands = Vec::new();
    let mut covered = 0usize;
    for v in &hws {
        let sub = generate_submodule(std::slice::from_ref(v), action, c);
        // weight exponents off the leading support monomial
        let lead = v.iter().position(|x| !x.is_zero()).unwrap();
        let beta = &c.basis[lead];
        let exponents: Vec<i64> = (1..n).map(|i| beta.get(i) - beta.get(i + 1)).collect();
        // simple iff every hw vector inside the submodule regenerates it
        let simple = submodule_is_simple(&sub, action, c);
        covered += sub.dim();
        summands.push(HighestWeightSummand {
            vector: c.element_from(v).to_string(),
            weight_exponents: exponents.clone(),
            weight_label: weight_label(&exponents),
            submodule_dimension: sub.dim(),
            simple,
        });
    }
    ComponentDecomposition {
        degree: c.degree,
        dimension: c.dim(),
        complete: covered == c.dim(),
        summands,
    }
}

fn submodule_is_simple(sub: &RowSpace, action: &ModuleAction, c: &GradedComponent) -> bool {
    if sub.dim() == 0 {
        return false;
    }
    let n = action.n();
    // restrict the e_i to the submodule in its own coordinates
    let dim = sub.dim();
    let mut stacked = ScalarMatrix::zero((n - 1) * dim, dim, c.field);
    for i in 1..n {
        let m = action_matrix(action, |a| action.apply_e(i, a), c);
        for (col, w) in sub.basis().iter().enumerate() {
            let img = m.apply(w);
            let coords = sub
                .coordinates(&img)
                .expect("submodule is invariant under e_i");
            for (row, v) in coords.iter().enumerate() {
                stacked.set((i - 1) * dim + row, col, v.clone());
            }
        }
    }
    for kv in stacked.nullspace() {
        // map back to component coordinates and regenerate
        let mut vec = vec![c.field.zero(); c.dim()];
        for (coeff, row) in kv.iter().zip(sub.basis()) {
            for (t, r) in vec.iter_mut().zip(row) {
                *t = &*t + &(coeff * r);
            }
        }
        let regen = generate_submodule(&[vec], action, c);
        if regen.dim() != sub.dim() {
            return false;
        }
    }
    true
}

/// Decompose every graded component of the algebra: degrees `0..=max_degree`
/// for the divided power kind, the full finite range for the restricted and
/// exterior kinds.
pub fn decompose(
    kind: AlgebraKind,
    n: usize,
    field: ScalarField,
    max_degree: Option<i64>,
) -> Result<DecompositionReport> {
    let action = ModuleAction::for_kind(kind, n, field)?;
    let top = match kind {
        AlgebraKind::DividedPower => {
            max_degree.ok_or_else(|| Error::Invalid("unbounded algebra needs a degree cap".into()))?
        }
        AlgebraKind::Restricted(l) => n as i64 * (l as i64 - 1),
        AlgebraKind::Exterior => n as i64,
    };
    let mut components = Vec::new();
    for s in 0..=top {
        let c = GradedComponent::new(kind, n, s, field)?;
        components.push(decompose_component(&c, &action));
    }
    Ok(DecompositionReport {
        kind: kind.to_string(),
        n,
        field: field.to_string(),
        components,
    })
}
