//! The quantum Weyl algebra `W_q(2n)`: normal ordering of operator words.
//!
//! Words over the primitives rewrite to the normal order
//! `x^(a) Theta(mu) sigma^nu del^(b)` (x, then Theta, then sigma, then del,
//! axes ascending inside each block) using the local relations:
//! Theta and sigma commute freely; Theta and sigma cross `x_j` / `del_j`
//! with bicharacter / `q^{+-delta}` factors; `del_i` crosses `x_j` (`i != j`)
//! with a bicharacter factor; and the variant-dependent split
//! `del_i x_i = q^{+-1} x_i del_i + sigma_i^{-+1}`. Divided powers in the `x`
//! block merge through the algebra product. Rewriting terminates, and the
//! result is independent of the order redexes are picked (checked
//! empirically by the suites, not assumed).

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::galg::{monomial_mul, AlgebraKind, Element};
use crate::lattice::{theta_exponent, MultiIndex};
use crate::ops::{OpExpr, PrimOp};
use crate::qarith::{Scalar, ScalarField};

/// Which sign of the `del_i x_i` relation the engine uses:
/// `Plus` means `del_i x_i = q x_i del_i + sigma_i^{-1}`,
/// `Minus` means `del_i x_i = q^{-1} x_i del_i + sigma_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeylVariant {
    Plus,
    Minus,
}

impl fmt::Display for WeylVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylVariant::Plus => write!(f, "+"),
            WeylVariant::Minus => write!(f, "-"),
        }
    }
}

/// A normal word `x^(a) Theta(mu) sigma^nu del^(b)` with `a, b >= 0`
/// componentwise and `del^(b) = del_1^{b_1} ... del_n^{b_n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormalWord {
    pub x: MultiIndex,
    pub theta: MultiIndex,
    pub sigma: MultiIndex,
    pub del: MultiIndex,
}

impl NormalWord {
    pub fn identity(dim: usize) -> Self {
        NormalWord {
            x: MultiIndex::zero(dim),
            theta: MultiIndex::zero(dim),
            sigma: MultiIndex::zero(dim),
            del: MultiIndex::zero(dim),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.theta.is_zero() && self.sigma.is_zero() && self.del.is_zero()
    }

    /// Expand back into a primitive word (mathematical order: leftmost
    /// applied last).
    pub fn to_prims(&self) -> Vec<PrimOp> {
        let dim = self.x.dim();
        let mut out = Vec::new();
        if !self.x.is_zero() {
            out.push(PrimOp::MulBy(self.x.clone()));
        }
        if !self.theta.is_zero() {
            out.push(PrimOp::Theta(self.theta.clone()));
        }
        for i in 1..=dim {
            let e = self.sigma.get(i);
            for _ in 0..e.unsigned_abs() {
                out.push(PrimOp::Sigma {
                    axis: i,
                    inverse: e < 0,
                });
            }
        }
        for i in 1..=dim {
            for _ in 0..self.del.get(i) {
                out.push(PrimOp::Del { axis: i });
            }
        }
        out
    }

    /// Action on one basis monomial; `None` when it annihilates.
    pub fn apply_monomial(
        &self,
        beta: &MultiIndex,
        field: &ScalarField,
        kind: AlgebraKind,
    ) -> Option<(MultiIndex, Scalar)> {
        let dim = beta.dim();
        let mut cur = beta.clone();
        let mut exp: i64 = 0;
        // del block: del_n^{b_n} first; del_i uses q^{-sum_{s<i} beta_s},
        // and decrementing axis i never changes a smaller axis's prefix sum.
        for i in (1..=dim).rev() {
            let b = self.del.get(i);
            if b == 0 {
                continue;
            }
            if cur.get(i) < b {
                return None;
            }
            let prefix: i64 = cur.entries()[..i - 1].iter().sum();
            exp -= prefix * b;
            cur.set(i, cur.get(i) - b);
        }
        // sigma block
        for i in 1..=dim {
            exp += self.sigma.get(i) * cur.get(i);
        }
        // Theta block
        exp += theta_exponent(&self.theta, &cur);
        let mut coeff = field.q_power(exp);
        // x block via the algebra product
        if !self.x.is_zero() {
            let (gamma, s) = monomial_mul(kind, field, &self.x, &cur)?;
            cur = gamma;
            coeff = &coeff * &s;
        }
        Some((cur, coeff))
    }
}

/// A finitely supported scalar combination of normal words, tagged with the
/// engine configuration it was produced under.
#[derive(Debug, Clone, PartialEq)]
pub struct WeylElement {
    variant: WeylVariant,
    field: ScalarField,
    dim: usize,
    terms: BTreeMap<NormalWord, Scalar>,
}

impl WeylElement {
    pub fn zero(variant: WeylVariant, dim: usize, field: ScalarField) -> Self {
        WeylElement {
            variant,
            field,
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The unit: the empty word.
    pub fn one(variant: WeylVariant, dim: usize, field: ScalarField) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(NormalWord::identity(dim), field.one());
        WeylElement {
            variant,
            field,
            dim,
            terms,
        }
    }

    pub fn variant(&self) -> WeylVariant {
        self.variant
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalWord, &Scalar)> {
        self.terms.iter()
    }

    fn add_term(&mut self, w: NormalWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> WeylElement {
        let mut out = WeylElement::zero(self.variant, self.dim, self.field);
        if c.is_zero() {
            return out;
        }
        for (w, k) in &self.terms {
            out.terms.insert(w.clone(), k * c);
        }
        out
    }

    fn assert_compatible(&self, other: &WeylElement) {
        assert_eq!(self.variant, other.variant, "variant mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.dim, other.dim, "dimension mismatch");
    }

    /// Left-multiply by one primitive, using the closed-form crossing rules
    /// instead of the generic rewriter. Used by the bulk soundness checks.
    pub fn mul_prim_left(&self, p: &PrimOp) -> WeylElement {
        let mut out = WeylElement::zero(self.variant, self.dim, self.field);
        let f = &self.field;
        for (w, c) in &self.terms {
            match p {
                PrimOp::MulBy(a) => {
                    if let Some((x, s)) =
                        monomial_mul(AlgebraKind::DividedPower, f, a, &w.x)
                    {
                        let mut nw = w.clone();
                        nw.x = x;
                        out.add_term(nw, c * &s);
                    }
                }
                PrimOp::Theta(a) => {
                    let e = theta_exponent(a, &w.x);
                    let mut nw = w.clone();
                    nw.theta = &nw.theta + a;
                    out.add_term(nw, c * &f.q_power(e));
                }
                PrimOp::Sigma { axis, inverse } => {
                    let dir = if *inverse { -1 } else { 1 };
                    let e = dir * w.x.get(*axis);
                    let mut nw = w.clone();
                    nw.sigma.set(*axis, nw.sigma.get(*axis) + dir);
                    out.add_term(nw, c * &f.q_power(e));
                }
                PrimOp::Del { axis } => {
                    let i = *axis;
                    let ei = MultiIndex::unit(self.dim, i);
                    if w.x.get(i) >= 1 {
                        // del consumes one x_i and leaves a sigma behind
                        let prefix: i64 = w.x.entries()[..i - 1].iter().sum();
                        let mut nw = w.clone();
                        nw.x = &nw.x - &ei;
                        let dir = match self.variant {
                            WeylVariant::Plus => -1,
                            WeylVariant::Minus => 1,
                        };
                        nw.sigma.set(i, nw.sigma.get(i) + dir);
                        out.add_term(nw, c * &f.q_power(-prefix));
                    }
                    // del crosses all four blocks
                    let sign = match self.variant {
                        WeylVariant::Plus => w.x.get(i),
                        WeylVariant::Minus => -w.x.get(i),
                    };
                    let e = theta_exponent(&-&ei, &w.x)
                        + sign
                        + theta_exponent(&w.theta, &ei)
                        + w.sigma.get(i)
                        + w.del.entries()[..i - 1].iter().sum::<i64>();
                    let mut nw = w.clone();
                    nw.del.set(i, nw.del.get(i) + 1);
                    out.add_term(nw, c * &f.q_power(e));
                }
            }
        }
        out
    }

    /// Product: concatenate word pairs and renormalize; associative with the
    /// empty word as unit.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        self.assert_compatible(other);
        let mut out = WeylElement::zero(self.variant, self.dim, self.field);
        for (w1, c1) in &self.terms {
            let p1 = w1.to_prims();
            for (w2, c2) in &other.terms {
                let mut word = p1.clone();
                word.extend(w2.to_prims());
                let nf = normalize(&word, self.variant, self.dim, &self.field);
                for (w, c) in nf.terms {
                    out.add_term(w, &(&c * c1) * c2);
                }
            }
        }
        out
    }

    /// Action on an algebra element (divided power or restricted kind).
    pub fn apply(&self, a: &Element) -> Element {
        assert_eq!(self.field, a.field(), "field mismatch");
        assert_eq!(self.dim, a.dim(), "dimension mismatch");
        assert_ne!(
            a.kind(),
            AlgebraKind::Exterior,
            "Weyl algebra acts on the divided power algebras"
        );
        let mut out = Element::zero(a.kind(), a.dim(), a.field());
        for (word, c) in &self.terms {
            for (beta, d) in a.terms() {
                if let Some((gamma, s)) = word.apply_monomial(beta, &self.field, a.kind()) {
                    out.add_term(gamma, &(&s * c) * d);
                }
            }
        }
        out
    }

    /// The same action as an operator expression (for cross-checks).
    pub fn to_op_expr(&self) -> OpExpr {
        let mut terms = Vec::new();
        for (w, c) in &self.terms {
            terms.push(OpExpr::scale(c.clone(), OpExpr::word(&w.to_prims())));
        }
        OpExpr::sum(terms)
    }
}

impl fmt::Display for WeylElement {
    /// Terms render in application order joined by `;` (the leftmost listed
    /// primitive is applied first), e.g. `q*(d1; mul x(1,0)) + s1^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let word = render_word(w);
            if c.is_one() {
                write!(f, "{word}")?;
            } else {
                let cs = c.to_string();
                let simple = !cs.contains(['+', '-', '/', ' ']) || cs.starts_with('(');
                if simple {
                    write!(f, "{cs}*({word})")?;
                } else {
                    write!(f, "({cs})*({word})")?;
                }
            }
        }
        Ok(())
    }
}

fn render_word(w: &NormalWord) -> String {
    if w.is_identity() {
        return "id".to_string();
    }
    let dim = w.x.dim();
    let mut parts: Vec<String> = Vec::new();
    // application order: del (descending axes), sigma, Theta, x
    for i in (1..=dim).rev() {
        let b = w.del.get(i);
        if b == 1 {
            parts.push(format!("d{i}"));
        } else if b > 1 {
            parts.push(format!("d{i}^{b}"));
        }
    }
    for i in 1..=dim {
        let e = w.sigma.get(i);
        if e == 1 {
            parts.push(format!("s{i}"));
        } else if e != 0 {
            parts.push(format!("s{i}^{e}"));
        }
    }
    if !w.theta.is_zero() {
        parts.push(format!("th{}", w.theta));
    }
    if !w.x.is_zero() {
        parts.push(format!("mul x{}", w.x));
    }
    parts.join("; ")
}

/// Redex selection order; all admissible orders must yield the same normal
/// form (local confluence, verified by the suites).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteStrategy {
    Leftmost,
    Rightmost,
    /// Pseudorandom pick, seeded for reproducibility.
    Random(u64),
}

fn rank(p: &PrimOp) -> u8 {
    match p {
        PrimOp::MulBy(_) => 0,
        PrimOp::Theta(_) => 1,
        PrimOp::Sigma { .. } => 2,
        PrimOp::Del { .. } => 3,
    }
}

/// Is the adjacent pair `(p, p')` reducible?
fn is_redex(p: &PrimOp, p2: &PrimOp) -> bool {
    let (r, r2) = (rank(p), rank(p2));
    if r > r2 {
        return true;
    }
    if r < r2 {
        return false;
    }
    match (p, p2) {
        (PrimOp::MulBy(_), PrimOp::MulBy(_)) => true,
        (PrimOp::Theta(_), PrimOp::Theta(_)) => true,
        (PrimOp::Sigma { axis: i, inverse: e }, PrimOp::Sigma { axis: j, inverse: f }) => {
            i > j || (i == j && e != f)
        }
        (PrimOp::Del { axis: i }, PrimOp::Del { axis: j }) => i > j,
        _ => unreachable!("equal ranks are covered above"),
    }
}

/// Rewrite the redex `(p, p2)` into a sum of shorter-or-reordered words.
/// Each output is (scalar, replacement symbols).
fn rewrite_pair(
    p: &PrimOp,
    p2: &PrimOp,
    variant: WeylVariant,
    field: &ScalarField,
) -> Vec<(Scalar, Vec<PrimOp>)> {
    match (p, p2) {
        // merges inside a block
        (PrimOp::MulBy(a), PrimOp::MulBy(b)) => {
            match monomial_mul(AlgebraKind::DividedPower, field, a, b) {
                None => vec![],
                Some((gamma, s)) => {
                    if gamma.is_zero() {
                        vec![(s, vec![])]
                    } else {
                        vec![(s, vec![PrimOp::MulBy(gamma)])]
                    }
                }
            }
        }
        (PrimOp::Theta(a), PrimOp::Theta(b)) => {
            let sum = a + b;
            if sum.is_zero() {
                vec![(field.one(), vec![])]
            } else {
                vec![(field.one(), vec![PrimOp::Theta(sum)])]
            }
        }
        // block-internal sorting / cancellation
        (
            PrimOp::Sigma { axis: i, inverse: e },
            PrimOp::Sigma { axis: j, inverse: f },
        ) => {
            if i == j {
                debug_assert!(e != f);
                vec![(field.one(), vec![])]
            } else {
                vec![(field.one(), vec![p2.clone(), p.clone()])]
            }
        }
        (PrimOp::Del { axis: i }, PrimOp::Del { axis: j }) => {
            debug_assert!(i > j);
            // del_i del_j = theta(eps_i, eps_j) del_j del_i; i > j gives q
            vec![(field.q_power(1), vec![p2.clone(), p.clone()])]
        }
        // crossings toward normal order
        (PrimOp::Theta(a), PrimOp::MulBy(b)) => {
            let e = theta_exponent(a, b);
            vec![(field.q_power(e), vec![p2.clone(), p.clone()])]
        }
        (PrimOp::Sigma { axis, inverse }, PrimOp::MulBy(b)) => {
            let e = if *inverse { -b.get(*axis) } else { b.get(*axis) };
            vec![(field.q_power(e), vec![p2.clone(), p.clone()])]
        }
        (PrimOp::Sigma { .. }, PrimOp::Theta(_)) => {
            vec![(field.one(), vec![p2.clone(), p.clone()])]
        }
        (PrimOp::Del { axis }, PrimOp::Theta(a)) => {
            // del_i Theta(a) = theta(a, eps_i) Theta(a) del_i
            let e = theta_exponent(a, &MultiIndex::unit(a.dim(), *axis));
            vec![(field.q_power(e), vec![p2.clone(), p.clone()])]
        }
        (PrimOp::Del { axis: i }, PrimOp::Sigma { axis: j, inverse }) => {
            // del_i sigma_j^f = q^{f delta_ij} sigma_j^f del_i
            let mut e = 0;
            if i == j {
                e = if *inverse { -1 } else { 1 };
            }
            vec![(field.q_power(e), vec![p2.clone(), p.clone()])]
        }
        (PrimOp::Del { axis: i }, PrimOp::MulBy(a)) => {
            // del_i m_{x^(a)} = q^{-eps_i*a} m_{x^(a-eps_i)} sigma_i^{-+1}
            //                 + theta(-eps_i, a) q^{+-a_i} m_{x^(a)} del_i
            let dim = a.dim();
            let ei = MultiIndex::unit(dim, *i);
            let mut out = Vec::new();
            if a.get(*i) >= 1 {
                let prefix: i64 = a.entries()[..*i - 1].iter().sum();
                let rest = a - &ei;
                let sig = PrimOp::Sigma {
                    axis: *i,
                    inverse: variant == WeylVariant::Plus,
                };
                let mut word = Vec::new();
                if !rest.is_zero() {
                    word.push(PrimOp::MulBy(rest));
                }
                word.push(sig);
                out.push((field.q_power(-prefix), word));
            }
            let sign = match variant {
                WeylVariant::Plus => a.get(*i),
                WeylVariant::Minus => -a.get(*i),
            };
            let e = theta_exponent(&-&ei, a) + sign;
            out.push((field.q_power(e), vec![p2.clone(), p.clone()]));
            out
        }
        _ => unreachable!("non-redex pair"),
    }
}

fn redex_positions(word: &[PrimOp]) -> Vec<usize> {
    (0..word.len().saturating_sub(1))
        .filter(|&k| is_redex(&word[k], &word[k + 1]))
        .collect()
}

/// Normalize a primitive word (mathematical order: `word[0]` applied last)
/// into the configured variant's normal form.
pub fn normalize(
    word: &[PrimOp],
    variant: WeylVariant,
    dim: usize,
    field: &ScalarField,
) -> WeylElement {
    normalize_with_strategy(word, variant, dim, field, RewriteStrategy::Leftmost)
}

/// Normalize with an explicit redex-selection strategy.
pub fn normalize_with_strategy(
    word: &[PrimOp],
    variant: WeylVariant,
    dim: usize,
    field: &ScalarField,
    strategy: RewriteStrategy,
) -> WeylElement {
    let mut rng = match strategy {
        RewriteStrategy::Random(seed) => Some(<rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed)),
        _ => None,
    };
    let start: Vec<PrimOp> = word
        .iter()
        .filter(|p| match p {
            PrimOp::Theta(a) | PrimOp::MulBy(a) => !a.is_zero(),
            _ => true,
        })
        .cloned()
        .collect();
    let mut out = WeylElement::zero(variant, dim, *field);
    let mut pending: Vec<(Scalar, Vec<PrimOp>)> = vec![(field.one(), start)];
    while let Some((coeff, w)) = pending.pop() {
        let redexes = redex_positions(&w);
        if redexes.is_empty() {
            out.add_term(canonicalize(&w, dim), coeff);
            continue;
        }
        let k = match strategy {
            RewriteStrategy::Leftmost => redexes[0],
            RewriteStrategy::Rightmost => *redexes.last().unwrap(),
            RewriteStrategy::Random(_) => {
                let r = rng.as_mut().unwrap();
                redexes[r.gen_range(0..redexes.len())]
            }
        };
        for (s, repl) in rewrite_pair(&w[k], &w[k + 1], variant, field) {
            let mut nw = Vec::with_capacity(w.len());
            nw.extend_from_slice(&w[..k]);
            nw.extend(repl);
            nw.extend_from_slice(&w[k + 2..]);
            pending.push((&coeff * &s, nw));
        }
    }
    out
}

/// Pack a redex-free word into a [`NormalWord`].
fn canonicalize(word: &[PrimOp], dim: usize) -> NormalWord {
    let mut nw = NormalWord::identity(dim);
    for p in word {
        match p {
            PrimOp::MulBy(a) => {
                debug_assert!(nw.x.is_zero());
                nw.x = a.clone();
            }
            PrimOp::Theta(a) => {
                debug_assert!(nw.theta.is_zero());
                nw.theta = a.clone();
            }
            PrimOp::Sigma { axis, inverse } => {
                let d = if *inverse { -1 } else { 1 };
                nw.sigma.set(*axis, nw.sigma.get(*axis) + d);
            }
            PrimOp::Del { axis } => {
                nw.del.set(*axis, nw.del.get(*axis) + 1);
            }
        }
    }
    nw
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::basis_monomials;
    use crate::qarith::qint;

    fn g() -> ScalarField {
        ScalarField::Generic
    }

    fn nf(word: &[PrimOp], variant: WeylVariant) -> WeylElement {
        normalize(word, variant, 2, &g())
    }

    fn single(
        x: &[i64],
        theta: &[i64],
        sigma: &[i64],
        del: &[i64],
        c: Scalar,
    ) -> WeylElement {
        let mut out = WeylElement::zero(WeylVariant::Plus, 2, g());
        out.add_term(
            NormalWord {
                x: MultiIndex::new(x.to_vec()),
                theta: MultiIndex::new(theta.to_vec()),
                sigma: MultiIndex::new(sigma.to_vec()),
                del: MultiIndex::new(del.to_vec()),
            },
            c,
        );
        out
    }

    #[test]
    fn del_x_same_axis_plus_variant() {
        // d1 x1 = q x1 d1 + s1^{-1}
        let got = nf(&[PrimOp::del(1), PrimOp::x(2, 1)], WeylVariant::Plus);
        let expect = single(&[1, 0], &[0, 0], &[0, 0], &[1, 0], g().q())
            .add(&single(&[0, 0], &[0, 0], &[-1, 0], &[0, 0], g().one()));
        assert_eq!(got, expect);

        // minus variant: d1 x1 = q^{-1} x1 d1 + s1
        let got = nf(&[PrimOp::del(1), PrimOp::x(2, 1)], WeylVariant::Minus);
        assert_eq!(got.num_terms(), 2);
        let ops_equal = crate::ops::ops_agree_on_monomials(
            &got.to_op_expr(),
            &OpExpr::word(&[PrimOp::del(1), PrimOp::x(2, 1)]),
            AlgebraKind::DividedPower,
            2,
            &g(),
            6,
        );
        assert!(ops_equal.is_none());
    }

    #[test]
    fn del_x_cross_axis() {
        // d1 x2 = theta(eps_2, eps_1) x2 d1 = q x2 d1
        let got = nf(&[PrimOp::del(1), PrimOp::x(2, 2)], WeylVariant::Plus);
        assert_eq!(got, single(&[0, 1], &[0, 0], &[0, 0], &[1, 0], g().q()));
    }

    #[test]
    fn sigma_x_crossing() {
        // s1 x1 = q x1 s1
        let got = nf(&[PrimOp::sigma(1), PrimOp::x(2, 1)], WeylVariant::Plus);
        assert_eq!(got, single(&[1, 0], &[0, 0], &[1, 0], &[0, 0], g().q()));
    }

    #[test]
    fn theta_x_crossing() {
        // Theta(eps_1) x2 = theta(eps_1, eps_2) x2 Theta(eps_1) = q^{-1} ...
        let got = nf(
            &[PrimOp::theta_unit(2, 1, false), PrimOp::x(2, 2)],
            WeylVariant::Plus,
        );
        assert_eq!(
            got,
            single(&[0, 1], &[1, 0], &[0, 0], &[0, 0], g().q_power(-1))
        );
    }

    #[test]
    fn x_del_is_already_normal_and_matches_sigma_combination() {
        // x1 d1 is in normal order; its action equals
        // (s1 - s1^{-1}) / (q - q^{-1}).
        let w = nf(&[PrimOp::x(2, 1), PrimOp::del(1)], WeylVariant::Plus);
        assert_eq!(w.num_terms(), 1);
        let f = g();
        let denom = &f.q() - &f.q_power(-1);
        let rhs = OpExpr::sum(vec![
            OpExpr::scale(
                &f.one() / &denom,
                OpExpr::prim(PrimOp::sigma(1)),
            ),
            OpExpr::scale(
                &(-&f.one()) / &denom,
                OpExpr::prim(PrimOp::sigma_inv(1)),
            ),
        ]);
        assert!(crate::ops::ops_agree_on_monomials(
            &w.to_op_expr(),
            &rhs,
            AlgebraKind::DividedPower,
            2,
            &f,
            6
        )
        .is_none());
    }

    #[test]
    fn del_del_swap_and_theta_merge() {
        // d2 d1 = q d1 d2
        let got = nf(&[PrimOp::del(2), PrimOp::del(1)], WeylVariant::Plus);
        assert_eq!(got, single(&[0, 0], &[0, 0], &[0, 0], &[1, 1], g().q()));
        // Theta(a) Theta(b) = Theta(a + b); opposite units cancel
        let got = nf(
            &[
                PrimOp::theta_unit(2, 1, false),
                PrimOp::theta_unit(2, 1, true),
            ],
            WeylVariant::Plus,
        );
        assert_eq!(got, WeylElement::one(WeylVariant::Plus, 2, g()));
    }

    #[test]
    fn sigma_cancellation() {
        let got = nf(
            &[
                PrimOp::sigma(1),
                PrimOp::sigma(2),
                PrimOp::sigma_inv(1),
            ],
            WeylVariant::Plus,
        );
        assert_eq!(got, single(&[0, 0], &[0, 0], &[0, 1], &[0, 0], g().one()));
    }

    #[test]
    fn divided_powers_merge() {
        // x1 x1 = [2] x^((2,0))
        let got = nf(&[PrimOp::x(2, 1), PrimOp::x(2, 1)], WeylVariant::Plus);
        assert_eq!(
            got,
            single(&[2, 0], &[0, 0], &[0, 0], &[0, 0], qint(2, &g()))
        );
    }

    #[test]
    fn weyl_mul_matches_smash_relations() {
        let f = g();
        let one_del = normalize(&[PrimOp::del(1)], WeylVariant::Plus, 2, &f);
        let one_x = normalize(&[PrimOp::x(2, 1)], WeylVariant::Plus, 2, &f);
        // (d1)(x1) = q x1 d1 + s1^{-1}
        let prod = one_del.mul(&one_x);
        let expect = nf(&[PrimOp::del(1), PrimOp::x(2, 1)], WeylVariant::Plus);
        assert_eq!(prod, expect);
        // (x1)(d1) stays the ordered word
        let prod = one_x.mul(&one_del);
        assert_eq!(prod.num_terms(), 1);
        // (Theta(eps_1))(x2) = q^{-1} x2 Theta(eps_1)
        let th = normalize(&[PrimOp::theta_unit(2, 1, false)], WeylVariant::Plus, 2, &f);
        let x2 = normalize(&[PrimOp::x(2, 2)], WeylVariant::Plus, 2, &f);
        assert_eq!(
            th.mul(&x2),
            single(&[0, 1], &[1, 0], &[0, 0], &[0, 0], f.q_power(-1))
        );
        // unit behaves
        let unit = WeylElement::one(WeylVariant::Plus, 2, f);
        assert_eq!(unit.mul(&prod), prod);
        assert_eq!(prod.mul(&unit), prod);
    }

    #[test]
    fn normalize_preserves_action() {
        let f = g();
        let words: Vec<Vec<PrimOp>> = vec![
            vec![PrimOp::del(1), PrimOp::x(2, 1), PrimOp::del(1)],
            vec![
                PrimOp::del(1),
                PrimOp::del(2),
                PrimOp::x(2, 1),
                PrimOp::x(2, 2),
            ],
            vec![
                PrimOp::sigma(1),
                PrimOp::del(1),
                PrimOp::x(2, 1),
                PrimOp::sigma_inv(2),
                PrimOp::x(2, 1),
            ],
            vec![
                PrimOp::Theta(MultiIndex::new(vec![1, -2])),
                PrimOp::del(2),
                PrimOp::MulBy(MultiIndex::new(vec![2, 1])),
            ],
        ];
        for variant in [WeylVariant::Plus, WeylVariant::Minus] {
            for w in &words {
                let nf = normalize(w, variant, 2, &f);
                let direct = OpExpr::word(w);
                for beta in basis_monomials(AlgebraKind::DividedPower, 2, 6) {
                    let x = Element::monomial(AlgebraKind::DividedPower, beta.clone(), f).unwrap();
                    assert_eq!(nf.apply(&x), direct.apply(&x), "word {w:?} on x{beta}");
                }
            }
        }
    }

    #[test]
    fn prim_left_multiplication_matches_rewriter() {
        use rand::{Rng, SeedableRng};
        let f = g();
        let alphabet: Vec<PrimOp> = vec![
            PrimOp::x(2, 1),
            PrimOp::x(2, 2),
            PrimOp::del(1),
            PrimOp::del(2),
            PrimOp::sigma(1),
            PrimOp::sigma_inv(2),
            PrimOp::theta_unit(2, 1, false),
            PrimOp::theta_unit(2, 2, true),
        ];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for variant in [WeylVariant::Plus, WeylVariant::Minus] {
            for _ in 0..60 {
                let len = rng.gen_range(0..=5);
                let word: Vec<PrimOp> = (0..len)
                    .map(|_| alphabet[rng.gen_range(0..alphabet.len())].clone())
                    .collect();
                let base = normalize(&word, variant, 2, &f);
                for p in &alphabet {
                    let fast = base.mul_prim_left(p);
                    let mut extended = vec![p.clone()];
                    extended.extend(word.iter().cloned());
                    let slow = normalize(&extended, variant, 2, &f);
                    assert_eq!(fast, slow, "variant {variant}, p {p}, word {word:?}");
                }
            }
        }
    }

    #[test]
    fn strategies_agree() {
        let w = vec![
            PrimOp::del(1),
            PrimOp::del(2),
            PrimOp::x(2, 1),
            PrimOp::x(2, 2),
            PrimOp::del(1),
            PrimOp::x(2, 1),
        ];
        let f = g();
        let a = normalize_with_strategy(&w, WeylVariant::Plus, 2, &f, RewriteStrategy::Leftmost);
        let b = normalize_with_strategy(&w, WeylVariant::Plus, 2, &f, RewriteStrategy::Rightmost);
        let c = normalize_with_strategy(&w, WeylVariant::Plus, 2, &f, RewriteStrategy::Random(42));
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn display_round_structure() {
        let w = nf(&[PrimOp::del(1), PrimOp::x(2, 1)], WeylVariant::Plus);
        assert_eq!(w.to_string(), "s1^-1 + q*(d1; mul x(1,0))");
    }
}
