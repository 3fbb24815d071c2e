//! Multi-indices in `Z^n`, the `*` pairing, the bicharacter, and the weight
//! inner product.
//!
//! Axes are 1-based throughout the public API, matching the usual notation
//! `x_1, ..., x_n` and the CLI names `s1`, `d1`, `e1`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::qarith::{Scalar, ScalarField};

/// An element of `Z^n`: exponent vector of a basis monomial, a weight, or a
/// bicharacter argument.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<i64>);

impl MultiIndex {
    pub fn new(entries: Vec<i64>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// The basis vector `eps_i` (1-based axis).
    pub fn unit(n: usize, i: usize) -> Self {
        assert!(1 <= i && i <= n, "axis {i} out of range for dimension {n}");
        let mut v = vec![0; n];
        v[i - 1] = 1;
        MultiIndex(v)
    }

    /// The simple root `alpha_i = eps_i - eps_{i+1}` (1-based, `i < n`).
    pub fn simple_root(n: usize, i: usize) -> Self {
        assert!(1 <= i && i < n, "simple root index {i} out of range");
        let mut v = vec![0; n];
        v[i - 1] = 1;
        v[i] = -1;
        MultiIndex(v)
    }

    /// The fundamental weight `lambda_i = eps_1 + ... + eps_i`, with
    /// `lambda_0 = 0`.
    pub fn fundamental_weight(n: usize, i: usize) -> Self {
        assert!(i <= n, "weight index {i} out of range for dimension {n}");
        let mut v = vec![0; n];
        for e in v.iter_mut().take(i) {
            *e = 1;
        }
        MultiIndex(v)
    }

    /// The top restricted exponent `tau = (l-1, ..., l-1)`.
    pub fn tau(n: usize, l: u32) -> Self {
        MultiIndex(vec![l as i64 - 1; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Entry at a 1-based axis.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn set(&mut self, i: usize, v: i64) {
        self.0[i - 1] = v;
    }

    /// Total degree `|alpha|`.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &MultiIndex) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn assert_same_dim(&self, other: &MultiIndex) {
        assert_eq!(
            self.0.len(),
            other.0.len(),
            "multi-index dimension mismatch"
        );
    }
}

impl Add for &MultiIndex {
    type Output = MultiIndex;
    fn add(self, rhs: &MultiIndex) -> MultiIndex {
        self.assert_same_dim(rhs);
        MultiIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &MultiIndex {
    type Output = MultiIndex;
    fn sub(self, rhs: &MultiIndex) -> MultiIndex {
        self.assert_same_dim(rhs);
        MultiIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &MultiIndex {
    type Output = MultiIndex;
    fn neg(self) -> MultiIndex {
        MultiIndex(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// The pairing `alpha * beta = sum_{i > j} alpha_i beta_j`.
pub fn star(alpha: &MultiIndex, beta: &MultiIndex) -> i64 {
    alpha.assert_same_dim(beta);
    let a = alpha.entries();
    let b = beta.entries();
    let mut acc = 0;
    let mut prefix = 0; // sum of beta_1..beta_{i-1}
    for i in 0..a.len() {
        acc += a[i] * prefix;
        prefix += b[i];
    }
    acc
}

/// The bicharacter `theta(alpha, beta) = q^{alpha*beta - beta*alpha}`.
pub fn theta(alpha: &MultiIndex, beta: &MultiIndex, field: &ScalarField) -> Scalar {
    field.q_power(theta_exponent(alpha, beta))
}

/// The exponent `alpha*beta - beta*alpha` of the bicharacter.
pub fn theta_exponent(alpha: &MultiIndex, beta: &MultiIndex) -> i64 {
    star(alpha, beta) - star(beta, alpha)
}

/// The standard inner product `<alpha, beta>` (weight pairing).
pub fn inner(alpha: &MultiIndex, beta: &MultiIndex) -> i64 {
    alpha.assert_same_dim(beta);
    alpha
        .entries()
        .iter()
        .zip(beta.entries())
        .map(|(a, b)| a * b)
        .sum()
}

/// All `alpha >= 0` with `|alpha| = degree` and `alpha_i <= max_entry`
/// (use `i64::MAX` for no bound), in descending lexicographic order, so
/// `(s, 0, ..., 0)` comes first.
pub fn monomials_of_degree(n: usize, degree: i64, max_entry: i64) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(out: &mut Vec<MultiIndex>, cur: &mut Vec<i64>, pos: usize, left: i64, cap: i64) {
        if pos + 1 == cur.len() {
            if left <= cap {
                cur[pos] = left;
                out.push(MultiIndex::new(cur.clone()));
            }
            return;
        }
        let hi = left.min(cap);
        for v in (0..=hi).rev() {
            cur[pos] = v;
            rec(out, cur, pos + 1, left - v, cap);
        }
    }
    if n == 0 {
        if degree == 0 {
            out.push(MultiIndex::new(vec![]));
        }
        return out;
    }
    rec(&mut out, &mut cur, 0, degree, max_entry);
    out
}

/// All monomials with total degree `<= bound` (entry cap as above), degree
/// ascending, descending lex within a degree.
pub fn monomials_up_to_degree(n: usize, bound: i64, max_entry: i64) -> Vec<MultiIndex> {
    (0..=bound)
        .flat_map(|s| monomials_of_degree(n, s, max_entry))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::qint;

    fn mi(v: &[i64]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn star_closed_forms() {
        // eps_i * beta = sum_{s < i} beta_s ; beta * eps_i = sum_{s > i} beta_s
        let beta = mi(&[4, 5, 6]);
        for i in 1..=3 {
            let e = MultiIndex::unit(3, i);
            let lhs = star(&e, &beta);
            let expect: i64 = beta.entries()[..i - 1].iter().sum();
            assert_eq!(lhs, expect);
            let rhs = star(&beta, &e);
            let expect: i64 = beta.entries()[i..].iter().sum();
            assert_eq!(rhs, expect);
        }
        // alpha_i * beta = -beta_i ; beta * alpha_i = beta_{i+1}
        for i in 1..3 {
            let a = MultiIndex::simple_root(3, i);
            assert_eq!(star(&a, &beta), -beta.get(i));
            assert_eq!(star(&beta, &a), beta.get(i + 1));
        }
        assert_eq!(star(&MultiIndex::unit(2, 2), &MultiIndex::unit(2, 1)), 1);
        assert_eq!(star(&MultiIndex::unit(2, 1), &MultiIndex::unit(2, 2)), 0);
        // brute-force double sum: 2*4 + 3*4 + 3*5 = 35
        assert_eq!(star(&mi(&[1, 2, 3]), &mi(&[4, 5, 6])), 35);
    }

    #[test]
    fn theta_values() {
        let g = ScalarField::Generic;
        let e1 = MultiIndex::unit(2, 1);
        let e2 = MultiIndex::unit(2, 2);
        assert_eq!(theta(&e1, &e2, &g), g.q_power(-1));
        assert_eq!(theta(&e2, &e1, &g), g.q_power(1));
        assert!(theta(&e1, &e1, &g).is_one());
        assert_eq!(theta(&mi(&[1, 2]), &mi(&[3, 4]), &g), g.q_power(2));
    }

    #[test]
    fn inner_values() {
        let e1 = MultiIndex::unit(3, 1);
        assert_eq!(inner(&e1, &e1), 1);
        assert_eq!(inner(&e1, &MultiIndex::unit(3, 2)), 0);
        let l2 = MultiIndex::fundamental_weight(3, 2);
        let a1 = MultiIndex::simple_root(3, 1);
        assert_eq!(l2, mi(&[1, 1, 0]));
        assert_eq!(a1, mi(&[1, -1, 0]));
        assert_eq!(inner(&l2, &a1), 0);
    }

    #[test]
    fn theta_is_a_scalar_power() {
        let f = ScalarField::root_of_unity(6).unwrap();
        let a = mi(&[1, 2]);
        let b = mi(&[3, 4]);
        assert_eq!(theta(&a, &b, &f), f.q_power(2));
        let _ = qint(2, &f);
    }

    #[test]
    fn monomial_enumeration() {
        let m = monomials_of_degree(2, 3, i64::MAX);
        assert_eq!(
            m,
            vec![mi(&[3, 0]), mi(&[2, 1]), mi(&[1, 2]), mi(&[0, 3])]
        );
        // restricted cap
        let m = monomials_of_degree(2, 3, 2);
        assert_eq!(m, vec![mi(&[2, 1]), mi(&[1, 2])]);
        assert_eq!(monomials_up_to_degree(3, 6, i64::MAX).len(), 84);
        assert_eq!(monomials_up_to_degree(2, 100, 2).len(), 9);
    }
}
