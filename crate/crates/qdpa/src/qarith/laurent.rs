//! Sparse Laurent polynomials in one variable over the rationals.
//!
//! Terms are kept sorted by exponent with no zero coefficients stored, so
//! structural equality is semantic equality. This is the carrier for the
//! symbolic side of the q-calculus: `[n]`, `[n]!`, Gaussian binomials, and
//! the numerators/denominators of generic-mode scalars.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

/// Convenience: a rational from an integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A Laurent polynomial with rational coefficients, canonically sparse.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    /// (exponent, coefficient) pairs, strictly ascending in exponent,
    /// coefficients nonzero.
    terms: Vec<(i64, BigRational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, BigRational::one())
    }

    pub fn monomial(exp: i64, coeff: BigRational) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: vec![(exp, coeff)],
            }
        }
    }

    /// Build from arbitrary (exponent, coefficient) pairs, combining like terms.
    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut terms: Vec<(i64, BigRational)> = pairs.into_iter().collect();
        terms.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, BigRational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(i64, BigRational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Lowest exponent; None for the zero polynomial.
    pub fn lowest_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn highest_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Coefficient of the highest-exponent term (zero for the zero poly).
    pub fn leading_coeff(&self) -> BigRational {
        self.terms
            .last()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<(i64, BigRational)> =
            self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        LaurentPoly { terms }
    }

    /// Evaluate at `v = 1` (sum of coefficients).
    pub fn eval_at_one(&self) -> BigRational {
        self.terms
            .iter()
            .fold(BigRational::zero(), |acc, (_, c)| acc + c)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division; `None` if `self` is not a multiple of `d`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Shift both to ordinary polynomials, divide, shift back.
        let sl = self.lowest_exp().unwrap();
        let dl = d.lowest_exp().unwrap();
        let a = self.shift(-sl);
        let b = d.shift(-dl);
        let (q, r) = a.poly_div_rem(&b);
        if r.is_zero() {
            Some(q.shift(sl - dl))
        } else {
            None
        }
    }

    /// Long division for polynomials with nonnegative exponents.
    /// Returns (quotient, remainder) with deg r < deg b.
    fn poly_div_rem(&self, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        debug_assert!(self.lowest_exp().map_or(true, |e| e >= 0));
        debug_assert!(b.lowest_exp().map_or(true, |e| e >= 0));
        let db = b.highest_exp().expect("division by zero polynomial");
        let lb = b.leading_coeff();
        let mut r = self.clone();
        let mut q = LaurentPoly::zero();
        while let Some(dr) = r.highest_exp() {
            if dr < db {
                break;
            }
            let t = LaurentPoly::monomial(dr - db, r.leading_coeff() / &lb);
            q = &q + &t;
            r = &r - &(&t * b);
        }
        (q, r)
    }

    /// Monic gcd (lowest exponent normalized to 0, leading coefficient 1).
    /// gcd(0, 0) = 0.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.normalized_monic();
        }
        if other.is_zero() {
            return self.normalized_monic();
        }
        let mut a = self.shift(-self.lowest_exp().unwrap());
        let mut b = other.shift(-other.lowest_exp().unwrap());
        while !b.is_zero() {
            let (_, mut r) = a.poly_div_rem(&b);
            if let Some(lo) = r.lowest_exp() {
                r = r.shift(-lo);
                // Keep remainders monic so coefficients stay small.
                let lc = r.leading_coeff();
                r = r.scale(&lc.recip());
            }
            a = b;
            b = r;
        }
        a.normalized_monic()
    }

    /// Normalize so the lowest exponent is 0 and the leading coefficient is 1.
    /// Returns zero unchanged.
    pub fn normalized_monic(&self) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let shifted = self.shift(-self.lowest_exp().unwrap());
        let lc = shifted.leading_coeff();
        shifted.scale(&lc.recip())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &rhs.terms[j];
            match ea.cmp(eb) {
                std::cmp::Ordering::Less => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*eb, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((*ea, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(rhs.terms[j..].iter().cloned());
        LaurentPoly { terms: out }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // Monomial fast paths cover most of the operator calculus.
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return rhs.shift(*e).scale_in_place(c);
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return self.shift(*e).scale_in_place(c);
        }
        let mut acc = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let part = LaurentPoly {
                terms: rhs.terms.iter().map(|(f, d)| (e + f, c * d)).collect(),
            };
            acc = &acc + &part;
        }
        acc
    }
}

impl LaurentPoly {
    fn scale_in_place(mut self, c: &BigRational) -> Self {
        if c.is_one() {
            return self;
        }
        for (_, k) in &mut self.terms {
            *k *= c;
        }
        self
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders like `q^2 + 1 + q^-2` or `2*q - 1/3`, descending exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let power = match e {
                0 => None,
                1 => Some("q".to_string()),
                _ => Some(format!("q^{e}")),
            };
            match power {
                None => write!(f, "{}", fmt_coeff(&abs))?,
                Some(p) => {
                    if abs.is_one() {
                        write!(f, "{p}")?;
                    } else {
                        write!(f, "{}*{}", fmt_coeff(&abs), p)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let a = LaurentPoly::from_terms([(2, rat(1)), (2, rat(-1)), (0, rat(3))]);
        assert_eq!(a, p(&[(0, 3)]));
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[(-1, 1), (1, 1)]); // q + q^-1
        let b = p(&[(-1, -1), (1, 1)]); // q - q^-1
        assert_eq!(&a + &b, p(&[(1, 2)]));
        assert_eq!(&a - &a, LaurentPoly::zero());
        // (q + q^-1)(q - q^-1) = q^2 - q^-2
        assert_eq!(&a * &b, p(&[(-2, -1), (2, 1)]));
        assert_eq!(a.pow(2), p(&[(-2, 1), (0, 2), (2, 1)]));
    }

    #[test]
    fn division_and_gcd() {
        // (v^3 - v^-3) / (v - v^-1) = v^2 + 1 + v^-2
        let n = p(&[(-3, -1), (3, 1)]);
        let d = p(&[(-1, -1), (1, 1)]);
        assert_eq!(n.div_exact(&d), Some(p(&[(-2, 1), (0, 1), (2, 1)])));
        assert_eq!(p(&[(0, 1), (1, 1)]).div_exact(&p(&[(0, -1), (1, 1)])), None);

        // n*d = [3]*(v - v^-1)^2 and d^2 = (v - v^-1)^2, so gcd is the square.
        let g = (&n * &d).gcd(&d.pow(2));
        assert_eq!(g, d.pow(2).normalized_monic());
        assert_eq!(g, p(&[(0, 1), (2, -2), (4, 1)]));
        assert_eq!(g.lowest_exp(), Some(0));
        assert!(g.leading_coeff().is_one());
    }

    #[test]
    fn bar_involution() {
        let a = p(&[(-2, 1), (0, 3), (5, -2)]);
        assert_eq!(a.bar().bar(), a);
        assert_eq!(a.bar(), p(&[(2, 1), (0, 3), (-5, -2)]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[(-2, 1), (0, 1), (2, 1)]).to_string(), "q^2 + 1 + q^-2");
        assert_eq!(p(&[(1, 2), (0, -1)]).to_string(), "2*q - 1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(1, -1)]).to_string(), "-q");
    }
}
