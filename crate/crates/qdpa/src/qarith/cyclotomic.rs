//! Exact arithmetic in the cyclotomic quotient `Q[q]/Phi_m(q)`.
//!
//! `Phi_m` is computed by recursive division of `q^m - 1` by the `Phi_d` for
//! proper divisors `d | m`; no table. Elements are dense coefficient vectors
//! of length `deg Phi_m`, always reduced, so equality is coefficient-wise.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num::{BigRational, One, Signed, Zero};

use super::laurent::rat;

/// Degree and monic coefficients (ascending, length deg+1) of `Phi_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicModulus {
    pub order: u32,
    pub coeffs: Vec<BigRational>,
}

impl CyclotomicModulus {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

thread_local! {
    static MODULUS_CACHE: RefCell<HashMap<u32, Rc<CyclotomicModulus>>> =
        RefCell::new(HashMap::new());
}

fn divisors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Dense ascending-coefficient division by a monic divisor: (quotient, remainder).
/// Both outputs have length >= 1.
fn div_rem_monic(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    debug_assert!(b.last().map(|c| c.is_one()).unwrap_or(false));
    let db = b.len() - 1;
    let mut r: Vec<BigRational> = a.to_vec();
    if r.is_empty() {
        r.push(BigRational::zero());
    }
    if r.len() <= db {
        return (vec![BigRational::zero()], r);
    }
    let qlen = r.len() - db;
    let mut q = vec![BigRational::zero(); qlen];
    for pos in (0..qlen).rev() {
        let lead = r[pos + db].clone();
        if lead.is_zero() {
            continue;
        }
        q[pos] = lead.clone();
        for (k, bc) in b.iter().enumerate() {
            let v = &r[pos + k] - &lead * bc;
            r[pos + k] = v;
        }
    }
    r.truncate(db.max(1));
    while r.last().map(|c| c.is_zero()).unwrap_or(false) && r.len() > 1 {
        r.pop();
    }
    (q, r)
}

fn compute_phi(m: u32) -> CyclotomicModulus {
    assert!(m >= 1);
    if m == 1 {
        return CyclotomicModulus {
            order: 1,
            coeffs: vec![rat(-1), rat(1)],
        };
    }
    // q^m - 1 divided by Phi_d for all proper divisors d.
    let mut poly = vec![BigRational::zero(); (m + 1) as usize];
    poly[0] = rat(-1);
    poly[m as usize] = rat(1);
    for d in divisors(m) {
        if d == m {
            continue;
        }
        let phi_d = cyclotomic_modulus(d);
        let (q, r) = div_rem_monic(&poly, &phi_d.coeffs);
        debug_assert!(r.iter().all(|c| c.is_zero()));
        poly = q;
    }
    while poly.last().map(|c| c.is_zero()).unwrap_or(false) && poly.len() > 1 {
        poly.pop();
    }
    CyclotomicModulus { order: m, coeffs: poly }
}

/// The m-th cyclotomic polynomial, cached per thread.
pub fn cyclotomic_modulus(m: u32) -> Rc<CyclotomicModulus> {
    MODULUS_CACHE.with(|cache| {
        if let Some(rc) = cache.borrow().get(&m) {
            return rc.clone();
        }
        let rc = Rc::new(compute_phi(m));
        cache.borrow_mut().insert(m, rc.clone());
        rc
    })
}

/// An element of `Q[q]/Phi_m(q)`; `coeffs.len() == deg Phi_m`, reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycElem {
    pub order: u32,
    coeffs: Vec<BigRational>,
}

impl CycElem {
    pub fn zero(order: u32) -> Self {
        let deg = cyclotomic_modulus(order).degree();
        CycElem {
            order,
            coeffs: vec![BigRational::zero(); deg],
        }
    }

    pub fn from_rational(order: u32, c: BigRational) -> Self {
        let mut z = Self::zero(order);
        if !z.coeffs.is_empty() {
            z.coeffs[0] = c;
        }
        z
    }

    /// `q^k` for any integer k (negative exponents via q^m = 1).
    pub fn q_power(order: u32, k: i64) -> Self {
        let m = order as i64;
        let e = k.rem_euclid(m) as usize;
        let mut dense = vec![BigRational::zero(); e + 1];
        dense[e] = BigRational::one();
        Self::reduce(order, dense)
    }

    /// Reduce a dense ascending-coefficient polynomial mod `Phi_order`.
    pub fn reduce(order: u32, dense: Vec<BigRational>) -> Self {
        let modulus = cyclotomic_modulus(order);
        let deg = modulus.degree();
        if dense.len() <= deg {
            let mut coeffs = dense;
            coeffs.resize(deg, BigRational::zero());
            return CycElem { order, coeffs };
        }
        let (_, mut r) = div_rem_monic(&dense, &modulus.coeffs);
        r.resize(deg, BigRational::zero());
        CycElem { order, coeffs: r }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() })
    }

    fn assert_same(&self, other: &CycElem) {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
    }

    pub fn add(&self, other: &CycElem) -> CycElem {
        self.assert_same(other);
        CycElem {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> CycElem {
        CycElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &CycElem) -> CycElem {
        self.assert_same(other);
        let n = self.coeffs.len();
        if n == 0 {
            return self.clone();
        }
        let mut dense = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let v = &dense[i + j] + a * b;
                dense[i + j] = v;
            }
        }
        Self::reduce(self.order, dense)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_m`; `None` for zero. Nonzero elements are always invertible
    /// because `Phi_m` is irreducible over Q.
    pub fn inv(&self) -> Option<CycElem> {
        if self.is_zero() {
            return None;
        }
        let modulus = cyclotomic_modulus(self.order);
        // Extended Euclid on dense vectors: r0 = Phi, r1 = self.
        let trim = |mut v: Vec<BigRational>| -> Vec<BigRational> {
            while v.last().map(|c| c.is_zero()).unwrap_or(false) && v.len() > 1 {
                v.pop();
            }
            v
        };
        let mut r0 = modulus.coeffs.clone();
        let mut r1 = trim(self.coeffs.clone());
        let mut t0: Vec<BigRational> = vec![BigRational::zero()];
        let mut t1: Vec<BigRational> = vec![BigRational::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            // Make r1 monic for a clean division step.
            let lc = r1.last().unwrap().clone();
            if !lc.is_one() {
                for c in &mut r1 {
                    *c = &*c / &lc;
                }
                for c in &mut t1 {
                    *c = &*c / &lc;
                }
            }
            let (q, r) = div_rem_monic(&r0, &r1);
            // t2 = t0 - q * t1
            let mut qt = vec![BigRational::zero(); q.len() + t1.len() - 1];
            for (i, a) in q.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in t1.iter().enumerate() {
                    let v = &qt[i + j] + a * b;
                    qt[i + j] = v;
                }
            }
            let len = t0.len().max(qt.len());
            let mut t2 = vec![BigRational::zero(); len];
            for (i, c) in t0.iter().enumerate() {
                t2[i] = c.clone();
            }
            for (i, c) in qt.iter().enumerate() {
                let v = &t2[i] - c;
                t2[i] = v;
            }
            r0 = r1;
            r1 = trim(r);
            t0 = t1;
            t1 = trim(t2);
        }
        // r0 is the gcd, a nonzero constant (Phi_m irreducible, self != 0).
        debug_assert_eq!(r0.len(), 1);
        let g = r0[0].clone();
        let inv: Vec<BigRational> = t0.iter().map(|c| c / &g).collect();
        Some(Self::reduce(self.order, inv))
    }
}

impl fmt::Display for CycElem {
    /// Rendered as a Laurent-style polynomial in `q` of degree < deg Phi_m.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero: Vec<(usize, &BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if nonzero.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in nonzero.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -*c } else { (*c).clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_str = if abs.denom().is_one() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            match e {
                0 => write!(f, "{coeff_str}")?,
                1 => {
                    if abs.is_one() {
                        write!(f, "q")?
                    } else {
                        write!(f, "{coeff_str}*q")?
                    }
                }
                _ => {
                    if abs.is_one() {
                        write!(f, "q^{e}")?
                    } else {
                        write!(f, "{coeff_str}*q^{e}")?
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

    fn phi_ints(m: u32) -> Vec<i64> {
        cyclotomic_modulus(m)
            .coeffs
            .iter()
            .map(|c| {
                assert!(c.denom().is_one());
                c.numer().to_string().parse().unwrap()
            })
            .collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(phi_ints(1), vec![-1, 1]);
        assert_eq!(phi_ints(2), vec![1, 1]);
        assert_eq!(phi_ints(3), vec![1, 1, 1]);
        assert_eq!(phi_ints(4), vec![1, 0, 1]);
        assert_eq!(phi_ints(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(phi_ints(6), vec![1, -1, 1]);
        assert_eq!(phi_ints(10), vec![1, -1, 1, -1, 1]);
        assert_eq!(phi_ints(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn q_has_exact_order() {
        for m in [3u32, 4, 5, 6, 8, 10, 12] {
            let q = CycElem::q_power(m, 1);
            let mut p = CycElem::from_rational(m, rat(1));
            for k in 1..m {
                p = p.mul(&q);
                assert!(!p.is_one(), "q^{k} = 1 at order {m}");
            }
            p = p.mul(&q);
            assert!(p.is_one(), "q^{m} != 1 at order {m}");
        }
    }

    #[test]
    fn inverses() {
        for m in [3u32, 5, 6, 10] {
            let a = CycElem::q_power(m, 1).add(&CycElem::from_rational(m, rat(2)));
            let inv = a.inv().unwrap();
            assert!(a.mul(&inv).is_one());
            assert_eq!(CycElem::zero(m).inv(), None);
            // q^-1 really is the inverse of q
            let q = CycElem::q_power(m, 1);
            assert!(q.mul(&CycElem::q_power(m, -1)).is_one());
        }
    }
}
