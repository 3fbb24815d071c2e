//! q-arithmetic laws: base cases, the Pascal recursion, symmetry,
//! bar-invariance, the Gaussian generating function, the two computation
//! routes, field axioms, and the root-of-unity digit calculus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::qarith::{
    binom, char_q, digit_recovery_violations, digits, lusztig_factorization, qbinom,
    qbinom_poly, qbinom_product_poly, qfact, qint, Scalar, ScalarField,
};

use super::{SuiteParams, SuiteReport};

const S: &str = "qarith";

pub fn suite(params: &SuiteParams) -> SuiteReport {
    let mut report = SuiteReport::new();
    let f = &params.field;
    let top = params.degree.max(8).min(12);

    // base cases
    let mut cx = None;
    if !qint(0, f).is_zero() || !qint(1, f).is_one() || !qfact(0, f).is_one() {
        cx = Some("base case".into());
    }
    for n in 1..=6 {
        if qint(-n, f) != -&qint(n, f) {
            cx = Some(format!("[-{n}] != -[{n}]"));
        }
    }
    report.push(S, "q-integer and q-factorial base cases", "qint-base-cases", cx);

    // Pascal recursion
    let mut cx = None;
    'pascal: for n in 1..=top {
        for r in 1..=n {
            let lhs = qbinom(n, r, f);
            let rhs = &(&f.q_power(r - n) * &qbinom(n - 1, r - 1, f))
                + &(&f.q_power(r) * &qbinom(n - 1, r, f));
            if lhs != rhs {
                cx = Some(format!("(n,r)=({n},{r})"));
                break 'pascal;
            }
        }
    }
    report.push(S, "Pascal recursion for Gaussian binomials", "qbinom-pascal-recursion", cx);

    // symmetry
    let mut cx = None;
    for m in 0..=top {
        for r in 0..=m {
            if qbinom(m, r, f) != qbinom(m, m - r, f) {
                cx = Some(format!("(m,r)=({m},{r})"));
            }
        }
    }
    report.push(S, "symmetry under r -> m - r", "qbinom-symmetry", cx);

    // bar-invariance
    let mut cx = None;
    for m in 0..=top {
        for r in 0..=m {
            let b = qbinom(m, r, f);
            if b.bar() != b {
                cx = Some(format!("(m,r)=({m},{r})"));
            }
        }
    }
    report.push(S, "invariance under q -> q^-1", "qbinom-bar-invariance", cx);

    // generating function: prod_{i=0}^{n-1} (1 + q^{2i} x) as a vector of
    // x-coefficients, against q^{(n-1)r} {n r}
    let mut cx = None;
    'genfun: for n in 1..=top {
        let mut coeffs: Vec<Scalar> = vec![f.one()];
        for i in 0..n {
            // multiply by (1 + q^{2i} x)
            let mut next = vec![f.zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k] = &next[k] + c;
                next[k + 1] = &next[k + 1] + &(c * &f.q_power(2 * i));
            }
            coeffs = next;
        }
        for (r, c) in coeffs.iter().enumerate() {
            let expect = &f.q_power((n - 1) * r as i64) * &qbinom(n, r as i64, f);
            if *c != expect {
                cx = Some(format!("n={n}, coefficient of x^{r}"));
                break 'genfun;
            }
        }
    }
    report.push(
        S,
        "product generating function for Gaussian binomials",
        "qbinom-generating-function",
        cx,
    );

    // the Pascal route and the product-formula route agree symbolically
    let mut cx = None;
    for m in 0..=top {
        for r in 0..=m {
            if qbinom_poly(m, r) != qbinom_product_poly(m, r) {
                cx = Some(format!("(m,r)=({m},{r})"));
            }
        }
    }
    report.push(S, "Pascal route equals product-formula route", "qbinom-two-routes", cx);

    // negative arguments
    let mut cx = None;
    for m in -8..0i64 {
        for r in 0..=6i64 {
            let lhs = qbinom(m, r, f);
            let sign = if r % 2 == 0 { 1 } else { -1 };
            let rhs = &f.from_int(sign) * &qbinom(-m + r - 1, r, f);
            if lhs != rhs {
                cx = Some(format!("(m,r)=({m},{r})"));
            }
        }
        if !qbinom(m, -1, f).is_zero() {
            cx = Some("(m,-1)".to_string());
        }
    }
    report.push(S, "negative-argument sign and zero rules", "qbinom-negative-arguments", cx);

    // field axioms on random triples
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let random_scalar = |rng: &mut ChaCha8Rng| -> Scalar {
        let mut acc = f.zero();
        for _ in 0..3 {
            let c = rng.gen_range(-4..=4i64);
            let e = rng.gen_range(-4..=4i64);
            acc = &acc + &(&f.from_int(c) * &f.q_power(e));
        }
        acc
    };
    let mut cx = None;
    for trial in 0..100 {
        let a = random_scalar(&mut rng);
        let b = random_scalar(&mut rng);
        let c = random_scalar(&mut rng);
        let assoc = (&(&a * &b) * &c) == (&a * &(&b * &c));
        let comm = (&a * &b) == (&b * &a) && (&a + &b) == (&b + &a);
        let dist = (&a * &(&b + &c)) == (&(&a * &b) + &(&a * &c));
        let add_assoc = (&(&a + &b) + &c) == (&a + &(&b + &c));
        if !(assoc && comm && dist && add_assoc) {
            cx = Some(format!("trial {trial}"));
            break;
        }
        if !a.is_zero() {
            let quot = &a / &a;
            if !quot.is_one() {
                cx = Some(format!("a/a != 1 at trial {trial}"));
                break;
            }
        }
    }
    report.push(S, "field axioms on random triples", "scalar-field-axioms", cx);

    // root-of-unity digit calculus
    match f {
        ScalarField::Generic => {
            report.skip(
                S,
                "digit factorization at char(q) = l",
                "qbinom-digit-factorization",
                "needs a root of unity",
            );
        }
        ScalarField::RootOfUnity(m) => {
            let l = char_q(f) as i64;
            let expected = if m % 2 == 1 { *m } else { m / 2 };
            let cx = if char_q(f) == expected {
                None
            } else {
                Some(format!("char = {} at order {m}", char_q(f)))
            };
            report.push(S, "char(q) from the order of q", "char-q-order-relation", cx);

            if l >= 3 {
                // the digit factorization: exact as stated when q^l = 1, and
                // with the parity sign (-1)^{(r(m-r) - r0(m0-r0))/l} at
                // primitive 2l-th roots
                let signed = !f.q_power_is_one(l);
                let mut cx = None;
                'digits: for mm in 0..=30i64 {
                    for r in 0..=mm {
                        let base = lusztig_factorization(mm, r, l, f).unwrap();
                        let expect = if signed {
                            let (m0, _) = digits(mm, l);
                            let (r0, _) = digits(r, l);
                            let e = (r * (mm - r) - r0 * (m0 - r0)) / l;
                            if e % 2 == 0 {
                                base
                            } else {
                                -&base
                            }
                        } else {
                            base
                        };
                        if qbinom(mm, r, f) != expect {
                            cx = Some(format!("(m,r)=({mm},{r})"));
                            break 'digits;
                        }
                    }
                }
                let name = if signed {
                    "digit factorization with the 2l-root parity sign"
                } else {
                    "digit factorization at char(q) = l"
                };
                report.push(S, name, "qbinom-digit-factorization", cx);

                // the column m -> qbinom(m, l)
                let mut cx = None;
                for mm in -10..=30i64 {
                    let value = qbinom(mm, l, f);
                    let (_, m1) = digits(mm, l);
                    let expect = if f.q_power_is_one(l) {
                        if m1 >= 0 {
                            f.from_int(m1)
                        } else {
                            let s = if l % 2 == 0 { -1 } else { 1 };
                            f.from_int(s * m1)
                        }
                    } else if mm >= 0 {
                        // q^l = -1: the sign-corrected column value
                        let s = if (mm + 1) % 2 == 0 { 1 } else { -1 };
                        f.from_int(s * m1)
                    } else {
                        continue;
                    };
                    if value != expect {
                        cx = Some(format!("m={mm}"));
                    }
                }
                report.push(S, "the qbinom(m, l) digit column", "qbinom-digit-column", cx);

                // recovery of m from q^m and qbinom(m, l)
                let viol = digit_recovery_violations(l, f, 20);
                let cx = if viol.is_empty() {
                    None
                } else {
                    Some(format!("{:?}", &viol[..viol.len().min(3)]))
                };
                report.push(S, "digit recovery predicate", "qbinom-digit-recovery", cx);

                // cross-check the ordinary binomial helper against factorials
                let mut cx = None;
                for a in 0..=10i64 {
                    for b in 0..=a {
                        let fact = |k: i64| (1..=k).product::<i64>().max(1);
                        if binom(a, b) != fact(a) / (fact(b) * fact(a - b)) {
                            cx = Some(format!("C({a},{b})"));
                        }
                    }
                }
                report.push(S, "ordinary binomial helper", "binomial-helper", cx);
            } else {
                report.skip(
                    S,
                    "digit factorization at char(q) = l",
                    "qbinom-digit-factorization",
                    format!("char(q) = {l} < 3"),
                );
            }
        }
    }

    report
}
