//! Lattice laws: bilinearity and closed forms of the `*` pairing, the
//! bicharacter axioms, and the 2-cocycle identity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::{inner, star, theta, MultiIndex};

use super::{SuiteParams, SuiteReport};

const S: &str = "lattice";

fn random_index(rng: &mut ChaCha8Rng, n: usize) -> MultiIndex {
    MultiIndex::new((0..n).map(|_| rng.gen_range(-5..=5)).collect())
}

pub fn suite(params: &SuiteParams) -> SuiteReport {
    let mut report = SuiteReport::new();
    let f = &params.field;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let trials = 1000usize;
    let dims: Vec<usize> = (1..=params.n.max(4).min(4)).collect();

    // star bilinearity
    let mut cx = None;
    for t in 0..trials {
        let n = dims[t % dims.len()];
        let a = random_index(&mut rng, n);
        let b = random_index(&mut rng, n);
        let c = random_index(&mut rng, n);
        if star(&(&a + &b), &c) != star(&a, &c) + star(&b, &c)
            || star(&a, &(&b + &c)) != star(&a, &b) + star(&a, &c)
        {
            cx = Some(format!("a={a}, b={b}, c={c}"));
            break;
        }
    }
    report.push(S, "distributivity of the star pairing", "star-distributive", cx);

    // closed forms on unit vectors and simple roots
    let mut cx = None;
    for t in 0..200 {
        let n = dims[t % dims.len()];
        let b = random_index(&mut rng, n);
        for i in 1..=n {
            let e = MultiIndex::unit(n, i);
            if star(&e, &b) != b.entries()[..i - 1].iter().sum::<i64>()
                || star(&b, &e) != b.entries()[i..].iter().sum::<i64>()
            {
                cx = Some(format!("eps_{i} with b={b}"));
            }
        }
        for i in 1..n {
            let a = MultiIndex::simple_root(n, i);
            if star(&a, &b) != -b.get(i) || star(&b, &a) != b.get(i + 1) {
                cx = Some(format!("alpha_{i} with b={b}"));
            }
        }
    }
    report.push(S, "closed forms of star on units and simple roots", "star-closed-forms", cx);

    // bicharacter axioms
    let mut cx = None;
    for t in 0..trials {
        let n = dims[t % dims.len()];
        let a = random_index(&mut rng, n);
        let b = random_index(&mut rng, n);
        let c = random_index(&mut rng, n);
        let zero = MultiIndex::zero(n);
        let mult_left = theta(&(&a + &b), &c, f) == &theta(&a, &c, f) * &theta(&b, &c, f);
        let mult_right = theta(&a, &(&b + &c), f) == &theta(&a, &b, f) * &theta(&a, &c, f);
        let unit = theta(&a, &zero, f).is_one() && theta(&zero, &a, f).is_one();
        let antisym = (&theta(&a, &b, f) * &theta(&b, &a, f)).is_one()
            && theta(&a, &a, f).is_one();
        if !(mult_left && mult_right && unit && antisym) {
            cx = Some(format!("a={a}, b={b}, c={c}"));
            break;
        }
    }
    report.push(S, "bicharacter axioms of theta", "theta-bicharacter-axioms", cx);

    // 2-cocycle identity
    let mut cx = None;
    for t in 0..trials {
        let n = dims[t % dims.len()];
        let a = random_index(&mut rng, n);
        let b = random_index(&mut rng, n);
        let c = random_index(&mut rng, n);
        let lhs = &theta(&a, &b, f) * &theta(&(&a + &b), &c, f);
        let rhs = &theta(&b, &c, f) * &theta(&a, &(&b + &c), f);
        if lhs != rhs {
            cx = Some(format!("a={a}, b={b}, c={c}"));
            break;
        }
    }
    report.push(S, "2-cocycle identity for theta", "theta-two-cocycle", cx);

    // weight pairing sanity
    let mut cx = None;
    let n = params.n.max(2);
    for i in 1..=n {
        for j in 1..=n {
            let d = inner(&MultiIndex::unit(n, i), &MultiIndex::unit(n, j));
            if d != i64::from(i == j) {
                cx = Some(format!("<eps_{i}, eps_{j}> = {d}"));
            }
        }
    }
    report.push(S, "orthonormality of the weight pairing", "inner-orthonormal", cx);

    report
}
