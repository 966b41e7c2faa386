//! Dense univariate polynomials over ℚ, used only for gcd and exact division.
//! Index i holds the coefficient of v^i; vectors are kept trimmed.

use num_traits::{One, Zero};

use super::Rational;

pub(crate) type Dense = Vec<Rational>;

pub(crate) fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn make_monic(p: &mut Dense) {
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            for c in p.iter_mut() {
                *c = &*c / &lead;
            }
        }
    }
}

/// Returns (quotient, remainder) of a / b. Panics if b is zero.
pub(crate) fn div_rem(a: &Dense, b: &Dense) -> (Dense, Dense) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = a.clone();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let factor = rem.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            let t = &factor * c;
            rem[shift + i] -= t;
        }
        quot[shift] = factor;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Monic gcd by the Euclidean algorithm. gcd(0, 0) is the empty polynomial.
pub(crate) fn gcd(a: &Dense, b: &Dense) -> Dense {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, mut r) = div_rem(&x, &y);
        make_monic(&mut r);
        x = y;
        y = r;
    }
    make_monic(&mut x);
    x
}

pub(crate) fn is_constant(p: &Dense) -> bool {
    p.len() <= 1
}
