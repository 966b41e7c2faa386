//! Gaussian elimination over exact fields (ℚ and ℚ(v)).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{RatFunc, Rational};

pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// `rhs` is nonzero.
    fn div(&self, rhs: &Self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("pivot is nonzero")
    }
}

pub type Matrix<F> = Vec<Vec<F>>;

/// Reduces `[a | rhs]` to `[I | a⁻¹ rhs]` in place; `a` must be square.
#[allow(clippy::needless_range_loop)]
fn eliminate<F: Field>(a: &mut Matrix<F>, rhs: &mut Matrix<F>, what: &str) -> Result<()> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Singular(what.to_string()))?;
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        let p = a[col][col].clone();
        if p != F::one() {
            for x in a[col].iter_mut() {
                *x = x.div(&p);
            }
            for x in rhs[col].iter_mut() {
                *x = x.div(&p);
            }
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let t = f.mul(&a[col][c]);
                a[r][c] = a[r][c].sub(&t);
            }
            for c in 0..rhs[col].len() {
                let t = f.mul(&rhs[col][c]);
                rhs[r][c] = rhs[r][c].sub(&t);
            }
        }
    }
    Ok(())
}

pub fn invert<F: Field>(a: &Matrix<F>, what: &str) -> Result<Matrix<F>> {
    let n = a.len();
    let mut work = a.clone();
    let mut id: Matrix<F> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { F::one() } else { F::zero() })
                .collect()
        })
        .collect();
    eliminate(&mut work, &mut id, what)?;
    Ok(id)
}

/// Solves `a x = b` for square nonsingular `a`.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F], what: &str) -> Result<Vec<F>> {
    let mut work = a.clone();
    let mut rhs: Matrix<F> = b.iter().map(|x| vec![x.clone()]).collect();
    eliminate(&mut work, &mut rhs, what)?;
    Ok(rhs.into_iter().map(|mut r| r.pop().unwrap()).collect())
}
