use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::poly;
use super::{HalfLaurent, Rational};
use crate::error::{Error, Result};

/// A rational function in `v = q^(1/2)` in canonical reduced form.
///
/// The denominator is a monic ordinary polynomial in `v` with nonzero
/// constant term (any power of `v` lives in the numerator), coprime to the
/// numerator. Zero is `0/1`. Equal values therefore have identical fields.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: HalfLaurent,
    den: HalfLaurent,
}

impl RatFunc {
    pub fn new(num: HalfLaurent, den: HalfLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: HalfLaurent, den: HalfLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.num_terms() == 1 {
            let (e, c) = den.terms().next().map(|(e, c)| (e, c.clone())).unwrap();
            return Self {
                num: num.shift(-e).scale(&(Rational::one() / c)),
                den: HalfLaurent::one(),
            };
        }
        let (shift_n, n) = num.to_dense();
        let (shift_d, d) = den.to_dense();
        let g = poly::gcd(&n, &d);
        let (n, d) = if poly::is_constant(&g) {
            (n, d)
        } else {
            (poly::div_rem(&n, &g).0, poly::div_rem(&d, &g).0)
        };
        let lead = d.last().cloned().unwrap();
        let inv = Rational::one() / lead;
        Self {
            num: HalfLaurent::from_dense(shift_n - shift_d, &n).scale(&inv),
            den: HalfLaurent::from_dense(0, &d).scale(&inv),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: HalfLaurent::zero(),
            den: HalfLaurent::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(HalfLaurent::one())
    }

    pub fn integer(c: i64) -> Self {
        Self::from(HalfLaurent::integer(c))
    }

    pub fn q() -> Self {
        Self::from(HalfLaurent::q())
    }

    pub fn numer(&self) -> &HalfLaurent {
        &self.num
    }

    pub fn denom(&self) -> &HalfLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this value equals, if its denominator is 1.
    pub fn as_laurent(&self) -> Option<&HalfLaurent> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, k: u32) -> Self {
        Self {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn powi(&self, k: i32) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            self.inv().map(|x| x.pow(k.unsigned_abs()))
        }
    }

    /// Substitute `q ↦ q^k`.
    pub fn compose_power(&self, k: u32) -> Self {
        Self::canonical(self.num.compose_power(k), self.den.compose_power(k))
    }

    /// Value at `v = 1`; fails on a pole.
    pub fn specialize_q1(&self) -> Result<Rational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval_at_one() / d)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::canonical(self.num.scale(c), self.den.clone())
    }

    pub fn mul_laurent(&self, p: &HalfLaurent) -> Self {
        if self.den.is_one() {
            return Self::from(&self.num * p);
        }
        Self::canonical(&self.num * p, self.den.clone())
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<HalfLaurent> for RatFunc {
    fn from(num: HalfLaurent) -> Self {
        Self {
            num,
            den: HalfLaurent::one(),
        }
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        Self::from(HalfLaurent::constant(c))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() == 1 {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        write!(f, "/({})", self.den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from(&self.num + &rhs.num);
            }
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::canonical(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational;

    fn qpoly(cs: &[i64]) -> RatFunc {
        RatFunc::from(HalfLaurent::from_q_coeffs(cs))
    }

    #[test]
    fn reduces_common_factor() {
        let f = qpoly(&[-1, 0, 1]).checked_div(&qpoly(&[-1, 1])).unwrap();
        assert_eq!(f, qpoly(&[1, 1]));
        assert!(f.denom().is_one());
    }

    #[test]
    fn self_quotient_is_one() {
        let x = qpoly(&[3, 0, -2]) * RatFunc::from(HalfLaurent::v_pow(-3));
        assert!(x.checked_div(&x).unwrap().is_one());
    }

    #[test]
    fn division_by_zero_is_distinct() {
        assert_eq!(
            qpoly(&[1]).checked_div(&RatFunc::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            RatFunc::new(HalfLaurent::one(), HalfLaurent::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn v_powers_move_to_numerator() {
        let f = RatFunc::new(HalfLaurent::one(), HalfLaurent::v_pow(3)).unwrap();
        assert_eq!(f.numer(), &HalfLaurent::v_pow(-3));
        assert!(f.denom().is_one());
        let g = RatFunc::new(HalfLaurent::one(), HalfLaurent::from_q_coeffs(&[0, 2, 2])).unwrap();
        assert_eq!(g.to_string(), "1/2q^{-1}/(1+q)");
    }

    #[test]
    fn compose_power_examples() {
        let f = qpoly(&[-1, 1]).inv().unwrap();
        assert_eq!(f.compose_power(2), qpoly(&[-1, 0, 1]).inv().unwrap());
        assert_eq!(RatFunc::q().compose_power(3), qpoly(&[0, 0, 0, 1]));
        assert_eq!(f.compose_power(1), f);
    }

    #[test]
    fn specialize_at_one() {
        assert_eq!(qpoly(&[0, 1, 1]).specialize_q1().unwrap(), rational(2));
        let f = qpoly(&[-1, 0, 1]).checked_div(&qpoly(&[-1, 1])).unwrap();
        assert_eq!(f.specialize_q1().unwrap(), rational(2));
        let pole = qpoly(&[-1, 1]).inv().unwrap();
        assert_eq!(pole.specialize_q1(), Err(Error::PoleAtOne));
    }
}
