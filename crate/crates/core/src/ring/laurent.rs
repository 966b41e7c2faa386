use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::poly::{self, Dense};
use super::{rational, Rational};

/// A Laurent polynomial in `v = q^(1/2)` with rational coefficients.
///
/// Keys are exponents of `v`; zero coefficients are never stored, so the
/// zero polynomial is the empty map and structural equality is value equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct HalfLaurent {
    coeffs: BTreeMap<i32, Rational>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(rational(c))
    }

    /// `c · v^exp`.
    pub fn monomial(c: Rational, exp: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// `v^exp`.
    pub fn v_pow(exp: i32) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// `q = v²`.
    pub fn q() -> Self {
        Self::v_pow(2)
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Self::v_pow(2 * k)
    }

    /// Ordinary polynomial in `q` from integer coefficients, lowest degree first.
    pub fn from_q_coeffs(cs: &[i64]) -> Self {
        cs.iter()
            .enumerate()
            .map(|(i, &c)| Self::monomial(rational(c), 2 * i as i32))
            .fold(Self::zero(), |acc, t| acc + t)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    fn add_term(&mut self, exp: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Substitute `q ↦ q^k`, i.e. multiply every exponent of `v` by `k`.
    pub fn compose_power(&self, k: u32) -> Self {
        assert!(k >= 1, "compose_power needs k >= 1");
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e * k as i32, c.clone()))
                .collect(),
        }
    }

    /// The bar involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Value at `v = 1`.
    pub fn eval_at_one(&self) -> Rational {
        self.coeffs
            .values()
            .fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Keep only the terms whose `v`-exponent satisfies `keep`.
    pub fn filter_exponents(&self, keep: impl Fn(i32) -> bool) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&e, _)| keep(e))
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// True for ordinary polynomials in `q` (even, nonnegative `v`-exponents)
    /// whose coefficients are nonnegative integers.
    pub fn is_nonneg_integer_q_polynomial(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&e, c)| e >= 0 && e % 2 == 0 && c.is_integer() && !c.is_negative())
    }

    pub(crate) fn to_dense(&self) -> (i32, Dense) {
        let lo = self.min_exp().unwrap_or(0);
        let hi = self.max_exp().unwrap_or(0);
        let mut d = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (&e, c) in &self.coeffs {
            d[(e - lo) as usize] = c.clone();
        }
        poly::trim(&mut d);
        (lo, d)
    }

    pub(crate) fn from_dense(shift: i32, d: &Dense) -> Self {
        let mut out = Self::zero();
        for (i, c) in d.iter().enumerate() {
            out.add_term(shift + i as i32, c.clone());
        }
        out
    }

    /// Monic gcd of the polynomial parts (powers of `v` are units and ignored).
    pub fn gcd(&self, other: &Self) -> Self {
        let (_, a) = self.to_dense();
        let (_, b) = other.to_dense();
        Self::from_dense(0, &poly::gcd(&a, &b))
    }

    /// Monic least common multiple of the polynomial parts.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let (_, a) = self.to_dense();
        let (_, b) = other.to_dense();
        let (ag, _) = poly::div_rem(&a, &g.to_dense().1);
        let prod = Self::from_dense(0, &ag) * Self::from_dense(0, &b);
        let lead = prod.leading_coeff().cloned().unwrap();
        prod.scale(&(Rational::one() / lead))
    }

    /// Exact quotient when `divisor` divides `self` in ℚ[v, v⁻¹].
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (sa, a) = self.to_dense();
        let (sb, b) = divisor.to_dense();
        let (q, r) = poly::div_rem(&a, &b);
        r.is_empty().then(|| Self::from_dense(sa - sb, &q))
    }

    /// `v^e` written as a power of `q`: integer or half-integer.
    fn fmt_q_exponent(e: i32) -> String {
        if e % 2 == 0 {
            (e / 2).to_string()
        } else {
            format!("{}/2", e)
        }
    }
}

fn fmt_rational_abs(c: &Rational) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for HalfLaurent {
    /// Compact form in `q`: `1+q`, `q^{1/2}-q^{-1/2}`, `2q^{3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mag = fmt_rational_abs(c);
            let unit = c.abs().is_one();
            match e {
                0 => write!(f, "{mag}")?,
                2 => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "q")?;
                }
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "q^{{{}}}", Self::fmt_q_exponent(e))?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<Rational> for HalfLaurent {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for HalfLaurent {
    fn from(c: i64) -> Self {
        Self::integer(c)
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&HalfLaurent> for HalfLaurent {
    fn sub_assign(&mut self, rhs: &HalfLaurent) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, -c.clone());
        }
    }
}

impl Add<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<HalfLaurent> for HalfLaurent {
            type Output = HalfLaurent;
            fn $m(self, rhs: HalfLaurent) -> HalfLaurent {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&HalfLaurent> for HalfLaurent {
            type Output = HalfLaurent;
            fn $m(self, rhs: &HalfLaurent) -> HalfLaurent {
                (&self).$m(rhs)
            }
        }
        impl $tr<HalfLaurent> for &HalfLaurent {
            type Output = HalfLaurent;
            fn $m(self, rhs: HalfLaurent) -> HalfLaurent {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for HalfLaurent {
    fn sum<I: Iterator<Item = HalfLaurent>>(iter: I) -> Self {
        iter.fold(HalfLaurent::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}
