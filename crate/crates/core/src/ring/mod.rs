//! Exact arithmetic in ℚ[v, v⁻¹] with v = q^(1/2), and in its fraction field.

mod laurent;
mod parse;
mod poly;
mod ratfunc;

pub use laurent::HalfLaurent;
pub use ratfunc::RatFunc;

pub type Rational = num_rational::BigRational;

pub(crate) fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
