//! Homogeneous symmetric functions of degree n over ℚ(v), in the monomial,
//! elementary, complete, power-sum, Schur and forgotten bases.

mod expand;
mod transition;

pub(crate) use expand::collect_symmetric;
pub use transition::Transitions;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ring::{rational, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M = 0,
    E = 1,
    H = 2,
    P = 3,
    S = 4,
    F = 5,
}

impl Basis {
    pub const ALL: [Basis; 6] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S, Basis::F];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
            Basis::F => "f",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown basis {s:?}")))
    }
}

/// A homogeneous degree-n symmetric function written in one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl SymFunc {
    pub fn new(n: usize, basis: Basis, coeffs: BTreeMap<Partition, RatFunc>) -> Result<Self> {
        if let Some(l) = coeffs.keys().find(|l| l.size() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                got: l.size(),
            });
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self { n, basis, coeffs })
    }

    pub fn zero(n: usize, basis: Basis) -> Self {
        Self {
            n,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, l: &Partition) -> Self {
        Self {
            n: l.size(),
            basis,
            coeffs: BTreeMap::from([(l.clone(), RatFunc::one())]),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, l: &Partition) -> RatFunc {
        self.coeffs.get(l).cloned().unwrap_or_default()
    }

    /// Nonzero terms in descending partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter().rev()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn to_vector(&self, t: &Transitions) -> Vec<RatFunc> {
        let mut v = vec![RatFunc::zero(); t.partitions().len()];
        for (l, c) in &self.coeffs {
            v[t.index_of(l).expect("partition of n")] = c.clone();
        }
        v
    }

    fn from_vector(n: usize, basis: Basis, t: &Transitions, v: Vec<RatFunc>) -> Self {
        let coeffs = t
            .partitions()
            .iter()
            .cloned()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self { n, basis, coeffs }
    }

    /// Re-express in another basis via the cached rational transition matrices.
    pub fn change_basis(&self, target: Basis) -> Result<Self> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let t = Transitions::get(self.n)?;
        let src = self.to_vector(t);
        let k = src.len();
        let to_m = t.to_m(self.basis);
        let mut in_m = vec![RatFunc::zero(); k];
        for (i, c) in src.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, a) in to_m[i].iter().enumerate() {
                if !num_traits::Zero::is_zero(a) {
                    in_m[j] = &in_m[j] + &c.scale(a);
                }
            }
        }
        let from_m = t.from_m(target);
        let mut out = vec![RatFunc::zero(); k];
        for (j, c) in in_m.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (l, a) in from_m[j].iter().enumerate() {
                if !num_traits::Zero::is_zero(a) {
                    out[l] = &out[l] + &c.scale(a);
                }
            }
        }
        Ok(Self::from_vector(self.n, target, t, out))
    }

    /// The involution ω: `p_λ ↦ sgn(λ) p_λ`, returned in the original basis.
    pub fn omega(&self) -> Result<Self> {
        let mut p = self.change_basis(Basis::P)?;
        for (l, c) in p.coeffs.iter_mut() {
            if l.sign() < 0 {
                *c = -&*c;
            }
        }
        p.change_basis(self.basis)
    }

    /// Plethysm by a scaled alphabet, `F ↦ F[s·X]`: `p_k ↦ s(q^k) p_k`.
    pub fn plethysm_scale(&self, s: &RatFunc) -> Result<Self> {
        let mut p = self.change_basis(Basis::P)?;
        let max_part = self.n.max(1);
        let powers: Vec<RatFunc> = (1..=max_part as u32).map(|k| s.compose_power(k)).collect();
        for (l, c) in p.coeffs.iter_mut() {
            for &part in l.parts() {
                *c = &*c * &powers[part - 1];
            }
        }
        p.coeffs.retain(|_, c| !c.is_zero());
        p.change_basis(self.basis)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(l, x)| (l.clone(), x * c))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        Self {
            n: self.n,
            basis: self.basis,
            coeffs,
        }
    }

    /// Sum, written in `self`'s basis.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let other = other.change_basis(self.basis)?;
        let mut coeffs = self.coeffs.clone();
        for (l, c) in other.coeffs {
            let sum = coeffs.get(&l).map_or(c.clone(), |x| x + &c);
            coeffs.insert(l, sum);
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(Self {
            n: self.n,
            basis: self.basis,
            coeffs,
        })
    }

    /// Equality as symmetric functions, regardless of the basis each is written in.
    pub fn same_function(&self, other: &Self) -> Result<bool> {
        Ok(self.n == other.n && self.change_basis(Basis::M)? == other.change_basis(Basis::M)?)
    }

    pub fn to_json(&self) -> Value {
        let terms: Map<String, Value> = self
            .terms()
            .map(|(l, c)| (l.to_string(), Value::String(c.to_string())))
            .collect();
        json!({ "basis": self.basis.tag(), "n": self.n, "terms": terms })
    }
}

/// Coefficient is a single signed term, so no parentheses are needed.
fn is_atomic(c: &RatFunc) -> bool {
    c.denom().is_one() && c.numer().num_terms() == 1
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let minus_one = RatFunc::from(rational(-1));
        for (i, (l, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
            } else if *c == minus_one {
                write!(f, "-")?;
            } else if is_atomic(c) {
                write!(f, "{c}·")?;
            } else {
                write!(f, "({c})·")?;
            }
            write!(f, "{}{}", self.basis.tag(), l)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::HalfLaurent;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn qpoly(cs: &[i64]) -> RatFunc {
        RatFunc::from(HalfLaurent::from_q_coeffs(cs))
    }

    #[test]
    fn classical_expansions_in_m() {
        let h2 = SymFunc::basis_element(Basis::H, &p(&[2]))
            .change_basis(Basis::M)
            .unwrap();
        assert_eq!(h2.to_string(), "m[2] + m[1,1]");
        let p11 = SymFunc::basis_element(Basis::P, &p(&[1, 1]))
            .change_basis(Basis::M)
            .unwrap();
        assert_eq!(p11.to_string(), "m[2] + 2·m[1,1]");
        let e2 = SymFunc::basis_element(Basis::E, &p(&[2]))
            .change_basis(Basis::M)
            .unwrap();
        assert_eq!(e2.to_string(), "m[1,1]");
    }

    #[test]
    fn omega_examples() {
        let p2 = SymFunc::basis_element(Basis::P, &p(&[2]));
        assert_eq!(p2.omega().unwrap(), p2.scale(&RatFunc::integer(-1)));
        for n in 1..=5 {
            let en = SymFunc::basis_element(Basis::E, &Partition::row(n));
            let hn = SymFunc::basis_element(Basis::H, &Partition::row(n));
            assert!(en.omega().unwrap().same_function(&hn).unwrap());
        }
    }

    #[test]
    fn omega_swaps_schur_with_conjugate_and_m_with_f() {
        for l in Partition::all(4) {
            let s = SymFunc::basis_element(Basis::S, &l);
            let st = SymFunc::basis_element(Basis::S, &l.conjugate());
            assert!(s.omega().unwrap().same_function(&st).unwrap());
            let m = SymFunc::basis_element(Basis::M, &l);
            let f = SymFunc::basis_element(Basis::F, &l);
            assert!(m.omega().unwrap().same_function(&f).unwrap());
        }
    }

    #[test]
    fn plethysm_examples() {
        let qm1 = qpoly(&[-1, 1]);
        let p2 = SymFunc::basis_element(Basis::P, &p(&[2]));
        let scaled = p2.plethysm_scale(&qm1.inv().unwrap()).unwrap();
        assert_eq!(scaled, p2.scale(&qpoly(&[-1, 0, 1]).inv().unwrap()));

        let p11 = SymFunc::basis_element(Basis::P, &p(&[1, 1]));
        assert_eq!(p11.plethysm_scale(&qm1).unwrap(), p11.scale(&qm1.pow(2)));

        let h3 = SymFunc::basis_element(Basis::H, &p(&[2, 1]));
        assert_eq!(h3.plethysm_scale(&RatFunc::one()).unwrap(), h3);
    }

    #[test]
    fn rejects_wrong_degree() {
        let coeffs = BTreeMap::from([(p(&[2]), RatFunc::one())]);
        assert!(SymFunc::new(3, Basis::M, coeffs).is_err());
    }

    #[test]
    fn json_rendering() {
        let f = SymFunc::new(
            3,
            Basis::M,
            BTreeMap::from([
                (p(&[1, 1, 1]), RatFunc::integer(6)),
                (p(&[2, 1]), qpoly(&[1, 1])),
            ]),
        )
        .unwrap();
        assert_eq!(
            f.to_json().to_string(),
            r#"{"basis":"m","n":3,"terms":{"[2,1]":"1+q","[1,1,1]":"6"}}"#
        );
    }
}
