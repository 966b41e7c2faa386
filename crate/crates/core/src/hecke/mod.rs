//! The Hecke algebra H_n(q) in the natural basis {T_w}.

mod kl;

pub use kl::{c_tilde, kl_polynomial, r_polynomial, KlTable};

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::ring::{HalfLaurent, Rational};

/// A finite combination Σ a_w T_w with Laurent coefficients in v = q^(1/2).
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, HalfLaurent>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element T_w.
    pub fn t(w: &Permutation) -> Self {
        Self::from_terms(w.size(), [(w.clone(), HalfLaurent::one())]).unwrap()
    }

    pub fn identity(n: usize) -> Self {
        Self::t(&Permutation::identity(n))
    }

    /// The generator T_{s_i}.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::t(&Permutation::simple(n, i))
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Permutation, HalfLaurent)>,
    ) -> Result<Self> {
        let mut out = Self::zero(n);
        for (w, c) in terms {
            if w.size() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    got: w.size(),
                });
            }
            out.add_term(w, &c);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &HalfLaurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> HalfLaurent {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Permutation, c: &HalfLaurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &HalfLaurent) -> Self {
        let mut out = Self::zero(self.n);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &(x * c));
        }
        out
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    /// Right multiplication by T_{s_i}:
    /// T_w T_s = T_{ws} if ℓ(ws) > ℓ(w), else (q−1) T_w + q T_{ws}.
    pub fn mul_generator(&self, i: usize) -> Self {
        let q = HalfLaurent::q();
        let q_minus_one = &q - &HalfLaurent::one();
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let ws = w.mul_simple_right(i);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), &(c * &q_minus_one));
                out.add_term(ws, &(c * &q));
            } else {
                out.add_term(ws, c);
            }
        }
        out
    }

    /// Product in H_n(q), factoring each T_u of `rhs` along a reduced word.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_size(rhs)?;
        let mut out = Self::zero(self.n);
        for (u, c) in &rhs.terms {
            let mut partial = self.scale(c);
            for i in u.reduced_word() {
                partial = partial.mul_generator(i);
            }
            for (w, x) in partial.terms {
                out.add_term(w, &x);
            }
        }
        Ok(out)
    }

    /// The image in ℚ[S_n] at v = 1.
    pub fn specialize_q1(&self) -> BTreeMap<Permutation, Rational> {
        self.terms
            .iter()
            .map(|(w, c)| (w.clone(), c.eval_at_one()))
            .filter(|(_, c)| !num_traits::Zero::is_zero(c))
            .collect()
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "T[{w}]")?;
            } else {
                write!(f, "({c})·T[{w}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
