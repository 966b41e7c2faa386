//! The quantum matrix bialgebra A_n(q): straightening words in the generators
//! t_{i,j} to the lexicographic normal basis, and immanants of functionals.
//!
//! For i < j and k < l the rewrite rules are
//!
//! ```text
//! t_{i,l} t_{i,k} = v t_{i,k} t_{i,l}
//! t_{j,k} t_{i,k} = v t_{i,k} t_{j,k}
//! t_{j,k} t_{i,l} = t_{i,l} t_{j,k}
//! t_{j,l} t_{i,k} = t_{i,k} t_{j,l} + (v − v⁻¹) t_{i,l} t_{j,k}
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::{Permutation, SymmetricGroup};
use crate::ring::{HalfLaurent, RatFunc};

pub type Letter = (u8, u8);

/// A word t_{r₁,c₁} ⋯ t_{r_k,c_k} in the generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QMonomial(Vec<Letter>);

impl QMonomial {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letters in lexicographic order.
    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn concat(&self, other: &QMonomial) -> QMonomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        QMonomial(v)
    }

    /// Largest index appearing in the word.
    pub fn max_index(&self) -> usize {
        self.0
            .iter()
            .map(|&(r, c)| r.max(c) as usize)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (r, c)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "t[{r},{c}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for QMonomial {
    type Err = Error;

    /// `"2,2;1,1"` is t_{2,2} t_{1,1}.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad word {s:?}: expected \"r,c;r,c;…\""));
        let mut letters = Vec::new();
        for pair in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (r, c) = pair.split_once(',').ok_or_else(bad)?;
            let r: u8 = r.trim().parse().map_err(|_| bad())?;
            let c: u8 = c.trim().parse().map_err(|_| bad())?;
            if r == 0 || c == 0 {
                return Err(bad());
            }
            letters.push((r, c));
        }
        Ok(QMonomial(letters))
    }
}

/// t^{u,v} = t_{u₁,v₁} ⋯ t_{u_n,v_n}.
pub fn t_uv_monomial(u: &Permutation, v: &Permutation) -> Result<QMonomial> {
    if u.size() != v.size() {
        return Err(Error::SizeMismatch {
            expected: u.size(),
            got: v.size(),
        });
    }
    Ok(QMonomial(
        u.one_line()
            .iter()
            .copied()
            .zip(v.one_line().iter().copied())
            .collect(),
    ))
}

/// A linear combination of normal-form monomials with Laurent coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct QElement {
    terms: BTreeMap<QMonomial, HalfLaurent>,
}

impl QElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QMonomial, &HalfLaurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &QMonomial) -> HalfLaurent {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c · m`; `m` must already be normal.
    fn add_normal(&mut self, m: QMonomial, c: &HalfLaurent) {
        debug_assert!(m.is_normal());
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &QElement) -> QElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_normal(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &HalfLaurent) -> QElement {
        let mut out = QElement::zero();
        for (m, x) in &self.terms {
            out.add_normal(m.clone(), &(x * c));
        }
        out
    }

    /// Renames index k to `labels[k-1]` in rows and columns.
    pub fn relabel(&self, labels: &[u8]) -> QElement {
        let mut out = QElement::zero();
        for (m, c) in &self.terms {
            let word = QMonomial(
                m.0.iter()
                    .map(|&(r, col)| (labels[r as usize - 1], labels[col as usize - 1]))
                    .collect(),
            );
            // an order-preserving relabeling keeps normal words normal
            out.add_normal(word, c);
        }
        out
    }
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.num_terms() == 1 && c.leading_coeff().is_some_and(|x| x.is_negative());
            let shown = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if shown.is_one() {
                write!(f, "{m}")?;
            } else if shown.num_terms() == 1 {
                write!(f, "{shown}·{m}")?;
            } else {
                write!(f, "({shown})·{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Applies the relation at positions (pos, pos+1) if that pair is out of order.
fn rewrite_at(word: &[Letter], pos: usize) -> Option<Vec<(QMonomial, HalfLaurent)>> {
    let (r1, c1) = word[pos];
    let (r2, c2) = word[pos + 1];
    let swapped = || {
        let mut w = word.to_vec();
        w.swap(pos, pos + 1);
        QMonomial(w)
    };
    if r1 > r2 {
        if c1 < c2 {
            Some(vec![(swapped(), HalfLaurent::one())])
        } else if c1 == c2 {
            Some(vec![(swapped(), HalfLaurent::v_pow(1))])
        } else {
            let mut cross = word.to_vec();
            cross[pos] = (r2, c1);
            cross[pos + 1] = (r1, c2);
            let gap = HalfLaurent::v_pow(1) - HalfLaurent::v_pow(-1);
            Some(vec![
                (swapped(), HalfLaurent::one()),
                (QMonomial(cross), gap),
            ])
        }
    } else if r1 == r2 && c1 > c2 {
        Some(vec![(swapped(), HalfLaurent::v_pow(1))])
    } else {
        None
    }
}

/// Deterministic choice: leftmost row inversion first, then leftmost
/// column inversion inside equal rows.
fn first_rewrite_position(word: &[Letter]) -> Option<usize> {
    let pairs = || word.windows(2).enumerate();
    pairs()
        .find(|(_, w)| w[0].0 > w[1].0)
        .or_else(|| pairs().find(|(_, w)| w[0].0 == w[1].0 && w[0].1 > w[1].1))
        .map(|(i, _)| i)
}

/// Memoized straightening of words to the normal basis.
#[derive(Default)]
pub struct Straightener {
    cache: HashMap<QMonomial, QElement>,
}

impl Straightener {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn normalize(&mut self, word: &QMonomial) -> QElement {
        if let Some(e) = self.cache.get(word) {
            return e.clone();
        }
        let result = match first_rewrite_position(&word.0) {
            None => {
                let mut e = QElement::zero();
                e.add_normal(word.clone(), &HalfLaurent::one());
                e
            }
            Some(pos) => {
                let mut acc = QElement::zero();
                for (w, c) in rewrite_at(&word.0, pos).expect("position is out of order") {
                    acc = acc.add(&self.normalize(&w).scale(&c));
                }
                acc
            }
        };
        self.cache.insert(word.clone(), result.clone());
        result
    }

    /// Normal form of a sum of `coefficient · word` terms.
    pub fn normalize_sum<'a>(
        &mut self,
        words: impl IntoIterator<Item = (&'a QMonomial, &'a HalfLaurent)>,
    ) -> QElement {
        let mut acc = QElement::zero();
        for (w, c) in words {
            acc = acc.add(&self.normalize(w).scale(c));
        }
        acc
    }

    pub fn mul(&mut self, a: &QElement, b: &QElement) -> QElement {
        let mut acc = QElement::zero();
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                let prod = self.normalize(&wa.concat(wb));
                acc = acc.add(&prod.scale(&(ca * cb)));
            }
        }
        acc
    }

    /// Product of block immanants in the given order; blocks must be disjoint.
    pub fn block_product(&mut self, factors: &[(Vec<u8>, QElement)]) -> Result<QElement> {
        let mut seen = std::collections::BTreeSet::new();
        for (block, _) in factors {
            for &x in block {
                if !seen.insert(x) {
                    return Err(Error::InvalidBlocks(format!(
                        "index {x} appears in two blocks"
                    )));
                }
            }
        }
        let mut acc = match factors.first() {
            None => return Ok(QElement::zero()),
            Some((_, e)) => e.clone(),
        };
        for (_, e) in &factors[1..] {
            acc = self.mul(&acc, e);
        }
        Ok(acc)
    }
}

/// Normal form of a single word.
pub fn normalize(word: &QMonomial) -> QElement {
    Straightener::new().normalize(word)
}

/// Straightening that applies a uniformly random applicable rewrite at each
/// step. Used to check that the normal form does not depend on the strategy.
pub fn normalize_randomized<R: Rng>(word: &QMonomial, rng: &mut R) -> QElement {
    let mut pending: HashMap<QMonomial, HalfLaurent> =
        HashMap::from([(word.clone(), HalfLaurent::one())]);
    let mut done = QElement::zero();
    while let Some(w) = pending.keys().next().cloned() {
        let c = pending.remove(&w).unwrap();
        let positions: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&p| rewrite_at(&w.0, p).is_some())
            .collect();
        if positions.is_empty() {
            done.add_normal(w, &c);
            continue;
        }
        let pos = positions[rng.gen_range(0..positions.len())];
        for (next, x) in rewrite_at(&w.0, pos).unwrap() {
            let slot = pending.entry(next.clone()).or_default();
            *slot += &(&c * &x);
            if slot.is_zero() {
                pending.remove(&next);
            }
        }
    }
    done
}

/// Imm_θ(t) = Σ_w v^{−ℓ(w)} θ(T_w) t^{e,w}, for θ given on S_n in
/// lexicographic order. Every value must be a Laurent polynomial; callers
/// clear denominators first.
pub fn immanant(values: &[RatFunc], n: usize) -> Result<QElement> {
    let g = SymmetricGroup::get(n)?;
    if values.len() != g.order() {
        return Err(Error::SizeMismatch {
            expected: g.order(),
            got: values.len(),
        });
    }
    let e = Permutation::identity(n);
    let mut out = QElement::zero();
    for (i, value) in values.iter().enumerate() {
        let value = value
            .as_laurent()
            .ok_or_else(|| Error::NonPolynomialCoefficient(value.to_string()))?;
        let w = g.element(i);
        let coeff = value.shift(-(g.length(i) as i32));
        out.add_normal(t_uv_monomial(&e, w)?, &coeff);
    }
    Ok(out)
}

/// Inverse of [`immanant`]: θ(T_w) = v^{ℓ(w)} · [t^{e,w}] E, in lexicographic order of S_n.
pub fn trace_values_from_immanant(element: &QElement, n: usize) -> Result<Vec<RatFunc>> {
    let g = SymmetricGroup::get(n)?;
    let mut values = vec![RatFunc::zero(); g.order()];
    for (m, c) in element.terms() {
        let rows_ok = m.len() == n
            && m.0
                .iter()
                .enumerate()
                .all(|(i, &(r, _))| r as usize == i + 1);
        let cols = Permutation::new(m.0.iter().map(|&(_, c)| c).collect());
        let w = match (rows_ok, cols) {
            (true, Ok(w)) => w,
            _ => return Err(Error::NotTraceImmanant(m.to_string())),
        };
        let i = g.index_of(&w)?;
        values[i] = RatFunc::from(c.shift(g.length(i) as i32));
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> QMonomial {
        s.parse().unwrap()
    }

    fn gap() -> HalfLaurent {
        HalfLaurent::v_pow(1) - HalfLaurent::v_pow(-1)
    }

    #[test]
    fn two_term_relation() {
        let e = normalize(&word("2,2;1,1"));
        assert_eq!(e.num_terms(), 2);
        assert!(e.coeff(&word("1,1;2,2")).is_one());
        assert_eq!(e.coeff(&word("1,2;2,1")), gap());
    }

    #[test]
    fn same_row_relation() {
        let e = normalize(&word("1,2;1,1"));
        assert_eq!(e.num_terms(), 1);
        assert_eq!(e.coeff(&word("1,1;1,2")), HalfLaurent::v_pow(1));
    }

    #[test]
    fn normal_words_are_fixed() {
        for s in ["1,1;2,2", "1,2;2,1", "1,1;1,1;3,2", ""] {
            let w = word(s);
            let e = normalize(&w);
            assert_eq!(e.num_terms(), 1);
            assert!(e.coeff(&w).is_one());
        }
    }

    #[test]
    fn commuting_relation() {
        let e = normalize(&word("2,1;1,2"));
        assert!(e.coeff(&word("1,2;2,1")).is_one());
        assert_eq!(e.num_terms(), 1);
    }

    #[test]
    fn sign_trace_immanant() {
        // ε(T_e) = 1, ε(T_{s1}) = −1
        let e = immanant(&[RatFunc::one(), RatFunc::integer(-1)], 2).unwrap();
        assert!(e.coeff(&word("1,1;2,2")).is_one());
        assert_eq!(
            e.coeff(&word("1,2;2,1")),
            HalfLaurent::integer(-1).shift(-1)
        );
    }

    #[test]
    fn immanant_round_trip_and_zero() {
        let vals = vec![
            RatFunc::integer(2),
            RatFunc::from(HalfLaurent::from_q_coeffs(&[-1, 1])),
        ];
        let e = immanant(&vals, 2).unwrap();
        assert_eq!(trace_values_from_immanant(&e, 2).unwrap(), vals);
        let zero = immanant(&[RatFunc::zero(), RatFunc::zero()], 2).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn non_permutation_support_is_rejected() {
        let mut e = QElement::zero();
        e.add_normal(word("1,2;2,2"), &HalfLaurent::one());
        assert!(matches!(
            trace_values_from_immanant(&e, 2),
            Err(Error::NotTraceImmanant(_))
        ));
    }

    #[test]
    fn non_polynomial_values_are_rejected() {
        let half = RatFunc::from(HalfLaurent::from_q_coeffs(&[-1, 1]))
            .inv()
            .unwrap();
        assert!(immanant(&[RatFunc::one(), half], 2).is_err());
    }

    #[test]
    fn block_product_of_singletons() {
        let atom = |i: u8| {
            let mut e = QElement::zero();
            e.add_normal(QMonomial::new(vec![(i, i)]), &HalfLaurent::one());
            (vec![i], e)
        };
        let mut st = Straightener::new();
        let forward = st.block_product(&[atom(1), atom(2)]).unwrap();
        assert!(forward.coeff(&word("1,1;2,2")).is_one());
        assert_eq!(forward.num_terms(), 1);
        let both = forward.add(&st.block_product(&[atom(2), atom(1)]).unwrap());
        assert_eq!(both.coeff(&word("1,1;2,2")), HalfLaurent::integer(2));
        assert_eq!(both.coeff(&word("1,2;2,1")), gap());
        assert!(st.block_product(&[atom(1), atom(1)]).is_err());
    }

    #[test]
    fn longest_word_expands_with_r_polynomials() {
        let w0 = Permutation::longest(2);
        let e = normalize(&t_uv_monomial(&w0, &w0).unwrap());
        assert_eq!(e.coeff(&word("1,2;2,1")), gap());
    }

    #[test]
    fn t_uv_identity() {
        let e = Permutation::identity(3);
        assert_eq!(t_uv_monomial(&e, &e).unwrap(), word("1,1;2,2;3,3"));
        assert!(t_uv_monomial(&e, &Permutation::identity(2)).is_err());
    }
}
