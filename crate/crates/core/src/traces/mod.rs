//! Traces on H_n(q) as full evaluation tables on the natural basis.

mod expansions;
mod plethystic;
mod specialization;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hecke::{HeckeElement, KlTable};
use crate::limits;
use crate::perm::{OrderedSetPartition, Permutation, SymmetricGroup};
use crate::qmatrix::{self, QElement, Straightener};
use crate::ring::{HalfLaurent, RatFunc, Rational};

pub use expansions::{
    all_expansions, family_table, family_tables, read_from_omega_y, read_from_y, y_q, Expansions,
    Family, TraceReadout,
};
pub use plethystic::{eps_coordinates, llt_transform, psi_llt, psi_llt_factor, z_transform};
pub use specialization::{verify_specialization_chains, ChainReport};

/// θ(T_w) for every w ∈ S_n, in lexicographic order of S_n.
#[derive(Clone, PartialEq, Eq)]
pub struct TraceTable {
    n: usize,
    name: String,
    values: Vec<RatFunc>,
}

impl TraceTable {
    pub fn new(n: usize, name: impl Into<String>, values: Vec<RatFunc>) -> Result<Self> {
        limits::check("trace table", n, limits::TRACE_MAX_N)?;
        let g = SymmetricGroup::get(n)?;
        if values.len() != g.order() {
            return Err(Error::SizeMismatch {
                expected: g.order(),
                got: values.len(),
            });
        }
        Ok(Self {
            n,
            name: name.into(),
            values,
        })
    }

    pub fn from_fn(
        n: usize,
        name: impl Into<String>,
        mut f: impl FnMut(usize, &Permutation) -> Result<RatFunc>,
    ) -> Result<Self> {
        limits::check("trace table", n, limits::TRACE_MAX_N)?;
        let g = SymmetricGroup::get(n)?;
        let values = g
            .elements()
            .iter()
            .enumerate()
            .map(|(i, w)| f(i, w))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, name, values)
    }

    pub fn zero(n: usize) -> Result<Self> {
        let order = SymmetricGroup::get(n)?.order();
        Self::new(n, "0", vec![RatFunc::zero(); order])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn values(&self) -> &[RatFunc] {
        &self.values
    }

    /// θ(T_w).
    pub fn get(&self, w: &Permutation) -> Result<&RatFunc> {
        let g = SymmetricGroup::get(self.n)?;
        Ok(&self.values[g.index_of(w)?])
    }

    pub fn eval(&self, d: &HeckeElement) -> Result<RatFunc> {
        if d.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: d.n(),
            });
        }
        let mut acc = RatFunc::zero();
        for (w, c) in d.terms() {
            acc += &self.get(w)?.mul_laurent(c);
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self {
            n: self.n,
            name: self.name.clone(),
            values: self.values.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(Self {
            n: self.n,
            name: self.name.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Σ c_i θ_i over tables of a common size n.
    pub fn linear_combination<'a>(
        n: usize,
        name: impl Into<String>,
        terms: impl IntoIterator<Item = (RatFunc, &'a TraceTable)>,
    ) -> Result<Self> {
        let mut acc = Self::zero(n)?.renamed(name);
        for (c, t) in terms {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&t.scale(&c))?;
        }
        Ok(acc)
    }

    /// First w and generator s with θ(T_w T_s) ≠ θ(T_s T_w), if any.
    ///
    /// Commuting with every generator forces θ(DD′) = θ(D′D) for all D, D′.
    pub fn trace_property_counterexample(&self) -> Result<Option<(Permutation, usize)>> {
        let g = SymmetricGroup::get(self.n)?;
        for w in g.elements() {
            let tw = HeckeElement::t(w);
            for s in 1..self.n {
                let ts = HeckeElement::generator(self.n, s);
                if self.eval(&tw.mul(&ts)?)? != self.eval(&ts.mul(&tw)?)? {
                    return Ok(Some((w.clone(), s)));
                }
            }
        }
        Ok(None)
    }

    /// Values at v = 1.
    pub fn specialize_q1(&self) -> Result<Vec<Rational>> {
        self.values.iter().map(RatFunc::specialize_q1).collect()
    }

    /// Values at v = 1 are constant on conjugacy classes.
    pub fn is_class_function_at_q1(&self) -> Result<bool> {
        let g = SymmetricGroup::get(self.n)?;
        let at1 = self.specialize_q1()?;
        let mut seen: Vec<Option<&Rational>> = vec![None; g.classes().len()];
        for (i, x) in at1.iter().enumerate() {
            let c = g.class_of(i);
            match seen[c] {
                None => seen[c] = Some(x),
                Some(y) if y != x => return Ok(false),
                Some(_) => {}
            }
        }
        Ok(true)
    }
}

impl fmt::Display for TraceTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = SymmetricGroup::get(self.n).map_err(|_| fmt::Error)?;
        writeln!(f, "{} (n={})", self.name, self.n)?;
        for (w, x) in g.elements().iter().zip(&self.values) {
            writeln!(f, "  T_{w} ↦ {x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TraceTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AtomKind {
    Sign,
    Trivial,
    EpsLlt,
    EtaLlt,
}

impl AtomKind {
    pub fn tag(self) -> &'static str {
        match self {
            AtomKind::Sign => "sign",
            AtomKind::Trivial => "trivial",
            AtomKind::EpsLlt => "eps_llt",
            AtomKind::EtaLlt => "eta_llt",
        }
    }
}

impl FromStr for AtomKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "sign" => AtomKind::Sign,
            "trivial" => AtomKind::Trivial,
            "eps_llt" => AtomKind::EpsLlt,
            "eta_llt" => AtomKind::EtaLlt,
            _ => return Err(Error::Parse(format!("unknown atom {s:?}"))),
        })
    }
}

pub fn atomic_trace(kind: AtomKind, n: usize) -> Result<TraceTable> {
    let name = format!("{}^{n}", kind.tag());
    match kind {
        AtomKind::Sign => TraceTable::from_fn(n, name, |_, w| {
            Ok(RatFunc::integer(if w.length() % 2 == 0 { 1 } else { -1 }))
        }),
        AtomKind::Trivial => TraceTable::from_fn(n, name, |_, w| {
            Ok(HalfLaurent::q_pow(w.length() as i32).into())
        }),
        AtomKind::EpsLlt => {
            TraceTable::from_fn(n, name, |_, w| Ok(RatFunc::integer(w.is_identity() as i64)))
        }
        AtomKind::EtaLlt => {
            let kl = KlTable::get(n)?;
            TraceTable::from_fn(n, name, |i, _| Ok(kl.r(0, i).into()))
        }
    }
}

/// Immanant of `c·θ` with `c` the least common denominator of the values.
fn cleared_immanant(t: &TraceTable) -> Result<(QElement, HalfLaurent)> {
    let den = t
        .values
        .iter()
        .fold(HalfLaurent::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<RatFunc> = t.values.iter().map(|x| x.mul_laurent(&den)).collect();
    Ok((qmatrix::immanant(&scaled, t.n)?, den))
}

/// (θ₁ ⊗ θ₂)↑ via Σ_{|I|=k} Imm_{θ₁}(t_{I,I}) Imm_{θ₂}(t_{Ī,Ī}).
pub fn induce_pair(a: &TraceTable, b: &TraceTable) -> Result<TraceTable> {
    let n = a.n + b.n;
    limits::check("trace table", n, limits::TRACE_MAX_N)?;
    let (imm_a, den_a) = cleared_immanant(a)?;
    let (imm_b, den_b) = cleared_immanant(b)?;
    let mut st = Straightener::new();
    let mut total = QElement::zero();
    for split in OrderedSetPartition::all_of_type(&[a.n, b.n]) {
        let blocks = split.blocks();
        let first = imm_a.relabel(&blocks[0]);
        let second = imm_b.relabel(&blocks[1]);
        total = total.add(&st.mul(&first, &second));
    }
    let den = RatFunc::from(&den_a * &den_b);
    let values = qmatrix::trace_values_from_immanant(&total, n)?
        .into_iter()
        .map(|x| x.checked_div(&den))
        .collect::<Result<Vec<_>>>()?;
    TraceTable::new(n, format!("({} ⊗ {})↑", a.name, b.name), values)
}

/// (θ₁ ⊗ ⋯ ⊗ θ_r)↑, associating from the left.
pub fn induce_trace(atoms: &[TraceTable]) -> Result<TraceTable> {
    let (first, rest) = atoms
        .split_first()
        .ok_or_else(|| Error::InvalidBlocks("no atoms to induce".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, t| induce_pair(&acc, t))
}

/// Induction of atoms of one kind along the parts of λ.
pub fn induced_family_member(kind: AtomKind, parts: &[usize]) -> Result<TraceTable> {
    let atoms = parts
        .iter()
        .map(|&k| atomic_trace(kind, k))
        .collect::<Result<Vec<_>>>()?;
    let name = format!(
        "{}^[{}]",
        kind.tag(),
        parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    Ok(induce_trace(&atoms)?.renamed(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::c_tilde;

    fn qpoly(cs: &[i64]) -> RatFunc {
        HalfLaurent::from_q_coeffs(cs).into()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn atoms_in_rank_two() {
        let s = perm("21");
        assert_eq!(
            *atomic_trace(AtomKind::Sign, 2).unwrap().get(&s).unwrap(),
            RatFunc::integer(-1)
        );
        assert_eq!(
            *atomic_trace(AtomKind::Trivial, 2).unwrap().get(&s).unwrap(),
            RatFunc::q()
        );
        assert_eq!(
            *atomic_trace(AtomKind::EtaLlt, 2).unwrap().get(&s).unwrap(),
            qpoly(&[-1, 1])
        );
        let eps = atomic_trace(AtomKind::EpsLlt, 3).unwrap();
        for (i, x) in eps.values().iter().enumerate() {
            assert_eq!(x.is_one(), i == 0);
        }
    }

    #[test]
    fn induced_sign_pair_on_ctilde() {
        let t = induced_family_member(AtomKind::Sign, &[1, 1]).unwrap();
        assert_eq!(
            t.eval(&c_tilde(&perm("21")).unwrap()).unwrap(),
            qpoly(&[1, 1])
        );
        assert_eq!(*t.get(&perm("12")).unwrap(), RatFunc::integer(2));
        assert_eq!(*t.get(&perm("21")).unwrap(), qpoly(&[-1, 1]));
    }

    #[test]
    fn single_atom_induces_to_itself() {
        for kind in [AtomKind::Sign, AtomKind::Trivial, AtomKind::EtaLlt] {
            let a = atomic_trace(kind, 3).unwrap();
            assert_eq!(
                induce_trace(std::slice::from_ref(&a)).unwrap().values(),
                a.values()
            );
        }
    }

    #[test]
    fn induction_is_associative() {
        let a = atomic_trace(AtomKind::Sign, 1).unwrap();
        let b = atomic_trace(AtomKind::Trivial, 2).unwrap();
        let c = atomic_trace(AtomKind::EtaLlt, 1).unwrap();
        let left = induce_pair(&induce_pair(&a, &b).unwrap(), &c).unwrap();
        let right = induce_pair(&a, &induce_pair(&b, &c).unwrap()).unwrap();
        assert_eq!(left.values(), right.values());
    }

    #[test]
    fn induced_tables_are_traces() {
        for parts in [&[2, 1][..], &[1, 1, 1], &[3]] {
            for kind in [
                AtomKind::Sign,
                AtomKind::Trivial,
                AtomKind::EpsLlt,
                AtomKind::EtaLlt,
            ] {
                let t = induced_family_member(kind, parts).unwrap();
                assert_eq!(
                    t.trace_property_counterexample().unwrap(),
                    None,
                    "{}",
                    t.name()
                );
                assert!(t.is_class_function_at_q1().unwrap());
            }
        }
    }

    #[test]
    fn rational_atoms_keep_their_denominators() {
        let half = atomic_trace(AtomKind::Sign, 1).unwrap().scale(
            &RatFunc::from(HalfLaurent::from_q_coeffs(&[1, 1]))
                .inv()
                .unwrap(),
        );
        let one = atomic_trace(AtomKind::Sign, 1).unwrap();
        let scaled = induce_pair(&half, &one).unwrap();
        let plain = induce_pair(&one, &one).unwrap();
        let factor = RatFunc::from(HalfLaurent::from_q_coeffs(&[1, 1]));
        assert_eq!(scaled.scale(&factor).values(), plain.values());
    }

    #[test]
    fn eval_rejects_wrong_size() {
        let t = atomic_trace(AtomKind::Sign, 2).unwrap();
        assert!(t.eval(&HeckeElement::identity(3)).is_err());
    }
}
