//! Independent reference computations used by the verification suites.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::hecke::HeckeElement;
use crate::perm::{OrderedSetPartition, Permutation};
use crate::qmatrix::{QElement, QMonomial, Straightener};
use crate::ring::{rational, HalfLaurent};

/// T_s⁻¹ = q⁻¹T_s − (1 − q⁻¹).
fn inverse_generator(n: usize, s: usize) -> HeckeElement {
    let qinv = HalfLaurent::q_pow(-1);
    HeckeElement::generator(n, s)
        .scale(&qinv)
        .add(&HeckeElement::identity(n).scale(&(&qinv - &HalfLaurent::one())))
        .expect("same rank")
}

/// R_{u,w} for all u, read from T_{w⁻¹}⁻¹ = (−1)^{ℓ(w)} q^{−ℓ(w)} Σ_u (−1)^{ℓ(u)} R_{u,w} T_u.
pub fn r_polynomials_by_inversion(w: &Permutation) -> Result<Vec<(Permutation, HalfLaurent)>> {
    let n = w.size();
    let mut inv = HeckeElement::identity(n);
    for s in w.reduced_word() {
        inv = inv.mul(&inverse_generator(n, s))?;
    }
    let lw = w.length();
    Ok(inv
        .terms()
        .map(|(u, c)| {
            let sign = if (lw + u.length()).is_multiple_of(2) {
                1
            } else {
                -1
            };
            (u.clone(), c.shift(2 * lw as i32).scale(&rational(sign)))
        })
        .collect())
}

/// All products of subwords of a reduced word of w.
pub fn bruhat_lower_set_by_subwords(w: &Permutation) -> BTreeSet<Permutation> {
    let n = w.size();
    let mut out = BTreeSet::from([Permutation::identity(n)]);
    for s in w.reduced_word() {
        let extended: Vec<Permutation> = out.iter().map(|u| u.mul_simple_right(s)).collect();
        out.extend(extended);
    }
    out
}

/// Σ over ordered set partitions (I_1, …, I_r) of the given type of
/// (t_{I_1,I_1})^{e,e} ⋯ (t_{I_r,I_r})^{e,e}, or, with `longest`, of
/// (t_{I_r,I_r})^{w0,w0} ⋯ (t_{I_1,I_1})^{w0,w0}.
pub fn ordered_set_partition_sum(sizes: &[usize], longest: bool) -> QElement {
    let mut st = Straightener::new();
    let one = HalfLaurent::one();
    let mut words = Vec::new();
    for osp in OrderedSetPartition::all_of_type(sizes) {
        let mut letters = Vec::new();
        if longest {
            for block in osp.blocks().iter().rev() {
                letters.extend(block.iter().rev().map(|&i| (i, i)));
            }
        } else {
            for block in osp.blocks() {
                letters.extend(block.iter().map(|&i| (i, i)));
            }
        }
        words.push(QMonomial::new(letters));
    }
    st.normalize_sum(words.iter().map(|w| (w, &one)))
}
