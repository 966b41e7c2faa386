//! Plethystically transformed traces: θ ↦ θ_Z for Z_q(D) = r(q)·Y_q(D)[s(q)X].

use std::collections::BTreeMap;

use super::expansions::family_tables;
use super::{Family, TraceTable};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::Partition;
use crate::perm::SymmetricGroup;
use crate::ring::{HalfLaurent, RatFunc};
use crate::symfunc::{Basis, SymFunc, Transitions};

/// Coordinates b_λ with θ = Σ b_λ ε^λ_q, from the values at the
/// minimal-length class representatives.
pub fn eps_coordinates(theta: &TraceTable) -> Result<BTreeMap<Partition, RatFunc>> {
    let n = theta.n();
    let g = SymmetricGroup::get(n)?;
    let eps = family_tables(Family::Eps, n)?;
    let reps = g.class_reps();
    let a: Vec<Vec<RatFunc>> = reps
        .iter()
        .map(|(_, w)| {
            let i = g.index_of(w)?;
            Ok(eps.iter().map(|t| t.values()[i].clone()).collect())
        })
        .collect::<Result<_>>()?;
    let rhs: Vec<RatFunc> = reps
        .iter()
        .map(|(_, w)| theta.get(w).cloned())
        .collect::<Result<_>>()?;
    let b = linalg::solve(&a, &rhs, "ε-coordinates of a trace")?;
    Ok(Transitions::get(n)?
        .partitions()
        .iter()
        .cloned()
        .zip(b)
        .collect())
}

/// θ ↦ θ_Z where ε^λ_Z(D) is the coefficient of m_λ in r·Y_q(D)[sX].
pub fn z_transform(theta: &TraceTable, r: &RatFunc, s: &RatFunc) -> Result<TraceTable> {
    let n = theta.n();
    let partitions = Transitions::get(n)?.partitions();
    let eps = family_tables(Family::Eps, n)?;
    let b = eps_coordinates(theta)?;
    // ε^λ_Z = Σ_μ [m_λ](r·m_μ[sX]) ε^μ, so θ_Z = Σ_μ (Σ_λ b_λ [m_λ](r·m_μ[sX])) ε^μ.
    let weights = partitions
        .iter()
        .map(|mu| {
            let image = SymFunc::basis_element(Basis::M, mu)
                .plethysm_scale(s)?
                .change_basis(Basis::M)?
                .scale(r);
            Ok(b.iter()
                .map(|(l, bl)| bl * &image.coeff(l))
                .sum::<RatFunc>())
        })
        .collect::<Result<Vec<_>>>()?;
    let name = format!("{}_Z", theta.name());
    TraceTable::linear_combination(n, name, weights.into_iter().zip(eps.iter()))
}

fn q_minus_one() -> RatFunc {
    HalfLaurent::from_q_coeffs(&[-1, 1]).into()
}

/// The LLT transform: r = (q−1)^n, s = 1/(q−1).
pub fn llt_transform(theta: &TraceTable) -> Result<TraceTable> {
    let r = q_minus_one().pow(theta.n() as u32);
    let s = q_minus_one().inv()?;
    Ok(z_transform(theta, &r, &s)?.renamed(format!("{}_LLT", theta.name())))
}

/// (q−1)^n ∏_i 1/(q^{λ_i} − 1).
pub fn psi_llt_factor(l: &Partition) -> Result<RatFunc> {
    let mut f = q_minus_one().pow(l.size() as u32);
    for &k in l.parts() {
        let qk1 = RatFunc::from(HalfLaurent::q_pow(k as i32) - HalfLaurent::one());
        f = f.checked_div(&qk1)?;
    }
    Ok(f)
}

/// ψ^λ_{q,LLT} as a scalar multiple of ψ^λ_q.
pub fn psi_llt(l: &Partition) -> Result<TraceTable> {
    if l.is_empty() {
        return Err(Error::InvalidPartition("empty partition".into()));
    }
    let psi = super::family_table(Family::Psi, l)?;
    Ok(psi
        .scale(&psi_llt_factor(l)?)
        .renamed(format!("psi_llt^{l}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::traces::{atomic_trace, family_table, AtomKind};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn qpoly(cs: &[i64]) -> RatFunc {
        HalfLaurent::from_q_coeffs(cs).into()
    }

    #[test]
    fn coordinates_of_a_family_member_are_a_unit_vector() {
        let t = family_table(Family::Eps, &p(&[2, 1])).unwrap();
        let b = eps_coordinates(&t).unwrap();
        for (l, c) in b {
            assert_eq!(c.is_one(), l == p(&[2, 1]));
            assert!(c.is_one() || c.is_zero());
        }
    }

    #[test]
    fn trivial_parameters_are_the_identity() {
        let t = family_table(Family::Eta, &p(&[2, 1])).unwrap();
        let same = z_transform(&t, &RatFunc::one(), &RatFunc::one()).unwrap();
        assert_eq!(same.values(), t.values());
    }

    #[test]
    fn llt_transform_in_rank_two() {
        let eps2 = llt_transform(&family_table(Family::Eps, &p(&[2])).unwrap()).unwrap();
        assert_eq!(
            eps2.values(),
            atomic_trace(AtomKind::EpsLlt, 2).unwrap().values()
        );
        let eta2 = llt_transform(&family_table(Family::Eta, &p(&[2])).unwrap()).unwrap();
        assert_eq!(eta2.values()[1], qpoly(&[-1, 1]));
    }

    #[test]
    fn scalar_factors() {
        assert_eq!(
            psi_llt_factor(&p(&[2])).unwrap(),
            qpoly(&[-1, 1]).checked_div(&qpoly(&[1, 1])).unwrap()
        );
        assert!(psi_llt_factor(&p(&[1, 1, 1])).unwrap().is_one());
    }
}
