//! Principal-specialization expansions of ε^n_{q,LLT} and η^n_{q,LLT}
//! in the ψ, χ, φ and γ families.

use serde::Serialize;

use super::expansions::family_tables;
use super::{atomic_trace, AtomKind, Family, TraceTable};
use crate::error::Result;
use crate::limits;
use crate::partition::Partition;
use crate::perm::{Permutation, SymmetricGroup};
use crate::ring::{HalfLaurent, RatFunc, Rational};
use crate::symfunc::Transitions;

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    /// `eps` or `eta`.
    pub target: &'static str,
    /// `psi`, `chi`, `phi` or `gamma`.
    pub family: &'static str,
    pub pass: bool,
    pub counterexample: Option<String>,
    pub expected: Option<String>,
    pub got: Option<String>,
}

fn one_minus_q_pow(k: usize) -> RatFunc {
    (HalfLaurent::one() - HalfLaurent::q_pow(k as i32)).into()
}

fn inv(x: RatFunc) -> RatFunc {
    x.inv().expect("nonzero factor")
}

/// 1/∏_i (1−q^{λ_i}).
fn power_sum_principal(l: &Partition) -> RatFunc {
    inv(l
        .parts()
        .iter()
        .map(|&k| one_minus_q_pow(k))
        .fold(RatFunc::one(), |a, b| a * b))
}

/// ∏_i 1/((1−q)(1−q²)⋯(1−q^{λ_i})), optionally with q^{C(λ_i,2)} in each numerator.
fn q_factorial_principal(l: &Partition, with_q_power: bool) -> RatFunc {
    l.parts()
        .iter()
        .map(|&k| {
            let den = (1..=k)
                .map(one_minus_q_pow)
                .fold(RatFunc::one(), |a, b| a * b);
            let num: RatFunc = if with_q_power {
                HalfLaurent::q_pow((k * (k - 1) / 2) as i32).into()
            } else {
                RatFunc::one()
            };
            num * inv(den)
        })
        .fold(RatFunc::one(), |a, b| a * b)
}

/// q^{b(λ)}/∏_{u∈λ}(1−q^{h(u)}).
fn hook_principal(l: &Partition) -> RatFunc {
    let den = l
        .hooks()
        .into_iter()
        .map(one_minus_q_pow)
        .fold(RatFunc::one(), |a, b| a * b);
    RatFunc::from(HalfLaurent::q_pow(l.b() as i32)) * inv(den)
}

fn chain(n: usize, family: Family, coeff: impl Fn(&Partition) -> RatFunc) -> Result<TraceTable> {
    let tables = family_tables(family, n)?;
    let partitions = Transitions::get(n)?.partitions();
    TraceTable::linear_combination(
        n,
        family.tag(),
        partitions.iter().map(&coeff).zip(tables.iter()),
    )
}

fn compare(
    target: &'static str,
    family: Family,
    lhs: &TraceTable,
    rhs: &TraceTable,
) -> Result<ChainReport> {
    let g = SymmetricGroup::get(lhs.n())?;
    let bad = lhs
        .values()
        .iter()
        .zip(rhs.values())
        .position(|(a, b)| a != b);
    let w: Option<&Permutation> = bad.map(|i| g.element(i));
    Ok(ChainReport {
        target,
        family: family.tag(),
        pass: bad.is_none(),
        counterexample: w.map(|w| w.to_string()),
        expected: bad.map(|i| lhs.values()[i].to_string()),
        got: bad.map(|i| rhs.values()[i].to_string()),
    })
}

/// Compares each of the eight expansions with ε^n_{q,LLT}/(1−q)^n and
/// η^n_{q,LLT}/(1−q)^n at every T_w.
pub fn verify_specialization_chains(n: usize) -> Result<Vec<ChainReport>> {
    limits::check("specialization chains", n, limits::CHAIN_MAX_N)?;
    let scale = inv(one_minus_q_pow(1).pow(n as u32));
    let eps_lhs = atomic_trace(AtomKind::EpsLlt, n)?.scale(&scale);
    let eta_lhs = atomic_trace(AtomKind::EtaLlt, n)?.scale(&scale);

    let z = |l: &Partition| RatFunc::from(Rational::from_integer(l.z()));
    let sgn = |l: &Partition| RatFunc::integer(l.sign());

    let eps_chains = [
        chain(n, Family::Psi, |l| power_sum_principal(l) * inv(z(l)))?,
        chain(n, Family::Chi, hook_principal)?,
        chain(n, Family::Phi, |l| q_factorial_principal(l, false))?,
        chain(n, Family::Gamma, |l| q_factorial_principal(l, true))?,
    ];
    let eta_chains = [
        chain(n, Family::Psi, |l| {
            power_sum_principal(l) * sgn(l) * inv(z(l))
        })?,
        chain(n, Family::Chi, |l| hook_principal(&l.conjugate()))?,
        chain(n, Family::Phi, |l| q_factorial_principal(l, true))?,
        chain(n, Family::Gamma, |l| q_factorial_principal(l, false))?,
    ];
    let families = [Family::Psi, Family::Chi, Family::Phi, Family::Gamma];
    let mut out = Vec::with_capacity(8);
    for (f, rhs) in families.iter().zip(&eps_chains) {
        out.push(compare("eps", *f, &eps_lhs, rhs)?);
    }
    for (f, rhs) in families.iter().zip(&eta_chains) {
        out.push(compare("eta", *f, &eta_lhs, rhs)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_coefficient_for_two_one() {
        let expected =
            RatFunc::q() * inv(one_minus_q_pow(3) * one_minus_q_pow(1) * one_minus_q_pow(1));
        assert_eq!(hook_principal(&p(&[2, 1])), expected);
    }

    #[test]
    fn all_chains_hold_in_small_rank() {
        for n in 1..=3 {
            let reports = verify_specialization_chains(n).unwrap();
            assert_eq!(reports.len(), 8);
            for r in reports {
                assert!(r.pass, "n={n}: {r:?}");
            }
        }
    }
}
