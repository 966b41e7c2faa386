//! The generating function Y_q, its six expansions, and the trace families
//! read off from them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use super::{induced_family_member, plethystic, AtomKind, TraceTable};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::partition::Partition;
use crate::ring::{RatFunc, Rational};
use crate::symfunc::{Basis, SymFunc, Transitions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Eps,
    Eta,
    Psi,
    Chi,
    Phi,
    Gamma,
    EpsLlt,
    EtaLlt,
    PsiLlt,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Eps,
        Family::Eta,
        Family::Psi,
        Family::Chi,
        Family::Phi,
        Family::Gamma,
        Family::EpsLlt,
        Family::EtaLlt,
        Family::PsiLlt,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Eps => "eps",
            Family::Eta => "eta",
            Family::Psi => "psi",
            Family::Chi => "chi",
            Family::Phi => "phi",
            Family::Gamma => "gamma",
            Family::EpsLlt => "eps_llt",
            Family::EtaLlt => "eta_llt",
            Family::PsiLlt => "psi_llt",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown trace family {s:?}")))
    }
}

/// Trace values indexed by partition, one map per family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceReadout {
    pub eps: BTreeMap<Partition, RatFunc>,
    pub eta: BTreeMap<Partition, RatFunc>,
    pub psi: BTreeMap<Partition, RatFunc>,
    pub chi: BTreeMap<Partition, RatFunc>,
    pub phi: BTreeMap<Partition, RatFunc>,
    pub gamma: BTreeMap<Partition, RatFunc>,
}

impl TraceReadout {
    pub fn get(&self, family: Family) -> Option<&BTreeMap<Partition, RatFunc>> {
        match family {
            Family::Eps => Some(&self.eps),
            Family::Eta => Some(&self.eta),
            Family::Psi => Some(&self.psi),
            Family::Chi => Some(&self.chi),
            Family::Phi => Some(&self.phi),
            Family::Gamma => Some(&self.gamma),
            _ => None,
        }
    }
}

fn z_of(l: &Partition) -> RatFunc {
    RatFunc::from(Rational::from_integer(l.z()))
}

fn sgn_of(l: &Partition) -> RatFunc {
    RatFunc::integer(l.sign())
}

fn coefficients(
    y: &SymFunc,
    basis: Basis,
    f: impl Fn(&Partition, RatFunc) -> (Partition, RatFunc),
) -> Result<BTreeMap<Partition, RatFunc>> {
    let in_basis = y.change_basis(basis)?;
    Ok(Partition::all(y.degree())
        .into_iter()
        .map(|l| {
            let c = in_basis.coeff(&l);
            f(&l, c)
        })
        .collect())
}

/// Reads every family from Y = Σ ε^λ m_λ = Σ η^λ f_λ = Σ sgn(λ) ψ^λ/z_λ p_λ
/// = Σ χ^{λ⊤} s_λ = Σ φ^λ e_λ = Σ γ^λ h_λ.
pub fn read_from_y(y: &SymFunc) -> Result<TraceReadout> {
    let keep = |l: &Partition, c| (l.clone(), c);
    Ok(TraceReadout {
        eps: coefficients(y, Basis::M, keep)?,
        eta: coefficients(y, Basis::F, keep)?,
        psi: coefficients(y, Basis::P, |l, c| {
            (l.clone(), &(&c * &z_of(l)) * &sgn_of(l))
        })?,
        chi: coefficients(y, Basis::S, |l, c| (l.conjugate(), c))?,
        phi: coefficients(y, Basis::E, keep)?,
        gamma: coefficients(y, Basis::H, keep)?,
    })
}

/// Reads every family from ωY = Σ ε^λ f_λ = Σ η^λ m_λ = Σ ψ^λ/z_λ p_λ
/// = Σ χ^λ s_λ = Σ φ^λ h_λ = Σ γ^λ e_λ.
pub fn read_from_omega_y(omega_y: &SymFunc) -> Result<TraceReadout> {
    let keep = |l: &Partition, c| (l.clone(), c);
    Ok(TraceReadout {
        eps: coefficients(omega_y, Basis::F, keep)?,
        eta: coefficients(omega_y, Basis::M, keep)?,
        psi: coefficients(omega_y, Basis::P, |l, c| (l.clone(), &c * &z_of(l)))?,
        chi: coefficients(omega_y, Basis::S, keep)?,
        phi: coefficients(omega_y, Basis::H, keep)?,
        gamma: coefficients(omega_y, Basis::E, keep)?,
    })
}

type FamilyCache = Mutex<HashMap<(Family, usize), Arc<OnceLock<Result<Arc<Vec<TraceTable>>>>>>>;

static FAMILIES: OnceLock<FamilyCache> = OnceLock::new();

/// All tables of a family in degree n, indexed like [`Partition::all`].
pub fn family_tables(family: Family, n: usize) -> Result<Arc<Vec<TraceTable>>> {
    let cell = {
        let mut map = FAMILIES
            .get_or_init(Default::default)
            .lock()
            .expect("family cache");
        map.entry((family, n)).or_default().clone()
    };
    cell.get_or_init(|| build_family(family, n).map(Arc::new))
        .clone()
}

fn build_family(family: Family, n: usize) -> Result<Vec<TraceTable>> {
    let partitions = Transitions::get(n)?.partitions();
    let induced = |kind: AtomKind| -> Result<Vec<TraceTable>> {
        partitions
            .iter()
            .map(|l| Ok(induced_family_member(kind, l.parts())?.renamed(format!("{family}^{l}"))))
            .collect()
    };
    match family {
        Family::Eps => induced(AtomKind::Sign),
        Family::Eta => induced(AtomKind::Trivial),
        Family::EpsLlt => induced(AtomKind::EpsLlt),
        Family::EtaLlt => induced(AtomKind::EtaLlt),
        Family::PsiLlt => partitions.iter().map(plethystic::psi_llt).collect(),
        Family::Psi | Family::Chi | Family::Phi | Family::Gamma => {
            // Y is linear in the ε values, so each family is a fixed
            // rational combination of the ε tables.
            let eps = family_tables(Family::Eps, n)?;
            let readouts = partitions
                .iter()
                .map(|l| read_from_y(&SymFunc::basis_element(Basis::M, l)))
                .collect::<Result<Vec<_>>>()?;
            partitions
                .iter()
                .map(|mu| {
                    let name = format!("{}^{mu}", family.tag());
                    let terms = readouts
                        .iter()
                        .zip(eps.iter())
                        .map(|(r, t)| (r.get(family).expect("ordinary family")[mu].clone(), t));
                    TraceTable::linear_combination(n, name, terms)
                })
                .collect()
        }
    }
}

/// The table of one family member.
pub fn family_table(family: Family, l: &Partition) -> Result<TraceTable> {
    let n = l.size();
    let t = Transitions::get(n)?;
    let i = t
        .index_of(l)
        .ok_or_else(|| Error::InvalidPartition(format!("{l} is not a partition of {n}")))?;
    Ok(family_tables(family, n)?[i].clone())
}

/// Y_q(D) = Σ_λ ε^λ_q(D) m_λ.
pub fn y_q(d: &HeckeElement) -> Result<SymFunc> {
    let n = d.n();
    let eps = family_tables(Family::Eps, n)?;
    let coeffs = Transitions::get(n)?
        .partitions()
        .iter()
        .zip(eps.iter())
        .map(|(l, t)| Ok((l.clone(), t.eval(d)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    SymFunc::new(n, Basis::M, coeffs)
}

/// Y_q(D) in every basis, with the trace values read from both lists.
#[derive(Clone, Debug)]
pub struct Expansions {
    pub y: BTreeMap<Basis, SymFunc>,
    pub from_y: TraceReadout,
    pub from_omega_y: TraceReadout,
}

pub fn all_expansions(d: &HeckeElement) -> Result<Expansions> {
    let y = y_q(d)?;
    let omega_y = y.omega()?;
    let in_bases = Basis::ALL
        .into_iter()
        .map(|b| Ok((b, y.change_basis(b)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(Expansions {
        from_y: read_from_y(&y)?,
        from_omega_y: read_from_omega_y(&omega_y)?,
        y: in_bases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::c_tilde;
    use crate::perm::{Permutation, SymmetricGroup};
    use crate::ring::HalfLaurent;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn qpoly(cs: &[i64]) -> RatFunc {
        HalfLaurent::from_q_coeffs(cs).into()
    }

    #[test]
    fn y_of_ctilde_in_rank_two() {
        let y = y_q(&c_tilde(&"21".parse().unwrap()).unwrap()).unwrap();
        assert_eq!(y.to_string(), "(1+q)·m[1,1]");
        assert!(y_q(&HeckeElement::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn y_is_linear() {
        let a = HeckeElement::generator(3, 1);
        let b = c_tilde(&"321".parse().unwrap()).unwrap();
        let c = HalfLaurent::from_q_coeffs(&[2, -1]);
        let lhs = y_q(&a.scale(&c).add(&b).unwrap()).unwrap();
        let rhs = y_q(&a)
            .unwrap()
            .scale(&c.clone().into())
            .add(&y_q(&b).unwrap())
            .unwrap();
        assert!(lhs.same_function(&rhs).unwrap());
    }

    #[test]
    fn eta_read_off_matches_induced_trivial() {
        for n in 1..=4 {
            let eta = family_tables(Family::Eta, n).unwrap();
            let g = SymmetricGroup::get(n).unwrap();
            for (i, w) in g.elements().iter().enumerate() {
                let r = read_from_y(&y_q(&HeckeElement::t(w)).unwrap()).unwrap();
                for (j, l) in Partition::all(n).iter().enumerate() {
                    assert_eq!(r.eta[l], eta[j].values()[i], "η^{l}(T_{w})");
                }
            }
        }
    }

    #[test]
    fn both_lists_agree_on_ctilde() {
        let w: Permutation = "3412".parse().unwrap();
        let e = all_expansions(&c_tilde(&w).unwrap()).unwrap();
        assert_eq!(e.from_y, e.from_omega_y);
    }

    #[test]
    fn power_sum_read_off_in_rank_two() {
        let e = all_expansions(&c_tilde(&"21".parse().unwrap()).unwrap()).unwrap();
        // (1+q) m11 = (1+q)/2 (p11 − p2)
        assert_eq!(e.from_y.psi[&p(&[1, 1])], qpoly(&[1, 1]));
        assert_eq!(e.from_y.psi[&p(&[2])], qpoly(&[1, 1]));
    }

    #[test]
    fn characters_at_one_satisfy_orthogonality() {
        for n in 1..=5 {
            let chi = family_tables(Family::Chi, n).unwrap();
            let total: Rational = chi
                .iter()
                .map(|t| {
                    let x = t.values()[0].specialize_q1().unwrap();
                    &x * &x
                })
                .sum();
            let order = SymmetricGroup::get(n).unwrap().order() as i64;
            assert_eq!(total, Rational::from_integer(order.into()));
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.tag().parse::<Family>().unwrap(), f);
        }
        assert!("zeta".parse::<Family>().is_err());
        assert_eq!(
            family_table(Family::Eps, &p(&[2])).unwrap().name(),
            "eps^[2]"
        );
    }
}
