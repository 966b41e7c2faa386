//! Indifference graphs of 312-avoiding permutations and brute-force coloring
//! sums for the chromatic quasisymmetric function and the unicellular LLT
//! polynomial.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::ring::{HalfLaurent, RatFunc};
use crate::symfunc::{collect_symmetric, Basis, SymFunc};

/// A graph on 1..n whose edges are {i, j}, i < j ≤ m(i), for a
/// nondecreasing bound m with m(i) ≥ i.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndifferenceGraph {
    n: usize,
    bound: Vec<usize>,
}

impl IndifferenceGraph {
    pub fn from_bound(bound: Vec<usize>) -> Result<Self> {
        let n = bound.len();
        for (i, &m) in bound.iter().enumerate() {
            if m < i + 1 || m > n || (i > 0 && m < bound[i - 1]) {
                return Err(Error::NotIndifference(format!(
                    "bad bound function {bound:?}"
                )));
            }
        }
        Ok(Self { n, bound })
    }

    /// Checks that the edge set has the indifference form.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![vec![false; n + 1]; n + 1];
        for &(a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::NotIndifference(format!("bad edge {{{a},{b}}}")));
            }
            adj[a][b] = true;
            adj[b][a] = true;
        }
        let bound: Vec<usize> = (1..=n)
            .map(|i| (i + 1..=n).filter(|&j| adj[i][j]).max().unwrap_or(i))
            .collect();
        let g = Self::from_bound(bound)?;
        let mut given: Vec<(usize, usize)> =
            edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        given.sort_unstable();
        given.dedup();
        if given != g.edges() {
            return Err(Error::NotIndifference(format!(
                "edges {given:?} do not have the interval structure"
            )));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> &[usize] {
        &self.bound
    }

    /// Edges (i, j) with i < j, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|i| (i + 1..=self.bound[i - 1]).map(move |j| (i, j)))
            .collect()
    }
}

impl fmt::Display for IndifferenceGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(i, j)| format!("{{{i},{j}}}"))
            .collect();
        write!(f, "n={} edges=[{}]", self.n, edges.join(","))
    }
}

/// The graph attached to a 312-avoiding w, with bound m(i) = max(w_1, …, w_i).
pub fn graph_from_permutation(w: &Permutation) -> Result<IndifferenceGraph> {
    if !w.avoids_312() {
        return Err(Error::Contains312(w.to_string()));
    }
    let mut bound = Vec::with_capacity(w.size());
    let mut m = 0;
    for &x in w.one_line() {
        m = m.max(x as usize);
        bound.push(m);
    }
    IndifferenceGraph::from_bound(bound)
}

fn coloring_sum(g: &IndifferenceGraph, nvars: usize, proper_only: bool) -> Result<SymFunc> {
    let n = g.n;
    if nvars < n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: nvars,
        });
    }
    let edges = g.edges();
    let mut counts: HashMap<Vec<u8>, Vec<i64>> = HashMap::new();
    let mut colors = vec![0usize; n];
    'outer: loop {
        let proper = edges.iter().all(|&(i, j)| colors[i - 1] != colors[j - 1]);
        if proper || !proper_only {
            let asc = edges
                .iter()
                .filter(|&&(i, j)| colors[i - 1] < colors[j - 1])
                .count();
            let mut e = vec![0u8; nvars];
            for &c in &colors {
                e[c] += 1;
            }
            let slot = counts.entry(e).or_insert_with(|| vec![0; edges.len() + 1]);
            slot[asc] += 1;
        }
        for k in (0..n).rev() {
            colors[k] += 1;
            if colors[k] < nvars {
                continue 'outer;
            }
            colors[k] = 0;
        }
        break;
    }
    let poly: HashMap<Vec<u8>, HalfLaurent> = counts
        .into_iter()
        .map(|(e, c)| (e, HalfLaurent::from_q_coeffs(&c)))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let coeffs: BTreeMap<_, RatFunc> = collect_symmetric(&poly)?
        .into_iter()
        .map(|(l, c)| (l, c.into()))
        .collect();
    SymFunc::new(n, Basis::M, coeffs)
}

/// X_{G,q} = Σ q^{asc(κ)} x_κ over proper colorings κ: [n] → [N].
pub fn chromatic_qsym(g: &IndifferenceGraph, nvars: usize) -> Result<SymFunc> {
    coloring_sum(g, nvars, true)
}

/// LLT_{G,q}: the same sum over all colorings.
pub fn llt_poly(g: &IndifferenceGraph, nvars: usize) -> Result<SymFunc> {
    coloring_sum(g, nvars, false)
}

/// X[X] = (q−1)^{−n} LLT[(q−1)X] for the graph of w.
pub fn verify_plethystic_relation(w: &Permutation, nvars: usize) -> Result<bool> {
    let g = graph_from_permutation(w)?;
    let x = chromatic_qsym(&g, nvars)?;
    let llt = llt_poly(&g, nvars)?;
    let q1 = RatFunc::from(HalfLaurent::from_q_coeffs(&[-1, 1]));
    let rhs = llt.plethysm_scale(&q1)?.scale(&q1.powi(-(g.n as i32))?);
    x.same_function(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn graphs_of_small_permutations() {
        assert_eq!(
            graph_from_permutation(&perm("21")).unwrap().edges(),
            vec![(1, 2)]
        );
        assert!(graph_from_permutation(&perm("123"))
            .unwrap()
            .edges()
            .is_empty());
        assert!(matches!(
            graph_from_permutation(&perm("312")),
            Err(Error::Contains312(_))
        ));
        assert_eq!(
            graph_from_permutation(&perm("231")).unwrap().edges(),
            vec![(1, 2), (2, 3)]
        );
    }

    #[test]
    fn inversion_graph_of_231_is_not_an_indifference_graph() {
        assert!(IndifferenceGraph::from_edges(3, &[(1, 3), (2, 3)]).is_err());
        assert!(IndifferenceGraph::from_edges(3, &[(1, 2), (2, 3)]).is_ok());
    }

    #[test]
    fn single_edge() {
        let g = graph_from_permutation(&perm("21")).unwrap();
        assert_eq!(chromatic_qsym(&g, 2).unwrap().to_string(), "(1+q)·m[1,1]");
        assert_eq!(llt_poly(&g, 2).unwrap().to_string(), "m[2] + (1+q)·m[1,1]");
    }

    #[test]
    fn edgeless_graphs() {
        let g1 = graph_from_permutation(&perm("1")).unwrap();
        assert_eq!(chromatic_qsym(&g1, 1).unwrap().to_string(), "m[1]");
        assert_eq!(llt_poly(&g1, 1).unwrap().to_string(), "m[1]");
        let g2 = graph_from_permutation(&perm("12")).unwrap();
        assert_eq!(
            chromatic_qsym(&g2, 2).unwrap().to_string(),
            "m[2] + 2·m[1,1]"
        );
        assert_eq!(chromatic_qsym(&g2, 2).unwrap(), llt_poly(&g2, 2).unwrap());
    }

    #[test]
    fn too_few_variables() {
        let g = graph_from_permutation(&perm("21")).unwrap();
        assert!(chromatic_qsym(&g, 1).is_err());
    }

    #[test]
    fn plethystic_relation_small() {
        for w in ["1", "21", "12", "231", "321", "213"] {
            assert!(
                verify_plethystic_relation(&perm(w), w.len()).unwrap(),
                "{w}"
            );
        }
    }

    #[test]
    fn bound_validation() {
        assert!(IndifferenceGraph::from_bound(vec![2, 1]).is_err());
        assert!(IndifferenceGraph::from_bound(vec![3, 2, 3]).is_err());
        assert!(IndifferenceGraph::from_bound(vec![2, 3, 3]).is_ok());
    }

    #[test]
    fn colorings_match_hecke_traces() {
        use crate::hecke::c_tilde;
        use crate::traces::{family_tables, y_q, Family};
        for n in 1..=4 {
            let llt_tables = family_tables(Family::EpsLlt, n).unwrap();
            for w in Permutation::all(n).filter(|w| w.avoids_312()) {
                let g = graph_from_permutation(&w).unwrap();
                let c = c_tilde(&w).unwrap();
                assert_eq!(
                    chromatic_qsym(&g, n).unwrap(),
                    y_q(&c).unwrap(),
                    "X for {w}"
                );
                let coeffs = crate::Partition::all(n)
                    .into_iter()
                    .zip(llt_tables.iter())
                    .map(|(l, t)| (l, t.eval(&c).unwrap()))
                    .collect();
                let expected = SymFunc::new(n, Basis::M, coeffs).unwrap();
                assert_eq!(llt_poly(&g, n).unwrap(), expected, "LLT for {w}");
            }
        }
    }
}
