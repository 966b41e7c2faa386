//! Explicit polynomials in exactly N variables, used to build transition
//! matrices and to collect enumerated generating functions into the m-basis.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Exponent vector of length N.
pub(crate) type Exponents = Vec<u8>;
pub(crate) type IntPoly = HashMap<Exponents, i64>;

fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = IntPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn one(nvars: usize) -> IntPoly {
    IntPoly::from([(vec![0; nvars], 1)])
}

fn product(nvars: usize, factors: impl Iterator<Item = IntPoly>) -> IntPoly {
    factors.fold(one(nvars), |acc, f| mul(&acc, &f))
}

pub(crate) fn power_sum(nvars: usize, k: usize) -> IntPoly {
    (0..nvars)
        .map(|i| {
            let mut e = vec![0; nvars];
            e[i] = k as u8;
            (e, 1)
        })
        .collect()
}

/// Σ over weakly increasing index sequences (h) or strictly increasing ones (e).
fn elementary_or_complete(nvars: usize, k: usize, strict: bool) -> IntPoly {
    fn rec(
        nvars: usize,
        k: usize,
        start: usize,
        strict: bool,
        e: &mut Exponents,
        out: &mut IntPoly,
    ) {
        if k == 0 {
            *out.entry(e.clone()).or_insert(0) += 1;
            return;
        }
        for i in start..nvars {
            e[i] += 1;
            rec(nvars, k - 1, if strict { i + 1 } else { i }, strict, e, out);
            e[i] -= 1;
        }
    }
    let mut out = IntPoly::new();
    rec(nvars, k, 0, strict, &mut vec![0; nvars], &mut out);
    out
}

pub(crate) fn elementary(nvars: usize, k: usize) -> IntPoly {
    elementary_or_complete(nvars, k, true)
}

pub(crate) fn complete(nvars: usize, k: usize) -> IntPoly {
    elementary_or_complete(nvars, k, false)
}

pub(crate) fn power_sum_product(nvars: usize, l: &Partition) -> IntPoly {
    product(nvars, l.parts().iter().map(|&k| power_sum(nvars, k)))
}

pub(crate) fn elementary_product(nvars: usize, l: &Partition) -> IntPoly {
    product(nvars, l.parts().iter().map(|&k| elementary(nvars, k)))
}

pub(crate) fn complete_product(nvars: usize, l: &Partition) -> IntPoly {
    product(nvars, l.parts().iter().map(|&k| complete(nvars, k)))
}

/// Schur polynomial as a sum over semistandard tableaux with entries ≤ N.
pub(crate) fn schur(nvars: usize, l: &Partition) -> IntPoly {
    let shape = l.parts();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u8>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = IntPoly::new();

    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u8>>,
        nvars: usize,
        e: &mut Exponents,
        out: &mut IntPoly,
    ) {
        if k == cells.len() {
            *out.entry(e.clone()).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for x in lo_row.max(lo_col)..=nvars as u8 {
            grid[r][c] = x;
            e[x as usize - 1] += 1;
            rec(k + 1, cells, grid, nvars, e, out);
            e[x as usize - 1] -= 1;
        }
        grid[r][c] = 0;
    }

    rec(0, &cells, &mut grid, nvars, &mut vec![0; nvars], &mut out);
    out
}

/// Number of distinct rearrangements of an exponent vector.
fn orbit_size(e: &[u8]) -> u128 {
    let mut counts: BTreeMap<u8, u128> = BTreeMap::new();
    for &x in e {
        *counts.entry(x).or_insert(0) += 1;
    }
    let fact = |k: u128| (1..=k).product::<u128>();
    counts
        .values()
        .fold(fact(e.len() as u128), |acc, &m| acc / fact(m))
}

/// Collects a symmetric polynomial in N variables into m-basis coefficients.
///
/// Every monomial of a partition's orbit must be present with the same
/// coefficient; anything else is reported as [`Error::NotSymmetric`].
pub(crate) fn collect_symmetric<T: Clone + PartialEq + std::fmt::Display>(
    poly: &HashMap<Exponents, T>,
) -> Result<BTreeMap<Partition, T>> {
    let mut out: BTreeMap<Partition, (T, u128)> = BTreeMap::new();
    for (e, c) in poly {
        let l = Partition::from_unsorted(e.iter().map(|&x| x as usize).collect());
        match out.get_mut(&l) {
            None => {
                out.insert(l, (c.clone(), 1));
            }
            Some((prev, count)) => {
                if prev != c {
                    return Err(Error::NotSymmetric(format!(
                        "monomials of type {l} carry coefficients {prev} and {c}"
                    )));
                }
                *count += 1;
            }
        }
    }
    let mut result = BTreeMap::new();
    for (l, (c, count)) in out {
        let mut e: Vec<u8> = l.parts().iter().map(|&p| p as u8).collect();
        let nvars = poly.keys().next().map_or(0, Vec::len);
        e.resize(nvars, 0);
        if orbit_size(&e) != count {
            return Err(Error::NotSymmetric(format!(
                "only {count} of {} monomials of type {l} present",
                orbit_size(&e)
            )));
        }
        result.insert(l, c);
    }
    Ok(result)
}
