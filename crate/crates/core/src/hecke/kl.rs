//! R-polynomials and Kazhdan–Lusztig polynomials.
//!
//! Conventions: `(T_{w⁻¹})⁻¹ = q^{-ℓ(w)} Σ_u (−1)^{ℓ(w)−ℓ(u)} R_{u,w}(q) T_u`
//! and `C̃_w = Σ_{u ≤ w} P_{u,w}(q) T_u`. P is obtained from R through
//! `q^{ℓ(w)−ℓ(x)} P_{x,w}(q⁻¹) − P_{x,w}(q) = Σ_{x<y≤w} R_{x,y}(q) P_{y,w}(q)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::HeckeElement;
use crate::error::{Error, Result};
use crate::limits::{self, HARD_MAX_N};
use crate::perm::{Permutation, SymmetricGroup};
use crate::ring::HalfLaurent;

type Column = Arc<Vec<HalfLaurent>>;

/// Lazily filled R- and P-tables for S_n, stored column by column
/// (one column per upper index w). Safe to share between threads; a column
/// computed twice by racing threads is identical, so the first insert wins.
pub struct KlTable {
    group: &'static SymmetricGroup,
    r_columns: Mutex<HashMap<usize, Column>>,
    p_columns: Mutex<HashMap<usize, Column>>,
}

static TABLES: [OnceLock<KlTable>; HARD_MAX_N + 1] = [const { OnceLock::new() }; HARD_MAX_N + 1];

impl KlTable {
    pub fn get(n: usize) -> Result<&'static KlTable> {
        limits::check("Kazhdan-Lusztig", n, limits::KL_MAX_N)?;
        let group = SymmetricGroup::get(n)?;
        Ok(TABLES[n].get_or_init(|| KlTable {
            group,
            r_columns: Mutex::new(HashMap::new()),
            p_columns: Mutex::new(HashMap::new()),
        }))
    }

    pub fn group(&self) -> &'static SymmetricGroup {
        self.group
    }

    /// R_{u,w} for all u (by group index), recursing on the largest right descent of w.
    pub fn r_column(&self, w: usize) -> Column {
        if let Some(c) = self.r_columns.lock().unwrap().get(&w) {
            return c.clone();
        }
        let g = self.group;
        let order = g.order();
        let col: Vec<HalfLaurent> = match g.element(w).largest_right_descent() {
            None => (0..order)
                .map(|u| {
                    if u == w {
                        HalfLaurent::one()
                    } else {
                        HalfLaurent::zero()
                    }
                })
                .collect(),
            Some(s) => {
                let ws = g.mul_simple_right(w, s);
                let prev = self.r_column(ws);
                let q = HalfLaurent::q();
                let q_minus_one = &q - &HalfLaurent::one();
                (0..order)
                    .map(|u| {
                        if !g.leq(u, w) {
                            return HalfLaurent::zero();
                        }
                        let us = g.mul_simple_right(u, s);
                        if g.element(u).has_right_descent(s) {
                            prev[us].clone()
                        } else {
                            &q_minus_one * &prev[u] + &q * &prev[us]
                        }
                    })
                    .collect()
            }
        };
        let col = Arc::new(col);
        self.r_columns
            .lock()
            .unwrap()
            .entry(w)
            .or_insert(col)
            .clone()
    }

    /// P_{x,w} for all x (by group index); zero off the interval [e, w].
    pub fn p_column(&self, w: usize) -> Column {
        if let Some(c) = self.p_columns.lock().unwrap().get(&w) {
            return c.clone();
        }
        let g = self.group;
        let interval = g.lower_interval(w);
        let r_cols: HashMap<usize, Column> =
            interval.iter().map(|&y| (y, self.r_column(y))).collect();
        let mut p = vec![HalfLaurent::zero(); g.order()];
        p[w] = HalfLaurent::one();
        // interval is sorted by decreasing length, so every y > x is already done
        for &x in interval.iter().skip(1) {
            let d = (g.length(w) - g.length(x)) as i32;
            let rhs: HalfLaurent = interval
                .iter()
                .filter(|&&y| y != x && g.length(y) > g.length(x) && g.leq(x, y))
                .map(|&y| &r_cols[&y][x] * &p[y])
                .sum();
            let low = rhs.filter_exponents(|e| e < d);
            let value = -low;
            debug_assert_eq!(
                &rhs + &value,
                value.bar().shift(2 * d),
                "KL duality failed at x={}, w={}",
                g.element(x),
                g.element(w)
            );
            p[x] = value;
        }
        let col = Arc::new(p);
        self.p_columns
            .lock()
            .unwrap()
            .entry(w)
            .or_insert(col)
            .clone()
    }

    pub fn r(&self, u: usize, w: usize) -> HalfLaurent {
        self.r_column(w)[u].clone()
    }

    pub fn p(&self, u: usize, w: usize) -> HalfLaurent {
        self.p_column(w)[u].clone()
    }
}

fn indices(u: &Permutation, w: &Permutation) -> Result<(&'static KlTable, usize, usize)> {
    if u.size() != w.size() {
        return Err(Error::SizeMismatch {
            expected: w.size(),
            got: u.size(),
        });
    }
    let table = KlTable::get(w.size())?;
    let g = table.group();
    Ok((table, g.index_of(u)?, g.index_of(w)?))
}

/// R_{u,w}(q); zero unless u ≤ w.
pub fn r_polynomial(u: &Permutation, w: &Permutation) -> Result<HalfLaurent> {
    let (t, u, w) = indices(u, w)?;
    Ok(t.r(u, w))
}

/// P_{u,w}(q); zero unless u ≤ w.
pub fn kl_polynomial(u: &Permutation, w: &Permutation) -> Result<HalfLaurent> {
    let (t, u, w) = indices(u, w)?;
    Ok(t.p(u, w))
}

/// C̃_w = Σ_{u ≤ w} P_{u,w}(q) T_u.
pub fn c_tilde(w: &Permutation) -> Result<HeckeElement> {
    let table = KlTable::get(w.size())?;
    let g = table.group();
    let col = table.p_column(g.index_of(w)?);
    HeckeElement::from_terms(
        w.size(),
        col.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (g.element(i).clone(), c.clone())),
    )
}
