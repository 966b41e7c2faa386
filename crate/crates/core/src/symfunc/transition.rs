use std::collections::HashMap;
use std::sync::OnceLock;

use super::expand::{self, IntPoly};
use super::Basis;
use crate::error::Result;
use crate::limits::{self, HARD_MAX_N};
use crate::linalg::{self, Matrix};
use crate::partition::Partition;
use crate::ring::{rational, Rational};

/// Transition matrices between the six bases in degree n.
///
/// `to_m[b][i][j]` is the coefficient of `m_{λ_j}` in `b_{λ_i}`, and
/// `from_m[b]` is its inverse, all indexed by [`Partition::all`] order.
pub struct Transitions {
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    to_m: [Matrix<Rational>; 6],
    from_m: [Matrix<Rational>; 6],
}

static CACHE: [OnceLock<Transitions>; HARD_MAX_N + 1] = [const { OnceLock::new() }; HARD_MAX_N + 1];

impl Transitions {
    pub fn get(n: usize) -> Result<&'static Transitions> {
        limits::check("symmetric function", n, limits::TRACE_MAX_N)?;
        Ok(CACHE[n].get_or_init(|| Self::build(n)))
    }

    fn build(n: usize) -> Self {
        let partitions = Partition::all(n);
        let index: HashMap<Partition, usize> = partitions
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let k = partitions.len();

        let to_matrix = |expand: &dyn Fn(&Partition) -> IntPoly| -> Matrix<Rational> {
            partitions
                .iter()
                .map(|l| {
                    let coeffs = expand::collect_symmetric(&expand(l))
                        .expect("classical basis elements are symmetric");
                    let mut row = vec![rational(0); k];
                    for (mu, c) in coeffs {
                        row[index[&mu]] = rational(c);
                    }
                    row
                })
                .collect()
        };

        let identity: Matrix<Rational> = (0..k)
            .map(|i| (0..k).map(|j| rational((i == j) as i64)).collect())
            .collect();
        let e = to_matrix(&|l| expand::elementary_product(n, l));
        let h = to_matrix(&|l| expand::complete_product(n, l));
        let p = to_matrix(&|l| expand::power_sum_product(n, l));
        let s = to_matrix(&|l| expand::schur(n, l));

        let inv = |m: &Matrix<Rational>| {
            linalg::invert(m, "symmetric function transition").expect("bases are invertible")
        };
        let p_inv = inv(&p);
        // f_λ = ω(m_λ): expand m_λ in p, twist by sgn, return to m
        let f: Matrix<Rational> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        (0..k)
                            .map(|nu| &p_inv[i][nu] * rational(partitions[nu].sign()) * &p[nu][j])
                            .fold(rational(0), |a, b| a + b)
                    })
                    .collect()
            })
            .collect();

        let to_m = [identity.clone(), e, h, p, s, f];
        let from_m = [
            identity,
            inv(&to_m[1]),
            inv(&to_m[2]),
            p_inv,
            inv(&to_m[4]),
            inv(&to_m[5]),
        ];
        Self {
            partitions,
            index,
            to_m,
            from_m,
        }
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, l: &Partition) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn to_m(&self, b: Basis) -> &Matrix<Rational> {
        &self.to_m[b as usize]
    }

    pub fn from_m(&self, b: Basis) -> &Matrix<Rational> {
        &self.from_m[b as usize]
    }
}
