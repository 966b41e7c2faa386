use std::collections::HashMap;
use std::sync::OnceLock;

use super::Permutation;
use crate::error::{Error, Result};
use crate::limits::HARD_MAX_N;
use crate::partition::Partition;

/// Precomputed data for S_n: elements in lexicographic order with their
/// lengths, rank matrices and conjugacy data. Built once per n and shared.
pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    lengths: Vec<usize>,
    ranks: Vec<Vec<u8>>,
    class_of: Vec<usize>,
    classes: Vec<Partition>,
    class_reps: Vec<(Partition, Permutation)>,
}

static GROUPS: [OnceLock<SymmetricGroup>; HARD_MAX_N + 1] =
    [const { OnceLock::new() }; HARD_MAX_N + 1];

impl SymmetricGroup {
    /// The shared instance for S_n.
    pub fn get(n: usize) -> Result<&'static SymmetricGroup> {
        if n > HARD_MAX_N {
            return Err(Error::GuardExceeded {
                what: "symmetric group",
                n,
                max: HARD_MAX_N,
            });
        }
        Ok(GROUPS[n].get_or_init(|| Self::build(n)))
    }

    fn build(n: usize) -> Self {
        let elements: Vec<Permutation> = Permutation::all(n).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let lengths = elements.iter().map(|w| w.length()).collect();
        let ranks = elements.iter().map(|w| w.rank_matrix()).collect();
        let classes = Partition::all(n);
        let class_index: HashMap<&Partition, usize> =
            classes.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let class_of: Vec<usize> = elements
            .iter()
            .map(|w| class_index[&w.cycle_type()])
            .collect();

        // elements are in lex order, so the first minimum wins ties
        let mut best: Vec<Option<usize>> = vec![None; classes.len()];
        for (i, w) in elements.iter().enumerate() {
            let c = class_of[i];
            let better = match best[c] {
                None => true,
                Some(j) => w.length() < elements[j].length(),
            };
            if better {
                best[c] = Some(i);
            }
        }
        let class_reps = classes
            .iter()
            .zip(&best)
            .map(|(l, b)| (l.clone(), elements[b.unwrap()].clone()))
            .collect();

        Self {
            n,
            elements,
            index,
            lengths,
            ranks,
            class_of,
            classes,
            class_reps,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &Permutation) -> Result<usize> {
        self.index.get(w).copied().ok_or(Error::SizeMismatch {
            expected: self.n,
            got: w.size(),
        })
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    /// Bruhat comparison by element index.
    pub fn leq(&self, u: usize, w: usize) -> bool {
        self.lengths[u] <= self.lengths[w] && super::rank_leq(&self.ranks[u], &self.ranks[w])
    }

    /// Index of the cycle type of element `i` within [`Self::classes`].
    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Partitions of n in descending order, i.e. the conjugacy classes.
    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn class_reps(&self) -> &[(Partition, Permutation)] {
        &self.class_reps
    }

    /// Index of `w s_i`.
    pub fn mul_simple_right(&self, i: usize, s: usize) -> usize {
        self.index[&self.elements[i].mul_simple_right(s)]
    }

    /// Indices of the lower Bruhat interval [e, w], sorted by decreasing length.
    pub fn lower_interval(&self, w: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.order()).filter(|&u| self.leq(u, w)).collect();
        out.sort_by(|&a, &b| self.lengths[b].cmp(&self.lengths[a]).then(a.cmp(&b)));
        out
    }
}
