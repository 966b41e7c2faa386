use std::fmt;

use super::Permutation;
use crate::error::{Error, Result};

/// An ordered set partition (I₁, …, I_r) of {1..n}; each block is kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<Vec<u8>>,
}

impl OrderedSetPartition {
    pub fn new(blocks: Vec<Vec<u8>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidBlocks("empty block".into()));
            }
            for &x in b {
                let x = x as usize;
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidBlocks(format!(
                        "{blocks:?} is not a partition of 1..{n}"
                    )));
                }
                seen[x] = true;
            }
        }
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(Self { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    /// Block sizes in order (a composition of n).
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// The longest element of the block subgroup: reverses each block,
    /// sending its i-th smallest element to its i-th largest.
    pub fn longest_element(&self) -> Permutation {
        let mut w: Vec<u8> = (1..=self.n as u8).collect();
        for b in &self.blocks {
            for (x, y) in b.iter().zip(b.iter().rev()) {
                w[*x as usize - 1] = *y;
            }
        }
        Permutation::new(w).expect("block reversal is a permutation")
    }

    /// All ordered set partitions of {1..n} with the given block sizes,
    /// in lexicographic order of block contents.
    pub fn all_of_type(sizes: &[usize]) -> Vec<OrderedSetPartition> {
        let n: usize = sizes.iter().sum();
        let mut out = Vec::new();
        let mut blocks: Vec<Vec<u8>> = vec![Vec::new(); sizes.len()];
        let mut used = vec![false; n + 1];
        fill(sizes, 0, 1, &mut blocks, &mut used, &mut out, n);
        out
    }
}

fn fill(
    sizes: &[usize],
    k: usize,
    min_next: u8,
    blocks: &mut Vec<Vec<u8>>,
    used: &mut Vec<bool>,
    out: &mut Vec<OrderedSetPartition>,
    n: usize,
) {
    if k == sizes.len() {
        out.push(OrderedSetPartition {
            n,
            blocks: blocks.clone(),
        });
        return;
    }
    if blocks[k].len() == sizes[k] {
        fill(sizes, k + 1, 1, blocks, used, out, n);
        return;
    }
    for x in min_next..=n as u8 {
        if used[x as usize] {
            continue;
        }
        used[x as usize] = true;
        blocks[k].push(x);
        fill(sizes, k, x + 1, blocks, used, out, n);
        blocks[k].pop();
        used[x as usize] = false;
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let xs: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", xs.join(","))
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
