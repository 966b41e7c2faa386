use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition λ₁ ≥ λ₂ ≥ … ≥ λ_r > 0.
///
/// The derived order is lexicographic on the parts; iteration helpers return
/// partitions in lexicographically *descending* order, e.g. `[3], [2,1], [1,1,1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    /// The one-row partition (n).
    pub fn row(n: usize) -> Self {
        Self(vec![n])
    }

    /// The one-column partition (1ⁿ).
    pub fn column(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts ℓ(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        Self(
            (0..cols)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    /// Multiplicity mᵢ of each part size i, indexed from 0.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// z_λ = ∏ i^{mᵢ} mᵢ!.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    /// (−1)^{n − ℓ(λ)}.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// b(λ) = Σ (i−1)λᵢ.
    pub fn b(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Hook lengths of all cells, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.0[j] - i - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// All partitions of n in lexicographically descending order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(&self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `2,2,1`, `[2,2,1]` or `(2,2,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_matches(|c| matches!(c, '[' | ']' | '(' | ')'));
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad partition {s:?}")))?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn stats_of_two_one() {
        let l = p(&[2, 1]);
        let mut hooks = l.hooks();
        hooks.sort();
        assert_eq!(hooks, vec![1, 1, 3]);
        assert_eq!(l.z(), BigInt::from(2));
        assert_eq!(l.sign(), -1);
        assert_eq!(l.b(), 1);
    }

    #[test]
    fn stats_of_column() {
        let l = Partition::column(5);
        assert_eq!(l.b(), 10);
        assert_eq!(l.z(), BigInt::from(120));
    }

    #[test]
    fn stats_of_two_two() {
        let l = p(&[2, 2]);
        assert_eq!(l.b(), 2);
        let mut hooks = l.hooks();
        hooks.sort();
        assert_eq!(hooks, vec![1, 2, 2, 3]);
    }

    #[test]
    fn b_via_conjugate_columns() {
        for n in 1..=7 {
            for l in Partition::all(n) {
                let alt: usize = l.conjugate().parts().iter().map(|c| c * (c - 1) / 2).sum();
                assert_eq!(l.b(), alt, "{l}");
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    #[test]
    fn enumeration_order_and_count() {
        let all = Partition::all(4);
        let shown: Vec<String> = all.iter().map(|l| l.to_string()).collect();
        assert_eq!(shown, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn parse_forms() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("[3]".parse::<Partition>().unwrap(), p(&[3]));
        assert!("1,2".parse::<Partition>().is_err());
    }
}
