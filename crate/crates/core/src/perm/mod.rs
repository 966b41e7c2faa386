//! Permutations of [n] in one-line notation.
//!
//! Composition is fixed globally as `(u ∘ v)(i) = u(v(i))`. With this
//! convention, right multiplication by `s_i` swaps positions `i, i+1` of the
//! one-line word.

mod blocks;
mod group;

pub use blocks::OrderedSetPartition;
pub use group::SymmetricGroup;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits;
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(one_line: Vec<u8>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::NotAPermutation(format!("{one_line:?}")));
            }
            seen[x] = true;
        }
        Ok(Self(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u8).collect())
    }

    /// The longest element w₀ = n⋯21.
    pub fn longest(n: usize) -> Self {
        Self((1..=n as u8).rev().collect())
    }

    /// The adjacent transposition s_i (1 ≤ i < n).
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not a generator of S_{n}");
        let mut w = Self::identity(n);
        w.0.swap(i - 1, i);
        w
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.0
    }

    /// w(i), 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// ℓ(w), the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&y| y < w[i]).count())
            .sum()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u8;
        }
        Self(inv)
    }

    /// `u ∘ v`, i.e. `i ↦ u(v(i))`.
    pub fn compose(&self, v: &Permutation) -> Result<Self> {
        check_same_size(self, v)?;
        Ok(Self(v.0.iter().map(|&j| self.0[j as usize - 1]).collect()))
    }

    /// `w s_i`: swap positions i and i+1.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.0.swap(i - 1, i);
        w
    }

    /// `s_i w`: swap the values i and i+1.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let (a, b) = (i as u8, i as u8 + 1);
        Self(
            self.0
                .iter()
                .map(|&x| {
                    if x == a {
                        b
                    } else if x == b {
                        a
                    } else {
                        x
                    }
                })
                .collect(),
        )
    }

    /// True iff ℓ(w s_i) < ℓ(w).
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.0.len())
            .filter(|&i| self.has_right_descent(i))
            .collect()
    }

    pub fn largest_right_descent(&self) -> Option<usize> {
        (1..self.0.len()).rev().find(|&i| self.has_right_descent(i))
    }

    /// A reduced word `[i₁, …, i_ℓ]` with `w = s_{i₁} ⋯ s_{i_ℓ}`, peeling the
    /// largest right descent at each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = w.largest_right_descent() {
            rev.push(i);
            w = w.mul_simple_right(i);
        }
        rev.reverse();
        rev
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize - 1;
                len += 1;
            }
            parts.push(len);
        }
        Partition::from_unsorted(parts)
    }

    /// Minimum length over the conjugacy class of `w`, n − (number of cycles).
    pub fn min_class_length(&self) -> usize {
        self.size() - self.cycle_type().len()
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.size();
        if k > self.size() {
            return false;
        }
        if k == 0 {
            return true;
        }
        let mut chosen = Vec::with_capacity(k);
        search_pattern(&self.0, &pattern.0, 0, &mut chosen)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }

    /// Avoids both 3412 and 4231.
    pub fn is_smooth(&self) -> bool {
        self.avoids(&Permutation(vec![3, 4, 1, 2])) && self.avoids(&Permutation(vec![4, 2, 3, 1]))
    }

    pub fn avoids_312(&self) -> bool {
        self.avoids(&Permutation(vec![3, 1, 2]))
    }

    /// r_w(i, j) = |{k ≤ i : w_k ≥ j}| for 1 ≤ i, j ≤ n, stored row-major.
    pub fn rank_matrix(&self) -> Vec<u8> {
        let n = self.size();
        let mut r = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                let above = (self.0[i] as usize > j) as u8;
                let prev = if i > 0 { r[(i - 1) * n + j] } else { 0 };
                r[i * n + j] = prev + above;
            }
        }
        r
    }

    /// Iterates S_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some(Self::identity(n));
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut w = cur.0.clone();
            if next_permutation(&mut w) {
                next = Some(Self(w));
            }
            Some(cur)
        })
    }
}

fn check_same_size(u: &Permutation, v: &Permutation) -> Result<()> {
    if u.size() != v.size() {
        return Err(Error::SizeMismatch {
            expected: u.size(),
            got: v.size(),
        });
    }
    Ok(())
}

fn next_permutation(w: &mut [u8]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let Some(i) = (0..w.len() - 1).rev().find(|&i| w[i] < w[i + 1]) else {
        return false;
    };
    let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

fn search_pattern(w: &[u8], p: &[u8], from: usize, chosen: &mut Vec<u8>) -> bool {
    let k = chosen.len();
    if k == p.len() {
        return true;
    }
    if w.len() - from < p.len() - k {
        return false;
    }
    for idx in from..w.len() {
        let x = w[idx];
        // relative order with every earlier chosen entry must match the pattern
        let consistent = chosen.iter().zip(p).all(|(&y, &py)| (y < x) == (py < p[k]));
        if consistent {
            chosen.push(x);
            if search_pattern(w, p, idx + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Bruhat order by the rank-matrix criterion: `u ≤ w` iff
/// `r_u(i, j) ≤ r_w(i, j)` for all i, j.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    check_same_size(u, w)?;
    Ok(rank_leq(&u.rank_matrix(), &w.rank_matrix()))
}

pub(crate) fn rank_leq(ru: &[u8], rw: &[u8]) -> bool {
    ru.iter().zip(rw).all(|(a, b)| a <= b)
}

/// For each partition λ of n (descending order), the lexicographically
/// smallest permutation of cycle type λ among those of minimum length.
pub fn min_length_class_reps(n: usize) -> Result<Vec<(Partition, Permutation)>> {
    limits::check("permutation", n, limits::PERM_MAX_N)?;
    let group = SymmetricGroup::get(n)?;
    Ok(group.class_reps().to_vec())
}

impl fmt::Display for Permutation {
    /// Digit string for n ≤ 9, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.size() <= 9 {
            s.collect_str(self)
        } else {
            s.collect_seq(&self.0)
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `2143` (n ≤ 9) or a bracketed / comma list like `[10,2,…]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("bad permutation {s:?}"));
        let entries: Vec<u8> = if t.contains(',') || t.starts_with('[') {
            t.trim_matches(|c| c == '[' || c == ']')
                .split(',')
                .map(|x| x.trim().parse::<u8>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn composition_convention() {
        assert_eq!(p("213").compose(&p("132")).unwrap(), p("231"));
        let w = p("3142");
        assert_eq!(w.compose(&Permutation::identity(4)).unwrap(), w);
        assert!(w.compose(&w.inverse()).unwrap().is_identity());
        assert!(matches!(
            w.compose(&p("21")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn simple_multiplication_matches_compose() {
        let w = p("35142");
        for i in 1..5 {
            let s = Permutation::simple(5, i);
            assert_eq!(w.mul_simple_right(i), w.compose(&s).unwrap());
            assert_eq!(w.mul_simple_left(i), s.compose(&w).unwrap());
        }
    }

    #[test]
    fn reduced_word_multiplies_back() {
        for w in Permutation::all(5) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let rebuilt = word
                .iter()
                .fold(Permutation::identity(5), |acc, &i| acc.mul_simple_right(i));
            assert_eq!(rebuilt, w);
        }
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&p("132"), &p("312")).unwrap());
        assert!(!bruhat_leq(&p("312"), &p("132")).unwrap());
        assert!(!bruhat_leq(&p("231"), &p("312")).unwrap());
        for w in Permutation::all(4) {
            assert!(bruhat_leq(&Permutation::identity(4), &w).unwrap());
            assert!(bruhat_leq(&w, &w).unwrap());
            assert!(bruhat_leq(&w, &Permutation::longest(4)).unwrap());
        }
    }

    #[test]
    fn pattern_examples() {
        assert!(p("4231").contains_pattern(&p("231")));
        assert!(p("3412").contains_pattern(&p("3412")));
        for k in 2..=4 {
            for pat in Permutation::all(k).filter(|x| !x.is_identity()) {
                assert!(!Permutation::identity(6).contains_pattern(&pat));
            }
        }
        assert!(!p("3142").avoids_312());
        assert!(p("2143").avoids_312());
    }

    #[test]
    fn smooth_counts() {
        // 1, 2, 6, 22, 88: permutations avoiding 3412 and 4231
        let counts: Vec<usize> = (1..=5)
            .map(|n| Permutation::all(n).filter(|w| w.is_smooth()).count())
            .collect();
        assert_eq!(counts, [1, 2, 6, 22, 88]);
    }

    #[test]
    fn class_reps_small() {
        let reps = min_length_class_reps(3).unwrap();
        let shown: Vec<(String, String, usize)> = reps
            .iter()
            .map(|(l, w)| (l.to_string(), w.to_string(), w.length()))
            .collect();
        assert_eq!(
            shown,
            [
                ("[3]".into(), "231".into(), 2),
                ("[2,1]".into(), "132".into(), 1),
                ("[1,1,1]".into(), "123".into(), 0),
            ]
        );
        assert!(min_length_class_reps(40).is_err());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(p("2143").cycle_type().to_string(), "[2,2]");
        assert_eq!(p("2341").cycle_type().to_string(), "[4]");
        assert_eq!(Permutation::identity(3).cycle_type().to_string(), "[1,1,1]");
    }

    #[test]
    fn lex_enumeration() {
        let all: Vec<String> = Permutation::all(3).map(|w| w.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(Permutation::all(1).count(), 1);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("[1, 3, 2]"), p("132"));
        assert!("1224".parse::<Permutation>().is_err());
        let big = Permutation::identity(10);
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }
}
