use std::fmt;

use crate::combinatorics::partition::Partition;
use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
///
/// Composition follows functions: `(s.compose(t))(i) = s(t(i))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(one_line));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    /// Builds a permutation of `1..=n` from disjoint cycles, e.g. `[[1, 2], [3, 4]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut one_line: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n + 1];
        for cycle in cycles {
            for (idx, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || touched[a] {
                    return Err(Error::InvalidPermutation(cycle.to_vec()));
                }
                touched[a] = true;
                one_line[a - 1] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Permutation::new(one_line)
    }

    pub fn degree(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// The image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self ∘ other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation { one_line: other.one_line.iter().map(|&j| self.one_line[j - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut lengths = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.one_line[j - 1];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_multiplicities(lengths)
    }

    /// Position of this permutation in the lexicographic listing of `S_n`.
    pub fn rank(&self) -> usize {
        let n = self.degree();
        let mut used = vec![false; n + 1];
        let mut rank = 0;
        for (i, &v) in self.one_line.iter().enumerate() {
            let smaller_unused = (1..v).filter(|&u| !used[u]).count();
            rank = rank * (n - i) + smaller_unused;
            used[v] = true;
        }
        rank
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(n: usize, mut rank: usize) -> Permutation {
        let mut fact = vec![1usize; n + 1];
        for i in 1..=n {
            fact[i] = fact[i - 1] * i;
        }
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut one_line = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let idx = rank / fact[i];
            rank %= fact[i];
            one_line.push(pool.remove(idx));
        }
        Permutation { one_line }
    }

    /// Every permutation of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { one_line: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

/// Advances `v` to its lexicographic successor; false when `v` was the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// Digits run together when `n ≤ 9`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.degree() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    /// Accepts `"1475263"` (single digits) or `"10,2,3,…"`.
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_letters(s)?)
    }
}

/// Splits either a run of digits or a comma-separated list into integers.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("not a digit: {c:?}"))))
            .collect()
    }
}
