use std::fmt;

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The empty partition is the unique partition of 0. Row `i` (0-based) of the
/// Young diagram has `parts[i]` boxes and row 0 is the longest row.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts arbitrary multiplicities into a partition, dropping zeros.
    pub fn from_multiplicities(counts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = counts.into_iter().filter(|&c| c > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The single-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(n - m, 1^m)`. Requires `m < n`.
    pub fn hook(n: usize, m: usize) -> Result<Self> {
        if m >= n {
            return Err(Error::OutOfRange(format!("hook (n - m, 1^m) needs m < n, got n={n}, m={m}")));
        }
        let mut parts = vec![n - m];
        parts.extend(std::iter::repeat(1).take(m));
        Ok(Partition { parts })
    }

    /// `(2^k, 1^(n - 2k))`, the block shape of the packets-of-two shuffle.
    pub fn pairs(n: usize, k: usize) -> Result<Self> {
        if 2 * k > n {
            return Err(Error::OutOfRange(format!("2k must not exceed n, got n={n}, k={k}")));
        }
        let mut parts = vec![2; k];
        parts.extend(std::iter::repeat(1).take(n - 2 * k));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The size `n` of the partition.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i`, reading missing parts as 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True when the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.parts[i] <= self.parts[i])
    }

    /// The partition obtained by adding a box at the end of `row` (0-based), if legal.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row > self.len() || (row > 0 && self.part(row - 1) <= self.part(row)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == self.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Some(Partition { parts })
    }

    /// The partition obtained by removing the last box of `row` (0-based), if legal.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        if row >= self.len() || self.part(row) <= self.part(row + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Sum over boxes of `column - row`.
    pub fn diag_index(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                let len = len as i64;
                let r = r as i64;
                len * (len - 1) / 2 - r * len
            })
            .sum()
    }

    /// Multiplicity of each part size, indexed by size (index 0 unused).
    pub fn part_multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            mult[p] += 1;
        }
        mult
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1"`, `"(3,1)"`, `"3 1"` or `""`/`"()"` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first and `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dominance order: every prefix sum of `lam` is at least that of `mu`.
pub fn dominates(lam: &Partition, mu: &Partition) -> Result<bool> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: lam.size(), found: mu.size() });
    }
    let len = lam.len().max(mu.len());
    let (mut a, mut b) = (0usize, 0usize);
    for i in 0..len {
        a += lam.part(i);
        b += mu.part(i);
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidSkewShape(format!("{inner} does not fit inside {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `lam / ∅`.
    pub fn straight(lam: Partition) -> Self {
        SkewShape { outer: lam, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Boxes as 0-based `(row, column)` pairs, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.outer.len())
            .flat_map(move |r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c)))
    }

    /// Sum over the boxes of `column - row`.
    pub fn diag_index(&self) -> i64 {
        self.outer.diag_index() - self.inner.diag_index()
    }

    /// No two boxes share a column.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.outer.len()).all(|r| self.inner.part(r) >= self.outer.part(r + 1))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_small_partitions() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let four: Vec<_> = partitions_of(4).iter().map(|q| q.parts().to_vec()).collect();
        assert_eq!(four, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert_eq!(partitions_of(6).len(), 11);
    }

    #[test]
    fn partition_counts_match_brute_force() {
        // count multisets of positive integers summing to n by a coin-change table
        for n in 0..=12usize {
            let mut ways = vec![0u64; n + 1];
            ways[0] = 1;
            for part in 1..=n {
                for total in part..=n {
                    ways[total] += ways[total - part];
                }
            }
            assert_eq!(partitions_of(n).len() as u64, ways[n], "n = {n}");
        }
    }

    #[test]
    fn rejects_malformed_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p(&[4]), &p(&[2, 2])).unwrap());
        assert!(dominates(&p(&[3, 1]), &p(&[3, 1])).unwrap());
        assert!(!dominates(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(dominates(&p(&[4]), &p(&[3])).is_err());
        let above: Vec<_> = partitions_of(4)
            .into_iter()
            .filter(|l| dominates(l, &p(&[2, 2])).unwrap())
            .collect();
        assert_eq!(above, vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=8 {
            let all = partitions_of(n);
            for a in &all {
                assert!(dominates(a, a).unwrap());
                for b in &all {
                    let ab = dominates(a, b).unwrap();
                    if ab && dominates(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &all {
                        if dominates(b, c).unwrap() {
                            assert!(dominates(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_index_examples() {
        // diagrams drawn with boxes labelled by column - row
        assert_eq!(p(&[5, 4, 4, 1]).diag_index(), 7);
        assert_eq!(p(&[6, 4]).diag_index(), 17);
        assert_eq!(p(&[1]).diag_index(), 0);
        for n in 0..=8 {
            for lam in partitions_of(n) {
                let skew = SkewShape::straight(lam.clone());
                let direct: i64 = skew.boxes().map(|(r, c)| c as i64 - r as i64).sum();
                assert_eq!(skew.diag_index(), direct);
            }
        }
    }

    #[test]
    fn horizontal_strips() {
        let strip = SkewShape::new(p(&[4, 2, 2, 1]), p(&[3, 2, 1])).unwrap();
        assert!(strip.is_horizontal_strip());
        assert_eq!(strip.size(), 3);
        assert!(SkewShape::new(p(&[3, 1]), p(&[3, 1])).unwrap().is_horizontal_strip());
        assert!(!SkewShape::new(p(&[2, 2]), p(&[1])).unwrap().is_horizontal_strip());
        assert!(SkewShape::new(p(&[2]), p(&[3])).is_err());
        // brute-force column occupancy agrees on every skew shape of size <= 6
        for n in 0..=6 {
            for outer in partitions_of(n) {
                for m in 0..=n {
                    for inner in partitions_of(m).into_iter().filter(|i| outer.contains(i)) {
                        let skew = SkewShape::new(outer.clone(), inner).unwrap();
                        let mut cols = vec![0; n + 1];
                        skew.boxes().for_each(|(_, c)| cols[c] += 1);
                        assert_eq!(skew.is_horizontal_strip(), cols.iter().all(|&k| k <= 1));
                    }
                }
            }
        }
    }

    #[test]
    fn add_and_remove_boxes() {
        let lam = p(&[2, 1]);
        assert_eq!(lam.add_box(0), Some(p(&[3, 1])));
        assert_eq!(lam.add_box(1), Some(p(&[2, 2])));
        assert_eq!(lam.add_box(2), Some(p(&[2, 1, 1])));
        assert_eq!(lam.add_box(3), None);
        assert_eq!(p(&[2, 2]).add_box(1), None);
        assert_eq!(lam.remove_box(1), Some(p(&[2])));
        assert_eq!(p(&[2, 2]).remove_box(0), None);
        assert_eq!(p(&[3, 1, 1]).conjugate(), p(&[3, 1, 1]));
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
    }
}
