//! Standard Young tableaux, the Schützenberger slide Δ, and the type statistic.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::{dominates, partitions_of, Partition, SkewShape};
use crate::error::{Error, Result};

/// A standard Young tableau stored row by row, row 0 being the longest.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        Partition::new(lens.clone()).map_err(|_| Error::InvalidTableau(format!("row lengths {lens:?} are not a partition")))?;
        let n: usize = lens.iter().sum();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &x in row {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidTableau(format!("entries must be 1..={n} once each")));
                }
                seen[x] = true;
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {row:?} does not increase")));
            }
        }
        for r in 1..rows.len() {
            for c in 0..rows[r].len() {
                if rows[r][c] <= rows[r - 1][c] {
                    return Err(Error::InvalidTableau(format!("column {c} does not increase")));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new() }
    }

    /// The one-row tableau `1 2 … n`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        StandardTableau { rows: vec![(1..=n).collect()] }
    }

    /// The one-column tableau with `1` in the long-row corner.
    pub fn column(n: usize) -> Self {
        StandardTableau { rows: (1..=n).map(|i| vec![i]).collect() }
    }

    /// The tableau of shape `(n - 1, 1)` whose second row holds `i`; needs `2 ≤ i ≤ n`.
    pub fn hook(i: usize, n: usize) -> Result<Self> {
        if i < 2 || i > n {
            return Err(Error::OutOfRange(format!("hook tableau needs 2 <= i <= n, got i={i}, n={n}")));
        }
        let first = (1..=n).filter(|&x| x != i).collect();
        Ok(StandardTableau { rows: vec![first, vec![i]] })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("tableau rows form a partition")
    }

    /// Row index (0-based) of every entry, indexed by entry.
    fn row_index(&self) -> Vec<usize> {
        let mut pos = vec![0; self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                pos[x] = r;
            }
        }
        pos
    }

    /// Entries read row by row from the longest row.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for StandardTableau {
    /// Rows longest first, entries joined by `,`, rows by `/`; the empty tableau prints as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl std::str::FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        StandardTableau::new(rows)
    }
}

/// All standard tableaux of the given shape, ordered lexicographically by reading word.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(shape: &Partition, filled: &mut Vec<usize>, rows: &mut Vec<Vec<usize>>, next: usize, out: &mut Vec<StandardTableau>) {
        let n = shape.size();
        if next > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let c = filled[r];
            let fits_row = c < shape.part(r);
            let above_done = r == 0 || filled[r - 1] > c;
            if fits_row && above_done {
                filled[r] += 1;
                rows[r].push(next);
                rec(shape, filled, rows, next + 1, out);
                rows[r].pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut filled = vec![0; shape.len()];
    let mut rows = vec![Vec::new(); shape.len()];
    rec(shape, &mut filled, &mut rows, 1, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

/// All standard tableaux of size `n`, shapes in reverse-lexicographic order.
pub fn all_syt(n: usize) -> Vec<StandardTableau> {
    partitions_of(n).iter().flat_map(enumerate_syt).collect()
}

/// Number of standard tableaux of the shape, by the hook length formula.
pub fn count_syt(shape: &Partition) -> BigUint {
    let conj = shape.conjugate();
    let mut hooks = BigUint::one();
    for r in 0..shape.len() {
        for c in 0..shape.part(r) {
            let hook = (shape.part(r) - c - 1) + (conj.part(c) - r - 1) + 1;
            hooks *= hook;
        }
    }
    let n_fact: BigUint = (1..=shape.size()).map(BigUint::from).product();
    n_fact / hooks
}

/// Number of semistandard tableaux of shape `lam` and content `mu`.
///
/// Counts chains `∅ ⊂ λ¹ ⊂ … ⊂ lam` whose successive differences are horizontal
/// strips of sizes `mu_1, mu_2, …`.
pub fn kostka(lam: &Partition, mu: &Partition) -> Result<BigUint> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: lam.size(), found: mu.size() });
    }
    let mut layer: HashMap<Partition, BigUint> = HashMap::new();
    layer.insert(Partition::empty(), BigUint::one());
    for &m in mu.parts() {
        let mut next: HashMap<Partition, BigUint> = HashMap::new();
        for (inner, ways) in &layer {
            for outer in horizontal_strip_extensions(inner, m, lam) {
                *next.entry(outer).or_insert_with(BigUint::zero) += ways;
            }
        }
        layer = next;
    }
    Ok(layer.remove(lam).unwrap_or_default())
}

/// Partitions `outer ⊆ bound` with `outer / inner` a horizontal strip of `m` boxes.
fn horizontal_strip_extensions(inner: &Partition, m: usize, bound: &Partition) -> Vec<Partition> {
    fn rec(inner: &Partition, bound: &Partition, row: usize, left: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > inner.len() || row >= bound.len() {
            if left == 0 {
                out.push(Partition::from_multiplicities(acc.iter().copied()));
            }
            return;
        }
        // a strip may lengthen row r up to the old length of row r - 1
        let cap = if row == 0 { bound.part(0) } else { inner.part(row - 1).min(bound.part(row)) };
        let base = inner.part(row);
        for add in 0..=left.min(cap.saturating_sub(base)) {
            acc.push(base + add);
            rec(inner, bound, row + 1, left - add, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(inner, bound, 0, m, &mut Vec::new(), &mut out);
    out
}

/// Positions `i` with `i = n` or `i + 1` in the same row as `i` or a longer one.
pub fn ascents(t: &StandardTableau) -> BTreeSet<usize> {
    let n = t.size();
    let row = t.row_index();
    (1..=n).filter(|&i| i == n || row[i + 1] <= row[i]).collect()
}

/// Empty, or the smallest ascent is even.
pub fn is_desarrangement(t: &StandardTableau) -> bool {
    match ascents(t).iter().next() {
        None => true,
        Some(&first) => first % 2 == 0,
    }
}

/// Removes `1`, slides the hole outward through the smaller neighbour, then
/// relabels `2..=n` as `1..=n-1`.
pub fn delta(t: &StandardTableau) -> Result<StandardTableau> {
    if t.is_empty() {
        return Err(Error::InvalidTableau("Δ needs a nonempty tableau".into()));
    }
    let mut rows = t.rows.clone();
    let (mut r, mut c) = (0usize, 0usize);
    loop {
        let below = rows.get(r + 1).and_then(|row| row.get(c)).copied();
        let right = rows[r].get(c + 1).copied();
        let (nr, nc) = match (below, right) {
            (None, None) => break,
            (Some(_), None) => (r + 1, c),
            (None, Some(_)) => (r, c + 1),
            (Some(b), Some(a)) => {
                if b < a {
                    (r + 1, c)
                } else {
                    (r, c + 1)
                }
            }
        };
        rows[r][c] = rows[nr][nc];
        r = nr;
        c = nc;
    }
    rows[r].pop();
    if rows[r].is_empty() {
        rows.pop();
    }
    for row in rows.iter_mut() {
        for x in row.iter_mut() {
            *x -= 1;
        }
    }
    Ok(StandardTableau { rows })
}

/// The tableau `u` with `delta(u) = t` whose extra box ends row `row` (0-based).
pub fn delta_inverse(t: &StandardTableau, row: usize) -> Result<StandardTableau> {
    let shape = t.shape();
    if shape.add_box(row).is_none() {
        return Err(Error::InvalidRow { row, shape: shape.to_string() });
    }
    let mut rows: Vec<Vec<usize>> = t.rows.iter().map(|r| r.iter().map(|x| x + 1).collect()).collect();
    if row == rows.len() {
        rows.push(Vec::new());
    }
    let (mut r, mut c) = (row, rows[row].len());
    rows[r].push(0);
    while (r, c) != (0, 0) {
        let above = if r > 0 { Some(rows[r - 1][c]) } else { None };
        let left = if c > 0 { Some(rows[r][c - 1]) } else { None };
        let (pr, pc) = match (above, left) {
            (Some(a), Some(l)) => {
                if a > l {
                    (r - 1, c)
                } else {
                    (r, c - 1)
                }
            }
            (Some(_), None) => (r - 1, c),
            (None, Some(_)) => (r, c - 1),
            (None, None) => unreachable!("only (0, 0) has no inward neighbour"),
        };
        rows[r][c] = rows[pr][pc];
        r = pr;
        c = pc;
    }
    rows[0][0] = 1;
    Ok(StandardTableau { rows })
}

/// Least `j` such that `Δ^j(t)` is a desarrangement tableau.
pub fn type_of(t: &StandardTableau) -> usize {
    let mut cur = t.clone();
    let mut j = 0;
    while !is_desarrangement(&cur) {
        cur = delta(&cur).expect("nonempty tableaux are never desarrangements here");
        j += 1;
    }
    j
}

/// Type read off the ascent set: the unique `j` in `{0, …, n-2, n}` such that
/// `1, …, j-1` are ascents and, if `t` has a descent, the first ascent after `j`
/// sits at `j + l` with `l` even. `None` if no such `j` is unique.
pub fn type_from_ascents(t: &StandardTableau) -> Option<usize> {
    let n = t.size();
    let asc = ascents(t);
    if asc.len() == n {
        return Some(n);
    }
    let candidates: Vec<usize> = (0..=n.saturating_sub(2))
        .filter(|&j| (1..j).all(|i| asc.contains(&i)))
        .filter(|&j| asc.range(j + 1..).next().is_some_and(|&a| (a - j) % 2 == 0))
        .collect();
    match candidates.as_slice() {
        [j] => Some(*j),
        _ => None,
    }
}

/// The box of `t` that `Δ` removes, as `(row, column)`.
pub fn delta_box(t: &StandardTableau) -> Result<(usize, usize)> {
    let d = delta(t)?;
    let outer = t.shape();
    let inner = d.shape();
    let r = (0..outer.len()).find(|&r| outer.part(r) != inner.part(r)).expect("shapes differ by one box");
    Ok((r, outer.part(r) - 1))
}

/// Skew shape `t / Δ^j(t)`.
pub fn delta_power_skew(t: &StandardTableau, j: usize) -> Result<SkewShape> {
    let mut cur = t.clone();
    for _ in 0..j {
        cur = delta(&cur)?;
    }
    SkewShape::new(t.shape(), cur.shape())
}

/// Number of desarrangement tableaux of shape `mu`.
pub fn count_desarrangements(mu: &Partition) -> usize {
    enumerate_syt(mu).iter().filter(|t| is_desarrangement(t)).count()
}

/// Shapes dominating `content`, each paired with its Kostka number.
pub fn dominating_shapes(content: &Partition) -> Vec<(Partition, BigUint)> {
    partitions_of(content.size())
        .into_iter()
        .filter(|lam| dominates(lam, content).unwrap_or(false))
        .map(|lam| {
            let m = kostka(&lam, content).expect("sizes agree");
            (lam, m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_syt(&p(&[2, 1])).len(), 2);
        assert_eq!(enumerate_syt(&p(&[4])), vec![StandardTableau::row(4)]);
        assert_eq!(all_syt(4).len(), 10);
        for n in 0..=8 {
            for lam in partitions_of(n) {
                assert_eq!(BigUint::from(enumerate_syt(&lam).len()), count_syt(&lam), "{lam}");
            }
        }
        let squares: BigUint = partitions_of(4).iter().map(|l| count_syt(l).pow(2)).sum();
        assert_eq!(squares, BigUint::from(24u32));
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[4, 1]), &p(&[2, 2, 1])).unwrap(), BigUint::from(2u32));
        assert_eq!(kostka(&p(&[3, 2]), &p(&[2, 2, 1])).unwrap(), BigUint::from(2u32));
        assert_eq!(kostka(&p(&[3, 1]), &p(&[3, 1])).unwrap(), BigUint::one());
        assert_eq!(kostka(&p(&[2, 2]), &p(&[3, 1])).unwrap(), BigUint::zero());
        assert!(kostka(&p(&[2]), &p(&[1])).is_err());
        // content (1^n) counts standard tableaux
        for lam in partitions_of(6) {
            assert_eq!(kostka(&lam, &Partition::column(6)).unwrap(), count_syt(&lam));
        }
    }

    #[test]
    fn ascent_examples() {
        let t = tab("1,2,3,9/4,6/5,8/7");
        assert_eq!(ascents(&t).into_iter().collect::<Vec<_>>(), vec![1, 2, 5, 7, 8, 9]);
        assert_eq!(type_of(&t), 3);
        assert_eq!(ascents(&StandardTableau::row(5)).len(), 5);
        assert_eq!(ascents(&StandardTableau::column(5)).into_iter().collect::<Vec<_>>(), vec![5]);
    }

    #[test]
    fn desarrangements_of_small_size() {
        assert!(is_desarrangement(&StandardTableau::empty()));
        let found: Vec<String> = (2..=3)
            .flat_map(all_syt)
            .filter(is_desarrangement)
            .map(|t| t.to_string())
            .collect();
        assert_eq!(found, vec!["1/2".to_string(), "1,3/2".to_string()]);
        assert!(!is_desarrangement(&StandardTableau::row(4)));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&tab("1,2,5/3,4,7/6")).unwrap(), tab("1,3,4/2,6/5"));
        assert_eq!(delta(&tab("1")).unwrap(), StandardTableau::empty());
        assert_eq!(delta(&StandardTableau::column(4)).unwrap(), StandardTableau::column(3));
        assert!(delta(&StandardTableau::empty()).is_err());
    }

    #[test]
    fn delta_inverse_examples() {
        assert_eq!(delta_inverse(&StandardTableau::empty(), 0).unwrap(), tab("1"));
        assert_eq!(delta_inverse(&tab("1,3,4/2,6/5"), 1).unwrap(), tab("1,2,5/3,4,7/6"));
        assert!(delta_inverse(&tab("1,2/3,4"), 1).is_err());
        assert!(delta_inverse(&tab("1,2"), 2).is_err());
    }

    #[test]
    fn delta_inverse_round_trips() {
        for n in 0..=6 {
            for t in all_syt(n) {
                let shape = t.shape();
                for row in 0..=shape.len() {
                    if shape.add_box(row).is_some() {
                        let u = delta_inverse(&t, row).unwrap();
                        assert_eq!(delta(&u).unwrap(), t);
                        assert_eq!(u.shape(), shape.add_box(row).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn types_of_size_four() {
        let expected = [
            ("1,2,3,4", 4),
            ("1,2,3/4", 2),
            ("1,2,4/3", 1),
            ("1,3,4/2", 0),
            ("1,2/3,4", 1),
            ("1,3/2,4", 0),
            ("1,2/3/4", 2),
            ("1,3/2/4", 0),
            ("1,4/2/3", 1),
            ("1/2/3/4", 0),
        ];
        for (s, ty) in expected {
            assert_eq!(type_of(&tab(s)), ty, "{s}");
        }
        for i in 2..=7 {
            assert_eq!(type_of(&StandardTableau::hook(i, 7).unwrap()), i - 2);
        }
    }

    #[test]
    fn type_structure_up_to_seven() {
        for n in 0..=7 {
            for t in all_syt(n) {
                let ty = type_of(&t);
                assert_eq!(ty == 0, is_desarrangement(&t));
                assert!(delta_power_skew(&t, ty).unwrap().is_horizontal_strip(), "{t}");
                if ty >= 1 {
                    assert_eq!(type_of(&delta(&t).unwrap()), ty - 1);
                }
                assert_eq!(type_from_ascents(&t), Some(ty), "{t}");
                assert!(n < 2 || ty != n - 1, "{t} has type n - 1");
            }
        }
    }

    #[test]
    fn kostka_positive_iff_dominance() {
        for n in 0..=7 {
            let all = partitions_of(n);
            for lam in &all {
                for mu in &all {
                    let positive = !kostka(lam, mu).unwrap().is_zero();
                    assert_eq!(positive, dominates(lam, mu).unwrap(), "{lam} {mu}");
                }
            }
        }
    }

    #[test]
    fn kernel_dimension_of_example() {
        let total: BigUint = all_syt(4).iter().filter(|t| type_of(t) < 2).map(|t| count_syt(&t.shape())).sum();
        assert_eq!(total, BigUint::from(17u32));
    }

    #[test]
    fn parse_rejects_bad_fillings() {
        assert!("1,3/2".parse::<StandardTableau>().is_ok());
        assert!("2,1".parse::<StandardTableau>().is_err());
        assert!("1,2/3,4,5".parse::<StandardTableau>().is_err());
        assert!("1,2/2".parse::<StandardTableau>().is_err());
        assert!("1,3/4,2".parse::<StandardTableau>().is_err());
    }
}
