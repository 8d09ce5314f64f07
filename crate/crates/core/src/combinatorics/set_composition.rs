use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An ordered list of disjoint nonempty blocks covering `{1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetComposition {
    n: usize,
    blocks: Vec<BTreeSet<usize>>,
}

impl SetComposition {
    pub fn new(n: usize, blocks: Vec<BTreeSet<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidSetComposition("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::InvalidSetComposition(format!("{x} is outside 1..={n}")));
                }
                if seen[x] {
                    return Err(Error::InvalidSetComposition(format!("{x} appears twice")));
                }
                seen[x] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidSetComposition(format!("{missing} is not covered")));
        }
        Ok(SetComposition { n, blocks })
    }

    /// Convenience constructor from slices, e.g. `&[&[1, 3], &[2]]`.
    pub fn from_slices(n: usize, blocks: &[&[usize]]) -> Result<Self> {
        Self::new(n, blocks.iter().map(|b| b.iter().copied().collect()).collect())
    }

    /// The one-block composition `[{1, …, n}]`.
    pub fn whole(n: usize) -> Self {
        let blocks = if n == 0 { Vec::new() } else { vec![(1..=n).collect()] };
        SetComposition { n, blocks }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    /// `self * c`: each block of `c` is split by the blocks of `self`, in order,
    /// with empty intersections dropped.
    pub fn product(&self, c: &SetComposition) -> Result<SetComposition> {
        if self.n != c.n {
            return Err(Error::SizeMismatch { expected: self.n, found: c.n });
        }
        let blocks = c
            .blocks
            .iter()
            .flat_map(|ci| self.blocks.iter().map(move |bj| ci.intersection(bj).copied().collect::<BTreeSet<_>>()))
            .filter(|block| !block.is_empty())
            .collect();
        Ok(SetComposition { n: self.n, blocks })
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", blocks.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(blocks: &[&[usize]]) -> SetComposition {
        let n = blocks.iter().map(|b| b.len()).sum();
        SetComposition::from_slices(n, blocks).unwrap()
    }

    #[test]
    fn product_refines_in_order() {
        let b = sc(&[&[1, 3], &[2, 4, 5]]);
        let c = sc(&[&[2, 3, 4], &[5], &[1]]);
        assert_eq!(b.product(&c).unwrap(), sc(&[&[3], &[2, 4], &[5], &[1]]));
        assert_eq!(c.product(&b).unwrap(), sc(&[&[3], &[1], &[2, 4], &[5]]));
        assert_eq!(b.product(&SetComposition::whole(5)).unwrap(), b);
    }

    #[test]
    fn validation() {
        assert!(SetComposition::from_slices(3, &[&[1, 2]]).is_err());
        assert!(SetComposition::from_slices(2, &[&[1, 2], &[2]]).is_err());
        assert!(SetComposition::from_slices(2, &[&[1, 2], &[]]).is_err());
        assert!(sc(&[&[1], &[2]]).product(&SetComposition::whole(3)).is_err());
        assert_eq!(sc(&[&[2], &[1, 3]]).to_string(), "[{2}, {1,3}]");
    }
}
