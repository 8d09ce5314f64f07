use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// A dense square matrix of arbitrary-precision integers over a labelled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    labels: Vec<String>,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn new(labels: Vec<String>, entries: Vec<BigInt>) -> Result<Self> {
        let dim = labels.len();
        if entries.len() != dim * dim {
            return Err(Error::SizeMismatch { expected: dim * dim, found: entries.len() });
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != dim {
            return Err(Error::Parse("duplicate basis labels".into()));
        }
        Ok(ExactMatrix { labels, entries })
    }

    /// Builds row by row in parallel; `row(i)` returns the full row `i`.
    pub fn from_rows<F>(labels: Vec<String>, row: F) -> Self
    where
        F: Fn(usize) -> Vec<i64> + Sync,
    {
        let dim = labels.len();
        let rows: Vec<Vec<i64>> = (0..dim).into_par_iter().map(&row).collect();
        let entries = rows.into_iter().flatten().map(BigInt::from).collect();
        ExactMatrix { labels, entries }
    }

    pub fn identity(labels: Vec<String>) -> Self {
        let dim = labels.len();
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::from(1);
        }
        ExactMatrix { labels, entries }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim() + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        let d = self.dim();
        &self.entries[i * d..(i + 1) * d]
    }

    /// Entry addressed by basis labels.
    pub fn entry(&self, row: &str, col: &str) -> Option<&BigInt> {
        let i = self.labels.iter().position(|l| l == row)?;
        let j = self.labels.iter().position(|l| l == col)?;
        Some(self.get(i, j))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim()).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.dim()).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let d = self.dim();
        let entries = (0..d * d).map(|idx| self.entries[(idx % d) * d + idx / d].clone()).collect();
        ExactMatrix { labels: self.labels.clone(), entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `self - v·I`.
    pub fn shift(&self, v: &BigInt) -> ExactMatrix {
        let d = self.dim();
        let mut out = self.clone();
        for i in 0..d {
            out.entries[i * d + i] -= v;
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> ExactMatrix {
        ExactMatrix { labels: self.labels.clone(), entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_basis(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(ExactMatrix { labels: self.labels.clone(), entries })
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_basis(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(ExactMatrix { labels: self.labels.clone(), entries })
    }

    pub(crate) fn check_basis(&self, other: &ExactMatrix) -> Result<()> {
        if self.labels != other.labels {
            return Err(Error::BasisMismatch);
        }
        Ok(())
    }

    /// Largest absolute row sum, the induced ∞-norm.
    pub fn max_abs_row_sum(&self) -> BigInt {
        (0..self.dim()).map(|i| self.row(i).iter().map(|x| x.abs()).sum::<BigInt>()).max().unwrap_or_default()
    }

    /// Entries as `i64` when every entry fits.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(|x| x.to_i64()).collect()
    }

    /// The same operator written in another ordering of the basis.
    pub fn reorder(&self, order: &[&str]) -> Result<ExactMatrix> {
        if order.len() != self.dim() {
            return Err(Error::BasisMismatch);
        }
        let idx = order
            .iter()
            .map(|l| self.labels.iter().position(|x| x == l).ok_or(Error::BasisMismatch))
            .collect::<Result<Vec<_>>>()?;
        let d = self.dim();
        let mut entries = Vec::with_capacity(d * d);
        for &i in &idx {
            for &j in &idx {
                entries.push(self.get(i, j).clone());
            }
        }
        ExactMatrix::new(order.iter().map(|s| s.to_string()).collect(), entries)
    }

    /// First line: labels; then one line of integers per row.
    pub fn to_csv(&self) -> String {
        let mut out = self.labels.join(",");
        out.push('\n');
        for i in 0..self.dim() {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "{}", row.join(","));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<ExactMatrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty CSV".into()))?;
        let labels: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
        let mut entries = Vec::new();
        for line in lines {
            for tok in line.split(',') {
                let v = tok.trim().parse::<BigInt>().map_err(|e| Error::Parse(format!("{tok:?}: {e}")))?;
                entries.push(v);
            }
        }
        ExactMatrix::new(labels, entries)
    }
}
