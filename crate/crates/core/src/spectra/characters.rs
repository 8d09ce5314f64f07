//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama rule.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::combinatorics::{partitions_of, Partition};
use crate::error::{Error, Result};

/// `χ^λ` on the class of cycle type `mu`.
pub fn character(lam: &Partition, mu: &Partition) -> Result<i64> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: lam.size(), found: mu.size() });
    }
    static MEMO: OnceLock<Mutex<HashMap<(Vec<usize>, Vec<usize>), i64>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let key = (lam.parts().to_vec(), mu.parts().to_vec());
    if let Some(&v) = memo.lock().expect("memo lock").get(&key) {
        return Ok(v);
    }
    let v = murnaghan_nakayama(&beta_set(lam.parts()), mu.parts());
    memo.lock().expect("memo lock").insert(key, v);
    Ok(v)
}

/// First-column hook lengths `λ_i + (ℓ - 1 - i)`, strictly decreasing.
fn beta_set(parts: &[usize]) -> Vec<usize> {
    let l = parts.len();
    parts.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect()
}

/// Removing a border strip of length `r` moves one bead from `b` to `b - r`;
/// the sign is `(-1)` to the number of beads strictly in between.
fn murnaghan_nakayama(beta: &[usize], cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&next, rest);
    }
    total
}

/// Size of the conjugacy class of cycle type `mu`: `n! / Π_i i^{m_i} m_i!`.
pub fn class_size(mu: &Partition) -> BigInt {
    let n_fact: BigInt = (1..=mu.size()).map(BigInt::from).product();
    let mut z = BigInt::from(1);
    for (i, &m) in mu.part_multiplicities().iter().enumerate().skip(1) {
        z *= BigInt::from(i).pow(m as u32);
        z *= (1..=m).map(BigInt::from).product::<BigInt>();
    }
    n_fact / z
}

/// Character table of `S_n`: rows by shape, columns by cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub rows: BTreeMap<Partition, BTreeMap<Partition, i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let shapes = partitions_of(n);
        let rows = shapes
            .iter()
            .map(|lam| {
                let row = shapes.iter().map(|mu| (mu.clone(), character(lam, mu).expect("same size"))).collect();
                (lam.clone(), row)
            })
            .collect();
        CharacterTable { n, rows }
    }

    /// `Σ_μ |class(μ)| χ^λ(μ) χ^κ(μ)`.
    pub fn inner_product(&self, lam: &Partition, kappa: &Partition) -> BigInt {
        let a = &self.rows[lam];
        let b = &self.rows[kappa];
        a.iter().map(|(mu, &x)| class_size(mu) * BigInt::from(x) * BigInt::from(b[mu])).sum()
    }

    /// Columns ordered from the identity class `(1^n)` to the `n`-cycle.
    pub fn columns(&self) -> Vec<Partition> {
        let mut cols = partitions_of(self.n);
        cols.reverse();
        cols
    }

    /// Text rendering: header of cycle types, then one row per shape.
    pub fn render(&self) -> String {
        let cols = self.columns();
        let mut out = String::from("shape");
        for c in &cols {
            out.push('\t');
            out.push_str(&c.to_string());
        }
        out.push('\n');
        for lam in partitions_of(self.n) {
            out.push_str(&lam.to_string());
            for c in &cols {
                out.push('\t');
                out.push_str(&self.rows[&lam][c].to_string());
            }
            out.push('\n');
        }
        out
    }
}
