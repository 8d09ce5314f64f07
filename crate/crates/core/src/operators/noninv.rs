//! Counting increasing subsequences and increasing set partitions of permutations.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::combinatorics::{Partition, Permutation};
use crate::error::{Error, Result};

/// Number of subsequences of length `i` increasing in both position and value.
pub fn noninv_count(sigma: &Permutation, i: usize) -> Result<BigUint> {
    let n = sigma.degree();
    if i > n {
        return Err(Error::OutOfRange(format!("subsequence length {i} exceeds n = {n}")));
    }
    Ok(BigUint::from(noninv_u64(sigma.one_line(), i)))
}

pub(crate) fn noninv_u64(w: &[usize], i: usize) -> u64 {
    if i == 0 {
        return 1;
    }
    let n = w.len();
    // ends[p] = number of increasing subsequences of the current length ending at p
    let mut ends = vec![1u64; n];
    for _ in 1..i {
        let mut next = vec![0u64; n];
        for p in 0..n {
            for q in 0..p {
                if w[q] < w[p] {
                    next[p] += ends[q];
                }
            }
        }
        ends = next;
    }
    ends.iter().sum()
}

/// Number of ways to split the positions into unordered increasing blocks whose
/// sizes are the parts of `lam`.
pub fn noninv_partition_count(sigma: &Permutation, lam: &Partition) -> Result<BigUint> {
    if lam.size() != sigma.degree() {
        return Err(Error::SizeMismatch { expected: sigma.degree(), found: lam.size() });
    }
    Ok(BigUint::from(noninv_partition_u64(sigma.one_line(), lam)))
}

pub(crate) fn noninv_partition_u64(w: &[usize], lam: &Partition) -> u64 {
    // remaining[s] = how many blocks of size s are still to be filled
    let mut remaining = lam.part_multiplicities();
    let mut used = vec![false; w.len()];
    fill_blocks(w, &mut used, &mut remaining)
}

/// The smallest unused position opens the next block; blocks of equal size are
/// never ordered, so no division is needed.
fn fill_blocks(w: &[usize], used: &mut [bool], remaining: &mut [usize]) -> u64 {
    let Some(start) = used.iter().position(|u| !u) else {
        return 1;
    };
    let mut total = 0;
    for size in 1..remaining.len() {
        if remaining[size] == 0 {
            continue;
        }
        remaining[size] -= 1;
        used[start] = true;
        total += extend_chain(w, used, remaining, start, size - 1);
        used[start] = false;
        remaining[size] += 1;
    }
    total
}

fn extend_chain(w: &[usize], used: &mut [bool], remaining: &mut [usize], last: usize, left: usize) -> u64 {
    if left == 0 {
        return fill_blocks(w, used, remaining);
    }
    let mut total = 0;
    for p in last + 1..w.len() {
        if !used[p] && w[p] > w[last] {
            used[p] = true;
            total += extend_chain(w, used, remaining, p, left - 1);
            used[p] = false;
        }
    }
    total
}

/// Coefficient function `ρ ↦ c(ρ)` of a symmetrized shuffle element `Σ c(ρ) ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Kernel {
    /// Increasing subsequences of the given length (the remove-and-reinsert family).
    Subsequences(usize, usize),
    /// Increasing set partitions with the given block sizes.
    Blocks(Partition),
}

impl Kernel {
    /// Kernel of `ν_k` on `S_n`: increasing subsequences of length `n - k`.
    pub fn nu(n: usize, k: usize) -> Result<Kernel> {
        if k > n {
            return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
        }
        Ok(Kernel::Subsequences(n, n - k))
    }

    /// Kernel of `γ_k`: set partitions into `k` increasing pairs and singletons.
    pub fn gamma(n: usize, k: usize) -> Result<Kernel> {
        Ok(Kernel::Blocks(Partition::pairs(n, k)?))
    }

    pub fn degree(&self) -> usize {
        match self {
            Kernel::Subsequences(n, _) => *n,
            Kernel::Blocks(lam) => lam.size(),
        }
    }

    pub fn eval(&self, one_line: &[usize]) -> u64 {
        match self {
            Kernel::Subsequences(_, len) => noninv_u64(one_line, *len),
            Kernel::Blocks(lam) => noninv_partition_u64(one_line, lam),
        }
    }

    /// Values on every `ρ ∈ S_n`, indexed by lexicographic rank. Cached.
    pub fn table(&self) -> Arc<Vec<u64>> {
        static CACHE: OnceLock<Mutex<HashMap<Kernel, Arc<Vec<u64>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("cache lock").get(self) {
            return Arc::clone(t);
        }
        let table: Vec<u64> = Permutation::all(self.degree()).par_iter().map(|p| self.eval(p.one_line())).collect();
        let table = Arc::new(table);
        cache.lock().expect("cache lock").insert(self.clone(), Arc::clone(&table));
        table
    }
}
