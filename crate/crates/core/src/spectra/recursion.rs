//! Eigenvalues of the remove-and-reinsert shuffles from the tableau recursion.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::operators::noninv::Kernel;
use crate::spectra::report::{Eigen, Family, SpectrumReport};
use crate::tableaux::{all_syt, delta, delta_box, dominating_shapes, enumerate_syt, is_desarrangement, StandardTableau};

/// Type and `v_0, …, v_n` of one tableau.
#[derive(Debug)]
struct Entry {
    kind: usize,
    values: Vec<BigInt>,
}

fn memo() -> &'static Mutex<HashMap<Vec<usize>, Arc<Entry>>> {
    static MEMO: OnceLock<Mutex<HashMap<Vec<usize>, Arc<Entry>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn entry(t: &StandardTableau) -> Arc<Entry> {
    let key = t.reading_word();
    // the reading word alone does not fix the shape, so prefix the row lengths
    let key: Vec<usize> = t.rows().iter().map(|r| r.len()).chain(std::iter::once(0)).chain(key).collect();
    if let Some(e) = memo().lock().expect("memo lock").get(&key) {
        return Arc::clone(e);
    }
    let n = t.size();
    let e = if t.is_empty() {
        Entry { kind: 0, values: vec![BigInt::one()] }
    } else {
        let d = delta(t).expect("nonempty");
        let inner = entry(&d);
        let kind = if is_desarrangement(t) { 0 } else { inner.kind + 1 };
        let (r, c) = delta_box(t).expect("nonempty");
        let diag = c as i64 - r as i64;
        let mut values = vec![BigInt::one()];
        for k in 1..=n {
            if kind < k {
                values.push(BigInt::zero());
                continue;
            }
            let prev = inner.values.get(k).cloned().unwrap_or_default();
            let coeff = n as i64 + 1 - k as i64 + diag;
            values.push(prev + BigInt::from(coeff) * &inner.values[k - 1]);
        }
        Entry { kind, values }
    };
    let e = Arc::new(e);
    memo().lock().expect("memo lock").insert(key, Arc::clone(&e));
    e
}

/// `v_k(t)`: the eigenvalue of `ν_k` carried by `t`.
pub fn eigenvalue_nu(t: &StandardTableau, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    entry(t).values.get(k).cloned().unwrap_or_default()
}

/// Memoized [`crate::tableaux::type_of`].
pub fn tableau_type(t: &StandardTableau) -> usize {
    entry(t).kind
}

/// The factor `n + 1 - k + diag(t / Δt)` multiplying `v_{k-1}(Δt)` in the recursion.
pub fn recursion_coefficient(t: &StandardTableau, k: usize) -> Result<i64> {
    let (r, c) = delta_box(t)?;
    Ok(t.size() as i64 + 1 - k as i64 + c as i64 - r as i64)
}

/// Aggregates `(value, weight, tableau)` triples into a report sorted by decreasing value.
fn assemble(
    family: Family,
    n: usize,
    k: usize,
    content: Partition,
    contributions: impl IntoIterator<Item = (BigInt, BigUint, String)>,
) -> SpectrumReport {
    let mut merged: BTreeMap<BigInt, (BigUint, Vec<String>)> = BTreeMap::new();
    let mut dimension = BigUint::zero();
    for (v, w, label) in contributions {
        if w.is_zero() {
            continue;
        }
        dimension += &w;
        let slot = merged.entry(v).or_default();
        slot.0 += w;
        slot.1.push(label);
    }
    let eigenvalues = merged
        .into_iter()
        .rev()
        .map(|(value, (multiplicity, tableaux))| Eigen { value, multiplicity, tableaux })
        .collect();
    SpectrumReport { family, n, k, content, dimension, eigenvalues }
}

/// Spectrum of `ν_k` on `S_n`: every standard tableau of size `n` contributes
/// `f^{shape}` copies of its eigenvalue.
pub fn spectrum_permutations(n: usize, k: usize) -> Result<SpectrumReport> {
    Kernel::nu(n, k)?;
    let f: HashMap<Partition, BigUint> =
        crate::combinatorics::partitions_of(n).into_iter().map(|l| (l.clone(), crate::tableaux::count_syt(&l))).collect();
    let items = all_syt(n).into_iter().map(|t| (eigenvalue_nu(&t, k), f[&t.shape()].clone(), t.to_string()));
    Ok(assemble(Family::Nu, n, k, Partition::column(n), items))
}

/// Spectrum of `ν_k` on the words of a given content: tableaux whose shape
/// dominates the content contribute Kostka-many copies.
pub fn spectrum_words(content: &Partition, k: usize) -> Result<SpectrumReport> {
    let n = content.size();
    Kernel::nu(n, k)?;
    let mut items = Vec::new();
    for (shape, m) in dominating_shapes(content) {
        for t in enumerate_syt(&shape) {
            items.push((eigenvalue_nu(&t, k), m.clone(), t.to_string()));
        }
    }
    Ok(assemble(Family::Nu, n, k, content.clone(), items))
}

/// Dimension of the kernel of `ν_k` on `S_n`: `Σ_{type(t) < k} f^{shape(t)}`.
pub fn kernel_dimension(n: usize, k: usize) -> BigUint {
    all_syt(n)
        .iter()
        .filter(|t| tableau_type(t) < k)
        .map(|t| crate::tableaux::count_syt(&t.shape()))
        .sum()
}

/// `C(|λ|+1, 2) - C(|μ|+1, 2) + diag(λ/μ)` for a horizontal strip `λ/μ`.
pub fn eig_skew(lam: &Partition, mu: &Partition) -> Result<BigInt> {
    let skew = SkewShape::new(lam.clone(), mu.clone())?;
    if !skew.is_horizontal_strip() {
        return Err(Error::NotHorizontalStrip(skew.to_string()));
    }
    let b = |m: usize| BigInt::from(binomial(m as u64 + 1, 2));
    Ok(b(lam.size()) - b(mu.size()) + BigInt::from(skew.diag_index()))
}

/// Closed form `k! C(i-2, k) C(2n-i+1, k)` for the hook tableau with `i` in row two.
pub fn hook_eigenvalue(i: usize, n: usize, k: usize) -> Result<BigInt> {
    if i < 2 || i > n {
        return Err(Error::OutOfRange(format!("hook eigenvalue needs 2 <= i <= n, got i={i}, n={n}")));
    }
    let fact: BigInt = (1..=k).map(BigInt::from).product();
    Ok(fact * BigInt::from(binomial(i as u64 - 2, k as u64)) * BigInt::from(binomial(2 * n as u64 - i as u64 + 1, k as u64)))
}

/// Whether the hook eigenvalues are weakly increasing in `i` on `2..=n`.
pub fn monotonicity_check(n: usize, k: usize) -> bool {
    if n < 2 {
        return true;
    }
    let vals: Vec<BigInt> = (2..=n).map(|i| hook_eigenvalue(i, n, k).expect("i in range")).collect();
    vals.windows(2).all(|w| w[0] <= w[1])
}
