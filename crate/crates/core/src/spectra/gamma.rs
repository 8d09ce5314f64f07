//! Eigenvalues of the packet shuffles `γ_k` from characters.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::combinatorics::{partitions_of, Partition, Permutation};
use crate::error::{Error, Result};
use crate::operators::builders::gamma_matrix;
use crate::operators::noninv::Kernel;
use crate::oracle::{measure_spectrum, OracleOptions, Verification};
use crate::spectra::characters::character;
use crate::spectra::report::{Eigen, Family, SpectrumReport};

/// `Σ_{σ of cycle type μ} noninv_{(2^k, 1^{n-2k})}(σ)` for every cycle type `μ`.
fn class_sums(n: usize, k: usize) -> Result<Arc<BTreeMap<Partition, BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<BTreeMap<Partition, BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().expect("cache lock").get(&(n, k)) {
        return Ok(Arc::clone(s));
    }
    let kernel = Kernel::gamma(n, k)?;
    let table = kernel.table();
    let mut sums: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (r, sigma) in Permutation::all(n).iter().enumerate() {
        if table[r] != 0 {
            *sums.entry(sigma.cycle_type()).or_default() += table[r];
        }
    }
    let sums = Arc::new(sums);
    cache.lock().expect("cache lock").insert((n, k), Arc::clone(&sums));
    Ok(sums)
}

/// `c_k^λ = Σ_σ noninv_{(2^k, 1^{n-2k})}(σ) χ^λ(σ)`, the eigenvalue of `γ_k` on the
/// isotypic component of `λ`. The sum runs over all of `S_n`, grouped by cycle type.
pub fn gamma_eigenvalue(lam: &Partition, k: usize) -> Result<BigInt> {
    let n = lam.size();
    if 2 * k > n {
        return Err(Error::OutOfRange(format!("γ_k needs 2k <= n, got n={n}, k={k}")));
    }
    let sums = class_sums(n, k)?;
    let mut total = BigInt::zero();
    for (mu, s) in sums.iter() {
        total += s * character(lam, mu)?;
    }
    Ok(total)
}

/// `(n! / 2^k)² / (k! (n - 2k)!)`, the eigenvalue on the trivial module.
pub fn gamma_trivial_closed_form(n: usize, k: usize) -> BigInt {
    crate::operators::builders::gamma_row_sum(n, k)
}

/// Spectrum of `γ_k` on `S_n`. The eigenvalues come from characters; their
/// multiplicities are measured on the matrix and certified by the oracle.
pub fn spectrum_gamma(n: usize, k: usize, opts: &OracleOptions) -> Result<(SpectrumReport, Verification)> {
    let mut candidates = vec![BigInt::zero()];
    for lam in partitions_of(n) {
        candidates.push(gamma_eigenvalue(&lam, k)?);
    }
    let m = gamma_matrix(n, k)?;
    let (claims, verification) = measure_spectrum(&m, &candidates, opts)?;
    let dimension: BigUint = claims.iter().map(|(_, c)| c).sum();
    let eigenvalues = claims
        .into_iter()
        .rev()
        .map(|(value, multiplicity)| Eigen { value, multiplicity, tableaux: Vec::new() })
        .collect();
    let report =
        SpectrumReport { family: Family::Gamma, n, k, content: Partition::column(n), dimension, eigenvalues };
    Ok((report, verification))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trivial_module_values() {
        assert_eq!(gamma_eigenvalue(&p(&[4]), 1).unwrap(), BigInt::from(72));
        assert_eq!(gamma_eigenvalue(&p(&[4]), 2).unwrap(), BigInt::from(18));
        assert_eq!(gamma_eigenvalue(&p(&[5]), 2).unwrap(), BigInt::from(450));
        for n in 1..=7 {
            assert_eq!(gamma_eigenvalue(&Partition::row(n), 0).unwrap(), gamma_trivial_closed_form(n, 0));
        }
        assert!(gamma_eigenvalue(&p(&[3]), 2).is_err());
    }

    #[test]
    fn small_spectrum_is_certified() {
        let (report, v) = spectrum_gamma(4, 2, &OracleOptions::default()).unwrap();
        assert!(v.passed, "{:?}", v.diagnostics());
        assert_eq!(report.dimension, BigUint::from(24u32));
        assert_eq!(report.eigenvalues[0].value, BigInt::from(18));
    }
}
