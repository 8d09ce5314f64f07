//! Exact verification: integer matrix products, fraction-free rank, and spectrum
//! certificates.
//!
//! A claimed spectrum `{v: m_v}` of a symmetric matrix `M` is accepted when
//! `dim ker(M - vI) = m_v` for every claimed `v` and `Π_v (M - vI) = 0`.
//! Small matrices are certified with Bareiss elimination and exact products.
//! Larger ones use residues modulo word-sized primes: a rank modulo `p` never
//! exceeds the rational rank, so each modular nullity bounds the true nullity
//! from above, while the annihilating product is checked modulo enough primes
//! that their product exceeds twice a bound on its entries, which makes it
//! exact. Together with `Σ m_v = dim` these force every multiplicity.

use std::collections::BTreeMap;
use std::ops::{AddAssign, Mul};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::operators::ExactMatrix;

/// Default largest dimension certified in full.
pub const DEFAULT_BUDGET: usize = 720;
/// Largest dimension accepted by rank-only checks.
pub const RANK_ONLY_LIMIT: usize = 5040;
/// Up to this dimension certificates use exact integer arithmetic throughout.
pub const EXACT_LIMIT: usize = 64;

/// Exact product `a · b`.
pub fn mat_mul(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    a.check_basis(b)?;
    let d = a.dim();
    let max_a = a.entries().iter().map(|x| x.abs()).max().unwrap_or_default();
    let max_b = b.entries().iter().map(|x| x.abs()).max().unwrap_or_default();
    let bound = &max_a * &max_b * BigInt::from(d.max(1));
    let entries = if bound < BigInt::from(i64::MAX) {
        let x: Vec<i64> = a.entries().iter().map(|v| v.to_i64().expect("bounded")).collect();
        let y: Vec<i64> = b.entries().iter().map(|v| v.to_i64().expect("bounded")).collect();
        dense_mul(&x, &y, d).into_iter().map(BigInt::from).collect()
    } else if bound < BigInt::from(i128::MAX) {
        let x: Vec<i128> = a.entries().iter().map(|v| v.to_i128().expect("bounded")).collect();
        let y: Vec<i128> = b.entries().iter().map(|v| v.to_i128().expect("bounded")).collect();
        dense_mul(&x, &y, d).into_iter().map(BigInt::from).collect()
    } else {
        big_mul(a.entries(), b.entries(), d)
    };
    ExactMatrix::new(a.labels().to_vec(), entries)
}

fn dense_mul<T>(a: &[T], b: &[T], d: usize) -> Vec<T>
where
    T: Copy + Default + Send + Sync + Mul<Output = T> + AddAssign + PartialEq,
{
    let zero = T::default();
    let rows: Vec<Vec<T>> = (0..d)
        .into_par_iter()
        .map(|i| {
            let mut acc = vec![zero; d];
            for l in 0..d {
                let x = a[i * d + l];
                if x == zero {
                    continue;
                }
                for (slot, &y) in acc.iter_mut().zip(&b[l * d..(l + 1) * d]) {
                    *slot += x * y;
                }
            }
            acc
        })
        .collect();
    rows.concat()
}

fn big_mul(a: &[BigInt], b: &[BigInt], d: usize) -> Vec<BigInt> {
    let rows: Vec<Vec<BigInt>> = (0..d)
        .into_par_iter()
        .map(|i| {
            let mut acc = vec![BigInt::zero(); d];
            for l in 0..d {
                let x = &a[i * d + l];
                if x.is_zero() {
                    continue;
                }
                for (slot, y) in acc.iter_mut().zip(&b[l * d..(l + 1) * d]) {
                    *slot += x * y;
                }
            }
            acc
        })
        .collect();
    rows.concat()
}

/// Rank over the rationals by Bareiss fraction-free elimination.
pub fn rank(m: &ExactMatrix) -> usize {
    bareiss_rank(m.entries().to_vec(), m.dim(), m.dim())
}

/// Fraction-free elimination on a row-major `rows × cols` matrix. Pivots are
/// the first nonzero entry of each column, so the result is deterministic.
pub fn bareiss_rank(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot_row: Vec<BigInt> = a[rank * cols..(rank + 1) * cols].to_vec();
        let pivot = pivot_row[col].clone();
        let prev_ref = &prev;
        a[(rank + 1) * cols..rows * cols].par_chunks_mut(cols).for_each(|row| {
            let lead = row[col].clone();
            for j in col + 1..cols {
                let num = &row[j] * &pivot - &lead * &pivot_row[j];
                row[j] = num / prev_ref;
            }
            row[col] = BigInt::zero();
        });
        prev = pivot;
        rank += 1;
    }
    rank
}

pub fn is_symmetric(m: &ExactMatrix) -> bool {
    let d = m.dim();
    (0..d).all(|i| (i + 1..d).all(|j| m.get(i, j) == m.get(j, i)))
}

/// `a · b == b · a` exactly.
pub fn commutes(a: &ExactMatrix, b: &ExactMatrix) -> Result<bool> {
    Ok(mat_mul(a, b)? == mat_mul(b, a)?)
}

/// Primes below `2^28`, largest first.
pub fn word_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate: u64 = (1 << 28) - 1;
    while out.len() < count {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= x {
        if x % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue below p")
}

/// Residues of a dense integer matrix.
pub fn residues(entries: &[BigInt], p: u64) -> Vec<u64> {
    entries.par_iter().map(|x| residue(x, p)).collect()
}

pub fn residues_i64(entries: &[i64], p: u64) -> Vec<u64> {
    entries.par_iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()
}

/// Product of two residue matrices modulo `p < 2^28`.
pub fn mul_mod(a: &[u64], b: &[u64], d: usize, p: u64) -> Vec<u64> {
    // products stay below 2^56, so 255 of them fit in a u64 before reducing
    const BATCH: usize = 255;
    let rows: Vec<Vec<u64>> = (0..d)
        .into_par_iter()
        .map(|i| {
            let mut acc = vec![0u64; d];
            let mut pending = 0;
            for l in 0..d {
                let x = a[i * d + l];
                if x == 0 {
                    continue;
                }
                for (slot, &y) in acc.iter_mut().zip(&b[l * d..(l + 1) * d]) {
                    *slot += x * y;
                }
                pending += 1;
                if pending == BATCH {
                    acc.iter_mut().for_each(|s| *s %= p);
                    pending = 0;
                }
            }
            acc.iter_mut().for_each(|s| *s %= p);
            acc
        })
        .collect();
    rows.concat()
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank of a residue matrix over `Z/p`.
pub fn rank_mod(mut a: Vec<u64>, d: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..d {
        if rank == d {
            break;
        }
        let Some(piv) = (rank..d).find(|&r| a[r * d + col] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..d {
                a.swap(piv * d + j, rank * d + j);
            }
        }
        let inv = pow_mod(a[rank * d + col], p - 2, p);
        let pivot_row: Vec<u64> = a[rank * d..(rank + 1) * d].iter().map(|&x| x * inv % p).collect();
        a[(rank + 1) * d..].par_chunks_mut(d).for_each(|row| {
            let f = row[col];
            if f == 0 {
                return;
            }
            let neg = p - f;
            for j in col..d {
                row[j] = (row[j] + neg * pivot_row[j]) % p;
            }
        });
        rank += 1;
    }
    rank
}

/// How a certificate was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    /// Bareiss ranks and exact integer products.
    Exact,
    /// Nullities and the annihilating product modulo the listed primes.
    Modular { primes: usize },
    /// Nullities modulo a prime only; no annihilating product.
    RankOnly,
}

/// Claimed versus measured multiplicity of one eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueCheck {
    pub value: BigInt,
    pub claimed: BigUint,
    pub measured: usize,
}

/// Outcome of [`verify_spectrum`].
#[derive(Clone, Debug)]
pub struct Verification {
    pub passed: bool,
    pub method: Method,
    pub dimension: usize,
    pub trace_matches: bool,
    pub multiplicities_sum_to_dim: bool,
    /// `None` when the product was not evaluated.
    pub annihilated: Option<bool>,
    pub checks: Vec<ValueCheck>,
}

impl Verification {
    /// Human-readable lines describing each check.
    pub fn diagnostics(&self) -> Vec<String> {
        let mut lines = vec![format!("dimension {} via {:?}", self.dimension, self.method)];
        lines.push(format!("trace matches: {}", self.trace_matches));
        lines.push(format!("multiplicities sum to dimension: {}", self.multiplicities_sum_to_dim));
        for c in &self.checks {
            let mark = if BigUint::from(c.measured) == c.claimed { "ok" } else { "MISMATCH" };
            lines.push(format!("value {}: claimed {}, measured {} {}", c.value, c.claimed, c.measured, mark));
        }
        match self.annihilated {
            Some(z) => lines.push(format!("annihilating product is zero: {z}")),
            None => lines.push("annihilating product not evaluated".into()),
        }
        lines
    }
}

/// Options for [`verify_spectrum`].
#[derive(Clone, Debug)]
pub struct OracleOptions {
    pub budget: usize,
    pub rank_only: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { budget: DEFAULT_BUDGET, rank_only: false }
    }
}

/// Certifies that `claims` (value, multiplicity) is the full spectrum of `m`.
pub fn verify_spectrum(m: &ExactMatrix, claims: &[(BigInt, BigUint)], opts: &OracleOptions) -> Result<Verification> {
    let d = m.dim();
    if !is_symmetric(m) {
        return Err(Error::NotSymmetric);
    }
    check_budget(d, opts)?;
    let total: BigUint = claims.iter().map(|(_, c)| c).sum();
    let claimed_trace: BigInt = claims.iter().map(|(v, c)| v * BigInt::from(c.clone())).sum();
    let mut out = Verification {
        passed: false,
        method: Method::Exact,
        dimension: d,
        trace_matches: claimed_trace == m.trace(),
        multiplicities_sum_to_dim: total == BigUint::from(d),
        annihilated: None,
        checks: Vec::new(),
    };
    // trace and dimension are cheap necessary conditions; skip the heavy work if they fail
    if !out.trace_matches || !out.multiplicities_sum_to_dim {
        return Ok(out);
    }
    let mut values: Vec<BigInt> = claims.iter().map(|(v, _)| v.clone()).collect();
    values.sort();
    if d <= EXACT_LIMIT && !opts.rank_only {
        for (v, c) in claims {
            let measured = d - rank(&m.shift(v));
            out.checks.push(ValueCheck { value: v.clone(), claimed: c.clone(), measured });
        }
        out.annihilated = Some(annihilates_exact(m, &values)?);
    } else {
        let p = word_primes(1)[0];
        let base = residues(m.entries(), p);
        let nullities = modular_nullities(&base, d, p, &values);
        for (v, c) in claims {
            let measured = nullities[v];
            out.checks.push(ValueCheck { value: v.clone(), claimed: c.clone(), measured });
        }
        if opts.rank_only {
            out.method = Method::RankOnly;
        } else {
            let (zero, primes) = annihilates_modular(m, &values);
            out.method = Method::Modular { primes };
            out.annihilated = Some(zero);
        }
    }
    let counts_ok = out.checks.iter().all(|c| BigUint::from(c.measured) == c.claimed);
    out.passed = counts_ok && out.annihilated.unwrap_or(opts.rank_only);
    Ok(out)
}

fn check_budget(d: usize, opts: &OracleOptions) -> Result<()> {
    let limit = if opts.rank_only { RANK_ONLY_LIMIT.max(opts.budget) } else { opts.budget };
    if d > limit {
        return Err(Error::BudgetExceeded { dim: d, budget: limit });
    }
    Ok(())
}

/// Nullity of `M - vI` modulo `p` for each `v`.
pub fn modular_nullities(base: &[u64], d: usize, p: u64, values: &[BigInt]) -> BTreeMap<BigInt, usize> {
    values
        .iter()
        .map(|v| {
            let mut shifted = base.to_vec();
            let r = residue(v, p);
            for i in 0..d {
                shifted[i * d + i] = (shifted[i * d + i] + p - r) % p;
            }
            (v.clone(), d - rank_mod(shifted, d, p))
        })
        .collect()
}

fn annihilates_exact(m: &ExactMatrix, values: &[BigInt]) -> Result<bool> {
    let mut iter = values.iter();
    let Some(first) = iter.next() else {
        return Ok(m.dim() == 0);
    };
    let mut acc = m.shift(first);
    for v in iter {
        if acc.is_zero() {
            break;
        }
        acc = mat_mul(&acc, &m.shift(v))?;
    }
    Ok(acc.is_zero())
}

/// Returns whether `Π (M - vI) = 0` exactly, and how many primes were used.
fn annihilates_modular(m: &ExactMatrix, values: &[BigInt]) -> (bool, usize) {
    let d = m.dim();
    if values.is_empty() {
        return (d == 0, 0);
    }
    // every entry of the product is bounded by the product of the factors' ∞-norms
    let bound: BigInt = values.iter().map(|v| m.shift(v).max_abs_row_sum().max(BigInt::one())).product();
    let target: BigInt = bound * 2;
    let mut modulus = BigInt::one();
    let mut used = 0;
    // each prime contributes more than 27 bits
    let needed = (target.bits() / 27 + 1) as usize;
    for p in word_primes(needed) {
        let base = residues(m.entries(), p);
        if !product_vanishes_mod(&base, d, p, values) {
            return (false, used + 1);
        }
        modulus *= p;
        used += 1;
    }
    debug_assert!(modulus > target);
    (true, used)
}

fn product_vanishes_mod(base: &[u64], d: usize, p: u64, values: &[BigInt]) -> bool {
    let shifted = |v: &BigInt| {
        let mut s = base.to_vec();
        let r = residue(v, p);
        for i in 0..d {
            s[i * d + i] = (s[i * d + i] + p - r) % p;
        }
        s
    };
    let mut acc = shifted(&values[0]);
    for v in &values[1..] {
        if acc.iter().all(|&x| x == 0) {
            return true;
        }
        acc = mul_mod(&acc, &shifted(v), d, p);
    }
    acc.iter().all(|&x| x == 0)
}

/// Measures the multiplicity of each candidate eigenvalue and certifies the
/// result. Returns the values with nonzero multiplicity and the verification.
pub fn measure_spectrum(
    m: &ExactMatrix,
    candidates: &[BigInt],
    opts: &OracleOptions,
) -> Result<(Vec<(BigInt, BigUint)>, Verification)> {
    let d = m.dim();
    if !is_symmetric(m) {
        return Err(Error::NotSymmetric);
    }
    check_budget(d, opts)?;
    let mut values = candidates.to_vec();
    values.sort();
    values.dedup();
    let measured: Vec<(BigInt, usize)> = if d <= EXACT_LIMIT {
        values.iter().map(|v| (v.clone(), d - rank(&m.shift(v)))).collect()
    } else {
        let p = word_primes(1)[0];
        let base = residues(m.entries(), p);
        modular_nullities(&base, d, p, &values).into_iter().collect()
    };
    let claims: Vec<(BigInt, BigUint)> =
        measured.into_iter().filter(|(_, c)| *c > 0).map(|(v, c)| (v, BigUint::from(c))).collect();
    let verification = verify_spectrum(m, &claims, opts)?;
    Ok((claims, verification))
}

/// Nullity of `M - vI` modulo a large prime for `i64` matrices too big to hold
/// as arbitrary-precision entries. Each value is an upper bound on the true nullity.
pub fn rank_only_nullities(entries: &[i64], d: usize, values: &[BigInt]) -> BTreeMap<BigInt, usize> {
    let p = word_primes(1)[0];
    let base = residues_i64(entries, p);
    modular_nullities(&base, d, p, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn labels(d: usize) -> Vec<String> {
        (0..d).map(|i| format!("e{i}")).collect()
    }

    fn matrix(d: usize, entries: &[i64]) -> ExactMatrix {
        ExactMatrix::new(labels(d), entries.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    /// Rank by Gaussian elimination over the rationals, as an independent check.
    fn rational_rank(m: &ExactMatrix) -> usize {
        use num_rational::BigRational;
        let d = m.dim();
        let mut a: Vec<Vec<BigRational>> =
            (0..d).map(|i| m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
        let mut r = 0;
        for c in 0..d {
            let Some(p) = (r..d).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            for i in 0..d {
                if i != r && !a[i][c].is_zero() {
                    let f = &a[i][c] / &a[r][c];
                    for j in 0..d {
                        let t = &f * &a[r][j];
                        a[i][j] -= t;
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn bareiss_agrees_with_rational_elimination() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..60 {
            let d = rng.gen_range(1..7);
            let r = rng.gen_range(0..=d);
            // build a rank-≤r matrix as a product of d×r and r×d factors
            let u: Vec<i64> = (0..d * r).map(|_| rng.gen_range(-3..4)).collect();
            let v: Vec<i64> = (0..r * d).map(|_| rng.gen_range(-3..4)).collect();
            let mut e = vec![0i64; d * d];
            for i in 0..d {
                for j in 0..d {
                    e[i * d + j] = (0..r).map(|l| u[i * r + l] * v[l * d + j]).sum();
                }
            }
            let m = matrix(d, &e);
            assert_eq!(rank(&m), rational_rank(&m));
            let p = word_primes(1)[0];
            assert_eq!(rank_mod(residues(m.entries(), p), d, p), rational_rank(&m));
        }
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank(&ExactMatrix::identity(labels(5))), 5);
        assert_eq!(rank(&matrix(2, &[1, 2, 2, 4])), 1);
        assert_eq!(rank(&matrix(2, &[0, 0, 0, 0])), 0);
        assert_eq!(rank(&matrix(3, &[0, 1, 0, 0, 0, 1, 0, 0, 0])), 2);
    }

    #[test]
    fn products_pick_the_right_width() {
        let m = matrix(2, &[1, 2, 3, 4]);
        assert_eq!(mat_mul(&m, &ExactMatrix::identity(labels(2))).unwrap(), m);
        assert_eq!(mat_mul(&m, &m).unwrap(), matrix(2, &[7, 10, 15, 22]));
        let big = m.scale(&BigInt::from(u64::MAX));
        let sq = mat_mul(&big, &big).unwrap();
        assert_eq!(sq, matrix(2, &[7, 10, 15, 22]).scale(&(BigInt::from(u64::MAX) * BigInt::from(u64::MAX))));
        let huge = m.scale(&BigInt::from(u128::MAX));
        let sq = mat_mul(&huge, &huge).unwrap();
        assert_eq!(sq, matrix(2, &[7, 10, 15, 22]).scale(&(BigInt::from(u128::MAX) * BigInt::from(u128::MAX))));
        let other = ExactMatrix::identity(vec!["x".into(), "y".into()]);
        assert!(mat_mul(&m, &other).is_err());
    }

    #[test]
    fn modular_product_matches_exact() {
        let mut rng = StdRng::seed_from_u64(3);
        let d = 9;
        let a: Vec<i64> = (0..d * d).map(|_| rng.gen_range(-50..50)).collect();
        let b: Vec<i64> = (0..d * d).map(|_| rng.gen_range(-50..50)).collect();
        let exact = mat_mul(&matrix(d, &a), &matrix(d, &b)).unwrap();
        let p = word_primes(2)[1];
        let got = mul_mod(&residues_i64(&a, p), &residues_i64(&b, p), d, p);
        assert_eq!(got, residues(exact.entries(), p));
    }

    #[test]
    fn spectrum_certificates() {
        let id = ExactMatrix::identity(labels(4));
        let ok = verify_spectrum(&id, &[(BigInt::one(), BigUint::from(4u32))], &OracleOptions::default()).unwrap();
        assert!(ok.passed);
        // [[2,1],[1,2]] has eigenvalues 3 and 1
        let m = matrix(2, &[2, 1, 1, 2]);
        let good = [(BigInt::from(3), BigUint::one()), (BigInt::one(), BigUint::one())];
        assert!(verify_spectrum(&m, &good, &OracleOptions::default()).unwrap().passed);
        let bad = [(BigInt::from(4), BigUint::one()), (BigInt::zero(), BigUint::one())];
        assert!(!verify_spectrum(&m, &bad, &OracleOptions::default()).unwrap().passed);
        assert!(matches!(
            verify_spectrum(&matrix(2, &[1, 2, 3, 4]), &good, &OracleOptions::default()),
            Err(Error::NotSymmetric)
        ));
        let tight = OracleOptions { budget: 1, rank_only: false };
        assert!(matches!(verify_spectrum(&m, &good, &tight), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn modular_certificate_on_a_larger_matrix() {
        // J_d (all ones) has spectrum {d: 1, 0: d - 1}
        let d = EXACT_LIMIT + 6;
        let j = matrix(d, &vec![1; d * d]);
        let claims = [(BigInt::from(d), BigUint::one()), (BigInt::zero(), BigUint::from(d - 1))];
        let v = verify_spectrum(&j, &claims, &OracleOptions::default()).unwrap();
        assert!(v.passed, "{:?}", v.diagnostics());
        assert!(matches!(v.method, Method::Modular { .. }));
        let wrong = [(BigInt::from(d - 1), BigUint::one()), (BigInt::one(), BigUint::from(d - 1))];
        assert!(!verify_spectrum(&j, &wrong, &OracleOptions::default()).unwrap().passed);
    }
}
