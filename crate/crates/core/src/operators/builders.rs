//! Integer matrices of the symmetrized shuffles on permutations and on words.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::combinatorics::{anagrams, Partition, Permutation, Word};
use crate::error::{Error, Result};
use crate::operators::group_algebra::GroupAlgebraElement;
use crate::operators::matrix::ExactMatrix;
use crate::operators::noninv::Kernel;

pub fn permutation_labels(n: usize) -> Vec<String> {
    Permutation::all(n).iter().map(|p| p.to_string()).collect()
}

/// Row `σ` of the right multiplication by `Σ c(ρ) ρ`: entry `τ` is `c(σ⁻¹τ)`.
fn kernel_row(all: &[Permutation], table: &[u64], i: usize) -> Vec<i64> {
    let sigma = &all[i];
    let mut row = vec![0i64; all.len()];
    for (r, rho) in all.iter().enumerate() {
        if table[r] != 0 {
            row[sigma.compose_unchecked(rho).rank()] = table[r] as i64;
        }
    }
    row
}

/// Dense `i64` entries of the permutation-basis matrix of a kernel, row-major.
pub fn kernel_entries_i64(kernel: &Kernel) -> Vec<i64> {
    use rayon::prelude::*;
    let all = Permutation::all(kernel.degree());
    let table = kernel.table();
    (0..all.len()).into_par_iter().flat_map_iter(|i| kernel_row(&all, &table, i)).collect()
}

pub fn kernel_matrix(kernel: &Kernel) -> ExactMatrix {
    let n = kernel.degree();
    let all = Permutation::all(n);
    let table = kernel.table();
    ExactMatrix::from_rows(permutation_labels(n), |i| kernel_row(&all, &table, i))
}

/// `ν_k` on `S_n`: entry `(σ, τ)` counts increasing subsequences of length `n - k` in `σ⁻¹τ`.
pub fn nu_matrix(n: usize, k: usize) -> Result<ExactMatrix> {
    Ok(kernel_matrix(&Kernel::nu(n, k)?))
}

/// `ν_λ` on `S_n`: entry `(σ, τ)` counts increasing set partitions of `σ⁻¹τ` of type `λ`.
pub fn nu_lambda_matrix(n: usize, lam: &Partition) -> Result<ExactMatrix> {
    if lam.size() != n {
        return Err(Error::SizeMismatch { expected: n, found: lam.size() });
    }
    Ok(kernel_matrix(&Kernel::Blocks(lam.clone())))
}

/// `γ_k = ν_{(2^k, 1^(n-2k))}`.
pub fn gamma_matrix(n: usize, k: usize) -> Result<ExactMatrix> {
    Ok(kernel_matrix(&Kernel::gamma(n, k)?))
}

/// Word basis of a content given as letter multiplicities, in lexicographic order.
pub fn word_basis(content: &[usize]) -> Vec<Word> {
    anagrams(content)
}

/// Matrix of `Σ c(ρ) ρ` acting on the right of words: entry `(w, u)` is
/// `Σ_{ρ : w·ρ = u} c(ρ)`.
pub fn kernel_word_matrix(content: &[usize], kernel: &Kernel) -> Result<ExactMatrix> {
    let n: usize = content.iter().sum();
    if n != kernel.degree() {
        return Err(Error::SizeMismatch { expected: n, found: kernel.degree() });
    }
    let basis = word_basis(content);
    let index: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let all = Permutation::all(n);
    let table = kernel.table();
    let labels = basis.iter().map(|w| w.to_string()).collect();
    Ok(ExactMatrix::from_rows(labels, |i| {
        let mut row = vec![0i64; basis.len()];
        for (r, rho) in all.iter().enumerate() {
            if table[r] != 0 {
                row[index[&basis[i].act_positions_unchecked(rho)]] += table[r] as i64;
            }
        }
        row
    }))
}

/// `ν_k` on the words of the given content (letter `a` used `content[a-1]` times).
pub fn nu_word_matrix(content: &Partition, k: usize) -> Result<ExactMatrix> {
    kernel_word_matrix(content.parts(), &Kernel::nu(content.size(), k)?)
}

/// The move-`k`-to-the-end element: remove positions `i_1 < … < i_k` and append
/// them in every order. As a right multiplier it sends `σ` to `Σ σ∘ρ`.
pub fn pi_k_element(n: usize, k: usize) -> Result<GroupAlgebraElement> {
    if k > n {
        return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    let mut x = GroupAlgebraElement::zero(n);
    for chosen in subsets(n, k) {
        let rest: Vec<usize> = (1..=n).filter(|p| !chosen.contains(p)).collect();
        for order in Permutation::all(k) {
            let mut one_line = rest.clone();
            one_line.extend(order.one_line().iter().map(|&j| chosen[j - 1]));
            let rho = Permutation::new(one_line).expect("positions form a permutation");
            x.add_term(rho, BigRational::from_integer(1.into()));
        }
    }
    Ok(x)
}

/// Matrix of right multiplication by an integral group algebra element.
pub fn right_multiplication_matrix(x: &GroupAlgebraElement) -> Result<ExactMatrix> {
    let n = x.degree();
    let all = Permutation::all(n);
    let mut table = vec![0i64; all.len()];
    for (rho, c) in x.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegral);
        }
        table[rho.rank()] = c.to_integer().to_i64().ok_or(Error::NonIntegral)?;
    }
    Ok(ExactMatrix::from_rows(permutation_labels(n), |i| {
        let sigma = &all[i];
        let mut row = vec![0i64; all.len()];
        for (r, rho) in all.iter().enumerate() {
            if table[r] != 0 {
                row[sigma.compose_unchecked(rho).rank()] += table[r];
            }
        }
        row
    }))
}

/// The matrix of `π_k`: entry `(σ, τ)` is the coefficient of `τ` in `σ·π_k`.
pub fn pi_matrix(n: usize, k: usize) -> Result<ExactMatrix> {
    right_multiplication_matrix(&pi_k_element(n, k)?)
}

/// `k`-subsets of `1..=n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// `k! · C(n, k)²`, the row sum of `ν_k`.
pub fn nu_row_sum(n: usize, k: usize) -> BigInt {
    let fact: BigInt = (1..=k).map(BigInt::from).product();
    let binom = crate::combinatorics::binomial(n as u64, k as u64);
    fact * BigInt::from(binom) * BigInt::from(binom)
}

/// `(n! / 2^k)² / (k! (n - 2k)!)`, the row sum of `γ_k`.
pub fn gamma_row_sum(n: usize, k: usize) -> BigInt {
    let fact = |m: usize| -> BigInt { (1..=m).map(BigInt::from).product() };
    let top = fact(n) / BigInt::from(2).pow(k as u32);
    &top * &top / (fact(k) * fact(n - 2 * k))
}
