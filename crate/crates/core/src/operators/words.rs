//! Linear operators on formal combinations of words: insertion, deletion, substitution.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{Partition, Permutation, Word};
use crate::error::{Error, Result};
use crate::operators::builders::word_basis;
use crate::operators::matrix::ExactMatrix;
use crate::operators::noninv::Kernel;

/// A finite rational combination of words. Words of different contents may mix;
/// [`WordVector::content`] reports the common content when there is one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordVector {
    coeffs: BTreeMap<Word, BigRational>,
}

impl WordVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        let mut v = Self::zero();
        v.coeffs.insert(w, BigRational::one());
        v
    }

    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(w.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn coefficient(&self, w: &Word) -> BigRational {
        self.coeffs.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Letter multiplicities shared by every word in the support, trailing zeros dropped;
    /// `None` for the zero vector or mixed contents.
    pub fn content(&self) -> Option<Vec<usize>> {
        let mut it = self.coeffs.keys().map(|w| w.content());
        let first = it.next()?;
        it.all(|c| c == first).then_some(first)
    }

    pub fn add(&self, other: &WordVector) -> WordVector {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WordVector) -> WordVector {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> WordVector {
        if c.is_zero() {
            return Self::zero();
        }
        WordVector { coeffs: self.coeffs.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    /// Applies a map defined on single words, extended linearly.
    pub fn map_linear<F>(&self, f: F) -> WordVector
    where
        F: Fn(&Word) -> WordVector,
    {
        let mut out = WordVector::zero();
        for (w, c) in &self.coeffs {
            for (u, d) in f(w).coeffs {
                out.add_term(u, c * d);
            }
        }
        out
    }
}

impl fmt::Display for WordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(w, c)| if c.is_one() { w.to_string() } else { format!("{c}·{w}") })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Inserts `a` in each of the `n + 1` slots of every word.
pub fn sh(a: usize, v: &WordVector) -> WordVector {
    v.map_linear(|w| {
        let mut out = WordVector::zero();
        for i in 0..=w.len() {
            out.add_term(w.insert(i, a), BigRational::one());
        }
        out
    })
}

/// Deletes one occurrence of `a`, summing over occurrences.
pub fn del(a: usize, v: &WordVector) -> WordVector {
    v.map_linear(|w| {
        let mut out = WordVector::zero();
        for (i, &x) in w.letters().iter().enumerate() {
            if x == a {
                out.add_term(w.remove(i), BigRational::one());
            }
        }
        out
    })
}

/// Replaces one occurrence of `a` by `b`, summing over occurrences.
pub fn theta(a: usize, b: usize, v: &WordVector) -> WordVector {
    v.map_linear(|w| {
        let mut out = WordVector::zero();
        for (i, &x) in w.letters().iter().enumerate() {
            if x == a {
                out.add_term(w.replace(i, b), BigRational::one());
            }
        }
        out
    })
}

/// `ν_k` on words of any length `n ≥ k`: `w ↦ Σ_τ noninv_{n-k}(τ) w·τ`.
/// Words shorter than `k` are sent to zero.
pub fn apply_nu(k: usize, v: &WordVector) -> WordVector {
    v.map_linear(|w| {
        let n = w.len();
        let mut out = WordVector::zero();
        let Ok(kernel) = Kernel::nu(n, k) else {
            return out;
        };
        let table = kernel.table();
        let mut acc: HashMap<Word, u64> = HashMap::new();
        for (r, rho) in Permutation::all(n).iter().enumerate() {
            if table[r] != 0 {
                *acc.entry(w.act_positions_unchecked(rho)).or_insert(0) += table[r];
            }
        }
        for (u, c) in acc {
            out.add_term(u, BigRational::from_integer(BigInt::from(c)));
        }
        out
    })
}

/// Multisets `a_1 ≤ … ≤ a_k` drawn from `1..=m`.
fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in start..=m {
            cur.push(a);
            rec(a, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, m, k, &mut Vec::new(), &mut out);
    out
}

/// `ν_k` written through insertion and deletion:
/// `Σ_{a_1 ≤ … ≤ a_k} (1 / Π mult!) sh_{a_1} ⋯ sh_{a_k} ∂_{a_k} ⋯ ∂_{a_1}`,
/// with letters ranging over `1..=alphabet`.
pub fn apply_nu_by_insertion(k: usize, alphabet: usize, v: &WordVector) -> WordVector {
    let mut out = WordVector::zero();
    for letters in multisets(alphabet, k) {
        let mut weight = BigInt::one();
        let mut run = 1;
        for i in 1..=letters.len() {
            if i < letters.len() && letters[i] == letters[i - 1] {
                run += 1;
            } else {
                weight *= (1..=run).map(BigInt::from).product::<BigInt>();
                run = 1;
            }
        }
        let mut cur = v.clone();
        for &a in letters.iter().rev() {
            cur = del(a, &cur);
        }
        for &a in &letters {
            cur = sh(a, &cur);
        }
        out = out.add(&cur.scale(&BigRational::new(BigInt::one(), weight)));
    }
    out
}

/// Matrix of a content-preserving linear map on the word basis of `content`;
/// column `u` of row `w` is the coefficient of `u` in `f(w)`.
pub fn operator_matrix<F>(content: &[usize], f: F) -> Result<ExactMatrix>
where
    F: Fn(&WordVector) -> WordVector,
{
    let basis = word_basis(content);
    let index: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let d = basis.len();
    let mut entries = vec![BigInt::zero(); d * d];
    for (i, w) in basis.iter().enumerate() {
        for (u, c) in f(&WordVector::word(w.clone())).terms() {
            let j = *index.get(u).ok_or(Error::BasisMismatch)?;
            if !c.is_integer() {
                return Err(Error::NonIntegral);
            }
            entries[i * d + j] = c.to_integer();
        }
    }
    ExactMatrix::new(basis.iter().map(|w| w.to_string()).collect(), entries)
}

/// Matrix of the insertion-deletion form of `ν_k` on the words of `content`.
pub fn nu_k_insertion_form(content: &Partition, k: usize) -> Result<ExactMatrix> {
    let m = content.len();
    operator_matrix(content.parts(), |v| apply_nu_by_insertion(k, m, v))
}
