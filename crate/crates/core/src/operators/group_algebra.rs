//! Rational linear combinations of permutations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{Partition, Permutation};
use crate::error::{Error, Result};
use crate::spectra::characters::character;
use crate::tableaux::count_syt;

/// An element `Σ x(σ) σ` of the rational group algebra of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    coeffs: BTreeMap<Permutation, BigRational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, coeffs: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn basis(p: Permutation) -> Self {
        let mut x = Self::zero(p.degree());
        x.coeffs.insert(p, BigRational::one());
        x
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, p: Permutation, c: BigRational) {
        assert_eq!(p.degree(), self.n, "permutation degree must match the algebra");
        let entry = self.coeffs.entry(p).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coefficient(&self, p: &Permutation) -> BigRational {
        self.coeffs.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in lexicographic order of permutations.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        GroupAlgebraElement { n: self.n, coeffs: self.coeffs.iter().map(|(p, v)| (p.clone(), v * c)).collect() }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    /// `(x * y)(π) = Σ_{στ = π} x(σ) y(τ)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut acc: BTreeMap<Permutation, BigRational> = BTreeMap::new();
        for (s, a) in &self.coeffs {
            for (t, b) in &other.coeffs {
                *acc.entry(s.compose_unchecked(t)).or_insert_with(BigRational::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(GroupAlgebraElement { n: self.n, coeffs: acc })
    }

    /// The element `Σ c(ρ) ρ` with integer coefficients read from a rank-indexed table.
    pub fn from_table(n: usize, table: &[u64]) -> Self {
        let coeffs = Permutation::all(n)
            .into_iter()
            .zip(table)
            .filter(|(_, &c)| c != 0)
            .map(|(p, &c)| (p, BigRational::from_integer(BigInt::from(c))))
            .collect();
        GroupAlgebraElement { n, coeffs }
    }
}

/// The central idempotent `(f^μ / n!) Σ_σ χ^μ(σ) σ` of the isotypic component of `S^μ`.
pub fn isotypic_idempotent(mu: &Partition) -> Result<GroupAlgebraElement> {
    let n = mu.size();
    let n_fact: BigInt = (1..=n).map(BigInt::from).product();
    let scale = BigRational::new(BigInt::from(count_syt(mu)), n_fact);
    let mut x = GroupAlgebraElement::zero(n);
    let mut by_class: BTreeMap<Partition, i64> = BTreeMap::new();
    for sigma in Permutation::all(n) {
        let ct = sigma.cycle_type();
        let chi = match by_class.get(&ct) {
            Some(&v) => v,
            None => {
                let v = character(mu, &ct)?;
                by_class.insert(ct, v);
                v
            }
        };
        if chi != 0 {
            x.add_term(sigma, &scale * BigRational::from_integer(BigInt::from(chi)));
        }
    }
    Ok(x)
}
