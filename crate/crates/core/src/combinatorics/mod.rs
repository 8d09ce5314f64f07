//! Partitions, permutations, words and set compositions.

pub mod partition;
pub mod permutation;
pub mod set_composition;
pub mod word;

pub use partition::{dominates, partitions_of, Partition, SkewShape};
pub use permutation::Permutation;
pub use set_composition::SetComposition;
pub use word::{anagrams, canonical_content, weak_compositions, Word};

/// Binomial coefficient as `u128`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}
