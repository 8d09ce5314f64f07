//! Exact spectra of the symmetrized shuffles `ν_k` (remove `k` cards and reinsert
//! them) and `γ_k` (cut `k` packets of two and riffle), acting on permutations and
//! on words. Eigenvalues come from tableau combinatorics and characters; an
//! independent exact linear-algebra oracle certifies them against the matrices.

pub mod combinatorics;
pub mod error;
pub mod markov;
pub mod operators;
pub mod oracle;
pub mod spectra;
pub mod tableaux;

pub use combinatorics::{canonical_content, Partition, Permutation, SetComposition, SkewShape, Word};
pub use error::{Error, Result};
pub use operators::ExactMatrix;
pub use spectra::{Family, SpectrumReport};
pub use tableaux::StandardTableau;
