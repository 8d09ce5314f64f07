//! Eigenvalue formulas for both shuffle families and the scans built on them.

pub mod characters;
pub mod conjectures;
pub mod gamma;
pub mod recursion;
pub mod report;

pub use characters::{character, class_size, CharacterTable};
pub use conjectures::{check_conjecture, type_bound, type_bound_rows, BoundRow, Conjecture, ScanReport};
pub use gamma::{gamma_eigenvalue, gamma_trivial_closed_form, spectrum_gamma};
pub use recursion::{
    eig_skew, eigenvalue_nu, hook_eigenvalue, kernel_dimension, monotonicity_check, recursion_coefficient,
    spectrum_permutations, spectrum_words, tableau_type,
};
pub use report::{Eigen, Family, SpectrumReport};
