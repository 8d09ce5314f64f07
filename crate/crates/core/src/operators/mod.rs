//! Shuffle operators as exact matrices, group algebra elements and word maps.

pub mod builders;
pub mod group_algebra;
pub mod matrix;
pub mod noninv;
pub mod words;

pub use builders::{
    gamma_matrix, gamma_row_sum, kernel_matrix, kernel_word_matrix, nu_lambda_matrix, nu_matrix, nu_row_sum,
    nu_word_matrix, permutation_labels, pi_k_element, pi_matrix, right_multiplication_matrix, word_basis,
};
pub use group_algebra::{isotypic_idempotent, GroupAlgebraElement};
pub use matrix::ExactMatrix;
pub use noninv::{noninv_count, noninv_partition_count, Kernel};
pub use words::{apply_nu, apply_nu_by_insertion, del, nu_k_insertion_form, operator_matrix, sh, theta, WordVector};
