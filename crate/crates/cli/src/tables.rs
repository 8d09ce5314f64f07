//! Reference tables regenerated from the library.

use shuffle_spectra::combinatorics::{partitions_of, SkewShape};
use shuffle_spectra::spectra::{
    eig_skew, eigenvalue_nu, gamma_eigenvalue, spectrum_permutations, type_bound_rows, CharacterTable,
};
use shuffle_spectra::tableaux::{count_desarrangements, count_syt, dominating_shapes, enumerate_syt};
use shuffle_spectra::{Partition, Result};

pub const IDS: [&str; 7] = ["3.1", "3.2", "3.5", "3.6", "5.1", "char-3", "char-4"];

/// Renders the table with the given id, or `None` for an unknown id.
pub fn render(id: &str) -> Option<Result<String>> {
    let out = match id {
        "3.1" => spectrum_permutations(4, 1).map(|r| r.to_table()),
        "3.2" => first_order_strips(4),
        "3.5" => word_tableaux(&Partition::new(vec![2, 2]).expect("valid"), 2),
        "3.6" => Ok(type_bounds(4)),
        "5.1" => trivial_packets(8),
        "char-3" => Ok(CharacterTable::new(3).render()),
        "char-4" => Ok(CharacterTable::new(4).render()),
        _ => return None,
    };
    Some(out)
}

fn empty_as_symbol(p: &Partition) -> String {
    if p.is_empty() {
        "∅".into()
    } else {
        p.to_string()
    }
}

/// For each shape λ, every μ ⊆ λ carrying desarrangement tableaux, whether λ/μ is a
/// horizontal strip and, when it is, the resulting `ν_1` eigenvalue.
fn first_order_strips(n: usize) -> Result<String> {
    let mut out = String::from("lambda\tmu\tbinom\tdesarrangements\tstrip\tf\teigenvalue\n");
    for lam in partitions_of(n) {
        for m in 0..=n {
            for mu in partitions_of(m) {
                let d = count_desarrangements(&mu);
                let Ok(skew) = SkewShape::new(lam.clone(), mu.clone()) else { continue };
                if d == 0 {
                    continue;
                }
                let binom = (m + 1) * m / 2;
                let head = format!("{lam}\t{}\t{binom}\t{d}", empty_as_symbol(&mu));
                if skew.is_horizontal_strip() {
                    let eig = eig_skew(&lam, &mu)?;
                    out.push_str(&format!("{head}\t✓\t{}\t{eig}\n", count_syt(&lam)));
                } else {
                    out.push_str(&format!("{head}\t×\n"));
                }
            }
        }
    }
    Ok(out)
}

/// Standard tableaux of every shape dominating the content, with their `ν_k`
/// eigenvalue and the Kostka multiplicity.
fn word_tableaux(content: &Partition, k: usize) -> Result<String> {
    let mut out = String::from("tableau\tshape\teigenvalue\tkostka\n");
    for (shape, kostka) in dominating_shapes(content) {
        for t in enumerate_syt(&shape) {
            out.push_str(&format!("{t}\t{shape}\t{}\t{kostka}\n", eigenvalue_nu(&t, k)));
        }
    }
    Ok(out)
}

fn type_bounds(n_max: usize) -> String {
    let mut out = String::from("tableau\tk\tbound\tvalue\n");
    for n in 2..=n_max {
        for r in type_bound_rows(n) {
            out.push_str(&format!("{}\t{}\t{}\t{}\n", r.tableau, r.k, r.bound, r.value));
        }
    }
    out
}

/// `γ_k` on the trivial module for `n = 2..=n_max`, `k = 0..=n/2`.
fn trivial_packets(n_max: usize) -> Result<String> {
    let width = n_max / 2;
    let mut out = String::from("shape");
    for k in 0..=width {
        out.push_str(&format!("\t{k}"));
    }
    out.push('\n');
    for n in 2..=n_max {
        let row = Partition::row(n);
        out.push_str(&row.to_string());
        for k in 0..=n / 2 {
            out.push_str(&format!("\t{}", gamma_eigenvalue(&row, k)?));
        }
        out.push('\n');
    }
    Ok(out)
}
