//! Closed forms, scans and tables derived from the tableau recursion and from characters.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use shuffle_spectra::combinatorics::{partitions_of, Partition, SkewShape};
use shuffle_spectra::operators::{gamma_row_sum, nu_row_sum};
use shuffle_spectra::spectra::conjectures::{predicted_second_eigenvalue, second_eigenvalue};
use shuffle_spectra::spectra::{
    check_conjecture, eig_skew, eigenvalue_nu, gamma_eigenvalue, hook_eigenvalue, monotonicity_check,
    recursion_coefficient, spectrum_permutations, tableau_type, type_bound_rows, Conjecture,
};
use shuffle_spectra::tableaux::{all_syt, count_desarrangements, count_syt, delta, StandardTableau};

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn hook_closed_form_matches_recursion() {
    for n in 2..=12 {
        for i in 2..=n {
            let t = StandardTableau::hook(i, n).unwrap();
            for k in 0..=n {
                assert_eq!(hook_eigenvalue(i, n, k).unwrap(), eigenvalue_nu(&t, k), "i={i} n={n} k={k}");
            }
        }
        for k in 0..=n {
            assert!(monotonicity_check(n, k), "n={n} k={k}");
        }
    }
    let t = StandardTableau::hook(4, 4).unwrap();
    assert_eq!(eigenvalue_nu(&t, 1), big(10));
    assert_eq!(eigenvalue_nu(&t, 2), big(20));
}

#[test]
fn recursion_coefficients_are_positive() {
    for n in 1..=8 {
        for t in all_syt(n) {
            let ty = tableau_type(&t);
            for k in 1..=ty {
                assert!(recursion_coefficient(&t, k).unwrap() > 0, "t={t} k={k}");
            }
        }
    }
}

#[test]
fn first_order_values_are_skew_statistics() {
    for n in 1..=7 {
        for t in all_syt(n) {
            let mut inner = t.clone();
            for _ in 0..tableau_type(&t) {
                inner = delta(&inner).unwrap();
            }
            assert_eq!(eigenvalue_nu(&t, 1), eig_skew(&t.shape(), &inner.shape()).unwrap(), "t={t}");
        }
    }
}

#[test]
fn first_order_spectrum_from_strips() {
    for n in 1..=6 {
        let mut from_strips: BTreeMap<BigInt, BigUint> = BTreeMap::new();
        for lam in partitions_of(n) {
            for m in 0..=n {
                for mu in partitions_of(m) {
                    let Ok(skew) = SkewShape::new(lam.clone(), mu.clone()) else { continue };
                    if !skew.is_horizontal_strip() {
                        continue;
                    }
                    let d = count_desarrangements(&mu);
                    if d == 0 {
                        continue;
                    }
                    let w = count_syt(&lam) * BigUint::from(d);
                    *from_strips.entry(eig_skew(&lam, &mu).unwrap()).or_default() += w;
                }
            }
        }
        let s = spectrum_permutations(n, 1).unwrap();
        let direct: BTreeMap<BigInt, BigUint> = s.pairs().into_iter().collect();
        assert_eq!(from_strips, direct, "n={n}");
    }
}

#[test]
fn top_eigenvalue_is_the_row_sum() {
    for n in 1..=7 {
        for k in 1..=n {
            let s = spectrum_permutations(n, k).unwrap();
            assert_eq!(s.eigenvalues[0].value, nu_row_sum(n, k), "n={n} k={k}");
            assert_eq!(s.eigenvalues[0].multiplicity, BigUint::from(1u32));
            assert!(s.eigenvalues.iter().all(|e| e.value >= BigInt::zero()));
        }
    }
}

#[test]
fn packet_eigenvalues_on_trivial_module() {
    let rows: [&[u64]; 7] = [
        &[2, 1],
        &[6, 9],
        &[24, 72, 18],
        &[120, 600, 450],
        &[720, 5400, 8100, 1350],
        &[5040, 52920, 132300, 66150],
        &[40320, 564480, 2116800, 2116800, 264600],
    ];
    for (idx, row) in rows.iter().enumerate() {
        let n = idx + 2;
        for (k, &want) in row.iter().enumerate() {
            assert_eq!(gamma_eigenvalue(&Partition::row(n), k).unwrap(), big(want), "n={n} k={k}");
            assert_eq!(gamma_row_sum(n, k), big(want));
        }
    }
}

#[test]
fn packet_eigenvalues_on_hooks_with_three_legs() {
    let rows: [(usize, &[u64]); 5] = [
        (1, &[0, 2]),
        (2, &[0, 12]),
        (3, &[0, 84, 42]),
        (4, &[0, 672, 1008]),
        (5, &[0, 6048, 18144, 4536]),
    ];
    for (arm, values) in rows {
        let lam = Partition::hook(arm + 3, 3).unwrap();
        for (i, &want) in values.iter().enumerate() {
            assert_eq!(gamma_eigenvalue(&lam, i + 1).unwrap(), big(want), "{lam} k={}", i + 1);
        }
    }
}

#[test]
fn single_pair_packets_match_remove_and_reinsert() {
    for n in 2..=6 {
        let mut from_chars: Vec<BigInt> =
            partitions_of(n).iter().map(|l| gamma_eigenvalue(l, 1).unwrap()).filter(|c| !c.is_zero()).collect();
        from_chars.sort();
        from_chars.dedup();
        let s = spectrum_permutations(n, n - 2).unwrap();
        let mut from_tableaux: Vec<BigInt> =
            s.eigenvalues.iter().map(|e| e.value.clone()).filter(|v| !v.is_zero()).collect();
        from_tableaux.sort();
        assert_eq!(from_chars, from_tableaux, "n={n}");
    }
}

#[test]
fn bound_table_for_small_tableaux() {
    let expected: &[(&str, usize, u64, u64)] = &[
        ("1,2", 1, 4, 4),
        ("1,2", 2, 4, 2),
        ("1,2,3", 1, 9, 9),
        ("1,2,3", 2, 27, 18),
        ("1,2,3", 3, 27, 6),
        ("1,2/3", 1, 4, 4),
        ("1/2/3", 1, 3, 1),
        ("1,2,3,4", 1, 16, 16),
        ("1,2,3,4", 2, 96, 72),
        ("1,2,3,4", 3, 256, 96),
        ("1,2,3,4", 4, 256, 24),
        ("1,2,3/4", 1, 10, 10),
        ("1,2,3/4", 2, 25, 20),
        ("1,2/3/4", 1, 8, 6),
        ("1,2/3/4", 2, 16, 4),
        ("1,2,4/3", 1, 6, 6),
        ("1,2/3,4", 1, 5, 4),
        ("1,4/2/3", 1, 5, 2),
    ];
    let mut got: Vec<(String, usize, BigInt, BigInt)> = Vec::new();
    for n in 2..=4 {
        for r in type_bound_rows(n) {
            got.push((r.tableau.to_string(), r.k, r.bound, r.value));
        }
    }
    for &(t, k, bound, value) in expected {
        assert!(
            got.contains(&(t.to_string(), k, big(bound), big(value))),
            "missing {t} k={k}: bound {bound} value {value}"
        );
    }
    assert!(got.iter().all(|(_, _, b, v)| v <= b));
}

#[test]
fn second_eigenvalue_formula() {
    assert_eq!(second_eigenvalue(4, 2).unwrap(), big(20));
    assert_eq!(predicted_second_eigenvalue(4, 2), big(20));
    let r = check_conjecture(Conjecture::SecondEigenvalue, 10).unwrap();
    assert!(r.violations.is_empty(), "{}", r.render());
}

#[test]
fn type_bound_holds() {
    let r = check_conjecture(Conjecture::TypeBound, 10).unwrap();
    assert!(r.violations.is_empty(), "{}", r.render());
}

#[test]
fn packet_ratio_scans() {
    for c in [Conjecture::HookGrowth, Conjecture::ColumnRatio] {
        let r = check_conjecture(c, 8).unwrap();
        assert!(r.violations.is_empty(), "{}", r.render());
        assert!(r.instances > 0);
    }
    assert!(check_conjecture(Conjecture::HookGrowth, 20).is_err());
}

#[test]
fn shapes_outside_both_families_can_fail_to_commute() {
    let r = check_conjecture(Conjecture::Commutation, 4).unwrap();
    assert!(r.violations.is_empty(), "{}", r.render());
    assert_eq!(r.witnesses.len(), 1);
    assert!(r.witnesses[0].contains("(3,1) and (2,2)"));
}
