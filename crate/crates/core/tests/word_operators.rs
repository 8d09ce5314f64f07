//! Commutation relations between insertion, deletion, substitution and `ν_k`,
//! checked on every word of length at most five over three letters.

use num_bigint::BigInt;
use num_rational::BigRational;
use shuffle_spectra::combinatorics::{anagrams, weak_compositions, Partition, Word};
use shuffle_spectra::operators::{
    apply_nu, del, nu_k_insertion_form, nu_word_matrix, sh, theta, WordVector,
};

const ALPHABET: usize = 3;
const MAX_LEN: usize = 5;

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Every word of length `0..=MAX_LEN` over the alphabet.
fn all_words() -> Vec<Word> {
    let mut out = Vec::new();
    for n in 0..=MAX_LEN {
        for c in weak_compositions(n, ALPHABET) {
            out.extend(anagrams(&c));
        }
    }
    out
}

fn letters() -> std::ops::RangeInclusive<usize> {
    1..=ALPHABET
}

#[test]
fn deletion_after_insertion() {
    for w in all_words() {
        let v = WordVector::word(w.clone());
        let n = w.len() as i64;
        for a in letters() {
            for b in letters() {
                let lhs = del(b, &sh(a, &v)).sub(&sh(a, &del(b, &v)));
                let mut rhs = theta(b, a, &v);
                if a == b {
                    rhs = rhs.add(&v.scale(&q(n + 1)));
                }
                assert_eq!(lhs, rhs, "w={w} a={a} b={b}");
            }
        }
    }
}

#[test]
fn substitution_after_insertion() {
    for w in all_words() {
        let v = WordVector::word(w.clone());
        for a in letters() {
            for b in letters() {
                for c in letters() {
                    let lhs = theta(b, c, &sh(a, &v)).sub(&sh(a, &theta(b, c, &v)));
                    let rhs = if a == b { sh(c, &v) } else { WordVector::zero() };
                    assert_eq!(lhs, rhs, "w={w} a={a} b={b} c={c}");
                }
            }
        }
    }
}

#[test]
fn insertions_commute_and_deletions_commute() {
    for w in all_words() {
        let v = WordVector::word(w.clone());
        for a in letters() {
            for b in letters() {
                assert_eq!(sh(a, &sh(b, &v)), sh(b, &sh(a, &v)), "w={w}");
                assert_eq!(del(a, &del(b, &v)), del(b, &del(a, &v)), "w={w}");
            }
        }
    }
}

#[test]
fn nu_from_lower_order() {
    for w in all_words() {
        let v = WordVector::word(w.clone());
        for k in 1..=w.len() {
            let mut lhs = WordVector::zero();
            for a in letters() {
                lhs = lhs.add(&sh(a, &apply_nu(k - 1, &del(a, &v))));
            }
            assert_eq!(lhs, apply_nu(k, &v).scale(&q(k as i64)), "w={w} k={k}");
        }
    }
}

#[test]
fn nu_against_insertion() {
    for w in all_words() {
        let v = WordVector::word(w.clone());
        let n = w.len() as i64;
        for k in 1..=w.len() + 1 {
            let lower = apply_nu(k - 1, &v);
            for a in letters() {
                let lhs = apply_nu(k, &sh(a, &v)).sub(&sh(a, &apply_nu(k, &v)));
                let mut rhs = sh(a, &lower).scale(&q(n + 2 - k as i64));
                for b in letters() {
                    rhs = rhs.add(&sh(b, &theta(b, a, &lower)));
                }
                assert_eq!(lhs, rhs, "w={w} k={k} a={a}");
            }
        }
    }
}

#[test]
fn nu_against_deletion() {
    for w in all_words() {
        let v = WordVector::word(w.clone());
        let n = w.len() as i64;
        for k in 1..=w.len() {
            for a in letters() {
                let lhs = del(a, &apply_nu(k, &v)).sub(&apply_nu(k, &del(a, &v)));
                let mut rhs = apply_nu(k - 1, &del(a, &v)).scale(&q(n + 1 - k as i64));
                for b in letters() {
                    rhs = rhs.add(&theta(a, b, &apply_nu(k - 1, &del(b, &v))));
                }
                assert_eq!(lhs, rhs, "w={w} k={k} a={a}");
            }
        }
    }
}

#[test]
fn insertion_form_equals_direct_matrix() {
    for n in 1..=MAX_LEN {
        for c in weak_compositions(n, ALPHABET) {
            let mut parts: Vec<usize> = c.iter().copied().filter(|&x| x > 0).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let content = Partition::new(parts).unwrap();
            for k in 0..=n {
                assert_eq!(
                    nu_k_insertion_form(&content, k).unwrap(),
                    nu_word_matrix(&content, k).unwrap(),
                    "content {content} k={k}"
                );
            }
        }
    }
}
