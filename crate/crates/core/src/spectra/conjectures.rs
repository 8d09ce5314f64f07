//! Counterexample scans for open statements about both shuffle families.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::combinatorics::{binomial, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::operators::builders::nu_lambda_matrix;
use crate::oracle::commutes;
use crate::spectra::gamma::gamma_eigenvalue;
use crate::spectra::recursion::{eigenvalue_nu, spectrum_permutations, tableau_type};
use crate::tableaux::{all_syt, StandardTableau};

/// The statements that can be scanned.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture {
    /// Second largest eigenvalue of `ν_k` is `k! C(n-2, k) C(n+1, k)`.
    SecondEigenvalue,
    /// `v_k(t) ≤ C(type(t), k) (n + λ_1 - type(t))^k`.
    TypeBound,
    /// Ratio of `γ` eigenvalues between hooks `(n-m, 1^m)` and `(n-m-1, 1^m)`.
    HookGrowth,
    /// Ratio of consecutive nonzero `γ` eigenvalues along a hook row.
    ColumnRatio,
    /// `ν_λ` and `ν_μ` commute exactly when both lie in one of the two families.
    Commutation,
}

impl Conjecture {
    pub const ALL: [Conjecture; 5] = [
        Conjecture::SecondEigenvalue,
        Conjecture::TypeBound,
        Conjecture::HookGrowth,
        Conjecture::ColumnRatio,
        Conjecture::Commutation,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Conjecture::SecondEigenvalue => "92",
            Conjecture::TypeBound => "96",
            Conjecture::HookGrowth => "142",
            Conjecture::ColumnRatio => "143",
            Conjecture::Commutation => "140",
        }
    }

    /// Largest `n` a scan accepts.
    pub fn max_n(&self) -> usize {
        match self {
            Conjecture::SecondEigenvalue | Conjecture::TypeBound => 12,
            Conjecture::HookGrowth | Conjecture::ColumnRatio => 9,
            Conjecture::Commutation => 6,
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Conjecture::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown conjecture id {s:?}; expected one of 92, 96, 140, 142, 143")))
    }
}

/// Outcome of a scan. `witnesses` lists non-commuting pairs for the commutation scan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub id: String,
    pub n_max: usize,
    pub instances: usize,
    pub violations: Vec<String>,
    pub witnesses: Vec<String>,
}

impl ScanReport {
    pub fn render(&self) -> String {
        let mut out = format!(
            "conjecture {}: n <= {}, {} instances, {} violations\n",
            self.id,
            self.n_max,
            self.instances,
            self.violations.len()
        );
        for v in &self.violations {
            out.push_str(&format!("violation: {v}\n"));
        }
        for w in &self.witnesses {
            out.push_str(&format!("non-commuting: {w}\n"));
        }
        out
    }
}

pub fn check_conjecture(c: Conjecture, n_max: usize) -> Result<ScanReport> {
    if n_max > c.max_n() {
        return Err(Error::OutOfRange(format!("conjecture {c} scans n <= {}, got {n_max}", c.max_n())));
    }
    let mut report = ScanReport { id: c.id().into(), n_max, ..Default::default() };
    match c {
        Conjecture::SecondEigenvalue => scan_second(n_max, &mut report)?,
        Conjecture::TypeBound => scan_type_bound(n_max, &mut report),
        Conjecture::HookGrowth => scan_hook_growth(n_max, &mut report)?,
        Conjecture::ColumnRatio => scan_column_ratio(n_max, &mut report)?,
        Conjecture::Commutation => scan_commutation(n_max, &mut report)?,
    }
    Ok(report)
}

/// `k! C(n-2, k) C(n+1, k)`.
pub fn predicted_second_eigenvalue(n: usize, k: usize) -> BigInt {
    let fact: BigInt = (1..=k).map(BigInt::from).product();
    let c1 = if n >= 2 { binomial(n as u64 - 2, k as u64) } else { 0 };
    fact * BigInt::from(c1) * BigInt::from(binomial(n as u64 + 1, k as u64))
}

/// Largest eigenvalue strictly below the top one, or zero when there is none.
pub fn second_eigenvalue(n: usize, k: usize) -> Result<BigInt> {
    let s = spectrum_permutations(n, k)?;
    Ok(s.eigenvalues.get(1).map(|e| e.value.clone()).unwrap_or_default())
}

fn scan_second(n_max: usize, report: &mut ScanReport) -> Result<()> {
    for n in 2..=n_max {
        for k in 1..=n {
            report.instances += 1;
            let got = second_eigenvalue(n, k)?;
            let want = predicted_second_eigenvalue(n, k);
            if got != want {
                report.violations.push(format!("n={n} k={k}: second eigenvalue {got}, predicted {want}"));
            }
        }
    }
    Ok(())
}

/// `C(type(t), k) (n + λ_1 - type(t))^k`.
pub fn type_bound(t: &StandardTableau, k: usize) -> BigInt {
    let n = t.size();
    let ty = tableau_type(t);
    let lam1 = t.shape().part(0);
    BigInt::from(binomial(ty as u64, k as u64)) * BigInt::from(n + lam1 - ty).pow(k as u32)
}

/// One line of the bound-versus-value comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub tableau: StandardTableau,
    pub k: usize,
    pub bound: BigInt,
    pub value: BigInt,
}

/// All `(t, k)` with `|t| = n`, `k ≥ 1` and `v_k(t) ≠ 0`.
pub fn type_bound_rows(n: usize) -> Vec<BoundRow> {
    let mut rows = Vec::new();
    for t in all_syt(n) {
        for k in 1..=n {
            let value = eigenvalue_nu(&t, k);
            if value.is_zero() {
                continue;
            }
            rows.push(BoundRow { bound: type_bound(&t, k), tableau: t.clone(), k, value });
        }
    }
    rows
}

fn scan_type_bound(n_max: usize, report: &mut ScanReport) {
    for n in 1..=n_max {
        for t in all_syt(n) {
            for k in 1..=n {
                report.instances += 1;
                let v = eigenvalue_nu(&t, k);
                let b = type_bound(&t, k);
                if v > b {
                    report.violations.push(format!("t={t} k={k}: value {v} exceeds bound {b}"));
                }
            }
        }
    }
}

fn ratio(a: &BigInt, b: &BigInt) -> BigRational {
    BigRational::new(a.clone(), b.clone())
}

/// Predicted `c_k^{(n-m, 1^m)} / c_k^{(n-m-1, 1^m)}`: `(n-m) n / (n-2k)` for even `m`,
/// `(n-m-1)(n+1) / (n-2k)` for odd `m`.
pub fn predicted_hook_growth(n: usize, m: usize, k: usize) -> BigRational {
    let num = if m % 2 == 0 { (n - m) * n } else { (n - m - 1) * (n + 1) };
    BigRational::new(BigInt::from(num), BigInt::from(n - 2 * k))
}

/// Hooks `(n-m, 1^m)` with `m ≤ 3`, and every `k` with `2k < n`, for `n ≤ n_max`.
/// Pairs where either eigenvalue vanishes are skipped.
fn scan_hook_growth(n_max: usize, report: &mut ScanReport) -> Result<()> {
    for n in 3..=n_max {
        for m in 0..=3usize {
            // the smaller hook (n-m-1, 1^m) needs n - m - 1 ≥ 1
            if m + 2 > n {
                continue;
            }
            let big = Partition::hook(n, m)?;
            let small = Partition::hook(n - 1, m)?;
            for k in 0..(n + 1) / 2 {
                let a = gamma_eigenvalue(&big, k)?;
                let b = gamma_eigenvalue(&small, k)?;
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                report.instances += 1;
                let want = predicted_hook_growth(n, m, k);
                if ratio(&a, &b) != want {
                    report.violations.push(format!("{big} vs {small}, k={k}: ratio {}/{} != {want}", a, b));
                }
            }
        }
    }
    Ok(())
}

/// Along one row the nonzero columns `k` are numbered `i = 1, 2, …`; the ratio to
/// the next column is predicted as `C(n-2k, 2) / (2i)`.
fn scan_column_ratio(n_max: usize, report: &mut ScanReport) -> Result<()> {
    for n in 2..=n_max {
        for m in 0..=3usize.min(n - 1) {
            let lam = Partition::hook(n, m)?;
            let cols: Vec<BigInt> = (0..=n / 2).map(|k| gamma_eigenvalue(&lam, k)).collect::<Result<_>>()?;
            let mut i = 0;
            for k in 0..cols.len() {
                if cols[k].is_zero() {
                    continue;
                }
                i += 1;
                let Some(next) = cols.get(k + 1) else { continue };
                if next.is_zero() {
                    continue;
                }
                report.instances += 1;
                let want = BigRational::new(BigInt::from(binomial((n - 2 * k) as u64, 2)), BigInt::from(2 * i));
                if ratio(next, &cols[k]) != want {
                    report.violations.push(format!("{lam}, k={k}: ratio {next}/{} != {want}", cols[k]));
                }
            }
        }
    }
    Ok(())
}

fn is_hook(lam: &Partition) -> bool {
    lam.parts().iter().skip(1).all(|&p| p == 1)
}

fn is_pairs(lam: &Partition) -> bool {
    lam.parts().iter().all(|&p| p <= 2)
}

/// `(n)` is the identity and `(1^n)` the all-ones matrix; both commute with everything.
fn is_central(lam: &Partition) -> bool {
    lam.len() == 1 || lam.part(0) == 1
}

fn scan_commutation(n_max: usize, report: &mut ScanReport) -> Result<()> {
    for n in 4..=n_max {
        let shapes: Vec<Partition> = partitions_of(n).into_iter().filter(|l| !is_central(l)).collect();
        let mats = shapes.iter().map(|l| nu_lambda_matrix(n, l)).collect::<Result<Vec<_>>>()?;
        for a in 0..shapes.len() {
            for b in a + 1..shapes.len() {
                let (la, lb) = (&shapes[a], &shapes[b]);
                report.instances += 1;
                let same_family = (is_hook(la) && is_hook(lb)) || (is_pairs(la) && is_pairs(lb));
                let c = commutes(&mats[a], &mats[b])?;
                if !c {
                    report.witnesses.push(format!("n={n}: {la} and {lb}"));
                }
                if c != same_family {
                    let verdict = if c { "commute" } else { "do not commute" };
                    report.violations.push(format!("n={n}: {la} and {lb} {verdict}"));
                }
            }
        }
    }
    Ok(())
}
