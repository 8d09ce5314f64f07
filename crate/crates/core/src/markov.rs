//! Random walks driven by the shuffles: transition normalization, the spectral
//! total-variation bound, and mixing-time estimates.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::operators::builders::{gamma_row_sum, nu_row_sum};
use crate::spectra::{eigenvalue_nu, Family, SpectrumReport};
use crate::tableaux::{all_syt, count_syt};

/// Constant row sum of the shuffle matrix; dividing by it gives the transition matrix.
pub fn normalizer(family: Family, n: usize, k: usize) -> Result<BigInt> {
    match family {
        Family::Nu if k <= n => Ok(nu_row_sum(n, k)),
        Family::Gamma if 2 * k <= n => Ok(gamma_row_sum(n, k)),
        _ => Err(Error::OutOfRange(format!("no {family} operator with n={n}, k={k}"))),
    }
}

/// Eigenvalues of a transition matrix with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedSpectrum {
    pub normalizer: BigInt,
    pub ratios: BTreeMap<BigRational, BigUint>,
}

impl NormalizedSpectrum {
    /// Divides every eigenvalue by the row sum. Only walks on permutations are accepted.
    pub fn from_report(report: &SpectrumReport) -> Result<Self> {
        if report.content != Partition::column(report.n) {
            return Err(Error::OutOfRange(
                "the total-variation bound applies to walks on permutations only".into(),
            ));
        }
        let normalizer = normalizer(report.family, report.n, report.k)?;
        let mut ratios = BTreeMap::new();
        for e in &report.eigenvalues {
            let r = BigRational::new(e.value.clone(), normalizer.clone());
            if r.is_negative() || r > BigRational::one() {
                return Err(Error::OutOfRange(format!("eigenvalue {} outside [0, {normalizer}]", e.value)));
            }
            *ratios.entry(r).or_insert_with(BigUint::zero) += &e.multiplicity;
        }
        Ok(NormalizedSpectrum { normalizer, ratios })
    }

    /// Multiplicity of the eigenvalue `1`.
    pub fn perron_multiplicity(&self) -> BigUint {
        self.ratios.get(&BigRational::one()).cloned().unwrap_or_default()
    }

    /// `(1/4) Σ mult · ratio^{2s}` over all eigenvalues except one copy of `1`.
    pub fn radicand(&self, steps: u32) -> BigRational {
        let mut sum = BigRational::zero();
        for (r, m) in &self.ratios {
            let mut m = BigInt::from(m.clone());
            if r.is_one() {
                m -= 1;
            }
            if m.is_zero() || r.is_zero() {
                continue;
            }
            sum += r.pow(2 * steps as i32) * BigRational::from_integer(m);
        }
        sum / BigRational::from_integer(4.into())
    }
}

/// The bound `√radicand` on the distance to uniform after some number of steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TvBound {
    pub steps: u32,
    pub radicand: BigRational,
}

impl TvBound {
    /// `√radicand` truncated to `digits` decimal places.
    pub fn decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10).pow(2 * digits);
        let scaled = (&self.radicand * BigRational::from_integer(scale)).floor().to_integer();
        let root = scaled.sqrt();
        let unit = BigInt::from(10).pow(digits);
        let whole = &root / &unit;
        let frac = (&root % &unit).to_string();
        format!("{whole}.{}{frac}", "0".repeat(digits as usize - frac.len()))
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

pub fn tv_bound(spectrum: &NormalizedSpectrum, steps: u32) -> TvBound {
    TvBound { steps, radicand: spectrum.radicand(steps) }
}

/// Same sum restricted to hook-shaped tableaux other than the single row, for `ν_k`
/// on `S_n`. Most eigenvalues are left out, so this is a diagnostic rather than a bound.
pub fn hook_partial_bound(n: usize, k: usize, steps: u32) -> Result<TvBound> {
    let norm = normalizer(Family::Nu, n, k)?;
    let mut sum = BigRational::zero();
    for t in all_syt(n) {
        let shape = t.shape();
        let hook = shape.parts().iter().skip(1).all(|&p| p == 1);
        if !hook || shape.len() == 1 {
            continue;
        }
        let r = BigRational::new(eigenvalue_nu(&t, k), norm.clone());
        sum += r.pow(2 * steps as i32) * BigRational::from_integer(count_syt(&shape).into());
    }
    Ok(TvBound { steps, radicand: sum / BigRational::from_integer(4.into()) })
}

/// Parses `0.25`, `1/4` or `3` as an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("{s:?} is not a decimal or fraction"));
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(a, b));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.chars().any(|c| !c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    Ok(BigRational::new(num, BigInt::from(10).pow(frac.len() as u32)))
}

/// Least number of steps whose bound is below `threshold`, found by doubling and then
/// bisecting the decreasing bound.
pub fn mixing_time_estimate(spectrum: &NormalizedSpectrum, threshold: &BigRational) -> Result<u32> {
    if !threshold.is_positive() || threshold >= &BigRational::one() {
        return Err(Error::OutOfRange(format!("threshold {threshold} must lie strictly between 0 and 1")));
    }
    if spectrum.perron_multiplicity() != BigUint::one() {
        return Err(Error::OutOfRange("the walk has more than one stationary direction; it never mixes".into()));
    }
    let target = threshold * threshold;
    let below = |s: u32| spectrum.radicand(s) < target;
    let mut hi = 1u32;
    while !below(hi) {
        hi = hi.checked_mul(2).ok_or_else(|| Error::OutOfRange("mixing time overflowed".into()))?;
    }
    let mut lo = hi / 2;
    // invariant: below(hi) holds and lo is 0 or fails
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if below(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Normalized spectrum of `ν_k` on `S_n` from the tableau recursion.
pub fn nu_normalized(n: usize, k: usize) -> Result<NormalizedSpectrum> {
    NormalizedSpectrum::from_report(&crate::spectra::spectrum_permutations(n, k)?)
}
