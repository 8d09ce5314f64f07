use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Which symmetrized shuffle family an operator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Remove `k` cards and reinsert them.
    Nu,
    /// Cut `k` packets of two and riffle with the singletons.
    Gamma,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Nu => "nu",
            Family::Gamma => "gamma",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nu" => Ok(Family::Nu),
            "gamma" => Ok(Family::Gamma),
            other => Err(Error::Parse(format!("unknown family {other:?}; expected nu or gamma"))),
        }
    }
}

/// One eigenvalue with its multiplicity and the tableaux that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigen {
    pub value: BigInt,
    pub multiplicity: BigUint,
    pub tableaux: Vec<String>,
}

/// The full spectrum of an operator, values in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub content: Partition,
    pub dimension: BigUint,
    pub eigenvalues: Vec<Eigen>,
}

impl SpectrumReport {
    /// `(value, multiplicity)` pairs, decreasing in value.
    pub fn pairs(&self) -> Vec<(BigInt, BigUint)> {
        self.eigenvalues.iter().map(|e| (e.value.clone(), e.multiplicity.clone())).collect()
    }

    pub fn multiplicity(&self, value: &BigInt) -> BigUint {
        self.eigenvalues.iter().find(|e| &e.value == value).map(|e| e.multiplicity.clone()).unwrap_or_default()
    }

    /// Pairs as small integers, convenient for comparisons with literal tables.
    pub fn as_u64_pairs(&self) -> Vec<(u64, u64)> {
        use num_traits::ToPrimitive;
        self.eigenvalues
            .iter()
            .map(|e| (e.value.to_u64().unwrap_or(u64::MAX), e.multiplicity.to_u64().unwrap_or(u64::MAX)))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ReportJson::from(self)).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ReportJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }

    /// Two columns, value and multiplicity, largest value first.
    pub fn to_table(&self) -> String {
        let mut out = String::from("value\tmultiplicity\n");
        for e in &self.eigenvalues {
            out.push_str(&format!("{}\t{}\n", e.value, e.multiplicity));
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct EigenJson {
    value: String,
    multiplicity: String,
    tableaux: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    family: Family,
    n: usize,
    k: usize,
    content: Vec<usize>,
    dimension: String,
    eigenvalues: Vec<EigenJson>,
}

impl From<&SpectrumReport> for ReportJson {
    fn from(r: &SpectrumReport) -> Self {
        ReportJson {
            family: r.family,
            n: r.n,
            k: r.k,
            content: r.content.parts().to_vec(),
            dimension: r.dimension.to_string(),
            eigenvalues: r
                .eigenvalues
                .iter()
                .map(|e| EigenJson {
                    value: e.value.to_string(),
                    multiplicity: e.multiplicity.to_string(),
                    tableaux: e.tableaux.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<ReportJson> for SpectrumReport {
    type Error = Error;

    fn try_from(r: ReportJson) -> Result<Self> {
        let big = |s: &str| s.parse::<BigInt>().map_err(|e| Error::Parse(format!("{s:?}: {e}")));
        let ubig = |s: &str| s.parse::<BigUint>().map_err(|e| Error::Parse(format!("{s:?}: {e}")));
        Ok(SpectrumReport {
            family: r.family,
            n: r.n,
            k: r.k,
            content: Partition::new(r.content)?,
            dimension: ubig(&r.dimension)?,
            eigenvalues: r
                .eigenvalues
                .into_iter()
                .map(|e| Ok(Eigen { value: big(&e.value)?, multiplicity: ubig(&e.multiplicity)?, tableaux: e.tableaux }))
                .collect::<Result<Vec<_>>>()?,
        })
    }
}
