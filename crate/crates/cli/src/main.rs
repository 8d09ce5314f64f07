//! `shuffle-spectra`: exact spectra of shuffling operators from the command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or budget error.

mod tables;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use shuffle_spectra::markov::{
    hook_partial_bound, mixing_time_estimate, parse_rational, tv_bound, NormalizedSpectrum,
};
use shuffle_spectra::operators::builders::kernel_entries_i64;
use shuffle_spectra::operators::noninv::Kernel;
use shuffle_spectra::operators::{gamma_matrix, nu_matrix, nu_word_matrix};
use shuffle_spectra::oracle::{rank_only_nullities, verify_spectrum, OracleOptions, Verification, DEFAULT_BUDGET};
use shuffle_spectra::spectra::{check_conjecture, spectrum_gamma, spectrum_permutations, spectrum_words, Conjecture};
use shuffle_spectra::{Family, Partition, SpectrumReport};

#[derive(Parser)]
#[command(name = "shuffle-spectra", version, about = "Exact spectra of symmetrized shuffling operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct Operator {
    /// `nu` removes k cards and reinserts them; `gamma` riffles k packets of two
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Letter multiplicities of the words acted on, e.g. `2,2`; permutations if omitted
    #[arg(long, value_delimiter = ',')]
    content: Option<Vec<usize>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Print the spectrum computed from tableaux (nu) or characters (gamma)
    Spectrum {
        #[command(flatten)]
        op: Operator,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build the matrix and certify the spectrum against it
    Verify {
        #[command(flatten)]
        op: Operator,
        /// Compare nullities modulo a prime only; allows larger matrices
        #[arg(long)]
        rank_only: bool,
    },
    /// Regenerate a reference table
    Table {
        #[arg(long)]
        id: String,
    },
    /// Scan small cases for counterexamples to a conjectured identity
    Conjecture {
        #[arg(long)]
        id: String,
        #[arg(long)]
        n_max: usize,
    },
    /// Spectral bound on the total-variation distance of the normalized walk
    Mixing {
        #[command(flatten)]
        op: Operator,
        /// Target distance, as a decimal or a fraction
        #[arg(long)]
        threshold: String,
    },
    /// Write the operator matrix as CSV
    Matrix {
        #[command(flatten)]
        op: Operator,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure carrying its exit code.
enum Failure {
    Mismatch(String),
    Usage(String),
}

impl From<shuffle_spectra::Error> for Failure {
    fn from(e: shuffle_spectra::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Spectrum { op, format } => spectrum(&op, format),
        Command::Verify { op, rank_only } => verify(&op, rank_only),
        Command::Table { id } => table(&id),
        Command::Conjecture { id, n_max } => conjecture(&id, n_max),
        Command::Mixing { op, threshold } => mixing(&op, &threshold),
        Command::Matrix { op, out } => matrix(&op, out),
    };
    match result {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn budget() -> Result<usize, Failure> {
    match std::env::var("SHUFFLE_SPECTRA_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("SHUFFLE_SPECTRA_BUDGET={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

impl Operator {
    fn validate(&self) -> Result<Option<Partition>, Failure> {
        match self.family {
            Family::Nu if self.k > self.n => {
                return Err(Failure::Usage(format!("k = {} exceeds n = {}", self.k, self.n)));
            }
            Family::Gamma if 2 * self.k > self.n => {
                return Err(Failure::Usage(format!("gamma needs 2k <= n, got n = {}, k = {}", self.n, self.k)));
            }
            _ => {}
        }
        let Some(raw) = &self.content else { return Ok(None) };
        if self.family == Family::Gamma {
            return Err(Failure::Usage("--content is only supported for nu".into()));
        }
        let mut parts: Vec<usize> = raw.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let content = Partition::new(parts)?;
        if content.size() != self.n {
            return Err(Failure::Usage(format!("content {content} has size {}, expected n = {}", content.size(), self.n)));
        }
        Ok(Some(content))
    }

    /// Combinatorial spectrum of `ν`; `γ` needs the oracle and is handled separately.
    fn nu_report(&self, content: &Option<Partition>) -> Result<SpectrumReport, Failure> {
        Ok(match content {
            Some(c) => spectrum_words(c, self.k)?,
            None => spectrum_permutations(self.n, self.k)?,
        })
    }

    fn gamma_report(&self, opts: &OracleOptions) -> Result<(SpectrumReport, Verification), Failure> {
        check_factorial_budget(self.n, opts.budget)?;
        Ok(spectrum_gamma(self.n, self.k, opts)?)
    }
}

fn check_factorial_budget(n: usize, budget: usize) -> Result<(), Failure> {
    let dim: BigUint = (1..=n).map(BigUint::from).product();
    if dim > BigUint::from(budget) {
        return Err(Failure::Usage(format!("dimension {dim} exceeds the certification budget {budget}")));
    }
    Ok(())
}

fn spectrum(op: &Operator, format: Format) -> Outcome {
    let content = op.validate()?;
    let report = match op.family {
        Family::Nu => op.nu_report(&content)?,
        Family::Gamma => {
            let opts = OracleOptions { budget: budget()?, rank_only: false };
            let (report, v) = op.gamma_report(&opts)?;
            if !v.passed {
                return Err(Failure::Mismatch(v.diagnostics().join("\n") + "\n"));
            }
            report
        }
    };
    Ok(match format {
        Format::Json => report.to_json() + "\n",
        Format::Table => report.to_table(),
    })
}

fn verify(op: &Operator, rank_only: bool) -> Outcome {
    let content = op.validate()?;
    let opts = OracleOptions { budget: budget()?, rank_only };
    if op.family == Family::Gamma {
        let (report, v) = op.gamma_report(&opts)?;
        let mut out = format!("gamma_{} on S_{}: dimension {}\n", op.k, op.n, report.dimension);
        out.push_str("multiplicities are measured on the matrix; eigenvalues come from characters\n");
        return finish(out, &v);
    }
    let report = op.nu_report(&content)?;
    let dim: usize = report
        .dimension
        .to_string()
        .parse()
        .map_err(|_| Failure::Usage(format!("dimension {} is too large", report.dimension)))?;
    let limit = if rank_only { shuffle_spectra::oracle::RANK_ONLY_LIMIT.max(opts.budget) } else { opts.budget };
    if dim > limit {
        let hint = if rank_only { "" } else { "; try --rank-only" };
        return Err(Failure::Usage(format!("dimension {dim} exceeds the certification budget {limit}{hint}")));
    }
    let out = format!("nu_{} on content {}: dimension {dim}\n", op.k, report.content);
    if rank_only && dim > shuffle_spectra::oracle::EXACT_LIMIT {
        return rank_only_check(op, &content, &report, out);
    }
    let m = match &content {
        Some(c) => nu_word_matrix(c, op.k)?,
        None => nu_matrix(op.n, op.k)?,
    };
    let v = verify_spectrum(&m, &report.pairs(), &opts)?;
    finish(out, &v)
}

/// Nullities modulo a prime from `i64` entries, without building a big-integer matrix.
fn rank_only_check(op: &Operator, content: &Option<Partition>, report: &SpectrumReport, mut out: String) -> Outcome {
    let entries = match content {
        Some(c) => nu_word_matrix(c, op.k)?
            .to_i64()
            .ok_or_else(|| Failure::Usage("matrix entries overflow i64".into()))?,
        None => kernel_entries_i64(&Kernel::nu(op.n, op.k)?),
    };
    let d = report.eigenvalues.iter().map(|e| e.multiplicity.clone()).sum::<BigUint>();
    let d: usize = d.to_string().parse().unwrap_or(usize::MAX);
    let values: Vec<BigInt> = report.eigenvalues.iter().map(|e| e.value.clone()).collect();
    let nullities = rank_only_nullities(&entries, d, &values);
    let mut ok = true;
    for e in &report.eigenvalues {
        let measured = nullities[&e.value];
        let mark = if BigUint::from(measured) == e.multiplicity { "ok" } else { "MISMATCH" };
        ok &= mark == "ok";
        let _ = writeln!(out, "value {}: claimed {}, measured {} {}", e.value, e.multiplicity, measured, mark);
    }
    out.push_str("rank-only: nullities modulo a prime, no annihilating product\n");
    if ok {
        out.push_str("PASS\n");
        Ok(out)
    } else {
        out.push_str("FAIL\n");
        Err(Failure::Mismatch(out))
    }
}

fn finish(mut out: String, v: &Verification) -> Outcome {
    for line in v.diagnostics() {
        out.push_str(&line);
        out.push('\n');
    }
    if v.passed {
        out.push_str("PASS\n");
        Ok(out)
    } else {
        out.push_str("FAIL\n");
        Err(Failure::Mismatch(out))
    }
}

fn table(id: &str) -> Outcome {
    match tables::render(id) {
        Some(r) => Ok(r?),
        None => Err(Failure::Usage(format!("unknown table id {id:?}; expected one of {}", tables::IDS.join(", ")))),
    }
}

fn conjecture(id: &str, n_max: usize) -> Outcome {
    let c: Conjecture = id.parse()?;
    let report = check_conjecture(c, n_max)?;
    Ok(report.render())
}

fn mixing(op: &Operator, threshold: &str) -> Outcome {
    let content = op.validate()?;
    if content.is_some() {
        return Err(Failure::Usage("the mixing bound applies to walks on permutations only".into()));
    }
    let threshold = parse_rational(threshold)?;
    let report = match op.family {
        Family::Nu => op.nu_report(&None)?,
        Family::Gamma => op.gamma_report(&OracleOptions { budget: budget()?, rank_only: false })?.0,
    };
    let spec = NormalizedSpectrum::from_report(&report)?;
    let steps = mixing_time_estimate(&spec, &threshold)?;
    let mut out = format!("steps\t{steps}\n");
    out.push_str("s\tbound\n");
    for s in 1..=steps {
        let _ = writeln!(out, "{s}\t{}", tv_bound(&spec, s).decimal(12));
    }
    if op.family == Family::Nu {
        let partial = hook_partial_bound(op.n, op.k, steps)?;
        let _ = writeln!(out, "hook-only partial sum at s={steps}\t{}", partial.decimal(12));
    }
    Ok(out)
}

fn matrix(op: &Operator, out: Option<PathBuf>) -> Outcome {
    let content = op.validate()?;
    let limit = budget()?;
    let m = match (op.family, &content) {
        (Family::Nu, Some(c)) => {
            let dim = spectrum_words(c, op.k)?.dimension;
            if dim > BigUint::from(limit) {
                return Err(Failure::Usage(format!("dimension {dim} exceeds the budget {limit}")));
            }
            nu_word_matrix(c, op.k)?
        }
        (Family::Nu, None) => {
            check_factorial_budget(op.n, limit)?;
            nu_matrix(op.n, op.k)?
        }
        (Family::Gamma, _) => {
            check_factorial_budget(op.n, limit)?;
            gamma_matrix(op.n, op.k)?
        }
    };
    let csv = m.to_csv();
    match out {
        Some(path) => {
            std::fs::write(&path, csv).map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))?;
            Ok(format!("wrote {}x{} matrix to {}\n", m.dim(), m.dim(), path.display()))
        }
        None => Ok(csv),
    }
}
