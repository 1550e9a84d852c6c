//! `fmadm`: rank an applicant CSV offline or check a criteria file.
//!
//! Exit status: 0 on success, 1 on validation errors, 2 on I/O errors.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fmadm_core::{CriteriaSet, DecisionError, WeightVector};
use fmadm_registry::{ingest_applicants_csv, RankingView, RegistryError, RunRecord};

#[derive(Parser)]
#[command(name = "fmadm", version, about = "Fuzzy MADM / SAW scholarship ranking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank the applicants of a CSV file.
    Rank {
        /// Applicant CSV, or `-` for stdin.
        #[arg(long)]
        applicants: PathBuf,
        /// Criteria JSON. Defaults to the bundled four-criterion config.
        #[arg(long)]
        criteria: Option<PathBuf>,
        /// Comma-separated weights overriding the criteria file.
        #[arg(long)]
        weights: Option<String>,
        /// Select at most N recipients.
        #[arg(long)]
        top: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Also print the crisp and normalized matrices.
        #[arg(long)]
        trace: bool,
        /// Reject rows whose `tahun` differs.
        #[arg(long)]
        year: Option<i32>,
    },
    /// Check a criteria file for table gaps, overlaps and weight problems.
    Validate {
        #[arg(long)]
        criteria: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

enum Failure {
    Validation(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Io(_) => 2,
        }
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, Failure> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
    }
}

fn load_criteria(path: &Path) -> Result<CriteriaSet, Failure> {
    let bytes = read_input(path)?;
    let text = String::from_utf8(bytes).map_err(|_| Failure::Validation(format!("{}: not UTF-8", path.display())))?;
    CriteriaSet::from_json(&text).map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))
}

fn decision_failure(e: DecisionError) -> Failure {
    match e {
        DecisionError::NoEligibleAlternatives { ineligible } => {
            for i in &ineligible {
                for v in &i.violations {
                    eprintln!("ineligible {}: {} value {} outside table", i.id, v.criterion, v.value);
                }
            }
            Failure::Validation("no eligible applicants".into())
        }
        other => Failure::Validation(other.to_string()),
    }
}

#[allow(clippy::too_many_arguments)]
fn rank(
    applicants: &Path,
    criteria: Option<&Path>,
    weights: Option<&str>,
    top: Option<usize>,
    format: Format,
    trace: bool,
    year: Option<i32>,
) -> Result<String, Failure> {
    let criteria = match criteria {
        Some(p) => load_criteria(p)?,
        None => CriteriaSet::bidik_misi(),
    };
    let issues = criteria.validate();
    if !issues.is_empty() {
        for issue in &issues {
            eprintln!("criteria: {issue}");
        }
        return Err(Failure::Validation(format!("criteria file has {} problem(s)", issues.len())));
    }
    let weights = match weights {
        Some(text) => WeightVector::parse_list(text).map_err(|e| Failure::Validation(e.to_string()))?,
        None => criteria.weights().map_err(decision_failure)?,
    };
    if weights.len() != criteria.len() {
        return Err(Failure::Validation(format!(
            "{} weights given for {} criteria",
            weights.len(),
            criteria.len()
        )));
    }

    let bytes = read_input(applicants)?;
    let report = ingest_applicants_csv(&bytes, year)
        .map_err(|e| Failure::Validation(format!("{}: {e}", applicants.display())))?;
    for row in &report.rejected {
        match &row.nim {
            Some(nim) => eprintln!("line {} (nim {nim}): {}", row.line, row.reason),
            None => eprintln!("line {}: {}", row.line, row.reason),
        }
    }
    if report.records.is_empty() {
        return Err(Failure::Validation("no valid applicant rows".into()));
    }

    let record = RunRecord::compute(&criteria, &weights, top, report.records).map_err(|e| match e {
        RegistryError::Decision(d) => decision_failure(d),
        other => Failure::Validation(other.to_string()),
    })?;
    for i in &record.outcome.ineligible {
        for v in &i.violations {
            eprintln!("ineligible {}: {} value {} outside table", i.id, v.criterion, v.value);
        }
    }
    let view = RankingView::from_record(&record);
    Ok(match format {
        Format::Table => render::text(&record, &view, trace),
        Format::Csv => render::csv(&view, trace).map_err(|e| Failure::Io(e.to_string()))?,
        Format::Json => render::json(&record),
    })
}

fn validate(path: &Path) -> Result<String, Failure> {
    let criteria = load_criteria(path)?;
    let issues = criteria.validate();
    if issues.is_empty() {
        let intervals: usize = criteria.criteria.iter().map(|c| c.table.entries.len()).sum();
        let sum: f64 = criteria.weight_values().iter().sum();
        Ok(format!(
            "ok: {} criteria, {intervals} intervals, weights sum to {sum}\n",
            criteria.len()
        ))
    } else {
        for issue in &issues {
            println!("{issue}");
        }
        Err(Failure::Validation(format!("{} problem(s) found", issues.len())))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Rank {
            applicants,
            criteria,
            weights,
            top,
            format,
            trace,
            year,
        } => rank(applicants, criteria.as_deref(), weights.as_deref(), *top, *format, *trace, *year),
        Command::Validate { criteria } => validate(criteria),
    };
    match result {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
                eprintln!("fmadm: stdout: {e}");
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Validation(m) | Failure::Io(m) => eprintln!("fmadm: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
