//! Applicant CSV ingestion.
//!
//! Canonical header: `nama,nim,jurusan,semester,tahun,nilai,penghasilan,tanggungan`
//! (case-insensitive, any column order). Accepted aliases:
//!
//! | canonical     | aliases                                   |
//! |---------------|-------------------------------------------|
//! | `nama`        | `name`, `nama_pemohon`                    |
//! | `nim`         | `student_id`                              |
//! | `jurusan`     | `program`                                 |
//! | `semester`    | `smt`                                     |
//! | `tahun`       | `year`, `period_year`, `tahun_beasiswa`   |
//! | `nilai`       | `gpa`, `ipk`                              |
//! | `penghasilan` | `income`, `penghasilan_orang_tua`         |
//! | `tanggungan`  | `dependents`, `jml_tanggungan`            |
//!
//! Spaces and dashes in headers are read as underscores.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::applicant::{parse_money, ApplicantRecord};

pub const CANONICAL_COLUMNS: [&str; 8] = [
    "nama",
    "nim",
    "jurusan",
    "semester",
    "tahun",
    "nilai",
    "penghasilan",
    "tanggungan",
];

const ALIASES: &[(&str, &str)] = &[
    ("name", "nama"),
    ("nama_pemohon", "nama"),
    ("student_id", "nim"),
    ("program", "jurusan"),
    ("smt", "semester"),
    ("year", "tahun"),
    ("period_year", "tahun"),
    ("tahun_beasiswa", "tahun"),
    ("gpa", "nilai"),
    ("ipk", "nilai"),
    ("income", "penghasilan"),
    ("penghasilan_orang_tua", "penghasilan"),
    ("dependents", "tanggungan"),
    ("jml_tanggungan", "tanggungan"),
];

#[derive(Debug, Error, PartialEq)]
pub enum IngestError {
    #[error("malformed CSV: {0}")]
    MalformedCsv(String),
    #[error("missing column {0:?}")]
    MissingColumn(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowError {
    /// 1-based line number in the file (the header is line 1).
    pub line: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nim: Option<String>,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct IngestReport {
    pub records: Vec<ApplicantRecord>,
    pub rejected: Vec<RowError>,
    pub rows_read: usize,
}

fn canonical_header(raw: &str) -> String {
    let h: String = raw
        .trim()
        .trim_start_matches('\u{feff}')
        .to_lowercase()
        .chars()
        .map(|c| if c == ' ' || c == '-' { '_' } else { c })
        .collect();
    ALIASES
        .iter()
        .find(|(alias, _)| *alias == h)
        .map(|(_, canon)| canon.to_string())
        .unwrap_or(h)
}

/// Parse applicant rows. When `period_year` is given, rows for a different
/// `tahun` are rejected. The first occurrence of a nim wins.
pub fn ingest_applicants_csv(bytes: &[u8], period_year: Option<i32>) -> Result<IngestReport, IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(bytes);

    let headers = reader
        .headers()
        .map_err(|e| IngestError::MalformedCsv(e.to_string()))?
        .clone();
    let mut column: HashMap<String, usize> = HashMap::new();
    for (i, h) in headers.iter().enumerate() {
        column.entry(canonical_header(h)).or_insert(i);
    }
    for name in CANONICAL_COLUMNS {
        if !column.contains_key(name) {
            return Err(IngestError::MissingColumn(name.to_string()));
        }
    }
    let idx = |name: &str| column[name];

    let mut report = IngestReport::default();
    let mut first_line: HashMap<String, u64> = HashMap::new();
    for result in reader.records() {
        let record = result.map_err(|e| IngestError::MalformedCsv(e.to_string()))?;
        report.rows_read += 1;
        let line = record.position().map_or(0, |p| p.line());
        let nim = record.get(idx("nim")).map(str::to_string).filter(|s| !s.is_empty());
        let reject = |reason: String| RowError {
            line,
            nim: nim.clone(),
            reason,
        };

        if record.len() != headers.len() {
            report.rejected.push(reject(format!(
                "expected {} fields, found {}",
                headers.len(),
                record.len()
            )));
            continue;
        }
        let fields = Fields(CANONICAL_COLUMNS.map(|c| record.get(idx(c)).unwrap_or("")));

        match parse_row(&fields) {
            Err(reason) => report.rejected.push(reject(reason)),
            Ok(applicant) => {
                if let Some(year) = period_year.filter(|y| *y != applicant.period_year) {
                    report.rejected.push(reject(format!(
                        "tahun {} does not match period {year}",
                        applicant.period_year
                    )));
                } else if let Some(first) = first_line.get(&applicant.nim) {
                    report
                        .rejected
                        .push(reject(format!("duplicate nim (first seen on line {first})")));
                } else {
                    first_line.insert(applicant.nim.clone(), line);
                    report.records.push(applicant);
                }
            }
        }
    }
    Ok(report)
}

struct Fields<'r>([&'r str; 8]);

impl<'r> Fields<'r> {
    fn get(&self, name: &str) -> &'r str {
        let i = CANONICAL_COLUMNS.iter().position(|c| *c == name).expect("canonical column");
        self.0[i]
    }
}

fn parse_row(fields: &Fields<'_>) -> Result<ApplicantRecord, String> {
    let field = |name: &str| fields.get(name);
    let mut problems = Vec::new();
    let mut int = |name: &str| -> Option<i64> {
        let raw = field(name);
        match raw.parse::<i64>() {
            Ok(v) if v >= 0 => Some(v),
            _ => {
                problems.push(format!("{name}: {raw:?} is not a non-negative integer"));
                None
            }
        }
    };
    let semester = int("semester");
    let tahun = int("tahun");
    let tanggungan = int("tanggungan");
    let nilai = match field("nilai").parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 => Some(v),
        _ => {
            problems.push(format!("nilai: {:?} is not a non-negative number", field("nilai")));
            None
        }
    };
    let income = parse_money(field("penghasilan"));
    if income.is_none() {
        problems.push(format!("penghasilan: {:?} is not an amount", field("penghasilan")));
    }
    if !problems.is_empty() {
        return Err(problems.join("; "));
    }
    let record = ApplicantRecord {
        nim: field("nim").to_string(),
        name: field("nama").to_string(),
        program: field("jurusan").to_string(),
        semester: u32::try_from(semester.unwrap()).map_err(|_| "semester: out of range".to_string())?,
        period_year: i32::try_from(tahun.unwrap()).map_err(|_| "tahun: out of range".to_string())?,
        nilai: nilai.unwrap(),
        income: income.unwrap(),
        dependents: u32::try_from(tanggungan.unwrap()).map_err(|_| "tanggungan: out of range".to_string())?,
    };
    let errors = record.validate();
    if errors.is_empty() {
        Ok(record)
    } else {
        Err(errors.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))
    }
}
