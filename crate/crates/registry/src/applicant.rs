//! Applicant records (pemohon) and their field-level validation.

use std::fmt;

use fmadm_core::{CriteriaSet, RawAlternative};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{RegistryError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApplicantRecord {
    pub nim: String,
    pub name: String,
    /// Jurusan.
    pub program: String,
    pub semester: u32,
    pub period_year: i32,
    pub nilai: f64,
    /// Parental income, rupiah per month.
    pub income: f64,
    pub dependents: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldError {
    pub field: String,
    pub message: String,
}

impl FieldError {
    fn new(field: &str, message: impl Into<String>) -> Self {
        FieldError {
            field: field.to_string(),
            message: message.into(),
        }
    }
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

/// Parse a rupiah amount: `1500000`, `1,500,000`, `Rp1,500,000`, `Rp 1,500,000`.
pub fn parse_money(text: &str) -> Option<f64> {
    let t = text.trim();
    let t = t
        .strip_prefix("Rp")
        .or_else(|| t.strip_prefix("rp"))
        .or_else(|| t.strip_prefix("RP"))
        .unwrap_or(t)
        .trim_start_matches('.')
        .trim();
    let digits: String = t.chars().filter(|c| *c != ',').collect();
    if digits.is_empty() || digits.starts_with('-') {
        return None;
    }
    digits.parse::<f64>().ok().filter(|v| v.is_finite())
}

impl ApplicantRecord {
    /// Field problems that make the record unstorable. Out-of-table values
    /// (semester 9, say) are not errors here; they surface at selection.
    pub fn validate(&self) -> Vec<FieldError> {
        let mut errors = Vec::new();
        if self.nim.trim().is_empty() {
            errors.push(FieldError::new("nim", "must not be empty"));
        }
        if self.name.trim().is_empty() {
            errors.push(FieldError::new("name", "must not be empty"));
        }
        if !(1900..=9999).contains(&self.period_year) {
            errors.push(FieldError::new("period_year", "must be a four-digit year"));
        }
        if !self.nilai.is_finite() || self.nilai < 0.0 {
            errors.push(FieldError::new("nilai", "must be a non-negative number"));
        }
        if !self.income.is_finite() || self.income < 0.0 {
            errors.push(FieldError::new("income", "must be a non-negative amount"));
        }
        errors
    }

    /// Build a record from an untyped JSON object, collecting one message
    /// per bad field. `income` may be a number or a rupiah string.
    pub fn from_json(value: &Value) -> std::result::Result<Self, Vec<FieldError>> {
        let Some(obj) = value.as_object() else {
            return Err(vec![FieldError::new("body", "expected a JSON object")]);
        };
        let mut errors = Vec::new();

        let mut text = |field: &str| match obj.get(field) {
            Some(Value::String(s)) => Some(s.trim().to_string()),
            Some(Value::Number(n)) => Some(n.to_string()),
            None | Some(Value::Null) => {
                errors.push(FieldError::new(field, "is required"));
                None
            }
            Some(_) => {
                errors.push(FieldError::new(field, "must be a string"));
                None
            }
        };
        let nim = text("nim");
        let name = text("name");
        let program = text("program");

        let mut number = |field: &str, money: bool| -> Option<f64> {
            match obj.get(field) {
                Some(Value::Number(n)) => n.as_f64(),
                Some(Value::String(s)) => {
                    let parsed = if money {
                        parse_money(s)
                    } else {
                        s.trim().parse::<f64>().ok()
                    };
                    if parsed.is_none() {
                        errors.push(FieldError::new(field, format!("{s:?} is not a number")));
                    }
                    parsed
                }
                None | Some(Value::Null) => {
                    errors.push(FieldError::new(field, "is required"));
                    None
                }
                Some(_) => {
                    errors.push(FieldError::new(field, "must be a number"));
                    None
                }
            }
        };
        let semester = number("semester", false);
        let period_year = number("period_year", false);
        let nilai = number("nilai", false);
        let income = number("income", true);
        let dependents = number("dependents", false);

        let mut integer = |field: &str, v: Option<f64>, max: f64| -> Option<f64> {
            let v = v?;
            if v.fract() != 0.0 || v < 0.0 || v > max {
                errors.push(FieldError::new(field, "must be a non-negative integer"));
                None
            } else {
                Some(v)
            }
        };
        let semester = integer("semester", semester, f64::from(u32::MAX));
        let period_year = integer("period_year", period_year, f64::from(i32::MAX));
        let dependents = integer("dependents", dependents, f64::from(u32::MAX));

        match (nim, name, program, semester, period_year, nilai, income, dependents) {
            (Some(nim), Some(name), Some(program), Some(semester), Some(year), Some(nilai), Some(income), Some(dependents))
                if errors.is_empty() =>
            {
                let record = ApplicantRecord {
                    nim,
                    name,
                    program,
                    semester: semester as u32,
                    period_year: year as i32,
                    nilai,
                    income,
                    dependents: dependents as u32,
                };
                let problems = record.validate();
                if problems.is_empty() {
                    Ok(record)
                } else {
                    Err(problems)
                }
            }
            _ => Err(errors),
        }
    }

    /// Raw value of the field a criterion reads. Accepts the Indonesian
    /// attribute names used by criteria configs and the record's own names.
    pub fn attribute(&self, name: &str) -> Option<f64> {
        match name {
            "nilai" => Some(self.nilai),
            "penghasilan" | "income" => Some(self.income),
            "tanggungan" | "dependents" => Some(f64::from(self.dependents)),
            "semester" => Some(f64::from(self.semester)),
            _ => None,
        }
    }

    /// Raw values aligned to `criteria`, identified by nim.
    pub fn to_alternative(&self, criteria: &CriteriaSet) -> Result<RawAlternative> {
        let values = criteria
            .criteria
            .iter()
            .map(|c| {
                self.attribute(&c.attribute)
                    .ok_or_else(|| RegistryError::UnknownAttribute(c.attribute.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RawAlternative::new(self.nim.clone(), values))
    }
}

pub fn to_alternatives(records: &[ApplicantRecord], criteria: &CriteriaSet) -> Result<Vec<RawAlternative>> {
    records.iter().map(|r| r.to_alternative(criteria)).collect()
}
