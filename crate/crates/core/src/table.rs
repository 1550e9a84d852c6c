//! Interval conversion tables: raw attribute value -> crisp fuzzy score.
//!
//! Intervals are lower-inclusive and upper-exclusive unless an entry sets
//! `upper_inclusive`. A missing upper bound means the interval is unbounded
//! above. Tables are plain data and may be invalid; [`ConversionTable::validate`]
//! reports every problem and lookups refuse illegal crisp values.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::fuzzy::FuzzyLevel;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lower: f64,
    #[serde(default)]
    pub upper: Option<f64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub upper_inclusive: bool,
    /// Raw crisp value as configured; legal values are 2, 4, 6, 8, 10.
    pub crisp: f64,
}

impl Interval {
    pub fn half_open(lower: f64, upper: f64, level: FuzzyLevel) -> Self {
        Interval {
            lower,
            upper: Some(upper),
            upper_inclusive: false,
            crisp: level.as_f64(),
        }
    }

    pub fn closed(lower: f64, upper: f64, level: FuzzyLevel) -> Self {
        Interval {
            upper_inclusive: true,
            ..Self::half_open(lower, upper, level)
        }
    }

    pub fn unbounded(lower: f64, level: FuzzyLevel) -> Self {
        Interval {
            lower,
            upper: None,
            upper_inclusive: false,
            crisp: level.as_f64(),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        if x < self.lower {
            return false;
        }
        match self.upper {
            None => true,
            Some(u) if self.upper_inclusive => x <= u,
            Some(u) => x < u,
        }
    }

    pub fn level(&self) -> Option<FuzzyLevel> {
        FuzzyLevel::from_number(self.crisp)
    }

    fn upper_or_inf(&self) -> f64 {
        self.upper.unwrap_or(f64::INFINITY)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            None => write!(f, "[{}, inf)", self.lower),
            Some(u) if self.upper_inclusive => write!(f, "[{}, {}]", self.lower, u),
            Some(u) => write!(f, "[{}, {})", self.lower, u),
        }
    }
}

/// The admissible range a table must cover without gaps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    pub lower: f64,
    #[serde(default)]
    pub upper: Option<f64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub upper_inclusive: bool,
}

impl Domain {
    pub fn half_open(lower: f64, upper: f64) -> Self {
        Domain {
            lower,
            upper: Some(upper),
            upper_inclusive: false,
        }
    }

    pub fn closed(lower: f64, upper: f64) -> Self {
        Domain {
            lower,
            upper: Some(upper),
            upper_inclusive: true,
        }
    }

    pub fn at_least(lower: f64) -> Self {
        Domain {
            lower,
            upper: None,
            upper_inclusive: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "issue", rename_all = "snake_case")]
pub enum TableIssue {
    /// Values in `[from, to)` (or the single point when `from == to`) map to nothing.
    Gap { from: f64, to: Option<f64> },
    /// Values in `[from, to)` are claimed by entries `first` and `second`.
    Overlap {
        first: usize,
        second: usize,
        from: f64,
        to: f64,
    },
    IllegalCrisp { entry: usize, value: f64 },
    EmptyInterval { entry: usize },
    NonFiniteBound { entry: usize },
    Unsorted { entry: usize },
    NoEntries,
}

impl fmt::Display for TableIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableIssue::Gap { from, to: Some(to) } if from == to => {
                write!(f, "gap: value {from} is not covered")
            }
            TableIssue::Gap { from, to: Some(to) } => write!(f, "gap: [{from}, {to}) is not covered"),
            TableIssue::Gap { from, to: None } => write!(f, "gap: [{from}, inf) is not covered"),
            TableIssue::Overlap {
                first,
                second,
                from,
                to,
            } => write!(
                f,
                "overlap: entries {first} and {second} both cover [{from}, {to})"
            ),
            TableIssue::IllegalCrisp { entry, value } => write!(
                f,
                "entry {entry}: crisp value {value} is not on the fuzzy scale (2, 4, 6, 8, 10)"
            ),
            TableIssue::EmptyInterval { entry } => write!(f, "entry {entry}: interval is empty"),
            TableIssue::NonFiniteBound { entry } => write!(f, "entry {entry}: bound is not finite"),
            TableIssue::Unsorted { entry } => {
                write!(f, "entry {entry}: not sorted by lower bound")
            }
            TableIssue::NoEntries => write!(f, "table has no entries"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConversionTable {
    /// Free-text unit of the raw values ("rupiah/month", "persons", ...).
    #[serde(default)]
    pub unit: String,
    /// Admissible domain; defaults to the span of the entries.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<Domain>,
    pub entries: Vec<Interval>,
}

/// Result of a table lookup that did not produce a crisp score.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LookupError {
    OutOfDomain,
    IllegalCrisp(f64),
}

impl ConversionTable {
    pub fn new(unit: impl Into<String>, domain: Option<Domain>, entries: Vec<Interval>) -> Self {
        ConversionTable {
            unit: unit.into(),
            domain,
            entries,
        }
    }

    /// The configured domain, or the span of the entries when none is set.
    pub fn effective_domain(&self) -> Option<Domain> {
        if let Some(d) = self.domain {
            return Some(d);
        }
        let lower = self.entries.iter().map(|e| e.lower).fold(f64::INFINITY, f64::min);
        if !lower.is_finite() {
            return None;
        }
        let top = self
            .entries
            .iter()
            .max_by(|a, b| a.upper_or_inf().total_cmp(&b.upper_or_inf()))?;
        Some(Domain {
            lower,
            upper: top.upper,
            upper_inclusive: top.upper.is_some()
                && self
                    .entries
                    .iter()
                    .any(|e| e.upper == top.upper && e.upper_inclusive),
        })
    }

    /// Crisp score of the first interval containing `raw`.
    pub fn lookup(&self, raw: f64) -> Result<FuzzyLevel, LookupError> {
        if !raw.is_finite() {
            return Err(LookupError::OutOfDomain);
        }
        let entry = self
            .entries
            .iter()
            .find(|e| e.contains(raw))
            .ok_or(LookupError::OutOfDomain)?;
        entry.level().ok_or(LookupError::IllegalCrisp(entry.crisp))
    }

    /// Validate against the table's own effective domain.
    pub fn validate(&self) -> Vec<TableIssue> {
        match self.effective_domain() {
            Some(domain) => self.validate_over(&domain),
            None => vec![TableIssue::NoEntries],
        }
    }

    /// Every gap, overlap and malformed entry over `domain`. Empty iff the
    /// table is a partition of `domain` onto legal crisp values.
    pub fn validate_over(&self, domain: &Domain) -> Vec<TableIssue> {
        let mut issues = Vec::new();
        if self.entries.is_empty() {
            issues.push(TableIssue::NoEntries);
            return issues;
        }

        let mut usable = Vec::with_capacity(self.entries.len());
        for (i, e) in self.entries.iter().enumerate() {
            if !e.lower.is_finite() || e.upper.is_some_and(|u| !u.is_finite()) {
                issues.push(TableIssue::NonFiniteBound { entry: i });
                continue;
            }
            if e.level().is_none() {
                issues.push(TableIssue::IllegalCrisp {
                    entry: i,
                    value: e.crisp,
                });
            }
            let empty = match e.upper {
                Some(u) if e.upper_inclusive => u < e.lower,
                Some(u) => u <= e.lower,
                None => false,
            };
            if empty {
                issues.push(TableIssue::EmptyInterval { entry: i });
                continue;
            }
            if i > 0 && e.lower < self.entries[i - 1].lower {
                issues.push(TableIssue::Unsorted { entry: i });
            }
            usable.push((i, e));
        }
        usable.sort_by(|a, b| a.1.lower.total_cmp(&b.1.lower).then(a.0.cmp(&b.0)));

        for (k, &(i, a)) in usable.iter().enumerate() {
            for &(j, b) in &usable[k + 1..] {
                // b.lower >= a.lower by sort order
                let a_end = a.upper_or_inf();
                let touches = b.lower < a_end || (b.lower == a_end && a.upper_inclusive);
                if touches {
                    let to = a_end.min(b.upper_or_inf());
                    issues.push(TableIssue::Overlap {
                        first: i.min(j),
                        second: i.max(j),
                        from: b.lower,
                        to,
                    });
                }
            }
        }

        // Sweep: every x < covered_to is covered; covered_to itself iff `point_covered`.
        let mut covered_to = domain.lower;
        let mut point_covered = false;
        for &(_, e) in &usable {
            let domain_end = domain.upper.unwrap_or(f64::INFINITY);
            if e.lower > covered_to && covered_to < domain_end {
                issues.push(TableIssue::Gap {
                    from: covered_to,
                    to: Some(e.lower.min(domain_end)),
                });
            }
            let end = e.upper_or_inf();
            if end > covered_to {
                covered_to = end;
                point_covered = e.upper_inclusive;
            } else if end == covered_to {
                point_covered |= e.upper_inclusive;
            }
        }
        match domain.upper {
            None if covered_to < f64::INFINITY => issues.push(TableIssue::Gap {
                from: covered_to,
                to: None,
            }),
            Some(u) if covered_to < u => issues.push(TableIssue::Gap {
                from: covered_to,
                to: Some(u),
            }),
            Some(u) if covered_to == u && domain.upper_inclusive && !point_covered => {
                issues.push(TableIssue::Gap {
                    from: u,
                    to: Some(u),
                })
            }
            _ => {}
        }
        issues
    }
}
