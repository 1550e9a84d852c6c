//! The five-level fuzzy rating scale used by every conversion table.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A linguistic rating level and its crisp value.
///
/// The mapping is fixed: SR=2, R=4, CT=6, T=8, ST=10. Serialized as the
/// crisp integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FuzzyLevel {
    /// Sangat Rendah.
    VeryLow,
    /// Rendah.
    Low,
    /// Cukup Tinggi.
    FairlyHigh,
    /// Tinggi.
    High,
    /// Sangat Tinggi.
    VeryHigh,
}

impl FuzzyLevel {
    pub const ALL: [FuzzyLevel; 5] = [
        FuzzyLevel::VeryLow,
        FuzzyLevel::Low,
        FuzzyLevel::FairlyHigh,
        FuzzyLevel::High,
        FuzzyLevel::VeryHigh,
    ];

    pub const fn crisp(self) -> u8 {
        match self {
            FuzzyLevel::VeryLow => 2,
            FuzzyLevel::Low => 4,
            FuzzyLevel::FairlyHigh => 6,
            FuzzyLevel::High => 8,
            FuzzyLevel::VeryHigh => 10,
        }
    }

    pub const fn from_crisp(value: u8) -> Option<FuzzyLevel> {
        match value {
            2 => Some(FuzzyLevel::VeryLow),
            4 => Some(FuzzyLevel::Low),
            6 => Some(FuzzyLevel::FairlyHigh),
            8 => Some(FuzzyLevel::High),
            10 => Some(FuzzyLevel::VeryHigh),
            _ => None,
        }
    }

    /// Accepts a JSON-ish number; only exact integers 2, 4, 6, 8, 10 qualify.
    pub fn from_number(value: f64) -> Option<FuzzyLevel> {
        if value.fract() != 0.0 || !(0.0..=255.0).contains(&value) {
            return None;
        }
        Self::from_crisp(value as u8)
    }

    /// Indonesian abbreviation (SR, R, CT, T, ST).
    pub const fn code(self) -> &'static str {
        match self {
            FuzzyLevel::VeryLow => "SR",
            FuzzyLevel::Low => "R",
            FuzzyLevel::FairlyHigh => "CT",
            FuzzyLevel::High => "T",
            FuzzyLevel::VeryHigh => "ST",
        }
    }

    pub fn from_code(code: &str) -> Option<FuzzyLevel> {
        Self::ALL.into_iter().find(|l| l.code().eq_ignore_ascii_case(code))
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.crisp())
    }
}

impl fmt::Display for FuzzyLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.code(), self.crisp())
    }
}

impl Serialize for FuzzyLevel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.crisp())
    }
}

impl<'de> Deserialize<'de> for FuzzyLevel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = u8::deserialize(deserializer)?;
        FuzzyLevel::from_crisp(raw).ok_or_else(|| {
            serde::de::Error::custom(format!("{raw} is not a fuzzy crisp value (2, 4, 6, 8, 10)"))
        })
    }
}
