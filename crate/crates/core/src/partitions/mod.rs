//! Two-color partitions: declarative family rules, exhaustive enumeration,
//! weighted counts, and the generating-function templates they are checked
//! against.
//!
//! Parts come in two colors, blue and green. Within a partition parts are
//! listed by decreasing value, blue before green at equal value.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

mod classic;
mod enumerate;
mod family;
mod gf;

pub use classic::{count_ady, count_overpartitions, for_each_partition, is_square};
pub use enumerate::{
    brute_force_series, count_family, enumerate_family, for_each_member, statistics, FamilyStats,
    DEFAULT_ENUMERATION_BUDGET,
};
pub use family::{
    Anchor, AnchorColors, BlueMultiplicity, CellRule, Family, FamilyRules, FamilySpec, Parity,
    StatFilter, Weight,
};
pub use gf::FamilyGf;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("order {order} exceeds the enumeration budget {budget}")]
    OverBudget { order: usize, budget: usize },
    #[error("a zero part is only meaningful for partitions into distinct parts")]
    ZeroPartWithRepeats,
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("cannot parse colored part '{0}'")]
    BadPart(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Green,
    Blue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColoredPart {
    pub value: u32,
    pub color: Color,
}

impl ColoredPart {
    pub fn blue(value: u32) -> Self {
        ColoredPart {
            value,
            color: Color::Blue,
        }
    }

    pub fn green(value: u32) -> Self {
        ColoredPart {
            value,
            color: Color::Green,
        }
    }

    pub fn is_even(&self) -> bool {
        self.value.is_multiple_of(2)
    }

    // blue ranks above green at equal value
    fn rank(&self) -> (u32, Color) {
        (self.value, self.color)
    }
}

impl fmt::Display for ColoredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.color {
            Color::Blue => 'b',
            Color::Green => 'g',
        };
        write!(f, "{}{c}", self.value)
    }
}

impl FromStr for ColoredPart {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LabError::BadPart(s.to_string());
        let (digits, color) = match s.strip_suffix('b') {
            Some(d) => (d, Color::Blue),
            None => (s.strip_suffix('g').ok_or_else(bad)?, Color::Green),
        };
        let value: u32 = digits.parse().map_err(|_| bad())?;
        if value == 0 {
            return Err(bad());
        }
        Ok(ColoredPart { value, color })
    }
}

/// A multiset of colored parts in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoColorPartition {
    parts: Vec<ColoredPart>,
}

impl TwoColorPartition {
    pub fn new(mut parts: Vec<ColoredPart>) -> Self {
        parts.sort_by_key(|p| std::cmp::Reverse(p.rank()));
        TwoColorPartition { parts }
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().map(|p| p.value as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Listing order: descending lexicographic on the canonical part sequence.
    pub fn listing_cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = self.parts.iter().map(ColoredPart::rank);
        let b = other.parts.iter().map(ColoredPart::rank);
        b.cmp(a)
    }
}

/// Parts joined by `+`, e.g. `3b+1g`; the empty partition renders as `()`.
impl fmt::Display for TwoColorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for TwoColorPartition {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "()" {
            return Ok(TwoColorPartition::new(Vec::new()));
        }
        let parts = s
            .split('+')
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TwoColorPartition::new(parts))
    }
}
