use std::fmt;
use std::str::FromStr;

use super::{Color, LabError};

/// Constraint on one (color, parity) class of parts.
///
/// `min_offset` is relative to the smallest part `s` for anchored families
/// (parts of this class must be `>= s + min_offset`) and an absolute lower
/// bound otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellRule {
    pub allowed: bool,
    pub distinct: bool,
    pub min_offset: u32,
}

impl CellRule {
    pub const FORBIDDEN: CellRule = CellRule {
        allowed: false,
        distinct: false,
        min_offset: 0,
    };
    pub const ANY: CellRule = CellRule {
        allowed: true,
        distinct: false,
        min_offset: 0,
    };
    pub const DISTINCT: CellRule = CellRule {
        allowed: true,
        distinct: true,
        min_offset: 0,
    };

    pub const fn distinct_from(min_offset: u32) -> CellRule {
        CellRule {
            allowed: true,
            distinct: true,
            min_offset,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyRules {
    pub blue_odd: CellRule,
    pub blue_even: CellRule,
    pub green_odd: CellRule,
    pub green_even: CellRule,
}

impl FamilyRules {
    pub fn cell(&self, color: Color, value: u32) -> CellRule {
        match (color, value.is_multiple_of(2)) {
            (Color::Blue, false) => self.blue_odd,
            (Color::Blue, true) => self.blue_even,
            (Color::Green, false) => self.green_odd,
            (Color::Green, true) => self.green_even,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnchorColors {
    Blue,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlueMultiplicity {
    AtLeastOne,
    /// a single blue copy of the smallest part; further blue parts follow the
    /// blue cell rules above it
    ExactlyOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Anchor {
    None,
    /// The smallest value `s` is odd and appears in the required colors.
    SmallestOdd {
        colors: AnchorColors,
        blue: BlueMultiplicity,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    None,
    /// `(-1)^{number of even parts}`
    EvenParts,
    /// `(-1)^{number of even blue parts}`
    EvenBlueParts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct StatFilter {
    pub even_parts: Option<Parity>,
    pub num_parts: Option<Parity>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub anchor: Anchor,
    pub rules: FamilyRules,
    pub weight: Weight,
    pub filter: StatFilter,
}

impl FamilySpec {
    pub fn with_filter(self, filter: StatFilter) -> FamilySpec {
        FamilySpec { filter, ..self }
    }
}

/// The eight named families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// distinct parts, even parts blue only
    E,
    /// even parts blue only
    F,
    /// even parts blue and distinct; smallest part odd and blue
    Tomega,
    /// as `Tomega` with distinct blue odd parts
    Tpsi,
    /// odd parts blue; even parts distinct in each color; smallest part odd
    Tnu,
    /// smallest part odd, at least once in blue, at least 3 below the even
    /// blue parts; even parts distinct within each color
    A,
    /// smallest part odd and blue, 2 below the other blue odd parts and 4
    /// below the even blue parts; even parts distinct within each color
    B,
    /// smallest part odd, in both colors, 5 below the even blue parts; even
    /// parts distinct within each color
    C,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::E,
        Family::F,
        Family::Tomega,
        Family::Tpsi,
        Family::Tnu,
        Family::A,
        Family::B,
        Family::C,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::E => "E",
            Family::F => "F",
            Family::Tomega => "Tomega",
            Family::Tpsi => "Tpsi",
            Family::Tnu => "Tnu",
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
        }
    }

    pub fn spec(self) -> FamilySpec {
        use CellRule as R;
        let smallest_blue = Anchor::SmallestOdd {
            colors: AnchorColors::Blue,
            blue: BlueMultiplicity::AtLeastOne,
        };
        let (anchor, rules, weight) = match self {
            Family::E => (
                Anchor::None,
                FamilyRules {
                    blue_odd: R::DISTINCT,
                    blue_even: R::DISTINCT,
                    green_odd: R::DISTINCT,
                    green_even: R::FORBIDDEN,
                },
                Weight::EvenParts,
            ),
            Family::F => (
                Anchor::None,
                FamilyRules {
                    blue_odd: R::ANY,
                    blue_even: R::ANY,
                    green_odd: R::ANY,
                    green_even: R::FORBIDDEN,
                },
                Weight::EvenParts,
            ),
            Family::Tomega => (
                smallest_blue,
                FamilyRules {
                    blue_odd: R::ANY,
                    blue_even: R::distinct_from(1),
                    green_odd: R::ANY,
                    green_even: R::FORBIDDEN,
                },
                Weight::EvenParts,
            ),
            Family::Tpsi => (
                smallest_blue,
                FamilyRules {
                    blue_odd: R::DISTINCT,
                    blue_even: R::distinct_from(1),
                    green_odd: R::ANY,
                    green_even: R::FORBIDDEN,
                },
                Weight::EvenParts,
            ),
            Family::Tnu => (
                smallest_blue,
                FamilyRules {
                    blue_odd: R::ANY,
                    blue_even: R::distinct_from(1),
                    green_odd: R::FORBIDDEN,
                    green_even: R::distinct_from(1),
                },
                Weight::EvenBlueParts,
            ),
            Family::A => (
                smallest_blue,
                FamilyRules {
                    blue_odd: R::ANY,
                    blue_even: R::distinct_from(3),
                    green_odd: R::ANY,
                    green_even: R::distinct_from(1),
                },
                Weight::EvenParts,
            ),
            // even blue parts at least s+4, i.e. s+5 since s is odd
            Family::B => (
                Anchor::SmallestOdd {
                    colors: AnchorColors::Blue,
                    blue: BlueMultiplicity::ExactlyOne,
                },
                FamilyRules {
                    blue_odd: R::ANY,
                    blue_even: R::distinct_from(5),
                    green_odd: R::ANY,
                    green_even: R::distinct_from(1),
                },
                Weight::EvenParts,
            ),
            Family::C => (
                Anchor::SmallestOdd {
                    colors: AnchorColors::Both,
                    blue: BlueMultiplicity::AtLeastOne,
                },
                FamilyRules {
                    blue_odd: R::ANY,
                    blue_even: R::distinct_from(5),
                    green_odd: R::ANY,
                    green_even: R::distinct_from(1),
                },
                Weight::EvenParts,
            ),
        };
        FamilySpec {
            anchor,
            rules,
            weight,
            filter: StatFilter::default(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| LabError::UnknownFamily(s.to_string()))
    }
}
