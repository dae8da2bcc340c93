//! Exhaustive enumeration of family members.
//!
//! For an anchored family the smallest value `s` is fixed first, then every
//! part type `(value, color)` from the largest value down to `s` receives a
//! multiplicity allowed by its cell rule. Multiplicities are tried from the
//! largest down, so for a fixed `s` members come out in listing order.

use num_bigint::BigInt;

use super::family::{Anchor, AnchorColors, BlueMultiplicity, FamilySpec, Parity, Weight};
use super::{Color, ColoredPart, LabError, TwoColorPartition};
use crate::series::Series;

pub const DEFAULT_ENUMERATION_BUDGET: usize = 30;

#[derive(Debug, Clone, Copy)]
struct Slot {
    value: u32,
    color: Color,
    min: u32,
    max: u32,
}

fn max_for(distinct: bool) -> u32 {
    if distinct {
        1
    } else {
        u32::MAX
    }
}

fn slots(spec: &FamilySpec, n: u32, smallest: Option<u32>) -> Vec<Slot> {
    let mut out = Vec::new();
    let lowest = smallest.unwrap_or(1);
    for value in (lowest..=n).rev() {
        for color in [Color::Blue, Color::Green] {
            let cell = spec.rules.cell(color, value);
            let slot = match (spec.anchor, smallest) {
                (Anchor::SmallestOdd { colors, blue }, Some(s)) if value == s => {
                    let extra = cell.allowed && cell.min_offset == 0;
                    let required = color == Color::Blue || colors == AnchorColors::Both;
                    let max = if color == Color::Blue && blue == BlueMultiplicity::ExactlyOne {
                        1
                    } else if extra {
                        max_for(cell.distinct)
                    } else if required {
                        1
                    } else {
                        0
                    };
                    Slot {
                        value,
                        color,
                        min: u32::from(required),
                        max,
                    }
                }
                (_, Some(s)) => {
                    if !cell.allowed || value < s + cell.min_offset {
                        continue;
                    }
                    Slot {
                        value,
                        color,
                        min: 0,
                        max: max_for(cell.distinct),
                    }
                }
                (_, None) => {
                    if !cell.allowed || value < cell.min_offset.max(1) {
                        continue;
                    }
                    Slot {
                        value,
                        color,
                        min: 0,
                        max: max_for(cell.distinct),
                    }
                }
            };
            if slot.max > 0 {
                out.push(slot);
            }
        }
    }
    out
}

fn walk<F: FnMut(&[ColoredPart])>(
    slots: &[Slot],
    remaining: u32,
    stack: &mut Vec<ColoredPart>,
    visit: &mut F,
) {
    let Some((slot, rest)) = slots.split_first() else {
        if remaining == 0 {
            visit(stack);
        }
        return;
    };
    let most = (remaining / slot.value).min(slot.max);
    if slot.min > most {
        return;
    }
    for m in (slot.min..=most).rev() {
        let base = stack.len();
        stack.extend(std::iter::repeat_n(
            ColoredPart {
                value: slot.value,
                color: slot.color,
            },
            m as usize,
        ));
        walk(rest, remaining - m * slot.value, stack, visit);
        stack.truncate(base);
    }
}

fn passes_filter(spec: &FamilySpec, parts: &[ColoredPart]) -> bool {
    let evens = parts.iter().filter(|p| p.is_even()).count();
    spec.filter
        .even_parts
        .is_none_or(|p| p == Parity::of(evens))
        && spec
            .filter
            .num_parts
            .is_none_or(|p| p == Parity::of(parts.len()))
}

fn weight_of(weight: Weight, parts: &[ColoredPart]) -> i64 {
    let k = match weight {
        Weight::None => 0,
        Weight::EvenParts => parts.iter().filter(|p| p.is_even()).count(),
        Weight::EvenBlueParts => parts
            .iter()
            .filter(|p| p.is_even() && p.color == Color::Blue)
            .count(),
    };
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Calls `visit` once per member of the family of total `n` (statistic
/// filter applied), with parts in canonical order.
pub fn for_each_member<F: FnMut(&[ColoredPart])>(spec: &FamilySpec, n: u32, mut visit: F) {
    let mut stack = Vec::new();
    let mut filtered = |parts: &[ColoredPart]| {
        if passes_filter(spec, parts) {
            visit(parts)
        }
    };
    match spec.anchor {
        Anchor::None => walk(&slots(spec, n, None), n, &mut stack, &mut filtered),
        Anchor::SmallestOdd { .. } => {
            for s in (1..=n).step_by(2) {
                walk(&slots(spec, n, Some(s)), n, &mut stack, &mut filtered);
            }
        }
    }
}

/// All members of total `n`, in listing order.
pub fn enumerate_family(spec: &FamilySpec, n: u32) -> Vec<TwoColorPartition> {
    let mut out = Vec::new();
    for_each_member(spec, n, |parts| {
        out.push(TwoColorPartition::new(parts.to_vec()))
    });
    out.sort_by(|a, b| a.listing_cmp(b));
    out
}

/// Number of members of total `n`, each counted with its weight when
/// `weighted`.
pub fn count_family(spec: &FamilySpec, n: u32, weighted: bool) -> i64 {
    let mut total = 0i64;
    for_each_member(spec, n, |parts| {
        total += if weighted {
            weight_of(spec.weight, parts)
        } else {
            1
        };
    });
    total
}

/// Series whose `q^n` coefficient is `count_family(spec, n, weighted)`.
pub fn brute_force_series(
    spec: &FamilySpec,
    order: usize,
    weighted: bool,
    budget: usize,
) -> Result<Series, LabError> {
    if order > budget {
        return Err(LabError::OverBudget { order, budget });
    }
    let coeffs: Vec<BigInt> = (0..=order)
        .map(|n| BigInt::from(count_family(spec, n as u32, weighted)))
        .collect();
    Ok(Series::from_coeffs(coeffs, order))
}

/// Counts split by the parity of the number of even parts (`_0`, `_1`) and of
/// the number of parts (`_2`, `_3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FamilyStats {
    pub total: i64,
    pub weighted: i64,
    pub even_evens: i64,
    pub odd_evens: i64,
    pub even_length: i64,
    pub odd_length: i64,
}

pub fn statistics(spec: &FamilySpec, n: u32) -> FamilyStats {
    let mut st = FamilyStats::default();
    for_each_member(spec, n, |parts| {
        st.total += 1;
        st.weighted += weight_of(spec.weight, parts);
        let evens = parts.iter().filter(|p| p.is_even()).count();
        match Parity::of(evens) {
            Parity::Even => st.even_evens += 1,
            Parity::Odd => st.odd_evens += 1,
        }
        match Parity::of(parts.len()) {
            Parity::Even => st.even_length += 1,
            Parity::Odd => st.odd_length += 1,
        }
    });
    st
}
