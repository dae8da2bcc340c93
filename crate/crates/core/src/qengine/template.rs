//! Symbolic summands of "sum over the smallest part" generating functions.

use std::fmt;

use super::{QError, Sign};
use crate::series::Series;

/// `slope * n + intercept`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Affine {
    pub slope: u32,
    pub intercept: u32,
}

impl Affine {
    pub const fn new(slope: u32, intercept: u32) -> Self {
        Affine { slope, intercept }
    }

    pub const fn constant(c: u32) -> Self {
        Affine {
            slope: 0,
            intercept: c,
        }
    }

    pub fn at(self, n: usize) -> usize {
        self.slope as usize * n + self.intercept as usize
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.slope, self.intercept) {
            (0, c) => write!(f, "{c}"),
            (1, 0) => write!(f, "n"),
            (s, 0) => write!(f, "{s}n"),
            (1, c) => write!(f, "n+{c}"),
            (s, c) => write!(f, "{s}n+{c}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Length {
    /// the outer summation index `n`
    N,
    /// `n + 1`
    NPlusOne,
    Fixed(u32),
    Infinite,
}

impl Length {
    fn at(self, n: usize) -> Option<usize> {
        match self {
            Length::N => Some(n),
            Length::NPlusOne => Some(n + 1),
            Length::Fixed(m) => Some(m as usize),
            Length::Infinite => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Position {
    Numerator,
    Denominator,
}

/// `(sign * q^{exponent(n)}; q^base)_{length}` in the numerator or denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PochFactor {
    pub exponent: Affine,
    pub sign: Sign,
    pub base: u32,
    pub length: Length,
    pub position: Position,
}

impl PochFactor {
    pub fn numerator(sign: Sign, exponent: Affine, base: u32, length: Length) -> Self {
        PochFactor {
            exponent,
            sign,
            base,
            length,
            position: Position::Numerator,
        }
    }

    pub fn denominator(sign: Sign, exponent: Affine, base: u32, length: Length) -> Self {
        PochFactor {
            exponent,
            sign,
            base,
            length,
            position: Position::Denominator,
        }
    }

    /// The smallest exponent this factor ever contributes, if any.
    fn lowest_exponent(&self) -> Option<usize> {
        // the first non-empty instance is at n = 0, or n = 1 for length n
        let n = match self.length {
            Length::N => 1,
            Length::Fixed(0) => return None,
            _ => 0,
        };
        Some(self.exponent.at(n))
    }

    /// Multiplies (or divides) `acc` by this factor at summation index `n`.
    fn apply(&self, n: usize, acc: &mut Series) {
        let order = acc.order();
        let start = self.exponent.at(n);
        let step = self.base as usize;
        let count = self.length.at(n);
        let mut j = 0usize;
        loop {
            if count.is_some_and(|c| j >= c) {
                break;
            }
            let e = start + step * j;
            if e > order {
                break;
            }
            match self.position {
                Position::Numerator => acc.mul_binomial(self.sign.value(), e),
                Position::Denominator => acc.div_binomial(self.sign.value(), e),
            }
            j += 1;
            if step == 0 && count.is_none() {
                break;
            }
        }
    }
}

impl fmt::Display for PochFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign == Sign::Minus { "-" } else { "" };
        let base = match self.base {
            1 => "q".to_string(),
            b => format!("q^{b}"),
        };
        let arg = match self.exponent {
            Affine {
                slope: 0,
                intercept: 0,
            } => format!("{sign}1"),
            Affine {
                slope: 0,
                intercept: 1,
            } => format!("{sign}q"),
            Affine {
                slope: 0,
                intercept: c,
            } => format!("{sign}q^{c}"),
            e => format!("{sign}q^({e})"),
        };
        let len = match self.length {
            Length::N => "n".to_string(),
            Length::NPlusOne => "(n+1)".to_string(),
            Length::Fixed(m) => m.to_string(),
            Length::Infinite => "inf".to_string(),
        };
        write!(f, "({arg};{base})_{len}")
    }
}

fn check_denominators(factors: &[PochFactor]) -> Result<(), QError> {
    for f in factors {
        if f.base == 0 && f.length == Length::Infinite {
            return Err(QError::ZeroBase);
        }
        if f.position == Position::Denominator && f.lowest_exponent() == Some(0) {
            return Err(QError::NonUnitDenominator(f.to_string()));
        }
    }
    Ok(())
}

fn write_factors(f: &mut fmt::Formatter<'_>, factors: &[PochFactor]) -> fmt::Result {
    let num: Vec<_> = factors
        .iter()
        .filter(|p| p.position == Position::Numerator)
        .collect();
    let den: Vec<_> = factors
        .iter()
        .filter(|p| p.position == Position::Denominator)
        .collect();
    for p in &num {
        write!(f, " {p}")?;
    }
    if !den.is_empty() {
        write!(f, " / [")?;
        for (i, p) in den.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")?;
    }
    Ok(())
}

/// One summand `(+-1)^n q^{prefix(n)} * prod(numerator) / prod(denominator)`
/// of a series summed over `n >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermTemplate {
    prefix: Affine,
    alternating: bool,
    factors: Vec<PochFactor>,
}

impl TermTemplate {
    pub fn new(
        prefix: Affine,
        alternating: bool,
        factors: Vec<PochFactor>,
    ) -> Result<Self, QError> {
        if prefix.slope == 0 {
            return Err(QError::PrefixNotIncreasing);
        }
        check_denominators(&factors)?;
        Ok(TermTemplate {
            prefix,
            alternating,
            factors,
        })
    }

    pub fn prefix(&self) -> Affine {
        self.prefix
    }

    pub fn alternating(&self) -> bool {
        self.alternating
    }

    pub fn factors(&self) -> &[PochFactor] {
        &self.factors
    }
}

impl fmt::Display for TermTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sum_{{n>=0}}")?;
        if self.alternating {
            write!(f, " (-1)^n")?;
        }
        write!(f, " q^({})", self.prefix)?;
        write_factors(f, &self.factors)
    }
}

/// Evaluates `sum_{n>=0} term(n)` to `order`. Summation stops at the first
/// `n` whose prefix exponent exceeds the order.
pub fn sum_over_smallest(t: &TermTemplate, order: usize) -> Result<Series, QError> {
    if t.prefix.slope == 0 {
        return Err(QError::PrefixNotIncreasing);
    }
    let mut out = Series::zero(order);
    for n in 0.. {
        let p = t.prefix.at(n);
        if p > order {
            break;
        }
        // the term only matters through q^(order - p) before the shift
        let mut term = Series::one(order - p);
        for f in &t.factors {
            f.apply(n, &mut term);
        }
        let negative = t.alternating && n % 2 == 1;
        let acc = out.coeffs_mut();
        for (i, c) in term.into_coeffs().into_iter().enumerate() {
            let slot = &mut acc[p + i];
            if negative {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
    }
    Ok(out)
}

/// A plain product of q-Pochhammer factors (no outer summation).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductTemplate {
    factors: Vec<PochFactor>,
}

impl ProductTemplate {
    pub fn new(factors: Vec<PochFactor>) -> Result<Self, QError> {
        check_denominators(&factors)?;
        Ok(ProductTemplate { factors })
    }

    pub fn factors(&self) -> &[PochFactor] {
        &self.factors
    }

    pub fn expand(&self, order: usize) -> Series {
        let mut out = Series::one(order);
        for f in &self.factors {
            f.apply(0, &mut out);
        }
        out
    }
}

impl fmt::Display for ProductTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1")?;
        write_factors(f, &self.factors)
    }
}
