use std::fmt;

use super::{QError, Sign};
use crate::series::Series;

/// `(1 - sign * q^exponent)^multiplicity`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DenominatorFactor {
    pub sign: Sign,
    pub exponent: u32,
    pub multiplicity: u32,
}

impl DenominatorFactor {
    /// `(1 - q^e)^m`
    pub fn minus(exponent: u32, multiplicity: u32) -> Self {
        DenominatorFactor {
            sign: Sign::Plus,
            exponent,
            multiplicity,
        }
    }

    /// `(1 + q^e)^m`
    pub fn plus(exponent: u32, multiplicity: u32) -> Self {
        DenominatorFactor {
            sign: Sign::Minus,
            exponent,
            multiplicity,
        }
    }
}

impl fmt::Display for DenominatorFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.sign == Sign::Plus { '-' } else { '+' };
        match self.exponent {
            1 => write!(f, "(1{op}q)")?,
            e => write!(f, "(1{op}q^{e})")?,
        }
        if self.multiplicity != 1 {
            write!(f, "^{}", self.multiplicity)?;
        }
        Ok(())
    }
}

/// An integer polynomial over a product of cyclotomic-style binomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    /// `numerator[i]` is the coefficient of `q^i`.
    pub numerator: Vec<i64>,
    pub denominator: Vec<DenominatorFactor>,
}

impl RationalFunction {
    pub fn new(numerator: Vec<i64>, denominator: Vec<DenominatorFactor>) -> Self {
        RationalFunction {
            numerator,
            denominator,
        }
    }

    pub fn expand(&self, order: usize) -> Result<Series, QError> {
        rational_series(&self.numerator, &self.denominator, order)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = Series::from_coeffs(
            self.numerator.iter().copied(),
            self.numerator.len().saturating_sub(1),
        );
        let text = num.to_string();
        let text = text.rsplit_once(" + O(").map_or(text.as_str(), |(p, _)| p);
        write!(f, "({text})")?;
        if !self.denominator.is_empty() {
            write!(f, "/(")?;
            for d in &self.denominator {
                write!(f, "{d}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Expands `numerator / prod (1 - s_i q^{e_i})^{m_i}` to `order`.
pub fn rational_series(
    numerator: &[i64],
    denominator: &[DenominatorFactor],
    order: usize,
) -> Result<Series, QError> {
    let mut out = Series::from_coeffs(numerator.iter().copied(), order);
    for d in denominator {
        if d.exponent == 0 {
            return Err(QError::NonUnitDenominator(d.to_string()));
        }
        for _ in 0..d.multiplicity {
            out.div_binomial(d.sign.value(), d.exponent as usize);
        }
    }
    Ok(out)
}
