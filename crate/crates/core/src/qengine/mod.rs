//! q-Pochhammer products, rational-function expansion, sums over the
//! smallest part, and the basic hypergeometric series `2phi1`.
//!
//! Every product argument is a signed monomial `+-q^e` or zero; nothing here
//! ever produces a negative power of `q`.

use std::fmt;

use thiserror::Error;

use crate::series::SeriesError;

mod phi21;
mod poch;
mod rational;
mod template;

pub use phi21::phi21;
pub use poch::{poch_finite, poch_infinite};
pub use rational::{rational_series, DenominatorFactor, RationalFunction};
pub use template::{
    sum_over_smallest, Affine, Length, PochFactor, Position, ProductTemplate, TermTemplate,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("(1;q)_inf vanishes identically")]
    VanishingProduct,
    #[error("base exponent of a q-product must be positive")]
    ZeroBase,
    #[error("denominator factor {0} does not have a unit constant term")]
    NonUnitDenominator(String),
    #[error("prefix exponent must be strictly increasing in n")]
    PrefixNotIncreasing,
    #[error("argument {0} must be a signed monomial of positive degree")]
    BadArgument(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// A q-product argument: zero, or `sign * q^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parameter {
    Zero,
    Monomial { sign: Sign, exponent: u32 },
}

impl Parameter {
    /// `q^e`
    pub fn q(exponent: u32) -> Self {
        Parameter::Monomial {
            sign: Sign::Plus,
            exponent,
        }
    }

    /// `-q^e`
    pub fn neg_q(exponent: u32) -> Self {
        Parameter::Monomial {
            sign: Sign::Minus,
            exponent,
        }
    }

    pub fn times_q(self, k: u32) -> Self {
        match self {
            Parameter::Zero => Parameter::Zero,
            Parameter::Monomial { sign, exponent } => Parameter::Monomial {
                sign,
                exponent: exponent + k,
            },
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Parameter::Zero)
    }

    /// Product of two parameters.
    pub fn times(self, other: Parameter) -> Parameter {
        match (self, other) {
            (
                Parameter::Monomial {
                    sign: s1,
                    exponent: e1,
                },
                Parameter::Monomial {
                    sign: s2,
                    exponent: e2,
                },
            ) => Parameter::Monomial {
                sign: s1.times(s2),
                exponent: e1 + e2,
            },
            _ => Parameter::Zero,
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Parameter::Zero => write!(f, "0"),
            Parameter::Monomial { sign, exponent } => {
                if sign == Sign::Minus {
                    write!(f, "-")?;
                }
                match exponent {
                    0 => write!(f, "1"),
                    1 => write!(f, "q"),
                    e => write!(f, "q^{e}"),
                }
            }
        }
    }
}
