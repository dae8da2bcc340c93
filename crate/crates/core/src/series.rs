//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`Series`] knows its coefficients for `q^0 ..= q^order` and nothing
//! beyond. Binary operations return a series whose order is the minimum of
//! the operand orders, so a result never claims more precision than its
//! inputs had.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("linear combination of an empty term list")]
    EmptyCombination,
    #[error("constant term {0} is not a unit over the integers")]
    NonUnitConstant(BigInt),
    #[error("coefficient index {index} is beyond the known order {order}")]
    BeyondOrder { index: usize, order: usize },
    #[error("substitution q -> q^0 is not a power series substitution")]
    ZeroPower,
}

/// Outcome of comparing two series coefficient by coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    /// Coefficients agree for every index `0..=through`.
    Equal { through: usize },
    /// `index` is the smallest position where the coefficients differ.
    Mismatch {
        index: usize,
        lhs: BigInt,
        rhs: BigInt,
    },
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    // invariant: never empty; coeffs.len() == order + 1
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c * q^exponent`, truncated to `order` (zero if the exponent is past it).
    pub fn monomial(c: impl Into<BigInt>, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c.into();
        }
        s
    }

    /// Builds a series from explicit coefficients, padding with zeros or
    /// truncating so that the result has exactly the requested order.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>, order: usize) -> Self {
        let mut v: Vec<BigInt> = coeffs.into_iter().take(order + 1).map(Into::into).collect();
        v.resize(order + 1, BigInt::zero());
        Series { coeffs: v }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^n`, or an error if `n` exceeds the known order.
    pub fn coeff_at(&self, n: usize) -> Result<&BigInt, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::BeyondOrder {
            index: n,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops coefficients above `order`. Asking for a larger order is a no-op.
    pub fn truncate(&self, order: usize) -> Series {
        let order = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `q^k`; the order is unchanged, so the top `k` known
    /// coefficients fall off.
    pub fn shift(&self, k: usize) -> Series {
        let mut out = Series::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > self.order() {
                break;
            }
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    /// Coefficient-wise integer linear combination `sum c_i * s_i`.
    pub fn linear_combine<'a, I>(terms: I) -> Result<Series, SeriesError>
    where
        I: IntoIterator<Item = (BigInt, &'a Series)>,
    {
        let terms: Vec<(BigInt, &Series)> = terms.into_iter().collect();
        let order = terms
            .iter()
            .map(|(_, s)| s.order())
            .min()
            .ok_or(SeriesError::EmptyCombination)?;
        let mut out = Series::zero(order);
        for (c, s) in &terms {
            if c.is_zero() {
                continue;
            }
            for (acc, x) in out.coeffs.iter_mut().zip(&s.coeffs) {
                *acc += c * x;
            }
        }
        Ok(out)
    }

    /// Cauchy product, schoolbook.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut out = Series::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Series {
        let mut out = Series::one(self.order());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Multiplicative inverse; the constant term must be `+1` or `-1`.
    pub fn invert(&self) -> Result<Series, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(SeriesError::NonUnitConstant(c0.clone()));
        }
        let order = self.order();
        let mut inv = Series::zero(order);
        inv.coeffs[0] = c0.clone();
        // a0 * b_n = -sum_{k>=1} a_k b_{n-k}, and a0 = 1/a0 for units
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &inv.coeffs[n - k];
                }
            }
            inv.coeffs[n] = -(acc * c0);
        }
        Ok(inv)
    }

    /// `q -> q^k`.
    pub fn substitute_power(&self, k: usize) -> Result<Series, SeriesError> {
        if k == 0 {
            return Err(SeriesError::ZeroPower);
        }
        let order = self.order();
        let mut out = Series::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            let Some(pos) = i.checked_mul(k) else { break };
            if pos > order {
                break;
            }
            out.coeffs[pos] = c.clone();
        }
        Ok(out)
    }

    /// `q -> -q`.
    pub fn negate_variable(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Compares coefficients `0..=n`. Both series must know at least that far.
    pub fn equal_up_to(&self, other: &Series, n: usize) -> Result<Comparison, SeriesError> {
        let known = self.order().min(other.order());
        if n > known {
            return Err(SeriesError::BeyondOrder {
                index: n,
                order: known,
            });
        }
        for i in 0..=n {
            if self.coeffs[i] != other.coeffs[i] {
                return Ok(Comparison::Mismatch {
                    index: i,
                    lhs: self.coeffs[i].clone(),
                    rhs: other.coeffs[i].clone(),
                });
            }
        }
        Ok(Comparison::Equal { through: n })
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [BigInt] {
        &mut self.coeffs
    }

    /// In place `self *= (1 - c q^e)`.
    pub(crate) fn mul_binomial(&mut self, c: i64, e: usize) {
        if c == 0 {
            return;
        }
        let order = self.order();
        if e > order {
            return;
        }
        let c = BigInt::from(c);
        if e == 0 {
            let f = BigInt::one() - c;
            for x in &mut self.coeffs {
                *x *= &f;
            }
            return;
        }
        for n in (e..=order).rev() {
            let t = &self.coeffs[n - e] * &c;
            self.coeffs[n] -= t;
        }
    }

    /// In place `self /= (1 - s q^e)` for `s = +-1`, `e >= 1`.
    pub(crate) fn div_binomial(&mut self, s: i64, e: usize) {
        debug_assert!(e >= 1 && s.abs() == 1);
        let order = self.order();
        for n in e..=order {
            let t = &self.coeffs[n - e] * s;
            self.coeffs[n] += t;
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .take(order + 1)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .take(order + 1)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
