use super::{Parameter, QError};
use crate::series::Series;

/// The basic hypergeometric series
/// `2phi1(a, b; c; q^k, z) = sum_n (a;q^k)_n (b;q^k)_n / ((q^k;q^k)_n (c;q^k)_n) z^n`
/// truncated to `order`.
///
/// `z` must be a signed monomial of positive degree so the sum terminates
/// modulo `q^(order+1)`; `c` may be zero but not `+-1`, since `(c;q^k)_n`
/// would then lose its unit constant term.
pub fn phi21(
    a: Parameter,
    b: Parameter,
    c: Parameter,
    k: u32,
    z: Parameter,
    order: usize,
) -> Result<Series, QError> {
    if k == 0 {
        return Err(QError::ZeroBase);
    }
    let (z_sign, z_exp) = match z {
        Parameter::Monomial { sign, exponent } if exponent >= 1 => (sign, exponent as usize),
        other => return Err(QError::BadArgument(other.to_string())),
    };
    if let Parameter::Monomial { exponent: 0, .. } = c {
        return Err(QError::NonUnitDenominator(format!("({c};q^{k})_n")));
    }

    let mut out = Series::one(order);
    let mut term = Series::one(order);
    let k = k as usize;
    // term_{n+1} = term_n * (1-a q^{kn})(1-b q^{kn}) z / ((1-q^{k(n+1)})(1-c q^{kn}))
    for n in 0..=(order / z_exp) {
        for p in [a, b] {
            if let Parameter::Monomial { sign, exponent } = p {
                term.mul_binomial(sign.value(), exponent as usize + k * n);
            }
        }
        term.div_binomial(1, k * (n + 1));
        if let Parameter::Monomial { sign, exponent } = c {
            term.div_binomial(sign.value(), exponent as usize + k * n);
        }
        term = term.shift(z_exp);
        if z_sign.value() < 0 {
            term = -&term;
        }
        if term.is_zero() {
            break;
        }
        out = &out + &term;
    }
    Ok(out)
}
