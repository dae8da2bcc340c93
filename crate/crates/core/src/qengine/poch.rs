use super::{Parameter, QError, Sign};
use crate::series::Series;

/// `(a; q^k)_m = prod_{j<m} (1 - a q^{kj})`, truncated to `order`.
pub fn poch_finite(a: Parameter, k: u32, m: u32, order: usize) -> Series {
    let mut out = Series::one(order);
    if let Parameter::Monomial { sign, exponent } = a {
        for j in 0..m {
            let e = exponent as usize + (k as usize) * (j as usize);
            if e > order {
                // with k = 0 every later factor has the same exponent
                break;
            }
            out.mul_binomial(sign.value(), e);
        }
    }
    out
}

/// `(a; q^k)_inf`, truncated to `order`.
///
/// Factors `(1 -+ q^e)` with `e > order` are 1 modulo `q^(order+1)`, so the
/// product stops at the first such factor. `(1; q^k)_inf` is rejected since
/// it vanishes; `(-1; q^k)_inf` is allowed and carries the constant 2.
pub fn poch_infinite(a: Parameter, k: u32, order: usize) -> Result<Series, QError> {
    if k == 0 {
        return Err(QError::ZeroBase);
    }
    let Parameter::Monomial { sign, exponent } = a else {
        return Ok(Series::one(order));
    };
    if exponent == 0 && sign == Sign::Plus {
        return Err(QError::VanishingProduct);
    }
    let mut out = Series::one(order);
    let mut e = exponent as usize;
    while e <= order {
        out.mul_binomial(sign.value(), e);
        e += k as usize;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(x: &Series) -> Vec<i64> {
        x.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn finite_examples() {
        assert_eq!(
            ints(&poch_finite(Parameter::neg_q(2), 2, 1, 3)),
            vec![1, 0, 1, 0]
        );
        assert_eq!(
            ints(&poch_finite(Parameter::q(1), 2, 2, 5)),
            vec![1, -1, 0, -1, 1, 0]
        );
        for a in [Parameter::Zero, Parameter::q(0), Parameter::neg_q(3)] {
            assert_eq!(poch_finite(a, 2, 0, 4), Series::one(4));
        }
        // (1;q)_2 = 0, (-1;q)_1 = 2
        assert!(poch_finite(Parameter::q(0), 1, 2, 4).is_zero());
        assert_eq!(
            ints(&poch_finite(Parameter::neg_q(0), 1, 1, 2)),
            vec![2, 0, 0]
        );
    }

    #[test]
    fn infinite_euler_pentagonal_prefix() {
        // oracle: (1-q)(1-q^2)(1-q^3)(1-q^4)(1-q^5) multiplied out by hand
        let mut direct = Series::one(5);
        for e in 1..=5 {
            direct = &direct * &(&Series::one(5) - &Series::monomial(1, e, 5));
        }
        let p = poch_infinite(Parameter::q(1), 1, 5).unwrap();
        assert_eq!(p, direct);
        assert_eq!(ints(&p), vec![1, -1, -1, 0, 0, 1]);
    }

    #[test]
    fn infinite_theta_product() {
        let n = 9;
        let a = poch_infinite(Parameter::q(2), 2, n).unwrap();
        let b = poch_infinite(Parameter::neg_q(1), 2, n).unwrap();
        let t = &a * &(&b * &b);
        assert_eq!(ints(&t), vec![1, 2, 0, 0, 2, 0, 0, 0, 0, 2]);
    }

    #[test]
    fn infinite_edge_cases() {
        assert_eq!(
            poch_infinite(Parameter::Zero, 1, 3).unwrap(),
            Series::one(3)
        );
        assert_eq!(
            poch_infinite(Parameter::q(0), 2, 3),
            Err(QError::VanishingProduct)
        );
        assert_eq!(poch_infinite(Parameter::q(1), 0, 3), Err(QError::ZeroBase));
        // (-1;q^2)_inf = 2 (-q^2;q^2)_inf
        let lhs = poch_infinite(Parameter::neg_q(0), 2, 8).unwrap();
        let rhs = poch_infinite(Parameter::neg_q(2), 2, 8)
            .unwrap()
            .scale(&2.into());
        assert_eq!(lhs, rhs);
    }
}
