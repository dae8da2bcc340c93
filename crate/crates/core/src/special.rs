//! Third-order mock theta functions `omega`, `psi`, `nu` in their several
//! classical series forms, and the theta series `sum q^{n^2}`.
//!
//! Each form is summed independently so that the forms can be checked
//! against one another.
//!
//! | function | defining                              | Fine                         | smallest-part (ADY)                                   |
//! |----------|---------------------------------------|------------------------------|-------------------------------------------------------|
//! | omega    | `sum q^{2n^2+2n} / (q;q^2)_{n+1}^2`   | `sum q^n / (q;q^2)_{n+1}`    | `sum_{n>=1} q^n / ((1-q^n)(q^{n+1};q)_n (q^{2n+2};q^2)_inf)` = `q omega(q)` |
//! | psi      | `sum_{n>=1} q^{n^2} / (q;q^2)_n`      | `sum (-q^2;q^2)_n q^{n+1}`   | none                                                  |
//! | nu       | `sum q^{n^2+n} / (-q;q^2)_{n+1}`      | `sum (-q)^n (q;q^2)_n`       | `sum q^n (-q^{n+1};q)_n (-q^{2n+2};q^2)_inf` = `nu(-q)` |

use std::fmt;

use thiserror::Error;

use crate::qengine::{sum_over_smallest, Affine, Length, PochFactor, QError, Sign, TermTemplate};
use crate::series::Series;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MockTheta {
    Omega,
    Psi,
    Nu,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    Defining,
    Fine,
    Ady,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Argument {
    /// `f(q)`
    Q,
    /// `f(-q)`
    NegQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MockThetaForm {
    pub function: MockTheta,
    pub form: Form,
    pub argument: Argument,
}

impl MockThetaForm {
    pub fn new(function: MockTheta, form: Form, argument: Argument) -> Self {
        MockThetaForm {
            function,
            form,
            argument,
        }
    }
}

impl fmt::Display for MockThetaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.function {
            MockTheta::Omega => "omega",
            MockTheta::Psi => "psi",
            MockTheta::Nu => "nu",
        };
        let form = match self.form {
            Form::Defining => "defining",
            Form::Fine => "fine",
            Form::Ady => "ady",
        };
        let arg = match self.argument {
            Argument::Q => "q",
            Argument::NegQ => "-q",
        };
        if self.form == Form::Ady && self.function == MockTheta::Omega {
            return write!(f, "q*{name}({arg})[{form}]");
        }
        write!(f, "{name}({arg})[{form}]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecialError {
    #[error("no {0} form is available")]
    Unsupported(MockThetaForm),
    #[error(transparent)]
    Q(#[from] QError),
}

/// `sum_{n>=0} q^{n+1} / ((q^{n+1};q)_1 (q^{n+2};q)_{n+1} (q^{2n+4};q^2)_inf)`,
/// the smallest-part series equal to `q omega(q)`.
pub fn ady_omega_template() -> TermTemplate {
    TermTemplate::new(
        Affine::new(1, 1),
        false,
        vec![
            PochFactor::denominator(Sign::Plus, Affine::new(1, 1), 1, Length::Fixed(1)),
            PochFactor::denominator(Sign::Plus, Affine::new(1, 2), 1, Length::NPlusOne),
            PochFactor::denominator(Sign::Plus, Affine::new(2, 4), 2, Length::Infinite),
        ],
    )
    .expect("valid template")
}

/// `sum_{n>=0} q^n (-q^{n+1};q)_n (-q^{2n+2};q^2)_inf`, equal to `nu(-q)`.
pub fn ady_nu_template() -> TermTemplate {
    TermTemplate::new(
        Affine::new(1, 0),
        false,
        vec![
            PochFactor::numerator(Sign::Minus, Affine::new(1, 1), 1, Length::N),
            PochFactor::numerator(Sign::Minus, Affine::new(2, 2), 2, Length::Infinite),
        ],
    )
    .expect("valid template")
}

pub fn mock_theta(spec: MockThetaForm, order: usize) -> Result<Series, SpecialError> {
    use Argument::*;
    use Form::*;
    use MockTheta::*;

    let s = match (spec.function, spec.form, spec.argument) {
        (Omega, Ady, Q) => sum_over_smallest(&ady_omega_template(), order)?,
        (Nu, Ady, NegQ) => sum_over_smallest(&ady_nu_template(), order)?,
        (_, Ady, _) => return Err(SpecialError::Unsupported(spec)),
        (Nu, Defining, NegQ) => nu_defining(order, true),
        (f, form, arg) => {
            let base = match (f, form) {
                (Omega, Defining) => omega_defining(order),
                (Omega, Fine) => omega_fine(order),
                (Psi, Defining) => psi_defining(order),
                (Psi, Fine) => psi_fine(order),
                (Nu, Defining) => nu_defining(order, false),
                (Nu, Fine) => nu_fine(order),
                (_, Ady) => unreachable!(),
            };
            match arg {
                Q => base,
                NegQ => base.negate_variable(),
            }
        }
    };
    Ok(s)
}

fn add_shifted(acc: &mut Series, term: &Series, shift: usize, negative: bool) {
    let t = term.shift(shift);
    *acc = if negative { &*acc - &t } else { &*acc + &t };
}

fn omega_defining(order: usize) -> Series {
    let mut out = Series::zero(order);
    let mut inv = Series::one(order);
    for n in 0.. {
        let e = 2 * n * n + 2 * n;
        if e > order {
            break;
        }
        inv.div_binomial(1, 2 * n + 1);
        inv.div_binomial(1, 2 * n + 1);
        add_shifted(&mut out, &inv, e, false);
    }
    out
}

fn omega_fine(order: usize) -> Series {
    let mut out = Series::zero(order);
    let mut inv = Series::one(order);
    for n in 0..=order {
        inv.div_binomial(1, 2 * n + 1);
        add_shifted(&mut out, &inv, n, false);
    }
    out
}

fn psi_defining(order: usize) -> Series {
    let mut out = Series::zero(order);
    let mut inv = Series::one(order);
    for n in 1.. {
        if n * n > order {
            break;
        }
        inv.div_binomial(1, 2 * n - 1);
        add_shifted(&mut out, &inv, n * n, false);
    }
    out
}

fn psi_fine(order: usize) -> Series {
    let mut out = Series::zero(order);
    let mut prod = Series::one(order);
    for n in 0..order {
        if n >= 1 {
            prod.mul_binomial(-1, 2 * n);
        }
        add_shifted(&mut out, &prod, n + 1, false);
    }
    out
}

/// `sum q^{n^2+n} / (-q;q^2)_{n+1}`, or with `at_neg_q` the directly
/// substituted `sum q^{n^2+n} / (q;q^2)_{n+1}`.
fn nu_defining(order: usize, at_neg_q: bool) -> Series {
    let sign = if at_neg_q { 1 } else { -1 };
    let mut out = Series::zero(order);
    let mut inv = Series::one(order);
    for n in 0.. {
        let e = n * n + n;
        if e > order {
            break;
        }
        inv.div_binomial(sign, 2 * n + 1);
        add_shifted(&mut out, &inv, e, false);
    }
    out
}

fn nu_fine(order: usize) -> Series {
    let mut out = Series::zero(order);
    let mut prod = Series::one(order);
    for n in 0..=order {
        if n >= 1 {
            prod.mul_binomial(1, 2 * n - 1);
        }
        add_shifted(&mut out, &prod, n, n % 2 == 1);
    }
    out
}

/// `1 + 2 sum_{n>=1} q^{n^2}`, or `1 + 2 sum_{n>=1} (-1)^n q^{n^2}` when
/// `alternating`.
pub fn theta_squares(order: usize, alternating: bool) -> Series {
    let mut coeffs = vec![0i64; order + 1];
    coeffs[0] = 1;
    for n in 1.. {
        let sq = n * n;
        if sq > order {
            break;
        }
        coeffs[sq] = if alternating && n % 2 == 1 { -2 } else { 2 };
    }
    Series::from_coeffs(coeffs, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qengine::{poch_finite, Parameter};

    fn ints(x: &Series) -> Vec<i64> {
        x.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn form(function: MockTheta, form: Form, argument: Argument) -> MockThetaForm {
        MockThetaForm::new(function, form, argument)
    }

    #[test]
    fn omega_defining_first_coefficients() {
        // oracle: direct summation with poch_finite and a general inverse
        let order = 5;
        let mut oracle = Series::zero(order);
        for n in 0..3usize {
            let d = poch_finite(Parameter::q(1), 2, n as u32 + 1, order);
            oracle = &oracle + &(&d * &d).invert().unwrap().shift(2 * n * n + 2 * n);
        }
        assert_eq!(ints(&oracle), vec![1, 2, 3, 4, 6, 8]);
        let s = mock_theta(form(MockTheta::Omega, Form::Defining, Argument::Q), order).unwrap();
        assert_eq!(s, oracle);
    }

    #[test]
    fn nu_at_neg_q_first_coefficients() {
        // oracle: sum q^n (-q;q^2)_n expanded term by term
        let order = 3;
        let mut oracle = Series::zero(order);
        for n in 0..=order {
            oracle = &oracle + &poch_finite(Parameter::neg_q(1), 2, n as u32, order).shift(n);
        }
        assert_eq!(ints(&oracle), vec![1, 1, 2, 2]);
        for f in [Form::Defining, Form::Fine, Form::Ady] {
            assert_eq!(
                mock_theta(form(MockTheta::Nu, f, Argument::NegQ), order).unwrap(),
                oracle,
                "{f:?}"
            );
        }
    }

    #[test]
    fn psi_has_no_constant_term() {
        for f in [Form::Defining, Form::Fine] {
            let s = mock_theta(form(MockTheta::Psi, f, Argument::Q), 12).unwrap();
            assert_eq!(s.coeffs()[0], 0.into());
        }
    }

    #[test]
    fn forms_agree() {
        let order = 80;
        for function in [MockTheta::Omega, MockTheta::Psi, MockTheta::Nu] {
            let d = mock_theta(form(function, Form::Defining, Argument::Q), order).unwrap();
            let f = mock_theta(form(function, Form::Fine, Argument::Q), order).unwrap();
            assert_eq!(d, f, "{function:?}");
        }
        let q_omega = mock_theta(form(MockTheta::Omega, Form::Defining, Argument::Q), order)
            .unwrap()
            .shift(1);
        assert_eq!(
            mock_theta(form(MockTheta::Omega, Form::Ady, Argument::Q), order).unwrap(),
            q_omega
        );
        let nu_neg = mock_theta(form(MockTheta::Nu, Form::Defining, Argument::Q), order)
            .unwrap()
            .negate_variable();
        assert_eq!(
            mock_theta(form(MockTheta::Nu, Form::Defining, Argument::NegQ), order).unwrap(),
            nu_neg
        );
    }

    #[test]
    fn unsupported_forms() {
        for spec in [
            form(MockTheta::Psi, Form::Ady, Argument::Q),
            form(MockTheta::Omega, Form::Ady, Argument::NegQ),
            form(MockTheta::Nu, Form::Ady, Argument::Q),
        ] {
            assert_eq!(mock_theta(spec, 4), Err(SpecialError::Unsupported(spec)));
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(
            ints(&theta_squares(10, false)),
            vec![1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0]
        );
        assert_eq!(ints(&theta_squares(4, true)), vec![1, -2, 0, 0, 2]);
        assert_eq!(ints(&theta_squares(0, true)), vec![1]);
        assert_eq!(ints(&theta_squares(0, false)), vec![1]);
    }

    #[test]
    fn display() {
        assert_eq!(
            form(MockTheta::Nu, Form::Fine, Argument::NegQ).to_string(),
            "nu(-q)[fine]"
        );
        assert_eq!(
            form(MockTheta::Omega, Form::Ady, Argument::Q).to_string(),
            "q*omega(q)[ady]"
        );
    }
}
