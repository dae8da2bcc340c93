//! Recipes: composition trees describing how one side of an identity is
//! computed. They are plain data so a case can be printed exactly as it is
//! evaluated.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::partitions::{
    brute_force_series, count_ady, count_overpartitions, Family, LabError, Parity, StatFilter,
};
use crate::qengine::{
    phi21, poch_finite, poch_infinite, sum_over_smallest, Parameter, ProductTemplate, QError,
    RationalFunction, TermTemplate,
};
use crate::series::{Series, SeriesError};
use crate::special::{mock_theta, theta_squares, MockThetaForm, SpecialError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecipeError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Q(#[from] QError),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Lab(#[from] LabError),
}

/// Explicit coefficient sequences, written the way closed sums are printed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Sequence {
    /// `sum_{n>=start} (-1)^{n if alternating} q^{step*n+offset} sum_j P_j(n) q^j`
    /// where `P_j(n) = polys[j][0] + polys[j][1] n + polys[j][2] n^2 + ...`.
    PolySum {
        start: u32,
        step: u32,
        offset: u32,
        alternating: bool,
        polys: Vec<Vec<i64>>,
    },
    /// `sum_{n>=start} (-1)^{n if alternating} floor((n+shift)/divisor) q^n`
    FloorQuotient {
        start: u32,
        shift: u32,
        divisor: u32,
        alternating: bool,
    },
}

impl Sequence {
    fn evaluate(&self, order: usize) -> Series {
        let mut c = vec![BigInt::from(0); order + 1];
        match self {
            Sequence::PolySum {
                start,
                step,
                offset,
                alternating,
                polys,
            } => {
                for n in *start as usize.. {
                    let base = *step as usize * n + *offset as usize;
                    if base > order {
                        break;
                    }
                    let sign = if *alternating && n % 2 == 1 { -1 } else { 1 };
                    for (j, poly) in polys.iter().enumerate() {
                        if base + j > order {
                            break;
                        }
                        let mut value = BigInt::from(0);
                        for &a in poly.iter().rev() {
                            value = value * n + a;
                        }
                        c[base + j] += value * sign;
                    }
                }
            }
            Sequence::FloorQuotient {
                start,
                shift,
                divisor,
                alternating,
            } => {
                for (n, slot) in c.iter_mut().enumerate().skip(*start as usize) {
                    let v = (n as i64 + *shift as i64) / *divisor as i64;
                    *slot = BigInt::from(if *alternating && n % 2 == 1 { -v } else { v });
                }
            }
        }
        Series::from_coeffs(c, order)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, poly: &[i64]) -> fmt::Result {
    let mut first = true;
    for (k, &a) in poly.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let sign = if a < 0 {
            "-"
        } else if first {
            ""
        } else {
            "+"
        };
        let mag = a.unsigned_abs();
        let var = match k {
            0 => String::new(),
            1 => "n".to_string(),
            _ => format!("n^{k}"),
        };
        if var.is_empty() || mag != 1 {
            write!(f, "{sign}{mag}{var}")?;
        } else {
            write!(f, "{sign}{var}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sequence::PolySum {
                start,
                step,
                offset,
                alternating,
                polys,
            } => {
                write!(f, "sum_{{n>={start}}} ")?;
                if *alternating {
                    write!(f, "(-1)^n ")?;
                }
                write!(f, "q^({}) [", crate::qengine::Affine::new(*step, *offset))?;
                for (j, p) in polys.iter().enumerate() {
                    if j > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "(")?;
                    write_poly(f, p)?;
                    write!(f, ")")?;
                    match j {
                        0 => {}
                        1 => write!(f, "q")?,
                        _ => write!(f, "q^{j}")?,
                    }
                }
                write!(f, "]")
            }
            Sequence::FloorQuotient {
                start,
                shift,
                divisor,
                alternating,
            } => {
                write!(f, "sum_{{n>={start}}} ")?;
                if *alternating {
                    write!(f, "(-1)^n ")?;
                }
                write!(f, "floor((n+{shift})/{divisor}) q^n")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Recipe {
    /// `(a;q^base)_len`, infinite when `len` is `None`
    Poch {
        a: Parameter,
        base: u32,
        len: Option<u32>,
    },
    Rational(RationalFunction),
    Smallest(TermTemplate),
    Product(ProductTemplate),
    /// the generating-function template of a named family
    FamilyTemplate {
        family: Family,
        signed: bool,
    },
    Phi21 {
        a: Parameter,
        b: Parameter,
        c: Parameter,
        base: u32,
        z: Parameter,
    },
    MockTheta(MockThetaForm),
    /// `sum_{n in Z} q^{n^2}`, with `(-1)^n` when alternating
    Theta {
        alternating: bool,
    },
    /// brute-force enumeration of a family, optionally restricted by a
    /// parity filter
    Enumerate {
        family: Family,
        filter: StatFilter,
        weighted: bool,
    },
    Overpartitions {
        odd_only: bool,
    },
    /// partitions whose odd parts are below twice the smallest part
    Ady {
        distinct: bool,
        allow_zero: bool,
    },
    Sequence(Sequence),
    Combine(Vec<(i64, Recipe)>),
    Mul(Vec<Recipe>),
    Inverse(Box<Recipe>),
    Shift(u32, Box<Recipe>),
    Pow(u32, Box<Recipe>),
    NegateVariable(Box<Recipe>),
    Substitute(u32, Box<Recipe>),
}

impl Recipe {
    pub fn poch(a: Parameter, base: u32) -> Recipe {
        Recipe::Poch { a, base, len: None }
    }

    pub fn rational(
        numerator: Vec<i64>,
        denominator: Vec<crate::qengine::DenominatorFactor>,
    ) -> Recipe {
        Recipe::Rational(RationalFunction::new(numerator, denominator))
    }

    pub fn inverse(r: Recipe) -> Recipe {
        Recipe::Inverse(Box::new(r))
    }

    pub fn shift(k: u32, r: Recipe) -> Recipe {
        Recipe::Shift(k, Box::new(r))
    }

    pub fn pow(k: u32, r: Recipe) -> Recipe {
        Recipe::Pow(k, Box::new(r))
    }

    pub fn enumerate(family: Family, weighted: bool) -> Recipe {
        Recipe::Enumerate {
            family,
            filter: StatFilter::default(),
            weighted,
        }
    }

    /// Whether evaluation involves exhaustive enumeration.
    pub fn uses_enumeration(&self) -> bool {
        match self {
            Recipe::Enumerate { .. } | Recipe::Overpartitions { .. } | Recipe::Ady { .. } => true,
            Recipe::Combine(v) => v.iter().any(|(_, r)| r.uses_enumeration()),
            Recipe::Mul(v) => v.iter().any(Recipe::uses_enumeration),
            Recipe::Inverse(r)
            | Recipe::Shift(_, r)
            | Recipe::Pow(_, r)
            | Recipe::NegateVariable(r)
            | Recipe::Substitute(_, r) => r.uses_enumeration(),
            _ => false,
        }
    }

    /// Evaluates to `order`; `budget` bounds any enumeration.
    pub fn evaluate(&self, order: usize, budget: usize) -> Result<Series, RecipeError> {
        Ok(match self {
            Recipe::Poch {
                a,
                base,
                len: Some(m),
            } => poch_finite(*a, *base, *m, order),
            Recipe::Poch { a, base, len: None } => poch_infinite(*a, *base, order)?,
            Recipe::Rational(r) => r.expand(order)?,
            Recipe::Smallest(t) => sum_over_smallest(t, order)?,
            Recipe::Product(p) => p.expand(order),
            Recipe::FamilyTemplate { family, signed } => {
                family.generating_function(*signed).expand(order)?
            }
            Recipe::Phi21 { a, b, c, base, z } => phi21(*a, *b, *c, *base, *z, order)?,
            Recipe::MockTheta(form) => mock_theta(*form, order)?,
            Recipe::Theta { alternating } => theta_squares(order, *alternating),
            Recipe::Enumerate {
                family,
                filter,
                weighted,
            } => brute_force_series(
                &family.spec().with_filter(*filter),
                order,
                *weighted,
                budget,
            )?,
            Recipe::Overpartitions { odd_only } => {
                check_budget(order, budget)?;
                Series::from_coeffs(
                    (0..=order).map(|n| count_overpartitions(n as u32, *odd_only)),
                    order,
                )
            }
            Recipe::Ady {
                distinct,
                allow_zero,
            } => {
                check_budget(order, budget)?;
                let c = (0..=order)
                    .map(|n| count_ady(n as u32, *distinct, *allow_zero))
                    .collect::<Result<Vec<_>, _>>()?;
                Series::from_coeffs(c, order)
            }
            Recipe::Sequence(s) => s.evaluate(order),
            Recipe::Combine(terms) => {
                let parts = terms
                    .iter()
                    .map(|(c, r)| Ok((BigInt::from(*c), r.evaluate(order, budget)?)))
                    .collect::<Result<Vec<_>, RecipeError>>()?;
                Series::linear_combine(parts.iter().map(|(c, s)| (c.clone(), s)))?
            }
            Recipe::Mul(factors) => {
                let mut acc = Series::one(order);
                for r in factors {
                    acc = acc.mul(&r.evaluate(order, budget)?);
                }
                acc
            }
            Recipe::Inverse(r) => r.evaluate(order, budget)?.invert()?,
            Recipe::Shift(k, r) => r.evaluate(order, budget)?.shift(*k as usize),
            Recipe::Pow(k, r) => r.evaluate(order, budget)?.pow(*k),
            Recipe::NegateVariable(r) => r.evaluate(order, budget)?.negate_variable(),
            Recipe::Substitute(k, r) => r.evaluate(order, budget)?.substitute_power(*k as usize)?,
        })
    }

    /// Indented multi-line rendering, one node per line.
    pub fn tree(&self) -> String {
        let mut out = String::new();
        self.write_tree(&mut out, 0, "");
        out
    }

    fn write_tree(&self, out: &mut String, depth: usize, label: &str) {
        let pad = "  ".repeat(depth);
        let head = match self {
            Recipe::Combine(_) => "combine".to_string(),
            Recipe::Mul(_) => "product".to_string(),
            Recipe::Inverse(_) => "reciprocal".to_string(),
            Recipe::Shift(k, _) => format!("times q^{k}"),
            Recipe::Pow(k, _) => format!("power {k}"),
            Recipe::NegateVariable(_) => "substitute q -> -q".to_string(),
            Recipe::Substitute(k, _) => format!("substitute q -> q^{k}"),
            leaf => leaf.to_string(),
        };
        out.push_str(&format!("{pad}{label}{head}\n"));
        match self {
            Recipe::Combine(terms) => {
                for (c, r) in terms {
                    r.write_tree(out, depth + 1, &format!("{c:+} * "));
                }
            }
            Recipe::Mul(factors) => {
                for r in factors {
                    r.write_tree(out, depth + 1, "");
                }
            }
            Recipe::Inverse(r)
            | Recipe::Shift(_, r)
            | Recipe::Pow(_, r)
            | Recipe::NegateVariable(r)
            | Recipe::Substitute(_, r) => r.write_tree(out, depth + 1, ""),
            _ => {}
        }
    }
}

fn check_budget(order: usize, budget: usize) -> Result<(), LabError> {
    if order > budget {
        return Err(LabError::OverBudget { order, budget });
    }
    Ok(())
}

fn write_filter(f: &mut fmt::Formatter<'_>, filter: &StatFilter) -> fmt::Result {
    let word = |p: Parity| match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    };
    if let Some(p) = filter.even_parts {
        write!(f, ", {} number of even parts", word(p))?;
    }
    if let Some(p) = filter.num_parts {
        write!(f, ", {} number of parts", word(p))?;
    }
    Ok(())
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Poch { a, base, len } => {
                let b = if *base == 1 {
                    "q".to_string()
                } else {
                    format!("q^{base}")
                };
                match len {
                    Some(m) => write!(f, "({a};{b})_{m}"),
                    None => write!(f, "({a};{b})_inf"),
                }
            }
            Recipe::Rational(r) => write!(f, "{r}"),
            Recipe::Smallest(t) => write!(f, "{t}"),
            Recipe::Product(p) => write!(f, "{p}"),
            Recipe::FamilyTemplate { family, signed } => {
                let kind = if *signed { "signed" } else { "unsigned" };
                write!(
                    f,
                    "template[{family}, {kind}] = {}",
                    family.generating_function(*signed)
                )
            }
            Recipe::Phi21 { a, b, c, base, z } => write!(f, "2phi1({a}, {b}; {c}; q^{base}, {z})"),
            Recipe::MockTheta(form) => write!(f, "{form}"),
            Recipe::Theta { alternating: false } => write!(f, "sum_{{n in Z}} q^(n^2)"),
            Recipe::Theta { alternating: true } => write!(f, "sum_{{n in Z}} (-1)^n q^(n^2)"),
            Recipe::Enumerate {
                family,
                filter,
                weighted,
            } => {
                write!(f, "enumerate[{family}")?;
                write_filter(f, filter)?;
                if *weighted {
                    write!(f, ", weighted")?;
                }
                write!(f, "]")
            }
            Recipe::Overpartitions { odd_only: true } => write!(f, "overpartitions[odd parts]"),
            Recipe::Overpartitions { odd_only: false } => write!(f, "overpartitions"),
            Recipe::Ady {
                distinct,
                allow_zero,
            } => {
                write!(
                    f,
                    "odd parts < 2*smallest[{}",
                    if *distinct { "distinct" } else { "repeated" }
                )?;
                if *allow_zero {
                    write!(f, ", optional zero part")?;
                }
                write!(f, "]")
            }
            Recipe::Sequence(s) => write!(f, "{s}"),
            Recipe::Combine(terms) => {
                for (i, (c, r)) in terms.iter().enumerate() {
                    let mag = c.unsigned_abs();
                    match (i, *c < 0) {
                        (0, true) => write!(f, "-")?,
                        (0, false) => {}
                        (_, true) => write!(f, " - ")?,
                        (_, false) => write!(f, " + ")?,
                    }
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "[{r}]")?;
                }
                Ok(())
            }
            Recipe::Mul(factors) => {
                for (i, r) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    write!(f, "[{r}]")?;
                }
                Ok(())
            }
            Recipe::Inverse(r) => write!(f, "1/[{r}]"),
            Recipe::Shift(k, r) => write!(f, "q^{k} * [{r}]"),
            Recipe::Pow(k, r) => write!(f, "[{r}]^{k}"),
            Recipe::NegateVariable(r) => write!(f, "[{r}](q -> -q)"),
            Recipe::Substitute(k, r) => write!(f, "[{r}](q -> q^{k})"),
        }
    }
}
