//! Generating functions of the named families, as q-engine templates.
//!
//! `signed` selects the family's weight; the unsigned variant counts members.

use std::fmt;

use super::Family;
use crate::qengine::{
    sum_over_smallest, Affine, Length, PochFactor, ProductTemplate, QError, Sign, TermTemplate,
};
use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyGf {
    Product(ProductTemplate),
    Smallest(TermTemplate),
}

impl FamilyGf {
    pub fn expand(&self, order: usize) -> Result<Series, QError> {
        match self {
            FamilyGf::Product(p) => Ok(p.expand(order)),
            FamilyGf::Smallest(t) => sum_over_smallest(t, order),
        }
    }
}

impl fmt::Display for FamilyGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyGf::Product(p) => write!(f, "{p}"),
            FamilyGf::Smallest(t) => write!(f, "{t}"),
        }
    }
}

const P: Sign = Sign::Plus;
const M: Sign = Sign::Minus;
const INF: Length = Length::Infinite;

fn num(sign: Sign, slope: u32, intercept: u32, base: u32) -> PochFactor {
    PochFactor::numerator(sign, Affine::new(slope, intercept), base, INF)
}

fn den(sign: Sign, slope: u32, intercept: u32, base: u32) -> PochFactor {
    PochFactor::denominator(sign, Affine::new(slope, intercept), base, INF)
}

impl Family {
    /// The family's generating function; `signed` inserts its weight.
    pub fn generating_function(self, signed: bool) -> FamilyGf {
        // weighted even parts pick up (q^e;..) in place of (-q^e;..)
        let w = if signed { P } else { M };
        let smallest = |prefix: Affine, factors: Vec<PochFactor>| {
            FamilyGf::Smallest(
                TermTemplate::new(prefix, false, factors).expect("valid family template"),
            )
        };
        let product = |factors: Vec<PochFactor>| {
            FamilyGf::Product(ProductTemplate::new(factors).expect("valid family template"))
        };
        let odd_start = Affine::new(2, 1);
        match self {
            Family::E => product(vec![num(w, 0, 2, 2), num(M, 0, 1, 2), num(M, 0, 1, 2)]),
            Family::F => product(vec![
                den(P, 0, 1, 2),
                den(P, 0, 1, 2),
                den(w.flip(), 0, 2, 2),
            ]),
            Family::Tomega => smallest(
                odd_start,
                vec![num(w, 2, 2, 2), den(P, 2, 1, 2), den(P, 2, 1, 2)],
            ),
            Family::Tpsi => smallest(
                odd_start,
                vec![num(M, 2, 3, 2), num(w, 2, 2, 2), den(P, 2, 1, 2)],
            ),
            Family::Tnu => smallest(
                odd_start,
                vec![num(M, 2, 2, 2), num(w, 2, 2, 2), den(P, 2, 1, 2)],
            ),
            Family::A => smallest(
                odd_start,
                vec![
                    num(w, 2, 4, 2),
                    num(w, 2, 2, 2),
                    den(P, 2, 1, 2),
                    den(P, 2, 1, 2),
                ],
            ),
            Family::B => smallest(
                odd_start,
                vec![
                    num(w, 2, 6, 2),
                    num(w, 2, 2, 2),
                    den(P, 2, 3, 2),
                    den(P, 2, 1, 2),
                ],
            ),
            Family::C => smallest(
                Affine::new(4, 2),
                vec![
                    num(w, 2, 6, 2),
                    num(w, 2, 2, 2),
                    den(P, 2, 1, 2),
                    den(P, 2, 1, 2),
                ],
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{brute_force_series, DEFAULT_ENUMERATION_BUDGET};

    #[test]
    fn templates_match_enumeration() {
        for f in Family::ALL {
            for signed in [false, true] {
                let gf = f.generating_function(signed).expand(16).unwrap();
                let bf =
                    brute_force_series(&f.spec(), 16, signed, DEFAULT_ENUMERATION_BUDGET).unwrap();
                assert_eq!(gf, bf, "{f} signed={signed}");
            }
        }
    }

    #[test]
    fn tomega_values() {
        let s = Family::Tomega.generating_function(true).expand(7).unwrap();
        let got: Vec<i64> = s.coeffs().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(got, [0, 1, 2, 3, 4, 6, 8, 10]);
    }

    #[test]
    fn display() {
        assert_eq!(
            Family::E.generating_function(true).to_string(),
            "1 (q^2;q^2)_inf (-q;q^2)_inf (-q;q^2)_inf"
        );
    }
}
