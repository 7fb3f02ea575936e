//! Expansion of a weight-2 form `Z` in powers of a modular function `X`,
//! and the four `(Z, X)` pairs whose coefficients are α, β, s and t.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::eta::{eta_quotient_expand, theta_hexagonal, theta_sum_two_squares, EtaQuotientSpec};
use super::series::{mul_truncated, TruncatedSeries};
use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::sequences::SequenceId;

pub const DEFAULT_TRUNCATION: usize = 32;

/// Coefficients `c_0 .. c_{count-1}` with `Z ≡ Σ c_n X^n (mod q^count)`.
/// `X` must be `q + O(q²)`.
pub fn expand_in_modular_function(
    z: &TruncatedSeries,
    x: &TruncatedSeries,
    count: usize,
) -> Result<Vec<ExactRational>> {
    if x.coeff(0).is_none_or(|c| !c.is_zero()) || x.coeff(1).is_none_or(|c| !c.is_one()) {
        return Err(Error::Series("X must have the form q + O(q^2)".into()));
    }
    if z.precision()? < count as i64 || x.precision()? < count as i64 {
        return Err(Error::Series(format!(
            "truncation too small for {count} coefficients"
        )));
    }
    let mut remainder = z.dense(count)?;
    let x = x.dense(count)?;
    let mut power = vec![ExactRational::zero(); count];
    power[0] = ExactRational::one();
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        // X^n = q^n + O(q^{n+1}) so c_n is read off directly
        let c = remainder[n].clone();
        if !c.is_zero() {
            for (r, p) in remainder.iter_mut().zip(&power).skip(n) {
                *r -= &(p * &c);
            }
        }
        out.push(c);
        power = mul_truncated(&power, &x, count);
    }
    Ok(out)
}

/// Series exposed by name for dumps and cross-checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NamedSeries {
    AperyZ,
    AperyX,
    DombZ,
    DombX,
    Z2,
    X2,
    Z3,
    X3,
}

impl NamedSeries {
    pub const ALL: [NamedSeries; 8] = [
        NamedSeries::AperyZ,
        NamedSeries::AperyX,
        NamedSeries::DombZ,
        NamedSeries::DombX,
        NamedSeries::Z2,
        NamedSeries::X2,
        NamedSeries::Z3,
        NamedSeries::X3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedSeries::AperyZ => "apery-z",
            NamedSeries::AperyX => "apery-x",
            NamedSeries::DombZ => "domb-z",
            NamedSeries::DombX => "domb-x",
            NamedSeries::Z2 => "z2",
            NamedSeries::X2 => "x2",
            NamedSeries::Z3 => "z3",
            NamedSeries::X3 => "x3",
        }
    }

    pub fn build(self, order: usize) -> Result<TruncatedSeries> {
        let eta = |f: &[(u64, i64)]| eta_quotient_expand(&EtaQuotientSpec::new(f), order);
        match self {
            // (η(2τ)η(3τ))^7 / (η(τ)η(6τ))^5
            NamedSeries::AperyZ => eta(&[(2, 7), (3, 7), (1, -5), (6, -5)]),
            // (η(τ)η(6τ) / (η(2τ)η(3τ)))^12
            NamedSeries::AperyX => eta(&[(1, 12), (6, 12), (2, -12), (3, -12)]),
            // (η(τ)η(3τ))^4 / (η(2τ)η(6τ))^2
            NamedSeries::DombZ => eta(&[(1, 4), (3, 4), (2, -2), (6, -2)]),
            // (η(2τ)η(6τ) / (η(τ)η(3τ)))^6
            NamedSeries::DombX => eta(&[(2, 6), (6, 6), (1, -6), (3, -6)]),
            NamedSeries::Z2 => theta_sum_two_squares(order),
            // η(2τ)^12 / Z2^6
            NamedSeries::X2 => {
                Ok(eta(&[(2, 12)])?.mul(&theta_sum_two_squares(order)?.pow_int(-6)?))
            }
            NamedSeries::Z3 => theta_hexagonal(order),
            // η(τ)^6 η(3τ)^6 / Z3^6
            NamedSeries::X3 => {
                Ok(eta(&[(1, 6), (3, 6)])?.mul(&theta_hexagonal(order)?.pow_int(-6)?))
            }
        }
    }
}

impl fmt::Display for NamedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        NamedSeries::ALL
            .into_iter()
            .find(|n| n.name() == lower)
            .ok_or_else(|| {
                let names: Vec<_> = NamedSeries::ALL.iter().map(|n| n.name()).collect();
                Error::InvalidArgument(format!(
                    "unknown series {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// `(Z, X)` pairs whose expansion coefficients are a known sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ModularPair {
    Apery,
    Domb,
    S,
    T,
}

impl ModularPair {
    pub const ALL: [ModularPair; 4] = [
        ModularPair::Apery,
        ModularPair::Domb,
        ModularPair::S,
        ModularPair::T,
    ];

    pub fn sequence(self) -> SequenceId {
        match self {
            ModularPair::Apery => SequenceId::Apery,
            ModularPair::Domb => SequenceId::Domb,
            ModularPair::S => SequenceId::S,
            ModularPair::T => SequenceId::T,
        }
    }

    pub fn series(self) -> (NamedSeries, NamedSeries) {
        match self {
            ModularPair::Apery => (NamedSeries::AperyZ, NamedSeries::AperyX),
            ModularPair::Domb => (NamedSeries::DombZ, NamedSeries::DombX),
            ModularPair::S => (NamedSeries::Z2, NamedSeries::X2),
            ModularPair::T => (NamedSeries::Z3, NamedSeries::X3),
        }
    }

    /// Remark attached to reports for this pair, if any.
    pub fn note(self) -> Option<&'static str> {
        match self {
            ModularPair::T => Some(
                "X3 is built as eta(tau)^6 eta(3tau)^6 / Z3^6; the form eta(tau)^6 eta(tau)^6 / Z3^6 \
                 has leading exponent 1/2 and no integral q-expansion",
            ),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossDerivation {
    pub pair: ModularPair,
    pub sequence: SequenceId,
    pub recovered: Vec<ExactRational>,
    pub expected: Vec<ExactRational>,
    pub note: Option<&'static str>,
}

impl CrossDerivation {
    pub fn verdict(&self) -> bool {
        self.recovered == self.expected
    }

    pub fn first_mismatch(&self) -> Option<usize> {
        self.recovered
            .iter()
            .zip(&self.expected)
            .position(|(a, b)| a != b)
    }
}

/// Recovers the first `count` coefficients of `Z` in powers of `X` and
/// compares them with the sequence's direct formula.
pub fn cross_derive(pair: ModularPair, count: usize, order: usize) -> Result<CrossDerivation> {
    let (zn, xn) = pair.series();
    let z = zn.build(order)?;
    let x = xn.build(order)?;
    let recovered = expand_in_modular_function(&z, &x, count)?;
    let expected = (0..count as u64)
        .map(|n| pair.sequence().closed(n))
        .collect();
    Ok(CrossDerivation {
        pair,
        sequence: pair.sequence(),
        recovered,
        expected,
        note: pair.note(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<ExactRational> {
        v.iter().map(|&x| ExactRational::from(x)).collect()
    }

    #[test]
    fn apery_from_eta_quotients() {
        let z = NamedSeries::AperyZ.build(16).unwrap();
        let x = NamedSeries::AperyX.build(16).unwrap();
        let c = expand_in_modular_function(&z, &x, 6).unwrap();
        assert_eq!(c, ints(&[1, 5, 73, 1445, 33001, 819005]));
    }

    #[test]
    fn s_from_theta() {
        let z = NamedSeries::Z2.build(8).unwrap();
        let x = NamedSeries::X2.build(8).unwrap();
        assert_eq!(x.coeff(1), Some(ExactRational::from(1)));
        assert_eq!(x.coeff(2), Some(ExactRational::from(-24)));
        let c = expand_in_modular_function(&z, &x, 3).unwrap();
        assert_eq!(c, ints(&[1, 4, 100]));
    }

    #[test]
    fn single_coefficient_is_constant_term() {
        let z = NamedSeries::DombZ.build(4).unwrap();
        let x = NamedSeries::DombX.build(4).unwrap();
        assert_eq!(expand_in_modular_function(&z, &x, 1).unwrap(), ints(&[1]));
    }

    #[test]
    fn x_shape_and_truncation_are_checked() {
        let z = NamedSeries::Z2.build(8).unwrap();
        assert!(expand_in_modular_function(&z, &z, 3).is_err());
        let x = NamedSeries::X2.build(8).unwrap();
        assert!(expand_in_modular_function(&z, &x, 20).is_err());
    }

    #[test]
    fn all_pairs_recover_their_sequences() {
        for pair in ModularPair::ALL {
            let d = cross_derive(pair, 12, 16).unwrap();
            assert!(d.verdict(), "{pair:?} mismatch at {:?}", d.first_mismatch());
        }
    }

    #[test]
    fn coefficients_stable_under_refinement() {
        let a = cross_derive(ModularPair::T, 10, 12).unwrap();
        let b = cross_derive(ModularPair::T, 10, 24).unwrap();
        assert_eq!(a.recovered, b.recovered);
    }

    #[test]
    fn names_parse() {
        for n in NamedSeries::ALL {
            assert_eq!(n.name().parse::<NamedSeries>().unwrap(), n);
        }
        assert!("x4".parse::<NamedSeries>().is_err());
    }
}
