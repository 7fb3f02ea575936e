//! Gauss hypergeometric series and the two quadratic/cubic transformations
//! linking `u_n`, `v_n` to `s_n`, `t_n`.

use serde::Serialize;

use super::series::TruncatedSeries;
use crate::error::{Error, Result};
use crate::exact::ExactRational;

/// `₂F₁(a, b; c; x)` through `x^order_max`.
pub fn gauss_2f1(
    a: &ExactRational,
    b: &ExactRational,
    c: &ExactRational,
    order_max: usize,
) -> Result<TruncatedSeries> {
    let mut coeffs = Vec::with_capacity(order_max + 1);
    let mut term = ExactRational::one();
    for n in 0..=order_max {
        coeffs.push(term.clone());
        if n == order_max {
            break;
        }
        let k = ExactRational::from(n as i64);
        let denom = (c + &k) * (&k + &ExactRational::one());
        if denom.is_zero() {
            return Err(Error::Series(format!(
                "(c)_n vanishes: c = {c}, n = {}",
                n + 1
            )));
        }
        term = term * (a + &k) * (b + &k) / denom;
    }
    TruncatedSeries::from_coeffs(coeffs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformationCheck {
    pub name: &'static str,
    pub order_max: usize,
    pub lhs: Vec<ExactRational>,
    pub rhs: Vec<ExactRational>,
    pub first_mismatch: Option<usize>,
}

impl TransformationCheck {
    fn compare(
        name: &'static str,
        order_max: usize,
        lhs: &TruncatedSeries,
        rhs: &TruncatedSeries,
    ) -> Result<Self> {
        let lhs = lhs.dense(order_max + 1)?;
        let rhs = rhs.dense(order_max + 1)?;
        let first_mismatch = lhs.iter().zip(&rhs).position(|(a, b)| a != b);
        Ok(Self {
            name,
            order_max,
            lhs,
            rhs,
            first_mismatch,
        })
    }

    pub fn verdict(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::ratio(n, d)
}

/// `₂F₁(1/4,3/4;1;x) = (1-x)^{-1/4} ₂F₁(1/4,1/4;1;x/(x-1))` through `x^order_max`.
pub fn kummer_transformation_check(order_max: usize) -> Result<TransformationCheck> {
    let len = order_max + 1;
    let lhs = gauss_2f1(&q(1, 4), &q(3, 4), &q(1, 1), order_max)?;

    let one_minus_x = TruncatedSeries::from_integers(&[1, -1], len)?;
    // x/(x-1) = x · (-1/(1-x))
    let x = TruncatedSeries::from_integers(&[0, 1], len)?;
    let neg_geometric = one_minus_x.pow_int(-1)?.scale(&q(-1, 1));
    let w = x.mul(&neg_geometric);

    let prefactor = one_minus_x.pow_binomial(&q(-1, 4))?;
    let inner = gauss_2f1(&q(1, 4), &q(1, 4), &q(1, 1), order_max)?.compose(&w)?;
    let rhs = prefactor.mul(&inner);
    TransformationCheck::compare("kummer", order_max, &lhs, &rhs)
}

/// `₂F₁(1/3,2/3;1;x) = ₂F₁(1/3,1/6;1;4x(1-x))` through `x^order_max`.
pub fn cubic_transformation_check(order_max: usize) -> Result<TransformationCheck> {
    let len = order_max + 1;
    let lhs = gauss_2f1(&q(1, 3), &q(2, 3), &q(1, 1), order_max)?;
    let w = TruncatedSeries::from_integers(&[0, 4, -4], len)?;
    let rhs = gauss_2f1(&q(1, 3), &q(1, 6), &q(1, 1), order_max)?.compose(&w)?;
    TransformationCheck::compare("cubic", order_max, &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_coefficients() {
        let f = gauss_2f1(&q(1, 4), &q(1, 4), &q(1, 1), 4).unwrap();
        assert_eq!(f.coefficients()[0], q(1, 1));
        assert_eq!(f.coefficients()[1], q(1, 16));
        let g = gauss_2f1(&q(1, 3), &q(2, 3), &q(1, 1), 4).unwrap();
        assert_eq!(g.coefficients()[1], q(2, 9));
        // (1/4)(5/4)(1/4)(5/4) / (1·2 · 2) = 25/1024
        assert_eq!(f.coefficients()[2], q(25, 1024));
    }

    #[test]
    fn pole_is_rejected() {
        assert!(gauss_2f1(&q(1, 2), &q(1, 2), &q(-2, 1), 5).is_err());
        // the pole is beyond the requested order
        assert!(gauss_2f1(&q(1, 2), &q(1, 2), &q(-2, 1), 2).is_ok());
    }

    #[test]
    fn transformations_low_order() {
        let k = kummer_transformation_check(1).unwrap();
        assert_eq!(k.lhs, vec![q(1, 1), q(3, 16)]);
        assert_eq!(k.rhs, k.lhs);
        let c = cubic_transformation_check(1).unwrap();
        assert_eq!(c.rhs, vec![q(1, 1), q(2, 9)]);
        assert!(c.verdict());
    }

    #[test]
    fn transformations_hold() {
        for n in [8, 20] {
            assert!(kummer_transformation_check(n).unwrap().verdict());
            assert!(cubic_transformation_check(n).unwrap().verdict());
        }
    }

    #[test]
    fn a_wrong_identity_is_caught() {
        let lhs = gauss_2f1(&q(1, 4), &q(3, 4), &q(1, 1), 6).unwrap();
        let rhs = gauss_2f1(&q(1, 4), &q(1, 4), &q(1, 1), 6).unwrap();
        let c = TransformationCheck::compare("bogus", 6, &lhs, &rhs).unwrap();
        assert_eq!(c.first_mismatch, Some(1));
    }
}
