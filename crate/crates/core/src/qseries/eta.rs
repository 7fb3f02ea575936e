//! Dedekind eta quotients and binary theta series as truncated q-series.

use serde::{Deserialize, Serialize};

use super::series::{TruncatedSeries, EXPONENT_DENOMINATOR};
use crate::error::{Error, Result};
use crate::exact::ExactRational;

/// Coefficients of `Π_{n≥1} (1 - x^n)` for `x^0 .. x^{len-1}`, by the
/// pentagonal number theorem.
pub fn euler_product(len: usize) -> Vec<i64> {
    let mut c = vec![0i64; len];
    if len == 0 {
        return c;
    }
    c[0] = 1;
    for k in 1i64.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let a = (k * (3 * k - 1) / 2) as usize;
        let b = (k * (3 * k + 1) / 2) as usize;
        if a >= len {
            break;
        }
        c[a] += sign;
        if b < len {
            c[b] += sign;
        }
    }
    c
}

/// `η(mτ) = q^{m/24} Π_{n≥1} (1 - q^{mn})` with `order` stored terms.
pub fn eta_expansion(m: u64, order: usize) -> Result<TruncatedSeries> {
    if m == 0 {
        return Err(Error::Series("eta multiplier must be positive".into()));
    }
    let inner = euler_product(order.div_ceil(m as usize));
    let mut coeffs = vec![ExactRational::zero(); order];
    for (k, c) in inner.iter().enumerate() {
        let e = k * m as usize;
        if e < order && *c != 0 {
            coeffs[e] = ExactRational::from(*c);
        }
    }
    TruncatedSeries::new(m as i64, coeffs)
}

/// `Π η(m_i τ)^{e_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaQuotientSpec {
    pub factors: Vec<(u64, i64)>,
}

impl EtaQuotientSpec {
    pub fn new(factors: &[(u64, i64)]) -> Self {
        Self {
            factors: factors.to_vec(),
        }
    }

    /// `Σ m_i e_i`, the leading exponent in units of 1/24.
    pub fn net_exponent_24ths(&self) -> i64 {
        self.factors.iter().map(|&(m, e)| m as i64 * e).sum()
    }
}

/// Expands an eta quotient; the net exponent must be an integer.
pub fn eta_quotient_expand(spec: &EtaQuotientSpec, order: usize) -> Result<TruncatedSeries> {
    let net = spec.net_exponent_24ths();
    if net % EXPONENT_DENOMINATOR != 0 {
        return Err(Error::Series(format!(
            "eta quotient has fractional leading exponent {net}/24"
        )));
    }
    let mut acc = TruncatedSeries::one(order);
    for &(m, e) in &spec.factors {
        let eta = eta_expansion(m, order)?;
        // Drop the q^{m/24} prefactor here and restore the net shift at the end.
        let body = TruncatedSeries::from_coeffs(eta.coefficients().to_vec())?;
        acc = acc.mul(&body.pow_int(e)?);
    }
    TruncatedSeries::new(net, acc.coefficients().to_vec())?.integral()
}

/// Representation counts of the binary form `a m² + b mn + c n²` for
/// exponents `0 .. order-1`.
fn binary_theta(order: usize, form: impl Fn(i64, i64) -> i64) -> Result<TruncatedSeries> {
    let bound = ((2 * order) as f64).sqrt().ceil() as i64;
    let mut counts = vec![0i64; order];
    for m in -bound..=bound {
        for n in -bound..=bound {
            let v = form(m, n);
            if (0..order as i64).contains(&v) {
                counts[v as usize] += 1;
            }
        }
    }
    TruncatedSeries::from_integers(&counts, order)
}

/// `Σ_{m,n} q^{m² + n²}`.
pub fn theta_sum_two_squares(order: usize) -> Result<TruncatedSeries> {
    binary_theta(order, |m, n| m * m + n * n)
}

/// `Σ_{m,n} q^{m² + mn + n²}`.
pub fn theta_hexagonal(order: usize) -> Result<TruncatedSeries> {
    binary_theta(order, |m, n| m * m + m * n + n * n)
}
