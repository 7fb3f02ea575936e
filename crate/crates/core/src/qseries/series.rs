use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::ExactRational;

/// Exponent unit: series exponents are stored in 24ths so that
/// `q^{m/24}` prefactors of eta functions stay exact.
pub const EXPONENT_DENOMINATOR: i64 = 24;

/// A formal power series `Σ_{i<order} c_i q^{base/24 + i}`, known modulo
/// `q^{base/24 + order}`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    /// Leading exponent in 24ths.
    #[serde(rename = "base_exponent_24ths")]
    base: i64,
    #[serde(rename = "coefficients")]
    coeffs: Vec<ExactRational>,
}

fn series_err(msg: impl Into<String>) -> Error {
    Error::Series(msg.into())
}

/// Product of two coefficient lists, keeping the first `len` terms.
pub(crate) fn mul_truncated(
    a: &[ExactRational],
    b: &[ExactRational],
    len: usize,
) -> Vec<ExactRational> {
    let mut out = vec![ExactRational::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

impl TruncatedSeries {
    /// Series starting at `q^{base/24}` with the given coefficients; the
    /// number of coefficients is the truncation order.
    pub fn new(base: i64, coeffs: Vec<ExactRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(series_err("truncation order must be positive"));
        }
        Ok(Self { base, coeffs })
    }

    /// Integral-exponent series `Σ c_i q^i`.
    pub fn from_coeffs(coeffs: Vec<ExactRational>) -> Result<Self> {
        Self::new(0, coeffs)
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Result<Self> {
        let mut c: Vec<ExactRational> = coeffs.iter().take(order).map(|&x| x.into()).collect();
        c.resize(order, ExactRational::zero());
        Self::from_coeffs(c)
    }

    pub fn one(order: usize) -> Self {
        let mut c = vec![ExactRational::zero(); order.max(1)];
        c[0] = ExactRational::one();
        Self { base: 0, coeffs: c }
    }

    /// Base exponent in units of 1/24.
    pub fn base_exponent(&self) -> i64 {
        self.base
    }

    /// Number of stored coefficients (relative precision).
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn is_integral(&self) -> bool {
        self.base % EXPONENT_DENOMINATOR == 0
    }

    /// Fails unless every exponent is an integer.
    pub fn integral(self) -> Result<Self> {
        if self.is_integral() {
            Ok(self)
        } else {
            Err(series_err(format!(
                "series has fractional exponents (base {}/24)",
                self.base
            )))
        }
    }

    /// Integer exponent of the first stored coefficient.
    pub fn start(&self) -> Result<i64> {
        if self.is_integral() {
            Ok(self.base / EXPONENT_DENOMINATOR)
        } else {
            Err(series_err("series has fractional exponents"))
        }
    }

    /// Exponent up to which coefficients are known (exclusive).
    pub fn precision(&self) -> Result<i64> {
        Ok(self.start()? + self.coeffs.len() as i64)
    }

    /// Coefficient of `q^exp` for an integral series; zero below the start,
    /// `None` at or beyond the precision.
    pub fn coeff(&self, exp: i64) -> Option<ExactRational> {
        let start = self.start().ok()?;
        if exp < start {
            return Some(ExactRational::zero());
        }
        self.coeffs.get((exp - start) as usize).cloned()
    }

    /// Coefficients of `q^0 .. q^{len-1}`.
    pub fn dense(&self, len: usize) -> Result<Vec<ExactRational>> {
        (0..len as i64)
            .map(|e| {
                self.coeff(e).ok_or_else(|| {
                    series_err(format!("coefficient of q^{e} is beyond the truncation"))
                })
            })
            .collect()
    }

    /// Drops leading zero coefficients, moving the base up.
    pub fn normalized(&self) -> Self {
        let skip = self
            .coeffs
            .iter()
            .take_while(|c| c.is_zero())
            .count()
            .min(self.coeffs.len() - 1);
        Self {
            base: self.base + EXPONENT_DENOMINATOR * skip as i64,
            coeffs: self.coeffs[skip..].to_vec(),
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self {
            base: self.base,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order.max(1));
        Self {
            base: self.base,
            coeffs,
        }
    }

    /// Product; the order is the minimum of the inputs' orders.
    pub fn mul(&self, other: &Self) -> Self {
        let len = self.order().min(other.order());
        Self {
            base: self.base + other.base,
            coeffs: mul_truncated(&self.coeffs, &other.coeffs, len),
        }
    }

    fn combine(&self, other: &Self, sign: &ExactRational) -> Result<Self> {
        let gap = self.base - other.base;
        if gap % EXPONENT_DENOMINATOR != 0 {
            return Err(series_err(
                "cannot add series whose exponents differ by a fraction",
            ));
        }
        let base = self.base.min(other.base);
        let offset = |s: &Self| ((s.base - base) / EXPONENT_DENOMINATOR) as usize;
        let (oa, ob) = (offset(self), offset(other));
        let len = (oa + self.order()).min(ob + other.order());
        let mut coeffs = vec![ExactRational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            if oa + i < len {
                coeffs[oa + i] += c;
            }
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            if ob + i < len {
                coeffs[ob + i] += &(c * sign);
            }
        }
        Self::new(base, coeffs)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, &ExactRational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, &ExactRational::from(-1))
    }

    /// Multiplicative inverse; needs a nonzero leading coefficient.
    pub fn inverse(&self) -> Result<Self> {
        let a = &self.coeffs;
        let a0_inv = a[0]
            .recip()
            .ok_or_else(|| series_err("constant term is not invertible"))?;
        let len = a.len();
        let mut b: Vec<ExactRational> = Vec::with_capacity(len);
        b.push(a0_inv.clone());
        for n in 1..len {
            let mut acc = ExactRational::zero();
            for k in 1..=n {
                if !a[k].is_zero() {
                    acc += &a[k] * &b[n - k];
                }
            }
            b.push(-(acc * &a0_inv));
        }
        Ok(Self {
            base: -self.base,
            coeffs: b,
        })
    }

    /// `self^k` for any integer `k`; negative powers need an invertible
    /// leading coefficient.
    pub fn pow_int(&self, k: i64) -> Result<Self> {
        let base_series = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut square = base_series;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&square);
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square);
            }
        }
        Ok(result)
    }

    /// `(1 + u)^e` for a rational `e`, by the binomial series. The series
    /// must start at `q^0` with constant term exactly 1.
    pub fn pow_binomial(&self, e: &ExactRational) -> Result<Self> {
        if self.base != 0 || !self.coeffs[0].is_one() {
            return Err(series_err("fractional power needs constant term 1"));
        }
        let a = &self.coeffs;
        let len = a.len();
        // g = f^e satisfies f g' = e f' g, which gives
        // n g_n = Σ_{k=1}^{n} ((e+1)k - n) a_k g_{n-k}.
        let e1 = e + &ExactRational::one();
        let mut g: Vec<ExactRational> = Vec::with_capacity(len);
        g.push(ExactRational::one());
        for n in 1..len {
            let mut acc = ExactRational::zero();
            for k in 1..=n {
                if a[k].is_zero() {
                    continue;
                }
                let w = &e1 * &ExactRational::from(k as i64) - ExactRational::from(n as i64);
                acc += w * &a[k] * &g[n - k];
            }
            g.push(acc / ExactRational::from(n as i64));
        }
        Ok(Self { base: 0, coeffs: g })
    }

    /// `outer(inner)` for an integral `inner` with zero constant term, by
    /// Horner evaluation. `outer` must start at `q^0`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if self.base != 0 {
            return Err(series_err("outer series must start at exponent 0"));
        }
        let start = inner.start()?;
        if inner.coeff(0).is_none_or(|c| !c.is_zero()) || start < 0 {
            return Err(series_err("inner series must have zero constant term"));
        }
        let len = self.order().min(inner.precision()? as usize);
        let inner_dense = inner.dense(len)?;
        let mut acc = vec![ExactRational::zero(); len];
        for c in self.coeffs[..len].iter().rev() {
            acc = mul_truncated(&acc, &inner_dense, len);
            acc[0] += c;
        }
        Self::from_coeffs(acc)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^({}/24) * [", self.base)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(q^({}/24 + {}))", self.base, self.coeffs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::ratio(n, d)
    }

    #[test]
    fn geometric_identity() {
        let one_minus_q = TruncatedSeries::from_integers(&[1, -1], 10).unwrap();
        let geom = TruncatedSeries::from_integers(&[1; 10], 10).unwrap();
        assert_eq!(one_minus_q.mul(&geom), TruncatedSeries::one(10));
        assert_eq!(one_minus_q.inverse().unwrap(), geom);
        assert_eq!(one_minus_q.pow_int(-1).unwrap(), geom);
    }

    #[test]
    fn binomial_power_coefficients() {
        let one_plus_q = TruncatedSeries::from_integers(&[1, 1], 6).unwrap();
        let s = one_plus_q.pow_binomial(&q(-1, 4)).unwrap();
        // C(-1/4, k) computed directly
        let mut expected = Vec::new();
        let mut c = q(1, 1);
        for k in 0..6i64 {
            expected.push(c.clone());
            c = c * (q(-1, 4) - ExactRational::from(k)) / ExactRational::from(k + 1);
        }
        assert_eq!(s.coefficients(), &expected[..]);
        assert_eq!(s.coefficients()[1], q(-1, 4));
        assert_eq!(s.coefficients()[2], q(5, 32));
    }

    #[test]
    fn binomial_power_needs_unit_constant() {
        let s = TruncatedSeries::from_integers(&[2, 1], 4).unwrap();
        assert!(s.pow_binomial(&q(1, 2)).is_err());
        let z = TruncatedSeries::from_integers(&[0, 1], 4).unwrap();
        assert!(z.inverse().is_err());
        assert!(z.pow_int(-2).is_err());
    }

    #[test]
    fn fractional_bases_add_up() {
        let a = TruncatedSeries::new(12, vec![q(1, 1); 4]).unwrap();
        let b = TruncatedSeries::new(12, vec![q(1, 1); 4]).unwrap();
        let p = a.mul(&b);
        assert_eq!(p.base_exponent(), 24);
        assert!(p.is_integral());
        assert!(a.clone().integral().is_err());
        assert_eq!(p.coeff(1), Some(q(1, 1)));
        assert_eq!(p.coeff(0), Some(ExactRational::zero()));
        assert_eq!(p.coeff(5), None);
        let c = TruncatedSeries::new(0, vec![q(1, 1); 4]).unwrap();
        assert!(a.add(&c).is_err());
    }

    #[test]
    fn add_aligns_bases() {
        let a = TruncatedSeries::from_integers(&[1, 2, 3, 4], 4).unwrap();
        let b = TruncatedSeries::new(24, vec![q(1, 1); 5]).unwrap();
        let s = a.add(&b).unwrap();
        assert_eq!(
            s.dense(4).unwrap(),
            vec![q(1, 1), q(3, 1), q(4, 1), q(5, 1)]
        );
        let d = s.sub(&b).unwrap();
        assert_eq!(d, a);
    }

    #[test]
    fn compose_geometric() {
        // 1/(1-w) with w = 2q gives Σ 2^k q^k
        let geom = TruncatedSeries::from_integers(&[1; 8], 8).unwrap();
        let w = TruncatedSeries::from_integers(&[0, 2], 8).unwrap();
        let c = geom.compose(&w).unwrap();
        let expected: Vec<ExactRational> = (0..8).map(|k| ExactRational::from(1i64 << k)).collect();
        assert_eq!(c.coefficients(), &expected[..]);
        let bad = TruncatedSeries::from_integers(&[1, 2], 8).unwrap();
        assert!(geom.compose(&bad).is_err());
    }

    #[test]
    fn normalized_strips_zeros() {
        let s = TruncatedSeries::from_integers(&[0, 0, 3, 1], 5).unwrap();
        let n = s.normalized();
        assert_eq!(n.base_exponent(), 48);
        assert_eq!(n.order(), 3);
        assert_eq!(n.coeff(2), Some(q(3, 1)));
    }
}
