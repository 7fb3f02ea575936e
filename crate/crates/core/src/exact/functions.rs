use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::ExactRational;
use crate::error::{Error, Result};

/// Pochhammer symbol `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn rising_factorial(a: &ExactRational, n: u64) -> ExactRational {
    let mut acc = ExactRational::one();
    let mut term = a.clone();
    let one = ExactRational::one();
    for _ in 0..n {
        acc *= &term;
        term += &one;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Inverse of `a` modulo the prime `p`, in `[1, p-1]`.
pub fn mod_inverse(a: i64, p: u64) -> Result<u64> {
    let m = i128::from(p);
    let a_red = i128::from(a).mod_floor(&m);
    if a_red == 0 {
        return Err(Error::NotInvertible { a, p });
    }
    let ext = a_red.extended_gcd(&m);
    if ext.gcd != 1 {
        return Err(Error::NotInvertible { a, p });
    }
    Ok(ext.x.mod_floor(&m) as u64)
}

/// `H_n = 1 + 1/2 + ... + 1/n`.
pub fn harmonic(n: u64) -> ExactRational {
    // Sum over a common denominator, reduce once at the end.
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for k in 1..=n {
        num = num * k + &den;
        den *= k;
    }
    ExactRational::new(num, den).expect("positive denominator")
}

/// Fermat quotient `(a^(p-1) - 1) / p`.
pub fn fermat_quotient(a: i64, p: u64) -> Result<ExactRational> {
    if i128::from(a).mod_floor(&i128::from(p)) == 0 {
        return Err(Error::NotInvertible { a, p });
    }
    let power: BigInt = Pow::pow(BigInt::from(a), p - 1);
    ExactRational::new(power - 1, BigInt::from(p))
}
