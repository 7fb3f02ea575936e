use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ExactRational;
use crate::error::{Error, Result};
use crate::primes::is_prime;

/// Exponent of a prime in a rational number; `Infinite` only for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValuationValue {
    Finite(i64),
    Infinite,
}

impl ValuationValue {
    pub fn finite(self) -> Option<i64> {
        match self {
            ValuationValue::Finite(v) => Some(v),
            ValuationValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ValuationValue::Infinite)
    }

    pub fn at_least(self, r: i64) -> bool {
        match self {
            ValuationValue::Finite(v) => v >= r,
            ValuationValue::Infinite => true,
        }
    }
}

impl fmt::Display for ValuationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValuationValue::Finite(v) => write!(f, "{v}"),
            ValuationValue::Infinite => f.write_str("INF"),
        }
    }
}

// JSON form: an integer, or the string "INF".
impl Serialize for ValuationValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ValuationValue::Finite(v) => serializer.serialize_i64(*v),
            ValuationValue::Infinite => serializer.serialize_str("INF"),
        }
    }
}

impl<'de> Deserialize<'de> for ValuationValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(v) => Ok(ValuationValue::Finite(v)),
            Raw::Str(s) if s == "INF" => Ok(ValuationValue::Infinite),
            Raw::Str(s) => s
                .parse()
                .map(ValuationValue::Finite)
                .map_err(|_| serde::de::Error::custom(format!("bad valuation {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Valuation {
    pub prime: u64,
    pub value: ValuationValue,
}

impl Valuation {
    pub fn is_infinite(&self) -> bool {
        self.value.is_infinite()
    }

    pub fn finite(&self) -> Option<i64> {
        self.value.finite()
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.prime == other.prime).then(|| self.value.cmp(&other.value))
    }
}

/// Exponent of `p` in a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `v_p(x)`: valuation of the numerator minus that of the denominator.
pub fn padic_valuation(x: &ExactRational, p: u64) -> Valuation {
    debug_assert!(is_prime(p), "{p} is not prime");
    let value = if x.is_zero() {
        ValuationValue::Infinite
    } else {
        ValuationValue::Finite(int_valuation(x.numer(), p) - int_valuation(x.denom(), p))
    };
    Valuation { prime: p, value }
}

/// A claim `lhs ≡ rhs (mod p^r)` between rationals, read as
/// `v_p(lhs - rhs) >= r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceClaim {
    lhs: ExactRational,
    rhs: ExactRational,
    prime: u64,
    exponent: u32,
}

impl CongruenceClaim {
    pub fn new(lhs: ExactRational, rhs: ExactRational, prime: u64, exponent: u32) -> Result<Self> {
        check_working_prime(prime)?;
        if exponent == 0 {
            return Err(Error::InvalidExponent(exponent));
        }
        Ok(Self {
            lhs,
            rhs,
            prime,
            exponent,
        })
    }

    pub fn lhs(&self) -> &ExactRational {
        &self.lhs
    }

    pub fn rhs(&self) -> &ExactRational {
        &self.rhs
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }
}

/// Rejects composites and the primes 2 and 3.
pub fn check_working_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::PrimeTooSmall(p));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceResult {
    pub verdict: bool,
    pub valuation: ValuationValue,
}

impl CongruenceResult {
    /// Slack above the required exponent, `None` when the sides are equal.
    pub fn margin(&self, exponent: u32) -> Option<i64> {
        self.valuation.finite().map(|v| v - i64::from(exponent))
    }
}

pub fn congruent_mod(claim: &CongruenceClaim) -> CongruenceResult {
    let diff = &claim.lhs - &claim.rhs;
    let valuation = padic_valuation(&diff, claim.prime).value;
    CongruenceResult {
        verdict: valuation.at_least(i64::from(claim.exponent)),
        valuation,
    }
}

/// Builds and evaluates a claim in one step.
pub fn congruent(
    lhs: &ExactRational,
    rhs: &ExactRational,
    p: u64,
    r: u32,
) -> Result<CongruenceResult> {
    let claim = CongruenceClaim::new(lhs.clone(), rhs.clone(), p, r)?;
    Ok(congruent_mod(&claim))
}
