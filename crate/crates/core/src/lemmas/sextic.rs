//! Proof objects for `t_{np} ≡ t_n (mod p²)`, `p = 6q + 1`.

use num_bigint::BigInt;
use num_traits::One;

use super::{require_residue, CheckBundle, ProofObject, ProofObjectValue};
use crate::error::{Error, Result};
use crate::exact::{
    binomial, congruent, factorial, fermat_quotient, harmonic, rising_factorial, CongruenceResult,
    ExactRational,
};
use crate::primes::is_prime;
use crate::sequences::{t_closed, t_shift_product};

fn guard(check: &'static str, p: u64) -> Result<u64> {
    require_residue(check, p, 6, 1)?;
    Ok((p - 1) / 6)
}

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::ratio(n, d)
}

fn int(n: impl Into<BigInt>) -> ExactRational {
    ExactRational::from(n.into())
}

/// `Π_{i=0}^{p-2} (1+i+np)²`.
fn shifted_factorial_squared(n: u64, p: u64) -> BigInt {
    let f = (0..p - 1).fold(BigInt::one(), |acc, i| acc * (1 + i + n * p));
    &f * &f
}

/// `G(n) = 6^{p-1} Π_{j≠(p-1)/6}(1+6j+6np) Π_{j≠(p-1)/3}(1+3j+3np)
///        / Π_{i=0}^{p-2}(1+i+np)²`.
pub fn g_value(n: u64, p: u64) -> Result<ProofObjectValue> {
    guard("G", p)?;
    let (sixth, third) = ((p - 1) / 6, (p - 1) / 3);
    let mut num = BigInt::from(6).pow(p as u32 - 1);
    for j in (0..p).filter(|&j| j != sixth) {
        num *= 1 + 6 * j + 6 * n * p;
    }
    for j in (0..p).filter(|&j| j != third) {
        num *= 1 + 3 * j + 3 * n * p;
    }
    Ok(ProofObjectValue {
        object: ProofObject::G,
        prime: p,
        n: Some(n),
        value: ExactRational::new(num, shifted_factorial_squared(n, p))?,
    })
}

/// `G(n) ≡ 1` and `G(n) ≡ G(0) (mod p²)` for `0 <= n <= n_max`, plus
/// `G(0) = t_p / t_1`.
pub fn g_independence_check(p: u64, n_max: u64) -> Result<CheckBundle> {
    let g0 = g_value(0, p)?.value;
    let mut b = CheckBundle::new("G", p);
    b.identity("G(0)=t_p/t_1", Some(0), &g0, &(t_closed(p) / t_closed(1)));
    for n in 0..=n_max {
        let g = g_value(n, p)?.value;
        b.congruence("G(n)≡1", Some(n), &g, &ExactRational::one(), 2)?;
        if n > 0 {
            b.congruence("G(n)≡G(0)", Some(n), &g, &g0, 2)?;
        }
    }
    Ok(b)
}

/// `4^p (1/6)_p ≡ (2/3)_p (mod p³)`.
pub fn lemma51_check(p: u64) -> Result<CongruenceResult> {
    guard("lemma51", p)?;
    let lhs = int(BigInt::one() << (2 * p)) * rising_factorial(&q(1, 6), p);
    let rhs = rising_factorial(&q(2, 3), p);
    congruent(&lhs, &rhs, p, 3)
}

/// `M(q) = Π_{k=1}^{4q} (12q+1+6k)` and
/// `N(q) = Π_{k=1}^{q} (3q+1/2-(6k-3)/2)(3q+1/2+(6k-3)/2)`.
pub fn mn_values(quotient: u64) -> Result<(ProofObjectValue, ProofObjectValue)> {
    if quotient == 0 {
        return Err(Error::InvalidArgument("q must be positive".into()));
    }
    let p = 6 * quotient + 1;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let m: ExactRational = (1..=4 * quotient)
        .map(|k| int(12 * quotient + 1 + 6 * k))
        .product();
    let centre = int(3 * quotient) + q(1, 2);
    let n: ExactRational = (1..=quotient)
        .map(|k| {
            let half = q(6 * k as i64 - 3, 2);
            (&centre - &half) * (&centre + &half)
        })
        .product();
    let wrap = |object, value| ProofObjectValue {
        object,
        prime: p,
        n: None,
        value,
    };
    Ok((wrap(ProofObject::M, m), wrap(ProofObject::N, n)))
}

/// Odd-square product `Π_{k=1}^{count} (2k-1)²`.
fn odd_squares(count: u64) -> ExactRational {
    (1..=count)
        .map(|k| int((2 * k - 1) * (2 * k - 1)))
        .product()
}

/// `M(q) ≡ 3^{4q} Π_{k=1}^{2q}(2k-1)²` and
/// `N(q) ≡ (3/2)^{2q} Π_{k=1}^{q}(-(2k-1)²)` modulo `p²`.
pub fn mn_check(p: u64) -> Result<CheckBundle> {
    let quotient = guard("MN", p)?;
    let (m, n) = mn_values(quotient)?;
    let qi = quotient as i32;
    let mut b = CheckBundle::new("MN", p);

    let paired: ExactRational = (1..=2 * quotient)
        .map(|k| {
            let (c, d) = (24 * quotient + 4, 6 * k - 3);
            int(c - d) * int(c + d)
        })
        .product();
    b.identity("M=paired", None, &m.value, &paired);

    let m_res = int(3).pow(4 * qi) * odd_squares(2 * quotient);
    b.congruence("M≡3^{4q}Π(2k-1)²", None, &m.value, &m_res, 2)?;

    let sign = if quotient % 2 == 0 { int(1) } else { int(-1) };
    let n_res = q(3, 2).pow(2 * qi) * sign * odd_squares(quotient);
    b.congruence("N≡(3/2)^{2q}Π(-(2k-1)²)", None, &n.value, &n_res, 2)?;
    Ok(b)
}

/// Harmonic-number congruences mod `p` behind the lemma for `t_n`.
pub fn harmonic_identities_check(p: u64) -> Result<CheckBundle> {
    let quotient = guard("harmonic", p)?;
    let h_q = harmonic(quotient);
    let h_2q = harmonic(2 * quotient);
    let h_3q = harmonic(3 * quotient);
    let h_6q = harmonic(6 * quotient);
    let zero = ExactRational::zero();
    let fq = fermat_quotient(2, p)?;

    let mut b = CheckBundle::new("harmonic", p);
    b.congruence("H6q≡0", None, &h_6q, &zero, 1)?;
    b.congruence("H3q≡-H2q+Hq", None, &h_3q, &(&h_q - &h_2q), 1)?;
    b.congruence(
        "fermat≡H6q-H3q/2",
        None,
        &fq,
        &(&h_6q - &(&h_3q * &q(1, 2))),
        1,
    )?;
    b.congruence("-H3q+Hq-H2q≡0", None, &(&(&h_q - &h_3q) - &h_2q), &zero, 1)?;
    // 2^{6q} = 2^{p-1}, so this is 2 · fermat_quotient(2, p)
    b.congruence(
        "2(2^{6q}-1)/p≡H2q-Hq",
        None,
        &(&fq * &int(2)),
        &(&h_2q - &h_q),
        1,
    )?;
    Ok(b)
}

/// `1/i + 1/(3q+1-i) ≡ 1/i - 2/(2i-1) (mod p)` for `1 <= i <= q`.
pub fn pairing_identity_check(i: u64, p: u64) -> Result<CongruenceResult> {
    let quotient = guard("pairing", p)?;
    if i == 0 || i > quotient {
        return Err(Error::InvalidArgument(format!(
            "pairing index must lie in [1, {quotient}], got {i}"
        )));
    }
    let i_r = int(i);
    let lhs = i_r.recip().unwrap() + int(3 * quotient + 1 - i).recip().unwrap();
    let rhs = i_r.recip().unwrap() - q(2, 2 * i as i64 - 1);
    congruent(&lhs, &rhs, p, 1)
}

/// The chain `t_p ≡ 27^p (2/3)_p (1/3)_p / (p!)² = C(3p,p)C(2p,p) ≡ 6`.
pub fn eq5051_chain_check(p: u64) -> Result<CheckBundle> {
    guard("eq5051", p)?;
    let tp = t_closed(p);
    let pf = int(factorial(p));
    let cubic = int(BigInt::from(27).pow(p as u32))
        * rising_factorial(&q(2, 3), p)
        * rising_factorial(&q(1, 3), p)
        / pf.square();
    let binoms = int(binomial(3 * p, p) * binomial(2 * p, p));
    let six = int(6);
    let mut b = CheckBundle::new("eq5051", p);
    b.congruence("t_p≡27^p(2/3)_p(1/3)_p/(p!)²", None, &tp, &cubic, 2)?;
    b.identity(
        "27^p(2/3)_p(1/3)_p/(p!)²=C(3p,p)C(2p,p)",
        None,
        &cubic,
        &binoms,
    );
    b.congruence("C(3p,p)C(2p,p)≡6", None, &binoms, &six, 3)?;
    b.congruence("t_p≡6", None, &tp, &six, 2)?;
    Ok(b)
}

/// The induction step for `t`: the `p`-step multiplier at `np` equals
/// `6(1+6n)(1+3n)/(1+n)² · G(n)`. As for `s`, the reduction mod `p²` is
/// out of scope when `p | n+1`.
pub fn t_step_check(n: u64, p: u64) -> Result<CheckBundle> {
    let g = g_value(n, p)?.value;
    let multiplier = t_shift_product(n * p, p);
    let n = n as i64;
    let one_step = q(6 * (1 + 6 * n) * (1 + 3 * n), (1 + n) * (1 + n));
    let mut b = CheckBundle::new("t_step", p);
    b.identity(
        "multiplier=one_step·G(n)",
        Some(n as u64),
        &multiplier,
        &(&one_step * &g),
    );
    let in_scope = !(n as u64 + 1).is_multiple_of(p);
    b.congruence_scoped(
        "multiplier≡one_step",
        Some(n as u64),
        &multiplier,
        &one_step,
        2,
        in_scope,
    )?;
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{padic_valuation, ValuationValue};

    const PRIMES: [u64; 11] = [7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97];

    #[test]
    fn g_examples() {
        let g0 = g_value(0, 7).unwrap().value;
        assert!(padic_valuation(&(&g0 - &int(1)), 7).value.at_least(2));
        let g2 = g_value(2, 7).unwrap().value;
        assert!(padic_valuation(&(&g2 - &g0), 7).value.at_least(2));
        let g13 = g_value(0, 13).unwrap().value;
        assert!(padic_valuation(&(&g13 - &int(1)), 13).value.at_least(2));
        assert!(g_independence_check(19, 5).unwrap().verdict());
    }

    #[test]
    fn lemma51_examples() {
        assert!(lemma51_check(7).unwrap().verdict);
        assert!(lemma51_check(13).unwrap().verdict);
        assert!(matches!(
            lemma51_check(11),
            Err(Error::ResidueClass { p: 11, .. })
        ));
    }

    #[test]
    fn mn_examples() {
        let (m, n) = mn_values(1).unwrap();
        assert_eq!(m.value, int(19 * 25 * 31 * 37));
        assert_eq!(n.value, int(10));
        // M(1) ≡ 81 · 9 (mod 49)
        assert!(congruent(&m.value, &int(729), 7, 2).unwrap().verdict);
        // 10 + 9/4 = 49/4
        assert!(congruent(&n.value, &q(-9, 4), 7, 2).unwrap().verdict);
        assert!(mn_check(7).unwrap().verdict());
        assert!(mn_check(13).unwrap().verdict());
        assert_eq!(mn_values(4).unwrap_err(), Error::NotPrime(25));
    }

    #[test]
    fn harmonic_examples() {
        let b = harmonic_identities_check(7).unwrap();
        assert!(b.verdict(), "{b:?}");
        assert_eq!(
            b.link("H6q≡0").unwrap().valuation,
            ValuationValue::Finite(2)
        );
        // H_3 - (-H_2 + H_1) = 11/6 + 1/2 = 7/3
        assert_eq!(
            b.link("H3q≡-H2q+Hq").unwrap().valuation,
            ValuationValue::Finite(1)
        );
        assert_eq!(harmonic(6) - harmonic(3) * q(1, 2), q(23, 15));
        assert!(harmonic_identities_check(13).unwrap().verdict());
        assert!(harmonic_identities_check(11).is_err());
    }

    #[test]
    fn pairing_examples() {
        let r = pairing_identity_check(1, 7).unwrap();
        assert!(r.verdict);
        assert_eq!(r.valuation, ValuationValue::Finite(1));
        assert!(pairing_identity_check(1, 13).unwrap().verdict);
        assert!(pairing_identity_check(2, 13).unwrap().verdict);
        assert!(pairing_identity_check(3, 13).is_err());
        assert!(pairing_identity_check(0, 13).is_err());
    }

    #[test]
    fn eq5051_examples() {
        let b = eq5051_chain_check(7).unwrap();
        assert!(b.verdict(), "{b:?}");
        assert!(b.link("C(3p,p)C(2p,p)≡6").unwrap().valuation.at_least(3));
        assert!(eq5051_chain_check(13).unwrap().verdict());
    }

    #[test]
    fn step_identity() {
        for p in [7, 13] {
            for n in 0..4 {
                assert!(t_step_check(n, p).unwrap().verdict());
            }
        }
    }

    #[test]
    fn all_checks_pass_up_to_101() {
        for p in PRIMES {
            let qt = (p - 1) / 6;
            assert!(lemma51_check(p).unwrap().verdict, "lemma51 p={p}");
            assert!(mn_check(p).unwrap().verdict(), "MN p={p}");
            assert!(harmonic_identities_check(p).unwrap().verdict(), "H p={p}");
            assert!(eq5051_chain_check(p).unwrap().verdict(), "eq5051 p={p}");
            for i in 1..=qt {
                assert!(
                    pairing_identity_check(i, p).unwrap().verdict,
                    "pair p={p} i={i}"
                );
            }
        }
    }
}
