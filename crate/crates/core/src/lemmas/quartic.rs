//! Proof objects for `s_{np} ≡ s_n (mod p²)`, `p ≡ 1 (mod 4)`.

use num_bigint::BigInt;
use num_traits::One;

use super::{require_residue, shifted_product, CheckBundle, ProofObject, ProofObjectValue};
use crate::error::Result;
use crate::exact::{binomial, congruent, rising_factorial, CongruenceResult, ExactRational};
use crate::sequences::{s_closed, s_shift_product, u};

fn guard(check: &'static str, p: u64) -> Result<()> {
    require_residue(check, p, 4, 1)
}

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::ratio(n, d)
}

fn int(n: impl Into<BigInt>) -> ExactRational {
    ExactRational::from(n.into())
}

/// `(3/4)_p ≡ 3 (1/4)_p (mod p³)`.
pub fn lemma20_check(p: u64) -> Result<CongruenceResult> {
    guard("lemma20", p)?;
    let lhs = rising_factorial(&q(3, 4), p);
    let rhs = int(3) * rising_factorial(&q(1, 4), p);
    congruent(&lhs, &rhs, p, 3)
}

/// `(L(p), R(p))`: the Pochhammer products `(3/4)_p` and `(1/4)_p` with the
/// factors at `k = (3p-3)/4` and `k = (p-1)/4` (both divisible by `p`)
/// left out.
pub fn eq22_products(p: u64) -> Result<(ProofObjectValue, ProofObjectValue)> {
    guard("eq22", p)?;
    let skip_l = (3 * p - 3) / 4;
    let skip_r = (p - 1) / 4;
    let l = shifted_product(&q(3, 4), (0..p).filter(|&k| k != skip_l));
    let r = shifted_product(&q(1, 4), (0..p).filter(|&k| k != skip_r));
    Ok((
        ProofObjectValue {
            object: ProofObject::UpperL,
            prime: p,
            n: None,
            value: l,
        },
        ProofObjectValue {
            object: ProofObject::UpperR,
            prime: p,
            n: None,
            value: r,
        },
    ))
}

/// `Π_{k=1}^{(p-1)/4} (-k²)`, the value of the paired outer factors.
fn paired_squares(p: u64) -> ExactRational {
    (1..=(p - 1) / 4).map(|k| -int(k * k)).product()
}

/// `L ≡ R (mod p²)`, the reductions of each side to `l(p)`, `r(p)`, and the
/// re-insertion of the removed factors.
pub fn eq22_check(p: u64) -> Result<CheckBundle> {
    let (l_big, r_big) = eq22_products(p)?;
    let (l_small, r_small) = eq23_products(p)?;
    let pairs = paired_squares(p);
    let mut b = CheckBundle::new("eq22", p);
    b.congruence("L≡R", None, &l_big.value, &r_big.value, 2)?;
    b.congruence(
        "L≡pairs·l",
        None,
        &l_big.value,
        &(&pairs * &l_small.value),
        2,
    )?;
    b.congruence(
        "R≡pairs·r",
        None,
        &r_big.value,
        &(&pairs * &r_small.value),
        2,
    )?;
    let p_int = p as i64;
    b.identity(
        "L·3p/4=(3/4)_p",
        None,
        &(&l_big.value * &q(3 * p_int, 4)),
        &rising_factorial(&q(3, 4), p),
    );
    b.identity(
        "R·p/4=(1/4)_p",
        None,
        &(&r_big.value * &q(p_int, 4)),
        &rising_factorial(&q(1, 4), p),
    );
    Ok(b)
}

/// `(l(p), r(p))` with `l = Π_{k=0}^{(p-3)/2}(3/4+k)` and
/// `r = Π_{k=(p+1)/2}^{p-1}(1/4+k)`.
pub fn eq23_products(p: u64) -> Result<(ProofObjectValue, ProofObjectValue)> {
    guard("eq23", p)?;
    let l = shifted_product(&q(3, 4), 0..=(p - 3) / 2);
    let r = shifted_product(&q(1, 4), p.div_ceil(2)..p);
    Ok((
        ProofObjectValue {
            object: ProofObject::LowerL,
            prime: p,
            n: None,
            value: l,
        },
        ProofObjectValue {
            object: ProofObject::LowerR,
            prime: p,
            n: None,
            value: r,
        },
    ))
}

/// `Π_{k=0}^{(p-5)/4} (-1/4 - k - k²)`, the common residue of `l` and `r`.
pub fn eq23_paired(p: u64) -> Result<ExactRational> {
    guard("eq23", p)?;
    Ok((0..=(p - 5) / 4)
        .map(|k| q(-1, 4) - int(k) - int(k * k))
        .product())
}

pub fn eq23_check(p: u64) -> Result<CheckBundle> {
    let (l, r) = eq23_products(p)?;
    let paired = eq23_paired(p)?;
    let mut b = CheckBundle::new("eq23", p);
    b.congruence("l≡r", None, &l.value, &r.value, 2)?;
    b.congruence("l≡paired", None, &l.value, &paired, 2)?;
    b.congruence("r≡paired", None, &r.value, &paired, 2)?;
    Ok(b)
}

/// Integer products `Π_{k≠(3p-3)/4} (3+4k)` and `Π_{k≠(p-1)/4} (1+4k)`.
pub fn corollary24_products(p: u64) -> Result<(BigInt, BigInt)> {
    guard("corollary24", p)?;
    let skip_l = (3 * p - 3) / 4;
    let skip_r = (p - 1) / 4;
    let lhs = (0..p)
        .filter(|&k| k != skip_l)
        .fold(BigInt::one(), |acc, k| acc * (3 + 4 * k));
    let rhs = (0..p)
        .filter(|&k| k != skip_r)
        .fold(BigInt::one(), |acc, k| acc * (1 + 4 * k));
    Ok((lhs, rhs))
}

pub fn corollary24_check(p: u64) -> Result<CongruenceResult> {
    let (lhs, rhs) = corollary24_products(p)?;
    congruent(&int(lhs), &int(rhs), p, 2)
}

/// Index `j = (p-1)/4` at which `1 + 4j + 4np` is divisible by `p`.
fn quarter(p: u64) -> u64 {
    (p - 1) / 4
}

/// `Π_{i=0}^{p-2} (1+i+np)²`.
fn shifted_factorial_squared(n: u64, p: u64) -> BigInt {
    let f = (0..p - 1).fold(BigInt::one(), |acc, i| acc * (1 + i + n * p));
    &f * &f
}

/// `Π_{j≠(p-1)/4} (1+4j+4np)²`.
fn f_numerator(n: u64, p: u64) -> BigInt {
    let skip = quarter(p);
    let f = (0..p)
        .filter(|&j| j != skip)
        .fold(BigInt::one(), |acc, j| acc * (1 + 4 * j + 4 * n * p));
    &f * &f
}

/// `F(n) = 4^{p-1} Π_{j≠(p-1)/4}(1+4j+4np)² / Π_{i=0}^{p-2}(1+i+np)²`.
pub fn f_value(n: u64, p: u64) -> Result<ProofObjectValue> {
    guard("F", p)?;
    let num = (BigInt::one() << (2 * (p - 1))) * f_numerator(n, p);
    let value = ExactRational::new(num, shifted_factorial_squared(n, p))?;
    Ok(ProofObjectValue {
        object: ProofObject::F,
        prime: p,
        n: Some(n),
        value,
    })
}

/// `F(n) ≡ 1` and `F(n) ≡ F(0) (mod p²)` for `0 <= n <= n_max`, plus the
/// identity `F(0) = s_p / s_1`.
pub fn f_independence_check(p: u64, n_max: u64) -> Result<CheckBundle> {
    let f0 = f_value(0, p)?.value;
    let mut b = CheckBundle::new("F", p);
    b.identity("F(0)=s_p/s_1", Some(0), &f0, &(s_closed(p) / s_closed(1)));
    for n in 0..=n_max {
        let f = f_value(n, p)?.value;
        b.congruence("F(n)≡1", Some(n), &f, &ExactRational::one(), 2)?;
        if n > 0 {
            b.congruence("F(n)≡F(0)", Some(n), &f, &f0, 2)?;
        }
    }
    Ok(b)
}

/// `(A(n), B(n))`: the numerator of `F(n)` split into the factors with
/// `j < (p+1)/2` (paired around `(p-1)/4`) and the rest (paired around
/// `3p/4`).
pub fn ab_split(n: u64, p: u64) -> Result<(ProofObjectValue, ProofObjectValue)> {
    guard("AB", p)?;
    let m = quarter(p);
    let np4 = 4 * n * p;
    let mut a = BigInt::one();
    for j in 1..=m {
        let lo = BigInt::from(1 + 4 * (m - j) + np4);
        let hi = BigInt::from(1 + 4 * (m + j) + np4);
        a *= &lo * &lo * &hi * &hi;
    }
    let mut b = BigInt::one();
    for k in 1..=m {
        let centre = np4 + 3 * p;
        let lo = BigInt::from(centre - (4 * k - 2));
        let hi = BigInt::from(centre + (4 * k - 2));
        b *= &lo * &lo * &hi * &hi;
    }
    let wrap = |object, value: BigInt| ProofObjectValue {
        object,
        prime: p,
        n: Some(n),
        value: int(value),
    };
    Ok((wrap(ProofObject::A, a), wrap(ProofObject::B, b)))
}

/// Residues of `A(n)` and `B(n)` modulo `p²`, independent of `n`:
/// `Π 256 j⁴` and `Π (4k-2)⁴ = Π (-4+16k-16k²)²`.
fn ab_residues(p: u64) -> (ExactRational, ExactRational) {
    let m = quarter(p);
    let a: ExactRational = (1..=m).map(|j| int(256 * j.pow(4))).product();
    let b: ExactRational = (1..=m)
        .map(|k| {
            let c = -4 + 16 * k as i64 - 16 * (k * k) as i64;
            int(c * c)
        })
        .product();
    (a, b)
}

/// The split of the `F(n)` numerator and of its denominator into pieces
/// whose residues mod `p²` do not depend on `n`.
pub fn ab_check(n: u64, p: u64) -> Result<CheckBundle> {
    let (a, b_val) = ab_split(n, p)?;
    let (a0, b0) = ab_split(0, p)?;
    let (a_res, b_res) = ab_residues(p);
    let mut b = CheckBundle::new("AB", p);
    b.identity(
        "A·B=numerator",
        Some(n),
        &(&a.value * &b_val.value),
        &int(f_numerator(n, p)),
    );
    b.congruence("A≡Π256j⁴", Some(n), &a.value, &a_res, 2)?;
    b.congruence("B≡Π(4k-2)⁴", Some(n), &b_val.value, &b_res, 2)?;
    b.congruence("A(n)≡A(0)", Some(n), &a.value, &a0.value, 2)?;
    b.congruence("B(n)≡B(0)", Some(n), &b_val.value, &b0.value, 2)?;
    let den_res: ExactRational = (1..=(p - 1) / 2)
        .map(|k| int(k * k) * int((p - k) * (p - k)))
        .product();
    b.congruence(
        "denominator≡Πk²(p-k)²",
        Some(n),
        &int(shifted_factorial_squared(n, p)),
        &den_res,
        2,
    )?;
    Ok(b)
}

/// The chain `s_p ≡ u_p/3 = C(4p,2p)C(2p,p)/3 ≡ 4 (mod p²)`.
pub fn lemma32_chain_check(p: u64) -> Result<CheckBundle> {
    guard("lemma32", p)?;
    let sp = s_closed(p);
    let up = u(p);
    let binoms = int(binomial(4 * p, 2 * p) * binomial(2 * p, p));
    let third = q(1, 3);
    let four = int(4);
    let mut b = CheckBundle::new("lemma32", p);
    b.congruence("s_p≡u_p/3", None, &sp, &(&up * &third), 2)?;
    b.identity("u_p=C(4p,2p)C(2p,p)", None, &up, &binoms);
    b.congruence("C(4p,2p)C(2p,p)/3≡4", None, &(&binoms * &third), &four, 2)?;
    b.congruence("s_p≡4", None, &sp, &four, 2)?;
    Ok(b)
}

/// The induction step: the `p`-step multiplier of `s` at `np` is
/// `4((1+4n)/(1+n))² F(n)`, hence `≡ 4((1+4n)/(1+n))² (mod p²)`.
///
/// When `p | n+1` the one-step ratio has valuation `-2` and the
/// congruence only follows mod `p⁰`; that link is reported out of scope.
pub fn s_step_check(n: u64, p: u64) -> Result<CheckBundle> {
    let f = f_value(n, p)?.value;
    let multiplier = s_shift_product(n * p, p);
    let one_step = int(4) * q(1 + 4 * n as i64, 1 + n as i64).square();
    let mut b = CheckBundle::new("s_step", p);
    b.identity(
        "multiplier=one_step·F(n)",
        Some(n),
        &multiplier,
        &(&one_step * &f),
    );
    let in_scope = !(n + 1).is_multiple_of(p);
    b.congruence_scoped(
        "multiplier≡one_step",
        Some(n),
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
    use crate::error::Error;
    use crate::exact::{padic_valuation, ValuationValue};

    const PRIMES: [u64; 12] = [5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101];

    #[test]
    fn lemma20_examples() {
        let r = lemma20_check(5).unwrap();
        assert!(r.verdict);
        assert_eq!(r.valuation, ValuationValue::Finite(3));
        // difference 65835/1024 - 29835/1024 = 1125/32
        assert_eq!(
            rising_factorial(&q(3, 4), 5) - int(3) * rising_factorial(&q(1, 4), 5),
            q(1125, 32)
        );
        assert!(lemma20_check(13).unwrap().verdict);
        assert!(matches!(
            lemma20_check(7),
            Err(Error::ResidueClass { p: 7, .. })
        ));
    }

    #[test]
    fn eq22_examples() {
        let (l, r) = eq22_products(5).unwrap();
        assert_eq!(l.value, q(4389, 256));
        assert_eq!(r.value, q(1989, 256));
        assert_eq!(
            padic_valuation(&(&l.value - &r.value), 5).value,
            ValuationValue::Finite(2)
        );
        let b = eq22_check(13).unwrap();
        assert!(b.verdict(), "{b:?}");
    }

    #[test]
    fn eq23_examples() {
        let (l, r) = eq23_products(5).unwrap();
        assert_eq!(l.value, q(21, 16));
        assert_eq!(r.value, q(221, 16));
        assert_eq!(eq23_paired(5).unwrap(), q(-1, 4));
        let b = eq23_check(5).unwrap();
        assert_eq!(b.link("l≡r").unwrap().valuation, ValuationValue::Finite(2));
        assert!(b.verdict());
        assert!(eq23_check(13).unwrap().verdict());
    }

    #[test]
    fn corollary24_examples() {
        let (lhs, rhs) = corollary24_products(5).unwrap();
        assert_eq!(lhs, BigInt::from(4389));
        assert_eq!(rhs, BigInt::from(1989));
        assert!(corollary24_check(5).unwrap().verdict);
        assert!(corollary24_check(13).unwrap().verdict);
        // scaling: lhs / 4^{p-1} = L(p)
        for p in [5, 13, 17] {
            let (lhs, _) = corollary24_products(p).unwrap();
            let (l, _) = eq22_products(p).unwrap();
            assert_eq!(int(lhs) / int(BigInt::from(4).pow(p as u32 - 1)), l.value);
        }
    }

    #[test]
    fn f_examples() {
        let f0 = f_value(0, 5).unwrap().value;
        assert!(padic_valuation(&(&f0 - &ExactRational::one()), 5)
            .value
            .at_least(2));
        let f1 = f_value(1, 5).unwrap().value;
        assert!(padic_valuation(&(&f1 - &f0), 5).value.at_least(2));
        // F(0) = s_p / s_1 exactly
        assert_eq!(f0, s_closed(5) / int(4));
        assert!(f_independence_check(13, 4).unwrap().verdict());
    }

    #[test]
    fn ab_examples() {
        let (a0, b0) = ab_split(0, 5).unwrap();
        assert_eq!(&a0.value * &b0.value, int(f_numerator(0, 5)));
        // B(0) = 13² 17² = 48841
        assert_eq!(b0.value, int(48841));
        let (a3, b3) = ab_split(3, 5).unwrap();
        assert!(padic_valuation(&(&a3.value - &a0.value), 5)
            .value
            .at_least(2));
        assert!(padic_valuation(&(&b3.value - &b0.value), 5)
            .value
            .at_least(2));
        for p in [5, 13, 17, 29] {
            for n in 0..4 {
                assert!(ab_check(n, p).unwrap().verdict(), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn unsquared_b_residue_does_not_hold() {
        // Π(-4+16k-16k²) without the square: -4 at p = 5, while B(0) ≡ 16.
        let (_, b0) = ab_split(0, 5).unwrap();
        let unsquared = int(-4);
        assert!(!congruent(&b0.value, &unsquared, 5, 2).unwrap().verdict);
        assert!(congruent(&b0.value, &int(16), 5, 2).unwrap().verdict);
    }

    #[test]
    fn lemma32_examples() {
        let b = lemma32_chain_check(5).unwrap();
        assert!(b.verdict());
        // s_5 - 15519504 = -8486400 = -25 · 339456
        let binoms = int(binomial(20, 10) * binomial(10, 5)) * q(1, 3);
        assert_eq!(binoms, int(15519504));
        assert_eq!(s_closed(5) - &binoms, int(-8486400));
        assert!(lemma32_chain_check(13).unwrap().verdict());
    }

    #[test]
    fn step_identity() {
        for p in [5, 13] {
            for n in 0..4 {
                assert!(s_step_check(n, p).unwrap().verdict());
            }
        }
    }

    #[test]
    fn step_reduction_degenerates_when_p_divides_n_plus_one() {
        let b = s_step_check(4, 5).unwrap();
        let link = b.link("multiplier≡one_step").unwrap();
        assert!(!link.in_scope);
        assert!(!link.verdict);
        assert_eq!(link.valuation, ValuationValue::Finite(0));
        assert!(b.link("multiplier=one_step·F(n)").unwrap().verdict);
        assert!(b.verdict());
    }

    #[test]
    fn all_checks_pass_up_to_101() {
        for p in PRIMES {
            assert!(lemma20_check(p).unwrap().verdict, "lemma20 p={p}");
            assert!(eq22_check(p).unwrap().verdict(), "eq22 p={p}");
            assert!(eq23_check(p).unwrap().verdict(), "eq23 p={p}");
            assert!(corollary24_check(p).unwrap().verdict, "cor24 p={p}");
            assert!(lemma32_chain_check(p).unwrap().verdict(), "lemma32 p={p}");
        }
    }

    #[test]
    fn residue_guards() {
        for p in [7u64, 11, 19] {
            assert!(eq22_products(p).is_err());
            assert!(eq23_products(p).is_err());
            assert!(corollary24_check(p).is_err());
            assert!(f_value(0, p).is_err());
            assert!(ab_split(0, p).is_err());
            assert!(lemma32_chain_check(p).is_err());
        }
    }
}
