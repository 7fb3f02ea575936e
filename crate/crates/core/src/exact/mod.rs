//! Exact scalar arithmetic: reduced rationals, p-adic valuations and
//! congruences between rationals, and the classical integer sequences
//! (Pochhammer symbols, binomials, harmonic numbers) built on them.

mod functions;
mod rational;
mod valuation;

pub use functions::{
    binomial, factorial, fermat_quotient, harmonic, mod_inverse, rising_factorial,
};
pub use rational::ExactRational;
pub use valuation::{
    check_working_prime, congruent, congruent_mod, int_valuation, padic_valuation, CongruenceClaim,
    CongruenceResult, Valuation, ValuationValue,
};

#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    const SMALL_PRIMES: [u64; 25] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
        97,
    ];

    fn rational() -> impl Strategy<Value = ExactRational> {
        (-100_000i64..100_000, 1i64..100_000).prop_map(|(n, d)| ExactRational::ratio(n, d))
    }

    fn nonzero_rational() -> impl Strategy<Value = ExactRational> {
        rational().prop_filter("nonzero", |x| !x.is_zero())
    }

    fn prime() -> impl Strategy<Value = u64> {
        prop::sample::select(SMALL_PRIMES.to_vec())
    }

    proptest! {
        #[test]
        fn reciprocal_product_is_one(x in nonzero_rational()) {
            let y = &x * &x.recip().unwrap();
            prop_assert!(y.is_one());
            prop_assert!(y.denom() == &num_bigint::BigInt::from(1));
        }

        #[test]
        fn valuation_is_additive(x in nonzero_rational(), y in nonzero_rational(), p in prime()) {
            let vx = padic_valuation(&x, p).finite().unwrap();
            let vy = padic_valuation(&y, p).finite().unwrap();
            prop_assert_eq!(padic_valuation(&(&x * &y), p).finite(), Some(vx + vy));
        }

        #[test]
        fn valuation_is_ultrametric(x in rational(), y in rational(), p in prime()) {
            let vx = padic_valuation(&x, p).value;
            let vy = padic_valuation(&y, p).value;
            let vs = padic_valuation(&(&x + &y), p).value;
            prop_assert!(vs >= vx.min(vy));
            if vx != vy {
                prop_assert_eq!(vs, vx.min(vy));
            }
        }

        #[test]
        fn rising_factorial_splits(num in -40i64..40, den in 1i64..12, m in 0u64..50, n in 0u64..50) {
            let a = ExactRational::ratio(num, den);
            let shifted = &a + &ExactRational::from(m);
            prop_assert_eq!(
                rising_factorial(&a, m + n),
                rising_factorial(&a, m) * rising_factorial(&shifted, n)
            );
        }

        #[test]
        fn congruence_is_an_equivalence(
            a in -5000i64..5000, b in -5000i64..5000, c in -5000i64..5000,
            d in 1i64..200, p in prime().prop_filter("p > 3", |p| *p > 3), r in 1u32..4,
        ) {
            // Denominators coprime to p.
            prop_assume!(d % p as i64 != 0);
            let (x, y, z) = (ExactRational::ratio(a, d), ExactRational::ratio(b, d), ExactRational::ratio(c, d));
            let xy = congruent(&x, &y, p, r).unwrap().verdict;
            let yx = congruent(&y, &x, p, r).unwrap().verdict;
            let yz = congruent(&y, &z, p, r).unwrap().verdict;
            let xz = congruent(&x, &z, p, r).unwrap().verdict;
            prop_assert!(congruent(&x, &x, p, r).unwrap().verdict);
            prop_assert_eq!(xy, yx);
            if xy && yz {
                prop_assert!(xz);
            }
        }
    }
}
