//! Truncated formal q-series over exact rationals: eta quotients, theta
//! series, Gauss hypergeometric series and expansion in a modular function.

mod eta;
mod hypergeometric;
mod modular;
mod series;

pub use eta::{
    eta_expansion, eta_quotient_expand, euler_product, theta_hexagonal, theta_sum_two_squares,
    EtaQuotientSpec,
};
pub use hypergeometric::{
    cubic_transformation_check, gauss_2f1, kummer_transformation_check, TransformationCheck,
};
pub use modular::{
    cross_derive, expand_in_modular_function, CrossDerivation, ModularPair, NamedSeries,
    DEFAULT_TRUNCATION,
};
pub use series::{TruncatedSeries, EXPONENT_DENOMINATOR};

use std::io::Write;

use crate::error::{Error, Result};

/// CSV dump `exponent,numerator,denominator` of an integral series.
pub fn write_series_csv<W: Write>(series: &TruncatedSeries, writer: W) -> Result<()> {
    let start = series.start()?;
    let err = |e: csv::Error| Error::InvalidArgument(format!("csv write failed: {e}"));
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["exponent", "numerator", "denominator"])
        .map_err(err)?;
    for (i, c) in series.coefficients().iter().enumerate() {
        w.write_record([
            (start + i as i64).to_string(),
            c.numer().to_string(),
            c.denom().to_string(),
        ])
        .map_err(err)?;
    }
    w.flush()
        .map_err(|e| Error::InvalidArgument(format!("csv write failed: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod properties {
    use super::*;
    use crate::exact::ExactRational;
    use proptest::prelude::*;

    const ORDER: usize = 8;

    fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-20i64..20, 1i64..6), ORDER - 1).prop_map(|tail| {
            let mut c = vec![ExactRational::one()];
            c.extend(tail.into_iter().map(|(n, d)| ExactRational::ratio(n, d)));
            TruncatedSeries::from_coeffs(c).unwrap()
        })
    }

    fn exponent() -> impl Strategy<Value = ExactRational> {
        (-6i64..6, 1i64..5).prop_map(|(n, d)| ExactRational::ratio(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mul_commutes_and_associates(a in unit_series(), b in unit_series(), c in unit_series()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn binomial_powers_add(a in unit_series(), e1 in exponent(), e2 in exponent()) {
            let lhs = a.pow_binomial(&(&e1 + &e2)).unwrap();
            let rhs = a.pow_binomial(&e1).unwrap().mul(&a.pow_binomial(&e2).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn integer_binomial_power_matches_pow_int(a in unit_series(), k in -4i64..5) {
            prop_assert_eq!(a.pow_binomial(&ExactRational::from(k)).unwrap(), a.pow_int(k).unwrap());
        }
    }

    #[test]
    fn csv_dump() {
        let s = theta_sum_two_squares(3).unwrap();
        let mut buf = Vec::new();
        write_series_csv(&s, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "exponent,numerator,denominator\n0,1,1\n1,4,1\n2,4,1\n"
        );
    }
}
