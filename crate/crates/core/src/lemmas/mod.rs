//! Each intermediate object of the two supercongruence proofs as a
//! standalone exact function, with the congruence asserted about it.
//!
//! Objects for the `s_n` proof need `p ≡ 1 (mod 4)` ([`quartic`]); those
//! for the `t_n` proof need `p = 6q + 1` ([`sextic`]). Calling either
//! family outside its residue class is an error, never a silent skip.

pub mod quartic;
pub mod sextic;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    check_working_prime, congruent, padic_valuation, ExactRational, ValuationValue,
};
use crate::report::Record;

pub use quartic::{
    ab_check, ab_split, corollary24_check, corollary24_products, eq22_check, eq22_products,
    eq23_check, eq23_paired, eq23_products, f_independence_check, f_value, lemma20_check,
    lemma32_chain_check, s_step_check,
};
pub use sextic::{
    eq5051_chain_check, g_independence_check, g_value, harmonic_identities_check, lemma51_check,
    mn_check, mn_values, pairing_identity_check, t_step_check,
};

/// Named intermediate products of the proofs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ProofObject {
    /// `L(p)`: `(3/4)_p` with its `p`-divisible factor removed.
    UpperL,
    /// `R(p)`: `(1/4)_p` with its `p`-divisible factor removed.
    UpperR,
    /// `l(p) = Π_{k=0}^{(p-3)/2} (3/4 + k)`.
    LowerL,
    /// `r(p) = Π_{k=(p+1)/2}^{p-1} (1/4 + k)`.
    LowerR,
    F,
    A,
    B,
    G,
    M,
    N,
}

impl ProofObject {
    pub fn label(self) -> &'static str {
        match self {
            ProofObject::UpperL => "L",
            ProofObject::UpperR => "R",
            ProofObject::LowerL => "l",
            ProofObject::LowerR => "r",
            ProofObject::F => "F",
            ProofObject::A => "A",
            ProofObject::B => "B",
            ProofObject::G => "G",
            ProofObject::M => "M",
            ProofObject::N => "N",
        }
    }
}

impl fmt::Display for ProofObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofObjectValue {
    pub object: ProofObject,
    pub prime: u64,
    pub n: Option<u64>,
    pub value: ExactRational,
}

/// One step of a proof chain: a congruence modulo `p^r`, or an exact
/// identity when `exponent` is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Link {
    pub label: String,
    pub n: Option<u64>,
    pub exponent: Option<u32>,
    pub valuation: ValuationValue,
    pub verdict: bool,
    /// False when the link is evaluated where its hypothesis fails; such
    /// links are reported but do not decide the bundle.
    pub in_scope: bool,
}

/// All links checked for one `(check, p)`; passes iff every link does.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckBundle {
    pub check: &'static str,
    pub prime: u64,
    pub links: Vec<Link>,
}

impl CheckBundle {
    fn new(check: &'static str, prime: u64) -> Self {
        Self {
            check,
            prime,
            links: Vec::new(),
        }
    }

    pub fn verdict(&self) -> bool {
        self.links.iter().all(|l| l.verdict || !l.in_scope)
    }

    pub fn link(&self, label: &str) -> Option<&Link> {
        self.links.iter().find(|l| l.label == label)
    }

    /// Minimum valuation over the congruence links.
    pub fn min_valuation(&self) -> ValuationValue {
        self.links
            .iter()
            .map(|l| l.valuation)
            .min()
            .unwrap_or(ValuationValue::Infinite)
    }

    fn congruence(
        &mut self,
        label: impl Into<String>,
        n: Option<u64>,
        lhs: &ExactRational,
        rhs: &ExactRational,
        r: u32,
    ) -> Result<()> {
        self.congruence_scoped(label, n, lhs, rhs, r, true)
    }

    fn congruence_scoped(
        &mut self,
        label: impl Into<String>,
        n: Option<u64>,
        lhs: &ExactRational,
        rhs: &ExactRational,
        r: u32,
        in_scope: bool,
    ) -> Result<()> {
        let res = congruent(lhs, rhs, self.prime, r)?;
        self.links.push(Link {
            label: label.into(),
            n,
            exponent: Some(r),
            valuation: res.valuation,
            verdict: res.verdict,
            in_scope,
        });
        Ok(())
    }

    fn identity(
        &mut self,
        label: impl Into<String>,
        n: Option<u64>,
        lhs: &ExactRational,
        rhs: &ExactRational,
    ) {
        let valuation = padic_valuation(&(lhs - rhs), self.prime).value;
        self.links.push(Link {
            label: label.into(),
            n,
            exponent: None,
            valuation,
            verdict: lhs == rhs,
            in_scope: true,
        });
    }

    /// One record per link, named `check/label`.
    pub fn records(&self) -> Vec<Record> {
        self.links
            .iter()
            .map(|l| Record {
                check: format!("{}/{}", self.check, l.label),
                sequence: None,
                prime: Some(self.prime),
                n: l.n,
                index: None,
                verdict: l.verdict,
                valuation: Some(l.valuation),
                hypothesis_met: l.in_scope,
            })
            .collect()
    }
}

/// `p` must be a prime `> 3` with `p ≡ residue (mod modulus)`.
pub(crate) fn require_residue(
    check: &'static str,
    p: u64,
    modulus: u64,
    residue: u64,
) -> Result<()> {
    check_working_prime(p)?;
    if p % modulus != residue {
        return Err(Error::ResidueClass {
            check,
            p,
            modulus,
            residue,
        });
    }
    Ok(())
}

/// `Π_{k ∈ range} (offset + k)` for a rational offset.
pub(crate) fn shifted_product(
    offset: &ExactRational,
    range: impl IntoIterator<Item = u64>,
) -> ExactRational {
    range
        .into_iter()
        .map(|k| offset + &ExactRational::from(k))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_reports_the_class() {
        let err = require_residue("lemma20", 7, 4, 1).unwrap_err();
        assert_eq!(
            err,
            Error::ResidueClass {
                check: "lemma20",
                p: 7,
                modulus: 4,
                residue: 1
            }
        );
        assert!(err.to_string().contains("mod 4"));
        assert_eq!(
            require_residue("x", 3, 1, 0).unwrap_err(),
            Error::PrimeTooSmall(3)
        );
        assert_eq!(
            require_residue("x", 25, 4, 1).unwrap_err(),
            Error::NotPrime(25)
        );
    }

    #[test]
    fn bundle_records_carry_labels() {
        let mut b = CheckBundle::new("demo", 5);
        b.congruence(
            "a",
            None,
            &ExactRational::from(27),
            &ExactRational::from(2),
            2,
        )
        .unwrap();
        b.identity(
            "b",
            Some(3),
            &ExactRational::from(1),
            &ExactRational::from(1),
        );
        assert!(b.verdict());
        let recs = b.records();
        assert_eq!(recs[0].check, "demo/a");
        assert_eq!(recs[1].n, Some(3));
        assert_eq!(recs[1].valuation, Some(ValuationValue::Infinite));
        assert_eq!(b.min_valuation(), ValuationValue::Finite(2));
    }

    #[test]
    fn out_of_scope_links_do_not_decide() {
        let mut b = CheckBundle::new("demo", 5);
        b.congruence_scoped(
            "a",
            None,
            &ExactRational::from(1),
            &ExactRational::from(2),
            2,
            false,
        )
        .unwrap();
        assert!(b.verdict());
        assert!(!b.records()[0].hypothesis_met);
        assert!(!b.records()[0].is_failure());
    }
}
