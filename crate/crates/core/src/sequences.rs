//! The six hypergeometric-coefficient sequences.
//!
//! Each sequence has a direct formula (binomial sum or Pochhammer product)
//! and an independent recurrence. [`SequenceTable`] grows by recurrence and
//! spot-checks against the direct formula.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, rising_factorial, ExactRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SequenceId {
    Apery,
    Domb,
    S,
    T,
    U,
    V,
}

impl SequenceId {
    pub const ALL: [SequenceId; 6] = [
        SequenceId::Apery,
        SequenceId::Domb,
        SequenceId::S,
        SequenceId::T,
        SequenceId::U,
        SequenceId::V,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::Apery => "APERY",
            SequenceId::Domb => "DOMB",
            SequenceId::S => "S",
            SequenceId::T => "T",
            SequenceId::U => "U",
            SequenceId::V => "V",
        }
    }

    /// Residue class `(modulus, residue)` the proved supercongruence needs,
    /// `None` when every prime `p > 3` qualifies.
    pub fn theorem_residue(self) -> Option<(u64, u64)> {
        match self {
            SequenceId::S => Some((4, 1)),
            SequenceId::T => Some((6, 1)),
            _ => None,
        }
    }

    /// Exponent of the known congruence `a_{np} ≡ a_n (mod p^r)`.
    pub fn theorem_exponent(self) -> u32 {
        match self {
            SequenceId::Apery | SequenceId::Domb => 3,
            SequenceId::S | SequenceId::T | SequenceId::U | SequenceId::V => 2,
        }
    }

    /// Whether the cell `(n, p, r)` is covered by a known congruence.
    /// For U and V only `n = 1` is claimed.
    pub fn hypothesis_met(self, n: u64, p: u64, r: u32) -> bool {
        let residue_ok = match self.theorem_residue() {
            Some((m, a)) => p % m == a,
            None => true,
        };
        let n_ok = !matches!(self, SequenceId::U | SequenceId::V) || n == 1;
        p > 3 && residue_ok && n_ok && r <= self.theorem_exponent()
    }

    /// Direct (non-recursive) formula.
    pub fn closed(self, n: u64) -> ExactRational {
        match self {
            SequenceId::Apery => apery(n),
            SequenceId::Domb => domb(n),
            SequenceId::S => s_closed(n),
            SequenceId::T => t_closed(n),
            SequenceId::U => u(n),
            SequenceId::V => v(n),
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "APERY" | "ALPHA" => Ok(SequenceId::Apery),
            "DOMB" | "BETA" => Ok(SequenceId::Domb),
            "S" => Ok(SequenceId::S),
            "T" => Ok(SequenceId::T),
            "U" => Ok(SequenceId::U),
            "V" => Ok(SequenceId::V),
            _ => Err(Error::InvalidArgument(format!(
                "unknown sequence {s:?}; expected one of APERY, DOMB, S, T, U, V"
            ))),
        }
    }
}

/// Apéry numbers `Σ_k C(n,k)² C(n+k,k)²`.
pub fn apery(n: u64) -> ExactRational {
    let mut sum = BigInt::zero();
    let mut c_nk = BigInt::one();
    let mut c_npk = BigInt::one();
    for k in 0..=n {
        sum += (&c_nk * &c_npk).pow(2);
        c_nk = c_nk * (n - k) / (k + 1);
        c_npk = c_npk * (n + k + 1) / (k + 1);
    }
    sum.into()
}

/// Signed Domb numbers `(-1)^n Σ_k C(n,k)² C(2k,k) C(2(n-k),n-k)`.
pub fn domb(n: u64) -> ExactRational {
    // central[k] = C(2k, k)
    let mut central = Vec::with_capacity(n as usize + 1);
    central.push(BigInt::one());
    for k in 1..=n {
        let prev = &central[k as usize - 1];
        central.push(prev * (2 * (2 * k - 1)) / k);
    }
    let mut sum = BigInt::zero();
    let mut c_nk = BigInt::one();
    for k in 0..=n {
        sum += &c_nk * &c_nk * &central[k as usize] * &central[(n - k) as usize];
        c_nk = c_nk * (n - k) / (k + 1);
    }
    if n % 2 == 1 {
        sum = -sum;
    }
    sum.into()
}

/// `s_n = 4^n / (n!)² · Π_{i<n} (1+4i)²`.
pub fn s_closed(n: u64) -> ExactRational {
    let prod = (0..n).fold(BigInt::one(), |acc, i| acc * (1 + 4 * i));
    let num = (BigInt::one() << (2 * n)) * &prod * &prod;
    let f = factorial(n);
    ExactRational::new(num, &f * &f).expect("nonzero factorial")
}

/// `s_{n+1} = 4 ((1+4n)/(1+n))² s_n`.
pub fn s_next(n: u64, s_n: &ExactRational) -> ExactRational {
    let ratio = ExactRational::new(BigInt::from(1 + 4 * n), BigInt::from(1 + n)).unwrap();
    s_n * &ratio.square() * ExactRational::from(4)
}

/// `t_n = 108^n (1/6)_n (1/3)_n / (n!)²`.
pub fn t_closed(n: u64) -> ExactRational {
    let f = ExactRational::from(factorial(n));
    ExactRational::from(BigInt::from(108).pow(n as u32))
        * rising_factorial(&ExactRational::ratio(1, 6), n)
        * rising_factorial(&ExactRational::ratio(1, 3), n)
        / f.square()
}

/// `t_{n+1} = 6 (1+6n)(1+3n)/(1+n)² t_n`.
pub fn t_next(n: u64, t_n: &ExactRational) -> ExactRational {
    let ratio = ExactRational::new(
        BigInt::from(6 * (1 + 6 * n) * (1 + 3 * n)),
        BigInt::from(1 + n).pow(2),
    )
    .unwrap();
    t_n * &ratio
}

/// `u_n = 64^n (1/4)_n (3/4)_n / (n!)²`.
pub fn u(n: u64) -> ExactRational {
    let f = ExactRational::from(factorial(n));
    ExactRational::from(BigInt::one() << (6 * n))
        * rising_factorial(&ExactRational::ratio(1, 4), n)
        * rising_factorial(&ExactRational::ratio(3, 4), n)
        / f.square()
}

/// `v_n = 27^n (1/3)_n (2/3)_n / (n!)²`.
pub fn v(n: u64) -> ExactRational {
    let f = ExactRational::from(factorial(n));
    ExactRational::from(BigInt::from(27).pow(n as u32))
        * rising_factorial(&ExactRational::ratio(1, 3), n)
        * rising_factorial(&ExactRational::ratio(2, 3), n)
        / f.square()
}

/// `C(4n,2n) C(2n,n)`, equal to `u_n`.
pub fn u_binomial(n: u64) -> ExactRational {
    (binomial(4 * n, 2 * n) * binomial(2 * n, n)).into()
}

/// `C(3n,n) C(2n,n)`, equal to `v_n`.
pub fn v_binomial(n: u64) -> ExactRational {
    (binomial(3 * n, n) * binomial(2 * n, n)).into()
}

/// Multiplier `4^p Π_{i<p} ((1+4(i+n))/(1+n+i))²` with `s_{n+p} = m · s_n`.
pub fn s_shift_product(n: u64, p: u64) -> ExactRational {
    let mut num = BigInt::one() << (2 * p);
    let mut den = BigInt::one();
    for i in 0..p {
        let a = BigInt::from(1 + 4 * (i + n));
        let b = BigInt::from(1 + n + i);
        num *= &a * &a;
        den *= &b * &b;
    }
    ExactRational::new(num, den).unwrap()
}

/// Multiplier `6^p Π_{i<p} (1+6n+6i)(1+3n+3i)/(1+n+i)²` with `t_{n+p} = m · t_n`.
pub fn t_shift_product(n: u64, p: u64) -> ExactRational {
    let mut num = BigInt::from(6).pow(p as u32);
    let mut den = BigInt::one();
    for i in 0..p {
        num *= BigInt::from(1 + 6 * n + 6 * i) * BigInt::from(1 + 3 * n + 3 * i);
        let b = BigInt::from(1 + n + i);
        den *= &b * &b;
    }
    ExactRational::new(num, den).unwrap()
}

/// Memoized values `a_0, a_1, ...` of one sequence, extended by recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    id: SequenceId,
    values: Vec<ExactRational>,
}

impl SequenceTable {
    pub fn new(id: SequenceId) -> Self {
        Self {
            id,
            values: vec![ExactRational::one()],
        }
    }

    /// Table through index `n_max`, with the direct formula checked at the
    /// first few indices and at `n_max`.
    pub fn cross_checked(id: SequenceId, n_max: u64) -> Result<Self> {
        let mut table = Self::new(id);
        table.extend_to(n_max);
        let mut samples: Vec<u64> = (0..=n_max.min(3)).collect();
        samples.push(n_max);
        table.check_against_closed(samples)?;
        Ok(table)
    }

    pub fn id(&self) -> SequenceId {
        self.id
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    /// Largest index held.
    pub fn max_index(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Option<&ExactRational> {
        self.values.get(n as usize)
    }

    pub fn extend_to(&mut self, n_max: u64) {
        while self.max_index() < n_max {
            let n = self.max_index();
            let next = self.step(n);
            self.values.push(next);
        }
    }

    /// `a_{n+1}` from the stored prefix.
    fn step(&self, n: u64) -> ExactRational {
        let cur = &self.values[n as usize];
        match self.id {
            SequenceId::S => s_next(n, cur),
            SequenceId::T => t_next(n, cur),
            SequenceId::U => {
                let r = ExactRational::new(
                    BigInt::from(4 * (4 * n + 1) * (4 * n + 3)),
                    BigInt::from(n + 1).pow(2),
                )
                .unwrap();
                cur * &r
            }
            SequenceId::V => {
                let r = ExactRational::new(
                    BigInt::from(3 * (3 * n + 1) * (3 * n + 2)),
                    BigInt::from(n + 1).pow(2),
                )
                .unwrap();
                cur * &r
            }
            SequenceId::Apery | SequenceId::Domb => {
                if n == 0 {
                    return self.id.closed(1);
                }
                let prev = &self.values[n as usize - 1];
                let nb = BigInt::from(n);
                let n3 = ExactRational::from(&nb * &nb * &nb);
                let lead = ExactRational::from(BigInt::from(n + 1).pow(3));
                let next = if self.id == SequenceId::Apery {
                    // (n+1)³ a_{n+1} = (34n³+51n²+27n+5) a_n − n³ a_{n−1}
                    let c =
                        ExactRational::from(34 * &nb * &nb * &nb + 51 * &nb * &nb + 27 * &nb + 5);
                    c * cur - n3 * prev
                } else {
                    // (n+1)³ β_{n+1} = −2(2n+1)(5n²+5n+2) β_n − 64 n³ β_{n−1}
                    let c = ExactRational::from(-2 * (2 * &nb + 1) * (5 * &nb * &nb + 5 * &nb + 2));
                    c * cur - ExactRational::from(64) * n3 * prev
                };
                next / lead
            }
        }
    }

    /// Compares stored values with the direct formula at `indices`.
    pub fn check_against_closed(&self, indices: impl IntoIterator<Item = u64>) -> Result<()> {
        for n in indices {
            let stored = self
                .get(n)
                .ok_or_else(|| Error::InvalidArgument(format!("index {n} not in table")))?;
            if *stored != self.id.closed(n) {
                return Err(Error::Inconsistent(format!(
                    "{} recurrence and direct formula disagree at n = {n}",
                    self.id
                )));
            }
        }
        Ok(())
    }

    /// CSV with columns `n,value`; values as exact decimal strings
    /// (`a/b` if ever non-integral).
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let io = |e: csv::Error| Error::InvalidArgument(format!("csv write failed: {e}"));
        w.write_record(["n", "value"]).map_err(io)?;
        for (n, value) in self.values.iter().enumerate() {
            w.write_record([n.to_string(), value.to_string()])
                .map_err(io)?;
        }
        w.flush()
            .map_err(|e| Error::InvalidArgument(format!("csv write failed: {e}")))?;
        Ok(())
    }
}
