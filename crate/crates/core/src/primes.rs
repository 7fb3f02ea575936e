use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `3 < p <= bound` with `p ≡ residue (mod modulus)`, ascending.
pub fn prime_stream(bound: u64, modulus: u64, residue: u64) -> Result<Vec<u64>> {
    if modulus == 0 || residue >= modulus {
        return Err(Error::InvalidArgument(format!(
            "residue filter needs 0 <= residue < modulus, got {residue} mod {modulus}"
        )));
    }
    if bound < 5 {
        return Ok(Vec::new());
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            for j in (i * i..=n).step_by(i) {
                composite[j] = true;
            }
        }
        i += 1;
    }
    Ok((5..=n)
        .filter(|&k| !composite[k])
        .map(|k| k as u64)
        .filter(|p| p % modulus == residue)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_examples() {
        assert_eq!(prime_stream(30, 4, 1).unwrap(), vec![5, 13, 17, 29]);
        assert_eq!(prime_stream(30, 6, 1).unwrap(), vec![7, 13, 19]);
        assert_eq!(prime_stream(4, 1, 0).unwrap(), Vec::<u64>::new());
        assert_eq!(prime_stream(5, 1, 0).unwrap(), vec![5]);
        assert!(prime_stream(30, 4, 4).is_err());
        assert!(prime_stream(30, 0, 0).is_err());
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let sieved = prime_stream(2000, 1, 0).unwrap();
        let trial: Vec<u64> = (4..=2000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, trial);
    }

    #[test]
    fn qualifying_primes_up_to_101() {
        assert_eq!(
            prime_stream(101, 4, 1).unwrap(),
            vec![5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101]
        );
        assert_eq!(
            prime_stream(101, 6, 1).unwrap(),
            vec![7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97]
        );
    }
}
