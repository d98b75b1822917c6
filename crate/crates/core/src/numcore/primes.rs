use serde::{Deserialize, Serialize};

/// Every prime `<= limit`, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeList {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeList {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }
}

/// Sieve of Eratosthenes: cross off multiples of each prime starting at
/// its square. Memory is one byte per integer up to `limit`.
pub fn sieve_primes(limit: u64) -> PrimeList {
    let n = usize::try_from(limit).expect("sieve limit exceeds address space");
    if n < 2 {
        return PrimeList { limit, primes: Vec::new() };
    }
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            for multiple in (i * i..=n).step_by(i) {
                composite[multiple] = true;
            }
        }
        i += 1;
    }
    let primes = (2..=n).filter(|&k| !composite[k]).map(|k| k as u64).collect();
    PrimeList { limit, primes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn small_limits() {
        assert_eq!(sieve_primes(10).primes(), &[2, 3, 5, 7]);
        assert!(sieve_primes(1).is_empty());
        assert!(sieve_primes(0).is_empty());
        assert_eq!(sieve_primes(2).primes(), &[2]);
        assert_eq!(sieve_primes(100).len(), 25);
    }

    #[test]
    fn matches_trial_division_to_ten_thousand() {
        let sieved = sieve_primes(10_000);
        let brute: Vec<u64> = (0..=10_000).filter(|&n| trial_division(n)).collect();
        assert_eq!(sieved.primes(), brute.as_slice());
    }

    proptest! {
        #[test]
        fn every_listed_integer_is_prime(limit in 0u64..3000) {
            let list = sieve_primes(limit);
            prop_assert!(list.primes().windows(2).all(|w| w[0] < w[1]));
            prop_assert!(list.iter().all(trial_division));
            prop_assert_eq!(list.len(), (0..=limit).filter(|&n| trial_division(n)).count());
        }
    }
}
