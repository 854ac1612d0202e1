/// Primes `<= n`, ascending (sieve of Eratosthenes).
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut k = i * i;
        while k <= n {
            composite[k] = true;
            k += i;
        }
    }
    out
}

/// Deterministic trial division; adequate for the prime sizes used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Number of primes `<= x`.
pub fn prime_pi(x: u64) -> usize {
    primes_up_to(x).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(primes_up_to(1).is_empty());
        assert_eq!(prime_pi(10_000), 1229);
        assert_eq!(primes_up_to(229).len(), 50);
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let sieve = primes_up_to(2000);
        let trial: Vec<u64> = (0..=2000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, trial);
    }
}
