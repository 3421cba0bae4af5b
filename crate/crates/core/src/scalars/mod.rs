//! Exact scalars: rationals and elements of cyclotomic fields Q(zeta_N).

mod cyclotomic;

pub use cyclotomic::{ArithOp, CycloNum};
pub use num_rational::BigRational as Rational;

use num_integer::Integer;

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Prime factors with multiplicity, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Square-free part: product of the distinct primes dividing `n`.
pub fn sqf(n: u64) -> u64 {
    let mut f = prime_factors(n);
    f.dedup();
    f.into_iter().product()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n).len() == 1
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Binomial coefficient C(n, k) as an exact big integer.
pub fn binomial(n: u64, k: u64) -> num_bigint::BigInt {
    if k > n {
        return num_bigint::BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = num_bigint::BigInt::from(1);
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(prime_factors(12), vec![2, 2, 3]);
        assert_eq!(sqf(12), 6);
        assert_eq!(sqf(1), 1);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert!(is_prime(5) && !is_prime(4) && !is_prime(1));
        assert_eq!(binomial(6, 2), 15.into());
        assert_eq!(binomial(2, 3), 0.into());
    }
}
