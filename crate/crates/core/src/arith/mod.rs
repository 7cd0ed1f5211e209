//! Exact arithmetic: big rationals, small prime fields and cyclotomic numbers.

mod cyclotomic;
mod fq;

pub use cyclotomic::{cyclotomic_polynomial, Cyc, CycError};
pub use fq::{dixon_prime, PrimeField};

/// Arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_divisors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// The largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_theory_helpers() {
        assert!(is_prime(2) && is_prime(43) && !is_prime(1) && !is_prime(91));
        assert_eq!(prime_divisors(648), vec![2, 3]);
        assert_eq!(euler_phi(24), 8);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(p_part(648, 2), 8);
        assert_eq!(p_part(648, 3), 81);
        assert_eq!(p_part(21, 2), 1);
    }
}
