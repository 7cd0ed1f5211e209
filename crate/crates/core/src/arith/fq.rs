//! Arithmetic in prime fields `F_q` with `q < 2^32`.

use super::{is_prime, prime_divisors};

/// The prime field `F_q`. Residues are plain `u64` values in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Self {
        assert!(is_prime(q), "{q} is not prime");
        assert!(q < 1 << 32, "modulus {q} too large");
        PrimeField { q }
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        (self.q - a) % self.q
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.q as i64) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.q;
        a %= self.q;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.q), "inverse of zero in F_{}", self.q);
        self.pow(a, self.q - 2)
    }

    /// The smallest positive primitive root modulo `q`.
    pub fn primitive_root(&self) -> u64 {
        if self.q == 2 {
            return 1;
        }
        let factors = prime_divisors(self.q - 1);
        (2..self.q)
            .find(|&g| factors.iter().all(|&f| self.pow(g, (self.q - 1) / f) != 1))
            .expect("every prime field has a primitive root")
    }

    /// The fixed primitive `m`-th root of unity `r^((q-1)/m)`, where `r` is
    /// the smallest primitive root.
    pub fn root_of_unity(&self, m: u64) -> u64 {
        assert!(
            (self.q - 1).is_multiple_of(m),
            "{m} does not divide q-1 = {}",
            self.q - 1
        );
        self.pow(self.primitive_root(), (self.q - 1) / m)
    }

    /// Square roots of `a`, smallest first (by brute force; `q` is small).
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let a = a % self.q;
        (0..self.q).find(|&x| self.mul(x, x) == a)
    }

    /// Maps a residue to the symmetric range `(-q/2, q/2]`.
    pub fn lift_symmetric(&self, a: u64) -> i64 {
        if a > self.q / 2 {
            a as i64 - self.q as i64
        } else {
            a as i64
        }
    }
}

/// Smallest prime `q` with `q = 1 (mod exponent)` and `q > 2*ceil(sqrt(order))`.
pub fn dixon_prime(exponent: u64, order: u64) -> u64 {
    assert!(exponent > 0 && order > 0);
    let mut s = (order as f64).sqrt() as u64;
    while s * s < order {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= order {
        s -= 1;
    }
    let bound = 2 * s;
    let mut q = exponent + 1;
    while q <= bound || !is_prime(q) {
        q += exponent;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dixon_prime_examples() {
        assert_eq!(dixon_prime(12, 24), 13);
        assert_eq!(dixon_prime(1, 1), 3);
        assert_eq!(dixon_prime(21, 21), 43);
    }

    #[test]
    fn dixon_prime_brute_force() {
        for e in 1..30u64 {
            for n in [1u64, 2, 8, 24, 100, 648] {
                let q = dixon_prime(e, n);
                let bound = 2.0 * (n as f64).sqrt().ceil();
                let smallest = (2..)
                    .find(|&c| is_prime(c) && c % e == 1 % e && c as f64 > bound)
                    .unwrap();
                assert_eq!(q, smallest, "e={e} n={n}");
            }
        }
    }

    #[test]
    fn field_ops() {
        let f = PrimeField::new(13);
        assert_eq!(f.primitive_root(), 2);
        assert_eq!(f.mul(f.inv(5), 5), 1);
        let w = f.root_of_unity(12);
        assert_eq!(f.pow(w, 12), 1);
        assert!((1..12).all(|k| f.pow(w, k) != 1));
        assert_eq!(f.lift_symmetric(12), -1);
        assert_eq!(f.sqrt(9), Some(3));
        assert_eq!(f.sqrt(2), None);
    }
}
