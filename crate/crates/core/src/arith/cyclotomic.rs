//! Exact elements of cyclotomic fields.
//!
//! A [`Cyc`] is stored as a coordinate vector in the power basis
//! `1, z, ..., z^(phi(n)-1)` of `Q(z_n)`, reduced modulo the `n`-th
//! cyclotomic polynomial. Binary operations embed both operands into the
//! least common conductor, so values of different conductors mix freely.
//! [`Cyc::reduced`] rewrites a value over the smallest cyclotomic field that
//! contains it; that form is what gets hashed, ordered and printed.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{euler_phi, Rat};

/// Errors raised by cyclotomic arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycError {
    #[error("galois exponent {k} is not coprime to conductor {n}")]
    NotCoprime { k: i64, n: u32 },
    #[error("conductor must be positive")]
    ZeroConductor,
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = exact_divide(&num, &div);
        }
    }
    let p = Arc::new(num);
    cyclotomic_cache().lock().unwrap().insert(n, p.clone());
    p
}

/// Exact division of integer polynomials by a monic divisor.
fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Reduces a dense polynomial (lowest degree first) modulo `Phi_n`,
/// returning exactly `phi(n)` coordinates.
fn reduce_mod_cyclotomic(mut poly: Vec<Rat>, n: u32) -> Vec<Rat> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for i in (deg..poly.len()).rev() {
            if poly[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut poly[i], Rat::zero());
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                if pj != 0 {
                    poly[i - deg + j] -= &c * Rat::from_integer(BigInt::from(pj));
                }
            }
        }
        poly.truncate(deg);
    } else {
        poly.resize(deg, Rat::zero());
    }
    poly
}

/// An exact element of the cyclotomic field `Q(z_n)`.
#[derive(Clone, Debug)]
pub struct Cyc {
    conductor: u32,
    coeffs: Vec<Rat>,
}

impl Cyc {
    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(v)))
    }

    pub fn from_rat(v: Rat) -> Self {
        Cyc {
            conductor: 1,
            coeffs: vec![v],
        }
    }

    /// `z_n^k` for any integer `k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n > 0, "root of unity of order 0");
        let e = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rat::zero(); e + 1];
        poly[e] = Rat::one();
        Cyc {
            conductor: n,
            coeffs: reduce_mod_cyclotomic(poly, n),
        }
    }

    /// Builds `sum_k mult[k] * z_n^k`.
    pub fn from_exponent_coeffs(n: u32, mult: &[Rat]) -> Self {
        let mut poly = vec![Rat::zero(); n as usize];
        for (k, c) in mult.iter().enumerate() {
            poly[k % n as usize] += c;
        }
        Cyc {
            conductor: n,
            coeffs: reduce_mod_cyclotomic(poly, n),
        }
    }

    /// Power-basis coordinates over a given conductor.
    pub fn from_coeffs(n: u32, coeffs: Vec<Rat>) -> Result<Self, CycError> {
        if n == 0 {
            return Err(CycError::ZeroConductor);
        }
        Ok(Cyc {
            conductor: n,
            coeffs: reduce_mod_cyclotomic(coeffs, n),
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rat> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// The value as an `i64`, if it is a rational integer that fits.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.as_rational()?;
        if r.is_integer() {
            r.to_integer().to_i64()
        } else {
            None
        }
    }

    /// Re-expresses the value over conductor `m`, which must be a multiple
    /// of the current conductor.
    pub fn embed(&self, m: u32) -> Cyc {
        if m == self.conductor {
            return self.clone();
        }
        assert!(
            m.is_multiple_of(self.conductor),
            "cannot embed conductor {} into {}",
            self.conductor,
            m
        );
        let step = (m / self.conductor) as usize;
        let mut poly = vec![Rat::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[j * step] = c.clone();
            }
        }
        Cyc {
            conductor: m,
            coeffs: reduce_mod_cyclotomic(poly, m),
        }
    }

    fn common(&self, other: &Cyc) -> (Cyc, Cyc) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let m = self.conductor.lcm(&other.conductor);
        (self.embed(m), other.embed(m))
    }

    /// The Galois automorphism `z_n -> z_n^k`.
    pub fn galois(&self, k: i64) -> Result<Cyc, CycError> {
        let n = self.conductor;
        if (k.rem_euclid(n as i64) as u64).gcd(&(n as u64)) != 1 && n > 1 {
            return Err(CycError::NotCoprime { k, n });
        }
        Ok(self.galois_unchecked(k))
    }

    fn galois_unchecked(&self, k: i64) -> Cyc {
        let n = self.conductor;
        let kk = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rat::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(j * kk) % n as usize] += c;
            }
        }
        Cyc {
            conductor: n,
            coeffs: reduce_mod_cyclotomic(poly, n),
        }
    }

    /// Complex conjugation, `z -> z^-1`.
    pub fn conj(&self) -> Cyc {
        self.galois_unchecked(-1)
    }

    pub fn scale(&self, r: &Rat) -> Cyc {
        Cyc {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// The same value written over the smallest cyclotomic field containing it.
    pub fn reduced(&self) -> Cyc {
        if self.is_rational() {
            return Cyc::from_rat(self.coeffs[0].clone());
        }
        let n = self.conductor;
        for d in 2..n {
            if !n.is_multiple_of(d) || d % 4 == 2 {
                continue;
            }
            if self.fixed_by_subfield_group(d) {
                return self.descend(d);
            }
        }
        if n % 4 == 2 {
            // Q(z_n) = Q(z_{n/2}) for n = 2 mod 4.
            return self.descend(n / 2);
        }
        self.clone()
    }

    fn fixed_by_subfield_group(&self, d: u32) -> bool {
        let n = self.conductor as u64;
        (1..n)
            .filter(|&k| k % d as u64 == 1 % d as u64 && k.gcd(&n) == 1)
            .all(|k| self.galois_unchecked(k as i64) == *self)
    }

    /// Solves for coordinates over `Q(z_d)`, assuming the value lies there.
    fn descend(&self, d: u32) -> Cyc {
        let n = self.conductor;
        let fd = euler_phi(d as u64) as usize;
        let fnn = self.coeffs.len();
        // Columns: embedded images of z_d^j.
        let cols: Vec<Vec<Rat>> = (0..fd)
            .map(|j| Cyc::root_of_unity(d, j as i64).embed(n).coeffs)
            .collect();
        // Augmented system rows = fnn equations, fd unknowns.
        let mut rows: Vec<Vec<Rat>> = (0..fnn)
            .map(|i| {
                let mut r: Vec<Rat> = cols.iter().map(|c| c[i].clone()).collect();
                r.push(self.coeffs[i].clone());
                r
            })
            .collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::with_capacity(fd);
        for col in 0..fd {
            let Some(pr) = (pivot_row..fnn).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(pivot_row, pr);
            let inv = rows[pivot_row][col].recip();
            for x in rows[pivot_row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..fnn {
                if r != pivot_row && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for c in 0..=fd {
                        let v = &rows[pivot_row][c] * &f;
                        rows[r][c] -= v;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let mut coeffs = vec![Rat::zero(); fd];
        for (r, &c) in pivots.iter().enumerate() {
            coeffs[c] = rows[r][fd].clone();
        }
        Cyc {
            conductor: d,
            coeffs,
        }
    }

    /// Floating-point approximation `(re, im)`; for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let a = 2.0 * std::f64::consts::PI * j as f64 / n;
            re += v * a.cos();
            im += v * a.sin();
        }
        (re, im)
    }

    pub fn to_complex_string(&self) -> String {
        let (re, im) = self.to_complex();
        let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
        let (re, im) = (clean(re), clean(im));
        if im == 0.0 {
            format!("{re:.4}")
        } else if im < 0.0 {
            format!("{re:.4}-{:.4}i", -im)
        } else {
            format!("{re:.4}+{im:.4}i")
        }
    }
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyc {}

impl Hash for Cyc {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let r = self.reduced();
        r.conductor.hash(state);
        r.coeffs.hash(state);
    }
}

impl Ord for Cyc {
    /// Canonical total order: by reduced conductor, then coordinates.
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let (a, b) = (self.reduced(), other.reduced());
        a.conductor
            .cmp(&b.conductor)
            .then_with(|| a.coeffs.cmp(&b.coeffs))
    }
}

impl PartialOrd for Cyc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Cyc> for &Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Add for Cyc {
    type Output = Cyc;
    fn add(self, rhs: Cyc) -> Cyc {
        &self + &rhs
    }
}

impl AddAssign<&Cyc> for Cyc {
    fn add_assign(&mut self, rhs: &Cyc) {
        if self.conductor == rhs.conductor {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl Sub<&Cyc> for &Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        self + &(-rhs)
    }
}

impl Sub for Cyc {
    type Output = Cyc;
    fn sub(self, rhs: Cyc) -> Cyc {
        &self - &rhs
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

impl Mul<&Cyc> for &Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        if self.conductor == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.conductor == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let (a, b) = self.common(rhs);
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        let mut poly = vec![Rat::zero(); len];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        Cyc {
            conductor: a.conductor,
            coeffs: reduce_mod_cyclotomic(poly, a.conductor),
        }
    }
}

impl Mul for Cyc {
    type Output = Cyc;
    fn mul(self, rhs: Cyc) -> Cyc {
        &self * &rhs
    }
}

impl From<i64> for Cyc {
    fn from(v: i64) -> Self {
        Cyc::from_int(v)
    }
}

impl Cyc {
    /// Coefficients of `z_n^0 .. z_n^(n-1)` for the reduced conductor `n`,
    /// made sparse by subtracting vanishing sums over cosets of the
    /// prime-order subgroups of the `n`-th roots of unity.
    fn sparse_exponents(&self) -> (u32, Vec<Rat>) {
        let r = self.reduced();
        let n = r.conductor as usize;
        let mut a = vec![Rat::zero(); n];
        a[..r.coeffs.len()].clone_from_slice(&r.coeffs);
        for p in super::prime_divisors(n as u64) {
            let p = p as usize;
            let step = n / p;
            for k in 0..step {
                let idx: Vec<usize> = (0..p).map(|j| k + j * step).collect();
                let count = |v: &Rat| idx.iter().filter(|&&i| a[i] == *v).count();
                let zeros = count(&Rat::zero());
                let best = idx
                    .iter()
                    .map(|&i| a[i].clone())
                    .filter(|v| !v.is_zero())
                    .map(|v| (count(&v), v))
                    .max_by(|x, y| x.0.cmp(&y.0).then_with(|| y.1.cmp(&x.1)));
                if let Some((c, v)) = best {
                    if c > zeros {
                        for &i in &idx {
                            a[i] = &a[i] - &v;
                        }
                    }
                }
            }
        }
        (n as u32, a)
    }
}

impl fmt::Display for Cyc {
    /// Renders the value as a sparse rational combination of powers of
    /// `z<n>` for its minimal conductor, e.g. `1+2*z3`, `-z8^3`, `z7^6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, coeffs) = self.sparse_exponents();
        let mut out = String::new();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let unit = match k {
                0 => String::new(),
                1 => format!("z{n}"),
                _ => format!("z{n}^{k}"),
            };
            if unit.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&unit);
            } else {
                out.push_str(&format!("{mag}*{unit}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyc {
        Cyc::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105).len() - 1, 48);
        // Phi_105 is the first with a coefficient of absolute value 2.
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn sum_of_primitive_cube_roots() {
        assert_eq!(&z(3, 1) + &z(3, 2), Cyc::from_int(-1));
    }

    #[test]
    fn square_root_of_minus_three() {
        let s = &Cyc::one() + &(&z(3, 1) * &Cyc::from_int(2));
        assert_eq!(&s * &s, Cyc::from_int(-3));
        assert_eq!(s.to_string(), "1+2*z3");
    }

    #[test]
    fn galois_and_conjugation() {
        assert_eq!(z(8, 1).galois(3).unwrap(), z(8, 3));
        assert_eq!(z(8, 1).conj(), z(8, 7));
        assert!(matches!(
            z(8, 1).galois(2),
            Err(CycError::NotCoprime { k: 2, n: 8 })
        ));
    }

    #[test]
    fn mixed_conductors() {
        // z4 * z3 = z12^(3+4) = z12^7
        assert_eq!(&z(4, 1) * &z(3, 1), z(12, 7));
        assert_eq!(z(6, 1), &Cyc::one() + &z(3, 1));
        assert_eq!(z(6, 1).reduced().conductor(), 3);
        assert_eq!(z(2, 1), Cyc::from_int(-1));
    }

    #[test]
    fn reduction_to_minimal_conductor() {
        // i*sqrt(2) = z8 + z8^3 lies in Q(z8) but sqrt(2) = z8 + z8^7 too.
        let s2 = &z(8, 1) + &z(8, 7);
        assert_eq!(s2.reduced().conductor(), 8);
        assert_eq!(&s2 * &s2, Cyc::from_int(2));
        // z12^4 = z3
        assert_eq!(z(12, 4).reduced().conductor(), 3);
        assert_eq!(z(12, 4).to_string(), "z3");
        assert_eq!(z(12, 3).to_string(), "z4");
        assert_eq!(z(24, 9).to_string(), "z8^3");
    }

    #[test]
    fn rendering() {
        assert_eq!(Cyc::zero().to_string(), "0");
        assert_eq!(Cyc::from_int(-3).to_string(), "-3");
        assert_eq!((-&z(3, 1)).to_string(), "-z3");
        assert_eq!(z(3, 2).to_string(), "z3^2");
        assert_eq!(z(7, 6).to_string(), "z7^6");
        assert_eq!(z(12, 7).to_string(), "-z12");
        let gauss = &(&z(7, 1) + &z(7, 2)) + &z(7, 4);
        assert_eq!(gauss.to_string(), "z7+z7^2+z7^4");
        assert_eq!((-&(&gauss + &Cyc::one())).to_string(), "z7^3+z7^5+z7^6");
        let half = Cyc::from_rat(Rat::new(1.into(), 2.into()));
        assert_eq!((&half * &z(5, 2)).to_string(), "1/2*z5^2");
    }

    #[test]
    fn ordering_is_total_on_values() {
        let a = z(6, 1);
        let b = &Cyc::one() + &z(3, 1);
        assert_eq!(a.cmp(&b), Ordering::Equal);
        assert!(Cyc::from_int(-1) < Cyc::from_int(1));
        assert!(Cyc::from_int(5) < z(3, 1));
    }
}
