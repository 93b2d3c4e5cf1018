//! Exact scalar arithmetic: the rational field and prime fields.
//!
//! All computation in this crate is exact; no floating point exists anywhere.
//! A [`Field`] is a context object carried alongside its elements, so that
//! prime fields can hold their modulus without every element repeating it.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact field operations over an element type chosen by the context.
pub trait Field: Clone {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Division, panicking on a zero divisor. Callers guard with `is_zero`.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b).expect("division by zero"))
    }
}

/// The field of rational numbers with arbitrary-precision entries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

/// Shorthand for the element type of [`Rationals`].
pub type Rat = BigRational;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> Self::Elem {
        BigRational::zero()
    }

    fn one(&self) -> Self::Elem {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a + b
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a - b
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a * b
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        -a
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
}

/// Convenience constructor for a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for an integral rational.
pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// The prime field `F_p`, elements stored reduced in `[0, p)`.
///
/// The modulus must be prime; [`PrimeField::new`] checks this by trial
/// division, which is fine at the supported sizes (`p < 2^32` so products
/// fit in `u64`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

/// Errors building a prime field context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeFieldError {
    NonPrime(u64),
    TooLarge(u64),
}

impl fmt::Display for PrimeFieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeFieldError::NonPrime(p) => write!(f, "{} is not prime", p),
            PrimeFieldError::TooLarge(p) => write!(f, "modulus {} exceeds 2^32", p),
        }
    }
}

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

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, PrimeFieldError> {
        if p >= 1 << 32 {
            return Err(PrimeFieldError::TooLarge(p));
        }
        if !is_prime(p) {
            return Err(PrimeFieldError::NonPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, n: i64) -> u64 {
        let p = self.p as i64;
        (((n % p) + p) % p) as u64
    }

    /// Every field element in ascending order.
    pub fn elements(&self) -> Vec<u64> {
        (0..self.p).collect()
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.elem(n)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            // Fermat: a^(p-2) since p is prime.
            Some(self.pow(*a, self.p - 2))
        }
    }

    fn is_zero(&self, a: &u64) -> bool {
        a % self.p == 0
    }
}

/// Reduce a rational to `F_p`. Fails when the denominator vanishes mod p
/// (bad reduction).
pub fn rat_mod_p(x: &Rat, fp: &PrimeField) -> Option<u64> {
    let p = BigInt::from(fp.modulus());
    let num = x.numer().mod_floor_big(&p);
    let den = x.denom().mod_floor_big(&p);
    let den_inv = fp.inv(&den)?;
    Some(fp.mul(&num, &den_inv))
}

trait ModFloorBig {
    fn mod_floor_big(&self, m: &BigInt) -> u64;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> u64 {
        let mut r = self % m;
        if r.is_negative() {
            r += m;
        }
        // Fits: m < 2^32.
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f7 = PrimeField::new(7).unwrap();
        for a in 1..7 {
            let inv = f7.inv(&a).unwrap();
            assert_eq!(f7.mul(&a, &inv), 1);
        }
        assert_eq!(f7.inv(&0), None);
    }

    #[test]
    fn prime_field_rejects_composites() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(9973).is_ok());
    }

    #[test]
    fn rational_reduction_mod_p() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(rat_mod_p(&rat(1, 2), &f5), Some(3)); // 2*3 = 6 = 1
        assert_eq!(rat_mod_p(&rat(1, 5), &f5), None);
        assert_eq!(rat_mod_p(&rat(-3, 1), &f5), Some(2));
    }
}
