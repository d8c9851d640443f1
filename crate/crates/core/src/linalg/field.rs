//! Scalar fields: prime fields 𝔽_p with a runtime modulus, and the rationals.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldConfig {
    /// 𝔽_p for a prime p.
    Prime(u64),
    /// ℚ with exact big-rational arithmetic.
    Rational,
}

impl FieldConfig {
    /// Characteristic of the field; 0 for ℚ.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldConfig::Prime(p) => *p,
            FieldConfig::Rational => 0,
        }
    }

    /// Inverse of [`FieldConfig::characteristic`], validating primality.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            Ok(FieldConfig::Rational)
        } else if is_prime(c) {
            Ok(FieldConfig::Prime(c))
        } else {
            Err(Error::NotPrime(c))
        }
    }
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig::Prime(5)
    }
}

/// A field context. Elements are plain values; all arithmetic goes through the context so
/// that the modulus of 𝔽_p can be chosen at runtime.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn config(&self) -> FieldConfig;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// All elements, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    /// Number of elements, for finite fields.
    fn order(&self) -> Option<u64>;
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Integer representative when one exists (always for 𝔽_p, in `[0, p)`).
    fn as_integer(&self, a: &Self::Elem) -> Option<i64>;
    fn display(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// Deterministic trial division; moduli here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The prime field 𝔽_p. The modulus is kept below 2^31 so products fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Default for Fp {
    fn default() -> Self {
        Fp { p: 5 }
    }
}

impl Field for Fp {
    type Elem = u64;

    fn config(&self) -> FieldConfig {
        FieldConfig::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut base = *a;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        Some(acc)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
    fn order(&self) -> Option<u64> {
        Some(self.p)
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.random_range(0..self.p)
    }
    fn as_integer(&self, a: &u64) -> Option<i64> {
        Some(*a as i64)
    }
    fn display(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// The rationals, with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn config(&self) -> FieldConfig {
        FieldConfig::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.random_range(-3..=3))
    }
    fn as_integer(&self, a: &BigRational) -> Option<i64> {
        if a.is_integer() {
            let n = a.numer();
            if n.abs() <= BigInt::from(i64::MAX) {
                return n.to_string().parse().ok();
            }
        }
        None
    }
    fn display(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(Fp::new(4).is_err());
        assert!(Fp::new(1).is_err());
        assert_eq!(
            FieldConfig::from_characteristic(0).unwrap(),
            FieldConfig::Rational
        );
        assert!(FieldConfig::from_characteristic(9).is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = Fp::new(5).unwrap();
        assert_eq!(f.from_i64(-2), 3);
        assert_eq!(f.mul(&3, &4), 2);
        for a in 1..5 {
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), 1);
        }
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.sub(&1, &3), 3);
        assert_eq!(f.neg(&0), 0);
    }

    #[test]
    fn rational_arithmetic() {
        let q = Rationals;
        let half = q.inv(&q.from_i64(2)).unwrap();
        assert_eq!(q.add(&half, &half), q.one());
        assert_eq!(q.as_integer(&half), None);
        assert_eq!(q.as_integer(&q.from_i64(-7)), Some(-7));
        assert_eq!(q.display(&half), "1/2");
    }
}
