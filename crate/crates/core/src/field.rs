//! Prime fields F_q and the field abstraction shared by the polynomial
//! machinery.
//!
//! Generic algorithms (irreducibility, order computation, factorization)
//! are written once against the [`Field`] trait and instantiated both for
//! [`PrimeField`] and for [`crate::ext::ExtField`].

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// A finite field presented through its operations on element values.
///
/// Elements are plain values (`u64` for prime fields, coordinate vectors
/// for extension fields); the field object owns the arithmetic. Binary
/// operations assume both operands belong to `self`.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + std::hash::Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn characteristic(&self) -> u64;
    /// Number of elements of the field.
    fn size(&self) -> u128;
    /// Canonical index of an element in `0..size()`; fixes the enumeration
    /// order used for lexicographic tie-breaks and exhaustive scans.
    fn index_of(&self, a: &Self::Elem) -> u128;
    fn elem_at(&self, index: u128) -> Self::Elem;
    /// Short text form of an element for displaying polynomials.
    fn format_elem(&self, a: &Self::Elem) -> String;
    /// A uniformly random element.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// The prime field F_q. Elements are canonical representatives in `[0, q)`
/// stored as `u64`; products go through `u128` so any prime modulus that
/// fits in 64 bits is safe.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    /// Builds F_q, checking primality of `q` by trial division.
    pub fn new(q: u64) -> Result<Self> {
        if !is_prime_u64(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(PrimeField { q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Reduces an arbitrary integer to its canonical representative.
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.q
    }

    pub fn add_elem(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    pub fn sub_elem(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    pub fn neg_elem(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    pub fn mul_elem(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.q as u128) as u64
    }

    /// Inverse by Fermat's little theorem; `None` for zero.
    pub fn inv_elem(&self, a: u64) -> Option<u64> {
        if a == 0 {
            None
        } else {
            Some(self.pow_elem(a, (self.q - 2) as u128))
        }
    }

    pub fn pow_elem(&self, a: u64, e: u128) -> u64 {
        Field::pow(self, &a, e)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.q
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.add_elem(*a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.sub_elem(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        self.neg_elem(*a)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul_elem(*a, *b)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        self.inv_elem(*a)
    }
    fn characteristic(&self) -> u64 {
        self.q
    }
    fn size(&self) -> u128 {
        self.q as u128
    }
    fn index_of(&self, a: &u64) -> u128 {
        *a as u128
    }
    fn elem_at(&self, index: u128) -> u64 {
        debug_assert!(index < self.q as u128);
        index as u64
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.q)
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut p = 5u64;
    while let Some(sq) = p.checked_mul(p) {
        if sq > n {
            break;
        }
        if n % p == 0 || n % (p + 2) == 0 {
            return false;
        }
        p += 6;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_moduli() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
        assert!(PrimeField::new(91).is_err()); // 7 * 13
        for q in [2, 3, 5, 7, 65537] {
            assert!(PrimeField::new(q).is_ok());
        }
    }

    #[test]
    fn arithmetic_mod_5() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.add_elem(3, 4), 2);
        assert_eq!(f.sub_elem(1, 3), 3);
        assert_eq!(f.mul_elem(3, 4), 2);
        assert_eq!(f.neg_elem(2), 3);
        assert_eq!(f.inv_elem(0), None);
        for a in 1..5 {
            let inv = f.inv_elem(a).unwrap();
            assert_eq!(f.mul_elem(a, inv), 1);
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let f = PrimeField::new(7).unwrap();
        for a in 0..7u64 {
            let mut acc = 1u64;
            for e in 0..20u128 {
                assert_eq!(f.pow_elem(a, e), acc);
                acc = f.mul_elem(acc, a);
            }
        }
    }
}
