//! Dense univariate polynomials over a finite field.
//!
//! Coefficients are stored in ascending order of the power of `x`;
//! the zero polynomial has an empty coefficient vector. The textual
//! form is descending, `x^4+x+1` style, and the comma form `1,1,0,0,1`
//! lists coefficients ascending (constant term first).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};

/// A polynomial together with the field its coefficients live in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

/// Polynomials over a prime field, the common case.
pub type Poly = Polynomial<PrimeField>;

impl<F: Field> Polynomial<F> {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().map_or(false, |c| field.is_zero(c)) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Polynomial { field, coeffs: vec![one] }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(field: F, c: F::Elem, deg: usize) -> Self {
        if field.is_zero(&c) {
            return Self::zero(field);
        }
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial { field, coeffs }
    }

    pub fn x(field: F) -> Self {
        let one = field.one();
        Self::monomial(field, one, 1)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Ascending coefficients with no trailing zeros.
    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    ///
    /// Panics on the zero polynomial; callers validate first.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_coeff(&self) -> Option<F::Elem> {
        self.coeffs.last().cloned()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| self.field.is_one(&c))
    }

    /// Scales a nonzero polynomial to leading coefficient 1.
    pub fn monic(&self) -> Self {
        let lc = self.leading_coeff().expect("monic of zero polynomial");
        if self.field.is_one(&lc) {
            return self.clone();
        }
        let inv = self.field.inv(&lc).expect("leading coefficient invertible");
        self.scale(&inv)
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.field.mul(c, s)).collect();
        Self::new(self.field.clone(), coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.field == other.field);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.field.add(&self.coeff(i), &other.coeff(i)));
        }
        Self::new(self.field.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert!(self.field == other.field);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.field.sub(&self.coeff(i), &other.coeff(i)));
        }
        Self::new(self.field.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Polynomial { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.field == other.field);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone());
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = self.field.mul(a, b);
                coeffs[i + j] = self.field.add(&coeffs[i + j], &t);
            }
        }
        Self::new(self.field.clone(), coeffs)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { field: self.field.clone(), coeffs }
    }

    /// Quotient and remainder of `self / divisor`.
    ///
    /// Panics when dividing by the zero polynomial.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        debug_assert!(self.field == divisor.field);
        let d = divisor.degree().expect("division by zero polynomial");
        let lc_inv = self
            .field
            .inv(&divisor.leading_coeff().unwrap())
            .expect("leading coefficient invertible");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(self.field.clone()), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if self.field.is_zero(&rem[i]) {
                continue;
            }
            let q = self.field.mul(&rem[i], &lc_inv);
            let base = i - d;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = self.field.mul(&q, dc);
                rem[base + j] = self.field.sub(&rem[base + j], &t);
            }
            quot[base] = q;
        }
        (
            Self::new(self.field.clone(), quot),
            Self::new(self.field.clone(), rem),
        )
    }

    pub fn rem(&self, modulus: &Self) -> Self {
        self.divrem(modulus).1
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// `self * other mod modulus`.
    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        self.mul(other).rem(modulus)
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, e: u128, modulus: &Self) -> Self {
        self.pow_mod_big(&BigUint::from(e), modulus)
    }

    pub fn pow_mod_big(&self, e: &BigUint, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::one(self.field.clone()).rem(modulus);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul_mod(&base, modulus);
            }
            if i + 1 < bits {
                base = base.mul_mod(&base, modulus);
            }
        }
        acc
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, point: &F::Elem) -> F::Elem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.mul(&acc, point);
            acc = self.field.add(&acc, c);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.field.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let k = scalar_from_u64(&self.field, i as u64);
                self.field.mul(&k, c)
            })
            .collect();
        Self::new(self.field.clone(), coeffs)
    }

    /// Ascending comma-separated coefficient list, `1,1,0,0,1` style.
    /// The zero polynomial prints as `0`.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| self.field.format_elem(c))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// `k` as a field element (`k mod p` copies of 1).
pub fn scalar_from_u64<F: Field>(field: &F, k: u64) -> F::Elem {
    let mut k = k % field.characteristic();
    let mut base = field.one();
    let mut acc = field.zero();
    while k > 0 {
        if k & 1 == 1 {
            acc = field.add(&acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = field.add(&base, &base);
        }
    }
    acc
}

impl<F: Field> PartialOrd for Polynomial<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: lower degree first, then coefficients compared from
/// the highest power down by their index in the field's enumeration.
/// Over a prime field this is exactly the order of the base-q value
/// `sum c_i q^i`, so for instance `x^4+x+1 < x^4+x^3+1`.
impl<F: Field> Ord for Polynomial<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert!(self.field == other.field);
        match self.coeffs.len().cmp(&other.coeffs.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.coeffs.len()).rev() {
            let a = self.field.index_of(&self.coeffs[i]);
            let b = self.field.index_of(&other.coeffs[i]);
            match a.cmp(&b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if self.field.is_zero(c) {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let show_coeff = i == 0 || !self.field.is_one(c);
            if show_coeff {
                write!(f, "{}", self.field.format_elem(c))?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", i)?,
            }
        }
        Ok(())
    }
}

impl Poly {
    /// Parses either the human form (`x^4+x+1`) or the ascending
    /// coefficient form (`1,1,0,0,1`). Numeric values are reduced mod q.
    pub fn parse(field: PrimeField, s: &str) -> Result<Poly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::parse("polynomial", s));
        }
        if s.contains('x') {
            Self::parse_human(field, s)
        } else if s.contains(',') {
            Self::parse_coeffs(field, s)
        } else {
            // A lone integer is a constant polynomial in either form.
            let v: u64 = s.parse().map_err(|_| Error::parse("polynomial", s))?;
            Ok(Poly::constant(field, field.reduce(v)))
        }
    }

    fn parse_coeffs(field: PrimeField, s: &str) -> Result<Poly> {
        let mut coeffs = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let v: u64 = tok.parse().map_err(|_| Error::parse("coefficient", tok))?;
            coeffs.push(field.reduce(v));
        }
        Ok(Poly::new(field, coeffs))
    }

    fn parse_human(field: PrimeField, s: &str) -> Result<Poly> {
        let mut acc = Poly::zero(field);
        for term in s.split('+') {
            let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            if term.is_empty() {
                return Err(Error::parse("polynomial term", term.as_str()));
            }
            let (coeff, power) = match term.find('x') {
                None => {
                    let v: u64 =
                        term.parse().map_err(|_| Error::parse("polynomial term", &term))?;
                    (field.reduce(v), 0usize)
                }
                Some(xi) => {
                    let head = &term[..xi];
                    let coeff = if head.is_empty() {
                        1 % field.q()
                    } else {
                        let head = head.strip_suffix('*').unwrap_or(head);
                        let v: u64 =
                            head.parse().map_err(|_| Error::parse("polynomial term", &term))?;
                        field.reduce(v)
                    };
                    let tail = &term[xi + 1..];
                    let power = if tail.is_empty() {
                        1usize
                    } else {
                        let exp = tail
                            .strip_prefix('^')
                            .ok_or_else(|| Error::parse("polynomial term", &term))?;
                        exp.parse().map_err(|_| Error::parse("polynomial term", &term))?
                    };
                    (coeff, power)
                }
            };
            acc = acc.add(&Poly::monomial(field, coeff, power));
        }
        Ok(acc)
    }

    /// Convenience constructor from plain integer coefficients (ascending).
    pub fn from_ints(field: PrimeField, coeffs: &[u64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }
}
