//! Irreducibility, polynomial order, and primitivity.
//!
//! The order of f (least e with f | x^e - 1) is found by stripping prime
//! factors downward from the group order rather than scanning divisors:
//! for irreducible f of degree n over a field of size Q, ord f divides
//! Q^n - 1, and each prime factor p of Q^n - 1 can be divided out of the
//! candidate exponent while x^(e/p) stays 1 mod f. Matrix orders and
//! extension-field element orders reduce to this same routine.

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::intfactor::{factor_pow_minus_1, pow_u128};
use crate::poly::{Poly, Polynomial};
use crate::polyfactor::factor_monic_seeded;

/// Total degree of the field over its prime subfield (1 for F_q itself).
fn base_degree<F: Field>(field: &F) -> u32 {
    let p = field.characteristic() as u128;
    let mut size = field.size();
    let mut m = 0u32;
    while size > 1 {
        debug_assert!(size % p == 0);
        size /= p;
        m += 1;
    }
    m
}

fn check_monic_nonconstant<F: Field>(f: &Polynomial<F>) -> Result<usize> {
    if f.degree().map_or(true, |d| d == 0) {
        return Err(Error::ConstantPoly(f.to_string()));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic(f.to_string()));
    }
    Ok(f.deg())
}

/// Rabin's irreducibility test: f of degree n is irreducible iff
/// x^(Q^n) = x (mod f) and gcd(x^(Q^(n/r)) - x, f) = 1 for each prime
/// r | n. The Frobenius powers are built by iterating t -> t^Q mod f,
/// never by forming the giant exponent directly.
pub fn is_irreducible<F: Field>(f: &Polynomial<F>) -> Result<bool> {
    let n = check_monic_nonconstant(f)?;
    let field = f.field().clone();
    let q = field.size();
    let x = Polynomial::x(field.clone());

    // frob[k] caches x^(Q^k) mod f as k advances.
    let mut frob = x.rem(f);
    let mut reached = 0usize;
    let frob_to = |target: usize, frob: &mut Polynomial<F>, reached: &mut usize| {
        assert!(target >= *reached);
        while *reached < target {
            *frob = frob.pow_mod(q, f);
            *reached += 1;
        }
    };

    let mut prime_divisors: Vec<usize> = Vec::new();
    {
        let mut rest = n;
        let mut p = 2;
        while p * p <= rest {
            if rest % p == 0 {
                prime_divisors.push(p);
                while rest % p == 0 {
                    rest /= p;
                }
            }
            p += 1;
        }
        if rest > 1 {
            prime_divisors.push(rest);
        }
    }
    // Ascending n/r keeps the Frobenius iteration monotone.
    prime_divisors.sort_unstable_by_key(|&r| n / r);

    for r in prime_divisors {
        frob_to(n / r, &mut frob, &mut reached);
        let g = f.gcd(&frob.sub(&x));
        if !g.is_one() {
            return Ok(false);
        }
    }
    frob_to(n, &mut frob, &mut reached);
    Ok(frob == x.rem(f))
}

/// Order of an element of a group of order `group_order` (given by its
/// prime factorization): strips each prime while the power stays trivial.
fn strip_order<P>(group_order: u128, factors: &[(u64, u32)], is_one_at: P) -> u128
where
    P: Fn(u128) -> bool,
{
    let mut e = group_order;
    for &(p, _) in factors {
        let p = p as u128;
        while e % p == 0 && is_one_at(e / p) {
            e /= p;
        }
    }
    e
}

/// Least e >= 1 with f | x^e - 1, for monic f with f(0) != 0.
///
/// Irreducible f divides x^(Q^n - 1) - 1, so the order divides Q^n - 1
/// and stripping applies directly; a reducible f is factored first and
/// the order assembled by the product rule (lcm of the factor orders
/// times the characteristic power covering the largest multiplicity).
pub fn poly_order<F: Field>(f: &Polynomial<F>) -> Result<u128> {
    poly_order_seeded(f, 0)
}

pub fn poly_order_seeded<F: Field>(f: &Polynomial<F>, seed: u64) -> Result<u128> {
    let n = check_monic_nonconstant(f)?;
    let field = f.field().clone();
    if field.is_zero(&f.coeff(0)) {
        return Err(Error::ZeroConstantTerm(f.to_string()));
    }

    if is_irreducible(f)? {
        return irreducible_order(f, n);
    }

    let p = field.characteristic() as u128;
    let mut lcm_val: u128 = 1;
    let mut max_mult: u32 = 1;
    for (g, mult) in factor_monic_seeded(f, seed) {
        let e = irreducible_order(&g, g.deg())?;
        lcm_val = lcm_u128(lcm_val, e);
        max_mult = max_mult.max(mult);
    }
    let mut p_pow: u128 = 1;
    while p_pow < max_mult as u128 {
        p_pow *= p;
    }
    Ok(lcm_val * p_pow)
}

fn irreducible_order<F: Field>(f: &Polynomial<F>, n: usize) -> Result<u128> {
    let field = f.field().clone();
    let q = field.characteristic();
    let total_deg = base_degree(&field) * n as u32;
    let group_order = pow_u128(q, total_deg) - 1;
    let factors = factor_pow_minus_1(q, total_deg)?;
    let x = Polynomial::x(field);
    let ord = strip_order(group_order, &factors, |e| x.pow_mod(e, f).is_one());
    Ok(ord)
}

fn lcm_u128(a: u128, b: u128) -> u128 {
    let gcd = {
        let (mut a, mut b) = (a, b);
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    };
    a / gcd * b
}

/// True iff f(0) != 0, f is irreducible of degree n, and ord f = Q^n - 1.
pub fn is_primitive_in<F: Field>(f: &Polynomial<F>) -> Result<bool> {
    let n = check_monic_nonconstant(f)?;
    let field = f.field().clone();
    if field.is_zero(&f.coeff(0)) {
        return Ok(false);
    }
    if !is_irreducible(f)? {
        return Ok(false);
    }
    let total_deg = base_degree(&field) * n as u32;
    let group_order = pow_u128(field.characteristic(), total_deg) - 1;
    Ok(poly_order(f)? == group_order)
}

/// Primitivity over the prime field.
pub fn is_primitive(f: &Poly) -> Result<bool> {
    is_primitive_in(f)
}

/// Reusable primitivity test for many monic degree-n polynomials over
/// one prime field: q^n - 1 is factored once at construction, and each
/// check costs an irreducibility test plus one modular power per prime
/// divisor. Agrees with `is_primitive` everywhere.
pub struct PrimitivityChecker {
    field: PrimeField,
    n: usize,
    cofactors: Vec<u128>,
}

impl PrimitivityChecker {
    pub fn new(field: PrimeField, n: usize) -> Result<PrimitivityChecker> {
        let group_order = pow_u128(field.q(), n as u32) - 1;
        let cofactors = factor_pow_minus_1(field.q(), n as u32)?
            .iter()
            .map(|&(p, _)| group_order / p as u128)
            .collect();
        Ok(PrimitivityChecker { field, n, cofactors })
    }

    pub fn check(&self, f: &Poly) -> bool {
        if f.degree() != Some(self.n) || !f.is_monic() || f.coeff(0) == 0 {
            return false;
        }
        if !is_irreducible(f).expect("prime field irreducibility is total") {
            return false;
        }
        // For irreducible f the order of the root x divides q^n - 1;
        // it is the full group order iff no maximal proper divisor
        // exponent collapses x to 1.
        let x = Polynomial::x(self.field);
        self.cofactors.iter().all(|&e| !x.pow_mod(e, f).is_one())
    }
}

/// Multiplicative order of a nonzero field element.
pub fn elem_order<F: Field>(field: &F, a: &F::Elem) -> Result<u128> {
    if field.is_zero(a) {
        return Err(Error::ZeroInverse);
    }
    let m = base_degree(field);
    let group_order = field.size() - 1;
    let factors = factor_pow_minus_1(field.characteristic(), m)?;
    Ok(strip_order(group_order, &factors, |e| {
        field.is_one(&field.pow(a, e))
    }))
}

/// All monic primitive polynomials of degree n over F_q, in canonical
/// (descending-coefficient lexicographic) order. Capped at q^n <= 2^24.
pub fn enumerate_primitive(n: usize, field: PrimeField) -> Result<Vec<Poly>> {
    let q = field.q();
    let count = match q.checked_pow(n as u32).filter(|&c| c <= 1 << 24) {
        Some(c) => c,
        None => {
            return Err(Error::infeasible(
                "primitive enumeration",
                format!("q^n = {}^{} exceeds 2^24", q, n),
            ))
        }
    };
    let mut out = Vec::new();
    for v in 0..count {
        if v % q == 0 {
            continue; // constant term 0 can never be primitive
        }
        let f = poly_from_index(field, n, v);
        if is_primitive(&f)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// The canonically least primitive polynomial of degree n: the first
/// element enumerate_primitive would emit, found lazily so large n
/// (degree 32, 64 moduli) stay cheap.
pub fn first_primitive(n: usize, field: PrimeField) -> Result<Poly> {
    let q = field.q();
    let count = pow_u128(q, n as u32);
    let mut v: u128 = 1;
    while v < count {
        if v % q as u128 != 0 {
            let f = poly_from_index(field, n, v as u64);
            if is_primitive(&f)? {
                return Ok(f);
            }
        }
        v += 1;
    }
    Err(Error::infeasible(
        "primitive search",
        format!("no primitive polynomial of degree {} over F_{}", n, q),
    ))
}

/// Monic degree-n polynomial whose lower coefficients are the base-q
/// digits of v (c_0 least significant).
fn poly_from_index(field: PrimeField, n: usize, v: u64) -> Poly {
    let q = field.q();
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut v = v;
    for _ in 0..n {
        coeffs.push(v % q);
        v /= q;
    }
    coeffs.push(1);
    Poly::new(field, coeffs)
}
