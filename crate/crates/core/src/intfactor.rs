//! Integer factorization by trial division and Euler's totient.
//!
//! Order computations need the prime factorization of group orders such
//! as q^n - 1. Within 64 bits this is plain trial division; beyond that,
//! `factor_pow_minus_1` splits q^n - 1 into its cyclotomic pieces
//! Phi_d(q) for d | n first, so each piece is small enough to trial
//! divide even when the full number is hundreds of bits wide.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Prime factorization of `n >= 1` as `(prime, multiplicity)` pairs in
/// ascending prime order; `1` factors as the empty product.
pub fn factor_integer(n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factor_integer of 0");
    let mut n = n;
    let mut out: Vec<(u64, u32)> = Vec::new();
    let strip = |p: u64, n: &mut u64, out: &mut Vec<(u64, u32)>| {
        if *n % p == 0 {
            let mut e = 0u32;
            while *n % p == 0 {
                *n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    };
    strip(2, &mut n, &mut out);
    strip(3, &mut n, &mut out);
    strip(5, &mut n, &mut out);
    // 2-3-5 wheel.
    const INC: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut p = 7u64;
    let mut i = 0usize;
    loop {
        match p.checked_mul(p) {
            Some(sq) if sq <= n => {}
            _ => break,
        }
        strip(p, &mut n, &mut out);
        p += INC[i];
        i = (i + 1) % INC.len();
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient from the trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = 1u64;
    for (p, e) in factor_integer(n) {
        phi *= p.pow(e - 1) * (p - 1);
    }
    phi
}

/// `base^exp` if it fits in a `u64`.
pub fn pow_checked(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// `base^exp` as a `u128`, panicking on overflow (callers enforce caps).
pub fn pow_u128(base: u64, exp: u32) -> u128 {
    (base as u128)
        .checked_pow(exp)
        .expect("power exceeds 128 bits")
}

/// Prime factorization of `q^n - 1` via the cyclotomic split
/// `q^n - 1 = prod_{d | n} Phi_d(q)`.
///
/// Every prime factor must fit in a `u64` piece; for the parameter
/// ranges used here (q up to a few hundred, n up to ~40) each
/// `Phi_d(q)` is far below 2^64 and trial division is instant.
pub fn factor_pow_minus_1(q: u64, n: u32) -> Result<Vec<(u64, u32)>> {
    assert!(q >= 2 && n >= 1);
    let mut phis: BTreeMap<u32, BigUint> = BTreeMap::new();
    let big_q = BigUint::from(q);
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mut val = big_q.pow(d) - BigUint::one();
        for (e, phi_e) in &phis {
            if d % e == 0 {
                debug_assert!((&val % phi_e) == BigUint::from(0u32));
                val /= phi_e;
            }
        }
        phis.insert(d, val);
    }
    let mut merged: BTreeMap<u64, u32> = BTreeMap::new();
    for (d, val) in phis {
        let val = val.to_u64().ok_or_else(|| {
            Error::infeasible(
                "integer factorization",
                format!("cyclotomic piece Phi_{}({}) exceeds 64 bits", d, q),
            )
        })?;
        for (p, e) in factor_integer(val) {
            *merged.entry(p).or_insert(0) += e;
        }
    }
    Ok(merged.into_iter().collect())
}

/// `phi(q^n - 1)` as a big integer, for totals that outgrow `u64`.
pub fn euler_phi_pow_minus_1(q: u64, n: u32) -> Result<BigUint> {
    let mut phi = BigUint::one();
    for (p, e) in factor_pow_minus_1(q, n)? {
        let p = BigUint::from(p);
        phi *= p.pow(e - 1) * (p - BigUint::one());
    }
    Ok(phi)
}
