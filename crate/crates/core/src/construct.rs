//! Constructive inverse of the characteristic map: given a primitive
//! polynomial f of degree mn over F_q, produce a block-companion tuple
//! whose Δ(X) equals f.
//!
//! The construction: factor f over F_{q^m} (it splits into m conjugate
//! irreducible factors of degree n), pick the canonically least factor
//! f_0 = X^n - β_{n-1}X^{n-1} - ... - β_0, and push its coefficients
//! through the algebra embedding θ : F_{q^m} -> F_q[A], where A is the
//! companion matrix of the extension's modulus. The tap blocks are
//! C_i = θ(β_i); C_0 is invertible because β_0 = ±f_0(0) is nonzero.

use crate::block::BlockCompanion;
use crate::error::{Error, Result};
use crate::ext::{irreducible_factor_deg_n, ExtField};
use crate::field::Field;
use crate::matrix::{companion, theta_embed};
use crate::order::is_primitive;
use crate::poly::Poly;
use crate::polymat::POLYMAT_DIM_CAP;

pub fn construct_primitive_sigma(f: &Poly, m: usize, n: usize) -> Result<BlockCompanion> {
    let field = *f.field();
    if f.degree() != Some(m * n) {
        return Err(Error::DegreeMismatch {
            expected: m * n,
            got: f.coeffs().len().saturating_sub(1),
        });
    }
    if !is_primitive(f)? {
        return Err(Error::NotPrimitive(f.to_string(), field.q()));
    }
    let parent = ExtField::with_default_modulus(field, m)?;
    let f0 = irreducible_factor_deg_n(f, &parent, n)?;
    let a = companion(parent.modulus())?;
    let mut blocks = Vec::with_capacity(n);
    for i in 0..n {
        let beta = parent.elem(parent.neg(&f0.coeff(i)))?;
        blocks.push(theta_embed(&beta, &a)?);
    }
    let bc = BlockCompanion::new(field, blocks)?;
    if m <= POLYMAT_DIM_CAP {
        assert_eq!(
            bc.delta_poly()?,
            *f,
            "constructed tuple must have characteristic polynomial f"
        );
        assert!(bc.is_invertible(), "C_0 = θ(β_0) with β_0 ≠ 0 must be invertible");
    }
    Ok(bc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::matrix::MatFq;
    use crate::order::enumerate_primitive;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn roundtrip_on_known_polynomials() {
        for (text, m, n) in [
            ("x^4+x+1", 2usize, 2usize),
            ("x^4+x^3+1", 2, 2),
            ("x^6+x+1", 2, 3),
            ("x^6+x+1", 3, 2),
            ("x^4+x+1", 4, 1),
            ("x^4+x+1", 1, 4),
        ] {
            let f = Poly::parse(f2(), text).unwrap();
            let bc = construct_primitive_sigma(&f, m, n).unwrap();
            assert_eq!(bc.m(), m);
            assert_eq!(bc.n(), n);
            assert!(bc.is_invertible());
            assert_eq!(bc.delta_poly().unwrap(), f, "m={} n={}", m, n);
        }
    }

    #[test]
    fn scalar_case_yields_companion_taps() {
        // m = 1: the tuple is just the tap list of f, i.e. C_i = [c_i]
        // where f = X^n - c_{n-1}X^{n-1} - ... - c_0.
        let f = Poly::parse(f2(), "x^4+x+1").unwrap();
        let bc = construct_primitive_sigma(&f, 1, 4).unwrap();
        let expected: Vec<MatFq> = [1u64, 1, 0, 0]
            .iter()
            .map(|&c| MatFq::new(f2(), 1, 1, vec![c]).unwrap())
            .collect();
        assert_eq!(bc.blocks(), &expected[..]);
        let f3 = PrimeField::new(3).unwrap();
        let g = Poly::parse(f3, "x^2+x+2").unwrap(); // X^2 - 2X - 1
        let bc = construct_primitive_sigma(&g, 1, 2).unwrap();
        assert_eq!(bc.block(0).get(0, 0), 1);
        assert_eq!(bc.block(1).get(0, 0), 2);
        assert_eq!(bc.delta_poly().unwrap(), g);
    }

    #[test]
    fn every_primitive_polynomial_roundtrips() {
        // (m, n, q) cells small enough to sweep the whole of P(mn, q).
        for (m, n, q) in [(2usize, 2usize, 2u64), (2, 3, 2), (2, 2, 3)] {
            let field = PrimeField::new(q).unwrap();
            for f in enumerate_primitive(m * n, field).unwrap() {
                let bc = construct_primitive_sigma(&f, m, n).unwrap();
                assert!(bc.is_invertible());
                assert_eq!(bc.delta_poly().unwrap(), f);
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let not_primitive = Poly::parse(f2(), "x^4+x^3+x^2+x+1").unwrap();
        assert!(matches!(
            construct_primitive_sigma(&not_primitive, 2, 2),
            Err(Error::NotPrimitive(..))
        ));
        let f = Poly::parse(f2(), "x^4+x+1").unwrap();
        assert!(matches!(
            construct_primitive_sigma(&f, 2, 3),
            Err(Error::DegreeMismatch { expected: 6, got: 4 })
        ));
    }
}
