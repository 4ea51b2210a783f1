//! Factorization of monic polynomials over finite fields.
//!
//! The pipeline is the classical one: squarefree decomposition (with the
//! p-th-root step needed in characteristic p), distinct-degree splitting
//! by iterated Frobenius, then equal-degree splitting. Equal-degree
//! splitting is randomized Cantor-Zassenhaus for odd fields and the
//! trace construction in characteristic 2; callers pass a seeded
//! generator so results are reproducible.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::poly::Polynomial;

/// Squarefree decomposition of a monic nonconstant polynomial:
/// pairwise-coprime monic squarefree parts with their multiplicities,
/// so that `f = prod g_i^{m_i}`.
pub fn squarefree_decomposition<F: Field>(f: &Polynomial<F>) -> Vec<(Polynomial<F>, u32)> {
    assert!(f.is_monic(), "squarefree decomposition of non-monic input");
    assert!(f.deg() >= 1);
    let field = f.field().clone();
    let p = field.characteristic() as u32;
    let one = Polynomial::one(field.clone());
    let mut out = Vec::new();

    let deriv = f.derivative();
    let mut c = f.gcd(&deriv); // gcd(f, 0) = f covers f' = 0
    let mut w = f.divrem(&c).0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if !z.is_one() {
            out.push((z, i));
        }
        w = y;
        c = c.divrem(&w).0;
        i += 1;
    }
    if !c.is_one() {
        // c is a p-th power: c(x) = g(x)^p with g recovered coefficient-wise.
        let root = pth_root(&c);
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * p));
        }
    }
    debug_assert!(!out.is_empty() || f == &one);
    out
}

/// The p-th root of a polynomial of the form g(x^p).
fn pth_root<F: Field>(f: &Polynomial<F>) -> Polynomial<F> {
    let field = f.field().clone();
    let p = field.characteristic() as usize;
    // In F_Q the p-th root of a scalar c is c^(Q/p).
    let root_exp = field.size() / field.characteristic() as u128;
    let mut coeffs = Vec::with_capacity(f.coeffs().len() / p + 1);
    for i in (0..f.coeffs().len()).step_by(p) {
        coeffs.push(field.pow(&f.coeff(i), root_exp));
    }
    Polynomial::new(field, coeffs)
}

/// Distinct-degree decomposition of a monic squarefree polynomial:
/// pairs `(g_d, d)` where `g_d` is the product of all irreducible
/// factors of degree exactly `d`, for ascending `d`.
pub fn distinct_degree_decomposition<F: Field>(
    f: &Polynomial<F>,
) -> Vec<(Polynomial<F>, usize)> {
    assert!(f.is_monic());
    let field = f.field().clone();
    let q = field.size();
    let mut out = Vec::new();
    let mut v = f.clone();
    let mut h = Polynomial::x(field.clone());
    let mut d = 0usize;
    while v.degree().map_or(false, |dv| dv >= 2 * (d + 1)) {
        d += 1;
        h = h.pow_mod(q, &v); // h = x^(q^d) mod v
        let diff = h.sub(&Polynomial::x(field.clone()));
        let g = v.gcd(&diff);
        if !g.is_one() {
            out.push((g.clone(), d));
            v = v.divrem(&g).0;
            h = h.rem(&v);
        }
    }
    if !v.is_one() {
        let dv = v.deg();
        out.push((v, dv));
    }
    out
}

/// Splits a product of `deg(g)/d` distinct irreducible factors, all of
/// degree `d`, into those factors.
pub fn equal_degree_split<F: Field, R: Rng>(
    g: &Polynomial<F>,
    d: usize,
    rng: &mut R,
) -> Vec<Polynomial<F>> {
    assert!(g.is_monic());
    assert!(g.deg() % d == 0);
    if g.deg() == d {
        return vec![g.clone()];
    }
    let field = g.field().clone();
    let one = Polynomial::one(field.clone());
    loop {
        let a = random_poly(&field, g.deg(), rng);
        if a.is_zero() {
            continue;
        }
        // A shared factor with the random element already splits g.
        let shared = g.gcd(&a);
        if !shared.is_one() && shared.deg() < g.deg() {
            return split_on(g, &shared, d, rng);
        }
        let candidate = if field.characteristic() == 2 {
            // Trace map into F_2: T(a) = sum a^(2^i) over i < log2(q^d).
            let k = field.size().trailing_zeros() as usize * d;
            let mut term = a.rem(g);
            let mut trace = term.clone();
            for _ in 1..k {
                term = term.mul_mod(&term, g);
                trace = trace.add(&term);
            }
            trace
        } else {
            let e = (BigUint::from(field.size()).pow(d as u32) - BigUint::one()) / 2u32;
            let b = a.pow_mod_big(&e, g);
            b.sub(&one)
        };
        let t = g.gcd(&candidate);
        if !t.is_one() && t.deg() < g.deg() {
            return split_on(g, &t, d, rng);
        }
    }
}

fn split_on<F: Field, R: Rng>(
    g: &Polynomial<F>,
    t: &Polynomial<F>,
    d: usize,
    rng: &mut R,
) -> Vec<Polynomial<F>> {
    let rest = g.divrem(t).0;
    let mut out = equal_degree_split(t, d, rng);
    out.extend(equal_degree_split(&rest, d, rng));
    out
}

fn random_poly<F: Field, R: Rng>(field: &F, below_deg: usize, rng: &mut R) -> Polynomial<F> {
    let coeffs = (0..below_deg).map(|_| field.sample(rng)).collect();
    Polynomial::new(field.clone(), coeffs)
}

/// Full factorization of a monic nonconstant polynomial into monic
/// irreducible factors with multiplicities, in canonical ascending
/// order of the factors.
pub fn factor_monic<F: Field, R: Rng>(
    f: &Polynomial<F>,
    rng: &mut R,
) -> Vec<(Polynomial<F>, u32)> {
    let mut out = Vec::new();
    for (g, m) in squarefree_decomposition(f) {
        for (prod, d) in distinct_degree_decomposition(&g) {
            for irr in equal_degree_split(&prod, d, rng) {
                out.push((irr, m));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// [`factor_monic`] with a fixed ChaCha stream, the deterministic entry
/// point used by everything user-facing.
pub fn factor_monic_seeded<F: Field>(
    f: &Polynomial<F>,
    seed: u64,
) -> Vec<(Polynomial<F>, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    factor_monic(f, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::Poly;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn all_monic_of_degree(field: PrimeField, d: usize) -> Vec<Poly> {
        let q = field.q();
        let count = q.pow(d as u32);
        (0..count)
            .map(|v| {
                let mut coeffs: Vec<u64> = (0..d as u32).map(|i| {
                    let div = q.pow(i);
                    (v / div) % q
                }).collect();
                coeffs.push(1);
                Poly::new(field, coeffs)
            })
            .collect()
    }

    /// Irreducibility by exhaustive trial division, the independent oracle.
    fn brute_irreducible(f: &Poly) -> bool {
        let d = match f.degree() {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        for dd in 1..=d / 2 {
            for g in all_monic_of_degree(*f.field(), dd) {
                if f.rem(&g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn known_factorizations_over_f2() {
        let f = f2();
        let p = |s: &str| Poly::parse(f, s).unwrap();
        assert_eq!(
            factor_monic_seeded(&p("x^4+x^2+1"), 0),
            vec![(p("x^2+x+1"), 2)]
        );
        assert_eq!(factor_monic_seeded(&p("x^2+1"), 0), vec![(p("x+1"), 2)]);
        // x^8 + x = x (x+1) (x^3+x+1) (x^3+x^2+1): all irreducibles of degree dividing 3.
        assert_eq!(
            factor_monic_seeded(&p("x^8+x"), 0),
            vec![
                (p("x"), 1),
                (p("x+1"), 1),
                (p("x^3+x+1"), 1),
                (p("x^3+x^2+1"), 1)
            ]
        );
    }

    #[test]
    fn char_p_multiplicities() {
        let f = f2();
        let p = |s: &str| Poly::parse(f, s).unwrap();
        // (x+1)^4 (x^2+x+1)^2 has every multiplicity divisible by p = 2.
        let g = p("x+1").pow_mod(4, &p("x^9")).mul(&p("x^2+x+1").pow_mod(2, &p("x^9")));
        assert_eq!(
            factor_monic_seeded(&g, 0),
            vec![(p("x+1"), 4), (p("x^2+x+1"), 2)]
        );
        let f3 = PrimeField::new(3).unwrap();
        let u = Poly::parse(f3, "x+1").unwrap();
        let cube = u.mul(&u).mul(&u);
        assert_eq!(factor_monic_seeded(&cube, 0), vec![(u, 3)]);
    }

    #[test]
    fn x_pow_p_minus_x_splits_into_linears() {
        for q in [3u64, 5, 7] {
            let field = PrimeField::new(q).unwrap();
            let mut coeffs = vec![0u64; q as usize + 1];
            coeffs[1] = q - 1; // -x
            coeffs[q as usize] = 1;
            let f = Poly::new(field, coeffs);
            let factors = factor_monic_seeded(&f, 7);
            assert_eq!(factors.len(), q as usize);
            for (g, m) in &factors {
                assert_eq!(*m, 1);
                assert_eq!(g.deg(), 1);
            }
        }
    }

    #[test]
    fn random_products_reconstruct_and_factors_are_irreducible() {
        for q in [2u64, 3, 5] {
            let field = PrimeField::new(q).unwrap();
            for v in 0..200u64 {
                // Pseudo-arbitrary monic polynomial of degree 6.
                let coeffs: Vec<u64> = (0..6)
                    .map(|i| (v.wrapping_mul(2654435761).wrapping_add(i * 97 + q)) % q)
                    .chain([1])
                    .collect();
                let poly = Poly::new(field, coeffs);
                let factors = factor_monic_seeded(&poly, v);
                let mut prod = Poly::one(field);
                for (g, m) in &factors {
                    assert!(g.is_monic());
                    assert!(
                        brute_irreducible(g),
                        "reducible factor {} of {} over F_{}",
                        g,
                        poly,
                        q
                    );
                    for _ in 0..*m {
                        prod = prod.mul(g);
                    }
                }
                assert_eq!(prod, poly);
            }
        }
    }

    #[test]
    fn factorization_is_seed_independent() {
        let f = f2();
        let poly = Poly::parse(f, "x^12+x^7+x^2+x+1").unwrap();
        let base = factor_monic_seeded(&poly, 0);
        for seed in 1..10 {
            assert_eq!(factor_monic_seeded(&poly, seed), base);
        }
    }
}
