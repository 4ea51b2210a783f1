//! α-splitting subspace counting.
//!
//! F_{q^{mn}} is modeled as F_q[X]/(f) for a primitive f of degree mn,
//! with α the residue class of X. An m-dimensional F_q-subspace W is
//! α-splitting when W + αW + ... + α^{n-1}W has full dimension mn (the
//! sum is then automatically direct, by counting). Subspaces are
//! enumerated once each through their reduced-row-echelon canonical
//! bases, so the Gaussian binomial doubles as a free self-check.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::MatFq;
use crate::order::is_primitive;
use crate::poly::Poly;
use num_bigint::BigUint;

/// Largest number of subspaces we are willing to enumerate.
pub const SUBSPACE_CAP: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct SplittingReport {
    pub q: u64,
    pub m: usize,
    pub n: usize,
    /// Minimal polynomial of the primitive element α — the input f.
    pub alpha_minpoly: Poly,
    pub subspace_count: u64,
}

/// Gaussian binomial [n choose k]_q: the number of k-dimensional
/// subspaces of F_q^n, by the Pascal-type recurrence
/// [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let q = BigUint::from(q);
    // row[j] = [i choose j]_q for the current i
    let mut row = vec![BigUint::from(0u32); k + 1];
    row[0] = BigUint::from(1u32);
    for _ in 1..=n {
        for j in (1..=k).rev() {
            let scaled = q.pow(j as u32) * &row[j];
            row[j] = &row[j - 1] + scaled;
        }
    }
    row[k].clone()
}

/// Count the α-splitting m-dimensional subspaces for f primitive of
/// degree mn.
pub fn splitting_count(f: &Poly, m: usize, n: usize) -> Result<SplittingReport> {
    let field = *f.field();
    let q = field.q();
    let d = m * n;
    if f.degree() != Some(d) {
        return Err(Error::DegreeMismatch {
            expected: d,
            got: f.coeffs().len().saturating_sub(1),
        });
    }
    if !is_primitive(f)? {
        return Err(Error::NotPrimitive(f.to_string(), q));
    }
    let total = gaussian_binomial(d, m, q);
    if total > BigUint::from(SUBSPACE_CAP) {
        return Err(Error::infeasible(
            "subspace enumeration",
            format!("[{} choose {}]_{} = {} exceeds {}", d, m, q, total, SUBSPACE_CAP),
        ));
    }

    let alpha = mult_by_alpha(f);
    let mut visited = 0u64;
    let mut count = 0u64;
    for_each_rref_basis(field, d, m, |basis| {
        visited += 1;
        if spans_all_under_alpha(basis, &alpha, n) {
            count += 1;
        }
    });
    assert_eq!(
        BigUint::from(visited),
        total,
        "echelon enumeration must visit each subspace exactly once"
    );
    Ok(SplittingReport { q, m, n, alpha_minpoly: f.clone(), subspace_count: count })
}

/// Multiplication by α on F_q[X]/(f) in the power basis, acting on row
/// coefficient vectors: row i holds X^{i+1} mod f.
fn mult_by_alpha(f: &Poly) -> MatFq {
    let field = *f.field();
    let d = f.deg();
    let mut mat = MatFq::zero(field, d, d);
    let mut pow = Poly::x(field).rem(f);
    for i in 0..d {
        for j in 0..d {
            mat.set(i, j, pow.coeff(j));
        }
        if i + 1 < d {
            pow = pow.shift(1).rem(f);
        }
    }
    mat
}

/// Does W + αW + ... + α^{n-1}W have full dimension?
fn spans_all_under_alpha(basis: &[Vec<u64>], alpha: &MatFq, n: usize) -> bool {
    let d = alpha.rows();
    let m = basis.len();
    let mut stacked = MatFq::zero(alpha.field(), m * n, d);
    let mut rows: Vec<Vec<u64>> = basis.to_vec();
    for t in 0..n {
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                stacked.set(t * m + r, c, v);
            }
        }
        if t + 1 < n {
            for row in &mut rows {
                *row = alpha.row_vec_mul(row);
            }
        }
    }
    stacked.rank() == d
}

/// Visit the reduced-row-echelon basis of every m-dimensional subspace
/// of F_q^d exactly once: choose pivot columns, then run an odometer
/// over the free positions (entries right of the pivot in non-pivot
/// columns).
fn for_each_rref_basis(field: PrimeField, d: usize, m: usize, mut visit: impl FnMut(&[Vec<u64>])) {
    let q = field.q();
    let mut pivots: Vec<usize> = (0..m).collect();
    if m == 0 || m > d {
        if m == 0 {
            visit(&[]);
        }
        return;
    }
    loop {
        // Free positions for this pivot choice.
        let is_pivot = |c: usize| pivots.binary_search(&c).is_ok();
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            for c in p + 1..d {
                if !is_pivot(c) {
                    free.push((r, c));
                }
            }
        }
        let mut basis = vec![vec![0u64; d]; m];
        for (r, &p) in pivots.iter().enumerate() {
            basis[r][p] = 1;
        }
        let mut digits = vec![0u64; free.len()];
        loop {
            visit(&basis);
            // advance the odometer
            let mut k = 0;
            loop {
                if k == free.len() {
                    break;
                }
                digits[k] += 1;
                let (r, c) = free[k];
                if digits[k] < q {
                    basis[r][c] = digits[k];
                    break;
                }
                digits[k] = 0;
                basis[r][c] = 0;
                k += 1;
            }
            if k == free.len() {
                break;
            }
        }
        // next pivot combination (ascending lexicographic)
        let mut i = m;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < d - (m - i) {
                pivots[i] += 1;
                for j in i + 1..m {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}
