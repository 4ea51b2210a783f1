//! Square matrices over F_q[X] and their exact determinants.
//!
//! One determinant routine serves two callers: the characteristic
//! polynomial det(XI - A) of a scalar matrix, and the sigma-LFSR
//! determinant Delta(X) = det(I X^n - C_{n-1} X^{n-1} - ... - C_0).
//! Cofactor expansion is exact over F_q[X]; expanding column by column
//! and memoizing on the set of unused rows turns the naive d! walk into
//! O(2^d · d) polynomial operations, comfortable for the d <= 12 cap.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::Poly;

/// The dimension cap for determinant work (2^d memo table).
pub const POLYMAT_DIM_CAP: usize = 12;

/// A d x d matrix of polynomials over one prime field, row-major.
#[derive(Clone, Debug)]
pub struct PolyMat {
    field: PrimeField,
    dim: usize,
    entries: Vec<Poly>,
}

impl PolyMat {
    pub fn new(field: PrimeField, dim: usize, entries: Vec<Poly>) -> Result<PolyMat> {
        if entries.len() != dim * dim {
            return Err(Error::LengthMismatch { expected: dim * dim, got: entries.len() });
        }
        if dim > POLYMAT_DIM_CAP {
            return Err(Error::infeasible(
                "polynomial determinant",
                format!("dimension {} exceeds cap {}", dim, POLYMAT_DIM_CAP),
            ));
        }
        Ok(PolyMat { field, dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.dim + c]
    }

    /// Exact determinant by memoized cofactor expansion.
    pub fn det(&self) -> Poly {
        let d = self.dim;
        if d == 0 {
            return Poly::one(self.field);
        }
        // memo[mask] = det of the submatrix on rows in `mask` and the
        // last popcount(mask) columns. The full determinant lives at the
        // all-ones mask; the empty minor is 1.
        let mut memo: Vec<Option<Poly>> = vec![None; 1usize << d];
        memo[0] = Some(Poly::one(self.field));
        self.minor(&mut memo, (1usize << d) - 1)
    }

    fn minor(&self, memo: &mut Vec<Option<Poly>>, mask: usize) -> Poly {
        if let Some(p) = &memo[mask] {
            return p.clone();
        }
        let d = self.dim;
        let col = d - (mask.count_ones() as usize);
        let mut acc = Poly::zero(self.field);
        let mut row_pos = 0usize; // position of the row within the mask
        for r in 0..d {
            if mask & (1 << r) == 0 {
                continue;
            }
            let e = self.entry(r, col);
            if !e.is_zero() {
                let sub = self.minor(memo, mask & !(1 << r));
                let term = e.mul(&sub);
                acc = if row_pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            row_pos += 1;
        }
        memo[mask] = Some(acc.clone());
        acc
    }
}
