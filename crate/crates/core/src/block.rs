//! Block companion matrices: the state-transition form of a σ-LFSR.
//!
//! A tuple (C_0, ..., C_{n-1}) of m x m blocks expands to the mn x mn
//! matrix with identity blocks on the subdiagonal and the C_i stacked
//! in the last block column. Its characteristic polynomial equals the
//! m x m polynomial determinant
//!     Δ(X) = det(I_m X^n - C_{n-1} X^{n-1} - ... - C_0),
//! which is how primitivity is decided without ever expanding in hot
//! paths.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::MatFq;
use crate::poly::Poly;
use crate::polymat::PolyMat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockCompanion {
    field: PrimeField,
    m: usize,
    n: usize,
    blocks: Vec<MatFq>,
}

impl BlockCompanion {
    /// Build from the tap blocks C_0, ..., C_{n-1}; all must be square
    /// of one common dimension.
    pub fn new(field: PrimeField, blocks: Vec<MatFq>) -> Result<BlockCompanion> {
        if blocks.is_empty() {
            return Err(Error::LengthMismatch { expected: 1, got: 0 });
        }
        let m = blocks[0].rows();
        for b in &blocks {
            if !b.is_square() {
                return Err(Error::NotSquare { rows: b.rows(), cols: b.cols() });
            }
            if b.rows() != m {
                return Err(Error::DimensionMismatch { expected: m, got: b.rows() });
            }
        }
        let n = blocks.len();
        Ok(BlockCompanion { field, m, n, blocks })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[MatFq] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &MatFq {
        &self.blocks[i]
    }

    /// The expanded mn x mn state-transition matrix: block (j+1, j) is
    /// I_m, block (i, n-1) is C_i. Row states multiply it on the right.
    pub fn expand(&self) -> MatFq {
        let (m, n) = (self.m, self.n);
        let d = m * n;
        let mut t = MatFq::zero(self.field, d, d);
        for j in 0..n.saturating_sub(1) {
            for r in 0..m {
                t.set((j + 1) * m + r, j * m + r, 1);
            }
        }
        for (i, c) in self.blocks.iter().enumerate() {
            for r in 0..m {
                for col in 0..m {
                    t.set(i * m + r, (n - 1) * m + col, c.get(r, col));
                }
            }
        }
        t
    }

    /// Δ(X) = det(I_m X^n - C_{n-1}X^{n-1} - ... - C_0), always monic
    /// of degree mn; equals char_poly(expand()) but costs an m x m
    /// determinant instead of an mn x mn one.
    pub fn delta_poly(&self) -> Result<Poly> {
        let (m, n) = (self.m, self.n);
        let field = self.field;
        let mut entries = Vec::with_capacity(m * m);
        for r in 0..m {
            for c in 0..m {
                let mut coeffs = vec![0u64; n + 1];
                for (i, b) in self.blocks.iter().enumerate() {
                    coeffs[i] = field.neg_elem(b.get(r, c));
                }
                coeffs[n] = if r == c { 1 } else { 0 };
                entries.push(Poly::new(field, coeffs));
            }
        }
        let delta = PolyMat::new(field, m, entries)?.det();
        debug_assert_eq!(delta.degree(), Some(m * n), "Δ must be monic of degree mn");
        Ok(delta)
    }

    /// The expanded matrix is invertible exactly when C_0 is.
    pub fn is_invertible(&self) -> bool {
        self.blocks[0].is_invertible()
    }

    /// Labeled block list, e.g. "C0=1,1;0,1;C1=0,0;1,0".
    pub fn to_text(&self) -> String {
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| format!("C{}={}", i, b.to_text()))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Parse the labeled form produced by `to_text`. Labels must be
    /// C0, C1, ... in order; the block dimension is inferred.
    pub fn parse(field: PrimeField, s: &str) -> Result<BlockCompanion> {
        let s = s.trim();
        let starts: Vec<usize> = s
            .char_indices()
            .filter(|&(_, ch)| ch == 'C')
            .map(|(i, _)| i)
            .collect();
        if starts.first() != Some(&0) {
            return Err(Error::parse("block list", s));
        }
        let mut blocks = Vec::new();
        for (k, &start) in starts.iter().enumerate() {
            let end = starts.get(k + 1).copied().unwrap_or(s.len());
            let seg = s[start..end].trim().trim_end_matches(';');
            let eq = seg.find('=').ok_or_else(|| Error::parse("block", seg))?;
            let label = &seg[..eq];
            if label != format!("C{}", k) {
                return Err(Error::parse("block label", label));
            }
            blocks.push(MatFq::parse(field, &seg[eq + 1..])?);
        }
        BlockCompanion::new(field, blocks)
    }

    /// Parse the unlabeled pipe form used on the command line, e.g.
    /// "1,1;0,1|0,0;1,0".
    pub fn parse_piped(field: PrimeField, s: &str) -> Result<BlockCompanion> {
        let blocks = s
            .trim()
            .split('|')
            .map(|seg| MatFq::parse(field, seg))
            .collect::<Result<Vec<_>>>()?;
        BlockCompanion::new(field, blocks)
    }
}

impl std::fmt::Display for BlockCompanion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
