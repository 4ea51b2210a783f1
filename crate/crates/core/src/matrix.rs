//! Exact dense matrix algebra over F_q.
//!
//! The order of an invertible matrix is never found by iterating powers:
//! it is the order of the minimal polynomial, which in turn comes from
//! prime-stripping the group order. The minimal polynomial itself comes
//! from Krylov dependency chains over the standard basis vectors.

use crate::error::{Error, Result};
use crate::ext::ExtElem;
use crate::field::PrimeField;
use crate::order::{is_primitive, poly_order};
use crate::poly::Poly;
use crate::polymat::{PolyMat, POLYMAT_DIM_CAP};

/// A rows x cols matrix over F_q, entries row-major and canonical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MatFq {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl MatFq {
    pub fn new(field: PrimeField, rows: usize, cols: usize, entries: Vec<u64>) -> Result<MatFq> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, got: entries.len() });
        }
        let entries = entries.into_iter().map(|e| field.reduce(e)).collect();
        Ok(MatFq { field, rows, cols, entries })
    }

    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> MatFq {
        MatFq { field, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, d: usize) -> MatFq {
        let mut m = MatFq::zero(field, d, d);
        for i in 0..d {
            m.entries[i * d + i] = 1 % field.q();
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = self.field.reduce(v);
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &MatFq) -> MatFq {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.field.add_elem(*a, *b))
            .collect();
        MatFq { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &MatFq) -> MatFq {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.field.sub_elem(*a, *b))
            .collect();
        MatFq { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, s: u64) -> MatFq {
        let s = self.field.reduce(s);
        let entries = self.entries.iter().map(|a| self.field.mul_elem(*a, s)).collect();
        MatFq { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn mul(&self, other: &MatFq) -> MatFq {
        assert_eq!(self.cols, other.rows, "matrix shape");
        let f = self.field;
        let mut entries = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    entries[idx] = f.add_elem(entries[idx], f.mul_elem(a, other.get(k, j)));
                }
            }
        }
        MatFq { field: f, rows: self.rows, cols: other.cols, entries }
    }

    /// Row vector times matrix — the orientation every recurrence in
    /// this crate uses (states are row coordinate vectors).
    pub fn row_vec_mul(&self, row: &[u64]) -> Vec<u64> {
        assert_eq!(row.len(), self.rows, "row length");
        let f = self.field;
        let mut out = vec![0u64; self.cols];
        for (i, &a) in row.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for j in 0..self.cols {
                out[j] = f.add_elem(out[j], f.mul_elem(a, self.get(i, j)));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u128) -> MatFq {
        assert!(self.is_square(), "power of non-square matrix");
        let mut base = self.clone();
        let mut acc = MatFq::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> u64 {
        assert!(self.is_square(), "determinant of non-square matrix");
        let f = self.field;
        let d = self.rows;
        let mut m = self.entries.clone();
        let mut det = 1u64;
        for col in 0..d {
            let pivot = (col..d).find(|&r| m[r * d + col] != 0);
            let pivot = match pivot {
                Some(p) => p,
                None => return 0,
            };
            if pivot != col {
                for j in 0..d {
                    m.swap(pivot * d + j, col * d + j);
                }
                det = f.neg_elem(det);
            }
            let p = m[col * d + col];
            det = f.mul_elem(det, p);
            let p_inv = f.inv_elem(p).unwrap();
            for r in col + 1..d {
                let factor = f.mul_elem(m[r * d + col], p_inv);
                if factor == 0 {
                    continue;
                }
                for j in col..d {
                    let t = f.mul_elem(factor, m[col * d + j]);
                    m[r * d + j] = f.sub_elem(m[r * d + j], t);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.det() != 0
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<MatFq> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let f = self.field;
        let d = self.rows;
        let mut m = self.entries.clone();
        let mut inv = MatFq::identity(f, d).entries;
        for col in 0..d {
            let pivot = (col..d).find(|&r| m[r * d + col] != 0).ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..d {
                    m.swap(pivot * d + j, col * d + j);
                    inv.swap(pivot * d + j, col * d + j);
                }
            }
            let p_inv = f.inv_elem(m[col * d + col]).unwrap();
            for j in 0..d {
                m[col * d + j] = f.mul_elem(m[col * d + j], p_inv);
                inv[col * d + j] = f.mul_elem(inv[col * d + j], p_inv);
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let factor = m[r * d + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..d {
                    let t = f.mul_elem(factor, m[col * d + j]);
                    m[r * d + j] = f.sub_elem(m[r * d + j], t);
                    let t = f.mul_elem(factor, inv[col * d + j]);
                    inv[r * d + j] = f.sub_elem(inv[r * d + j], t);
                }
            }
        }
        Ok(MatFq { field: f, rows: d, cols: d, entries: inv })
    }

    /// Rank by row elimination (works for rectangular matrices).
    pub fn rank(&self) -> usize {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.entries.clone();
        let mut rank = 0usize;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let pivot = (rank..rows).find(|&r| m[r * cols + col] != 0);
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != rank {
                for j in 0..cols {
                    m.swap(pivot * cols + j, rank * cols + j);
                }
            }
            let p_inv = f.inv_elem(m[rank * cols + col]).unwrap();
            for r in rank + 1..rows {
                let factor = f.mul_elem(m[r * cols + col], p_inv);
                if factor == 0 {
                    continue;
                }
                for j in col..cols {
                    let t = f.mul_elem(factor, m[rank * cols + j]);
                    m[r * cols + j] = f.sub_elem(m[r * cols + j], t);
                }
            }
            rank += 1;
        }
        rank
    }

    /// The matrix whose row-major entry sequence is the base-q expansion
    /// of `index`, first entry most significant — so ascending indices
    /// agree with lexicographic order on the entry sequence.
    pub fn from_index(field: PrimeField, rows: usize, cols: usize, index: u64) -> MatFq {
        let q = field.q();
        let n = rows * cols;
        let mut entries = vec![0u64; n];
        let mut v = index;
        for k in (0..n).rev() {
            entries[k] = v % q;
            v /= q;
        }
        debug_assert_eq!(v, 0, "index out of range");
        MatFq { field, rows, cols, entries }
    }

    pub fn to_index(&self) -> u64 {
        let q = self.field.q();
        self.entries.iter().fold(0u64, |acc, &e| acc * q + e)
    }

    /// Text form "1,1;0,1": rows joined by ';', entries by ','.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn parse(field: PrimeField, s: &str) -> Result<MatFq> {
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for row_text in s.trim().split(';') {
            let mut row = Vec::new();
            for tok in row_text.split(',') {
                let tok = tok.trim();
                let v: u64 = tok.parse().map_err(|_| Error::parse("matrix entry", tok))?;
                row.push(field.reduce(v));
            }
            rows.push(row);
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::parse("matrix", s.trim()));
        }
        let nrows = rows.len();
        MatFq::new(field, nrows, cols, rows.concat())
    }
}

impl std::fmt::Display for MatFq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// The companion matrix of a monic f = X^n - c_{n-1}X^{n-1} - ... - c_0:
/// ones on the subdiagonal, the column (c_0, ..., c_{n-1}) on the right.
/// Its characteristic and minimal polynomials are both f.
pub fn companion(f: &Poly) -> Result<MatFq> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::ConstantPoly(f.to_string())),
    };
    if !f.is_monic() {
        return Err(Error::NotMonic(f.to_string()));
    }
    let field = *f.field();
    let mut m = MatFq::zero(field, n, n);
    for i in 0..n - 1 {
        m.set(i + 1, i, 1);
    }
    for i in 0..n {
        m.set(i, n - 1, field.neg_elem(f.coeff(i)));
    }
    Ok(m)
}

/// Characteristic polynomial det(XI - A), monic of degree d, by the
/// shared polynomial-matrix determinant (capped at d <= 12).
pub fn char_poly(a: &MatFq) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let field = a.field();
    let d = a.rows();
    if d > POLYMAT_DIM_CAP {
        return Err(Error::infeasible(
            "characteristic polynomial",
            format!("dimension {} exceeds cap {}", d, POLYMAT_DIM_CAP),
        ));
    }
    let mut entries = Vec::with_capacity(d * d);
    for r in 0..d {
        for c in 0..d {
            let diag = if r == c { 1 } else { 0 };
            let coeffs = vec![field.neg_elem(a.get(r, c)), diag];
            entries.push(Poly::new(field, coeffs));
        }
    }
    Ok(PolyMat::new(field, d, entries)?.det())
}

/// Minimal polynomial via Krylov chains: for each standard basis vector
/// v, find the least dependency among v, vA, vA^2, ...; the minimal
/// polynomial is the lcm of these local dependencies. Deterministic
/// basis order e_0, e_1, ... and it divides char_poly by construction.
pub fn min_poly(a: &MatFq) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let field = a.field();
    let d = a.rows();
    if d == 0 {
        return Ok(Poly::one(field));
    }
    let mut result = Poly::one(field);
    for i in 0..d {
        let mut v = vec![0u64; d];
        v[i] = 1;
        let local = krylov_dependency(a, v);
        let gcd = result.gcd(&local);
        result = result.mul(&local.divrem(&gcd).0);
        if result.deg() == d {
            break; // cannot exceed the characteristic polynomial
        }
    }
    Ok(result)
}

/// The monic polynomial of least degree k with
/// sum_j p_j (v A^j) = 0; k <= d always exists (Cayley-Hamilton).
fn krylov_dependency(a: &MatFq, v: Vec<u64>) -> Poly {
    let field = a.field();
    let d = a.rows();
    // Echelon rows of the Krylov vectors seen so far, each paired with
    // the combination over powers of A that produced it.
    let mut rows: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new(); // (pivot, row, combo)
    let mut w = v;
    for k in 0..=d {
        let mut cur = w.clone();
        let mut combo = vec![0u64; d + 1];
        combo[k] = 1;
        for (pivot, row, row_combo) in &rows {
            let factor = cur[*pivot];
            if factor == 0 {
                continue;
            }
            for j in 0..d {
                cur[j] = field.sub_elem(cur[j], field.mul_elem(factor, row[j]));
            }
            for j in 0..=d {
                combo[j] = field.sub_elem(combo[j], field.mul_elem(factor, row_combo[j]));
            }
        }
        if cur.iter().all(|&x| x == 0) {
            // combo[k] = 1 survived the reductions (earlier combos only
            // touch lower power indices), so this is monic of degree k.
            combo.truncate(k + 1);
            return Poly::new(field, combo);
        }
        let pivot = cur.iter().position(|&x| x != 0).unwrap();
        let inv = field.inv_elem(cur[pivot]).unwrap();
        for j in 0..d {
            cur[j] = field.mul_elem(cur[j], inv);
        }
        for j in 0..=d {
            combo[j] = field.mul_elem(combo[j], inv);
        }
        rows.push((pivot, cur, combo));
        w = a.row_vec_mul(&w);
    }
    unreachable!("Krylov dependency must appear by degree d");
}

/// Multiplicative order o(A) = ord(min_poly(A)), never by iterated
/// multiplication. Errors on singular input (minimal polynomial with
/// root zero).
pub fn matrix_order(a: &MatFq) -> Result<u128> {
    let mp = min_poly(a)?;
    if mp.coeff(0) == 0 {
        return Err(Error::Singular);
    }
    poly_order(&mp)
}

/// Singer cycle test: A in GL_d with o(A) = q^d - 1, decided through
/// the primitivity of the characteristic polynomial (singular matrices
/// have reducible or zero-rooted char poly, so they fall out as false).
pub fn is_singer(a: &MatFq) -> Result<bool> {
    is_primitive(&char_poly(a)?)
}

/// |{P in GL_d : AP = PA}| by exhaustive enumeration.
pub fn centralizer_size(a: &MatFq) -> Result<u64> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let field = a.field();
    let d = a.rows();
    let total = field
        .q()
        .checked_pow((d * d) as u32)
        .filter(|&t| t <= 1 << 24)
        .ok_or_else(|| {
            Error::infeasible(
                "centralizer enumeration",
                format!("q^(d^2) = {}^{} exceeds 2^24", field.q(), d * d),
            )
        })?;
    let mut count = 0u64;
    for idx in 0..total {
        let p = MatFq::from_index(field, d, d, idx);
        if a.mul(&p) == p.mul(a) && p.is_invertible() {
            count += 1;
        }
    }
    Ok(count)
}

/// The algebra embedding theta: F_{q^m} -> F_q[A] sending the generator
/// y to A. Requires min_poly(A) to equal the field modulus; then theta(s)
/// is h(A) for h the coordinate polynomial of s.
pub fn theta_embed(s: &ExtElem, a: &MatFq) -> Result<MatFq> {
    let modulus = s.parent().modulus();
    if min_poly(a)? != *modulus {
        return Err(Error::ModulusMismatch);
    }
    let field = a.field();
    let d = a.rows();
    let h = s.coordinate_poly();
    let mut acc = MatFq::zero(field, d, d);
    for c in h.coeffs().iter().rev() {
        acc = acc.mul(a);
        // add c * I
        for i in 0..d {
            let v = field.add_elem(acc.get(i, i), *c);
            acc.set(i, i, v);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::ExtField;
    use crate::field::Field;
    use crate::intfactor::factor_integer;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn p2(s: &str) -> Poly {
        Poly::parse(f2(), s).unwrap()
    }

    fn m2(s: &str) -> MatFq {
        MatFq::parse(f2(), s).unwrap()
    }

    #[test]
    fn companion_layout() {
        assert_eq!(companion(&p2("x^2+x+1")).unwrap(), m2("0,1;1,1"));
        let f3 = PrimeField::new(3).unwrap();
        // x - 2 over F_3: 1x1 matrix [2]
        let lin = companion(&Poly::parse(f3, "x+1").unwrap()).unwrap();
        assert_eq!(lin.entries(), &[2]);
        // x^3 + x + 1 over F_3: c_0 = -1 = 2, c_1 = -1 = 2, c_2 = 0
        let c = companion(&Poly::parse(f3, "x^3+x+1").unwrap()).unwrap();
        assert_eq!(c, MatFq::parse(f3, "0,0,2;1,0,2;0,1,0").unwrap());
        assert!(companion(&Poly::parse(f3, "2x+1").unwrap()).is_err());
        assert!(companion(&Poly::one(f2())).is_err());
    }

    #[test]
    fn arithmetic_and_inverse() {
        let i3 = MatFq::identity(f2(), 3);
        assert_eq!(i3.det(), 1);
        let c = companion(&p2("x^4+x+1")).unwrap();
        assert_eq!(c.pow(0), MatFq::identity(f2(), 4));
        let c_inv = c.inverse().unwrap();
        assert_eq!(c.mul(&c_inv), MatFq::identity(f2(), 4));
        assert_eq!(c_inv.mul(&c), MatFq::identity(f2(), 4));
        assert!(MatFq::zero(f2(), 2, 2).inverse().is_err());
        let f5 = PrimeField::new(5).unwrap();
        let a = MatFq::parse(f5, "1,2;3,4").unwrap();
        // det = 4 - 6 = -2 = 3 mod 5
        assert_eq!(a.det(), 3);
        assert_eq!(a.mul(&a.inverse().unwrap()), MatFq::identity(f5, 2));
    }

    #[test]
    fn char_and_min_poly_of_companions() {
        // min_poly(companion(f)) = char_poly(companion(f)) = f for all
        // monic f of degree <= 6 over F_2.
        for n in 1..=6usize {
            for v in 0..(1u64 << n) {
                let mut coeffs: Vec<u64> = (0..n).map(|i| (v >> i) & 1).collect();
                coeffs.push(1);
                let f = Poly::new(f2(), coeffs);
                let c = companion(&f).unwrap();
                assert_eq!(char_poly(&c).unwrap(), f, "char of companion({})", f);
                assert_eq!(min_poly(&c).unwrap(), f, "min of companion({})", f);
            }
        }
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&MatFq::identity(f2(), 2)).unwrap(), p2("x^2+1"));
        let zero = MatFq::zero(f2(), 2, 2);
        assert_eq!(char_poly(&zero).unwrap(), p2("x^2"));
        assert_eq!(min_poly(&zero).unwrap(), p2("x"));
        assert_eq!(min_poly(&MatFq::identity(f2(), 4)).unwrap(), p2("x+1"));
        let f3 = PrimeField::new(3).unwrap();
        let diag = MatFq::parse(f3, "1,0;0,2").unwrap();
        // (x-1)(x-2) = x^2 - 3x + 2 = x^2 + 2 over F_3
        assert_eq!(char_poly(&diag).unwrap(), Poly::parse(f3, "x^2+2").unwrap());
        assert_eq!(min_poly(&diag).unwrap(), Poly::parse(f3, "x^2+2").unwrap());
        assert!(char_poly(&MatFq::zero(f2(), 2, 3)).is_err());
    }

    #[test]
    fn min_poly_divides_char_poly_randomized() {
        for trial in 0..200u64 {
            let d = 1 + (trial % 4) as usize;
            let idx = trial.wrapping_mul(0x9E3779B97F4A7C15) % (1u64 << (d * d));
            let a = MatFq::from_index(f2(), d, d, idx);
            let mp = min_poly(&a).unwrap();
            let cp = char_poly(&a).unwrap();
            assert!(cp.rem(&mp).is_zero(), "{} ∤ {}", mp, cp);
        }
    }

    #[test]
    fn orders_match_direct_powering() {
        let c = companion(&p2("x^4+x+1")).unwrap();
        assert_eq!(matrix_order(&c).unwrap(), 15);
        let c5 = companion(&p2("x^4+x^3+x^2+x+1")).unwrap();
        assert_eq!(matrix_order(&c5).unwrap(), 5);
        assert_eq!(c5.pow(5), MatFq::identity(f2(), 4));
        assert_eq!(matrix_order(&MatFq::identity(f2(), 3)).unwrap(), 1);
        assert!(matrix_order(&MatFq::zero(f2(), 2, 2)).is_err());
        // Randomized invertible matrices d <= 4 over F_2: A^o = I and
        // A^(o/p) != I for every prime p | o.
        let mut checked = 0;
        let mut idx = 1u64;
        while checked < 60 {
            idx = idx.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let d = 2 + (idx % 3) as usize;
            let a = MatFq::from_index(f2(), d, d, idx % (1u64 << (d * d)));
            if !a.is_invertible() {
                continue;
            }
            let o = matrix_order(&a).unwrap();
            assert!(o <= (1u128 << d) - 1);
            assert_eq!(a.pow(o), MatFq::identity(f2(), d));
            for (p, _) in factor_integer(o as u64) {
                assert_ne!(a.pow(o / p as u128), MatFq::identity(f2(), d));
            }
            checked += 1;
        }
    }

    #[test]
    fn singer_detection() {
        assert!(is_singer(&companion(&p2("x^4+x+1")).unwrap()).unwrap());
        assert!(!is_singer(&MatFq::identity(f2(), 2)).unwrap());
        assert!(!is_singer(&m2("0,1;1,0")).unwrap());
        assert!(!is_singer(&MatFq::zero(f2(), 2, 2)).unwrap());
    }

    #[test]
    fn prop_3_1_equivalence_exhaustive() {
        // Over all of GL_2(F_2) and GL_2(F_3):
        // o(A) = q^2 - 1 <=> char poly primitive <=> min poly primitive,
        // and the poly_order route agrees with direct powering.
        for q in [2u64, 3] {
            let field = PrimeField::new(q).unwrap();
            let group = (q * q - 1) as u128;
            for idx in 0..q.pow(4) {
                let a = MatFq::from_index(field, 2, 2, idx);
                if !a.is_invertible() {
                    continue;
                }
                let o = matrix_order(&a).unwrap();
                // direct powering oracle
                let mut direct = 1u128;
                let mut pw = a.clone();
                let id = MatFq::identity(field, 2);
                while pw != id {
                    pw = pw.mul(&a);
                    direct += 1;
                }
                assert_eq!(o, direct, "order mismatch at {}", a);
                let cp_prim = is_primitive(&char_poly(&a).unwrap()).unwrap();
                let mp = min_poly(&a).unwrap();
                // The identity has primitive min poly x - g of degree 1;
                // full order needs a primitive min poly of full degree.
                let mp_full = is_primitive(&mp).unwrap() && mp.deg() == 2;
                assert_eq!(o == group, cp_prim);
                assert_eq!(o == group, mp_full);
                assert_eq!(is_singer(&a).unwrap(), o == group);
            }
        }
    }

    #[test]
    fn centralizer_sizes() {
        assert_eq!(centralizer_size(&MatFq::identity(f2(), 2)).unwrap(), 6);
        let c = companion(&p2("x^2+x+1")).unwrap();
        assert_eq!(centralizer_size(&c).unwrap(), 3);
        let c3 = companion(&p2("x^3+x+1")).unwrap();
        assert_eq!(centralizer_size(&c3).unwrap(), 7);
    }

    #[test]
    fn theta_is_an_algebra_map() {
        for (q, m) in [(2u64, 2usize), (2, 3)] {
            let base = PrimeField::new(q).unwrap();
            let k = ExtField::with_default_modulus(base, m).unwrap();
            let a = companion(k.modulus()).unwrap();
            assert_eq!(theta_embed(&k.zero_elem(), &a).unwrap(), MatFq::zero(base, m, m));
            assert_eq!(theta_embed(&k.one_elem(), &a).unwrap(), MatFq::identity(base, m));
            assert_eq!(theta_embed(&k.gen_y(), &a).unwrap(), a);
            for i in 0..k.size() {
                for j in 0..k.size() {
                    let s = k.elem(k.elem_at(i)).unwrap();
                    let t = k.elem(k.elem_at(j)).unwrap();
                    let ts = theta_embed(&s, &a).unwrap();
                    let tt = theta_embed(&t, &a).unwrap();
                    assert_eq!(
                        theta_embed(&s.add(&t).unwrap(), &a).unwrap(),
                        ts.add(&tt)
                    );
                    assert_eq!(
                        theta_embed(&s.mul(&t).unwrap(), &a).unwrap(),
                        ts.mul(&tt)
                    );
                }
            }
        }
        // Modulus mismatch: A whose min poly is not the field modulus.
        let k = ExtField::with_default_modulus(f2(), 2).unwrap();
        let wrong = MatFq::identity(f2(), 2);
        assert!(matches!(
            theta_embed(&k.gen_y(), &wrong),
            Err(Error::ModulusMismatch)
        ));
    }

    #[test]
    fn text_round_trip_and_indexing() {
        let a = m2("1,1;0,1");
        assert_eq!(a.to_text(), "1,1;0,1");
        assert_eq!(MatFq::parse(f2(), " 1,1 ; 0,1 ").unwrap(), a);
        assert!(MatFq::parse(f2(), "1,1;0").is_err());
        assert!(MatFq::parse(f2(), "1,x;0,1").is_err());
        // from_index orders matrices lexicographically by entries.
        let m0 = MatFq::from_index(f2(), 2, 2, 0);
        assert!(m0.is_zero());
        let m1 = MatFq::from_index(f2(), 2, 2, 1);
        assert_eq!(m1.get(1, 1), 1);
        for idx in 0..16 {
            assert_eq!(MatFq::from_index(f2(), 2, 2, idx).to_index(), idx);
        }
    }

    #[test]
    fn rank_and_row_mul() {
        let a = m2("1,1,0;0,1,1");
        assert_eq!(a.rank(), 2);
        assert_eq!(m2("1,1;1,1").rank(), 1);
        assert_eq!(MatFq::zero(f2(), 3, 3).rank(), 0);
        assert_eq!(a.row_vec_mul(&[1, 1]), vec![1, 0, 1]);
        let f3 = PrimeField::new(3).unwrap();
        let b = MatFq::parse(f3, "1,2;0,1").unwrap();
        assert_eq!(b.row_vec_mul(&[2, 2]), vec![2, 0]);
    }
}
