//! The extension field F_{q^m} presented as F_q[Y]/(g) for a primitive
//! modulus g, with elements as coordinate vectors over the power basis
//! {1, y, ..., y^(m-1)}.
//!
//! The modulus being primitive (not merely irreducible) makes the class
//! y a generator of the multiplicative group, which the constructive
//! machinery downstream relies on. The default modulus for given (q, m)
//! is the canonically least primitive polynomial of degree m, so every
//! fixture is reproducible without configuration.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::intfactor::pow_u128;
use crate::order::{first_primitive, is_primitive, is_primitive_in};
use crate::poly::{Poly, Polynomial};
use crate::polyfactor::equal_degree_split;

#[derive(PartialEq, Eq, Debug)]
struct ExtFieldInner {
    base: PrimeField,
    m: usize,
    modulus: Poly,
}

/// F_{q^m}; cheap to clone and freely shareable.
#[derive(Clone, Debug)]
pub struct ExtField(Arc<ExtFieldInner>);

/// Polynomials with coefficients in F_{q^m}.
pub type ExtPoly = Polynomial<ExtField>;

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for ExtField {}

impl ExtField {
    /// Builds F_{q^m} with an explicit modulus, which must be monic of
    /// degree m and primitive over the base field.
    pub fn new(base: PrimeField, modulus: Poly) -> Result<ExtField> {
        if !is_primitive(&modulus)? {
            return Err(Error::NotPrimitive(modulus.to_string(), base.q()));
        }
        let m = modulus.deg();
        if pow_u128(base.q(), m as u32) > 1 << 126 {
            return Err(Error::infeasible(
                "extension field",
                format!("q^m = {}^{} too large", base.q(), m),
            ));
        }
        Ok(ExtField(Arc::new(ExtFieldInner { base, m, modulus })))
    }

    /// Builds F_{q^m} with the default modulus: the canonically least
    /// primitive polynomial of degree m over F_q.
    pub fn with_default_modulus(base: PrimeField, m: usize) -> Result<ExtField> {
        if m == 0 {
            return Err(Error::parse("extension degree", "0"));
        }
        ExtField::new(base, first_primitive(m, base)?)
    }

    pub fn base(&self) -> PrimeField {
        self.0.base
    }

    pub fn q(&self) -> u64 {
        self.0.base.q()
    }

    pub fn m(&self) -> usize {
        self.0.m
    }

    pub fn modulus(&self) -> &Poly {
        &self.0.modulus
    }

    /// The field descriptor used by CLI flags and reports.
    pub fn descriptor(&self) -> String {
        format!("q={},m={},g={}", self.q(), self.m(), self.modulus())
    }

    /// Parses "q=2,m=2,g=x^2+x+1"; g may be omitted for the default
    /// modulus.
    pub fn parse_descriptor(s: &str) -> Result<ExtField> {
        let s = s.trim();
        let (head, g_text) = match s.find("g=") {
            Some(i) => (&s[..i], Some(&s[i + 2..])),
            None => (s, None),
        };
        let mut q: Option<u64> = None;
        let mut m: Option<usize> = None;
        for part in head.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::parse("field descriptor", part))?;
            match key.trim() {
                "q" => q = Some(val.trim().parse().map_err(|_| Error::parse("q", val))?),
                "m" => m = Some(val.trim().parse().map_err(|_| Error::parse("m", val))?),
                other => return Err(Error::parse("field descriptor key", other)),
            }
        }
        let q = q.ok_or_else(|| Error::parse("field descriptor", "missing q"))?;
        let m = m.ok_or_else(|| Error::parse("field descriptor", "missing m"))?;
        let base = PrimeField::new(q)?;
        match g_text {
            Some(text) => {
                let g = Poly::parse(base, text)?;
                if g.degree() != Some(m) {
                    return Err(Error::DegreeMismatch { expected: m, got: g.coeffs().len().saturating_sub(1) });
                }
                ExtField::new(base, g)
            }
            None => ExtField::with_default_modulus(base, m),
        }
    }

    /// Wraps raw coordinates (length must equal m).
    pub fn elem(&self, coords: Vec<u64>) -> Result<ExtElem> {
        if coords.len() != self.m() {
            return Err(Error::LengthMismatch { expected: self.m(), got: coords.len() });
        }
        let q = self.q();
        Ok(ExtElem {
            parent: self.clone(),
            coords: coords.into_iter().map(|c| c % q).collect(),
        })
    }

    pub fn zero_elem(&self) -> ExtElem {
        ExtElem { parent: self.clone(), coords: vec![0; self.m()] }
    }

    pub fn one_elem(&self) -> ExtElem {
        ExtElem { parent: self.clone(), coords: Field::one(self) }
    }

    /// The residue class of Y — a generator of the multiplicative group.
    pub fn gen_y(&self) -> ExtElem {
        let x = Poly::x(self.base()).rem(self.modulus());
        ExtElem { parent: self.clone(), coords: self.pad(&x) }
    }

    /// A base-field scalar as an extension element.
    pub fn from_base(&self, c: u64) -> ExtElem {
        let mut coords = vec![0; self.m()];
        coords[0] = c % self.q();
        ExtElem { parent: self.clone(), coords }
    }

    /// Parses the coordinate form "a0,a1,...".
    pub fn parse_elem(&self, s: &str) -> Result<ExtElem> {
        let mut coords = Vec::new();
        for tok in s.trim().split(',') {
            let tok = tok.trim();
            coords.push(tok.parse().map_err(|_| Error::parse("coordinate", tok))?);
        }
        self.elem(coords)
    }

    fn pad(&self, p: &Poly) -> Vec<u64> {
        let mut coords = p.coeffs().to_vec();
        coords.resize(self.m(), 0);
        coords
    }

    fn coords_as_poly(&self, coords: &[u64]) -> Poly {
        Poly::new(self.base(), coords.to_vec())
    }
}

impl Field for ExtField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.m()]
    }

    fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.m()];
        v[0] = 1;
        v
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let f = self.base();
        a.iter().zip(b).map(|(x, y)| f.add_elem(*x, *y)).collect()
    }

    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let f = self.base();
        a.iter().zip(b).map(|(x, y)| f.sub_elem(*x, *y)).collect()
    }

    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        let f = self.base();
        a.iter().map(|x| f.neg_elem(*x)).collect()
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let prod = self
            .coords_as_poly(a)
            .mul(&self.coords_as_poly(b))
            .rem(self.modulus());
        self.pad(&prod)
    }

    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.pow(a, self.size() - 2))
    }

    fn characteristic(&self) -> u64 {
        self.q()
    }

    fn size(&self) -> u128 {
        pow_u128(self.q(), self.m() as u32)
    }

    fn index_of(&self, a: &Vec<u64>) -> u128 {
        let q = self.q() as u128;
        let mut idx = 0u128;
        for c in a.iter().rev() {
            idx = idx * q + *c as u128;
        }
        idx
    }

    fn elem_at(&self, index: u128) -> Vec<u64> {
        let q = self.q() as u128;
        let mut index = index;
        let coords = (0..self.m())
            .map(|_| {
                let c = (index % q) as u64;
                index /= q;
                c
            })
            .collect();
        debug_assert_eq!(index, 0);
        coords
    }

    fn format_elem(&self, a: &Vec<u64>) -> String {
        let joined = a.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        if self.m() == 1 {
            joined
        } else {
            format!("({})", joined)
        }
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        (0..self.m()).map(|_| rng.gen_range(0..self.q())).collect()
    }
}

/// An element of F_{q^m} carrying its parent field, the user-facing
/// wrapper around raw coordinate vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtElem {
    parent: ExtField,
    coords: Vec<u64>,
}

impl ExtElem {
    pub fn parent(&self) -> &ExtField {
        &self.parent
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn same_parent(&self, other: &ExtElem) -> Result<()> {
        if self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn add(&self, other: &ExtElem) -> Result<ExtElem> {
        self.same_parent(other)?;
        Ok(self.wrap(self.parent.add(&self.coords, &other.coords)))
    }

    pub fn sub(&self, other: &ExtElem) -> Result<ExtElem> {
        self.same_parent(other)?;
        Ok(self.wrap(self.parent.sub(&self.coords, &other.coords)))
    }

    pub fn mul(&self, other: &ExtElem) -> Result<ExtElem> {
        self.same_parent(other)?;
        Ok(self.wrap(self.parent.mul(&self.coords, &other.coords)))
    }

    pub fn neg(&self) -> ExtElem {
        self.wrap(self.parent.neg(&self.coords))
    }

    pub fn inv(&self) -> Result<ExtElem> {
        self.parent
            .inv(&self.coords)
            .map(|c| self.wrap(c))
            .ok_or(Error::ZeroInverse)
    }

    pub fn pow(&self, e: u128) -> ExtElem {
        self.wrap(self.parent.pow(&self.coords, e))
    }

    fn wrap(&self, coords: Vec<u64>) -> ExtElem {
        ExtElem { parent: self.parent.clone(), coords }
    }

    /// Coordinates read as a polynomial in the generator y (degree < m).
    pub fn coordinate_poly(&self) -> Poly {
        Poly::new(self.parent.base(), self.coords.clone())
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coords {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

/// Monic minimal polynomial of s over the base field: the product of
/// (X - t) over the distinct Frobenius conjugates t = s^(q^i). Its
/// degree divides m.
pub fn min_poly_over_base(s: &ExtElem) -> Poly {
    let parent = s.parent().clone();
    let q = parent.q() as u128;
    let mut conjugates = vec![s.coords().to_vec()];
    loop {
        let next = parent.pow(conjugates.last().unwrap(), q);
        if next == conjugates[0] {
            break;
        }
        conjugates.push(next);
    }
    let mut prod = ExtPoly::one(parent.clone());
    for t in &conjugates {
        let factor = ExtPoly::new(parent.clone(), vec![parent.neg(t), Field::one(&parent)]);
        prod = prod.mul(&factor);
    }
    project_to_base(&prod).expect("conjugate product has base coefficients")
}

/// Reads an extension polynomial back over F_q when every coefficient
/// lies in the base field.
pub fn project_to_base(g: &ExtPoly) -> Option<Poly> {
    let parent = g.field().clone();
    let mut coeffs = Vec::with_capacity(g.coeffs().len());
    for c in g.coeffs() {
        if c[1..].iter().any(|&x| x != 0) {
            return None;
        }
        coeffs.push(c[0]);
    }
    Some(Poly::new(parent.base(), coeffs))
}

/// Lifts a base-field polynomial into F_{q^m}[X].
pub fn lift(f: &Poly, parent: &ExtField) -> ExtPoly {
    let coeffs = f.coeffs().iter().map(|&c| {
        let mut v = vec![0; parent.m()];
        v[0] = c;
        v
    });
    ExtPoly::new(parent.clone(), coeffs.collect())
}

/// All m irreducible degree-n factors of a primitive f of degree mn
/// over F_{q^m}, in canonical ascending order.
pub fn factor_over_ext(f: &Poly, parent: &ExtField, seed: u64) -> Result<Vec<ExtPoly>> {
    let m = parent.m();
    if !is_primitive(f)? {
        return Err(Error::NotPrimitive(f.to_string(), parent.q()));
    }
    if f.deg() % m != 0 {
        return Err(Error::DegreeMismatch { expected: m * (f.deg() / m + 1), got: f.deg() });
    }
    let n = f.deg() / m;
    let lifted = lift(f, parent);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = equal_degree_split(&lifted, n, &mut rng);
    factors.sort();
    debug_assert_eq!(factors.len(), m);
    Ok(factors)
}

/// One monic irreducible degree-n factor of f over F_{q^m} — the
/// canonically least, as the deterministic tie-break. The factor is
/// verified primitive over F_{q^m}, as the construction requires.
pub fn irreducible_factor_deg_n(f: &Poly, parent: &ExtField, n: usize) -> Result<ExtPoly> {
    if f.degree() != Some(parent.m() * n) {
        return Err(Error::DegreeMismatch {
            expected: parent.m() * n,
            got: f.coeffs().len().saturating_sub(1),
        });
    }
    let least = factor_over_ext(f, parent, 0)?
        .into_iter()
        .next()
        .expect("primitive polynomial has at least one factor");
    assert!(
        is_primitive_ext(&least)?,
        "factor of a primitive polynomial must be primitive over the extension"
    );
    Ok(least)
}

/// Primitivity over F_{q^m}: g is the minimal polynomial of a generator
/// of the degree-n extension's multiplicative group. Unlike the base
/// field check, a zero constant term is rejected as an error.
pub fn is_primitive_ext(g: &ExtPoly) -> Result<bool> {
    if g.degree().map_or(true, |d| d == 0) {
        return Err(Error::ConstantPoly(g.to_string()));
    }
    if !g.is_monic() {
        return Err(Error::NotMonic(g.to_string()));
    }
    if g.field().is_zero(&g.coeff(0)) {
        return Err(Error::ZeroConstantTerm(g.to_string()));
    }
    is_primitive_in(g)
}
