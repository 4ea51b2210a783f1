//! Classical and word-oriented (σ) LFSR engines with exact period
//! analysis.
//!
//! Tap convention: taps[j] multiplies s_{k+j}, so the characteristic
//! polynomial is X^n - c_{n-1}X^{n-1} - ... - c_0. Fixtures in this
//! crate always state taps, never polynomials, to keep the sign and
//! ordering convention pinned in one place.

use crate::block::BlockCompanion;
use crate::error::{Error, Result};
use crate::ext::{ExtElem, ExtField};
use crate::field::PrimeField;
use crate::matrix::MatFq;
use crate::order::is_primitive;
use crate::poly::Poly;

/// Largest state space we are willing to tabulate for exact
/// period/preperiod detection.
pub const STATE_SPACE_CAP: u64 = 1 << 24;

/// A classical LFSR of order n over F_q:
/// s_{k+n} = s_k c_0 + s_{k+1} c_1 + ... + s_{k+n-1} c_{n-1}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LfsrSpec {
    field: PrimeField,
    taps: Vec<u64>,
}

impl LfsrSpec {
    pub fn new(field: PrimeField, taps: Vec<u64>) -> Result<LfsrSpec> {
        if taps.is_empty() {
            return Err(Error::LengthMismatch { expected: 1, got: 0 });
        }
        let taps = taps.into_iter().map(|c| field.reduce(c)).collect();
        Ok(LfsrSpec { field, taps })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.taps.len()
    }

    pub fn taps(&self) -> &[u64] {
        &self.taps
    }

    /// X^n - c_{n-1}X^{n-1} - ... - c_0, always monic of degree n.
    pub fn char_poly(&self) -> Poly {
        let n = self.n();
        let mut coeffs: Vec<u64> = self.taps.iter().map(|&c| self.field.neg_elem(c)).collect();
        coeffs.push(1);
        debug_assert_eq!(coeffs.len(), n + 1);
        Poly::new(self.field, coeffs)
    }

    /// First `count` terms of the sequence seeded with `init`.
    pub fn run(&self, init: &[u64], count: usize) -> Result<Vec<u64>> {
        let n = self.n();
        if init.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: init.len() });
        }
        let f = self.field;
        let mut window: Vec<u64> = init.iter().map(|&s| f.reduce(s)).collect();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(window[0]);
            let next = self
                .taps
                .iter()
                .zip(&window)
                .fold(0u64, |acc, (&c, &s)| f.add_elem(acc, f.mul_elem(c, s)));
            window.rotate_left(1);
            window[n - 1] = next;
        }
        Ok(out)
    }

    pub fn period_report(&self, init: &[u64]) -> Result<PeriodReport> {
        let n = self.n();
        if init.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: init.len() });
        }
        let f = self.field;
        let q = f.q();
        let size = state_space_size(q, n)?;
        let start: Vec<u64> = init.iter().map(|&s| f.reduce(s)).collect();
        let taps = self.taps.clone();
        Ok(walk_period(size, q, start, move |window| {
            let next = taps
                .iter()
                .zip(window.iter())
                .fold(0u64, |acc, (&c, &s)| f.add_elem(acc, f.mul_elem(c, s)));
            window.rotate_left(1);
            window[n - 1] = next;
        }))
    }
}

/// Primitive exactly when the characteristic polynomial is primitive;
/// equivalent to every nonzero seed having period q^n - 1.
pub fn is_primitive_lfsr(spec: &LfsrSpec) -> Result<bool> {
    is_primitive(&spec.char_poly())
}

/// A σ-LFSR of order n over F_{q^m}: the taps are m x m matrices over
/// F_q and states are coordinate row vectors, multiplied on the right:
/// s_{k+n} = s_k C_0 + s_{k+1} C_1 + ... + s_{k+n-1} C_{n-1}.
#[derive(Clone, Debug)]
pub struct SigmaLfsrSpec {
    parent: ExtField,
    taps: Vec<MatFq>,
}

impl SigmaLfsrSpec {
    pub fn new(parent: ExtField, taps: Vec<MatFq>) -> Result<SigmaLfsrSpec> {
        if taps.is_empty() {
            return Err(Error::LengthMismatch { expected: 1, got: 0 });
        }
        let m = parent.m();
        for t in &taps {
            if !t.is_square() || t.rows() != m {
                return Err(Error::DimensionMismatch { expected: m, got: t.rows() });
            }
        }
        Ok(SigmaLfsrSpec { parent, taps })
    }

    pub fn parent(&self) -> &ExtField {
        &self.parent
    }

    pub fn m(&self) -> usize {
        self.parent.m()
    }

    pub fn n(&self) -> usize {
        self.taps.len()
    }

    pub fn taps(&self) -> &[MatFq] {
        &self.taps
    }

    /// The state-transition matrix in block companion form.
    pub fn block_companion(&self) -> BlockCompanion {
        BlockCompanion::new(self.parent.base(), self.taps.clone())
            .expect("taps validated at construction")
    }

    pub fn delta_poly(&self) -> Result<Poly> {
        self.block_companion().delta_poly()
    }

    /// First `count` terms, as extension-field elements.
    pub fn run(&self, init: &[ExtElem], count: usize) -> Result<Vec<ExtElem>> {
        let n = self.n();
        if init.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: init.len() });
        }
        let mut window = Vec::with_capacity(n);
        for s in init {
            if *s.parent() != self.parent {
                return Err(Error::ParentMismatch);
            }
            window.push(s.coords().to_vec());
        }
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(
                self.parent
                    .elem(window[0].clone())
                    .expect("window rows stay reduced"),
            );
            let next = self.step_row(&window);
            window.rotate_left(1);
            window[n - 1] = next;
        }
        Ok(out)
    }

    fn step_row(&self, window: &[Vec<u64>]) -> Vec<u64> {
        let f = self.parent.base();
        let m = self.m();
        let mut next = vec![0u64; m];
        for (c, s) in self.taps.iter().zip(window) {
            let term = c.row_vec_mul(s);
            for (a, t) in next.iter_mut().zip(term) {
                *a = f.add_elem(*a, t);
            }
        }
        next
    }

    pub fn period_report(&self, init: &[ExtElem]) -> Result<PeriodReport> {
        let n = self.n();
        if init.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: init.len() });
        }
        let m = self.m();
        let q = self.parent.q();
        let size = state_space_size(q, m * n)?;
        let mut start = Vec::with_capacity(m * n);
        for s in init {
            if *s.parent() != self.parent {
                return Err(Error::ParentMismatch);
            }
            start.extend_from_slice(s.coords());
        }
        let spec = self.clone();
        Ok(walk_period(size, q, start, move |flat| {
            let window: Vec<Vec<u64>> = flat.chunks(m).map(<[u64]>::to_vec).collect();
            let next = spec.step_row(&window);
            flat.rotate_left(m);
            flat[m * (n - 1)..].copy_from_slice(&next);
        }))
    }
}

/// Primitive exactly when Δ(X) is a primitive polynomial of degree mn.
pub fn is_primitive_sigma(spec: &SigmaLfsrSpec) -> Result<bool> {
    is_primitive(&spec.delta_poly()?)
}

/// Exact eventual period and preperiod of a sequence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PeriodReport {
    pub period: u64,
    pub preperiod: u64,
}

fn state_space_size(q: u64, digits: usize) -> Result<u64> {
    u32::try_from(digits)
        .ok()
        .and_then(|d| q.checked_pow(d))
        .filter(|&s| s <= STATE_SPACE_CAP)
        .ok_or_else(|| {
            Error::infeasible(
                "period detection",
                format!("state space {}^{} exceeds 2^24", q, digits),
            )
        })
}

/// Iterate the state map from `start`, recording the first step at
/// which each state was seen; the first revisit gives the exact period
/// and preperiod.
fn walk_period(size: u64, q: u64, mut state: Vec<u64>, mut step: impl FnMut(&mut Vec<u64>)) -> PeriodReport {
    const UNSEEN: u32 = u32::MAX;
    let mut first_seen = vec![UNSEEN; size as usize];
    let mut step_no: u32 = 0;
    loop {
        let idx = state.iter().rev().fold(0u64, |acc, &d| acc * q + d) as usize;
        if first_seen[idx] != UNSEEN {
            return PeriodReport {
                period: u64::from(step_no - first_seen[idx]),
                preperiod: u64::from(first_seen[idx]),
            };
        }
        first_seen[idx] = step_no;
        step_no += 1;
        step(&mut state);
    }
}
