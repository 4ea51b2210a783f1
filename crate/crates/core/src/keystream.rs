//! Word-packed binary keystream generation for σ-LFSRs over F_{2^m}.
//!
//! Each sequence element is emitted as one machine word with coordinate
//! a_j in bit j (LSB-first) — the packing is part of the external
//! contract. Over F_2 a row-vector-times-matrix product is an XOR of
//! the tap rows selected by the state bits; the generator byte-slices
//! that selection ("four Russians" style): for every tap block and
//! every 8-bit chunk of the state word it precomputes the 256 possible
//! row combinations, so a step costs n·⌈m/8⌉ table lookups instead of
//! n·m masked XORs.

use crate::error::{Error, Result};
use crate::ext::ExtElem;
use crate::lfsr::SigmaLfsrSpec;
use std::time::Instant;

/// A running binary keystream generator. Owns its state; confine to
/// one thread and run several generators in parallel if needed.
pub struct KeystreamGen {
    /// Byte-sliced tap tables: tables[(j·chunks + c)·256 + b] is the
    /// XOR of the rows of C_j selected by byte b at bit offset 8c.
    tables: Vec<u64>,
    /// Ring buffer of the n most recent packed states.
    state: Vec<u64>,
    pos: usize,
    chunks: usize,
}

impl KeystreamGen {
    pub fn new(spec: &SigmaLfsrSpec, init: &[ExtElem]) -> Result<KeystreamGen> {
        let q = spec.parent().q();
        let m = spec.m();
        if q != 2 || m > 64 {
            return Err(Error::KeystreamUnsupported { q, m });
        }
        let n = spec.n();
        if init.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: init.len() });
        }
        let chunks = (m + 7) / 8;
        let mut tables = vec![0u64; n * chunks * 256];
        for (j, c) in spec.taps().iter().enumerate() {
            let rows: Vec<u64> = (0..m).map(|i| pack_bits(c.row(i))).collect();
            for chunk in 0..chunks {
                let base = (j * chunks + chunk) * 256;
                // Subset-XOR fill: v and v with its lowest bit cleared
                // differ by exactly one selected row.
                for v in 1..256usize {
                    let prev = v & (v - 1);
                    let row = rows.get(8 * chunk + v.trailing_zeros() as usize);
                    tables[base + v] = tables[base + prev] ^ row.copied().unwrap_or(0);
                }
            }
        }
        let mut state = Vec::with_capacity(n);
        for s in init {
            if s.parent() != spec.parent() {
                return Err(Error::ParentMismatch);
            }
            state.push(pack_bits(s.coords()));
        }
        Ok(KeystreamGen { tables, state, pos: 0, chunks })
    }

    /// Emit the current sequence element and advance one step.
    #[inline]
    pub fn next_word(&mut self) -> u64 {
        let n = self.state.len();
        let out = self.state[self.pos];
        let mut acc = 0u64;
        let mut idx = self.pos;
        let mut base = 0usize;
        for _ in 0..n {
            let s = self.state[idx];
            idx += 1;
            if idx == n {
                idx = 0;
            }
            for c in 0..self.chunks {
                acc ^= self.tables[base + (c << 8) + ((s >> (8 * c)) & 0xff) as usize];
            }
            base += self.chunks << 8;
        }
        self.state[self.pos] = acc;
        self.pos += 1;
        if self.pos == n {
            self.pos = 0;
        }
        out
    }
}

fn pack_bits(coords: &[u64]) -> u64 {
    coords
        .iter()
        .enumerate()
        .fold(0u64, |acc, (j, &b)| acc | ((b & 1) << j))
}

/// First `count` packed words of the keystream.
pub fn keystream_words(spec: &SigmaLfsrSpec, init: &[ExtElem], count: usize) -> Result<Vec<u64>> {
    let mut gen = KeystreamGen::new(spec, init)?;
    Ok((0..count).map(|_| gen.next_word()).collect())
}

/// Throughput measurement over `runs` timed generations of `words`
/// words each: the median words/second and a fold of every emitted
/// word (so the generation cannot be optimized away).
pub fn measure_throughput(
    spec: &SigmaLfsrSpec,
    init: &[ExtElem],
    words: u64,
    runs: usize,
) -> Result<(f64, u64)> {
    assert!(runs >= 1);
    let mut rates = Vec::with_capacity(runs);
    let mut checksum = 0u64;
    for _ in 0..runs {
        let mut gen = KeystreamGen::new(spec, init)?;
        let start = Instant::now();
        let mut acc = 0u64;
        for _ in 0..words {
            acc ^= gen.next_word();
        }
        let elapsed = start.elapsed().as_secs_f64();
        checksum = acc;
        rates.push(words as f64 / elapsed);
    }
    rates.sort_by(f64::total_cmp);
    Ok((rates[runs / 2], checksum))
}
