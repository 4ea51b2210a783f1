//! Exhaustive census of block-companion Singer cycles.
//!
//! The census enumerates tap tuples (C_0, ..., C_{n-1}) with C_0
//! invertible, keeps those whose Δ(X) is primitive of degree mn, and
//! groups them into fibers by Δ. The counting conjecture says the total
//! equals Υ(m,n;q); the fiber conjecture says every fiber has the same
//! cardinality q^{m(m-1)(n-1)} ∏_{i=1}^{m-1}(q^m - q^i). Both are
//! checked numerically, never assumed: a failing cell must surface as a
//! loud report, not be swallowed.

use crate::block::BlockCompanion;
use crate::construct::construct_primitive_sigma;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::intfactor::euler_phi_pow_minus_1;
use crate::matrix::{char_poly, MatFq};
use crate::order::{enumerate_primitive, PrimitivityChecker};
use crate::poly::Poly;
use crate::splitting::{gaussian_binomial, splitting_count, SUBSPACE_CAP};
use num_bigint::BigUint;
use serde::Serialize;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;

/// Hard ceiling on candidate tuples |GL_m| * q^(m^2 (n-1)) per census cell.
pub const CANDIDATE_CAP: u128 = 100_000_000;

/// Hard ceiling on |GL_m| for the brute-force Singer scan.
pub const GL_SCAN_CAP: u128 = 10_000_000;

/// |GL_m(F_q)| = prod_{i=0}^{m-1} (q^m - q^i).
pub fn gl_order(q: u64, m: usize) -> BigUint {
    let qm = BigUint::from(q).pow(m as u32);
    (0..m)
        .map(|i| &qm - BigUint::from(q).pow(i as u32))
        .product()
}

/// The conjectured common fiber cardinality
/// q^(m(m-1)(n-1)) * prod_{i=1}^{m-1} (q^m - q^i).
pub fn expected_fiber_size(q: u64, m: usize, n: usize) -> BigUint {
    let qm = BigUint::from(q).pow(m as u32);
    let prod: BigUint = (1..m)
        .map(|i| &qm - BigUint::from(q).pow(i as u32))
        .product();
    BigUint::from(q).pow((m * (m - 1) * (n - 1)) as u32) * prod
}

/// Number of primitive polynomials of degree d over F_q:
/// phi(q^d - 1) / d.
pub fn primitive_poly_count(q: u64, d: usize) -> Result<BigUint> {
    let phi = euler_phi_pow_minus_1(q, d as u32)?;
    let divisor = BigUint::from(d);
    assert!(
        (&phi % &divisor) == BigUint::from(0u32),
        "d = {} must divide phi(q^d - 1)",
        d
    );
    Ok(phi / divisor)
}

/// Υ(m,n;q) = phi(q^(mn)-1)/(mn) * q^(m(m-1)(n-1)) * prod_{i=1}^{m-1}(q^m - q^i).
pub fn upsilon(m: usize, n: usize, field: PrimeField) -> Result<BigUint> {
    Ok(primitive_poly_count(field.q(), m * n)? * expected_fiber_size(field.q(), m, n))
}

/// The same quantity assembled the other way:
/// |GL_m|/(q^m - 1) * phi(q^(mn)-1)/(mn) * q^(m(m-1)(n-1)).
pub fn upsilon_alt(m: usize, n: usize, field: PrimeField) -> Result<BigUint> {
    let q = field.q();
    let gl = gl_order(q, m);
    let qm1 = BigUint::from(q).pow(m as u32) - BigUint::from(1u32);
    assert!((&gl % &qm1) == BigUint::from(0u32), "q^m - 1 must divide |GL_m|");
    Ok(gl / qm1
        * primitive_poly_count(q, m * n)?
        * BigUint::from(q).pow((m * (m - 1) * (n - 1)) as u32))
}

#[derive(Serialize, Clone, Debug)]
pub struct FiberEntry {
    pub poly: String,
    pub size: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<String>>,
}

#[derive(Serialize, Clone, Debug)]
pub struct CensusReport {
    pub schema: &'static str,
    pub q: u64,
    pub m: usize,
    pub n: usize,
    pub total: u64,
    pub upsilon: u64,
    pub fibers: Vec<FiberEntry>,
    /// Does the fiber key set exhaust all primitive polynomials of
    /// degree mn (the surjectivity the construction theorem proves)?
    pub surjective: bool,
    pub conjecture1: bool,
    pub conjecture2: bool,
}

impl CensusReport {
    pub fn all_checks_hold(&self) -> bool {
        self.surjective && self.conjecture1 && self.conjecture2
    }
}

struct CellDims {
    block_space: u64,
    tail_space: u64,
}

fn cell_dims(field: PrimeField, m: usize, n: usize) -> Result<CellDims> {
    let q = field.q();
    let candidates =
        gl_order(q, m) * BigUint::from(q).pow((m * m * (n - 1)) as u32);
    if candidates > BigUint::from(CANDIDATE_CAP) {
        return Err(Error::infeasible(
            "census enumeration",
            format!(
                "|GL_{}| * {}^{} = {} candidates exceed {}",
                m,
                q,
                m * m * (n - 1),
                candidates,
                CANDIDATE_CAP
            ),
        ));
    }
    // Under the candidate cap both index spaces fit comfortably in u64.
    let block_space = q.pow((m * m) as u32);
    let tail_space = q.pow((m * m * (n - 1)) as u32);
    Ok(CellDims { block_space, tail_space })
}

/// All block-companion Singer cycles at (m, n, q), in lexicographic
/// order of the concatenated row-major block entries.
pub fn enumerate_bcms(m: usize, n: usize, field: PrimeField) -> Result<Vec<BlockCompanion>> {
    let dims = cell_dims(field, m, n)?;
    let checker = PrimitivityChecker::new(field, m * n)?;
    let mut out = Vec::new();
    scan_slice(field, m, n, 0..dims.block_space, dims.tail_space, &checker, |bc, _| {
        out.push(bc.clone())
    });
    Ok(out)
}

/// Walk all candidate tuples whose C_0 index lies in `c0_range`,
/// invoking `visit` on each one with primitive Δ.
fn scan_slice(
    field: PrimeField,
    m: usize,
    n: usize,
    c0_range: std::ops::Range<u64>,
    tail_space: u64,
    checker: &PrimitivityChecker,
    mut visit: impl FnMut(&BlockCompanion, &Poly),
) {
    let q = field.q();
    let block_space = q.pow((m * m) as u32);
    for c0_idx in c0_range {
        let c0 = MatFq::from_index(field, m, m, c0_idx);
        if c0.det() == 0 {
            continue;
        }
        for tail in 0..tail_space {
            let mut blocks = Vec::with_capacity(n);
            blocks.push(c0.clone());
            let mut rest = tail;
            let mut tail_blocks = Vec::with_capacity(n - 1);
            for _ in 1..n {
                tail_blocks.push(rest % block_space);
                rest /= block_space;
            }
            // rest digits come out least-significant-first; C_1 is the
            // most significant so the tuple order is lexicographic.
            for &idx in tail_blocks.iter().rev() {
                blocks.push(MatFq::from_index(field, m, m, idx));
            }
            let bc = BlockCompanion::new(field, blocks).expect("blocks are square and uniform");
            let delta = bc
                .delta_poly()
                .expect("candidate cap keeps m within the determinant cap");
            if checker.check(&delta) {
                visit(&bc, &delta);
            }
        }
    }
}

struct FiberAcc {
    size: u64,
    members: Vec<String>,
}

/// Group the census by Δ and evaluate both conjectures plus the
/// surjectivity witness. `jobs` > 1 partitions the C_0 index space
/// across threads; the merged report is identical for any job count.
pub fn fiber_histogram(
    m: usize,
    n: usize,
    field: PrimeField,
    with_members: bool,
    jobs: usize,
) -> Result<CensusReport> {
    let q = field.q();
    let dims = cell_dims(field, m, n)?;
    let checker = PrimitivityChecker::new(field, m * n)?;
    let jobs = jobs.clamp(1, dims.block_space.max(1) as usize);

    let collect_slice = |range: std::ops::Range<u64>| -> BTreeMap<Poly, FiberAcc> {
        let mut map: BTreeMap<Poly, FiberAcc> = BTreeMap::new();
        scan_slice(field, m, n, range, dims.tail_space, &checker, |bc, delta| {
            let acc = map
                .entry(delta.clone())
                .or_insert_with(|| FiberAcc { size: 0, members: Vec::new() });
            acc.size += 1;
            if with_members {
                acc.members.push(bc.to_text());
            }
        });
        map
    };

    let merged: BTreeMap<Poly, FiberAcc> = if jobs == 1 {
        collect_slice(0..dims.block_space)
    } else {
        let bounds: Vec<u64> = (0..=jobs as u64)
            .map(|k| k * dims.block_space / jobs as u64)
            .collect();
        let partials: Vec<BTreeMap<Poly, FiberAcc>> = std::thread::scope(|scope| {
            let handles: Vec<_> = bounds
                .windows(2)
                .map(|w| {
                    let range = w[0]..w[1];
                    let collect_slice = &collect_slice;
                    scope.spawn(move || collect_slice(range))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("census worker")).collect()
        });
        // Workers own ascending C_0 slices, so appending member lists
        // in worker order preserves the global lexicographic order.
        let mut merged: BTreeMap<Poly, FiberAcc> = BTreeMap::new();
        for partial in partials {
            for (poly, acc) in partial {
                let slot = merged
                    .entry(poly)
                    .or_insert_with(|| FiberAcc { size: 0, members: Vec::new() });
                slot.size += acc.size;
                slot.members.extend(acc.members);
            }
        }
        merged
    };

    let total: u64 = merged.values().map(|a| a.size).sum();
    let upsilon_big = upsilon(m, n, field)?;
    let upsilon_u64 = u64::try_from(&upsilon_big).map_err(|_| {
        Error::infeasible("census report", format!("Υ = {} exceeds u64", upsilon_big))
    })?;
    let expected_fiber = expected_fiber_size(q, m, n);
    let conjecture2 = merged
        .values()
        .all(|a| BigUint::from(a.size) == expected_fiber);
    let surjective =
        BigUint::from(merged.len() as u64) == primitive_poly_count(q, m * n)?;
    let fibers = merged
        .into_iter()
        .map(|(poly, acc)| FiberEntry {
            poly: poly.to_string(),
            size: acc.size,
            members: with_members.then_some(acc.members),
        })
        .collect();
    Ok(CensusReport {
        schema: "1",
        q,
        m,
        n,
        total,
        upsilon: upsilon_u64,
        fibers,
        surjective,
        conjecture1: total == upsilon_u64,
        conjecture2,
    })
}

/// Brute-force count of Singer cycles in GL_m(F_q), by scanning every
/// matrix and testing the characteristic polynomial. Must agree with
/// Υ(m,1;q) and with |GL_m| phi(q^m - 1) / (m (q^m - 1)).
pub fn count_singer_gl(m: usize, field: PrimeField) -> Result<u64> {
    let q = field.q();
    if gl_order(q, m) > BigUint::from(GL_SCAN_CAP) {
        return Err(Error::infeasible(
            "Singer scan",
            format!("|GL_{}(F_{})| exceeds {}", m, q, GL_SCAN_CAP),
        ));
    }
    let scan_space = u32::try_from(m * m)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .ok_or_else(|| {
            Error::infeasible("Singer scan", format!("{}^{} exceeds u64", q, m * m))
        })?;
    let checker = PrimitivityChecker::new(field, m)?;
    let mut count = 0u64;
    for idx in 0..scan_space {
        let a = MatFq::from_index(field, m, m, idx);
        if a.det() == 0 {
            continue;
        }
        let cp = char_poly(&a).expect("scan cap keeps m within the determinant cap");
        if checker.check(&cp) {
            count += 1;
        }
    }
    Ok(count)
}

/// The fiber-subspace relation |Ψ^{-1}(f)| (q^{mn} - 1) = S |GL_m|,
/// with S the α-splitting subspace count — both sides by independent
/// brute force.
pub fn verify_splitting_fiber_relation(f: &Poly, m: usize, n: usize) -> Result<bool> {
    let field = *f.field();
    let report = fiber_histogram(m, n, field, false, 1)?;
    let fiber_size = report
        .fibers
        .iter()
        .find(|e| e.poly == f.to_string())
        .map_or(0, |e| e.size);
    let s = splitting_count(f, m, n)?.subspace_count;
    Ok(splitting_relation_holds(fiber_size, s, field.q(), m, n))
}

fn splitting_relation_holds(fiber_size: u64, subspaces: u64, q: u64, m: usize, n: usize) -> bool {
    let lhs = BigUint::from(fiber_size)
        * (BigUint::from(q).pow((m * n) as u32) - BigUint::from(1u32));
    let rhs = BigUint::from(subspaces) * gl_order(q, m);
    lhs == rhs
}

/// One cell of a verification grid. `None` sub-results mean that check
/// was infeasible at this cell, not that it failed.
#[derive(Serialize, Clone, Debug)]
pub struct VerifyCell {
    pub q: u64,
    pub m: usize,
    pub n: usize,
    pub skipped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upsilon: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture1: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surjective: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construct_roundtrip: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub splitting_relation: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub singer_scan: Option<bool>,
    pub passed: bool,
}

/// Run the full verification battery over a parameter grid. Infeasible
/// cells (or sub-checks) are marked skipped; `passed` is false only
/// when a check actually ran and came out false.
pub fn verify_all(
    field: PrimeField,
    m_range: RangeInclusive<usize>,
    n_range: RangeInclusive<usize>,
) -> Result<Vec<VerifyCell>> {
    let q = field.q();
    let mut cells = Vec::new();
    for m in m_range {
        for n in n_range.clone() {
            cells.push(verify_cell(field, q, m, n)?);
        }
    }
    Ok(cells)
}

fn verify_cell(field: PrimeField, q: u64, m: usize, n: usize) -> Result<VerifyCell> {
    let mut cell = VerifyCell {
        q,
        m,
        n,
        skipped: false,
        skip_reason: None,
        total: None,
        upsilon: None,
        conjecture1: None,
        conjecture2: None,
        surjective: None,
        construct_roundtrip: None,
        splitting_relation: None,
        singer_scan: None,
        passed: true,
    };
    let report = match fiber_histogram(m, n, field, false, 1) {
        Ok(r) => r,
        Err(Error::Infeasible { detail, .. }) => {
            cell.skipped = true;
            cell.skip_reason = Some(detail);
            return Ok(cell);
        }
        Err(e) => return Err(e),
    };
    cell.total = Some(report.total);
    cell.upsilon = Some(report.upsilon);
    cell.conjecture1 = Some(report.conjecture1);
    cell.conjecture2 = Some(report.conjecture2);
    cell.surjective = Some(report.surjective);

    if n == 1 {
        cell.singer_scan = match count_singer_gl(m, field) {
            Ok(count) => Some(count == report.total),
            Err(Error::Infeasible { .. }) => None,
            Err(e) => return Err(e),
        };
    }

    match enumerate_primitive(m * n, field) {
        Ok(polys) => {
            let mut construct_ok = true;
            for f in &polys {
                let bc = construct_primitive_sigma(f, m, n)?;
                construct_ok &= bc.is_invertible() && bc.delta_poly()? == *f;
            }
            cell.construct_roundtrip = Some(construct_ok);

            if gaussian_binomial(m * n, m, q) <= BigUint::from(SUBSPACE_CAP) {
                let mut relation_ok = true;
                for f in &polys {
                    let fiber_size = report
                        .fibers
                        .iter()
                        .find(|e| e.poly == f.to_string())
                        .map_or(0, |e| e.size);
                    let s = splitting_count(f, m, n)?.subspace_count;
                    relation_ok &= splitting_relation_holds(fiber_size, s, q, m, n);
                }
                cell.splitting_relation = Some(relation_ok);
            }
        }
        Err(Error::Infeasible { .. }) => {}
        Err(e) => return Err(e),
    }

    cell.passed = [
        cell.conjecture1,
        cell.conjecture2,
        cell.surjective,
        cell.construct_roundtrip,
        cell.splitting_relation,
        cell.singer_scan,
    ]
    .iter()
    .all(|check| check.unwrap_or(true));
    Ok(cell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intfactor::euler_phi;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn f(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    #[test]
    fn upsilon_known_values() {
        assert_eq!(upsilon(2, 2, f2()).unwrap(), BigUint::from(16u32));
        assert_eq!(upsilon(2, 3, f2()).unwrap(), BigUint::from(192u32));
        assert_eq!(upsilon(1, 1, f2()).unwrap(), BigUint::from(1u32));
        // m = 1 collapses to the primitive-polynomial count.
        for n in 1..=10usize {
            assert_eq!(
                upsilon(1, n, f2()).unwrap(),
                BigUint::from(euler_phi((1u64 << n) - 1) / n as u64)
            );
        }
        // n = 1 is the Singer count |GL_m| phi / (m (q^m - 1)).
        assert_eq!(upsilon(2, 1, f2()).unwrap(), BigUint::from(2u32));
        assert_eq!(upsilon(3, 1, f2()).unwrap(), BigUint::from(48u32));
        assert_eq!(upsilon(2, 1, f(3)).unwrap(), BigUint::from(12u32));
    }

    #[test]
    fn upsilon_forms_agree() {
        for q in [2u64, 3, 5] {
            for m in 1..=6usize {
                for n in 1..=6usize {
                    assert_eq!(
                        upsilon(m, n, f(q)).unwrap(),
                        upsilon_alt(m, n, f(q)).unwrap(),
                        "q={} m={} n={}",
                        q,
                        m,
                        n
                    );
                }
            }
        }
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(2, 1), BigUint::from(1u32));
        assert_eq!(gl_order(2, 2), BigUint::from(6u32));
        assert_eq!(gl_order(2, 3), BigUint::from(168u32));
        assert_eq!(gl_order(3, 2), BigUint::from(48u32));
        assert_eq!(gl_order(2, 4), BigUint::from(20160u32));
    }

    #[test]
    fn flagship_census_cell() {
        let report = fiber_histogram(2, 2, f2(), true, 1).unwrap();
        assert_eq!(report.total, 16);
        assert_eq!(report.upsilon, 16);
        assert!(report.conjecture1 && report.conjecture2 && report.surjective);
        assert_eq!(report.fibers.len(), 2);
        assert_eq!(report.fibers[0].poly, "x^4+x+1");
        assert_eq!(report.fibers[1].poly, "x^4+x^3+1");
        assert_eq!(report.fibers[0].size, 8);
        assert_eq!(report.fibers[1].size, 8);
        let members = report.fibers[0].members.as_ref().unwrap();
        assert_eq!(members.len(), 8);
        // The fixture tuple lands in the x^4+x+1 fiber.
        assert!(members.contains(&"C0=1,1;0,1;C1=0,0;1,0".to_string()));
        // And the other fixture in the x^4+x^3+1 fiber.
        assert!(report.fibers[1]
            .members
            .as_ref()
            .unwrap()
            .contains(&"C0=1,1;0,1;C1=0,0;1,1".to_string()));
    }

    #[test]
    fn six_fibers_of_thirty_two() {
        let report = fiber_histogram(2, 3, f2(), false, 1).unwrap();
        assert_eq!(report.total, 192);
        assert!(report.all_checks_hold());
        assert_eq!(report.fibers.len(), 6);
        assert!(report.fibers.iter().all(|e| e.size == 32));
        let expected_keys: Vec<String> = enumerate_primitive(6, f2())
            .unwrap()
            .iter()
            .map(Poly::to_string)
            .collect();
        let got: Vec<String> = report.fibers.iter().map(|e| e.poly.clone()).collect();
        assert_eq!(got, expected_keys);
    }

    #[test]
    fn degenerate_and_scalar_cells() {
        // (1,1,F_2): a single tuple, C_0 = [1].
        let bcs = enumerate_bcms(1, 1, f2()).unwrap();
        assert_eq!(bcs.len(), 1);
        assert_eq!(bcs[0].to_text(), "C0=1");
        // m = 1: the map is bijective, every fiber a singleton.
        let report = fiber_histogram(1, 4, f2(), false, 1).unwrap();
        assert!(report.fibers.iter().all(|e| e.size == 1));
        assert_eq!(report.total, 2); // the two primitive quartics
        assert!(report.all_checks_hold());
    }

    #[test]
    fn enumeration_is_lexicographic_and_matches_histogram() {
        let bcs = enumerate_bcms(2, 2, f2()).unwrap();
        assert_eq!(bcs.len(), 16);
        let mut keys: Vec<u64> = bcs
            .iter()
            .map(|bc| bc.block(0).to_index() * 16 + bc.block(1).to_index())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        keys.dedup();
        assert_eq!(keys.len(), 16);
        assert!(bcs.iter().all(|bc| bc.is_invertible()));
    }

    #[test]
    fn job_counts_agree() {
        for jobs in [2usize, 3, 8] {
            let a = fiber_histogram(2, 2, f2(), true, 1).unwrap();
            let b = fiber_histogram(2, 2, f2(), true, jobs).unwrap();
            let ja = serde_json::to_string(&a).unwrap();
            let jb = serde_json::to_string(&b).unwrap();
            assert_eq!(ja, jb, "jobs = {}", jobs);
        }
    }

    #[test]
    fn singer_scans() {
        assert_eq!(count_singer_gl(2, f2()).unwrap(), 2);
        assert_eq!(count_singer_gl(3, f2()).unwrap(), 48);
        assert_eq!(count_singer_gl(2, f(3)).unwrap(), 12);
        for (m, q) in [(2usize, 2u64), (3, 2), (2, 3)] {
            let count = BigUint::from(count_singer_gl(m, f(q)).unwrap());
            assert_eq!(count, upsilon(m, 1, f(q)).unwrap());
            // closed form |GL_m| phi(q^m - 1) / (m (q^m - 1))
            let qm1 = q.pow(m as u32) - 1;
            let closed = gl_order(q, m) * BigUint::from(euler_phi(qm1))
                / BigUint::from(m as u64 * qm1);
            assert_eq!(count, closed);
        }
    }

    #[test]
    fn n_equals_one_fibers_match_theorem() {
        // Every fiber has size |GL_m|/(q^m - 1).
        for (m, q) in [(2usize, 2u64), (3, 2), (2, 3)] {
            let report = fiber_histogram(m, 1, f(q), false, 1).unwrap();
            let expected = gl_order(q, m)
                / (BigUint::from(q).pow(m as u32) - BigUint::from(1u32));
            assert!(report
                .fibers
                .iter()
                .all(|e| BigUint::from(e.size) == expected));
            assert!(report.all_checks_hold());
        }
    }

    #[test]
    fn splitting_relation_cells() {
        let f_poly = Poly::parse(f2(), "x^4+x+1").unwrap();
        assert!(verify_splitting_fiber_relation(&f_poly, 2, 2).unwrap());
        // n = 1: |fiber| (q^m - 1) = 1 * |GL_m|.
        assert!(verify_splitting_fiber_relation(&f_poly, 4, 1).unwrap());
        // m = 1: singleton fibers against (q^n - 1)/(q - 1) lines.
        let g = Poly::parse(f2(), "x^2+x+1").unwrap();
        assert!(verify_splitting_fiber_relation(&g, 1, 2).unwrap());
    }

    #[test]
    fn infeasible_cells_error() {
        assert!(matches!(
            fiber_histogram(4, 4, f2(), false, 1),
            Err(Error::Infeasible { .. })
        ));
        assert!(matches!(
            count_singer_gl(6, f2()),
            Err(Error::Infeasible { .. })
        ));
    }

    #[test]
    fn verify_grid_small() {
        let cells = verify_all(f2(), 1..=2, 1..=3).unwrap();
        assert_eq!(cells.len(), 6);
        assert!(cells.iter().all(|c| !c.skipped && c.passed));
        let flagship = cells.iter().find(|c| c.m == 2 && c.n == 2).unwrap();
        assert_eq!(flagship.total, Some(16));
        assert_eq!(flagship.construct_roundtrip, Some(true));
        assert_eq!(flagship.splitting_relation, Some(true));
        let singer = cells.iter().find(|c| c.m == 2 && c.n == 1).unwrap();
        assert_eq!(singer.singer_scan, Some(true));
        assert_eq!(singer.total, Some(2));
    }
}
