//! Parse a block companion tuple, compute its Δ polynomial, and test
//! primitivity. Run with `cargo run -p sigma-lfsr --example delta`.

use sigma_lfsr::order::is_primitive;
use sigma_lfsr::{BlockCompanion, Poly, PrimeField};

fn main() -> Result<(), sigma_lfsr::Error> {
    let f2 = PrimeField::new(2)?;
    let bc = BlockCompanion::parse(f2, "C0=1,1;0,1;C1=0,0;1,0")?;
    let delta = bc.delta_poly()?;
    assert_eq!(delta, Poly::parse(f2, "x^4+x+1")?);
    assert!(is_primitive(&delta)?);
    println!("ok: delta = {delta}");
    Ok(())
}
