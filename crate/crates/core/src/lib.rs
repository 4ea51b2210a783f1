//! Exact computational algebra for word-oriented LFSRs over finite
//! fields: prime and extension field arithmetic, polynomial order and
//! primitivity, block companion matrices and their characteristic maps,
//! sequence engines, and exhaustive enumeration of the primitive cases.

pub mod block;
pub mod census;
pub mod construct;
pub mod error;
pub mod ext;
pub mod field;
pub mod intfactor;
pub mod keystream;
pub mod lfsr;
pub mod matrix;
pub mod order;
pub mod poly;
pub mod polyfactor;
pub mod polymat;
pub mod splitting;

pub use block::BlockCompanion;
pub use census::CensusReport;
pub use error::{Error, Result};
pub use ext::{ExtElem, ExtField, ExtPoly};
pub use field::{Field, PrimeField};
pub use lfsr::{LfsrSpec, PeriodReport, SigmaLfsrSpec};
pub use matrix::MatFq;
pub use poly::{Poly, Polynomial};
