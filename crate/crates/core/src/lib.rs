//! Exact computation of Kazhdan–Lusztig, R-, R̃-, and relative R̃-polynomials
//! of Bruhat intervals in the symmetric group, together with hypercube
//! decompositions of intervals and exhaustive desk-scale verification of the
//! identities relating them.
//!
//! The polynomial layer is generic over the coefficient scalar (any signed
//! exact integer via `num-traits`); the aliases below fix the canonical
//! arbitrary-precision instantiation used by the sweeps and the CLI.

mod bits;

pub mod bbdvw;
pub mod bruhat;
pub mod camels;
pub mod error;
pub mod hypercube;
pub mod klr;
pub mod perm;
pub mod poly;
pub mod sweep;

pub use error::{Error, Result};
pub use perm::{Perm, Transposition};

/// Canonical coefficient scalar: arbitrary-precision integers, so overflow is
/// impossible by construction.
pub type Int = num_bigint::BigInt;

/// Canonical exact polynomial in q.
pub type Poly = poly::LaurentPoly<Int>;

/// Canonical shared polynomial table.
pub type Cache = klr::PolyCache<Int>;

/// Fixed-width instantiation for callers that want it (tests, quick scripts).
pub type Poly64 = poly::LaurentPoly<i64>;
