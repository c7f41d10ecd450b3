//! Collatz-style dynamics on polynomial rings.
//!
//! Over F_2[x] the map sends odd f to (1+x)f + 1 and even f to f/x, and every
//! nonzero polynomial reaches 1. This crate provides the exact bit-mask
//! arithmetic, the map and its auxiliary factorizations, two independent
//! stopping-time engines (direct iteration and the reduced S3 form), closed
//! formulas for the family (x^a (x+1)^b)^n + 1 with their
//! arithmetic-progression runs, exhaustive per-degree sweeps of maximal and
//! average stopping times, and the F_p[x] generalization with pre-period
//! detection.
//!
//! Everything here is `no_std` (with `alloc`); IO, file formats and the
//! command-line front end live in the companion `polycollatz-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod closed_form;
pub mod dynamics;
pub mod error;
pub mod fp;
pub mod fp_dynamics;
pub mod gf2;
pub mod sweep;

pub use closed_form::{ApRun, FamilyParams};
pub use dynamics::{MapKind, Method, StoppingResult, Trajectory};
pub use error::{Error, ParseError};
pub use fp::FpPoly;
pub use fp_dynamics::FpStoppingResult;
pub use gf2::Gf2Poly;
pub use sweep::{SweepRow, DEFAULT_DEGREE_CAP};
