//! Exact upsilon-type concordance invariants of knot-type complexes.
//!
//! A knot-type complex is presented combinatorially: finitely many base
//! generators carrying an Alexander level `A`, an algebraic level `j` and a
//! Maslov grading `M`, together with an F2 differential over `F2[U, U^-1]`.
//! Every invariant in this crate is computed with exact rationals and dense
//! F2 linear algebra on finite Maslov slices; there is no floating point.
//!
//! Layout:
//!
//! * [`exactmath`]: [`Rational`], bit vectors and F2 matrices.
//! * [`chain`]: [`KnotComplex`], validation, Maslov slices, tensor, mirror, boxes.
//! * [`regions`]: south-west regions, entering times, exact PL functions.
//! * [`invariants`]: `Υ^C`, the upsilon function, `V`, `ν⁺`, d-invariants,
//!   secondary invariants, `η_C`, and brute-force oracles.
//! * [`knotzoo`]: semigroups, Puiseux data, Alexander polynomials and the
//!   staircase builders for torus, pretzel, thin and algebraic knots.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chain;
mod error;
pub mod exactmath;
pub mod invariants;
pub mod knotzoo;
pub mod regions;

pub use chain::{BaseGenerator, Chain, KnotComplex, LatticeGenerator, ValidationReport};
pub use error::{Error, Result};
pub use exactmath::{BitVec, F2Matrix, Rational};
pub use invariants::{BreakingPoint, Engine, SecondaryValue};
pub use knotzoo::{JumpSequence, PuiseuxData, Semigroup};
pub use regions::{HalfPlane, PLFunction, SouthWestRegion};
