//! Upsilon-type invariants of knot-type complexes.
//!
//! [`Engine`] precomputes the degree-0 homology of one complex once; each
//! invariant is then a short sequence of incremental F2 span insertions.
//! The free functions below are one-shot wrappers that build an engine per
//! call.

mod engine;
mod eta;
pub mod oracle;
mod secondary;
mod surgery;
mod upsilon;

use core::fmt;

use crate::chain::KnotComplex;
use crate::error::Result;
use crate::exactmath::Rational;
use crate::regions::{PLFunction, SouthWestRegion};

pub use engine::Engine;
pub(crate) use upsilon::{breaking_points_of, generator_line};

/// Value of a secondary invariant. `NoObstruction` means the two exceptional
/// cycle sets already share a cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SecondaryValue {
    Value(Rational),
    NoObstruction,
}

impl SecondaryValue {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            SecondaryValue::Value(v) => Some(v),
            SecondaryValue::NoObstruction => None,
        }
    }
}

impl fmt::Display for SecondaryValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SecondaryValue::Value(v) => write!(f, "{v}"),
            SecondaryValue::NoObstruction => f.write_str("no-obstruction"),
        }
    }
}

/// A point where `Υ_K` bends upwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreakingPoint {
    pub t: Rational,
    /// Right slope minus left slope of `Υ_K`; always positive.
    pub jump: Rational,
    /// For staircases: the least and greatest index `i` whose corner `x_i`
    /// realizes the minimum at `t`.
    pub i_minus: Option<usize>,
    pub i_plus: Option<usize>,
}

pub fn h0_surjective(k: &KnotComplex, r: &SouthWestRegion, t: &Rational) -> Result<bool> {
    Ok(Engine::new(k)?.h0_surjective(r, t))
}

pub fn upsilon_region(k: &KnotComplex, r: &SouthWestRegion) -> Result<Rational> {
    Engine::new(k)?.upsilon_region(r)
}

pub fn upsilon_function(k: &KnotComplex) -> Result<PLFunction> {
    Engine::new(k)?.upsilon_function()
}

pub fn breaking_points(k: &KnotComplex) -> Result<alloc::vec::Vec<BreakingPoint>> {
    Engine::new(k)?.breaking_points()
}

pub fn vk(k: &KnotComplex, s: i64) -> Result<Rational> {
    Engine::new(k)?.vk(s)
}

pub fn nu_plus(k: &KnotComplex) -> Result<i64> {
    Engine::new(k)?.nu_plus()
}

pub fn d_invariant(k: &KnotComplex, q: i64, m: i64) -> Result<Rational> {
    Engine::new(k)?.d_invariant(q, m)
}

pub fn secondary(
    k: &KnotComplex,
    cplus: &SouthWestRegion,
    cminus: &SouthWestRegion,
    c: &SouthWestRegion,
) -> Result<SecondaryValue> {
    Engine::new(k)?.secondary(cplus, cminus, c)
}

pub fn kim_livingston(k: &KnotComplex, t_star: &Rational, s: &Rational) -> Result<SecondaryValue> {
    Engine::new(k)?.kim_livingston(t_star, s)
}

pub fn eta(k: &KnotComplex, c: &SouthWestRegion) -> Result<Rational> {
    Engine::new(k)?.eta(c)
}
