//! Builders for torus, pretzel, thin and algebraic knot complexes, plus the
//! combinatorics behind them.
//!
//! Every L-space knot here is modelled by its staircase. The staircase is
//! read off a numerical semigroup (torus and algebraic knots) or off an
//! Alexander polynomial (the pretzel family).

mod alexander;
pub mod closed_forms;
mod fk;
mod puiseux;
mod semigroup;
mod staircase;

use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::chain::KnotComplex;
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::regions::PLFunction;

pub use alexander::{alexander_from_semigroup, alexander_pretzel, alexander_torus_2, AlexanderPolynomial};
pub use fk::fk_upsilon;
pub use puiseux::PuiseuxData;
pub use semigroup::Semigroup;
pub use staircase::{staircase_from_jumps, JumpSequence};

/// Staircase of the positive torus knot `T(p, q)`.
pub fn torus_jumps(p: u64, q: u64) -> Result<JumpSequence> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(Error::InvalidKnot(format!("T({p},{q}) needs coprime p, q >= 2")));
    }
    let jumps = Semigroup::from_generators(&[p, q])?.jumps()?;
    let genus = ((p - 1) * (q - 1) / 2) as i64;
    if jumps.genus() != genus {
        return Err(Error::Internal(format!("T({p},{q}) staircase has genus {}, expected {genus}", jumps.genus())));
    }
    Ok(jumps)
}

pub fn torus_knot(p: u64, q: u64) -> Result<KnotComplex> {
    Ok(staircase_from_jumps(&torus_jumps(p, q)?))
}

/// Staircase of `P(−2, 3, q)`, derived from its Alexander polynomial and
/// checked against the pattern `(1, 2, 1, …, 1, 2, 1)` with `q − 3` ones in
/// the middle.
pub fn pretzel_jumps(q: u64) -> Result<JumpSequence> {
    let derived = alexander_pretzel(q)?.l_space_jumps()?;
    let mut expected = alloc::vec![1, 2];
    expected.extend(core::iter::repeat_n(1, q as usize - 3));
    expected.extend([2, 1]);
    if derived.as_slice() != expected.as_slice() {
        return Err(Error::Internal(format!(
            "P(-2,3,{q}) Alexander polynomial gives staircase {derived}"
        )));
    }
    Ok(derived)
}

pub fn pretzel(q: u64) -> Result<KnotComplex> {
    Ok(staircase_from_jumps(&pretzel_jumps(q)?))
}

/// Thin knot model up to acyclic summands: `2τ` unit steps for `τ > 0`, the
/// unknot for `τ = 0`, and the mirror of the `−τ` model for `τ < 0`.
pub fn thin_model(tau: i64) -> KnotComplex {
    let n = tau.unsigned_abs() as usize;
    let k = staircase_from_jumps(&JumpSequence::new(alloc::vec![1; 2 * n]).expect("unit jumps"));
    if tau < 0 {
        k.mirror()
    } else {
        k
    }
}

/// Staircase of the algebraic knot with Puiseux data `(a; q_1, …, q_n)`.
pub fn algebraic_jumps(data: &PuiseuxData) -> Result<JumpSequence> {
    data.semigroup()?.jumps()
}

pub fn algebraic_knot(data: &PuiseuxData) -> Result<KnotComplex> {
    Ok(staircase_from_jumps(&algebraic_jumps(data)?))
}

pub fn staircase_upsilon(jumps: &JumpSequence) -> PLFunction {
    jumps.upsilon()
}

pub fn staircase_kl(jumps: &JumpSequence, t_star: &Rational, s: &Rational) -> Result<Rational> {
    jumps.kim_livingston(t_star, s)
}

pub fn n_of_semigroup(s: &Semigroup, a: u64) -> Result<u64> {
    s.n_of(a)
}

/// Every coprime pair `2 ≤ q < p ≤ bound`.
pub fn coprime_pairs(bound: u64) -> Vec<(u64, u64)> {
    (2..=bound)
        .flat_map(|p| (2..p).filter(move |&q| p.gcd(&q) == 1).map(move |q| (p, q)))
        .collect()
}
