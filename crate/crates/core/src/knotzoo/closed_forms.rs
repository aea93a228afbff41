//! Closed-form values used to cross-check the engine.

use alloc::format;

use super::Semigroup;
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::invariants::SecondaryValue;
use crate::regions::PLFunction;

/// `−τ(1 − |t − 1|)`, the upsilon function of a thin knot.
pub fn thin_upsilon(tau: i64) -> PLFunction {
    let r = Rational::from;
    PLFunction::from_breakpoints(alloc::vec![(r(0), r(0)), (r(1), r(-tau)), (r(2), r(0))])
        .expect("valid breakpoints")
}

/// `Υ^C` of a thin knot for `C = {(t/2)A + (1 − t/2)j ≤ 0} ∪ {(s/2)A + (1 − s/2)j ≤ q}`
/// with `t, s ∈ [0, 1]`.
///
/// For `τ ≥ 0` each corner `x_i = (τ − i, i)` is a generating cycle and both
/// lines are smallest at `i = 0`. For `τ < 0` the only generating cycle is
/// `Σ x_i`, and both lines are largest at its corner nearest the origin. In
/// both cases the value is `min{tτ/2, sτ/2 − q}`.
pub fn thin_three_param(tau: i64, t: &Rational, s: &Rational, q: &Rational) -> Result<Rational> {
    for (name, v) in [("t", t), ("s", s)] {
        if v.is_negative() || *v > Rational::one() {
            return Err(Error::OutOfDomain(format!("{name} = {v} must lie in [0, 1]")));
        }
    }
    let tau = Rational::from(tau);
    let first = (t * &tau).div_int(2);
    let second = (s * &tau).div_int(2) - q;
    Ok(first.min(second))
}

/// The Kim–Livingston invariant of a thin knot at its singularity `t = 1`:
/// `(1 − τ)|1 − s| − 1` for `τ > 0`, and no obstruction otherwise.
pub fn thin_kl_closed(tau: i64, s: &Rational) -> Result<SecondaryValue> {
    if s.is_negative() || *s > Rational::from(2) {
        return Err(Error::OutOfDomain(format!("{s}")));
    }
    if tau <= 0 {
        return Ok(SecondaryValue::NoObstruction);
    }
    let v = (Rational::one() - &s.clone()).abs().mul_int(1 - tau) - Rational::one();
    Ok(SecondaryValue::Value(v))
}

/// `η_C = (1 − 1/a)τ − (a − 1)n(S)` for an algebraic knot with Puiseux
/// exponent `a` and `C = {(1/a)A + (1 − 1/a)j ≤ 0}`, where `τ` is the genus.
pub fn eta_closed_form(s: &Semigroup, a: u64) -> Result<Rational> {
    if s.generators().first() != Some(&a) {
        return Err(Error::Precondition(format!("{a} is not the smallest generator")));
    }
    let n = s.n_of(a)? as i64;
    let a = a as i64;
    let tau = Rational::from(s.genus() as i64);
    Ok(tau.mul_int(a - 1).div_int(a) - Rational::from((a - 1) * n))
}
