//! Exhaustive reference implementations.
//!
//! These enumerate every generating cycle (and every bounding chain) instead
//! of reasoning about spans, so they are exponential and guarded by
//! dimension limits. They exist to cross-check the engine.

use alloc::vec::Vec;

use super::{Engine, SecondaryValue};
use crate::chain::KnotComplex;
use crate::error::{Error, Result};
use crate::exactmath::{BitVec, Rational, Span};
use crate::regions::{PLFunction, SouthWestRegion};

/// Largest `dim B_0` (and `dim Z_1`) the oracles will enumerate.
pub const ORACLE_DIM_LIMIT: usize = 20;

/// Largest number of `(z⁺, z⁻, β)` triples the secondary oracle will visit.
pub const ORACLE_WORK_LIMIT: usize = 1 << 24;

struct Cycles {
    /// Every degree-0 cycle representing the generator of `H_0`.
    generating: Vec<BitVec>,
    /// Size of the degree-0 slice.
    deg0: usize,
}

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::GuardExceeded { what, size, limit })
    } else {
        Ok(())
    }
}

fn span_elements(basis: &[BitVec], len: usize) -> Vec<BitVec> {
    let mut out = alloc::vec![BitVec::zeros(len)];
    for b in basis {
        let more: Vec<BitVec> = out
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.xor_assign(b);
                w
            })
            .collect();
        out.extend(more);
    }
    out
}

fn generating_cycles(k: &KnotComplex) -> Result<Cycles> {
    let deg0 = k.maslov_slice(0).len();
    let mut b0 = Span::new(deg0);
    for c in k.boundary_matrix(1).columns() {
        b0.insert(c);
    }
    guard("dim B_0", b0.rank(), ORACLE_DIM_LIMIT)?;
    let z = k.representative_cycle()?;
    let positions = crate::chain::slice_positions(k.len(), &k.maslov_slice(0));
    let z_ref = BitVec::from_indices(deg0, z.terms().iter().map(|g| positions[g.base].expect("degree 0")));
    let generating = span_elements(b0.basis(), deg0)
        .into_iter()
        .map(|mut b| {
            b.xor_assign(&z_ref);
            b
        })
        .collect();
    Ok(Cycles { generating, deg0 })
}

fn filtration_level(cycle: &BitVec, times: &[Rational]) -> Rational {
    cycle
        .ones()
        .map(|i| times[i].clone())
        .max()
        .expect("generating cycles are non-zero")
}

/// `Υ^C` as the minimum over all generating cycles of the latest entering
/// time in their support.
pub fn brute_force_upsilon(k: &KnotComplex, r: &SouthWestRegion) -> Result<Rational> {
    let cycles = generating_cycles(k)?;
    let times: Vec<Rational> = k
        .maslov_slice(0)
        .iter()
        .map(|g| r.entering_time_at(g.alexander, g.algebraic))
        .collect();
    debug_assert_eq!(times.len(), cycles.deg0);
    cycles
        .generating
        .iter()
        .map(|z| filtration_level(z, &times))
        .min()
        .ok_or_else(|| Error::NotKnotType("no generating cycle".into()))
}

/// `Υ_{C±, C}` by enumerating the exceptional cycle sets and every
/// degree-1 chain bounding their differences.
pub fn brute_force_secondary(
    k: &KnotComplex,
    cplus: &SouthWestRegion,
    cminus: &SouthWestRegion,
    c: &SouthWestRegion,
) -> Result<SecondaryValue> {
    let cycles = generating_cycles(k)?;
    let slice0 = k.maslov_slice(0);
    let slice1 = k.maslov_slice(1);
    let d1 = k.boundary_matrix(1);
    let z1 = d1.kernel();
    guard("dim Z_1", z1.len(), ORACLE_DIM_LIMIT)?;

    let exceptional = |r: &SouthWestRegion| -> (Rational, Vec<BitVec>) {
        let times: Vec<Rational> = slice0
            .iter()
            .map(|g| r.entering_time_at(g.alexander, g.algebraic))
            .collect();
        let gamma = cycles
            .generating
            .iter()
            .map(|z| filtration_level(z, &times))
            .min()
            .expect("non-empty");
        let set = cycles
            .generating
            .iter()
            .filter(|z| filtration_level(z, &times) <= gamma)
            .cloned()
            .collect();
        (gamma, set)
    };
    let (gplus, zplus) = exceptional(cplus);
    let (gminus, zminus) = exceptional(cminus);
    if zplus.iter().any(|z| zminus.contains(z)) {
        return Ok(SecondaryValue::NoObstruction);
    }
    guard(
        "exceptional pairs x bounding chains",
        zplus.len().saturating_mul(zminus.len()).saturating_mul(1 << z1.len()),
        ORACLE_WORK_LIMIT,
    )?;

    // Degree-1 generators already inside C±_{γ±} cost nothing.
    let cost: Vec<Option<Rational>> = slice1
        .iter()
        .map(|g| {
            let (a, j) = (Rational::from(g.alexander), Rational::from(g.algebraic));
            if cplus.contains((&a, &j), &gplus) || cminus.contains((&a, &j), &gminus) {
                None
            } else {
                Some(c.entering_time((&a, &j)))
            }
        })
        .collect();
    let kernel = span_elements(&z1, slice1.len());
    let mut best: Option<Option<Rational>> = None;
    for zp in &zplus {
        for zm in &zminus {
            let mut w = zp.clone();
            w.xor_assign(zm);
            let Some(beta0) = d1.solve(&w)? else {
                return Err(Error::Internal("generating cycles differ by a non-boundary".into()));
            };
            for kv in &kernel {
                let mut beta = beta0.clone();
                beta.xor_assign(kv);
                let level = beta.ones().filter_map(|i| cost[i].clone()).max();
                best = Some(match best {
                    None => level,
                    Some(prev) => match (prev, level) {
                        (None, _) | (_, None) => None,
                        (Some(a), Some(b)) => Some(a.min(b)),
                    },
                });
            }
        }
    }
    Ok(match best.flatten() {
        Some(v) => SecondaryValue::Value(v),
        None => SecondaryValue::NoObstruction,
    })
}

/// `Υ_K` by evaluating `Υ^{H_t}` at every pairwise crossing of generator
/// lines and checking that the midpoints of consecutive candidates
/// interpolate linearly.
pub fn upsilon_function_exhaustive(engine: &Engine) -> Result<PLFunction> {
    let candidates: Vec<Rational> = engine.candidate_breakpoints().into_iter().collect();
    let mut points = Vec::with_capacity(candidates.len());
    for t in &candidates {
        points.push((t.clone(), engine.upsilon_at(t)?));
    }
    for w in points.windows(2) {
        let mid = (&w[0].0 + &w[1].0).div_int(2);
        let expected = (&w[0].1 + &w[1].1).div_int(2);
        if engine.upsilon_at(&mid)? != expected {
            return Err(Error::Internal(alloc::format!(
                "upsilon is not linear between candidates {} and {}",
                w[0].0,
                w[1].0
            )));
        }
    }
    PLFunction::from_breakpoints(points)
}

/// Kim–Livingston value from [`brute_force_secondary`] and
/// [`brute_force_upsilon`], with its own choice of `δ`: a quarter of the
/// smallest gap between `t*` and any crossing of two degree-0 generator
/// lines, cross-checked against `δ/2`.
pub fn brute_force_kim_livingston(k: &KnotComplex, t_star: &Rational, s: &Rational) -> Result<SecondaryValue> {
    let two = Rational::from(2);
    if !t_star.is_positive() || *t_star >= two {
        return Err(Error::Precondition(alloc::format!("t* = {t_star} must lie strictly inside (0, 2)")));
    }
    // Line of (A, j) is j + t(A − j)/2.
    let lines: Vec<(Rational, Rational)> = k
        .maslov_slice(0)
        .iter()
        .map(|g| (Rational::from(g.algebraic), Rational::from(g.alexander - g.algebraic).div_int(2)))
        .collect();
    let mut gap = t_star.clone().min(&two - t_star);
    for (i, (b1, m1)) in lines.iter().enumerate() {
        for (b2, m2) in &lines[i + 1..] {
            if m1 == m2 {
                continue;
            }
            let t = (b2 - b1).checked_div(&(m1 - m2))?;
            if t != *t_star {
                gap = gap.min((&t - t_star).abs());
            }
        }
    }
    let h = SouthWestRegion::classical;
    let base = brute_force_upsilon(k, &h(t_star)?)?;
    let at = |delta: Rational| -> Result<SecondaryValue> {
        let v = brute_force_secondary(k, &h(&(t_star + &delta))?, &h(&(t_star - &delta))?, &h(s)?)?;
        Ok(match v {
            SecondaryValue::Value(v) => SecondaryValue::Value((v - &base).mul_int(-2)),
            SecondaryValue::NoObstruction => SecondaryValue::NoObstruction,
        })
    };
    let delta = gap.div_int(4);
    let value = at(delta.clone())?;
    if value != at(delta.div_int(2))? {
        return Err(Error::Internal("oracle value depends on delta".into()));
    }
    Ok(value)
}
