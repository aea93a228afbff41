use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{BreakingPoint, Engine};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::regions::{PLFunction, SouthWestRegion};

/// `L_g(t) = (t/2)A + (1 − t/2)j` as `(intercept, slope)`.
pub(crate) fn generator_line(a: i64, j: i64) -> (Rational, Rational) {
    (Rational::from(j), Rational::frac(a - j, 2))
}

fn at(line: &(Rational, Rational), t: &Rational) -> Rational {
    &line.0 + &(&line.1 * t)
}

/// Where two non-parallel lines meet.
fn crossing(l: &(Rational, Rational), m: &(Rational, Rational)) -> Option<Rational> {
    if l.1 == m.1 {
        return None;
    }
    Some((&m.0 - &l.0).checked_div(&(&l.1 - &m.1)).expect("slopes differ"))
}

impl Engine {
    fn degree0_lines(&self) -> Vec<(Rational, Rational)> {
        self.degree0()
            .iter()
            .map(|g| generator_line(g.alexander, g.algebraic))
            .collect()
    }

    /// `Υ_K(t) = −2·Υ^{H_t}` for a single `t ∈ [0, 2]`.
    pub fn upsilon_at(&self, t: &Rational) -> Result<Rational> {
        let h = SouthWestRegion::classical(t).map_err(|_| Error::OutOfDomain(alloc::format!("{t}")))?;
        Ok(self.upsilon_region(&h)?.mul_int(-2))
    }

    /// The knot-level function `Υ_K(t) = −2·Υ^{H_t}` on `[0, 2]`.
    ///
    /// `Υ^{H_t}` is the value of a single generator line `L_g` near every
    /// `t`. Ordering the lines by value and then slope at `t` gives their
    /// order just to the right of `t`; the line at which the sorted prefix
    /// first spans the `H_0` generator stays in charge until another line
    /// crosses it. The sweep hops from crossing to crossing.
    pub fn upsilon_function(&self) -> Result<PLFunction> {
        let lines = self.degree0_lines();
        let two = Rational::from(2);
        let mut t = Rational::zero();
        let mut points = Vec::new();
        loop {
            let values: Vec<Rational> = lines.iter().map(|l| at(l, &t)).collect();
            let mut order: Vec<usize> = (0..lines.len()).collect();
            order.sort_by(|&a, &b| values[a].cmp(&values[b]).then_with(|| lines[a].1.cmp(&lines[b].1)));
            let stop = self
                .first_spanning(&order, |g| (values[g].clone(), lines[g].1.clone()))
                .ok_or_else(|| Error::Internal("H_0 generator never reached".into()))?;
            let active = &lines[order[stop]];
            points.push((t.clone(), values[order[stop]].clone()));
            if t == two {
                break;
            }
            let next = lines
                .iter()
                .filter_map(|l| crossing(active, l))
                .filter(|c| *c > t)
                .min()
                .map_or(two.clone(), |c| c.min(two.clone()));
            t = next;
        }
        Ok(PLFunction::from_breakpoints(points)?.scale(&Rational::from(-2)))
    }

    /// Every `t ∈ [0, 2]` where two generator lines cross, plus the endpoints.
    /// `Υ_K` can only bend at these points.
    pub fn candidate_breakpoints(&self) -> BTreeSet<Rational> {
        let mut lines = self.degree0_lines();
        lines.sort();
        lines.dedup();
        let mut out = BTreeSet::new();
        out.insert(Rational::zero());
        out.insert(Rational::from(2));
        let two = Rational::from(2);
        for (i, l) in lines.iter().enumerate() {
            for m in &lines[i + 1..] {
                if let Some(c) = crossing(l, m) {
                    if !c.is_negative() && c <= two {
                        out.insert(c);
                    }
                }
            }
        }
        out
    }

    /// Singular points of `Υ_K` where its derivative jumps up.
    pub fn breaking_points(&self) -> Result<Vec<BreakingPoint>> {
        Ok(breaking_points_of(&self.upsilon_function()?))
    }
}

pub(crate) fn breaking_points_of(f: &PLFunction) -> Vec<BreakingPoint> {
    f.derivative_jumps()
        .into_iter()
        .filter(|(_, jump)| jump.is_positive())
        .map(|(t, jump)| BreakingPoint {
            t,
            jump,
            i_minus: None,
            i_plus: None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{BaseGenerator, KnotComplex};
    use crate::exactmath::q;

    fn trefoil() -> KnotComplex {
        KnotComplex::with_named_arrows(
            alloc::vec![
                BaseGenerator::new("x0", 1, 0, 0),
                BaseGenerator::new("x1", 0, 1, 0),
                BaseGenerator::new("y0", 1, 1, 1),
            ],
            [("y0", "x0", 0), ("y0", "x1", 0)],
        )
        .unwrap()
    }

    #[test]
    fn trefoil_function() {
        let f = Engine::new(&trefoil()).unwrap().upsilon_function().unwrap();
        let r = Rational::from;
        assert_eq!(f.breakpoints(), [(r(0), r(0)), (r(1), r(-1)), (r(2), r(0))]);
        let bps = Engine::new(&trefoil()).unwrap().breaking_points().unwrap();
        assert_eq!(bps.len(), 1);
        assert_eq!((bps[0].t.clone(), bps[0].jump.clone()), (r(1), r(2)));
    }

    #[test]
    fn mirror_trefoil_has_no_breaking_point() {
        let e = Engine::new(&trefoil().mirror()).unwrap();
        assert_eq!(e.upsilon_at(&Rational::one()).unwrap(), Rational::one());
        assert!(e.breaking_points().unwrap().is_empty());
        assert!(e.upsilon_at(&q(3, 1)).is_err());
    }

    #[test]
    fn trefoil_candidates() {
        let c = Engine::new(&trefoil()).unwrap().candidate_breakpoints();
        assert_eq!(c.into_iter().collect::<Vec<_>>(), [Rational::zero(), Rational::one(), Rational::from(2)]);
    }
}
