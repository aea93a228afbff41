use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::chain::{Arrow, BaseGenerator, KnotComplex};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::invariants::{breaking_points_of, generator_line, BreakingPoint};
use crate::regions::PLFunction;

/// Step lengths `(a_1, …, a_2k)` of a staircase: odd steps go up in `j`,
/// even steps go left in `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JumpSequence(Vec<u64>);

impl JumpSequence {
    pub fn new(jumps: Vec<u64>) -> Result<Self> {
        if jumps.len() % 2 == 1 {
            return Err(Error::InvalidJumps(format!("odd length {}", jumps.len())));
        }
        if jumps.contains(&0) {
            return Err(Error::InvalidJumps("jumps must be positive".into()));
        }
        Ok(JumpSequence(jumps))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn genus(&self) -> i64 {
        (self.0.iter().sum::<u64>() / 2) as i64
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Corners `x_0, …, x_k` as `(n_i, m_i)`, with `n_0 = g`.
    pub fn x_corners(&self) -> Vec<(i64, i64)> {
        let mut n = self.genus();
        let mut m = 0;
        let mut out = alloc::vec![(n, m)];
        for pair in self.0.chunks(2) {
            m += pair[0] as i64;
            n -= pair[1] as i64;
            out.push((n, m));
        }
        out
    }

    /// Corners `y_0, …, y_{k−1}` with `y_i` at `(n_i, m_{i+1})`.
    pub fn y_corners(&self) -> Vec<(i64, i64)> {
        let x = self.x_corners();
        x.windows(2).map(|w| (w[0].0, w[1].1)).collect()
    }

    /// `Υ_t = −2·min_i {(t/2)n_i + (1 − t/2)m_i}`.
    pub fn upsilon(&self) -> PLFunction {
        let lines: Vec<_> = self.x_corners().iter().map(|&(n, m)| generator_line(n, m)).collect();
        PLFunction::lower_envelope(&lines)
            .expect("a staircase has at least one corner")
            .scale(&Rational::from(-2))
    }

    /// Breaking points with the least and greatest index realizing the minimum.
    pub fn breaking_points(&self) -> Vec<BreakingPoint> {
        let corners = self.x_corners();
        breaking_points_of(&self.upsilon())
            .into_iter()
            .map(|mut bp| {
                let (lo, hi) = minimizing_range(&corners, &bp.t);
                bp.i_minus = Some(lo);
                bp.i_plus = Some(hi);
                bp
            })
            .collect()
    }

    /// `−2·(max_{i₋ ≤ j < i₊} {(s/2)n_j + (1 − s/2)m_{j+1}} − Υ_{t*})`, where
    /// `Υ_{t*}` is the envelope value and `i₋ ≤ i₊` are the extreme indices
    /// realizing it.
    pub fn kim_livingston(&self, t_star: &Rational, s: &Rational) -> Result<Rational> {
        if !self.breaking_points().iter().any(|bp| bp.t == *t_star) {
            return Err(Error::NotBreakingPoint(format!("t = {t_star}")));
        }
        let corners = self.x_corners();
        let (lo, hi) = minimizing_range(&corners, t_star);
        let base = envelope_value(&corners, t_star);
        let level = |p: &(i64, i64)| {
            let (a, b) = generator_line(p.0, p.1);
            a + &(b * s)
        };
        let top = self.y_corners()[lo..hi]
            .iter()
            .map(level)
            .max()
            .expect("i_minus < i_plus at a breaking point");
        Ok((top - base).mul_int(-2))
    }

    /// `V(s) = −2·min_i max(n_i − s, m_i)`.
    pub fn vk(&self, s: i64) -> Rational {
        let v = self
            .x_corners()
            .iter()
            .map(|&(n, m)| (n - s).max(m))
            .min()
            .expect("non-empty");
        Rational::from(-2 * v)
    }
}

impl fmt::Display for JumpSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

fn envelope_value(corners: &[(i64, i64)], t: &Rational) -> Rational {
    corners
        .iter()
        .map(|&(n, m)| {
            let (a, b) = generator_line(n, m);
            a + &(b * t)
        })
        .min()
        .expect("non-empty")
}

fn minimizing_range(corners: &[(i64, i64)], t: &Rational) -> (usize, usize) {
    let min = envelope_value(corners, t);
    let hits: Vec<usize> = corners
        .iter()
        .enumerate()
        .filter(|(_, &(n, m))| {
            let (a, b) = generator_line(n, m);
            a + &(b * t) == min
        })
        .map(|(i, _)| i)
        .collect();
    (hits[0], *hits.last().expect("minimum is attained"))
}

/// The staircase complex: `x_i` in Maslov grading 0, `y_i` in grading 1,
/// `∂y_i = x_i + x_{i+1}`. The empty sequence gives the unknot.
pub fn staircase_from_jumps(jumps: &JumpSequence) -> KnotComplex {
    let xs = jumps.x_corners();
    let ys = jumps.y_corners();
    let mut generators: Vec<BaseGenerator> = xs
        .iter()
        .enumerate()
        .map(|(i, &(n, m))| BaseGenerator::new(format!("x{i}"), n, m, 0))
        .collect();
    generators.extend(
        ys.iter()
            .enumerate()
            .map(|(i, &(n, m))| BaseGenerator::new(format!("y{i}"), n, m, 1)),
    );
    let k = xs.len();
    let arrows = (0..ys.len())
        .flat_map(|i| {
            [i, i + 1].map(|target| Arrow {
                source: k + i,
                target,
                u_power: 0,
            })
        })
        .collect();
    KnotComplex::new(generators, arrows).expect("staircase ids are unique")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::q;

    fn js(v: &[u64]) -> JumpSequence {
        JumpSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn malformed_jumps() {
        assert!(JumpSequence::new(alloc::vec![1, 2, 1]).is_err());
        assert!(JumpSequence::new(alloc::vec![1, 0]).is_err());
    }

    #[test]
    fn trefoil_corners() {
        let j = js(&[1, 1]);
        assert_eq!(j.x_corners(), [(1, 0), (0, 1)]);
        assert_eq!(j.y_corners(), [(1, 1)]);
        assert!(staircase_from_jumps(&j).is_knot_type());
    }

    #[test]
    fn t43_corners() {
        assert_eq!(js(&[1, 2, 2, 1]).x_corners(), [(3, 0), (1, 1), (0, 3)]);
    }

    #[test]
    fn t43_upsilon_is_flat_in_the_middle() {
        let f = js(&[1, 2, 2, 1]).upsilon();
        for t in [q(2, 3), q(1, 1), q(4, 3)] {
            assert_eq!(f.eval(&t).unwrap(), Rational::from(-2));
        }
    }

    #[test]
    fn t53_at_two_thirds() {
        assert_eq!(js(&[1, 2, 1, 1, 2, 1]).upsilon().eval(&q(2, 3)).unwrap(), q(-8, 3));
    }

    #[test]
    fn staircase_kl_values() {
        assert_eq!(js(&[1, 2, 2, 1]).kim_livingston(&q(2, 3), &q(2, 3)).unwrap(), q(-4, 3));
        let t85 = js(&[1, 4, 1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 4, 1]);
        let bp = t85.breaking_points();
        let at = bp.iter().find(|b| b.t == q(2, 3)).unwrap();
        assert_eq!((at.i_minus, at.i_plus), (Some(1), Some(2)));
        assert_eq!(t85.kim_livingston(&q(2, 3), &q(2, 3)).unwrap(), q(-4, 3));
        assert!(js(&[1, 1]).kim_livingston(&q(1, 2), &q(1, 2)).is_err());
    }

    #[test]
    fn trefoil_vk() {
        assert_eq!(js(&[1, 1]).vk(0), Rational::from(-2));
        assert_eq!(js(&[1, 1]).vk(1), Rational::zero());
    }

    #[test]
    fn empty_sequence_is_the_unknot() {
        let k = staircase_from_jumps(&js(&[]));
        assert_eq!(k.len(), 1);
        assert!(k.is_knot_type());
        assert!(js(&[]).upsilon().is_zero());
    }
}
