use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// Continuous piecewise-linear function on `[0, 2]` with rational
/// breakpoints, kept in canonical form (no two adjacent segments share a
/// slope).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PLFunction {
    points: Vec<(Rational, Rational)>,
}

fn two() -> Rational {
    Rational::from(2)
}

fn slope(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    (&b.1 - &a.1)
        .checked_div(&(&b.0 - &a.0))
        .expect("breakpoints are strictly increasing")
}

impl PLFunction {
    /// Builds the interpolating function through `points`, which must start
    /// at `t = 0`, end at `t = 2` and be strictly increasing in `t`.
    pub fn from_breakpoints(points: Vec<(Rational, Rational)>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidPiecewiseLinear(m.into()));
        match (points.first(), points.last()) {
            (Some(first), Some(last)) if first.0.is_zero() && last.0 == two() => {}
            _ => return bad("breakpoints must start at t = 0 and end at t = 2"),
        }
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return bad("breakpoints must be strictly increasing");
        }
        let mut f = PLFunction { points };
        f.canonicalize();
        Ok(f)
    }

    pub fn zero() -> Self {
        PLFunction {
            points: alloc::vec![(Rational::zero(), Rational::zero()), (two(), Rational::zero())],
        }
    }

    /// `t ↦ intercept + slope·t`.
    pub fn linear(intercept: Rational, slope: Rational) -> Self {
        let end = &intercept + &(&slope * &two());
        PLFunction {
            points: alloc::vec![(Rational::zero(), intercept), (two(), end)],
        }
    }

    fn canonicalize(&mut self) {
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(self.points.len());
        for p in self.points.drain(..) {
            while out.len() >= 2 {
                let n = out.len();
                if slope(&out[n - 2], &out[n - 1]) == slope(&out[n - 1], &p) {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        self.points = out;
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        if t.is_negative() || *t > two() {
            return Err(Error::OutOfDomain(alloc::format!("{t}")));
        }
        let i = self.points.partition_point(|p| p.0 <= *t);
        if i == 0 {
            return Ok(self.points[0].1.clone());
        }
        let a = &self.points[i - 1];
        if a.0 == *t || i == self.points.len() {
            return Ok(a.1.clone());
        }
        let b = &self.points[i];
        Ok(&a.1 + &(slope(a, b) * (t - &a.0)))
    }

    /// Pointwise sum; the breakpoint sets are merged.
    pub fn add(&self, other: &PLFunction) -> PLFunction {
        let mut ts: Vec<Rational> = self
            .points
            .iter()
            .chain(&other.points)
            .map(|p| p.0.clone())
            .collect();
        ts.sort();
        ts.dedup();
        let points = ts
            .into_iter()
            .map(|t| {
                let v = self.eval(&t).expect("in domain") + other.eval(&t).expect("in domain");
                (t, v)
            })
            .collect();
        let mut f = PLFunction { points };
        f.canonicalize();
        f
    }

    pub fn neg(&self) -> PLFunction {
        self.scale(&Rational::from(-1))
    }

    pub fn scale(&self, k: &Rational) -> PLFunction {
        if k.is_zero() {
            return PLFunction::zero();
        }
        PLFunction {
            points: self.points.iter().map(|(t, v)| (t.clone(), v * k)).collect(),
        }
    }

    pub fn sub(&self, other: &PLFunction) -> PLFunction {
        self.add(&other.neg())
    }

    /// Interior points where the slope changes.
    pub fn singularities(&self) -> Vec<Rational> {
        self.points[1..self.points.len() - 1]
            .iter()
            .map(|p| p.0.clone())
            .collect()
    }

    /// Slope of each linear piece, left to right.
    pub fn slopes(&self) -> Vec<Rational> {
        self.points.windows(2).map(|w| slope(&w[0], &w[1])).collect()
    }

    /// `(t, right slope − left slope)` at every singularity.
    pub fn derivative_jumps(&self) -> Vec<(Rational, Rational)> {
        let s = self.slopes();
        self.singularities()
            .into_iter()
            .zip(s.windows(2))
            .map(|(t, w)| (t, &w[1] - &w[0]))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.points.iter().all(|p| p.1.is_zero())
    }

    /// `n` equally spaced sample points `(t, f(t))` covering `[0, 2]`.
    pub fn samples(&self, n: usize) -> Vec<(Rational, Rational)> {
        let n = n.max(2);
        (0..n)
            .map(|i| {
                let t = Rational::frac(2 * i as i64, (n - 1) as i64);
                let v = self.eval(&t).expect("in domain");
                (t, v)
            })
            .collect()
    }

    /// Lower envelope on `[0, 2]` of the lines `t ↦ a + b·t` given as `(a, b)`.
    pub fn lower_envelope(lines: &[(Rational, Rational)]) -> Result<PLFunction> {
        if lines.is_empty() {
            return Err(Error::InvalidPiecewiseLinear("envelope of no lines".into()));
        }
        let value = |l: &(Rational, Rational), t: &Rational| &l.0 + &(&l.1 * t);
        let mut t = Rational::zero();
        // Active line at 0+: least value, then least slope.
        let mut cur = lines
            .iter()
            .min_by(|x, y| value(x, &t).cmp(&value(y, &t)).then(x.1.cmp(&y.1)))
            .expect("non-empty");
        let mut points = alloc::vec![(t.clone(), value(cur, &t))];
        loop {
            // Next crossing to the right by a line with a smaller slope.
            let mut next: Option<(Rational, &(Rational, Rational))> = None;
            for l in lines.iter().filter(|l| l.1 < cur.1) {
                let at = (&l.0 - &cur.0)
                    .checked_div(&(&cur.1 - &l.1))
                    .expect("slopes differ");
                if at < t {
                    continue;
                }
                let better = match &next {
                    None => true,
                    Some((nt, nl)) => at < *nt || (at == *nt && l.1 < nl.1),
                };
                if better {
                    next = Some((at, l));
                }
            }
            match next {
                Some((at, l)) if at < two() => {
                    points.push((at.clone(), value(cur, &at)));
                    t = at;
                    cur = l;
                }
                _ => {
                    points.push((two(), value(cur, &two())));
                    break;
                }
            }
        }
        points.dedup_by(|a, b| a.0 == b.0);
        PLFunction::from_breakpoints(points)
    }
}

impl fmt::Debug for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (t, v)) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({t}, {v})")?;
        }
        f.write_str("]")
    }
}
