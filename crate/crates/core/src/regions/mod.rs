//! South-west regions of the `(A, j)` plane and exact piecewise-linear
//! functions on `[0, 2]`.
//!
//! A region is a finite union of finite intersections of closed half-planes
//! `{αA + βj ≤ c}` with `α, β ≥ 0`. Its diagonal translate `C_t` is
//! `C + (t, t)`. The entering time of a point is the least `t` with the point
//! in `C_t`; for a half-plane that is `(αA + βj − c)/(α + β)`.

mod pl;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

pub use pl::PLFunction;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfPlane {
    alpha: Rational,
    beta: Rational,
    c: Rational,
}

impl HalfPlane {
    pub fn new(alpha: Rational, beta: Rational, c: Rational) -> Result<Self> {
        if alpha.is_negative() || beta.is_negative() {
            return Err(Error::InvalidHalfPlane(alloc::format!(
                "coefficients must be non-negative, got alpha = {alpha}, beta = {beta}"
            )));
        }
        if alpha.is_zero() && beta.is_zero() {
            return Err(Error::InvalidHalfPlane("alpha and beta are both zero".into()));
        }
        Ok(HalfPlane { alpha, beta, c })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    fn level(&self, a: &Rational, j: &Rational) -> Rational {
        &self.alpha * a + &self.beta * j
    }

    pub fn contains(&self, p: (&Rational, &Rational), t: &Rational) -> bool {
        // p ∈ H + (t,t)  ⟺  α(A−t) + β(j−t) ≤ c
        self.level(p.0, p.1) <= &self.c + &(&(&self.alpha + &self.beta) * t)
    }

    pub fn entering_time(&self, p: (&Rational, &Rational)) -> Rational {
        let num = self.level(p.0, p.1) - &self.c;
        num.checked_div(&(&self.alpha + &self.beta))
            .expect("alpha + beta is positive")
    }
}

impl fmt::Display for HalfPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hp({},{},{})", self.alpha, self.beta, self.c)
    }
}

/// Union of atoms; each atom is the intersection of its half-planes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SouthWestRegion {
    atoms: Vec<Vec<HalfPlane>>,
}

impl From<HalfPlane> for SouthWestRegion {
    fn from(h: HalfPlane) -> Self {
        SouthWestRegion { atoms: vec![vec![h]] }
    }
}

impl SouthWestRegion {
    pub fn from_atoms(atoms: Vec<Vec<HalfPlane>>) -> Result<Self> {
        if atoms.is_empty() || atoms.iter().any(Vec::is_empty) {
            return Err(Error::InvalidRegion(
                "a region needs at least one atom and every atom at least one half-plane".into(),
            ));
        }
        Ok(SouthWestRegion { atoms })
    }

    pub fn halfplane(alpha: Rational, beta: Rational, c: Rational) -> Result<Self> {
        HalfPlane::new(alpha, beta, c).map(Self::from)
    }

    /// The classical region `{(t/2)A + (1 − t/2)j ≤ 0}`, `t ∈ [0, 2]`.
    pub fn classical(t: &Rational) -> Result<Self> {
        let alpha = t.div_int(2);
        let beta = Rational::one() - &alpha;
        Self::halfplane(alpha, beta, Rational::zero()).map_err(|_| {
            Error::InvalidRegion(alloc::format!("H({t}) needs t in [0, 2]"))
        })
    }

    /// `{A ≤ s, j ≤ 0}`.
    pub fn quadrant(s: &Rational) -> Self {
        let a = HalfPlane::new(Rational::one(), Rational::zero(), s.clone()).expect("valid");
        let j = HalfPlane::new(Rational::zero(), Rational::one(), Rational::zero()).expect("valid");
        SouthWestRegion { atoms: vec![vec![a, j]] }
    }

    pub fn atoms(&self) -> &[Vec<HalfPlane>] {
        &self.atoms
    }

    pub fn union(&self, other: &SouthWestRegion) -> SouthWestRegion {
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        SouthWestRegion { atoms }
    }

    /// Intersection, distributed back into a union of intersections.
    pub fn intersect(&self, other: &SouthWestRegion) -> SouthWestRegion {
        let mut atoms = Vec::with_capacity(self.atoms.len() * other.atoms.len());
        for a in &self.atoms {
            for b in &other.atoms {
                let mut atom = a.clone();
                atom.extend(b.iter().cloned());
                atoms.push(atom);
            }
        }
        SouthWestRegion { atoms }
    }

    /// `C ∩ {A ≤ x}`.
    pub fn truncate(&self, x: &Rational) -> SouthWestRegion {
        let cut = HalfPlane::new(Rational::one(), Rational::zero(), x.clone()).expect("valid");
        self.intersect(&cut.into())
    }

    /// Membership of `p` in the translate `C_t`.
    pub fn contains(&self, p: (&Rational, &Rational), t: &Rational) -> bool {
        self.atoms
            .iter()
            .any(|atom| atom.iter().all(|h| h.contains(p, t)))
    }

    pub fn entering_time(&self, p: (&Rational, &Rational)) -> Rational {
        self.atoms
            .iter()
            .map(|atom| {
                atom.iter()
                    .map(|h| h.entering_time(p))
                    .max()
                    .expect("atoms are non-empty")
            })
            .min()
            .expect("regions are non-empty")
    }

    /// Entering time of an integer lattice point.
    pub fn entering_time_at(&self, a: i64, j: i64) -> Rational {
        self.entering_time((&Rational::from(a), &Rational::from(j)))
    }

    /// The height function `h_C(x)`: the entering time of `(x, 0)`.
    pub fn height(&self, x: &Rational) -> Rational {
        self.entering_time((x, &Rational::zero()))
    }
}

impl fmt::Display for SouthWestRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, atom) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            for (k, h) in atom.iter().enumerate() {
                if k > 0 {
                    f.write_str(" & ")?;
                }
                write!(f, "{h}")?;
            }
        }
        Ok(())
    }
}
