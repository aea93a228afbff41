use alloc::format;

use super::Engine;
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::regions::SouthWestRegion;

impl Engine {
    /// `V_K(s) = −2·Υ^{Q_s}`. This keeps the sign and scale of the region
    /// formulation, so `V_K(0)` of the right-handed trefoil is `−2`.
    pub fn vk(&self, s: i64) -> Result<Rational> {
        let v = self.upsilon_region(&SouthWestRegion::quadrant(&Rational::from(s)))?;
        Ok(v.mul_int(-2))
    }

    /// Least `s ≥ 0` with `V_K(s) = 0`.
    pub fn nu_plus(&self) -> Result<i64> {
        let reach = self
            .degree0()
            .iter()
            .map(|g| g.alexander.abs() + g.algebraic.abs())
            .max()
            .unwrap_or(0);
        for s in 0..=reach + 1 {
            if self.vk(s)?.is_zero() {
                return Ok(s);
            }
        }
        Err(Error::Internal("V_K never vanishes".into()))
    }

    /// The correction term of `q`-surgery in the spin^c structure `m`:
    /// `((q − 2m)² − q)/(4q) + V_K(m)`.
    pub fn d_invariant(&self, q: i64, m: i64) -> Result<Rational> {
        let g = self.degree0().iter().map(|g| g.alexander).max().unwrap_or(0);
        if q < 1 {
            return Err(Error::Precondition(format!("q = {q} must be at least 1")));
        }
        if q < 2 * g - 1 {
            return Err(Error::Precondition(format!(
                "q = {q} is below 2g - 1 = {} (g = {g})",
                2 * g - 1
            )));
        }
        if 2 * m < -q || 2 * m >= q {
            return Err(Error::Precondition(format!(
                "m = {m} is outside -q/2 <= m < q/2 for q = {q}"
            )));
        }
        let lead = Rational::frac((q - 2 * m).pow(2) - q, 4 * q);
        Ok(lead + self.vk(m)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{BaseGenerator, KnotComplex};
    use crate::exactmath::q;

    fn trefoil() -> Engine {
        let k = KnotComplex::with_named_arrows(
            alloc::vec![
                BaseGenerator::new("x0", 1, 0, 0),
                BaseGenerator::new("x1", 0, 1, 0),
                BaseGenerator::new("y0", 1, 1, 1),
            ],
            [("y0", "x0", 0), ("y0", "x1", 0)],
        )
        .unwrap();
        Engine::new(&k).unwrap()
    }

    #[test]
    fn trefoil_v_values() {
        let e = trefoil();
        assert_eq!(e.vk(0).unwrap(), Rational::from(-2));
        assert_eq!(e.vk(1).unwrap(), Rational::zero());
        assert_eq!(e.nu_plus().unwrap(), 1);
    }

    #[test]
    fn unknot_v_values() {
        let e = Engine::new(&KnotComplex::unknot()).unwrap();
        for s in 0..4 {
            assert_eq!(e.vk(s).unwrap(), Rational::zero());
        }
        assert_eq!(e.nu_plus().unwrap(), 0);
        assert_eq!(e.d_invariant(1, 0).unwrap(), Rational::zero());
    }

    #[test]
    fn trefoil_d_invariants() {
        let e = trefoil();
        assert_eq!(e.d_invariant(1, 0).unwrap(), Rational::from(-2));
        assert_eq!(e.d_invariant(3, 0).unwrap(), q(-3, 2));
        assert!(matches!(e.d_invariant(0, 0), Err(Error::Precondition(_))));
        assert!(matches!(e.d_invariant(3, 2), Err(Error::Precondition(_))));
        assert!(matches!(e.d_invariant(3, -2), Err(Error::Precondition(_))));
    }
}
