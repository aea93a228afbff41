use alloc::vec::Vec;

use super::Engine;
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::regions::SouthWestRegion;

impl Engine {
    /// `η_C`: the least `x` with `Υ^{C ∩ {A ≤ x}} = Υ^C`.
    ///
    /// Widening the truncation can only lower `Υ`, so the predicate is
    /// monotone in `x`. It can only switch on at `x = A(g) − Υ^C` for a
    /// degree-0 generator `g`, so a binary search over those values suffices.
    pub fn eta(&self, c: &SouthWestRegion) -> Result<Rational> {
        let gamma = self.upsilon_region(c)?;
        let mut candidates: Vec<Rational> = self
            .degree0()
            .iter()
            .map(|g| Rational::from(g.alexander) - &gamma)
            .collect();
        candidates.sort();
        candidates.dedup();
        let achieved = |x: &Rational| -> Result<bool> {
            Ok(self.upsilon_region(&c.truncate(x))? == gamma)
        };
        let (mut lo, mut hi) = (0, candidates.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            if achieved(&candidates[mid])? {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        candidates
            .get(lo)
            .cloned()
            .ok_or_else(|| Error::Internal("truncation never reaches the untruncated value".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{BaseGenerator, KnotComplex};
    use crate::exactmath::q;

    #[test]
    fn trefoil_eta_for_two_thirds() {
        let k = KnotComplex::with_named_arrows(
            alloc::vec![
                BaseGenerator::new("x0", 1, 0, 0),
                BaseGenerator::new("x1", 0, 1, 0),
                BaseGenerator::new("y0", 1, 1, 1),
            ],
            [("y0", "x0", 0), ("y0", "x1", 0)],
        )
        .unwrap();
        let e = Engine::new(&k).unwrap();
        let c = SouthWestRegion::classical(&q(2, 3)).unwrap();
        // Υ^C = 1/3 at x0 = (1,0), so x = 1 − 1/3
        assert_eq!(e.eta(&c).unwrap(), q(2, 3));
    }
}
