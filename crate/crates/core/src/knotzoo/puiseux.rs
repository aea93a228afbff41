use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use super::Semigroup;
use crate::error::{Error, Result};

/// Puiseux characteristic sequence `(a; q_1, …, q_n)` of a cuspidal plane
/// curve singularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxData {
    a: u64,
    q: Vec<u64>,
    /// `D_0 = a`, `D_i = gcd(D_{i−1}, q_i)`.
    d: Vec<u64>,
}

impl PuiseuxData {
    pub fn new(a: u64, q: Vec<u64>) -> Result<Self> {
        if a < 2 || q.is_empty() {
            return Err(Error::InvalidPuiseux("need a >= 2 and at least one exponent".into()));
        }
        if q.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPuiseux("exponents must be strictly increasing".into()));
        }
        let mut d = alloc::vec![a];
        for &qi in &q {
            let prev = *d.last().expect("non-empty");
            let next = prev.gcd(&qi);
            if next == prev {
                return Err(Error::InvalidPuiseux(format!(
                    "gcd {prev} already divides {qi}, so {qi} is not characteristic"
                )));
            }
            d.push(next);
        }
        if *d.last().expect("non-empty") != 1 {
            return Err(Error::InvalidPuiseux(format!(
                "gcd of a and all exponents is {}, expected 1",
                d.last().expect("non-empty")
            )));
        }
        Ok(PuiseuxData { a, q, d })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn exponents(&self) -> &[u64] {
        &self.q
    }

    pub fn gcd_chain(&self) -> &[u64] {
        &self.d
    }

    /// `s_i = (a q_1 + D_1(q_2 − q_1) + … + D_{i−1}(q_i − q_{i−1})) / D_{i−1}`.
    pub fn s_values(&self) -> Result<Vec<u64>> {
        let mut out = Vec::with_capacity(self.q.len());
        let mut acc = self.a * self.q[0];
        for i in 0..self.q.len() {
            if i > 0 {
                acc += self.d[i] * (self.q[i] - self.q[i - 1]);
            }
            let den = self.d[i];
            if !acc.is_multiple_of(den) {
                return Err(Error::Internal(format!("s_{} = {acc}/{den} is not an integer", i + 1)));
            }
            out.push(acc / den);
        }
        Ok(out)
    }

    /// The semigroup generated by `a, s_1, …, s_n`.
    pub fn semigroup(&self) -> Result<Semigroup> {
        let mut gens = alloc::vec![self.a];
        gens.extend(self.s_values()?);
        Semigroup::from_generators(&gens)
    }

    /// Cable coefficients `(D_{i−1}/D_i, s_i/D_i)`: the knot is the iterated
    /// cable whose first stage is the torus knot of the first pair.
    pub fn cable_pairs(&self) -> Result<Vec<(u64, u64)>> {
        let s = self.s_values()?;
        Ok((0..s.len())
            .map(|i| (self.d[i] / self.d[i + 1], s[i] / self.d[i + 1]))
            .collect())
    }

    pub fn cable_description(&self) -> Result<String> {
        let pairs = self.cable_pairs()?;
        let mut out = format!("T({},{})", pairs[0].0, pairs[0].1);
        for (p, q) in &pairs[1..] {
            out.push_str(&format!(", then the ({p},{q})-cable"));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_exponent_is_a_torus_knot() {
        let p = PuiseuxData::new(3, alloc::vec![5]).unwrap();
        assert_eq!(p.semigroup().unwrap().generators(), [3, 5]);
        assert_eq!(p.cable_description().unwrap(), "T(3,5)");
        let t = PuiseuxData::new(2, alloc::vec![3]).unwrap();
        assert_eq!(t.semigroup().unwrap().generators(), [2, 3]);
    }

    #[test]
    fn two_exponents() {
        let p = PuiseuxData::new(4, alloc::vec![6, 7]).unwrap();
        assert_eq!(p.gcd_chain(), [4, 2, 1]);
        assert_eq!(p.s_values().unwrap(), [6, 13]);
        assert_eq!(p.semigroup().unwrap().generators(), [4, 6, 13]);
        assert_eq!(p.cable_pairs().unwrap(), [(2, 3), (2, 13)]);
    }

    #[test]
    fn invalid_sequences() {
        assert!(PuiseuxData::new(4, alloc::vec![6]).is_err());
        assert!(PuiseuxData::new(4, alloc::vec![8, 9]).is_err());
        assert!(PuiseuxData::new(4, alloc::vec![7, 6]).is_err());
        assert!(PuiseuxData::new(1, alloc::vec![3]).is_err());
    }
}
