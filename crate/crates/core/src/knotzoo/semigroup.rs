use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;

use super::JumpSequence;
use crate::error::{Error, Result};

/// A numerical semigroup, materialized far enough past its Frobenius number
/// that every scan in this crate stays inside the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroup {
    generators: Vec<u64>,
    /// `members[n]` for `0 ≤ n < members.len()`; everything beyond is a member.
    members: Vec<bool>,
    frobenius: Option<u64>,
    genus: u64,
}

impl Semigroup {
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(Error::InvalidSemigroup("generators must be positive".into()));
        }
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::InvalidSemigroup(format!("generators have gcd {g}, expected 1")));
        }
        let smallest = *gens.iter().min().expect("non-empty") as usize;
        // Once `smallest` consecutive integers are members, all larger ones are.
        let mut members = alloc::vec![true];
        let mut run = 1;
        while run < smallest {
            let n = members.len();
            let m = gens.iter().any(|&x| (x as usize) <= n && members[n - x as usize]);
            members.push(m);
            run = if m { run + 1 } else { 0 };
        }
        Ok(Self::from_table(gens, members))
    }

    fn from_table(gens: &[u64], mut members: Vec<bool>) -> Self {
        let frobenius = members.iter().rposition(|&m| !m).map(|f| f as u64);
        let genus = members.iter().filter(|&&m| !m).count() as u64;
        let bound = frobenius.map_or(0, |f| f + 1) + 2 * genus + 1;
        while (members.len() as u64) <= bound {
            members.push(true);
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        Semigroup {
            generators,
            members,
            frobenius,
            genus,
        }
    }

    /// The semigroup whose members below `2g` are the red runs of the jump
    /// coloring, with every integer from `2g` on a member.
    pub fn from_jumps(jumps: &JumpSequence) -> Result<Self> {
        let mut members = Vec::new();
        for (i, &a) in jumps.as_slice().iter().enumerate() {
            members.extend(core::iter::repeat_n(i % 2 == 0, a as usize));
        }
        if members.is_empty() {
            members.push(true);
        }
        let len = members.len();
        let member = |n: usize| n >= len || members[n];
        for a in 1..len {
            for b in a..len {
                if member(a) && member(b) && !member(a + b) {
                    return Err(Error::InvalidSemigroup(format!(
                        "{a} and {b} are members but {} is not",
                        a + b
                    )));
                }
            }
        }
        // Minimal generators: members that are not sums of two smaller positive members.
        let upper = 2 * len + 2;
        let gens: Vec<u64> = (1..upper)
            .filter(|&n| member(n) && !(1..n).any(|a| member(a) && member(n - a)))
            .map(|n| n as u64)
            .collect();
        Ok(Self::from_table(&gens, members))
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn contains(&self, n: u64) -> bool {
        self.members.get(n as usize).copied().unwrap_or(true)
    }

    /// Largest gap, or `None` for the semigroup of all naturals.
    pub fn frobenius(&self) -> Option<u64> {
        self.frobenius
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn gaps(&self) -> Vec<u64> {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| !m)
            .map(|(n, _)| n as u64)
            .collect()
    }

    /// Whether `n ∈ S ⟺ F − n ∉ S`; true for every plane-curve semigroup.
    pub fn is_symmetric(&self) -> bool {
        match self.frobenius {
            None => true,
            Some(f) => (0..=f).all(|n| self.contains(n) != self.contains(f - n)),
        }
    }

    /// Run lengths of the coloring of `{0, …, 2g − 1}` by membership.
    pub fn jumps(&self) -> Result<JumpSequence> {
        let mut runs: Vec<u64> = Vec::new();
        let mut current = true;
        let mut len = 0;
        for n in 0..2 * self.genus {
            if self.contains(n) == current {
                len += 1;
            } else {
                runs.push(len);
                current = !current;
                len = 1;
            }
        }
        if self.genus > 0 {
            runs.push(len);
        }
        if runs.len() % 2 == 1 {
            return Err(Error::InvalidSemigroup(format!(
                "{} is a member, so the coloring of 0..2g does not end on a gap; the semigroup is not symmetric",
                2 * self.genus - 1
            )));
        }
        JumpSequence::new(runs)
    }

    /// The largest `n` with `S ∩ [0, na] = {0, a, …, na}`.
    pub fn n_of(&self, a: u64) -> Result<u64> {
        if a == 0 || !self.contains(a) {
            return Err(Error::InvalidSemigroup(format!("{a} is not a positive member")));
        }
        let mut n = 0;
        loop {
            let next = (n + 1) * a;
            if (n * a + 1..next).any(|m| self.contains(m)) {
                return Ok(n);
            }
            n += 1;
        }
    }
}
