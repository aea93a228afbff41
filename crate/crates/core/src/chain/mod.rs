//! Knot-type complexes over `F2[U, U^-1]` and their finite Maslov slices.
//!
//! A complex is stored by its base generators and arrows. An arrow
//! `(x, y, m)` records that `∂x` contains `U^m y`. Multiplying by `U` moves a
//! generator one step south-west in the `(A, j)` plane and lowers its Maslov
//! grading by two, so each base generator contributes exactly one lattice
//! generator to every Maslov degree of the right parity. All homology
//! computations therefore happen on finite slices.

mod constructions;
mod validate;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactmath::{BitVec, F2Matrix, Span};

pub use validate::{ValidationReport, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseGenerator {
    pub id: String,
    /// Alexander level `A`.
    pub alexander: i64,
    /// Algebraic level `j`.
    pub algebraic: i64,
    pub maslov: i64,
}

impl BaseGenerator {
    pub fn new(id: impl Into<String>, alexander: i64, algebraic: i64, maslov: i64) -> Self {
        BaseGenerator {
            id: id.into(),
            alexander,
            algebraic,
            maslov,
        }
    }
}

/// `∂(source) ∋ U^u_power · target`, with generators referenced by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub u_power: u32,
}

/// The lattice generator `U^u_power · base`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeGenerator {
    pub base: usize,
    pub u_power: i64,
    pub alexander: i64,
    pub algebraic: i64,
    pub maslov: i64,
}

impl LatticeGenerator {
    pub fn position(&self) -> (i64, i64) {
        (self.alexander, self.algebraic)
    }
}

/// A formal F2 sum of lattice generators sharing one Maslov grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    maslov: i64,
    terms: Vec<LatticeGenerator>,
}

impl Chain {
    pub fn zero(maslov: i64) -> Self {
        Chain {
            maslov,
            terms: Vec::new(),
        }
    }

    /// The chain selecting `slice[i]` for every set bit `i`.
    pub fn from_bits(maslov: i64, slice: &[LatticeGenerator], bits: &BitVec) -> Self {
        let mut terms: Vec<_> = bits.ones().map(|i| slice[i]).collect();
        terms.sort();
        Chain { maslov, terms }
    }

    /// Adds `g` over F2 (so adding a present term removes it).
    pub fn toggle(&mut self, g: LatticeGenerator) -> Result<()> {
        if g.maslov != self.maslov {
            return Err(Error::InvalidComplex(format!(
                "chain of Maslov grading {} cannot contain a generator of grading {}",
                self.maslov, g.maslov
            )));
        }
        match self.terms.binary_search(&g) {
            Ok(i) => {
                self.terms.remove(i);
            }
            Err(i) => self.terms.insert(i, g),
        }
        Ok(())
    }

    pub fn maslov(&self) -> i64 {
        self.maslov
    }

    pub fn terms(&self) -> &[LatticeGenerator] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotComplex {
    generators: Vec<BaseGenerator>,
    arrows: Vec<Arrow>,
}

impl KnotComplex {
    /// Builds a complex from generators and index-based arrows.
    ///
    /// Only structural problems (duplicate ids, dangling indices) are
    /// rejected here; the grading and homology axioms are checked by
    /// [`KnotComplex::validate`].
    pub fn new(generators: Vec<BaseGenerator>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = BTreeMap::new();
        for (i, g) in generators.iter().enumerate() {
            if seen.insert(g.id.as_str(), i).is_some() {
                return Err(Error::InvalidComplex(format!("duplicate generator id `{}`", g.id)));
            }
        }
        for a in &arrows {
            if a.source >= generators.len() || a.target >= generators.len() {
                return Err(Error::InvalidComplex(format!(
                    "arrow {} -> {} refers to a missing generator",
                    a.source, a.target
                )));
            }
        }
        Ok(KnotComplex { generators, arrows })
    }

    /// Builds a complex whose arrows name their endpoints by id.
    pub fn with_named_arrows<S: AsRef<str>>(
        generators: Vec<BaseGenerator>,
        arrows: impl IntoIterator<Item = (S, S, u32)>,
    ) -> Result<Self> {
        let index: BTreeMap<&str, usize> = generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.id.as_str(), i))
            .collect();
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::InvalidComplex(format!("arrow refers to unknown generator `{id}`")))
        };
        let mut resolved = Vec::new();
        for (s, t, m) in arrows {
            resolved.push(Arrow {
                source: lookup(s.as_ref())?,
                target: lookup(t.as_ref())?,
                u_power: m,
            });
        }
        Self::new(generators, resolved)
    }

    /// One generator at the origin in Maslov grading zero.
    pub fn unknot() -> Self {
        KnotComplex {
            generators: alloc::vec![BaseGenerator::new("x", 0, 0, 0)],
            arrows: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[BaseGenerator] {
        &self.generators
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn generator(&self, index: usize) -> &BaseGenerator {
        &self.generators[index]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.id == id)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    fn lattice(&self, base: usize, d: i64) -> Option<LatticeGenerator> {
        let g = &self.generators[base];
        let diff = g.maslov - d;
        if diff.rem_euclid(2) != 0 {
            return None;
        }
        let m = diff / 2;
        Some(LatticeGenerator {
            base,
            u_power: m,
            alexander: g.alexander - m,
            algebraic: g.algebraic - m,
            maslov: d,
        })
    }

    /// The F2 basis of the degree-`d` chain group, in base-generator order.
    pub fn maslov_slice(&self, d: i64) -> Vec<LatticeGenerator> {
        (0..self.generators.len())
            .filter_map(|i| self.lattice(i, d))
            .collect()
    }

    /// Matrix of `∂` from degree `d` to degree `d - 1` in the bases of
    /// [`KnotComplex::maslov_slice`]. Arrows that do not land in degree
    /// `d - 1` (a Maslov-drop violation) are ignored.
    pub fn boundary_matrix(&self, d: i64) -> F2Matrix {
        let cols = self.maslov_slice(d);
        let rows = self.maslov_slice(d - 1);
        let row_of = slice_positions(self.len(), &rows);
        let col_of = slice_positions(self.len(), &cols);
        let mut m = F2Matrix::zeros(rows.len(), cols.len());
        for a in &self.arrows {
            let (Some(c), Some(r)) = (col_of[a.source], row_of[a.target]) else {
                continue;
            };
            // U^{m_x} x lands on U^{m_x + u} y; that must be y's slice representative.
            if cols[c].u_power + i64::from(a.u_power) == rows[r].u_power {
                let v = m.get(r, c);
                m.set(r, c, !v);
            }
        }
        m
    }

    /// A degree-zero cycle representing the generator of `H_0`.
    pub fn representative_cycle(&self) -> Result<Chain> {
        let slice = self.maslov_slice(0);
        let cycles = self.boundary_matrix(0).kernel();
        let mut boundaries = Span::new(slice.len());
        for col in self.boundary_matrix(1).columns() {
            boundaries.insert(col);
        }
        let h0 = cycles.len() - boundaries.rank();
        if h0 != 1 {
            return Err(Error::NotKnotType(format!("H_0 has dimension {h0}, expected 1")));
        }
        let z = cycles
            .into_iter()
            .find(|z| !boundaries.contains(z))
            .ok_or_else(|| Error::Internal("no cycle outside the boundaries".into()))?;
        Ok(Chain::from_bits(0, &slice, &z))
    }

    /// Largest Alexander level among degree-zero lattice generators.
    pub fn max_degree_zero_alexander(&self) -> Option<i64> {
        self.maslov_slice(0).iter().map(|g| g.alexander).max()
    }
}

/// Maps base-generator index to its position in `slice`.
pub(crate) fn slice_positions(n: usize, slice: &[LatticeGenerator]) -> Vec<Option<usize>> {
    let mut pos = alloc::vec![None; n];
    for (i, g) in slice.iter().enumerate() {
        pos[g.base] = Some(i);
    }
    pos
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn trefoil() -> KnotComplex {
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
    fn trefoil_slices() {
        let k = trefoil();
        let s0: Vec<_> = k.maslov_slice(0).iter().map(|g| g.position()).collect();
        assert_eq!(s0, [(1, 0), (0, 1)]);
        let s1: Vec<_> = k.maslov_slice(1).iter().map(|g| g.position()).collect();
        assert_eq!(s1, [(1, 1)]);
        let s2 = k.maslov_slice(2);
        assert_eq!(s2.iter().map(|g| g.position()).collect::<Vec<_>>(), [(2, 1), (1, 2)]);
        assert!(s2.iter().all(|g| g.u_power == -1));
    }

    #[test]
    fn trefoil_boundary() {
        let m = trefoil().boundary_matrix(1);
        assert_eq!((m.rows(), m.cols()), (2, 1));
        assert!(m.get(0, 0) && m.get(1, 0));
        assert!(trefoil().boundary_matrix(0).is_zero());
    }

    #[test]
    fn unknot_boundary_is_empty() {
        let m = KnotComplex::unknot().boundary_matrix(1);
        assert_eq!((m.rows(), m.cols()), (1, 0));
    }

    #[test]
    fn trefoil_representative_is_a_single_x() {
        let z = trefoil().representative_cycle().unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z.maslov(), 0);
        assert!(z.terms()[0].base <= 1);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let gens = alloc::vec![BaseGenerator::new("x", 0, 0, 0), BaseGenerator::new("x", 1, 1, 0)];
        assert!(KnotComplex::new(gens, Vec::new()).is_err());
        let gens = alloc::vec![BaseGenerator::new("x", 0, 0, 0)];
        assert!(KnotComplex::with_named_arrows(gens, [("x", "y", 0)]).is_err());
    }

    #[test]
    fn chain_toggle_cancels() {
        let g = trefoil().maslov_slice(0)[0];
        let mut c = Chain::zero(0);
        c.toggle(g).unwrap();
        c.toggle(g).unwrap();
        assert!(c.is_zero());
        let h = trefoil().maslov_slice(1)[0];
        assert!(c.toggle(h).is_err());
    }
}
