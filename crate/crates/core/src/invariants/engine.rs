use alloc::format;
use alloc::vec::Vec;

use crate::chain::{KnotComplex, LatticeGenerator};
use crate::error::{Error, Result};
use crate::exactmath::{BitVec, F2Matrix, Rational, Span};
use crate::regions::SouthWestRegion;

/// Precomputed linear algebra of one knot-type complex.
///
/// Everything here is independent of the region: the degree-0 and degree-1
/// slices, the boundary subspace `B_0`, a reference cycle `z_ref` generating
/// `H_0`, and the image of every degree-0 generator in `C_0 / B_0`.
///
/// The region question "does some cycle supported on `S` represent the
/// generator of `H_0`?" becomes "is `[z_ref]` in the span of the images of
/// `S` in `C_0 / B_0`?", because `z_ref − Σ_{g∈S} c_g g ∈ B_0` makes the sum a
/// cycle automatically.
#[derive(Clone, Debug)]
pub struct Engine {
    complex: KnotComplex,
    deg0: Vec<LatticeGenerator>,
    deg1: Vec<LatticeGenerator>,
    /// `∂` of each degree-1 generator, in the degree-0 basis.
    d1: Vec<BitVec>,
    z_ref: BitVec,
    /// Reduced form of each basis vector modulo `B_0`.
    quotient: Vec<BitVec>,
    /// Reduced form of `z_ref` modulo `B_0`; never zero.
    target: BitVec,
}

impl Engine {
    /// Validates `k` and precomputes its degree-0 homology data.
    pub fn new(k: &KnotComplex) -> Result<Self> {
        let report = k.validate();
        if !report.is_knot_type() {
            return Err(Error::NotKnotType(format!("{report}")));
        }
        let deg0 = k.maslov_slice(0);
        let deg1 = k.maslov_slice(1);
        let n0 = deg0.len();
        let d1 = k.boundary_matrix(1).columns();
        let mut boundaries = Span::new(n0);
        for c in &d1 {
            boundaries.insert(c.clone());
        }
        let z_ref = k
            .boundary_matrix(0)
            .kernel()
            .into_iter()
            .find(|z| !boundaries.contains(z))
            .ok_or_else(|| Error::Internal("no cycle generates H_0".into()))?;
        let reduce = |mut v: BitVec| {
            boundaries.reduce(&mut v);
            v
        };
        let quotient = (0..n0).map(|i| reduce(BitVec::unit(n0, i))).collect();
        let target = reduce(z_ref.clone());
        Ok(Engine {
            complex: k.clone(),
            deg0,
            deg1,
            d1,
            z_ref,
            quotient,
            target,
        })
    }

    pub fn complex(&self) -> &KnotComplex {
        &self.complex
    }

    pub fn degree0(&self) -> &[LatticeGenerator] {
        &self.deg0
    }

    pub fn degree1(&self) -> &[LatticeGenerator] {
        &self.deg1
    }

    pub(crate) fn d1_columns(&self) -> &[BitVec] {
        &self.d1
    }


    /// A degree-0 cycle generating `H_0`, in the degree-0 basis.
    pub fn reference_cycle(&self) -> &BitVec {
        &self.z_ref
    }




    /// Entering time of every degree-0 generator into `r`.
    pub fn degree0_times(&self, r: &SouthWestRegion) -> Vec<Rational> {
        self.deg0
            .iter()
            .map(|g| r.entering_time_at(g.alexander, g.algebraic))
            .collect()
    }

    pub fn degree1_times(&self, r: &SouthWestRegion) -> Vec<Rational> {
        self.deg1
            .iter()
            .map(|g| r.entering_time_at(g.alexander, g.algebraic))
            .collect()
    }

    /// Whether the generators selected by `mask` carry a cycle representing
    /// the generator of `H_0`.
    pub(crate) fn spans_generator(&self, mask: impl IntoIterator<Item = usize>) -> bool {
        let mut span = Span::new(self.deg0.len());
        for g in mask {
            span.insert(self.quotient[g].clone());
        }
        span.contains(&self.target)
    }

    /// Whether `K(C_t) → K` is onto in `H_0`.
    pub fn h0_surjective(&self, r: &SouthWestRegion, t: &Rational) -> bool {
        let inside = self.deg0.iter().enumerate().filter_map(|(i, g)| {
            let (a, j) = (Rational::from(g.alexander), Rational::from(g.algebraic));
            r.contains((&a, &j), t).then_some(i)
        });
        self.spans_generator(inside)
    }

    /// The first time in the sequence `order` (grouped by equal keys) at
    /// which the prefix spans `[z_ref]`; returns the index of the last
    /// element of the stopping group.
    pub(crate) fn first_spanning<K: PartialEq>(&self, order: &[usize], key: impl Fn(usize) -> K) -> Option<usize> {
        let mut span = Span::new(self.deg0.len());
        let mut residual = self.target.clone();
        let mut i = 0;
        while i < order.len() {
            let k = key(order[i]);
            let mut end = i;
            while end < order.len() && key(order[end]) == k {
                if let Some(idx) = span.insert(self.quotient[order[end]].clone()) {
                    span.update_residual(idx, &mut residual);
                }
                end += 1;
            }
            if residual.is_zero() {
                return Some(end - 1);
            }
            i = end;
        }
        None
    }

    /// `Υ^C`: the least `t` with `K(C_t) → K` onto in `H_0`.
    ///
    /// Surjectivity is monotone in `t` and only changes at entering times of
    /// degree-0 generators, so generators are added in order of entering time
    /// until the prefix first spans the class of `z_ref`.
    pub fn upsilon_region(&self, r: &SouthWestRegion) -> Result<Rational> {
        let times = self.degree0_times(r);
        let mut order: Vec<usize> = (0..times.len()).collect();
        order.sort_by(|&a, &b| times[a].cmp(&times[b]));
        let stop = self
            .first_spanning(&order, |g| times[g].clone())
            .ok_or_else(|| Error::Internal("H_0 generator never reached".into()))?;
        Ok(times[order[stop]].clone())
    }

    /// The subspace `B_0 ∩ span(S)` and a cycle supported on `S` representing
    /// the generator, or `None` when `S` carries no such cycle.
    pub(crate) fn supported_cycles(&self, support: &[usize]) -> Result<Option<(Vec<BitVec>, BitVec)>> {
        let n0 = self.deg0.len();
        let columns: Vec<BitVec> = support.iter().map(|&g| self.quotient[g].clone()).collect();
        let m = F2Matrix::from_columns(n0, &columns)?;
        let Some(x) = m.solve(&self.target)? else {
            return Ok(None);
        };
        let lift = |c: &BitVec| BitVec::from_indices(n0, c.ones().map(|i| support[i]));
        let bounded = m.kernel().iter().map(lift).collect();
        Ok(Some((bounded, lift(&x))))
    }
}
