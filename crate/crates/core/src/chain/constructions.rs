use alloc::format;
use alloc::vec::Vec;

use super::{Arrow, BaseGenerator, KnotComplex};

impl KnotComplex {
    /// Tensor product; generator `(a, b)` sits at the sum of the positions
    /// and gradings, and the differential obeys the Leibniz rule (no signs
    /// over F2).
    pub fn tensor(&self, other: &KnotComplex) -> KnotComplex {
        let n2 = other.len();
        let idx = |i: usize, k: usize| i * n2 + k;
        let mut generators = Vec::with_capacity(self.len() * n2);
        for a in &self.generators {
            for b in &other.generators {
                generators.push(BaseGenerator::new(
                    format!("({},{})", a.id, b.id),
                    a.alexander + b.alexander,
                    a.algebraic + b.algebraic,
                    a.maslov + b.maslov,
                ));
            }
        }
        let mut arrows = Vec::new();
        for ar in &self.arrows {
            for k in 0..n2 {
                arrows.push(Arrow {
                    source: idx(ar.source, k),
                    target: idx(ar.target, k),
                    u_power: ar.u_power,
                });
            }
        }
        for i in 0..self.len() {
            for ar in &other.arrows {
                arrows.push(Arrow {
                    source: idx(i, ar.source),
                    target: idx(i, ar.target),
                    u_power: ar.u_power,
                });
            }
        }
        KnotComplex { generators, arrows }
    }

    /// The dual complex: gradings negated and every arrow reversed.
    pub fn mirror(&self) -> KnotComplex {
        let generators = self
            .generators
            .iter()
            .map(|g| BaseGenerator::new(g.id.clone(), -g.alexander, -g.algebraic, -g.maslov))
            .collect();
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                source: a.target,
                target: a.source,
                u_power: a.u_power,
            })
            .collect();
        KnotComplex { generators, arrows }
    }

    /// Direct sum with an acyclic square whose top corner `a` sits at
    /// `corner` in grading `maslov`: `∂a = b + c`, `∂b = ∂c = d`.
    pub fn add_box(&self, corner: (i64, i64), maslov: i64) -> KnotComplex {
        let (x, y) = corner;
        let mut n = self.len();
        let tag = loop {
            let tag = format!("box{n}");
            if !self.generators.iter().any(|g| g.id.starts_with(&tag)) {
                break tag;
            }
            n += 1;
        };
        let base = self.len();
        let mut generators = self.generators.clone();
        generators.extend([
            BaseGenerator::new(format!("{tag}.a"), x, y, maslov),
            BaseGenerator::new(format!("{tag}.b"), x - 1, y, maslov - 1),
            BaseGenerator::new(format!("{tag}.c"), x, y - 1, maslov - 1),
            BaseGenerator::new(format!("{tag}.d"), x - 1, y - 1, maslov - 2),
        ]);
        let mut arrows = self.arrows.clone();
        for (s, t) in [(0, 1), (0, 2), (1, 3), (2, 3)] {
            arrows.push(Arrow {
                source: base + s,
                target: base + t,
                u_power: 0,
            });
        }
        KnotComplex { generators, arrows }
    }
}

#[cfg(test)]
mod tests {
    use crate::chain::{BaseGenerator, KnotComplex};

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
    fn box_alone_is_acyclic() {
        let empty = KnotComplex::new(alloc::vec![], alloc::vec![]).unwrap();
        let b = empty.add_box((0, 0), 0);
        assert_eq!(b.len(), 4);
        for d in -3..=3 {
            let in_rank = b.boundary_matrix(d + 1).rank();
            let out_rank = b.boundary_matrix(d).rank();
            assert_eq!(b.maslov_slice(d).len(), in_rank + out_rank, "degree {d}");
        }
    }

    #[test]
    fn unknot_plus_box_is_knot_type() {
        let k = KnotComplex::unknot().add_box((0, 0), 0);
        assert!(k.is_knot_type(), "{}", k.validate());
        let k2 = k.add_box((3, -1), 1);
        assert!(k2.is_knot_type());
        assert_eq!(k2.len(), 9);
    }

    #[test]
    fn mirror_is_an_involution() {
        let k = trefoil();
        assert!(k.mirror().is_knot_type());
        assert_eq!(k.mirror().mirror(), k);
    }

    #[test]
    fn tensor_of_trefoils() {
        let k = trefoil().tensor(&trefoil());
        assert_eq!(k.len(), 9);
        assert!(k.is_knot_type(), "{}", k.validate());
        let u = trefoil().tensor(&KnotComplex::unknot());
        assert_eq!(u.len(), 3);
        assert!(u.is_knot_type());
    }
}
