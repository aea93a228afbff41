use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::KnotComplex;

/// One failed axiom of a knot-type complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `M(target) - 2m != M(source) - 1` for the arrow `(source, target, m)`.
    MaslovDrop { source: String, target: String, u_power: u32 },
    /// The arrow raises the Alexander or the algebraic level.
    Filtration { source: String, target: String, u_power: u32 },
    /// `∂∂(source)` contains `U^u_power · target`.
    DifferentialSquare { source: String, target: String, u_power: i64 },
    /// Homology in degrees 0 and 1 is not `F2` and `0`.
    Homology { h0: usize, h1: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MaslovDrop { source, target, u_power } => write!(
                f,
                "Maslov drop violated: d({source}) contains U^{u_power} {target} but the grading does not drop by one"
            ),
            Violation::Filtration { source, target, u_power } => write!(
                f,
                "filtration violated: d({source}) contains U^{u_power} {target}, which sits above {source}"
            ),
            Violation::DifferentialSquare { source, target, u_power } => {
                write!(f, "d^2 != 0: dd({source}) contains U^{u_power} {target}")
            }
            Violation::Homology { h0, h1 } => {
                write!(f, "wrong homology: dim H_0 = {h0}, dim H_1 = {h1} (expected 1 and 0)")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_knot_type(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("knot-type");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl KnotComplex {
    /// Checks every knot-type axiom and lists the failures.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let id = |i: usize| self.generators[i].id.clone();

        for a in &self.arrows {
            let (x, y) = (&self.generators[a.source], &self.generators[a.target]);
            let m = i64::from(a.u_power);
            if y.maslov - 2 * m != x.maslov - 1 {
                violations.push(Violation::MaslovDrop {
                    source: id(a.source),
                    target: id(a.target),
                    u_power: a.u_power,
                });
            }
            if y.alexander - m > x.alexander || y.algebraic - m > x.algebraic {
                violations.push(Violation::Filtration {
                    source: id(a.source),
                    target: id(a.target),
                    u_power: a.u_power,
                });
            }
        }

        let mut out: Vec<Vec<(usize, i64)>> = alloc::vec![Vec::new(); self.len()];
        for a in &self.arrows {
            out[a.source].push((a.target, i64::from(a.u_power)));
        }
        for x in 0..self.len() {
            let mut parity: BTreeMap<(usize, i64), bool> = BTreeMap::new();
            for &(y, m1) in &out[x] {
                for &(z, m2) in &out[y] {
                    *parity.entry((z, m1 + m2)).or_default() ^= true;
                }
            }
            for ((z, m), odd) in parity {
                if odd {
                    violations.push(Violation::DifferentialSquare {
                        source: id(x),
                        target: id(z),
                        u_power: m,
                    });
                }
            }
        }

        let (h0, h1) = self.low_homology();
        if (h0, h1) != (1, 0) {
            violations.push(Violation::Homology { h0, h1 });
        }
        ValidationReport { violations }
    }

    pub fn is_knot_type(&self) -> bool {
        self.validate().is_knot_type()
    }

    /// Dimensions of `H_0` and `H_1` computed from the finite slices.
    pub fn low_homology(&self) -> (usize, usize) {
        let rank = |d: i64| self.boundary_matrix(d).rank();
        let n0 = self.maslov_slice(0).len();
        let n1 = self.maslov_slice(1).len();
        let (r0, r1, r2) = (rank(0), rank(1), rank(2));
        let h0 = (n0 - r0).saturating_sub(r1);
        let h1 = (n1 - r1).saturating_sub(r2);
        (h0, h1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::BaseGenerator;

    fn trefoil_with_y_maslov(m: i64) -> KnotComplex {
        KnotComplex::with_named_arrows(
            alloc::vec![
                BaseGenerator::new("x0", 1, 0, 0),
                BaseGenerator::new("x1", 0, 1, 0),
                BaseGenerator::new("y0", 1, 1, m),
            ],
            [("y0", "x0", 0), ("y0", "x1", 0)],
        )
        .unwrap()
    }

    #[test]
    fn trefoil_is_knot_type() {
        let r = trefoil_with_y_maslov(1).validate();
        assert!(r.is_knot_type(), "{r}");
        assert_eq!(r.to_string(), "knot-type");
    }

    #[test]
    fn unknot_is_knot_type() {
        assert!(KnotComplex::unknot().is_knot_type());
    }

    #[test]
    fn injected_maslov_defect_is_reported() {
        let r = trefoil_with_y_maslov(2).validate();
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::MaslovDrop { .. })));
        assert!(r.to_string().contains("Maslov drop violated"));
    }

    #[test]
    fn filtration_and_square_defects() {
        let k = KnotComplex::with_named_arrows(
            alloc::vec![
                BaseGenerator::new("a", 0, 0, 1),
                BaseGenerator::new("b", 1, 0, 0),
                BaseGenerator::new("c", 0, 0, -1),
            ],
            [("a", "b", 0), ("b", "c", 0)],
        )
        .unwrap();
        let r = k.validate();
        assert!(r.violations.iter().any(|v| matches!(v, Violation::Filtration { .. })));
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DifferentialSquare { .. })));
    }

    #[test]
    fn empty_complex_has_wrong_homology() {
        let k = KnotComplex::new(Vec::new(), Vec::new()).unwrap();
        assert_eq!(
            k.validate().violations,
            [Violation::Homology { h0: 0, h1: 0 }]
        );
    }
}
