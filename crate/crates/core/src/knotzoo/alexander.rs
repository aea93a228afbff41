use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::{JumpSequence, Semigroup};
use crate::error::{Error, Result};

/// Laurent polynomial in `u = t^{1/2}` with integer coefficients.
///
/// Keeping half-integer powers of `t` lets two-component link polynomials
/// such as `Δ_{T(2,2n)}` take part in skein relations directly.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlexanderPolynomial {
    /// Exponent of `u` to non-zero coefficient.
    coeffs: BTreeMap<i64, i64>,
}

impl AlexanderPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(u_exp: i64, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(u_exp, c);
        p
    }

    /// From `(exponent of t, coefficient)` pairs.
    pub fn from_t_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(2 * e, c);
        }
        p
    }

    fn add_term(&mut self, u_exp: i64, c: i64) {
        let e = self.coeffs.entry(u_exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&u_exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (&e, &c) in &other.coeffs {
            p.add_term(e, c);
        }
        p
    }

    pub fn neg(&self) -> Self {
        AlexanderPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &other.coeffs {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Non-zero terms as `(exponent of u, coefficient)`, increasing.
    pub fn u_terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Invariant under `t ↦ t⁻¹`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&e, &c)| self.coeffs.get(&-e) == Some(&c))
    }

    /// Shifted so the exponents are centred at zero.
    pub fn symmetrized(&self) -> Self {
        let (Some(&lo), Some(&hi)) = (self.coeffs.keys().next(), self.coeffs.keys().next_back()) else {
            return Self::zero();
        };
        let shift = -(lo + hi) / 2;
        AlexanderPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + shift, c)).collect(),
        }
    }

    /// Terms `(exponent of t, coefficient)` after shifting the lowest power
    /// to `t^0`; fails if some exponents differ by a half-integer.
    pub fn normalized_t_terms(&self) -> Result<Vec<(i64, i64)>> {
        let Some(&lo) = self.coeffs.keys().next() else {
            return Ok(Vec::new());
        };
        self.coeffs
            .iter()
            .map(|(&e, &c)| {
                let d = e - lo;
                if d % 2 != 0 {
                    Err(Error::InvalidKnot(format!("{self} has half-integer exponents")))
                } else {
                    Ok((d / 2, c))
                }
            })
            .collect()
    }

    /// Reads an L-space staircase off `1 − t^{α_1} + t^{α_2} − … + t^{α_2k}`:
    /// the jumps are `α_i − α_{i−1}`.
    pub fn l_space_jumps(&self) -> Result<JumpSequence> {
        let terms = self.normalized_t_terms()?;
        for (i, &(_, c)) in terms.iter().enumerate() {
            let expected = if i % 2 == 0 { 1 } else { -1 };
            if c != expected {
                return Err(Error::InvalidKnot(format!(
                    "{self} does not have alternating +1/-1 coefficients starting with +1"
                )));
            }
        }
        JumpSequence::new(terms.windows(2).map(|w| (w[1].0 - w[0].0) as u64).collect())
    }
}

impl fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let integral = self.coeffs.keys().all(|e| e % 2 == 0);
        for (i, (&e, &c)) in self.coeffs.iter().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(sign)?;
            if i > 0 {
                f.write_str(" ")?;
            }
            let a = c.abs();
            let power = if integral {
                format!("{}", e / 2)
            } else {
                format!("{e}/2")
            };
            let var = if power == "1" { "t".into() } else { format!("t^{power}") };
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => f.write_str(&var)?,
                _ => write!(f, "{a}{var}")?,
            }
        }
        Ok(())
    }
}

/// `Σ_{s ∈ S} (t^s − t^{s+1})`, which telescopes to a polynomial of degree `2g`.
pub fn alexander_from_semigroup(s: &Semigroup) -> AlexanderPolynomial {
    let top = s.frobenius().map_or(0, |f| f + 1);
    AlexanderPolynomial::from_t_terms((0..=top).filter_map(|n| {
        let here = i64::from(s.contains(n));
        let before = if n == 0 { 0 } else { i64::from(s.contains(n - 1)) };
        (here != before).then_some((n as i64, here - before))
    }))
}

/// `Δ` of the torus link `T(2, n)` from `Δ_n = Δ_{n−2} + (u − u⁻¹)Δ_{n−1}`,
/// `Δ_0 = 0`, `Δ_1 = 1`.
pub fn alexander_torus_2(n: u64) -> AlexanderPolynomial {
    let step = AlexanderPolynomial::monomial(1, 1).add(&AlexanderPolynomial::monomial(-1, -1));
    let (mut prev, mut cur) = (AlexanderPolynomial::zero(), AlexanderPolynomial::monomial(0, 1));
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = prev.add(&step.mul(&cur));
        prev = cur;
        cur = next;
    }
    cur
}

/// `Δ` of the pretzel knot `P(−2, 3, q)` via the skein relation at a
/// negative crossing: `(t − 1 + t⁻¹)Δ_{T(2,q)} + (t^{1/2} − t^{−1/2})Δ_{T(2,q+3)}`,
/// signed so that `Δ(1) = 1`.
pub fn alexander_pretzel(q: u64) -> Result<AlexanderPolynomial> {
    if q < 7 || q.is_multiple_of(2) {
        return Err(Error::InvalidKnot(format!("P(-2,3,q) needs odd q >= 7, got {q}")));
    }
    let first = AlexanderPolynomial::from_t_terms([(1, 1), (0, -1), (-1, 1)]).mul(&alexander_torus_2(q));
    let step = AlexanderPolynomial::monomial(1, 1).add(&AlexanderPolynomial::monomial(-1, -1));
    let p = first.add(&step.mul(&alexander_torus_2(q + 3))).symmetrized();
    Ok(if p.eval_at_one() < 0 { p.neg() } else { p })
}
