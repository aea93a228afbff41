use alloc::format;
use alloc::vec::Vec;

use super::{Engine, SecondaryValue};
use crate::error::{Error, Result};
use crate::exactmath::{BitVec, Rational, Span};
use crate::regions::SouthWestRegion;

impl Engine {
    /// `Υ_{C±, C}`: the least `t` such that some exceptional cycle of `C⁺`
    /// is homologous to some exceptional cycle of `C⁻` inside
    /// `K(C⁺_{γ⁺}) + K(C⁻_{γ⁻}) + K(C_t)`.
    ///
    /// With `V± = B_0 ∩ span(S±)`, the exceptional cycles form the cosets
    /// `z±₀ + V±`. They meet exactly when `z⁺₀ + z⁻₀ ∈ V⁺ + V⁻`; otherwise
    /// boundaries of degree-1 generators are added in order of entering time
    /// into `C` until the sum becomes reachable. Degree-1 generators inside
    /// `C±_{γ±}` need no special treatment: their boundaries already lie in
    /// `V±`.
    pub fn secondary(
        &self,
        cplus: &SouthWestRegion,
        cminus: &SouthWestRegion,
        c: &SouthWestRegion,
    ) -> Result<SecondaryValue> {
        let n0 = self.degree0().len();
        let mut span = Span::new(n0);
        let mut w = BitVec::zeros(n0);
        for region in [cplus, cminus] {
            let gamma = self.upsilon_region(region)?;
            let times = self.degree0_times(region);
            let support: Vec<usize> = (0..n0).filter(|&g| times[g] <= gamma).collect();
            let (bounded, z0) = self.supported_cycles(&support)?.ok_or_else(|| {
                Error::Internal(format!("no exceptional cycle at t = {gamma}"))
            })?;
            for b in bounded {
                span.insert(b);
            }
            w.xor_assign(&z0);
        }
        let mut residual = w;
        span.reduce(&mut residual);
        if residual.is_zero() {
            return Ok(SecondaryValue::NoObstruction);
        }
        let times = self.degree1_times(c);
        let mut order: Vec<usize> = (0..times.len()).collect();
        order.sort_by(|&a, &b| times[a].cmp(&times[b]));
        for &g in &order {
            if let Some(idx) = span.insert(self.d1_columns()[g].clone()) {
                span.update_residual(idx, &mut residual);
            }
            if residual.is_zero() {
                return Ok(SecondaryValue::Value(times[g].clone()));
            }
        }
        Err(Error::Internal("exceptional cycles are never homologous".into()))
    }

    /// The Kim–Livingston invariant `Υ^{(2)}_{t*}(s)`:
    /// `−2·(Υ_{H_{t*±δ}, H_s} − Υ^{H_{t*}})` for small `δ > 0`.
    ///
    /// `t*` must be a breaking point, i.e. `Υ_K` must bend upwards there.
    pub fn kim_livingston(&self, t_star: &Rational, s: &Rational) -> Result<SecondaryValue> {
        let f = self.upsilon_function()?;
        let is_breaking = f
            .derivative_jumps()
            .iter()
            .any(|(t, jump)| t == t_star && jump.is_positive());
        if !is_breaking {
            return Err(Error::NotBreakingPoint(format!("t = {t_star}")));
        }
        self.perturbed_secondary(t_star, s)
    }

    /// The same normalized quantity as [`Engine::kim_livingston`] without the
    /// breaking-point check; away from breaking points the exceptional
    /// cycle sets typically meet and the result is `NoObstruction`.
    ///
    /// `δ` is half the distance from `t*` to the nearest other place where two
    /// generator lines cross; on that window the exceptional cycle sets do
    /// not move. The value is recomputed with `δ/2` as a consistency check.
    pub fn perturbed_secondary(&self, t_star: &Rational, s: &Rational) -> Result<SecondaryValue> {
        if !t_star.is_positive() || *t_star >= Rational::from(2) {
            return Err(Error::Precondition(format!("t* = {t_star} must lie strictly inside (0, 2)")));
        }
        if s.is_negative() || *s > Rational::from(2) {
            return Err(Error::OutOfDomain(format!("{s}")));
        }
        let gap = self
            .candidate_breakpoints()
            .into_iter()
            .filter(|c| c != t_star)
            .map(|c| (&c - t_star).abs())
            .min()
            .expect("0 and 2 are candidates");
        let delta = gap.div_int(2);
        let value = self.kl_with_delta(t_star, s, &delta)?;
        let check = self.kl_with_delta(t_star, s, &delta.div_int(2))?;
        if value != check {
            return Err(Error::Internal(format!(
                "secondary value moved from {value} to {check} when halving delta"
            )));
        }
        Ok(value)
    }

    fn kl_with_delta(&self, t_star: &Rational, s: &Rational, delta: &Rational) -> Result<SecondaryValue> {
        let h = SouthWestRegion::classical;
        let cplus = h(&(t_star + delta))?;
        let cminus = h(&(t_star - delta))?;
        let c = h(s)?;
        let base = self.upsilon_region(&h(t_star)?)?;
        Ok(match self.secondary(&cplus, &cminus, &c)? {
            SecondaryValue::Value(v) => SecondaryValue::Value((v - base).mul_int(-2)),
            SecondaryValue::NoObstruction => SecondaryValue::NoObstruction,
        })
    }
}
