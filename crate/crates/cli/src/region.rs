//! Region DSL.
//!
//! ```text
//! region := conj ('|' conj)*
//! conj   := prim ('&' prim)*
//! prim   := H(t) | Q(s) | hp(a,b,c) | trunc(region, x) | '(' region ')'
//! ```
//!
//! `H(t)` is `{(t/2)A + (1 − t/2)j ≤ 0}`, `Q(s)` is `{A ≤ s, j ≤ 0}` and
//! `hp(a,b,c)` is `{aA + bj ≤ c}`. Numbers are integers or `p/q`.

use upsilon_core::{Rational, SouthWestRegion};

use crate::error::{CliError, ParseError, Result};
use crate::scan::Scanner;

pub fn parse_region(text: &str) -> Result<SouthWestRegion, ParseError> {
    let mut s = Scanner::new(text);
    let r = region(&mut s)?;
    if !s.at_end() {
        return s.error("unexpected trailing input");
    }
    Ok(r)
}

pub fn parse_region_for_cli(text: &str) -> Result<SouthWestRegion> {
    parse_region(text).map_err(|e| CliError::parse(text, e))
}

fn region(s: &mut Scanner<'_>) -> Result<SouthWestRegion, ParseError> {
    let mut acc = conj(s)?;
    while s.eat('|') {
        acc = acc.union(&conj(s)?);
    }
    Ok(acc)
}

fn conj(s: &mut Scanner<'_>) -> Result<SouthWestRegion, ParseError> {
    let mut acc = prim(s)?;
    while s.eat('&') {
        acc = acc.intersect(&prim(s)?);
    }
    Ok(acc)
}

fn prim(s: &mut Scanner<'_>) -> Result<SouthWestRegion, ParseError> {
    if s.eat('(') {
        let r = region(s)?;
        s.expect(')')?;
        return Ok(r);
    }
    let Some((start, name)) = s.ident() else {
        return s.error("expected H(t), Q(s), hp(a,b,c), trunc(region, x) or `(`");
    };
    let at = |e: upsilon_core::Error| ParseError::new(start, e.to_string());
    s.expect('(')?;
    let r = match name {
        "H" => {
            let (_, t) = s.rational()?;
            SouthWestRegion::classical(&t).map_err(at)?
        }
        "Q" => SouthWestRegion::quadrant(&s.rational()?.1),
        "hp" => {
            let (_, a) = s.rational()?;
            s.expect(',')?;
            let (_, b) = s.rational()?;
            s.expect(',')?;
            let (_, c) = s.rational()?;
            SouthWestRegion::halfplane(a, b, c).map_err(at)?
        }
        "trunc" => {
            let inner = region(s)?;
            s.expect(',')?;
            let (_, x): (usize, Rational) = s.rational()?;
            inner.truncate(&x)
        }
        other => return Err(ParseError::new(start, format!("unknown region `{other}`"))),
    };
    s.expect(')')?;
    Ok(r)
}
