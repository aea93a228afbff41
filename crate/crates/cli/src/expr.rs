//! Knot expressions.
//!
//! ```text
//! expr := term ('#' term)*
//! term := '-' term | atom
//! atom := T(p,q) | P(-2,3,q) | alg(a; q1, …) | thin(n) | stair(a1, …)
//!       | file(path) | '(' expr ')'
//! ```
//!
//! `#` is connected sum (tensor product of complexes) and `-` is the mirror.

use std::fmt;
use std::path::Path;

use num_integer::Integer;
use upsilon_core::knotzoo::{algebraic_jumps, pretzel_jumps, staircase_from_jumps, thin_model, torus_jumps};
use upsilon_core::{JumpSequence, KnotComplex, PuiseuxData};

use crate::complex_file;
use crate::error::{CliError, ParseError, Result};
use crate::scan::{list, Scanner};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotExpr {
    Torus(u64, u64),
    Pretzel(u64),
    Algebraic { a: u64, exponents: Vec<u64> },
    Thin(i64),
    Stair(Vec<u64>),
    FromFile(String),
    Mirror(Box<KnotExpr>),
    Sum(Box<KnotExpr>, Box<KnotExpr>),
}

pub fn parse_knot_expr(text: &str) -> Result<KnotExpr, ParseError> {
    let mut s = Scanner::new(text);
    let e = expr(&mut s)?;
    if !s.at_end() {
        return s.error("unexpected trailing input");
    }
    Ok(e)
}

fn expr(s: &mut Scanner<'_>) -> Result<KnotExpr, ParseError> {
    let mut acc = term(s)?;
    while s.eat('#') {
        acc = KnotExpr::Sum(Box::new(acc), Box::new(term(s)?));
    }
    Ok(acc)
}

fn term(s: &mut Scanner<'_>) -> Result<KnotExpr, ParseError> {
    if s.eat('-') {
        return Ok(KnotExpr::Mirror(Box::new(term(s)?)));
    }
    atom(s)
}

fn atom(s: &mut Scanner<'_>) -> Result<KnotExpr, ParseError> {
    if s.eat('(') {
        let e = expr(s)?;
        s.expect(')')?;
        return Ok(e);
    }
    let Some((start, name)) = s.ident() else {
        return s.error("expected a knot: T(p,q), P(-2,3,q), alg(a;q,...), thin(n), stair(...), file(path) or `(`");
    };
    s.expect('(')?;
    let e = match name {
        "T" => {
            let (_, p) = s.unsigned()?;
            s.expect(',')?;
            let (_, q) = s.unsigned()?;
            if p < 2 || q < 2 || p.gcd(&q) != 1 {
                return Err(ParseError::new(start, format!("T({p},{q}) needs coprime parameters >= 2")));
            }
            KnotExpr::Torus(p, q)
        }
        "P" => {
            let (pos, first) = s.signed()?;
            s.expect(',')?;
            let (_, second) = s.signed()?;
            if (first, second) != (-2, 3) {
                return Err(ParseError::new(pos, "only the family P(-2,3,q) is supported"));
            }
            s.expect(',')?;
            let (_, q) = s.unsigned()?;
            if q < 7 || q % 2 == 0 {
                return Err(ParseError::new(start, format!("P(-2,3,{q}) needs odd q >= 7")));
            }
            KnotExpr::Pretzel(q)
        }
        "alg" => {
            let (_, a) = s.unsigned()?;
            s.expect(';')?;
            let exponents = list(s, |s| s.unsigned().map(|(_, v)| v))?;
            PuiseuxData::new(a, exponents.clone()).map_err(|e| ParseError::new(start, e.to_string()))?;
            KnotExpr::Algebraic { a, exponents }
        }
        "thin" => KnotExpr::Thin(s.signed()?.1),
        "stair" => {
            let jumps = list(s, |s| s.unsigned().map(|(_, v)| v))?;
            JumpSequence::new(jumps.clone()).map_err(|e| ParseError::new(start, e.to_string()))?;
            KnotExpr::Stair(jumps)
        }
        "file" => {
            let (pos, path) = s.raw_until_paren()?;
            if path.is_empty() {
                return Err(ParseError::new(pos, "empty path"));
            }
            KnotExpr::FromFile(path.to_string())
        }
        other => return Err(ParseError::new(start, format!("unknown knot `{other}`"))),
    };
    s.expect(')')?;
    Ok(e)
}

fn join(items: &[u64]) -> String {
    items.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Torus(p, q) => write!(f, "T({p},{q})"),
            KnotExpr::Pretzel(q) => write!(f, "P(-2,3,{q})"),
            KnotExpr::Algebraic { a, exponents } => write!(f, "alg({a};{})", join(exponents)),
            KnotExpr::Thin(n) => write!(f, "thin({n})"),
            KnotExpr::Stair(j) => write!(f, "stair({})", join(j)),
            KnotExpr::FromFile(p) => write!(f, "file({p})"),
            KnotExpr::Mirror(inner) => match **inner {
                KnotExpr::Sum(..) => write!(f, "-({inner})"),
                _ => write!(f, "-{inner}"),
            },
            KnotExpr::Sum(a, b) => match **b {
                KnotExpr::Sum(..) => write!(f, "{a} # ({b})"),
                _ => write!(f, "{a} # {b}"),
            },
        }
    }
}

impl KnotExpr {
    /// The staircase of an L-space atom with non-negative `τ`.
    pub fn staircase_jumps(&self) -> Option<JumpSequence> {
        match self {
            KnotExpr::Torus(p, q) => torus_jumps(*p, *q).ok(),
            KnotExpr::Pretzel(q) => pretzel_jumps(*q).ok(),
            KnotExpr::Algebraic { a, exponents } => {
                algebraic_jumps(&PuiseuxData::new(*a, exponents.clone()).ok()?).ok()
            }
            KnotExpr::Thin(n) if *n >= 0 => JumpSequence::new(vec![1; 2 * *n as usize]).ok(),
            KnotExpr::Stair(j) => JumpSequence::new(j.clone()).ok(),
            _ => None,
        }
    }

    /// Flattens sums and pushes mirrors down to the atoms: `(sign, atom)`
    /// with `true` for summands that appear unmirrored. `thin(n)` with
    /// `n < 0` counts as the mirror of `thin(−n)`.
    pub fn summands(&self) -> Vec<(bool, KnotExpr)> {
        let mut out = Vec::new();
        self.collect_summands(true, &mut out);
        out
    }

    fn collect_summands(&self, positive: bool, out: &mut Vec<(bool, KnotExpr)>) {
        match self {
            KnotExpr::Sum(a, b) => {
                a.collect_summands(positive, out);
                b.collect_summands(positive, out);
            }
            KnotExpr::Mirror(inner) => inner.collect_summands(!positive, out),
            KnotExpr::Thin(n) if *n < 0 => out.push((!positive, KnotExpr::Thin(-n))),
            atom => out.push((positive, atom.clone())),
        }
    }

    /// Builds the complex; `file(...)` paths are resolved against `base`.
    pub fn build(&self, base: &Path) -> Result<KnotComplex> {
        Ok(match self {
            KnotExpr::Torus(p, q) => staircase_from_jumps(&torus_jumps(*p, *q)?),
            KnotExpr::Pretzel(q) => staircase_from_jumps(&pretzel_jumps(*q)?),
            KnotExpr::Algebraic { a, exponents } => {
                staircase_from_jumps(&algebraic_jumps(&PuiseuxData::new(*a, exponents.clone())?)?)
            }
            KnotExpr::Thin(n) => thin_model(*n),
            KnotExpr::Stair(j) => staircase_from_jumps(&JumpSequence::new(j.clone())?),
            KnotExpr::FromFile(p) => complex_file::read_complex(&base.join(p))?,
            KnotExpr::Mirror(inner) => inner.build(base)?.mirror(),
            KnotExpr::Sum(a, b) => a.build(base)?.tensor(&b.build(base)?),
        })
    }
}

/// Parses and reports errors as [`CliError::Parse`].
pub fn parse_for_cli(text: &str) -> Result<KnotExpr> {
    parse_knot_expr(text).map_err(|e| CliError::parse(text, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: u64, q: u64) -> Box<KnotExpr> {
        Box::new(KnotExpr::Torus(p, q))
    }

    #[test]
    fn connected_sum_is_left_associative() {
        let e = parse_knot_expr("T(8,5) # -T(6,5) # -T(4,3)").unwrap();
        let expected = KnotExpr::Sum(
            Box::new(KnotExpr::Sum(t(8, 5), Box::new(KnotExpr::Mirror(t(6, 5))))),
            Box::new(KnotExpr::Mirror(t(4, 3))),
        );
        assert_eq!(e, expected);
        assert_eq!(e.to_string(), "T(8,5) # -T(6,5) # -T(4,3)");
    }

    #[test]
    fn atoms() {
        assert_eq!(parse_knot_expr("thin(-2)").unwrap(), KnotExpr::Thin(-2));
        assert_eq!(parse_knot_expr(" P( -2 , 3 , 9 ) ").unwrap(), KnotExpr::Pretzel(9));
        assert_eq!(
            parse_knot_expr("alg(4;6,7)").unwrap(),
            KnotExpr::Algebraic { a: 4, exponents: vec![6, 7] }
        );
        assert_eq!(parse_knot_expr("stair()").unwrap(), KnotExpr::Stair(vec![]));
        assert_eq!(parse_knot_expr("file(dir/k.json)").unwrap(), KnotExpr::FromFile("dir/k.json".into()));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_knot_expr("T(3,2) # T(4,6)").unwrap_err();
        assert_eq!(e.pos, 9);
        assert!(e.message.contains("coprime"));
        assert_eq!(parse_knot_expr("T(3,2) #").unwrap_err().pos, 8);
        assert_eq!(parse_knot_expr("X(1)").unwrap_err().pos, 0);
        assert!(parse_knot_expr("P(-2,3,8)").is_err());
        assert!(parse_knot_expr("P(-2,5,9)").is_err());
        assert!(parse_knot_expr("stair(1,2,1)").is_err());
        assert!(parse_knot_expr("alg(4;8,9)").is_err());
        assert!(parse_knot_expr("(T(3,2)").is_err());
        assert!(parse_knot_expr("T(3,2))").is_err());
    }

    #[test]
    fn summands_push_mirrors_down() {
        let e = parse_knot_expr("-(T(3,2) # -T(5,2)) # thin(-3)").unwrap();
        let signs: Vec<(bool, String)> = e.summands().into_iter().map(|(s, a)| (s, a.to_string())).collect();
        assert_eq!(
            signs,
            [(false, "T(3,2)".into()), (true, "T(5,2)".into()), (false, "thin(3)".into())]
        );
    }
}
