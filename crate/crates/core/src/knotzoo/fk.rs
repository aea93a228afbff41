use alloc::format;

use num_integer::Integer;

use super::Semigroup;
use crate::error::{Error, Result};
use crate::regions::PLFunction;

/// `Υ` of the torus knot `T(p, q)` from the recursion
/// `Υ_{p,q} = Υ_{p−q,q} + Υ_{q+1,q}` (for `p > q`), with `Υ_{1,n} = 0` and
/// `Υ_{q+1,q}` read off its staircase.
pub fn fk_upsilon(p: u64, q: u64) -> Result<PLFunction> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        return Err(Error::InvalidKnot(format!("T({p},{q}) needs coprime positive parameters")));
    }
    let (mut p, q) = if p > q { (p, q) } else { (q, p) };
    if q == 1 {
        return Ok(PLFunction::zero());
    }
    let step = Semigroup::from_generators(&[q + 1, q])?.jumps()?.upsilon();
    let mut acc = PLFunction::zero();
    while p > q + 1 {
        acc = acc.add(&step);
        p -= q;
        if p < q {
            return Ok(acc.add(&fk_upsilon(p, q)?));
        }
    }
    // p == q + 1 here; p == q is excluded by coprimality
    Ok(acc.add(&step))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::q as r;
    use crate::exactmath::Rational;

    #[test]
    fn trefoil_base_case() {
        let f = fk_upsilon(2, 3).unwrap();
        assert_eq!(f.eval(&Rational::one()).unwrap(), Rational::from(-1));
        assert_eq!(f.singularities(), [Rational::one()]);
    }

    #[test]
    fn eight_five_at_two_thirds() {
        let f = fk_upsilon(8, 5).unwrap();
        assert_eq!(f.eval(&r(2, 3)).unwrap(), Rational::from(-8));
        let split = fk_upsilon(3, 5).unwrap().add(&fk_upsilon(6, 5).unwrap());
        assert_eq!(f, split);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(fk_upsilon(4, 6).is_err());
        assert!(fk_upsilon(0, 3).is_err());
        assert!(fk_upsilon(1, 7).unwrap().is_zero());
    }
}
