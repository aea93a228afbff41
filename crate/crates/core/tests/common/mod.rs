#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use upsilon_core::exactmath::q;
use upsilon_core::knotzoo::{staircase_from_jumps, thin_model, torus_knot};
use upsilon_core::{JumpSequence, KnotComplex, Rational, SouthWestRegion};

pub fn stair(jumps: &[u64]) -> KnotComplex {
    staircase_from_jumps(&JumpSequence::new(jumps.to_vec()).unwrap())
}

pub fn torus(p: u64, q: u64) -> KnotComplex {
    torus_knot(p, q).unwrap()
}

pub fn h(t: Rational) -> SouthWestRegion {
    SouthWestRegion::classical(&t).unwrap()
}

/// Small complexes, each with at most 12 base generators.
pub fn small_zoo() -> Vec<(String, KnotComplex)> {
    let mut zoo = vec![
        ("unknot".to_string(), KnotComplex::unknot()),
        ("T(3,2)".into(), torus(3, 2)),
        ("T(5,2)".into(), torus(5, 2)),
        ("T(7,2)".into(), torus(7, 2)),
        ("T(4,3)".into(), torus(4, 3)),
        ("T(5,3)".into(), torus(5, 3)),
        ("-T(4,3)".into(), torus(4, 3).mirror()),
        ("-T(5,3)".into(), torus(5, 3).mirror()),
        ("stair(1,3,3,1)".into(), stair(&[1, 3, 3, 1])),
        ("stair(2,1,1,2)".into(), stair(&[2, 1, 1, 2])),
        ("T(3,2)#T(3,2)".into(), torus(3, 2).tensor(&torus(3, 2))),
        ("T(3,2)#-T(3,2)".into(), torus(3, 2).tensor(&torus(3, 2).mirror())),
        ("T(3,2)+box".into(), torus(3, 2).add_box((1, 0), 1)),
        ("unknot+2box".into(), KnotComplex::unknot().add_box((0, 0), 0).add_box((2, -1), 1)),
    ];
    for tau in [-3, -2, -1, 2, 3] {
        zoo.push((format!("thin({tau})"), thin_model(tau)));
    }
    for (_, k) in &zoo {
        assert!(k.len() <= 12);
    }
    zoo
}

pub fn rational(rng: &mut StdRng, lo: i64, hi: i64, den: i64) -> Rational {
    q(rng.gen_range(lo * den..=hi * den), den)
}

/// A random half-plane region with small rational coefficients.
pub fn random_halfplane(rng: &mut StdRng) -> SouthWestRegion {
    loop {
        let a = q(rng.gen_range(0..=4), rng.gen_range(1..=3));
        let b = q(rng.gen_range(0..=4), rng.gen_range(1..=3));
        let c = rational(rng, -3, 3, 2);
        if let Ok(r) = SouthWestRegion::halfplane(a, b, c) {
            return r;
        }
    }
}

/// A random union of intersections of up to two half-planes.
pub fn random_region(rng: &mut StdRng) -> SouthWestRegion {
    let mut r = random_halfplane(rng);
    if rng.gen_bool(0.5) {
        r = r.intersect(&random_halfplane(rng));
    }
    if rng.gen_bool(0.5) {
        let mut other = random_halfplane(rng);
        if rng.gen_bool(0.5) {
            other = other.intersect(&random_halfplane(rng));
        }
        r = r.union(&other);
    }
    r
}

/// Inserts an acyclic box at a random corner and grading.
pub fn random_box(rng: &mut StdRng, k: &KnotComplex) -> KnotComplex {
    let corner = (rng.gen_range(-4..=4), rng.gen_range(-4..=4));
    k.add_box(corner, rng.gen_range(-2..=2))
}
