use proptest::prelude::*;
use upsilon_cli::{parse_knot_expr, parse_region, KnotExpr};
use upsilon_core::exactmath::q;
use upsilon_core::{Rational, SouthWestRegion};

const CORPUS: [&str; 30] = [
    "T(3,2)",
    "T(2,3)",
    "T(8,5) # -T(6,5) # -T(4,3)",
    "-T(4,3)",
    "--T(5,2)",
    "-(T(3,2) # T(5,2))",
    "T(3,2) # (T(5,2) # T(7,2))",
    "(T(3,2))",
    "P(-2,3,7)",
    "P(-2,3,9) # -P(-2,3,11)",
    "alg(4;6,7)",
    "alg(2;3)",
    "alg(6;9,10) # -alg(4;6,7)",
    "thin(-2)",
    "thin(0)",
    "thin(3) # -thin(1)",
    "stair()",
    "stair(1,1)",
    "stair(1,2,2,1)",
    "stair(1,2,1,1,2,1) # T(4,3)",
    "file(k.json)",
    "file(some dir/knot.json) # -T(3,2)",
    "T(5,4) # T(5,4) # -T(7,3)",
    "-(-(T(3,2)))",
    "-(T(3,2) # -(T(5,2) # thin(2)))",
    "   T( 6 , 5 )#-T(4,3)   ",
    "T(11,2) # P(-2,3,13)",
    "thin(-5) # -thin(-5)",
    "(T(3,2) # T(3,2)) # (T(3,2) # T(3,2))",
    "alg(4;6,7) # stair(2,2) # file(x.json)",
];

#[test]
fn corpus_round_trips() {
    for text in CORPUS {
        let e = parse_knot_expr(text).unwrap_or_else(|err| panic!("{text}: {err}"));
        let printed = e.to_string();
        assert_eq!(parse_knot_expr(&printed).unwrap(), e, "{text} printed as {printed}");
    }
}

#[test]
fn documented_examples() {
    let t = |p, q| Box::new(KnotExpr::Torus(p, q));
    assert_eq!(
        parse_knot_expr("T(8,5) # -T(6,5) # -T(4,3)").unwrap(),
        KnotExpr::Sum(
            Box::new(KnotExpr::Sum(t(8, 5), Box::new(KnotExpr::Mirror(t(6, 5))))),
            Box::new(KnotExpr::Mirror(t(4, 3)))
        )
    );
    assert_eq!(parse_knot_expr("thin(-2)").unwrap(), KnotExpr::Thin(-2));
    let err = parse_knot_expr("T(4,6)").unwrap_err();
    assert_eq!(err.pos, 0);
}

#[test]
fn parse_errors_point_at_the_problem() {
    let cases = [
        ("T(3)", 3),
        ("T(3,2) # Z(1)", 9),
        ("T(3,2) T(5,2)", 7),
        ("thin(x)", 5),
        ("-", 1),
        ("stair(1,1", 9),
    ];
    for (text, pos) in cases {
        let err = parse_knot_expr(text).unwrap_err();
        assert_eq!(err.pos, pos, "{text}: {err}");
    }
}

#[test]
fn region_examples() {
    assert_eq!(
        parse_region("H(2/3)").unwrap(),
        SouthWestRegion::halfplane(q(1, 3), q(2, 3), Rational::zero()).unwrap()
    );
    let u = parse_region("Q(2) | hp(1/4,3/4,1)").unwrap();
    let expected = SouthWestRegion::quadrant(&Rational::from(2))
        .union(&SouthWestRegion::halfplane(q(1, 4), q(3, 4), Rational::one()).unwrap());
    assert_eq!(u, expected);
    assert!(parse_region("hp(-1,1,0)").is_err());
    assert!(parse_region("hp(1,1,0) |").is_err());
    assert!(parse_region("hp(1,1,0) & & H(1)").is_err());
    assert!(parse_region("H(1/2").is_err());
    assert!(parse_region("H(-1)").is_err());
}

#[test]
fn region_whitespace_is_insignificant() {
    assert_eq!(
        parse_region(" trunc ( H( 2/3 ) |Q(1) , 4 ) ").unwrap(),
        parse_region("trunc(H(2/3)|Q(1),4)").unwrap()
    );
}

fn atom() -> impl Strategy<Value = KnotExpr> {
    prop_oneof![
        (2u64..12, 2u64..12)
            .prop_filter("coprime", |(p, q)| num_integer::gcd(*p, *q) == 1)
            .prop_map(|(p, q)| KnotExpr::Torus(p, q)),
        (3u64..9).prop_map(|k| KnotExpr::Pretzel(2 * k + 1)),
        (-6i64..6).prop_map(KnotExpr::Thin),
        Just(KnotExpr::Algebraic { a: 4, exponents: vec![6, 7] }),
        prop::collection::vec(1u64..4, 0..3).prop_map(|half| {
            let mut j = half.clone();
            j.extend(half.iter().rev());
            KnotExpr::Stair(j)
        }),
        "[a-z]{1,6}\\.json".prop_map(KnotExpr::FromFile),
    ]
}

fn expr() -> impl Strategy<Value = KnotExpr> {
    atom().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| KnotExpr::Mirror(Box::new(e))),
            (inner.clone(), inner).prop_map(|(a, b)| KnotExpr::Sum(Box::new(a), Box::new(b))),
        ]
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn region() -> impl Strategy<Value = SouthWestRegion> {
    let hp = (0i64..4, 0i64..4, 1i64..4, rational())
        .prop_filter_map("non-zero normal", |(a, b, d, c)| {
            SouthWestRegion::halfplane(q(a, d), q(b, d), c).ok()
        });
    prop::collection::vec(prop::collection::vec(hp, 1..3), 1..3).prop_map(|atoms| {
        atoms
            .into_iter()
            .map(|conj| conj.into_iter().reduce(|a, b| a.intersect(&b)).unwrap())
            .reduce(|a, b| a.union(&b))
            .unwrap()
    })
}

proptest! {
    #[test]
    fn printed_expressions_reparse(e in expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse_knot_expr(&printed).unwrap(), e);
    }

    #[test]
    fn printed_regions_reparse(r in region()) {
        prop_assert_eq!(parse_region(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn parser_never_panics(text in "[-#()TPalgthinsrf0-9,;/ ]{0,24}") {
        let _ = parse_knot_expr(&text);
        let _ = parse_region(&text);
    }
}
