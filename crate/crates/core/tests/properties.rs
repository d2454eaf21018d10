//! Randomized algebraic invariants. Seeds are fixed so runs are reproducible.

use degbern::arith::{BiPoly, CycField, CycRat, Rat, Ring, TruncSeries, UniPoly};
use degbern::report::{emit, params, parse_json, Format, IdentityReport};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(seed: u64) -> Config {
    Config { cases: 96, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rat::new(n, d))
}

fn bipoly(max_deg: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg), rat()), 0..6).prop_map(BiPoly::from_terms)
}

fn cyc(field: std::sync::Arc<CycField>) -> impl Strategy<Value = CycRat> {
    let deg = field.degree().max(1);
    prop::collection::vec(rat(), deg).prop_map(move |c| CycRat::from_residue(&field, UniPoly::new(c)))
}

fn series(order: usize) -> impl Strategy<Value = TruncSeries<BiPoly>> {
    prop::collection::vec(bipoly(2), order + 1).prop_map(move |c| TruncSeries::new(c, order))
}

proptest! {
    #![proptest_config(config(0x5eed_0001))]

    #[test]
    fn rat_field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        if let Some(inv) = a.recip() {
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn bipoly_ring_axioms(a in bipoly(4), b in bipoly(4), c in bipoly(4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(p in bipoly(4), q in bipoly(4), a in rat(), d in 1u64..=6) {
        let lhs = (&p * &q).substitute(&a, d);
        let rhs = &p.substitute(&a, d) * &q.substitute(&a, d);
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!((&p + &q).substitute(&a, d), &p.substitute(&a, d) + &q.substitute(&a, d));
    }

    #[test]
    fn substitution_matches_pointwise_evaluation(p in bipoly(4), a in rat(), d in 1u64..=6, x in rat(), l in rat()) {
        let dr = Rat::from(d);
        let direct = p.eval(&(&(&x + &a) / &dr), &(&l / &dr));
        prop_assert_eq!(p.substitute(&a, d).eval(&x, &l), direct);
    }

    #[test]
    fn render_parse_round_trip(p in bipoly(6)) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<BiPoly>().unwrap(), p);
    }

    #[test]
    fn series_division_round_trip(num in series(8), mut den in series(8), c0 in rat()) {
        // Force an invertible constant term.
        let unit = if c0.is_zero() { Rat::one() } else { c0 };
        let mut coeffs = den.clone().into_coeffs();
        coeffs[0] = BiPoly::constant(unit);
        den = TruncSeries::new(coeffs, 8);
        let q = num.divide(&den).unwrap();
        prop_assert_eq!(q.mul(&den).unwrap(), num);
    }
}

proptest! {
    #![proptest_config(config(0x5eed_0002))]

    #[test]
    fn cyclotomic_ring_axioms(
        (field, a, b, c) in prop::sample::select(vec![3u64, 4, 5, 7, 8, 9, 12]).prop_flat_map(|m| {
            let f = CycField::new(m);
            (Just(f.clone()), cyc(f.clone()), cyc(f.clone()), cyc(f))
        })
    ) {
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert!(a.sub_ref(&a).is_zero());
        prop_assert!(a.mul_ref(&b).residue().degree().map_or(true, |d| d < field.degree()));
        prop_assert_eq!(CycRat::zeta_pow(&field, 1).pow(field.order()), CycRat::one());
    }

    #[test]
    fn report_json_round_trip(n in 0usize..50, d in 1u64..9, r in rat(), p in bipoly(3)) {
        let reports = vec![
            IdentityReport::check("thm2.multiplication", params([("n", n.into()), ("d", d.into())]), &p),
            IdentityReport::check("thm8.distribution", params([("lambda", r.into())]), &BiPoly::zero()),
        ];
        prop_assert_eq!(parse_json(&emit(&reports, Format::Json)).unwrap(), reports);
    }
}
