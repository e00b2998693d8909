use adoforge_core::ado::{ado3_closed, ado4, compare_polys, Comparison};
use adoforge_core::exact_arith::{rat, FieldCoeff};
use adoforge_core::json::PolyJson;
use adoforge_core::refined::XtPoly;
use adoforge_core::rmatrix::{shift_alpha, TangleElement};
use adoforge_core::torus_fk::epsilon;
use adoforge_core::{root_of_unity, Coeff, Cyclotomic, HalfLaurent, Rational, TorusKnot};
use proptest::prelude::*;

const ORDERS: [u32; 6] = [1, 3, 4, 6, 8, 12];

fn cyclo() -> impl Strategy<Value = Cyclotomic> {
    (prop::sample::select(&ORDERS[..]), prop::collection::vec((-6i64..=6, 1i64..=4), 1..6)).prop_map(|(n, cs)| {
        cs.iter().enumerate().fold(Cyclotomic::from_int(0), |acc, (k, &(a, b))| {
            acc.plus(&root_of_unity(n, k as i64).scale(&rat(a, b)))
        })
    })
}

fn laurent() -> impl Strategy<Value = HalfLaurent<Cyclotomic>> {
    prop::collection::vec((-8i64..=8, cyclo()), 0..6).prop_map(HalfLaurent::from_terms)
}

fn laurent_rat() -> impl Strategy<Value = HalfLaurent<Rational>> {
    prop::collection::vec((-8i64..=8, -5i64..=5), 0..7)
        .prop_map(|ts| HalfLaurent::from_terms(ts.into_iter().map(|(e, c)| (e, rat(c, 1)))))
}

fn tangle(r: u32) -> impl Strategy<Value = TangleElement> {
    prop::collection::vec(((-6i64..=6, 0i64..=3), 0i64..(2 * i64::from(r))), 0..5).prop_map(move |ts| {
        TangleElement::from_terms(ts.into_iter().map(|((y, z), k)| ([y, z], root_of_unity(2 * r, k))))
    })
}

proptest! {
    #[test]
    fn field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert!(a.minus(&a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.times(&a.inverse().unwrap()), Cyclotomic::from_int(1));
        }
    }

    #[test]
    fn roots_of_unity(n in 1u32..=24, k in -30i64..30) {
        let z = root_of_unity(n, k);
        prop_assert_eq!(z.pow(i64::from(n)).unwrap(), Cyclotomic::from_int(1));
        prop_assert_eq!(z.conj(), root_of_unity(n, -k));
        prop_assert_eq!(z.times(&root_of_unity(n, 1)), root_of_unity(n, k + 1));
    }

    #[test]
    fn roots_sum_to_zero(n in 2u32..=24) {
        let s = (0..i64::from(n)).fold(Cyclotomic::from_int(0), |acc, k| acc.plus(&root_of_unity(n, k)));
        prop_assert!(s.is_zero());
    }

    #[test]
    fn laurent_ring(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.invert_x().invert_x(), a.clone());
        prop_assert_eq!(a.mul(&b).invert_x(), a.invert_x().mul(&b.invert_x()));
    }

    #[test]
    fn exact_division_undoes_product(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn series_inverse(p in laurent_rat(), order in 0i64..12) {
        prop_assume!(!p.is_zero());
        let lo = p.min_exponent().unwrap();
        let s = p.series_invert(order).unwrap();
        let prod = p.mul(&s).filter(|e| *e <= lo + order);
        prop_assert_eq!(prod, HalfLaurent::monomial(lo, rat(1, 1)));
    }

    #[test]
    fn alpha_shift_is_a_group_action((r, p) in (2u32..=5).prop_flat_map(|r| (Just(r), tangle(r))), a in -4i64..=4, b in -4i64..=4) {
        prop_assert_eq!(shift_alpha(&shift_alpha(&p, r, a), r, b), shift_alpha(&p, r, a + b));
        prop_assert_eq!(shift_alpha(&p, r, 0), p);
    }

    #[test]
    fn json_round_trip(a in laurent(), half in any::<bool>()) {
        let doc = PolyJson::encode(&a, &["x"], half);
        let text = doc.to_pretty();
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        let decoded: HalfLaurent<Cyclotomic> = back.decode().unwrap();
        prop_assert_eq!(&decoded, &a);
        prop_assert_eq!(PolyJson::encode(&decoded, &["x"], half).to_pretty(), text);
    }

    #[test]
    fn json_round_trip_two_vars(ts in prop::collection::vec(((-5i64..=5, -5i64..=5), -9i64..=9, 1i64..=7), 0..8)) {
        let p: XtPoly<Rational> = XtPoly::from_terms(ts.into_iter().map(|((x, t), n, d)| ([x, t], rat(n, d))));
        let decoded: XtPoly<Rational> = PolyJson::encode(&p, &["x", "t"], false).decode().unwrap();
        prop_assert_eq!(decoded, p);
    }

    #[test]
    fn epsilon_periodic_and_balanced(s in 2i64..=15, t in 2i64..=15, m in 1i64..500) {
        let Ok(k) = TorusKnot::new(s, t) else { return Ok(()) };
        let n = 2 * s * t;
        prop_assert_eq!(epsilon(&k, m), epsilon(&k, m + n));
        if m % 2 == 0 {
            prop_assert_eq!(epsilon(&k, m), 0);
        }
        let sum: i64 = (m..m + n).map(|j| i64::from(epsilon(&k, j))).sum();
        prop_assert_eq!(sum, 0);
    }

    #[test]
    fn ado_polys_are_weyl_symmetric(s in 1i64..=19) {
        prop_assert!(ado4(s).unwrap().is_weyl_symmetric());
        if s <= 10 {
            prop_assert!(ado3_closed(s).unwrap().is_weyl_symmetric());
        }
    }

    #[test]
    fn comparison_sees_through_normalization(a in laurent(), shift in -3i64..=3, u in cyclo(), c in 0i64..8) {
        prop_assume!(!a.is_zero() && !u.is_zero());
        let a = a.map_exponents(|e| 2 * e);
        let b = a.scale_x(&root_of_unity(8, c)).unwrap().mul_monomial(2 * shift, &u);
        let cmp = compare_polys(&b, &a, 4, true);
        prop_assert!(cmp.is_match(), "{:?}", cmp);
        prop_assert_eq!(compare_polys(&a, &a, 4, false), Comparison::Equal);
        if c == 0 {
            prop_assert!(compare_polys(&b, &a, 4, false).is_match());
        }
    }
}
