use std::collections::BTreeMap;

use framed_bps::closed::{b_extremal_unknot, integrality_statistic, Sign};
use framed_bps::curve::{equivalent_up_to_unit, frame_transform, make_curve, CurveKind, KnotKind};
use framed_bps::ov::{bps_from_disk_counts, disk_counts};
use framed_bps::qsym::brace;
use framed_bps::{LaurentPoly, QFrac};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -6i64..=6, -4i64..=4), 0..6)
        .prop_map(|t| LaurentPoly::from_int_terms(&t))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(p in poly(), d in nonzero_poly()) {
        let prod = &p * &d;
        prop_assert_eq!(prod.exact_div(&d).unwrap(), p);
    }

    #[test]
    fn brace_division_round_trips(p in poly(), k in 1u32..=6) {
        let q = QFrac::from_poly(&p * &brace(k as i64)).div_brace(k);
        prop_assert_eq!(q.reduce().to_laurent().unwrap(), p);
    }

    #[test]
    fn adams_is_a_ring_homomorphism(a in poly(), b in poly(), d in 1u32..=4) {
        prop_assert_eq!((&a * &b).adams(d), &a.adams(d) * &b.adams(d));
        prop_assert_eq!((&a + &b).adams(d), &a.adams(d) + &b.adams(d));
    }

    #[test]
    fn adams_commutes_with_q1(a in poly(), d in 1u32..=4) {
        prop_assert_eq!(a.adams(d).specialize_q1(), a.specialize_q1().adams(d));
    }

    #[test]
    fn qfrac_adams_commutes_with_evaluation(p in poly(), k in 1u32..=4, d in 1u32..=3) {
        let q = QFrac::from_poly(&p * &brace(k as i64)).div_brace(k);
        prop_assert_eq!(q.adams(d).reduce().to_laurent().unwrap(), p.adams(d));
    }

    #[test]
    fn disk_counts_round_trip(
        r in 1u32..=12,
        raw in prop::collection::vec((-12i64..=12, -20i64..=20), 1..8),
    ) {
        let mut b = BTreeMap::new();
        for level in (1..=r).filter(|l| r % l == 0) {
            for (m, v) in &raw {
                if *v != 0 {
                    b.insert((level, *m), BigRational::from_integer(BigInt::from(*v + level as i64)));
                }
            }
        }
        let mut k = BTreeMap::new();
        for level in (1..=r).filter(|l| r % l == 0) {
            for (m, v) in disk_counts(&b, level) {
                k.insert((level, m), v);
            }
        }
        let back = bps_from_disk_counts(&k, r);
        let want: BTreeMap<i64, BigRational> = b
            .range((r, i64::MIN)..=(r, i64::MAX))
            .map(|(&(_, m), v)| (m, v.clone()))
            .filter(|(_, v)| *v != BigRational::from_integer(BigInt::from(0)))
            .collect();
        prop_assert_eq!(back, want);
    }

    #[test]
    fn statistic_is_integral_and_extremal(r in 1u64..=30, t in -15i64..=15) {
        let (v, ok) = integrality_statistic(r, t);
        prop_assert!(ok);
        let b = b_extremal_unknot(r, Sign::Minus, t).unwrap();
        prop_assert_eq!(v, BigRational::from_integer(b));
    }

    #[test]
    fn framing_transforms_compose(t1 in -4i64..=4, t2 in -4i64..=4, kind in 0usize..3) {
        let kind = [CurveKind::Full, CurveKind::ExtremalPlus, CurveKind::ExtremalMinus][kind];
        let base = make_curve(KnotKind::Unknot, kind, 0).unwrap();
        let twice = frame_transform(&frame_transform(&base, t1), t2);
        let once = frame_transform(&base, t1 + t2);
        prop_assert!(equivalent_up_to_unit(&twice.source, &once.source));
        prop_assert_eq!(twice.framing, t1 + t2);
        let direct = make_curve(KnotKind::Unknot, kind, t1 + t2).unwrap();
        prop_assert!(equivalent_up_to_unit(&once.source, &direct.source));
    }
}
