use proptest::prelude::*;
use rank2_cluster::laurent::LaurentJson;
use rank2_cluster::{DimVector, LaurentPoly};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -3i64..=3, -5i64..=5), 0..6).prop_map(LaurentPoly::from_terms)
}

fn nonzero() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn monomial() -> impl Strategy<Value = LaurentPoly> {
    (prop_oneof![Just(-1i64), Just(1)], -4i64..=4, -4i64..=4)
        .prop_map(|(c, e1, e2)| LaurentPoly::monomial(c, e1, e2))
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &LaurentPoly::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn div_exact_inverts_mul(p in poly(), q in nonzero()) {
        prop_assert_eq!((&p * &q).div_exact(&q).unwrap(), p);
    }

    #[test]
    fn div_exact_rejects_non_multiples(p in nonzero()) {
        let q = LaurentPoly::from_terms([(0, 0, 1), (1, 0, 1)]);
        let r = &(&p * &q) + &LaurentPoly::monomial(1, 7, 7);
        prop_assert!(r.div_exact(&q).is_err());
    }

    #[test]
    fn substitute_identity(p in poly()) {
        prop_assert_eq!(p.substitute(&LaurentPoly::x1(), &LaurentPoly::x2()).unwrap(), p);
    }

    #[test]
    fn substitute_is_multiplicative(p in poly(), q in poly(), a in monomial(), b in monomial()) {
        let lhs = (&p * &q).substitute(&a, &b).unwrap();
        let rhs = &p.substitute(&a, &b).unwrap() * &q.substitute(&a, &b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_is_monomial_multiplication(p in poly(), d1 in -5i64..=5, d2 in -5i64..=5) {
        prop_assert_eq!(p.shift(d1, d2), &p * &LaurentPoly::monomial(1, d1, d2));
    }

    #[test]
    fn denominator_adds_under_monomial_product(p in nonzero(), q in monomial()) {
        let dp = p.denominator_vector().unwrap();
        let dq = q.denominator_vector().unwrap();
        prop_assert_eq!((&p * &q).denominator_vector().unwrap(), dp + dq);
    }

    #[test]
    fn swap_is_involution(p in poly()) {
        prop_assert_eq!(p.swap_vars().swap_vars(), p.clone());
        let d = p.swap_vars().denominator_vector().ok();
        prop_assert_eq!(d, p.denominator_vector().ok().map(DimVector::swapped));
    }

    #[test]
    fn json_round_trip(p in poly()) {
        let json = LaurentJson::from(p.clone());
        let text = serde_json::to_string(&json).unwrap();
        let back: LaurentJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(LaurentPoly::try_from(back).unwrap(), p);
    }
}
