use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rank2_cluster::matrix::RatMatrix;
use rank2_cluster::quiver::{find_isomorphism, QuiverRep, RepJson};
use rank2_cluster::DimVector;

fn rep() -> impl Strategy<Value = QuiverRep> {
    (2u32..=3, 0usize..=3, 0usize..=3).prop_flat_map(|(b, d1, d2)| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, d1 * d2), b as usize).prop_map(move |blocks| {
            let maps = blocks
                .iter()
                .map(|v| {
                    RatMatrix::from_fn(d2, d1, |i, j| {
                        BigRational::from_integer(BigInt::from(v[i * d1 + j]))
                    })
                })
                .collect();
            QuiverRep::new(b, d1, d2, maps).unwrap()
        })
    })
}

fn pair() -> impl Strategy<Value = (QuiverRep, QuiverRep)> {
    (rep(), rep()).prop_filter("same b", |(a, b)| a.b() == b.b())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn duality_is_an_involution(m in rep()) {
        let dd = m.dual().dual();
        prop_assert_eq!(dd.dim(), m.dim());
        prop_assert_eq!(dd.maps(), m.maps());
    }

    #[test]
    fn t_minus_is_conjugate_of_t_plus(m in rep()) {
        let lhs = m.t_minus();
        let rhs = m.dual().t_plus().dual();
        prop_assert_eq!(lhs.dim(), rhs.dim());
        prop_assert_eq!(lhs.rank_profile(), rhs.rank_profile());
    }

    #[test]
    fn t_plus_dimension(m in rep()) {
        let b = m.b() as i64;
        let d = m.dim();
        let rank = m.phi_c().rank() as i64;
        prop_assert_eq!(m.t_plus().dim(), DimVector::new(d.d2, b * d.d2 - rank));
        if m.phi_c_injective() {
            prop_assert_eq!(m.t_plus().dim(), DimVector::new(d.d2, b * d.d2 - d.d1));
        }
    }

    #[test]
    fn t_plus_image_is_phi_r_surjective(m in rep()) {
        let t = m.t_plus();
        prop_assert_eq!(t.phi_r().rank(), t.dim().d2 as usize);
    }

    #[test]
    fn t_minus_t_plus_recovers_injective(m in rep()) {
        prop_assume!(m.phi_c_injective());
        let back = m.t_plus().t_minus();
        prop_assert_eq!(back.dim(), m.dim());
        prop_assert!(find_isomorphism(&back, &m).is_some());
    }

    #[test]
    fn t_plus_is_additive((a, b) in pair()) {
        let sum = a.direct_sum(&b).unwrap().t_plus();
        let (ta, tb) = (a.t_plus(), b.t_plus());
        prop_assert_eq!(sum.dim(), ta.dim() + tb.dim());
        let ranks: Vec<usize> = ta.rank_profile().iter().zip(tb.rank_profile()).map(|(x, y)| x + y).collect();
        prop_assert_eq!(sum.rank_profile(), ranks);
    }

    #[test]
    fn json_round_trip(m in rep()) {
        let text = serde_json::to_string(&RepJson::from(&m)).unwrap();
        let back: RepJson = serde_json::from_str(&text).unwrap();
        let parsed = QuiverRep::try_from(&back).unwrap();
        prop_assert_eq!(parsed.maps(), m.maps());
        prop_assert_eq!(parsed.dim(), m.dim());
    }
}

#[test]
fn isomorphism_separates_regular_from_semisimple() {
    use rank2_cluster::quiver::build_regular_explicit;
    let reg = build_regular_explicit(1).unwrap();
    let semi = QuiverRep::simple(2, 1)
        .unwrap()
        .direct_sum(&QuiverRep::simple(2, 2).unwrap())
        .unwrap();
    assert_eq!(reg.dim(), semi.dim());
    assert!(find_isomorphism(&reg, &semi).is_none());
    assert!(find_isomorphism(&reg, &reg).is_some());
}
