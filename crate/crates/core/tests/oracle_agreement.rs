mod support;

use proptest::prelude::*;
use stellate_core::{
    loc_star, s_transform, v_close, MonomialModule, MultiplicativeSet, PrimeFamily,
};
use support::oracle;

fn raw(nvars: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(lo..=hi, nvars), 1..=4)
}

fn module(nvars: usize, lo: i64, hi: i64) -> impl Strategy<Value = MonomialModule> {
    raw(nvars, lo, hi).prop_map(move |g| MonomialModule::new(nvars, g).unwrap())
}

fn pair() -> impl Strategy<Value = (MonomialModule, MonomialModule)> {
    (1usize..=3).prop_flat_map(|n| (module(n, -2, 3), module(n, -2, 3)))
}

/// Shifts a module so its generators have meet 0, making it GV.
fn gv(nvars: usize) -> impl Strategy<Value = MonomialModule> {
    module(nvars, 0, 2).prop_map(|m| m.scale(&m.meet().neg()).unwrap())
}

fn family(nvars: usize) -> impl Strategy<Value = PrimeFamily> {
    prop::collection::vec(prop::collection::btree_set(0..nvars, 1..=nvars), 1..=3).prop_filter_map(
        "covering",
        move |s| {
            let f = PrimeFamily::new(
                nvars,
                s.into_iter().map(|x| x.into_iter().collect()).collect(),
            )
            .ok()?;
            f.is_covering().then_some(f)
        },
    )
}

proptest! {
    #[test]
    fn add_matches_oracle((a, b) in pair()) {
        prop_assert_eq!(a.add(&b).unwrap(), oracle::add(&a, &b));
    }

    #[test]
    fn mul_matches_oracle((a, b) in pair()) {
        prop_assert_eq!(a.mul(&b).unwrap(), oracle::mul(&a, &b));
    }

    #[test]
    fn intersect_matches_oracle((a, b) in pair()) {
        prop_assert_eq!(a.intersect(&b).unwrap(), oracle::intersect(&a, &b));
    }

    #[test]
    fn colon_matches_oracle((a, b) in pair()) {
        prop_assert_eq!(a.colon(&b).unwrap(), oracle::colon(&a, &b));
    }

    #[test]
    fn inverse_and_v_match_oracle((a, _) in pair()) {
        prop_assert_eq!(a.inverse(), oracle::inverse(&a));
        prop_assert_eq!(v_close(&a), oracle::v_close(&a));
    }

    #[test]
    fn membership_matches_oracle(
        (a, p) in (1usize..=3).prop_flat_map(|n| (module(n, -2, 3), prop::collection::vec(-3i64..=4, n)))
    ) {
        prop_assert_eq!(a.contains(&p.clone().into()).unwrap(), oracle::contains(&a, &p));
    }

    #[test]
    fn loc_star_matches_oracle(
        (a, f) in (1usize..=3).prop_flat_map(|n| (module(n, -1, 3), family(n)))
    ) {
        prop_assert_eq!(loc_star(&a, &f).unwrap(), oracle::loc_star(&a, &f));
    }

    #[test]
    fn s_transform_matches_oracle(
        (a, s) in (2usize..=3).prop_flat_map(|n| (module(n, 0, 3), prop::collection::vec(module(n, 0, 2), 1..=2)))
    ) {
        let set = MultiplicativeSet::new(s.clone()).unwrap();
        if set.is_gv_system() {
            let o = oracle::s_transform(&a, &s, 16).expect("GV chain stabilizes");
            prop_assert_eq!(s_transform(&a, &set).unwrap(), o);
        } else {
            prop_assert!(s_transform(&a, &set).is_err());
        }
    }

    #[test]
    fn gv_transform_matches_oracle(
        (a, s) in (2usize..=3).prop_flat_map(|n| (module(n, -1, 3), prop::collection::vec(gv(n), 1..=2)))
    ) {
        let set = MultiplicativeSet::new(s.clone()).unwrap();
        prop_assert!(set.is_gv_system());
        let o = oracle::s_transform(&a, &s, 16).expect("GV chain stabilizes");
        prop_assert_eq!(s_transform(&a, &set).unwrap(), o);
    }
}
