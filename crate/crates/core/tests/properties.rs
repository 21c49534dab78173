mod support;

use proptest::prelude::*;
use stellate_core::star::saturation_power_witness;
use stellate_core::{
    in_saturation, is_gv, loc_star, s_transform, s_transform_chain, t_close, v_close,
    ExponentVector, MonomialModule, MultiplicativeSet, PrimeFamily, StarOperator, DEFAULT_MAX_ITER,
};
use support::oracle;

fn raw(nvars: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(lo..=hi, nvars), 1..=4)
}

fn module(nvars: usize, lo: i64, hi: i64) -> impl Strategy<Value = MonomialModule> {
    raw(nvars, lo, hi).prop_map(move |g| MonomialModule::new(nvars, g).unwrap())
}

fn gv(nvars: usize, hi: i64) -> impl Strategy<Value = MonomialModule> {
    module(nvars, 0, hi).prop_map(|m| m.scale(&m.meet().neg()).unwrap())
}

fn gv_set(nvars: usize, hi: i64) -> impl Strategy<Value = MultiplicativeSet> {
    prop::collection::vec(gv(nvars, hi), 1..=3).prop_map(|g| MultiplicativeSet::new(g).unwrap())
}

fn triple() -> impl Strategy<Value = (MonomialModule, MonomialModule, MonomialModule)> {
    (1usize..=3).prop_flat_map(|n| (module(n, -2, 3), module(n, -2, 3), module(n, -2, 3)))
}

fn covering(nvars: usize) -> impl Strategy<Value = PrimeFamily> {
    prop::collection::vec(prop::collection::btree_set(0..nvars, 1..=nvars), 1..=4).prop_filter_map(
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

fn sub(a: &MonomialModule, b: &MonomialModule) -> bool {
    a.is_subset_of(b).unwrap()
}

proptest! {
    #[test]
    fn normalization_is_sound(
        (g, p) in (1usize..=3).prop_flat_map(|n| (raw(n, -2, 3), prop::collection::vec(-3i64..=4, n)))
    ) {
        let m = MonomialModule::new(p.len(), g.clone()).unwrap();
        prop_assert_eq!(m.contains(&p.clone().into()).unwrap(), oracle::member(&g, &p));
        for w in m.gens().windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        for x in m.gens() {
            for y in m.gens() {
                prop_assert!(x == y || !x.divides(y));
            }
        }
    }

    #[test]
    fn lattice_laws((a, b, c) in triple()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.intersect(&b).unwrap().intersect(&c).unwrap(),
            a.intersect(&b.intersect(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn colon_adjunction((a, b, c) in triple()) {
        let lhs = sub(&c.mul(&b).unwrap(), &a);
        let rhs = sub(&c, &a.colon(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_closed_form((a, _, _) in triple()) {
        let d = MonomialModule::unit(a.nvars());
        prop_assert_eq!(a.inverse(), MonomialModule::principal(a.meet().neg()));
        prop_assert_eq!(a.inverse(), d.colon(&a).unwrap());
    }

    #[test]
    fn stars_between_d_and_v(
        (a, s, f) in (2usize..=3).prop_flat_map(|n| (module(n, -1, 4), gv_set(n, 2), covering(n)))
    ) {
        let av = v_close(&a);
        prop_assert_eq!(t_close(&a), av.clone());
        for star in [
            StarOperator::D,
            StarOperator::V,
            StarOperator::T,
            StarOperator::Transform(s),
            StarOperator::Localization(f),
        ] {
            let r = star.apply(&a).unwrap();
            prop_assert!(sub(&a, &r) && sub(&r, &av), "{} on {}", star, a);
        }
    }

    #[test]
    fn transform_laws(
        (a, b, x, s) in (2usize..=3).prop_flat_map(|n| (
            module(n, -1, 4),
            module(n, -1, 4),
            prop::collection::vec(-3i64..=3, n),
            gv_set(n, 2),
        ))
    ) {
        let tr = |m: &MonomialModule| s_transform(m, &s).unwrap();
        let ab = a.add(&b).unwrap();
        prop_assert!(sub(&a, &tr(&a)));
        prop_assert!(sub(&tr(&a), &tr(&ab)));
        let x = ExponentVector::new(x);
        prop_assert_eq!(tr(&a.scale(&x).unwrap()), tr(&a).scale(&x).unwrap());
        prop_assert_eq!(tr(&a.intersect(&b).unwrap()), tr(&a).intersect(&tr(&b)).unwrap());
    }

    #[test]
    fn saturation_invariance(
        (a, s, extra) in (2usize..=3).prop_flat_map(|n| (module(n, -1, 4), gv_set(n, 2), module(n, 0, 2)))
    ) {
        // P + extra contains P, so it is in the saturation already.
        let redundant = s.product().add(&extra).unwrap();
        let bigger = s.with_generator(redundant).unwrap();
        prop_assert_eq!(s_transform(&a, &s).unwrap(), s_transform(&a, &bigger).unwrap());
    }

    #[test]
    fn gv_chain_within_budget(
        (a, s) in (2usize..=3).prop_flat_map(|n| (module(n, 0, 8), gv_set(n, 8)))
    ) {
        let st = s_transform_chain(&a, &s).unwrap();
        prop_assert!(st.index <= DEFAULT_MAX_ITER);
    }

    #[test]
    fn gv_products_are_gv(s in (2usize..=3).prop_flat_map(|n| gv_set(n, 3))) {
        prop_assert!(s.is_gv_system());
        prop_assert!(is_gv(s.product()).unwrap());
        for g in s.gens() {
            prop_assert!(is_gv(&g.mul(s.product()).unwrap()).unwrap());
        }
    }

    #[test]
    fn saturation_routes_agree(
        (i, s) in (2usize..=3).prop_flat_map(|n| (module(n, 0, 4), gv_set(n, 2)))
    ) {
        // At these sizes the least n with P^n ⊆ I stays well below 16.
        let chain = in_saturation(&i, &s).unwrap();
        let power = saturation_power_witness(&i, &s, 16).unwrap();
        prop_assert_eq!(chain, power.is_some());
    }

    #[test]
    fn loc_star_refinement_shrinks(
        (a, f, extra) in (2usize..=4).prop_flat_map(|n| (
            module(n, -1, 3),
            covering(n),
            prop::collection::btree_set(0..n, 1..=n),
        ))
    ) {
        let g = f.refined(extra.into_iter().collect()).unwrap();
        prop_assert!(sub(&loc_star(&a, &g).unwrap(), &loc_star(&a, &f).unwrap()));
    }

    #[test]
    fn loc_star_is_intersection_of_localizations(
        (a, f) in (2usize..=3).prop_flat_map(|n| (module(n, -1, 3), covering(n)))
    ) {
        // Each A·D_{P_σ} is A with the variables outside σ set free; bounding
        // them by meet(A) gives a module whose intersection is the star.
        let meet = a.meet();
        let mut acc: Option<MonomialModule> = None;
        for sigma in f.sigmas() {
            let gens: Vec<ExponentVector> = a
                .gens()
                .iter()
                .map(|g| {
                    ExponentVector::new(
                        (0..a.nvars())
                            .map(|j| if sigma.contains(&j) { g.coords()[j] } else { meet.coords()[j] })
                            .collect(),
                    )
                })
                .collect();
            let local = MonomialModule::new(a.nvars(), gens).unwrap();
            acc = Some(match acc {
                None => local,
                Some(x) => x.intersect(&local).unwrap(),
            });
        }
        prop_assert_eq!(loc_star(&a, &f).unwrap(), acc.unwrap());
    }

    #[test]
    fn prime_fixed_points(f in (2usize..=4).prop_flat_map(covering)) {
        for sigma in f.sigmas() {
            let p = f.prime(sigma).unwrap();
            prop_assert_eq!(loc_star(&p, &f).unwrap(), p);
        }
    }
}
