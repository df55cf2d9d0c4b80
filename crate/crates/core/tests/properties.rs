mod common;

use common::{random_arrangement, rng};
use proptest::prelude::*;
use tuttekit::algebra::{rat, MultiPoly};
use tuttekit::finite_field::coboundary_at_own_prime;
use tuttekit::tutte::{
    char_poly, coboundary_transform, tutte_activity, tutte_delcon, tutte_subset, DelconOptions,
};
use tuttekit::Arrangement;

fn modular(p: u64, d: usize, raw: &[(Vec<i64>, i64)]) -> Arrangement {
    Arrangement::over_prime(p, d, raw).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip_keeps_the_polynomial(seed in any::<u64>()) {
        let a = random_arrangement(&mut rng(seed), 6, 3);
        let back = Arrangement::from_json(&a.to_json()).unwrap();
        prop_assert_eq!(back.len(), a.len());
        prop_assert_eq!(tutte_subset(&back).unwrap().tutte, tutte_subset(&a).unwrap().tutte);
    }

    #[test]
    fn coning_multiplies_chi_by_q_minus_one(seed in any::<u64>()) {
        let a = random_arrangement(&mut rng(seed), 6, 3);
        let q1 = &MultiPoly::var("q") - &MultiPoly::constant(rat(1));
        let coned = char_poly(&a.cone()).unwrap();
        prop_assert_eq!(coned, (&char_poly(&a).unwrap() * &q1).in_vars(&["q"]));
    }

    #[test]
    fn prime_field_engines_agree(
        p in prop::sample::select(vec![2u64, 3, 5]),
        d in 1usize..=3,
        raw in prop::collection::vec((prop::collection::vec(-4i64..=4, 3), -4i64..=4), 0..=6),
    ) {
        let rows: Vec<(Vec<i64>, i64)> = raw
            .into_iter()
            .map(|(n, b)| {
                let n = n[..d].to_vec();
                // a normal vanishing mod p only makes sense as a loop
                let b = if n.iter().all(|x| x.rem_euclid(p as i64) == 0) { 0 } else { b };
                (n, b)
            })
            .collect();
        let a = modular(p, d, &rows);
        let t = tutte_subset(&a).unwrap();
        let order: Vec<usize> = (0..a.len()).rev().collect();
        prop_assert_eq!(&tutte_delcon(&a, DelconOptions::default()).unwrap().tutte, &t.tutte);
        prop_assert_eq!(&tutte_activity(&a, &order).unwrap().0.tutte, &t.tutte);
        // counting points of F_p^d gives the coboundary at X = p
        let cb = coboundary_transform(&t.tutte, t.rank).unwrap();
        let at_p = cb.substitute("X", &MultiPoly::constant(rat(p as i64))).unwrap().in_vars(&["Y"]);
        prop_assert_eq!(coboundary_at_own_prime(&a, 1 << 20).unwrap().in_vars(&["Y"]), at_p);
    }
}
