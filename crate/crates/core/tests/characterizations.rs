mod common;

use dmr_core::analysis::{
    classify, girth_from_profile, is_distance_mean_regular, omega_characterization, super_regularity,
};
use dmr_core::graph::catalog::catalog;
use dmr_core::graph::{compute_distances, encode_graph6, parse_graph6};
use dmr_core::partition::Tolerances;
use dmr_core::Error;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn super_regular_graph_that_is_not_mean_regular() {
    // n = 7, 4-regular, diameter 2
    let dd = compute_distances(&parse_graph6("F]nJg").unwrap()).unwrap();
    assert!(super_regularity(&dd).super_regular);
    assert!(!is_distance_mean_regular(&dd).unwrap().dmr);
    let omega = omega_characterization(&dd, None).unwrap();
    assert!(!omega.well_defined && !omega.diagonal_well_defined);
    let c = classify(&dd, Tolerances::default()).unwrap();
    assert!(c.super_regular && !c.distance_mean_regular && !c.distance_regular);
}

#[test]
fn random_regular_graphs_agree_on_every_route() {
    let mut rng = StdRng::seed_from_u64(7);
    let (mut tried, mut separated) = (0, 0);
    while tried < 150 {
        let n = rng.gen_range(6..=11);
        let k = rng.gen_range(3..n - 1);
        if n * k % 2 == 1 {
            continue;
        }
        let Some(g) = common::random_regular(n, k, &mut rng) else {
            continue;
        };
        let Ok(dd) = compute_distances(&g) else {
            continue;
        };
        tried += 1;
        let c = classify(&dd, Tolerances::default()).unwrap_or_else(|e| panic!("{}: {e}", encode_graph6(&g)));
        assert!(c.characterizations.agree() && c.characterizations.adjacency_quotient == c.distance_mean_regular);
        separated += (c.super_regular && !c.distance_mean_regular) as usize;
    }
    assert!(separated > 0, "sample never separated super-regularity from mean-regularity");
}

#[test]
fn even_girth_rule_fails_on_petersen() {
    let dd = compute_distances(&catalog("petersen").unwrap()).unwrap();
    let p = is_distance_mean_regular(&dd).unwrap().profile.unwrap();
    assert!(matches!(girth_from_profile(&p, &dd), Err(Error::Consistency(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classification_chain(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = if seed % 3 == 0 {
            common::random_circulant(12, &mut rng)
        } else {
            common::random_connected(2, 9, &mut rng)
        };
        let c = classify(&compute_distances(&g).unwrap(), Tolerances::default()).unwrap();
        prop_assert!(!c.distance_regular || c.distance_mean_regular);
        prop_assert!(!c.distance_mean_regular || c.super_regular);
        prop_assert!(c.characterizations.agree());
    }
}
