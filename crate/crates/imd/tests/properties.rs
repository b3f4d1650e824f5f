//! Property tests for the structural invariants: feasibility of mirror
//! points, conjugate domination, norm duality, projection behavior, and
//! schedule/bound monotonicity under arbitrary inputs.

use proptest::prelude::*;

use imd::discrete::{gap_bound, BoundParams, ImdState, Schedule};
use imd::geometry::{FeasibleSet, MirrorMap, NormPair};

fn maps() -> Vec<MirrorMap> {
    vec![
        MirrorMap::entropic_simplex(4),
        MirrorMap::euclidean_box(vec![-0.5, -1.0, 0.0, -2.0], vec![1.5, 1.0, 2.0, -1.0]),
        MirrorMap::euclidean_ball(vec![0.3, -0.3, 0.0, 1.0], 1.2),
    ]
}

proptest! {
    #[test]
    fn mirror_points_are_always_feasible(
        log_beta in -3.0..3.0f64,
        zeta in prop::collection::vec(-50.0..50.0f64, 4),
    ) {
        let beta = 10.0_f64.powf(log_beta);
        for map in maps() {
            let p = map.primal_point(beta, &zeta).unwrap();
            prop_assert!(map.set().violation(&p) <= 1e-12);
        }
    }

    #[test]
    fn conjugate_dominates_every_feasible_probe(
        beta in 0.05..20.0f64,
        zeta in prop::collection::vec(-10.0..10.0f64, 4),
        raw in prop::collection::vec(-3.0..3.0f64, 4),
    ) {
        for map in maps() {
            let x = map.set().project(&raw);
            let w = map.conjugate(beta, &zeta).unwrap();
            let obj = -zeta.iter().zip(&x).map(|(z, xi)| z * xi).sum::<f64>()
                - beta * map.prox().value(&x);
            prop_assert!(w >= obj - 1e-10, "conjugate {w} below objective {obj}");
        }
    }

    #[test]
    fn norm_pairs_satisfy_hoelder(
        zeta in prop::collection::vec(-5.0..5.0f64, 6),
        x in prop::collection::vec(-5.0..5.0f64, 6),
    ) {
        let inner: f64 = zeta.iter().zip(&x).map(|(a, b)| a * b).sum();
        for pair in [NormPair::L2L2, NormPair::L1Linf] {
            prop_assert!(inner.abs() <= pair.dual(&zeta) * pair.primal(&x) + 1e-12);
        }
    }

    #[test]
    fn projection_is_idempotent_and_feasible(
        raw in prop::collection::vec(-10.0..10.0f64, 5),
    ) {
        for set in [
            FeasibleSet::simplex(5),
            FeasibleSet::hyper_box(vec![-1.0; 5], vec![1.0; 5]),
            FeasibleSet::ball(vec![0.1; 5], 0.7),
        ] {
            let p = set.project(&raw);
            prop_assert!(set.contains(&p));
            let q = set.project(&p);
            let drift = p.iter().zip(&q).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            prop_assert!(drift <= 1e-12);
        }
    }

    #[test]
    fn canonical_and_general_steps_agree(
        beta0 in 0.1..5.0f64,
        steps in prop::collection::vec(prop::collection::vec(-2.0..2.0f64, 3), 1..20),
    ) {
        let map = MirrorMap::entropic_simplex(3);
        let schedule = Schedule::canonical(beta0).unwrap();
        let mut a = ImdState::init(&map, &schedule).unwrap();
        let mut b = a.clone();
        for u in &steps {
            a = a.step_general(u, &schedule, &map).unwrap();
            b = b.step_canonical(u, beta0, &map).unwrap();
            for (x, y) in a.x.iter().zip(&b.x) {
                prop_assert!((x - y).abs() <= 1e-13);
            }
        }
    }

    #[test]
    fn gap_bound_is_monotone_and_positive(
        beta0 in 0.01..100.0f64,
        v in 0.01..50.0f64,
        l in 0.01..50.0f64,
        t in 1usize..100_000,
    ) {
        let params = BoundParams::new(beta0, v, v, l, 1.0).unwrap();
        let now = gap_bound(t, &params);
        let later = gap_bound(t + 1, &params);
        prop_assert!(now > 0.0);
        prop_assert!(later < now);
    }
}
