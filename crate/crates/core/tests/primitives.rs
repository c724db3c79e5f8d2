mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use approx::assert_abs_diff_eq;
use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spherewidth::harness::{random_point, random_tangent};
use spherewidth::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn dist_matches_chord(a in unit(), b in unit()) {
        assert_abs_diff_eq!(dist(&a, &b), chord_dist(a.vector(), b.vector()), epsilon = 1e-12);
        prop_assert_eq!(dist(&a, &b), dist(&b, &a));
        prop_assert!((0.0..=PI).contains(&dist(&a, &b)));
    }

    #[test]
    fn triangle_inequality(a in unit(), b in unit(), c in unit()) {
        prop_assert!(dist(&a, &c) <= dist(&a, &b) + dist(&b, &c) + 1e-12);
    }

    #[test]
    fn lune_invariant_under_rotation(g in unit(), h in unit(), r in rotation()) {
        prop_assume!(g.dot(&h).abs() < 1.0 - 1e-6);
        let l = Lune::new(Hemisphere::new(g), Hemisphere::new(h)).unwrap();
        let lr = Lune::new(Hemisphere::new(g.rotated(&r)), Hemisphere::new(h.rotated(&r))).unwrap();
        assert_abs_diff_eq!(l.thickness(), lr.thickness(), epsilon = 1e-12);
        for which in [Bounding::First, Bounding::Second] {
            let c = l.boundary_semicircle(which).center.rotated(&r);
            prop_assert!(c.approx_eq(&lr.boundary_semicircle(which).center, 1e-12));
        }
    }

    #[test]
    fn semicircle_centers_in_lune(g in unit(), h in unit()) {
        prop_assume!(g.dot(&h).abs() < 1.0 - 1e-6);
        let l = Lune::new(Hemisphere::new(g), Hemisphere::new(h)).unwrap();
        for which in [Bounding::First, Bounding::Second] {
            let s = l.boundary_semicircle(which);
            assert_abs_diff_eq!(s.center.dot(&s.pole), 0.0, epsilon = 1e-12);
            prop_assert!(l.contains(&s.center, 1e-12));
            prop_assert!(l.contains(&s.point_at(FRAC_PI_2 * 0.99), 1e-12));
        }
    }
}

#[test]
fn lune_thickness_and_center_distance() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10_000 {
        let g = random_point(&mut rng);
        let h = g.toward(&random_tangent(&mut rng, &g), rng.gen_range(1e-3..PI - 1e-3));
        let l = Lune::new(Hemisphere::new(g), Hemisphere::new(h)).unwrap();
        assert_abs_diff_eq!(l.thickness() + dist(&g, &h), PI, epsilon = 1e-12);
        assert_abs_diff_eq!(l.thickness(), l.thickness_explicit(), epsilon = 1e-9);
    }
}

#[test]
fn arc_extremes_against_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let a = random_point(&mut rng);
        let b = a.toward(&random_tangent(&mut rng, &a), rng.gen_range(0.01..3.0));
        let q = random_point(&mut rng);
        let arc = Arc::new(a, b).unwrap();
        let grid: Vec<f64> =
            (0..=10_000).map(|k| chord_dist(q.vector(), &slerp(a.vector(), b.vector(), k as f64 / 1e4))).collect();
        let hi = grid.iter().cloned().fold(0.0, f64::max);
        let lo = grid.iter().cloned().fold(PI, f64::min);
        let (_, far) = farthest_on_arc(&q, &arc);
        let (_, near) = nearest_on_arc(&q, &arc);
        // grid spacing is at most 3e-4, so the grid is within 1e-7 near an
        // interior extremum and exact at endpoints
        assert!(far >= hi - 1e-12 && far <= hi + 1e-7, "{far} {hi}");
        assert!(near <= lo + 1e-12 && near >= lo - 1e-7, "{near} {lo}");
    }
}
