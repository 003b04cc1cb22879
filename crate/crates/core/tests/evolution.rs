mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use common::rng;
use tripartite::entanglement::{concurrence_sq_bipartition, concurrence_sq_pair, three_tangle};
use tripartite::evolution::{
    alpha_scan, case1_pair, case1_state, case1_tangle_closed_form, case2_pair, classify_trivial,
    geodesic_state, ghz_phase_family, time_average, EvolutionPair, Triviality,
};
use tripartite::sampling::{sample_pair_general, sample_pair_symmetric};
use tripartite::{PureState3Q, Qubit};

fn max_diff(a: &PureState3Q, b: &PureState3Q) -> f64 {
    a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

#[test]
fn geodesic_preserves_norm() {
    let mut g = rng(30);
    for theta in [FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4, PI] {
        for _ in 0..1000 {
            let pair = sample_pair_general(theta, &mut g).unwrap();
            for k in 0..100 {
                let xi = pair.xi_max() * k as f64 / 99.0;
                let s = geodesic_state(&pair, xi).unwrap();
                assert!((s.norm() - 1.0).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn geodesic_hits_both_endpoints() {
    let mut g = rng(31);
    for theta in [0.2, 1.0, 2.5, PI] {
        for _ in 0..200 {
            let pair = sample_pair_symmetric(theta, &mut g).unwrap();
            assert!(max_diff(&geodesic_state(&pair, 0.0).unwrap(), pair.initial()) < 1e-12);
            let end = geodesic_state(&pair, pair.xi_max()).unwrap();
            assert!(max_diff(&end, pair.final_state()) < 1e-12);
        }
    }
}

#[test]
fn case1_endpoint_averages() {
    let scan = alpha_scan(&[0.0, FRAC_PI_2], 64).unwrap();
    assert!((scan[0].1 - 0.7215).abs() < 5e-4, "{}", scan[0].1);
    assert!((scan[1].1 - 0.1667).abs() < 5e-4, "{}", scan[1].1);
    let direct = time_average(&case1_pair(0.0).unwrap(), three_tangle, 64).unwrap();
    assert_eq!(direct, scan[0].1);
}

#[test]
fn case2_average_is_one() {
    let avg = time_average(&case2_pair(), three_tangle, 64).unwrap();
    assert!((avg - 1.0).abs() < 1e-10);
}

#[test]
fn quadrature_agrees_with_riemann_sum() {
    // Midpoint rule with 10⁶ panels on the closed form as an independent oracle.
    let panels = 1_000_000;
    for alpha in [0.0, 0.3, 0.9, 1.3, FRAC_PI_2] {
        let h = FRAC_PI_2 / panels as f64;
        let riemann: f64 = (0..panels)
            .map(|k| case1_tangle_closed_form((k as f64 + 0.5) * h, alpha))
            .sum::<f64>()
            * h
            / FRAC_PI_2;
        let gauss = time_average(&case1_pair(alpha).unwrap(), three_tangle, 64).unwrap();
        assert!(
            (gauss - riemann).abs() < 1e-6,
            "alpha {alpha}: {gauss} vs {riemann}"
        );
    }
}

#[test]
fn closed_form_matches_generic_pipeline() {
    let mut worst: f64 = 0.0;
    for i in 0..50 {
        for j in 0..50 {
            let xi = FRAC_PI_2 * i as f64 / 49.0;
            let alpha = FRAC_PI_2 * j as f64 / 49.0;
            let generic = three_tangle(&case1_state(xi, alpha));
            worst = worst.max((generic - case1_tangle_closed_form(xi, alpha)).abs());
        }
    }
    assert!(worst < 1e-12, "{worst:e}");
}

#[test]
fn scan_peaks_at_ghz_target() {
    let alphas: Vec<f64> = (0..101).map(|k| FRAC_PI_2 * k as f64 / 100.0).collect();
    let scan = alpha_scan(&alphas, 64).unwrap();
    let (best, _) = scan
        .iter()
        .enumerate()
        .max_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
        .unwrap();
    assert_eq!(best, 0);
    assert!(scan.iter().all(|&(_, v)| v > 0.0));
}

#[test]
fn ghz_phase_family_needs_no_pairwise_entanglement() {
    let mut g = rng(32);
    use rand::Rng;
    for _ in 0..100 {
        let phi_a = g.random_range(-PI..PI);
        let phi_b = g.random_range(-PI..PI);
        let klm = [g.random(), g.random(), g.random()];
        let pair = ghz_phase_family(phi_a, phi_b, klm);
        assert!(pair.initial().inner_product(pair.final_state()).norm() < 1e-14);
        for k in 0..50 {
            let s = geodesic_state(&pair, FRAC_PI_2 * k as f64 / 49.0).unwrap();
            assert!((three_tangle(&s) - 1.0).abs() < 1e-10);
            assert!((concurrence_sq_bipartition(&s, Qubit::A) - 1.0).abs() < 1e-10);
            for (p, q) in [
                (Qubit::A, Qubit::B),
                (Qubit::A, Qubit::C),
                (Qubit::B, Qubit::C),
            ] {
                assert!(concurrence_sq_pair(&s, p, q).unwrap() < 1e-10);
            }
        }
    }
}

#[test]
fn genuine_orthogonal_evolutions_carry_tangle() {
    let mut g = rng(33);
    for _ in 0..2000 {
        for pair in [
            sample_pair_symmetric(PI, &mut g).unwrap(),
            sample_pair_general(PI, &mut g).unwrap(),
        ] {
            assert_eq!(pair.classify(), Triviality::Genuine);
            assert!(time_average(&pair, three_tangle, 64).unwrap() > 1e-12);
        }
    }
}

#[test]
fn spectator_evolution_can_avoid_tangle() {
    // |0⟩_A ⊗ Bell_BC → |0⟩_A ⊗ Ψ+_BC: a two-qubit evolution with a bystander.
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut i = [tripartite::Complex::new(0.0, 0.0); 8];
    let mut f = i;
    i[0b000] = h.into();
    i[0b011] = h.into();
    f[0b001] = h.into();
    f[0b010] = h.into();
    let pair =
        EvolutionPair::from_states(PureState3Q::new(i).unwrap(), PureState3Q::new(f).unwrap())
            .unwrap();
    assert_eq!(pair.classify(), Triviality::Spectator(Qubit::A));
    assert!(time_average(&pair, three_tangle, 64).unwrap() < 1e-14);
    assert_eq!(
        classify_trivial(pair.initial(), pair.initial()),
        Triviality::Identical
    );
}
