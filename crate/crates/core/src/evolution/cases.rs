//! Worked examples with known answers: the W̃ → (GHZ, W) family and the
//! GHZ-phase family along which τ stays at 1.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use super::{time_average_with, EvolutionPair, GaussLegendre, MIN_NODES};
use crate::entanglement::three_tangle;
use crate::error::{Error, Result};
use crate::numerics::Complex;
use crate::states::PureState3Q;

fn mix(a: &PureState3Q, wa: f64, b: &PureState3Q, wb: f64) -> [Complex; 8] {
    std::array::from_fn(|k| a.amplitudes()[k] * wa + b.amplitudes()[k] * wb)
}

/// `cos α |GHZ⟩ + sin α |W⟩`.
fn ghz_w_mixture(alpha: f64) -> PureState3Q {
    let (s, c) = alpha.sin_cos();
    PureState3Q::from_amplitudes_unchecked(mix(&PureState3Q::ghz(), c, &PureState3Q::w(), s))
}

/// The orthogonal pair `W̃ → cos α |GHZ⟩ + sin α |W⟩`.
pub fn case1_pair(alpha: f64) -> Result<EvolutionPair> {
    if !(0.0..=FRAC_PI_2).contains(&alpha) {
        return Err(Error::OutOfRange {
            name: "alpha",
            value: alpha,
            range: "[0, π/2]",
        });
    }
    EvolutionPair::new(PureState3Q::w_tilde(), ghz_w_mixture(alpha), PI)
}

/// `cos ξ |W̃⟩ + sin ξ (cos α |GHZ⟩ + sin α |W⟩)`, built directly rather than
/// through the generic geodesic.
pub fn case1_state(xi: f64, alpha: f64) -> PureState3Q {
    let (s, c) = xi.sin_cos();
    PureState3Q::from_amplitudes_unchecked(mix(
        &PureState3Q::w_tilde(),
        c,
        &ghz_w_mixture(alpha),
        s,
    ))
}

/// Closed-form three-tangle of [`case1_state`], valid for `ξ, α ∈ [0, π/2]`.
pub fn case1_tangle_closed_form(xi: f64, alpha: f64) -> f64 {
    let (sx, cx) = xi.sin_cos();
    let (sa, ca) = alpha.sin_cos();
    let k = 4.0 / (3.0 * 6f64.sqrt());
    4.0 * (0.25 * sx.powi(4) * ca.powi(4)
        - sx.powi(2) * cx.powi(2) * sa.powi(2) / 3.0
        - sx.powi(3) * cx * sa * ca.powi(2)
        + k * sx * cx.powi(3) * ca
        + k * sx.powi(4) * sa.powi(3) * ca)
        .abs()
}

/// Time-averaged three-tangle of the [`case1_pair`] evolution for each α.
pub fn alpha_scan(alphas: &[f64], nodes: usize) -> Result<Vec<(f64, f64)>> {
    if nodes < MIN_NODES {
        return Err(Error::OutOfRange {
            name: "quadrature nodes",
            value: nodes as f64,
            range: "[16, ∞)",
        });
    }
    let rule = GaussLegendre::new(nodes)?;
    alphas
        .iter()
        .map(|&alpha| {
            let pair = case1_pair(alpha)?;
            Ok((alpha, time_average_with(&pair, three_tangle, &rule)?))
        })
        .collect()
}

/// `(|000⟩ − i|111⟩)/√2 → (i|000⟩ − |111⟩)/√2`.
pub fn case2_pair() -> EvolutionPair {
    ghz_phase_family(0.0, FRAC_PI_2, [false, false, false])
}

/// The pair `(e^{iφ_A}|klm⟩ − e^{iφ_B}|k̄l̄m̄⟩)/√2 → i(e^{iφ_A}|klm⟩ + e^{iφ_B}|k̄l̄m̄⟩)/√2`,
/// orthogonal by construction. `klm` lists the bits for qubits A, B, C.
pub fn ghz_phase_family(phi_a: f64, phi_b: f64, klm: [bool; 3]) -> EvolutionPair {
    let idx = klm
        .iter()
        .fold(0usize, |acc, &bit| (acc << 1) | usize::from(bit));
    let flipped = idx ^ 0b111;
    let ea = Complex::from_polar(FRAC_1_SQRT_2, phi_a);
    let eb = Complex::from_polar(FRAC_1_SQRT_2, phi_b);
    let i = Complex::new(0.0, 1.0);
    let mut initial = [Complex::new(0.0, 0.0); 8];
    let mut target = [Complex::new(0.0, 0.0); 8];
    initial[idx] = ea;
    initial[flipped] = -eb;
    target[idx] = i * ea;
    target[flipped] = i * eb;
    EvolutionPair::new(
        PureState3Q::from_amplitudes_unchecked(initial),
        PureState3Q::from_amplitudes_unchecked(target),
        PI,
    )
    .expect("family is orthogonal by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entanglement::{concurrence_sq_bipartition, concurrence_sq_pair};
    use crate::evolution::geodesic_state;
    use crate::states::Qubit;

    #[test]
    fn closed_form_endpoints() {
        for alpha in [0.0, 0.4, 1.2, FRAC_PI_2] {
            assert_eq!(case1_tangle_closed_form(0.0, alpha), 0.0);
        }
        assert!((case1_tangle_closed_form(FRAC_PI_2, 0.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn case1_state_matches_geodesic() {
        let pair = case1_pair(0.7).unwrap();
        for xi in [0.0, 0.3, 1.0, FRAC_PI_2] {
            let a = geodesic_state(&pair, xi).unwrap();
            let b = case1_state(xi, 0.7);
            let d = a
                .amplitudes()
                .iter()
                .zip(b.amplitudes())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            assert!(d < 1e-15);
        }
    }

    #[test]
    fn case2_is_eq14_pair() {
        let pair = case2_pair();
        let h = FRAC_1_SQRT_2;
        let i = pair.initial().amplitudes();
        let f = pair.final_state().amplitudes();
        assert!((i[0] - Complex::new(h, 0.0)).norm() < 1e-15);
        assert!((i[7] - Complex::new(0.0, -h)).norm() < 1e-15);
        assert!((f[0] - Complex::new(0.0, h)).norm() < 1e-15);
        assert!((f[7] - Complex::new(-h, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn family_is_orthogonal_and_keeps_pure_tangle() {
        let pair = ghz_phase_family(0.3, -2.1, [true, false, true]);
        assert!(pair.initial().inner_product(pair.final_state()).norm() < 1e-14);
        for step in 0..=10 {
            let s = geodesic_state(&pair, FRAC_PI_2 * step as f64 / 10.0).unwrap();
            assert!((three_tangle(&s) - 1.0).abs() < 1e-12);
            assert!((concurrence_sq_bipartition(&s, Qubit::A) - 1.0).abs() < 1e-12);
            assert!(concurrence_sq_pair(&s, Qubit::A, Qubit::B).unwrap() < 1e-12);
        }
    }

    #[test]
    fn scan_rejects_bad_input() {
        assert!(alpha_scan(&[0.0], 8).is_err());
        assert!(alpha_scan(&[-0.1], 64).is_err());
        assert!(alpha_scan(&[2.0], 64).is_err());
    }
}
