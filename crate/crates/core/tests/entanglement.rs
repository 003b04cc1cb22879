mod common;

use common::{random_qubit_unitary, random_state, rng};
use proptest::prelude::*;
use tripartite::entanglement::{
    concurrence_pair, concurrence_sq_bipartition, concurrence_sq_pair, reduced_density,
    tangle_decomposition, three_tangle,
};
use tripartite::numerics::{matmul, CMatrix, Complex};
use tripartite::{PureState3Q, Qubit};

fn permutations() -> [[Qubit; 3]; 6] {
    use Qubit::*;
    [
        [A, B, C],
        [A, C, B],
        [B, A, C],
        [B, C, A],
        [C, A, B],
        [C, B, A],
    ]
}

/// `ρ_AB[(a b), (a' b')] = Σ_c ⟨a b c|ψ⟩⟨ψ|a' b' c⟩`, summed explicitly.
fn rho_ab_oracle(s: &PureState3Q) -> CMatrix {
    CMatrix::from_fn(4, 4, |r, c| {
        let (a, b) = (r >> 1, r & 1);
        let (a2, b2) = (c >> 1, c & 1);
        let mut acc = Complex::new(0.0, 0.0);
        for env in 0..2 {
            acc += s.amp(a, b, env) * s.amp(a2, b2, env).conj();
        }
        acc
    })
}

/// Roots of a monic polynomial given by descending coefficients, Durand–Kerner.
fn durand_kerner(coeffs: &[Complex]) -> Vec<Complex> {
    let n = coeffs.len() - 1;
    let eval = |z: Complex| {
        coeffs
            .iter()
            .fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c)
    };
    let seed = Complex::new(0.4, 0.9);
    let mut roots: Vec<Complex> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        for i in 0..n {
            let mut denom = Complex::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
        }
    }
    roots
}

#[test]
fn reduced_w_matches_environment_sum() {
    let w = PureState3Q::w();
    let rho = reduced_density(&w, &[Qubit::A, Qubit::B]).unwrap();
    assert!(rho.matrix().max_abs_diff(&rho_ab_oracle(&w)) < 1e-14);

    let mut g = rng(20);
    for _ in 0..100 {
        let s = random_state(&mut g);
        let rho = reduced_density(&s, &[Qubit::B, Qubit::A]).unwrap();
        assert!(rho.matrix().max_abs_diff(&rho_ab_oracle(&s)) < 1e-14);
    }
}

#[test]
fn w_pair_concurrence_from_characteristic_polynomial() {
    // Oracle: characteristic polynomial of ρ ρ̃ from its trace powers
    // (Newton identities), roots by Durand–Kerner.
    let rho = rho_ab_oracle(&PureState3Q::w());
    let y = CMatrix::from_rows(&[
        [Complex::new(0.0, 0.0), Complex::new(0.0, -1.0)],
        [Complex::new(0.0, 1.0), Complex::new(0.0, 0.0)],
    ]);
    let yy = y.kron(&y);
    let r = matmul(
        &rho,
        &matmul(&matmul(&yy, &rho.conj()).unwrap(), &yy).unwrap(),
    )
    .unwrap();
    let mut power = CMatrix::identity(4);
    let mut p = Vec::new();
    for _ in 0..4 {
        power = matmul(&power, &r).unwrap();
        p.push(power.trace());
    }
    let e1 = p[0];
    let e2 = (e1 * p[0] - p[1]) / 2.0;
    let e3 = (e2 * p[0] - e1 * p[1] + p[2]) / 3.0;
    let e4 = (e3 * p[0] - e2 * p[1] + e1 * p[2] - p[3]) / 4.0;
    let roots = durand_kerner(&[Complex::new(1.0, 0.0), -e1, e2, -e3, e4]);
    let mut lambdas: Vec<f64> = roots.iter().map(|z| z.re.max(0.0).sqrt()).collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    let oracle = (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0);
    assert!((oracle - 2.0 / 3.0).abs() < 1e-6, "oracle {oracle}");

    let rho_ab = reduced_density(&PureState3Q::w(), &[Qubit::A, Qubit::B]).unwrap();
    let c = concurrence_pair(&rho_ab).unwrap();
    assert!((c - 2.0 / 3.0).abs() < 1e-12, "{c}");
}

#[test]
fn monogamy_holds_on_random_states() {
    let mut g = rng(21);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let s = random_state(&mut g);
        for cut in Qubit::ALL {
            let d = tangle_decomposition(&s, cut).unwrap();
            worst = worst.max(d.residual().abs());
        }
    }
    assert!(worst < 1e-8, "worst monogamy residual {worst:e}");
}

#[test]
fn tangle_is_permutation_invariant() {
    let mut g = rng(22);
    for _ in 0..2000 {
        let s = random_state(&mut g);
        let t = three_tangle(&s);
        for perm in permutations() {
            assert!((three_tangle(&s.permute(perm)) - t).abs() < 1e-12);
        }
    }
}

#[test]
fn measures_are_local_unitary_invariant() {
    let mut g = rng(23);
    for _ in 0..500 {
        let s = random_state(&mut g);
        let mut t = s;
        for q in Qubit::ALL {
            t = t
                .apply_single_qubit(q, &random_qubit_unitary(&mut g))
                .unwrap();
        }
        assert!((three_tangle(&s) - three_tangle(&t)).abs() < 1e-10);
        for (p, q) in [
            (Qubit::A, Qubit::B),
            (Qubit::A, Qubit::C),
            (Qubit::B, Qubit::C),
        ] {
            let before = concurrence_pair(&reduced_density(&s, &[p, q]).unwrap()).unwrap();
            let after = concurrence_pair(&reduced_density(&t, &[p, q]).unwrap()).unwrap();
            assert!((before - after).abs() < 1e-10, "{before} vs {after}");
        }
        for q in Qubit::ALL {
            assert!(
                (concurrence_sq_bipartition(&s, q) - concurrence_sq_bipartition(&t, q)).abs()
                    < 1e-10
            );
        }
    }
}

#[test]
fn measures_stay_in_unit_interval() {
    let mut g = rng(24);
    for _ in 0..2000 {
        let s = random_state(&mut g);
        let mut values = vec![three_tangle(&s)];
        for q in Qubit::ALL {
            values.push(concurrence_sq_bipartition(&s, q));
        }
        values.push(concurrence_sq_pair(&s, Qubit::A, Qubit::B).unwrap());
        values.push(concurrence_sq_pair(&s, Qubit::B, Qubit::C).unwrap());
        assert!(
            values.iter().all(|v| (0.0..=1.0 + 1e-10).contains(v)),
            "{values:?}"
        );
    }
}

fn state_strategy() -> impl Strategy<Value = PureState3Q> {
    prop::array::uniform16(-1.0f64..1.0)
        .prop_filter("non-zero", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-3)
        .prop_map(|v| {
            PureState3Q::new(std::array::from_fn(|k| {
                Complex::new(v[2 * k], v[2 * k + 1])
            }))
            .unwrap()
        })
}

proptest! {
    #[test]
    fn decomposition_terms_add_up(s in state_strategy()) {
        for cut in Qubit::ALL {
            let d = tangle_decomposition(&s, cut).unwrap();
            prop_assert!(d.residual().abs() < 1e-8);
        }
    }

    #[test]
    fn relabeling_preserves_tangle(s in state_strategy(), k in 0usize..6) {
        let t = s.permute(permutations()[k]);
        prop_assert!((three_tangle(&s) - three_tangle(&t)).abs() < 1e-12);
    }
}
