#![allow(dead_code)]

use rand::Rng;
use rand_distr::StandardNormal;
use tripartite::numerics::{CMatrix, Complex};
use tripartite::sampling::RngStream;
use tripartite::PureState3Q;

pub type TestRng = rand_chacha::ChaCha8Rng;

pub fn rng(stream: u64) -> TestRng {
    RngStream::new(0x7e57, stream).generator()
}

pub fn gaussian<R: Rng>(rng: &mut R) -> Complex {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn random_matrix<R: Rng>(n: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| gaussian(rng))
}

/// Uniformly random pure state (normalized complex Gaussian vector).
pub fn random_state<R: Rng>(rng: &mut R) -> PureState3Q {
    PureState3Q::new(std::array::from_fn(|_| gaussian(rng))).unwrap()
}

/// Random 2×2 unitary from a normalized Gaussian column pair (Gram–Schmidt).
pub fn random_qubit_unitary<R: Rng>(rng: &mut R) -> CMatrix {
    let a = [gaussian(rng), gaussian(rng)];
    let na = (a[0].norm_sqr() + a[1].norm_sqr()).sqrt();
    let u0 = [a[0] / na, a[1] / na];
    let phase = Complex::from_polar(1.0, rng.random::<f64>() * std::f64::consts::TAU);
    // The orthogonal complement of (x, y) is (-ȳ, x̄) up to phase.
    let u1 = [-u0[1].conj() * phase, u0[0].conj() * phase];
    CMatrix::from_rows(&[[u0[0], u1[0]], [u0[1], u1[1]]])
}

/// Largest gap between the empirical CDF of `samples` and `cdf`.
pub fn ks_statistic(samples: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    samples.sort_by(f64::total_cmp);
    let n = samples.len() as f64;
    samples
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            (f - i as f64 / n).abs().max(((i + 1) as f64 / n - f).abs())
        })
        .fold(0.0, f64::max)
}

/// Two-sample Kolmogorov–Smirnov statistic.
pub fn ks_two_sample(a: &mut [f64], b: &mut [f64]) -> f64 {
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (mut i, mut j, mut d) = (0usize, 0usize, 0.0f64);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// Asymptotic 1% critical value coefficient of the KS distribution.
pub const KS_1PCT: f64 = 1.628;
