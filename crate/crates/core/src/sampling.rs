//! Haar-random unitaries and random brachistochrone endpoints with a fixed
//! overlap.
//!
//! A Haar unitary is drawn as the Q factor of a complex Ginibre matrix, with
//! the phases of R's diagonal moved into Q. Endpoint pairs are the images of
//! the fiducial vectors `(1, 0, …)` and `(cos θ/2, sin θ/2, 0, …)` under one
//! such unitary, so their overlap is exactly `cos(θ/2)` and the pair is
//! otherwise uniformly distributed.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::evolution::EvolutionPair;
use crate::numerics::{qr_decompose, CMatrix, Complex};
use crate::states::{PureState3Q, SymmetricCoeffs};

/// Name of the generator, recorded in output metadata.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng";

/// A reproducible random stream: a seed plus an independent stream id.
///
/// Two streams with equal `(seed, stream_id)` yield identical sequences;
/// different stream ids select disjoint ChaCha keystreams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RngStream {
    seed: u64,
    stream_id: u64,
}

impl RngStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        Self { seed, stream_id }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// A fresh generator positioned at the start of this stream.
    pub fn generator(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream_id);
        rng
    }
}

/// Standard complex normal: independent real and imaginary parts of variance 1/2.
fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Haar-distributed `dim × dim` unitary, `dim ∈ {4, 8}`.
pub fn haar_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<CMatrix> {
    if dim != 4 && dim != 8 {
        return Err(Error::UnsupportedDimension(dim));
    }
    let ginibre = CMatrix::from_fn(dim, dim, |_, _| complex_normal(rng));
    let (q, _) = qr_decompose(&ginibre)?;
    Ok(q)
}

fn fiducial_images(u: &CMatrix, theta: f64) -> (Vec<Complex>, Vec<Complex>) {
    let (s, c) = (0.5 * theta).sin_cos();
    let first = u.column(0);
    let second = u.column(1);
    let mixed = first
        .iter()
        .zip(&second)
        .map(|(a, b)| a * c + b * s)
        .collect();
    (first, mixed)
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta <= std::f64::consts::PI) {
        return Err(Error::OutOfRange {
            name: "theta",
            value: theta,
            range: "(0, π]",
        });
    }
    Ok(())
}

/// Random pair of permutation-symmetric states with overlap `cos(θ/2)`.
pub fn sample_pair_symmetric<R: Rng + ?Sized>(theta: f64, rng: &mut R) -> Result<EvolutionPair> {
    check_theta(theta)?;
    let u = haar_unitary(4, rng)?;
    let (i, f) = fiducial_images(&u, theta);
    let to_state = |v: Vec<Complex>| -> Result<PureState3Q> {
        let c: [Complex; 4] = v.try_into().expect("four coefficients");
        Ok(SymmetricCoeffs::from_normalized(c)?.embed())
    };
    EvolutionPair::new(to_state(i)?, to_state(f)?, theta)
}

/// Random pair of general three-qubit states with overlap `cos(θ/2)`.
pub fn sample_pair_general<R: Rng + ?Sized>(theta: f64, rng: &mut R) -> Result<EvolutionPair> {
    check_theta(theta)?;
    let u = haar_unitary(8, rng)?;
    let (i, f) = fiducial_images(&u, theta);
    let to_state = |v: Vec<Complex>| -> Result<PureState3Q> {
        PureState3Q::from_normalized(v.try_into().expect("eight amplitudes"))
    };
    EvolutionPair::new(to_state(i)?, to_state(f)?, theta)
}

/// Which family of endpoint pairs to draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ensemble {
    /// Both endpoints in the four-dimensional symmetric subspace.
    Symmetric,
    /// Endpoints anywhere in the eight-dimensional space.
    General,
}

impl Ensemble {
    pub fn sample_pair<R: Rng + ?Sized>(self, theta: f64, rng: &mut R) -> Result<EvolutionPair> {
        match self {
            Ensemble::Symmetric => sample_pair_symmetric(theta, rng),
            Ensemble::General => sample_pair_general(theta, rng),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Ensemble::Symmetric => "symmetric",
            Ensemble::General => "general",
        }
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Ensemble {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "symmetric" => Ok(Ensemble::Symmetric),
            "general" => Ok(Ensemble::General),
            other => Err(format!("unknown ensemble {other:?} (symmetric|general)")),
        }
    }
}
