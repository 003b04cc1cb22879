//! Three-qubit pure states in the computational basis and in the
//! permutation-symmetric subspace.
//!
//! Amplitudes are stored as `a_ijk` for `|ijk⟩` in lexicographic order
//! `|000⟩, |001⟩, …, |111⟩`. Qubit A is the most significant bit, so the
//! index of `|ijk⟩` is `4i + 2j + k`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numerics::{CMatrix, Complex};
use crate::tolerance::TOL;

const ZERO: Complex = Complex::new(0.0, 0.0);
const FRAC_1_SQRT_3: f64 = 0.577_350_269_189_625_8;

/// One of the three qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Qubit {
    A,
    B,
    C,
}

impl Qubit {
    pub const ALL: [Qubit; 3] = [Qubit::A, Qubit::B, Qubit::C];

    /// Position 0, 1, 2 for A, B, C.
    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    /// Bit mask of this qubit inside an amplitude index.
    #[inline]
    pub fn mask(self) -> usize {
        4 >> self.index()
    }

    /// The two other qubits, in label order.
    pub fn others(self) -> [Qubit; 2] {
        match self {
            Qubit::A => [Qubit::B, Qubit::C],
            Qubit::B => [Qubit::A, Qubit::C],
            Qubit::C => [Qubit::A, Qubit::B],
        }
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Qubit::A => "A",
            Qubit::B => "B",
            Qubit::C => "C",
        })
    }
}

/// A normalized three-qubit pure state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureState3Q {
    amp: [Complex; 8],
}

impl PureState3Q {
    /// Normalizes `amp` into a state. Fails on a (near-)zero vector.
    pub fn new(amp: [Complex; 8]) -> Result<Self> {
        if amp.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = norm_of(&amp);
        if norm <= TOL.min_norm {
            return Err(Error::ZeroVector(norm));
        }
        Ok(Self {
            amp: amp.map(|z| z / norm),
        })
    }

    /// Accepts `amp` as-is, provided it is already normalized within tolerance.
    pub fn from_normalized(amp: [Complex; 8]) -> Result<Self> {
        let norm = norm_of(&amp);
        if !norm.is_finite() || (norm - 1.0).abs() > TOL.norm {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { amp })
    }

    pub(crate) fn from_amplitudes_unchecked(amp: [Complex; 8]) -> Self {
        debug_assert!((norm_of(&amp) - 1.0).abs() < 1e-8, "norm {}", norm_of(&amp));
        Self { amp }
    }

    /// Computational basis state `|index⟩` (`index` in `0..8`).
    pub fn basis(index: usize) -> Self {
        let mut amp = [ZERO; 8];
        amp[index] = Complex::new(1.0, 0.0);
        Self { amp }
    }

    /// `(|000⟩ + |111⟩)/√2`
    pub fn ghz() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut amp = [ZERO; 8];
        amp[0b000] = Complex::new(h, 0.0);
        amp[0b111] = Complex::new(h, 0.0);
        Self { amp }
    }

    /// `(|001⟩ + |010⟩ + |100⟩)/√3`
    pub fn w() -> Self {
        let mut amp = [ZERO; 8];
        for i in [0b001, 0b010, 0b100] {
            amp[i] = Complex::new(FRAC_1_SQRT_3, 0.0);
        }
        Self { amp }
    }

    /// The spin-flipped W state `(|110⟩ + |101⟩ + |011⟩)/√3`.
    pub fn w_tilde() -> Self {
        let mut amp = [ZERO; 8];
        for i in [0b110, 0b101, 0b011] {
            amp[i] = Complex::new(FRAC_1_SQRT_3, 0.0);
        }
        Self { amp }
    }

    /// Product state `|a⟩ ⊗ |b⟩ ⊗ |c⟩` of single-qubit vectors (normalized on the way).
    pub fn product(a: [Complex; 2], b: [Complex; 2], c: [Complex; 2]) -> Result<Self> {
        let mut amp = [ZERO; 8];
        for (idx, z) in amp.iter_mut().enumerate() {
            *z = a[(idx >> 2) & 1] * b[(idx >> 1) & 1] * c[idx & 1];
        }
        Self::new(amp)
    }

    #[inline]
    pub fn amplitudes(&self) -> &[Complex; 8] {
        &self.amp
    }

    /// `a_ijk` for bits `i, j, k ∈ {0, 1}`.
    #[inline]
    pub fn amp(&self, i: usize, j: usize, k: usize) -> Complex {
        self.amp[(i << 2) | (j << 1) | k]
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner_product(&self, other: &Self) -> Complex {
        self.amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        norm_of(&self.amp)
    }

    /// Rescales to unit norm (a no-op up to rounding for a valid state).
    pub fn normalize(&self) -> Result<Self> {
        Self::new(self.amp)
    }

    /// Multiplies every amplitude by `e^{iφ}`.
    pub fn with_global_phase(&self, phi: f64) -> Self {
        let p = Complex::from_polar(1.0, phi);
        Self {
            amp: self.amp.map(|z| z * p),
        }
    }

    /// Relabels qubits: qubit `q` of `self` becomes qubit `perm[q]` of the result.
    pub fn permute(&self, perm: [Qubit; 3]) -> Self {
        let mut amp = [ZERO; 8];
        for (idx, &z) in self.amp.iter().enumerate() {
            let mut out = 0;
            for q in Qubit::ALL {
                if idx & q.mask() != 0 {
                    out |= perm[q.index()].mask();
                }
            }
            amp[out] = z;
        }
        Self { amp }
    }

    /// Applies a 2×2 unitary to one qubit.
    pub fn apply_single_qubit(&self, qubit: Qubit, u: &CMatrix) -> Result<Self> {
        if u.rows() != 2 || u.cols() != 2 {
            return Err(Error::BadShape {
                rows: 2,
                cols: 2,
                entries: u.rows() * u.cols(),
            });
        }
        let m = qubit.mask();
        let mut amp = self.amp;
        for idx in (0..8).filter(|i| i & m == 0) {
            let lo = self.amp[idx];
            let hi = self.amp[idx | m];
            amp[idx] = u[(0, 0)] * lo + u[(0, 1)] * hi;
            amp[idx | m] = u[(1, 0)] * lo + u[(1, 1)] * hi;
        }
        Self::from_normalized(amp)
    }

    /// Text form: eight whitespace-separated `re,im` pairs in amplitude order.
    pub fn to_text(&self) -> String {
        self.amp
            .iter()
            .map(|z| format!("{:e},{:e}", z.re, z.im))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn norm_of(amp: &[Complex]) -> f64 {
    amp.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

impl fmt::Display for PureState3Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Why a state string was refused. `field` names the offending part.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{field}: {reason}")]
pub struct ParseStateError {
    pub field: String,
    pub reason: String,
}

impl FromStr for PureState3Q {
    type Err = ParseStateError;

    /// Accepts `ghz`, `w`, `wtilde`, or eight `re,im` pairs. The amplitudes
    /// are normalized after parsing.
    fn from_str(s: &str) -> Result<Self, ParseStateError> {
        let trimmed = s.trim();
        match trimmed.to_ascii_lowercase().as_str() {
            "ghz" => return Ok(Self::ghz()),
            "w" => return Ok(Self::w()),
            "wtilde" | "w~" => return Ok(Self::w_tilde()),
            _ => {}
        }
        let pairs: Vec<&str> = trimmed.split_whitespace().collect();
        if pairs.len() != 8 {
            return Err(ParseStateError {
                field: "amplitudes".into(),
                reason: format!(
                    "expected 8 re,im pairs or one of ghz|w|wtilde, found {} tokens",
                    pairs.len()
                ),
            });
        }
        let mut amp = [ZERO; 8];
        for (idx, pair) in pairs.iter().enumerate() {
            let label = format!("amplitude {idx} (|{idx:03b}⟩)");
            let (re, im) = pair.split_once(',').ok_or_else(|| ParseStateError {
                field: label.clone(),
                reason: format!("expected re,im but found {pair:?}"),
            })?;
            let parse = |part: &str, what: &str| {
                part.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| ParseStateError {
                        field: format!("{label} {what} part"),
                        reason: format!("not a finite number: {part:?}"),
                    })
            };
            amp[idx] = Complex::new(parse(re, "real")?, parse(im, "imaginary")?);
        }
        Self::new(amp).map_err(|e| ParseStateError {
            field: "amplitudes".into(),
            reason: e.to_string(),
        })
    }
}

/// Coordinates over the symmetric basis
/// `{|000⟩, (|001⟩+|010⟩+|100⟩)/√3, (|110⟩+|101⟩+|011⟩)/√3, |111⟩}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricCoeffs {
    c: [Complex; 4],
}

impl SymmetricCoeffs {
    /// Normalizes `c`; fails on a near-zero vector.
    pub fn new(c: [Complex; 4]) -> Result<Self> {
        if c.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = norm_of(&c);
        if norm <= TOL.min_norm {
            return Err(Error::ZeroVector(norm));
        }
        Ok(Self {
            c: c.map(|z| z / norm),
        })
    }

    pub fn from_normalized(c: [Complex; 4]) -> Result<Self> {
        let norm = norm_of(&c);
        if !norm.is_finite() || (norm - 1.0).abs() > TOL.norm {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { c })
    }

    pub fn coeffs(&self) -> &[Complex; 4] {
        &self.c
    }

    pub fn inner_product(&self, other: &Self) -> Complex {
        self.c.iter().zip(&other.c).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn norm(&self) -> f64 {
        norm_of(&self.c)
    }

    /// The same state written over all eight amplitudes.
    pub fn embed(&self) -> PureState3Q {
        embed_symmetric(self)
    }
}

/// Maps symmetric-basis coordinates to the full amplitude vector. Isometric.
pub fn embed_symmetric(s: &SymmetricCoeffs) -> PureState3Q {
    let [c1, c2, c3, c4] = s.c;
    let one = c2 * FRAC_1_SQRT_3;
    let two = c3 * FRAC_1_SQRT_3;
    PureState3Q {
        amp: [c1, one, one, two, one, two, two, c4],
    }
}
