//! Entanglement measures of three-qubit pure states: the three-tangle from
//! the amplitude hyperdeterminant, Wootters concurrence of two-qubit
//! reductions, and the one-versus-two bipartition concurrence.
//!
//! The three are computed along unrelated code paths, and the monogamy
//! identity `C²_{A(BC)} = C²_AB + C²_AC + τ` ties them together; see
//! [`tangle_decomposition`].

use crate::error::{Error, Result};
use crate::numerics::{eigenvalues, matmul, CMatrix, Complex};
use crate::states::{PureState3Q, Qubit};
use crate::tolerance::TOL;

/// Density matrix of one or two of the three qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: CMatrix,
    qubits: Vec<Qubit>,
}

impl DensityMatrix {
    /// Validates a 2×2 or 4×4 matrix as a density matrix of `qubits`:
    /// Hermitian, unit trace and positive semidefinite within tolerance.
    pub fn new(mat: CMatrix, qubits: Vec<Qubit>) -> Result<Self> {
        let dim = 1usize << qubits.len();
        if qubits.is_empty() || qubits.len() > 2 || !mat.is_square() || mat.rows() != dim {
            return Err(Error::InvalidDensity(format!(
                "{}x{} matrix for {} qubit(s)",
                mat.rows(),
                mat.cols(),
                qubits.len()
            )));
        }
        if qubits.len() == 2 && qubits[0] == qubits[1] {
            return Err(Error::InvalidSelector(format!(
                "qubit {} repeated",
                qubits[0]
            )));
        }
        let herm = mat.hermitian_defect();
        if herm > TOL.hermitian {
            return Err(Error::InvalidDensity(format!(
                "not Hermitian (defect {herm:e})"
            )));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > TOL.trace || tr.im.abs() > TOL.trace {
            return Err(Error::InvalidDensity(format!("trace {tr} != 1")));
        }
        let lowest = eigenvalues(&mat)?
            .into_iter()
            .map(|z| z.re)
            .fold(f64::INFINITY, f64::min);
        if lowest < -TOL.negative_dust {
            return Err(Error::InvalidDensity(format!(
                "negative eigenvalue {lowest:e}"
            )));
        }
        Ok(Self { mat, qubits })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    /// Qubits described, in label order.
    pub fn qubits(&self) -> &[Qubit] {
        &self.qubits
    }
}

/// Clips a squared measure into `[0, 1]`, refusing values that are off by
/// more than rounding.
fn clamp_unit(value: f64, what: &'static str) -> Result<f64> {
    if !value.is_finite() || !(-TOL.measure_range..=1.0 + TOL.measure_range).contains(&value) {
        return Err(Error::Consistency { what, value });
    }
    Ok(value.clamp(0.0, 1.0))
}

/// Partial trace of `|s⟩⟨s|` onto the qubits in `keep` (one or two of them).
pub fn reduced_density(s: &PureState3Q, keep: &[Qubit]) -> Result<DensityMatrix> {
    let mut kept: Vec<Qubit> = keep.to_vec();
    kept.sort();
    kept.dedup();
    if kept.len() != keep.len() {
        return Err(Error::InvalidSelector("repeated qubit".into()));
    }
    if kept.is_empty() || kept.len() == 3 {
        return Err(Error::InvalidSelector(format!(
            "must keep one or two qubits, got {}",
            kept.len()
        )));
    }
    let traced: Vec<Qubit> = Qubit::ALL
        .into_iter()
        .filter(|q| !kept.contains(q))
        .collect();
    let dim = 1usize << kept.len();
    let amp = s.amplitudes();
    let full_index = |sub: usize, env: usize| {
        let mut idx = 0;
        for (pos, q) in kept.iter().enumerate() {
            if sub >> (kept.len() - 1 - pos) & 1 == 1 {
                idx |= q.mask();
            }
        }
        for (pos, q) in traced.iter().enumerate() {
            if env >> (traced.len() - 1 - pos) & 1 == 1 {
                idx |= q.mask();
            }
        }
        idx
    };
    let mat = CMatrix::from_fn(dim, dim, |r, c| {
        (0..1usize << traced.len())
            .map(|env| amp[full_index(r, env)] * amp[full_index(c, env)].conj())
            .sum()
    });
    Ok(DensityMatrix { mat, qubits: kept })
}

/// `σ_y ⊗ σ_y` in the two-qubit computational basis.
fn spin_flip() -> CMatrix {
    let mut m = CMatrix::zeros(4, 4);
    m[(0, 3)] = Complex::new(-1.0, 0.0);
    m[(1, 2)] = Complex::new(1.0, 0.0);
    m[(2, 1)] = Complex::new(1.0, 0.0);
    m[(3, 0)] = Complex::new(-1.0, 0.0);
    m
}

/// Wootters concurrence `max(0, λ₁ − λ₂ − λ₃ − λ₄)` of a two-qubit state,
/// where the λ are the square roots of the eigenvalues of `ρ (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`
/// in decreasing order.
pub fn concurrence_pair(rho: &DensityMatrix) -> Result<f64> {
    if rho.qubits.len() != 2 {
        return Err(Error::InvalidDensity(
            "concurrence needs a two-qubit density matrix".into(),
        ));
    }
    let yy = spin_flip();
    let flipped = matmul(&matmul(&yy, &rho.mat.conj())?, &yy)?;
    let r = matmul(&rho.mat, &flipped)?;
    let mut roots = Vec::with_capacity(4);
    for mu in eigenvalues(&r)? {
        if mu.im.abs() > TOL.spin_flip_imag {
            return Err(Error::Consistency {
                what: "imaginary eigenvalue of the spin-flipped product",
                value: mu.im,
            });
        }
        if mu.re < -TOL.negative_dust {
            return Err(Error::Consistency {
                what: "negative eigenvalue of the spin-flipped product",
                value: mu.re,
            });
        }
        roots.push(if mu.re < TOL.spin_flip_floor {
            0.0
        } else {
            mu.re.sqrt()
        });
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    let c = roots[0] - roots[1] - roots[2] - roots[3];
    clamp_unit(c.max(0.0), "pair concurrence")
}

/// Squared concurrence of the pair `(p, q)` of a three-qubit pure state.
pub fn concurrence_sq_pair(s: &PureState3Q, p: Qubit, q: Qubit) -> Result<f64> {
    let c = concurrence_pair(&reduced_density(s, &[p, q])?)?;
    Ok(c * c)
}

/// `C²_{q(rest)} = 4 det ρ_q`, the squared concurrence between qubit `cut`
/// and the other two.
pub fn concurrence_sq_bipartition(s: &PureState3Q, cut: Qubit) -> f64 {
    let m = cut.mask();
    let amp = s.amplitudes();
    let mut p0 = 0.0;
    let mut p1 = 0.0;
    let mut coherence = Complex::new(0.0, 0.0);
    for idx in (0..8).filter(|i| i & m == 0) {
        let lo = amp[idx];
        let hi = amp[idx | m];
        p0 += lo.norm_sqr();
        p1 += hi.norm_sqr();
        coherence += lo * hi.conj();
    }
    let det = p0 * p1 - coherence.norm_sqr();
    (4.0 * det).clamp(0.0, 1.0)
}

/// The three-tangle `τ = 4|d₁ − 2d₂ + 4d₃|` (Cayley hyperdeterminant of the amplitudes).
pub fn three_tangle(s: &PureState3Q) -> f64 {
    let a = |i, j, k| s.amp(i, j, k);
    let d1 = a(0, 0, 0).powi(2) * a(1, 1, 1).powi(2)
        + a(0, 0, 1).powi(2) * a(1, 1, 0).powi(2)
        + a(0, 1, 0).powi(2) * a(1, 0, 1).powi(2)
        + a(1, 0, 0).powi(2) * a(0, 1, 1).powi(2);
    let d2 = a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 0) * a(0, 1, 1)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1)
        + a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 0) * a(0, 0, 1);
    let d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1)
        + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    let tau = 4.0 * (d1 - 2.0 * d2 + 4.0 * d3).norm();
    debug_assert!(tau <= 1.0 + TOL.measure_range, "three-tangle {tau} > 1");
    tau.min(1.0)
}

/// The four terms of the monogamy identity for one cut.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangleDecomposition {
    /// Qubit split off from the other two.
    pub cut: Qubit,
    /// `C²_{cut(rest)}`
    pub c2_bipartition: f64,
    /// Squared pair concurrence with the first of the other qubits.
    pub c2_ab: f64,
    /// Squared pair concurrence with the second of the other qubits.
    pub c2_ac: f64,
    pub tau: f64,
}

impl TangleDecomposition {
    /// `C²_{A(BC)} − C²_AB − C²_AC − τ`; zero up to rounding.
    pub fn residual(&self) -> f64 {
        self.c2_bipartition - self.c2_ab - self.c2_ac - self.tau
    }
}

/// Evaluates every term of `C²_{A(BC)} = C²_AB + C²_AC + τ` independently
/// and fails if they do not add up.
pub fn tangle_decomposition(s: &PureState3Q, cut: Qubit) -> Result<TangleDecomposition> {
    let [first, second] = cut.others();
    let decomposition = TangleDecomposition {
        cut,
        c2_bipartition: concurrence_sq_bipartition(s, cut),
        c2_ab: concurrence_sq_pair(s, cut, first)?,
        c2_ac: concurrence_sq_pair(s, cut, second)?,
        tau: three_tangle(s),
    };
    let residual = decomposition.residual();
    if residual.abs() >= TOL.monogamy {
        return Err(Error::Consistency {
            what: "monogamy residual",
            value: residual,
        });
    }
    Ok(decomposition)
}
