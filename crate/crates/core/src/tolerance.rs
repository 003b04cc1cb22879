//! Numerical tolerances shared by every module.
//!
//! Everything that decides "close enough" reads from [`TOL`], so an audit of
//! the numerical contract only has to look here.

/// One record holding every tolerance and iteration cap used in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max-entry defect `‖U†U − I‖` allowed for any produced unitary.
    pub unitarity: f64,
    /// Allowed deviation of a state norm from 1.
    pub norm: f64,
    /// Vectors with norm below this are refused by `normalize`.
    pub min_norm: f64,
    /// Allowed mismatch between `⟨ψ_I|ψ_F⟩` and `cos(θ/2)`.
    pub overlap: f64,
    /// Hermiticity defect allowed for density matrices.
    pub hermitian: f64,
    /// Trace defect allowed for density matrices.
    pub trace: f64,
    /// Eigenvalues of PSD matrices may dip this far below zero.
    pub negative_dust: f64,
    /// Eigenvalues of `ρρ̃` below this are treated as exact zeros before the
    /// square root. The QR solver resolves a zero eigenvalue only to about
    /// `ε‖ρρ̃‖`, and the square root would inflate that to `√ε`.
    pub spin_flip_floor: f64,
    /// Imaginary parts of the (provably real) spectrum of `ρρ̃` up to this are dust.
    pub spin_flip_imag: f64,
    /// Squared measures may stray this far outside `[0, 1]` before clamping.
    pub measure_range: f64,
    /// Allowed residual of `C²_{A(BC)} − C²_AB − C²_AC − τ`.
    pub monogamy: f64,
    /// `|⟨ψ_I|ψ_F⟩|` above `1 − identical` means the states coincide.
    pub identical: f64,
    /// Purity and fidelity slack when looking for a spectator qubit.
    pub spectator: f64,
    /// Unit-integral slack for histogram densities.
    pub histogram_integral: f64,
    /// QR sweeps allowed per eigenvalue before giving up.
    pub eigen_max_sweeps: usize,
}

pub const TOL: Tolerances = Tolerances {
    unitarity: 1e-12,
    norm: 1e-10,
    min_norm: 1e-14,
    overlap: 1e-10,
    hermitian: 1e-12,
    trace: 1e-10,
    negative_dust: 1e-10,
    spin_flip_floor: 1e-13,
    spin_flip_imag: 1e-8,
    measure_range: 1e-8,
    monogamy: 1e-8,
    identical: 1e-10,
    spectator: 1e-10,
    histogram_integral: 1e-9,
    eigen_max_sweeps: 500,
};

impl Default for Tolerances {
    fn default() -> Self {
        TOL
    }
}
