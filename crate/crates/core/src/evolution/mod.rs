//! The time-optimal path between two prescribed states and averages of
//! entanglement measures along it.
//!
//! Units are natural (`ħ = 1`). The path is parameterized by `ξ = ωt`,
//! which runs over `[0, θ/2]` where `cos(θ/2) = ⟨ψ_I|ψ_F⟩`.

mod cases;
mod quadrature;

pub use cases::{
    alpha_scan, case1_pair, case1_state, case1_tangle_closed_form, case2_pair, ghz_phase_family,
};
pub use quadrature::GaussLegendre;

use crate::entanglement::reduced_density;
use crate::error::{Error, Result};
use crate::numerics::{matmul, Complex};
use crate::states::{PureState3Q, Qubit};
use crate::tolerance::TOL;

/// Smallest node count accepted for time averages.
pub const MIN_NODES: usize = 16;
/// Node count used when none is given.
pub const DEFAULT_NODES: usize = 64;

/// Endpoints of a brachistochrone with their separation angle.
///
/// The overlap `⟨ψ_I|ψ_F⟩` is real, nonnegative and equal to `cos(θ/2)`;
/// `θ` lies in `(0, π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionPair {
    initial: PureState3Q,
    final_state: PureState3Q,
    theta: f64,
}

impl EvolutionPair {
    /// Checks that `⟨initial|final⟩ = cos(θ/2)` within tolerance.
    pub fn new(initial: PureState3Q, final_state: PureState3Q, theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta <= std::f64::consts::PI) {
            return Err(Error::OutOfRange {
                name: "theta",
                value: theta,
                range: "(0, π]",
            });
        }
        let expected = (theta / 2.0).cos();
        let overlap = initial.inner_product(&final_state);
        if overlap.im.abs() > TOL.overlap || (overlap.re - expected).abs() > TOL.overlap {
            return Err(Error::OverlapMismatch {
                re: overlap.re,
                im: overlap.im,
                expected,
            });
        }
        Ok(Self {
            initial,
            final_state,
            theta,
        })
    }

    /// Pairs two arbitrary states. The global phase of `final_state` is
    /// rotated so the overlap is real and nonnegative, and `θ` is read off
    /// the overlap modulus. Coinciding states are refused.
    pub fn from_states(initial: PureState3Q, final_state: PureState3Q) -> Result<Self> {
        let overlap = initial.inner_product(&final_state);
        let modulus = overlap.norm();
        if modulus > 1.0 - TOL.identical {
            return Err(Error::IdenticalStates);
        }
        let aligned = if modulus > 0.0 {
            final_state.with_global_phase(-overlap.arg())
        } else {
            final_state
        };
        let theta = 2.0 * modulus.min(1.0).acos();
        Self::new(initial, aligned, theta)
    }

    pub fn initial(&self) -> &PureState3Q {
        &self.initial
    }

    pub fn final_state(&self) -> &PureState3Q {
        &self.final_state
    }

    /// Separation angle `θ` in radians.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Upper end `θ/2` of the path parameter.
    pub fn xi_max(&self) -> f64 {
        0.5 * self.theta
    }

    pub fn classify(&self) -> Triviality {
        classify_trivial(&self.initial, &self.final_state)
    }

    fn state_at(&self, xi: f64) -> PureState3Q {
        let half = 0.5 * self.theta;
        let (s_half, c_half) = half.sin_cos();
        let (s, c) = xi.sin_cos();
        let wi = c - c_half / s_half * s;
        let wf = s / s_half;
        let a = self.initial.amplitudes();
        let b = self.final_state.amplitudes();
        let amp: [Complex; 8] = std::array::from_fn(|k| a[k] * wi + b[k] * wf);
        PureState3Q::from_amplitudes_unchecked(amp)
    }
}

/// Energy bound and quadrature settings for an evolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionParams {
    omega: f64,
    nodes: usize,
}

impl EvolutionParams {
    pub fn new(omega: f64, nodes: usize) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::OutOfRange {
                name: "omega",
                value: omega,
                range: "(0, ∞)",
            });
        }
        check_nodes(nodes)?;
        Ok(Self { omega, nodes })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }
}

impl Default for EvolutionParams {
    fn default() -> Self {
        Self {
            omega: 1.0,
            nodes: DEFAULT_NODES,
        }
    }
}

fn check_nodes(nodes: usize) -> Result<()> {
    if nodes < MIN_NODES {
        return Err(Error::OutOfRange {
            name: "quadrature nodes",
            value: nodes as f64,
            range: "[16, ∞)",
        });
    }
    Ok(())
}

/// The state at path parameter `ξ ∈ [0, θ/2]`:
/// `[cos ξ − cot(θ/2) sin ξ] ψ_I + [sin ξ / sin(θ/2)] ψ_F`.
pub fn geodesic_state(pair: &EvolutionPair, xi: f64) -> Result<PureState3Q> {
    // Grids computed as `k * (θ/2) / n` may overshoot the end by an ulp.
    let end = pair.xi_max();
    let xi = if xi > end && xi <= end * (1.0 + 4.0 * f64::EPSILON) {
        end
    } else {
        xi
    };
    if !(0.0..=end).contains(&xi) {
        return Err(Error::OutOfRange {
            name: "xi",
            value: xi,
            range: "[0, θ/2]",
        });
    }
    if xi == 0.0 {
        return Ok(pair.initial);
    }
    Ok(pair.state_at(xi))
}

/// Travel time `T = θ / 2ω`.
pub fn duration(pair: &EvolutionPair, params: &EvolutionParams) -> f64 {
    pair.theta / (2.0 * params.omega)
}

/// `(2/θ) ∫₀^{θ/2} measure(ψ(ξ)) dξ`, integrated with `nodes`-point
/// Gauss–Legendre panels (see [`time_averages_with`]).
pub fn time_average(
    pair: &EvolutionPair,
    measure: impl Fn(&PureState3Q) -> f64,
    nodes: usize,
) -> Result<f64> {
    check_nodes(nodes)?;
    let rule = GaussLegendre::new(nodes)?;
    time_average_with(pair, measure, &rule)
}

/// [`time_average`] with a prebuilt rule, for hot loops.
pub fn time_average_with(
    pair: &EvolutionPair,
    measure: impl Fn(&PureState3Q) -> f64,
    rule: &GaussLegendre,
) -> Result<f64> {
    let mut avg = [0.0];
    time_averages_with(pair, &[&measure], rule, &mut avg)?;
    Ok(avg[0])
}

/// Averages several measures along one path, sharing the geodesic states.
///
/// The integral is adaptive: a panel is split in two whenever the rule on
/// the halves disagrees with the rule on the whole panel, so the kinks that
/// `|·|` puts into the three-tangle do not limit accuracy. Smooth
/// integrands are accepted after the first split.
pub fn time_averages_with(
    pair: &EvolutionPair,
    measures: &[&dyn Fn(&PureState3Q) -> f64],
    rule: &GaussLegendre,
    out: &mut [f64],
) -> Result<()> {
    check_nodes(rule.len())?;
    assert_eq!(measures.len(), out.len());
    out.fill(0.0);
    let span = pair.xi_max();
    let integrator = PanelIntegrator {
        pair,
        measures,
        rule,
        tolerance: PANEL_TOLERANCE / span,
    };
    let whole = integrator.panel(0.0, span);
    integrator.refine(0.0, span, &whole, 0, out);
    for v in out.iter_mut() {
        let avg = *v / span;
        if !avg.is_finite() || !(-TOL.measure_range..=1.0 + TOL.measure_range).contains(&avg) {
            return Err(Error::Consistency {
                what: "time average outside [0, 1]",
                value: avg,
            });
        }
        *v = avg.clamp(0.0, 1.0);
    }
    Ok(())
}

/// Allowed disagreement, per unit of ξ, between a panel and its two halves.
const PANEL_TOLERANCE: f64 = 1e-11;
/// Deepest bisection level.
const MAX_DEPTH: usize = 24;

struct PanelIntegrator<'a> {
    pair: &'a EvolutionPair,
    measures: &'a [&'a dyn Fn(&PureState3Q) -> f64],
    rule: &'a GaussLegendre,
    tolerance: f64,
}

impl PanelIntegrator<'_> {
    fn panel(&self, a: f64, b: f64) -> Vec<f64> {
        let mut acc = vec![0.0; self.measures.len()];
        for (xi, w) in self.rule.mapped(a, b) {
            let state = self.pair.state_at(xi);
            for (slot, m) in acc.iter_mut().zip(self.measures) {
                *slot += w * m(&state);
            }
        }
        acc
    }

    fn refine(&self, a: f64, b: f64, whole: &[f64], depth: usize, out: &mut [f64]) {
        let mid = 0.5 * (a + b);
        let left = self.panel(a, mid);
        let right = self.panel(mid, b);
        let gap = whole
            .iter()
            .zip(left.iter().zip(&right))
            .map(|(w, (l, r))| (l + r - w).abs())
            .fold(0.0, f64::max);
        if gap <= self.tolerance * (b - a) || depth >= MAX_DEPTH {
            for (o, (l, r)) in out.iter_mut().zip(left.iter().zip(&right)) {
                *o += l + r;
            }
            return;
        }
        self.refine(a, mid, &left, depth + 1, out);
        self.refine(mid, b, &right, depth + 1, out);
    }
}

/// Whether an evolution genuinely involves all three qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Triviality {
    /// Endpoints coincide up to phase; nothing evolves.
    Identical,
    /// This qubit sits in the same pure state, uncorrelated, at both ends.
    Spectator(Qubit),
    Genuine,
}

impl std::fmt::Display for Triviality {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Triviality::Identical => f.write_str("identical"),
            Triviality::Spectator(q) => write!(f, "spectator({q})"),
            Triviality::Genuine => f.write_str("genuine"),
        }
    }
}

/// Sorts an evolution into identical, spectator-qubit or genuine.
///
/// A spectator is a qubit whose reduced state is pure at both ends (so it
/// factors out) and the same at both ends, up to the spectator tolerance.
/// Qubits are tried in order A, B, C.
pub fn classify_trivial(initial: &PureState3Q, final_state: &PureState3Q) -> Triviality {
    if initial.inner_product(final_state).norm() > 1.0 - TOL.identical {
        return Triviality::Identical;
    }
    for q in Qubit::ALL {
        let (Ok(ri), Ok(rf)) = (
            reduced_density(initial, &[q]),
            reduced_density(final_state, &[q]),
        ) else {
            continue;
        };
        let purity =
            |m: &crate::numerics::CMatrix| matmul(m, m).map(|sq| sq.trace().re).unwrap_or(0.0);
        if purity(ri.matrix()) < 1.0 - TOL.spectator || purity(rf.matrix()) < 1.0 - TOL.spectator {
            continue;
        }
        let fidelity = matmul(ri.matrix(), rf.matrix())
            .map(|p| p.trace().re)
            .unwrap_or(0.0);
        if fidelity > 1.0 - TOL.spectator {
            return Triviality::Spectator(q);
        }
    }
    Triviality::Genuine
}
