//! Entanglement of three qubits along time-optimal (brachistochrone)
//! evolutions.
//!
//! The crate computes the three-tangle, Wootters pair concurrences and the
//! one-versus-two bipartition concurrence of three-qubit pure states; builds
//! the geodesic between two prescribed states and averages any of those
//! measures along it; and samples Haar-random endpoint pairs to estimate the
//! distribution of those averages.
//!
//! ```
//! use tripartite::evolution::{alpha_scan, DEFAULT_NODES};
//!
//! // W̃ → GHZ: the three-tangle averaged over the whole evolution.
//! let scan = alpha_scan(&[0.0], DEFAULT_NODES).unwrap();
//! assert!((scan[0].1 - 0.7215).abs() < 5e-4);
//! ```
//!
//! The guide under `book/` walks through each module; its code blocks run
//! as doctests of this crate.

pub mod entanglement;
pub mod error;
pub mod evolution;
pub mod numerics;
pub mod sampling;
pub mod states;
pub mod statistics;
pub mod tolerance;

pub use error::{Error, Result};
pub use numerics::{CMatrix, Complex};
pub use states::{PureState3Q, Qubit, SymmetricCoeffs};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/states.md")]
    mod states {}
    #[doc = include_str!("../../../book/src/entanglement.md")]
    mod entanglement {}
    #[doc = include_str!("../../../book/src/evolution.md")]
    mod evolution {}
    #[doc = include_str!("../../../book/src/sampling.md")]
    mod sampling {}
    #[doc = include_str!("../../../book/src/statistics.md")]
    mod statistics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
