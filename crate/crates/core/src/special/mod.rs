//! Special functions and sampling primitives shared by the classical engine:
//! the incomplete elliptic integral of the first kind, the Jacobi elliptic
//! function sn, sorted roots of the intensity cubic, and a deterministic
//! counter-based Gaussian stream.

mod cubic;
mod elliptic;
mod rng;

pub use cubic::{cubic_roots_sorted, CubicRoots};
pub use elliptic::{elliptic_f, jacobi_sn, EllipticModulus};
pub use rng::GaussianStream;

use thiserror::Error;

/// Errors from the special-function layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    /// Argument outside the supported domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The invariants (E1, E2, K) do not correspond to a realizable motion:
    /// the intensity cubic has complex roots beyond tolerance.
    #[error("unphysical invariants: E1={e1}, E2={e2}, K={k}")]
    UnphysicalInvariants { e1: f64, e2: f64, k: f64 },
    /// An iterative scheme failed to converge.
    #[error("{0} failed to converge")]
    NoConvergence(&'static str),
}
