//! Simulation library for quantum and classical three-wave mixing (TWM).
//!
//! Three-wave mixing converts two sub-frequency photons (modes 1 and 2) into
//! one sum-frequency photon (mode 3) and back. This crate provides four views
//! of the process and the machinery to compare them quantitatively:
//!
//! * [`quantum`] — exact quantum dynamics of the non-degenerate and degenerate
//!   interaction Hamiltonians via conserved-quantity block diagonalization,
//!   with photon moments, Fano factors, number distributions and marginal
//!   Husimi Q-functions for coherent inputs;
//! * [`classical`] — the deterministic classical amplitude equations, their
//!   integrals of motion, the exact Jacobi-elliptic solution for the
//!   sum-frequency intensity, and the fixed-amplitude (no-energy-transfer)
//!   solution;
//! * [`ensemble`] — classical-trajectory Monte Carlo with Gaussian-blurred
//!   coherent inputs that reproduces quantum photocount noise, plus the
//!   closed-form stationary Fano factors of the no-energy-transfer regime;
//! * [`analysis`] — short-time expansions, Fano-minimum extraction and the
//!   scaling-law fits used to summarize sweeps over input amplitude.
//!
//! [`special`] holds the shared special functions (incomplete elliptic
//! integral, Jacobi sn, cubic roots, seeded Gaussian streams) and [`export`]
//! the CSV writers consumed by the command-line front end.

pub mod analysis;
pub mod classical;
pub mod ensemble;
pub mod export;
pub mod quantum;
pub mod special;

mod tridiag;

pub use num_complex::Complex64;
