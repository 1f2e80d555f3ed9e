//! Exact spectra of scaling one-dimensional chain quantum graphs.
//!
//! A chain graph is a line of bonds joined at scattering vertices, with hard
//! walls at both ends. For scaling systems (piecewise-constant potentials
//! whose height is a fixed fraction of the energy) every bond action is a
//! constant times the wave number `k`, so the secular equation reduces to a
//! finite trigonometric sum with `k`-independent coefficients:
//!
//! ```text
//! cos(S0 k + pi*gamma) = sum_i a_i cos(S_i k + pi*gamma_i),   S_i < S0.
//! ```
//!
//! When `alpha = sum_i a_i < 1` the graph is *regular*: analytically known
//! separator points isolate exactly one eigenvalue per interval, nearest
//! neighbor spacings are confined to a band `[gap, cut]`, and each eigenvalue
//! admits an explicit expansion over classical periodic orbits. This crate
//! computes the spectrum both ways — guaranteed-bracket root finding on the
//! secular function, and the truncated periodic-orbit expansion — so that
//! each route checks the other.
//!
//! Module map:
//!
//! - [`graph`]: potential specifications, chain construction, and the
//!   transfer-matrix secular function.
//! - [`trig`]: extraction of the canonical trigonometric secular form.
//! - [`spectral`]: regularity classification, separators, root solvers,
//!   spectra, and spacing/counting diagnostics.
//! - [`orbit`]: prime periodic orbits of the two-bond chain as binary
//!   necklaces, with their combinatorial attributes and amplitudes.
//! - [`expansion`]: the explicit eigenvalue expansion and the truncated,
//!   smoothed density of states.
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable the default
//! `std` feature for embedded use.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod expansion;
pub mod graph;
pub mod orbit;
pub mod spectral;
pub mod sum;
pub mod trig;

pub use expansion::{convergence_report, density_truncated, expand_level, ExpansionReport};
pub use graph::{
    chain_from_manhattan, chain_from_step, secular_value, ChainGraph, GraphError,
    ManhattanPotentialSpec, StepPotentialSpec,
};
pub use orbit::{
    count_orbits, enumerate_prime, orbit_attributes, orbit_terms, OrbitCensus, OrbitCode,
    OrbitError, OrbitTerm, PrimeOrbit, MAX_EVENT_BUDGET,
};
pub use spectral::{
    exact_root, find_mu, fixed_point_root, regularity, separator, spacing_stats, spectrum,
    trivial_level, weyl_residual, RegularityReport, SpacingStats, SpectralError, Spectrum,
};
pub use trig::{trig_form, TrigForm, TrigFormError, TrigTerm};
