//! Thermal quantum correlations in the two-qubit Heisenberg XYZ chain with
//! Dzyaloshinskii-Moriya (DM) interaction.
//!
//! The Hamiltonian is
//!
//! ```text
//! H = Jx σ₁ˣ⊗σ₂ˣ + Jy σ₁ʸ⊗σ₂ʸ + Jz σ₁ᶻ⊗σ₂ᶻ + D·(σ₁ × σ₂)
//! ```
//!
//! and the state of interest is the Gibbs state ρ(T) = e^{−H/T}/Z (k_B = 1).
//! The crate computes, for that state:
//!
//! - **thermal entanglement** (Wootters concurrence), with analytic
//!   expressions for DM along z, along y, and in the xy-plane, each checked
//!   against a generic spin-flip computation;
//! - **critical temperatures** T_c where entanglement sudden death occurs,
//!   from branch-dependent transcendental equations and from a bisection
//!   search on the concurrence itself;
//! - **phase-boundary couplings** D* where T_c reaches zero (ferromagnetic
//!   regime);
//! - **quantum discord**, via an X-state expression for the z-orientation,
//!   an explicit measurement optimization for the y-orientation, and a
//!   projective-measurement grid search for arbitrary states;
//! - **parameter sweeps** over (T, D, J) grids for dataset generation.
//!
//! Every closed form has an independent numerical oracle next to it (dense
//! 4×4 Hermitian eigensolver + generic Gibbs construction + spin-flip
//! concurrence + measurement-grid discord); [`verify`] runs the
//! equivalence suites over seeded random draws.
//!
//! All logarithms in entropic quantities are base 2.

pub mod critical;
pub mod discord;
pub mod entanglement;
pub mod model;
pub mod numerics;
pub mod sweep;
pub mod thermal;
pub mod verify;

pub use critical::{
    critical_temperature_oracle, critical_temperature_y, critical_temperature_z, d_y_star,
    d_z_star, CriticalResult, PhaseBoundary, TcBranch,
};
pub use discord::{
    binary_entropy, conditional_entropy, discord_grid_oracle, discord_y, discord_z,
    mutual_information, DiscordBreakdown, DiscordMinimizer, MeasurementAngles,
};
pub use entanglement::{
    concurrence, concurrence_wootters, concurrence_xy, concurrence_y, concurrence_y_variant,
    concurrence_z, ConcurrenceBreakdown, EtaTwoVariant,
};
pub use model::{build_hamiltonian, classify, spectrum_xy, spectrum_y, spectrum_z, Couplings, DmCase};
pub use numerics::{
    gibbs_from_spectrum, hermitian_eig, partial_trace, solve_cubic_real, von_neumann_entropy,
    CMat, Complex, ComplexMatrix2, ComplexMatrix4, SpectralDecomposition, Subsystem,
};
pub use sweep::{run_sweep, tc_curve, AxisSpec, Quantity, SweepParameter, SweepResult, SweepRow, SweepSpec};
pub use thermal::{
    partition_xy, partition_y, partition_z, thermal_state_generic, thermal_state_xy,
    thermal_state_y, thermal_state_z, ThermalState, XYEntries, YEntries, ZEntries,
};

/// Errors shared by all modules.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |m - m†| entry = {deviation:.3e})")]
    NonHermitianInput { deviation: f64 },
    #[error("temperature must be positive, got {0}")]
    NonPositiveTemperature(f64),
    #[error("not a valid density matrix: {0}")]
    InvalidDensityMatrix(String),
    #[error("cubic has a complex root pair (imaginary part {imag:.3e})")]
    ComplexRootsDetected { imag: f64 },
    #[error("couplings do not match the required DM orientation ({expected})")]
    WrongDmCase { expected: &'static str },
    #[error("in-plane DM phase is undefined at dx = dy = 0")]
    DegenerateDmPhase,
    #[error("concurrence is identically zero; no finite critical temperature")]
    NoTransition,
    #[error("sqrt(y_max) = {0} exceeds 1/2 beyond tolerance")]
    YMaxOutOfRange(f64),
    #[error("measurement grid too coarse (need at least 64 x 128)")]
    GridTooCoarse,
    #[error("quantity incompatible with the sweep axes: {0}")]
    IncompatibleQuantity(String),
    #[error("{0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
