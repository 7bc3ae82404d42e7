//! Entanglement of a hyperfine-coupled nucleus-electron spin pair.
//!
//! This crate models a spin-1 nucleus exchange-coupled to a spin-1/2
//! electron — the level structure of an alkali atom like lithium-6 in its
//! electronic ground state — with independent effective fields on the two
//! particles, and computes how entangled the pair is:
//!
//! * [`spin`] builds the 6×6 Hamiltonian and converts laboratory units
//!   (tesla, kelvin) to the reduced units used everywhere else;
//! * [`ground`] analyzes the ground level across the electron field,
//!   including the doubly degenerate crossing at zero field, with
//!   closed-form energy and concurrence carried alongside the numerics;
//! * [`thermal`] builds Gibbs states, tracks how temperature degrades the
//!   negativity, and locates the temperature where the zero-field dip in
//!   `N(c)` flips into a peak;
//! * [`measures`] defines the validated state types and the entanglement
//!   measures themselves (I-concurrence, negativity, and a Schmidt-based
//!   cross-check);
//! * [`linalg`] supplies the dense complex matrix type and a cyclic Jacobi
//!   eigensolver, deliberately dependency-free and exact about sparsity;
//! * [`sweep`] and [`random`] round things out with tabulated scans and
//!   seeded test-state generators.
//!
//! All energies are in units of the exchange coupling and temperatures use
//! k_B = 1; one reduced energy unit corresponds to the pair's zero-field
//! hyperfine quantum (≈ 11 mK), which is what ties the dimensionless
//! numbers back to cold-gas experiments.
//!
//! # Example
//!
//! At zero field the ground level is a degenerate pair whose equal
//! mixture carries negativity 1/3; warming it to half the exchange
//! coupling degrades that only mildly:
//!
//! ```
//! use hfent_core::ground::{ground_state, DEFAULT_DEGENERACY_TOL};
//! use hfent_core::measures::negativity;
//! use hfent_core::spin::FieldParams;
//! use hfent_core::thermal::thermal_negativity;
//!
//! # fn main() -> hfent_core::Result<()> {
//! let gs = ground_state(&FieldParams::reduced(0.0, 0.0), DEFAULT_DEGENERACY_TOL)?;
//! assert_eq!(gs.degeneracy, 2);
//! assert!((negativity(&gs.state)? - 1.0 / 3.0).abs() < 1e-9);
//!
//! let warm = thermal_negativity(0.0, 0.0, 0.5)?;
//! assert!((warm - 0.243).abs() < 1e-3);
//! # Ok(())
//! # }
//! ```

#![forbid(unsafe_code)]

pub mod error;
pub mod ground;
pub mod linalg;
pub mod measures;
pub mod random;
pub mod spin;
pub mod sweep;
pub mod thermal;

pub use error::{Error, Result};
pub use ground::{
    concurrence_closed_form, ground_energy_closed_form, ground_point, ground_state, ground_sweep,
    ground_vector_closed_form, zero_field_ground_mixture, zero_field_ground_pair, GroundPoint,
    GroundStateResult, DEFAULT_DEGENERACY_TOL, GROUND_SWEEP_COLUMNS,
};
pub use linalg::{
    hermitian_eig, hermitian_eig_with_sweep_cap, kron, partial_trace, partial_transpose,
    trace_norm, BipartiteDims, ComplexMatrix, Factor, HermitianEigenDecomposition,
};
pub use measures::{
    concurrence_max, concurrence_pure, negativity, schmidt_negativity_oracle, DensityMatrix,
    PureState,
};
pub use spin::{
    build_hamiltonian, nucleus_electron_dims, physical_to_reduced, reduced_temperature_from_kelvin,
    spin_operators, FieldParams, SpinOperators,
};
pub use sweep::{linear_grid, SweepRecord, SweepSeries};
pub use thermal::{
    curvature_at_zero, find_critical_temperature, gibbs_state, thermal_negativity, thermal_sweep,
    CriticalTemperatureResult, ThermalParams, CURVATURE_STEP, TEMPERATURE_FLOOR,
};
