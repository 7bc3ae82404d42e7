//! Ground-state analysis of the hyperfine pair.
//!
//! The Hamiltonian's block structure makes the ground-state problem almost
//! analytic: for `d = 0` the ground level lives in one of the two coupled
//! 2×2 blocks (which one depends on the sign of the electron field `c`),
//! and at `c = 0` the two blocks tie, giving a doubly degenerate ground
//! level. This module diagonalizes numerically, handles the degenerate
//! point as an equal-weight mixture, and carries the closed-form energy
//! and concurrence alongside as an independent check.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::measures::{concurrence_pure, negativity, DensityMatrix, PureState};
use crate::spin::basis::{NUC_DOWN_EL_UP, NUC_UP_EL_DOWN, NUC_ZERO_EL_DOWN, NUC_ZERO_EL_UP};
use crate::spin::{build_hamiltonian, nucleus_electron_dims, FieldParams};
use crate::sweep::{linear_grid, SweepSeries};

/// Energy window within which eigenvalues count as one degenerate level.
pub const DEFAULT_DEGENERACY_TOL: f64 = 1e-9;

/// Purity slack below which a ground mixture still counts as pure when
/// extracting a state vector for the concurrence.
const PURITY_TOL: f64 = 1e-9;

/// Ground level of the pair Hamiltonian.
#[derive(Clone, Debug)]
pub struct GroundStateResult {
    /// Ground energy (mean of the eigenvalues collected into the level).
    pub energy: f64,
    /// The ground state: a pure projector when the level is simple, an
    /// equal-weight mixture over the eigenvectors when it is degenerate.
    pub state: DensityMatrix,
    /// Number of eigenvalues within tolerance of the lowest.
    pub degeneracy: usize,
}

impl GroundStateResult {
    pub fn is_degenerate(&self) -> bool {
        self.degeneracy > 1
    }
}

/// Diagonalizes the Hamiltonian and assembles its ground level.
///
/// Eigenvalues within `degeneracy_tol` of the lowest are folded into one
/// level, represented as the equal-weight mixture of their eigenvectors —
/// the maximum-entropy choice, which keeps the result well defined and
/// continuous through the `c = 0` crossing.
pub fn ground_state(params: &FieldParams, degeneracy_tol: f64) -> Result<GroundStateResult> {
    if !(degeneracy_tol.is_finite() && degeneracy_tol >= 0.0) {
        return Err(Error::InvalidRange(format!(
            "degeneracy tolerance must be finite and non-negative, got {degeneracy_tol}"
        )));
    }
    let h = build_hamiltonian(params);
    let eig = hermitian_eig(&h)?;
    let lowest = eig.eigenvalues[0];
    let members: Vec<usize> = (0..eig.eigenvalues.len())
        .filter(|&k| eig.eigenvalues[k] - lowest <= degeneracy_tol)
        .collect();

    let degeneracy = members.len();
    let weight = 1.0 / degeneracy as f64;
    let n = eig.eigenvalues.len();
    let mut mixture = ComplexMatrix::zeros(n, n);
    for &k in &members {
        let v = eig.eigenvector(k);
        for i in 0..n {
            for j in 0..n {
                mixture[(i, j)] += v[i] * v[j].conj() * weight;
            }
        }
    }
    let energy = members.iter().map(|&k| eig.eigenvalues[k]).sum::<f64>() / degeneracy as f64;
    let state = DensityMatrix::new(mixture, nucleus_electron_dims())?;
    Ok(GroundStateResult {
        energy,
        state,
        degeneracy,
    })
}

/// Closed-form ground energy at nuclear field `d = 0`.
///
/// The ground level sits in the block coupled to the lower-lying stretched
/// diagonal entry, which flips with the sign of `c`; both branches meet at
/// `E = -1` for `c = 0`.
pub fn ground_energy_closed_form(c: f64) -> f64 {
    if c < 0.0 {
        (-1.0 - (9.0 - 4.0 * c + 4.0 * c * c).sqrt()) / 4.0
    } else {
        (-1.0 - (9.0 + 4.0 * c + 4.0 * c * c).sqrt()) / 4.0
    }
}

/// Closed-form ground-state concurrence at nuclear field `d = 0`.
///
/// Writing `x = 1 - 2c - sqrt(9 - 4c + 4c²)` for `c ≤ 0` (and the
/// analogous `y = 1 + 2c + sqrt(9 + 4c + 4c²)` for `c > 0`), the
/// concurrence is `4√2 |x| / (x² + 8)`. The function is even in `c` —
/// the two branch variables satisfy `x(-c)·y(c) = -8`, which maps one
/// branch's formula onto the other's — and both branches approach
/// `2√2/3 ≈ 0.943` as `c → 0`, even though the ground state itself jumps
/// between blocks there.
pub fn concurrence_closed_form(c: f64) -> f64 {
    let x = if c <= 0.0 {
        1.0 - 2.0 * c - (9.0 - 4.0 * c + 4.0 * c * c).sqrt()
    } else {
        1.0 + 2.0 * c + (9.0 + 4.0 * c + 4.0 * c * c).sqrt()
    };
    4.0 * std::f64::consts::SQRT_2 * x.abs() / (x * x + 8.0)
}

/// Closed-form ground state vector at nuclear field `d = 0`, `None` at the
/// degenerate point `c = 0` where no single vector is the ground state.
///
/// For `c < 0` the state lives on `{|0,↓⟩, |-1,↑⟩}`, for `c > 0` on
/// `{|+1,↓⟩, |0,↑⟩}`; signs follow the convention in which the `c → 0∓`
/// limits are `-√(1/3)|0,↓⟩ + √(2/3)|-1,↑⟩` and
/// `-√(2/3)|+1,↓⟩ + √(1/3)|0,↑⟩`.
pub fn ground_vector_closed_form(c: f64) -> Option<PureState> {
    if c == 0.0 {
        return None;
    }
    let dims = nucleus_electron_dims();
    let mut amp = vec![Complex64::new(0.0, 0.0); dims.total()];
    let two_sqrt2 = 2.0 * std::f64::consts::SQRT_2;
    if c < 0.0 {
        let s = (9.0 - 4.0 * c + 4.0 * c * c).sqrt();
        amp[NUC_ZERO_EL_DOWN] = Complex64::new((1.0 - 2.0 * c - s) / two_sqrt2, 0.0);
        amp[NUC_DOWN_EL_UP] = Complex64::new(1.0, 0.0);
    } else {
        let s = (9.0 + 4.0 * c + 4.0 * c * c).sqrt();
        amp[NUC_UP_EL_DOWN] = Complex64::new(-(1.0 + 2.0 * c + s) / two_sqrt2, 0.0);
        amp[NUC_ZERO_EL_UP] = Complex64::new(1.0, 0.0);
    }
    Some(PureState::normalized(amp, dims).expect("closed-form amplitudes are finite and nonzero"))
}

/// The two degenerate zero-field ground states, `(φ₁, φ₂)`:
/// `φ₁ = -√(1/3)|0,↓⟩ + √(2/3)|-1,↑⟩` and
/// `φ₂ = -√(2/3)|+1,↓⟩ + √(1/3)|0,↑⟩`.
pub fn zero_field_ground_pair() -> (PureState, PureState) {
    let dims = nucleus_electron_dims();
    let zero = Complex64::new(0.0, 0.0);
    let third = (1.0f64 / 3.0).sqrt();
    let two_thirds = (2.0f64 / 3.0).sqrt();

    let mut phi1 = vec![zero; dims.total()];
    phi1[NUC_ZERO_EL_DOWN] = Complex64::new(-third, 0.0);
    phi1[NUC_DOWN_EL_UP] = Complex64::new(two_thirds, 0.0);

    let mut phi2 = vec![zero; dims.total()];
    phi2[NUC_UP_EL_DOWN] = Complex64::new(-two_thirds, 0.0);
    phi2[NUC_ZERO_EL_UP] = Complex64::new(third, 0.0);

    (
        PureState::normalized(phi1, dims).expect("φ₁ amplitudes are nonzero"),
        PureState::normalized(phi2, dims).expect("φ₂ amplitudes are nonzero"),
    )
}

/// The equal-weight mixture `(|φ₁⟩⟨φ₁| + |φ₂⟩⟨φ₂|)/2` that the zero-field
/// ground level settles into. Its negativity is exactly 1/3.
pub fn zero_field_ground_mixture() -> DensityMatrix {
    let (phi1, phi2) = zero_field_ground_pair();
    let sum = &phi1.projector().scaled(0.5) + &phi2.projector().scaled(0.5);
    DensityMatrix::new(sum, nucleus_electron_dims())
        .expect("equal mixture of orthonormal states is a valid density matrix")
}

/// One `c` grid point of the ground sweep: numeric and closed-form values
/// side by side, at nuclear field `d = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroundPoint {
    pub c: f64,
    pub energy_numeric: f64,
    pub energy_closed: f64,
    pub concurrence_numeric: f64,
    pub concurrence_closed: f64,
    /// Negativity of the ground state as a density matrix — the pure
    /// projector off the crossing, the two-state mixture at it (1/3).
    pub negativity_mixed: f64,
}

/// Evaluates every ground-sweep column at a single `c`.
///
/// `concurrence_numeric` is the concurrence of the numeric ground vector;
/// when the level is degenerate (no single vector exists) it falls back to
/// the closed-form limit value, which both crossing branches share.
pub fn ground_point(c: f64, degeneracy_tol: f64) -> Result<GroundPoint> {
    let gs = ground_state(&FieldParams::reduced(c, 0.0), degeneracy_tol)?;
    let negativity_mixed = negativity(&gs.state)?;
    let concurrence_numeric = match gs.state.as_pure_state(PURITY_TOL) {
        Some(pure) => concurrence_pure(&pure),
        None => concurrence_closed_form(c),
    };
    Ok(GroundPoint {
        c,
        energy_numeric: gs.energy,
        energy_closed: ground_energy_closed_form(c),
        concurrence_numeric,
        concurrence_closed: concurrence_closed_form(c),
        negativity_mixed,
    })
}

/// Column names of the ground sweep, in output order.
pub const GROUND_SWEEP_COLUMNS: [&str; 5] = [
    "energy_numeric",
    "energy_closed",
    "concurrence_numeric",
    "concurrence_closed",
    "negativity_mixed",
];

/// Sweeps the electron field `c` over an inclusive linear grid at `d = 0`.
pub fn ground_sweep(c_min: f64, c_max: f64, steps: usize) -> Result<SweepSeries> {
    validate_grid(c_min, c_max, steps)?;
    let mut series = SweepSeries::new(
        "c",
        GROUND_SWEEP_COLUMNS.iter().map(|s| s.to_string()).collect(),
    );
    for c in linear_grid(c_min, c_max, steps) {
        let p = ground_point(c, DEFAULT_DEGENERACY_TOL)?;
        series.push_record(
            c,
            vec![
                p.energy_numeric,
                p.energy_closed,
                p.concurrence_numeric,
                p.concurrence_closed,
                p.negativity_mixed,
            ],
        )?;
    }
    Ok(series)
}

/// Shared validation for linear sweep grids.
pub(crate) fn validate_grid(min: f64, max: f64, steps: usize) -> Result<()> {
    if !(min.is_finite() && max.is_finite()) {
        return Err(Error::InvalidRange(format!(
            "grid endpoints must be finite, got [{min}, {max}]"
        )));
    }
    if min >= max {
        return Err(Error::InvalidRange(format!(
            "grid needs min < max, got [{min}, {max}]"
        )));
    }
    if steps < 2 {
        return Err(Error::InvalidRange(format!(
            "grid needs at least 2 steps, got {steps}"
        )));
    }
    Ok(())
}
