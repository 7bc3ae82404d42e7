//! Thermal (Gibbs) states of the pair and the entanglement transition.
//!
//! At temperature `t` (in units of the exchange coupling, k_B = 1) the
//! state is `ρ = e^{-H/t} / Z`. Negativity decays with temperature, and
//! the shape of `N(c)` near `c = 0` flips from a local minimum at low
//! temperature to a local maximum above a critical temperature; this
//! module locates that flip as the zero of the discrete curvature of
//! `N(c)` at `c = 0`.

use crate::error::{Error, Result};
use crate::ground::{ground_state, validate_grid, DEFAULT_DEGENERACY_TOL};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::measures::{negativity, DensityMatrix};
use crate::spin::{build_hamiltonian, nucleus_electron_dims, FieldParams};
use crate::sweep::{linear_grid, SweepSeries};

/// Temperatures at or below this floor are treated as zero: the Gibbs
/// construction hands over to the ground-state mixture, avoiding
/// 0/0-style underflow in the Boltzmann weights.
pub const TEMPERATURE_FLOOR: f64 = 1e-8;

/// Field step used by the critical-temperature search when probing the
/// discrete curvature of `N(c)` at `c = 0`.
pub const CURVATURE_STEP: f64 = 1e-3;

/// Hard cap on bisection iterations (the bracket halves each time, so a
/// run that hits this has stalled on floating-point resolution).
const MAX_BISECTION_ITERATIONS: usize = 200;

/// Field parameters plus a validated, strictly positive temperature.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThermalParams {
    pub field: FieldParams,
    pub temperature: f64,
}

impl ThermalParams {
    pub fn new(field: FieldParams, temperature: f64) -> Result<Self> {
        if !(temperature.is_finite() && temperature > 0.0) {
            return Err(Error::InvalidTemperature(temperature));
        }
        Ok(Self { field, temperature })
    }
}

/// Gibbs state `e^{-H/t} / Z` of the pair Hamiltonian.
///
/// Built from the eigendecomposition with energies shifted by the ground
/// energy, so the largest Boltzmann weight is exactly 1 and nothing
/// overflows at small `t`. Below [`TEMPERATURE_FLOOR`] the zero-
/// temperature limit is returned directly: the ground level's equal-weight
/// mixture (see [`ground_state`]).
///
/// Because the eigenvectors inherit the Hamiltonian's exact block
/// sparsity, entries of the Gibbs state outside that block pattern are
/// exact zeros, not rounding-level residue.
pub fn gibbs_state(params: &ThermalParams) -> Result<DensityMatrix> {
    if params.temperature <= TEMPERATURE_FLOOR {
        return Ok(ground_state(&params.field, DEFAULT_DEGENERACY_TOL)?.state);
    }
    let h = build_hamiltonian(&params.field);
    let eig = hermitian_eig(&h)?;
    let lowest = eig.eigenvalues[0];
    let weights: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|e| (-(e - lowest) / params.temperature).exp())
        .collect();
    let z: f64 = weights.iter().sum();

    let n = eig.eigenvalues.len();
    let mut rho = ComplexMatrix::zeros(n, n);
    for (k, &w) in weights.iter().enumerate() {
        let p = w / z;
        let v = eig.eigenvector(k);
        for i in 0..n {
            for j in 0..n {
                rho[(i, j)] += v[i] * v[j].conj() * p;
            }
        }
    }
    DensityMatrix::new(rho, nucleus_electron_dims())
}

/// Negativity of the thermal state at electron field `c`, nuclear field
/// `d`, temperature `t`.
pub fn thermal_negativity(c: f64, d: f64, t: f64) -> Result<f64> {
    let params = ThermalParams::new(FieldParams::reduced(c, d), t)?;
    negativity(&gibbs_state(&params)?)
}

/// Discrete curvature of `N(c)` at `c = 0` for the thermal state:
/// `(N(h) + N(-h) - 2 N(0)) / h²` at `d = 0`.
///
/// The symmetric form makes the value exactly even in `h`. Positive
/// curvature means `c = 0` is a local minimum of `N(c)` (the low-
/// temperature shape), negative a local maximum.
pub fn curvature_at_zero(t: f64, h: f64) -> Result<f64> {
    if !(h.is_finite() && h != 0.0) {
        return Err(Error::InvalidRange(format!(
            "curvature step must be finite and nonzero, got {h}"
        )));
    }
    let n_plus = thermal_negativity(h, 0.0, t)?;
    let n_minus = thermal_negativity(-h, 0.0, t)?;
    let n_zero = thermal_negativity(0.0, 0.0, t)?;
    Ok(((n_plus + n_minus) - 2.0 * n_zero) / (h * h))
}

/// Outcome of the critical-temperature bisection.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CriticalTemperatureResult {
    /// Midpoint of the final bracket.
    pub t_c: f64,
    /// Final bracket `(low, high)`, no wider than the requested tolerance.
    pub bracket: (f64, f64),
    /// Curvature at the final bracket's low end (opposite sign to high).
    pub curvature_low: f64,
    /// Curvature at the final bracket's high end.
    pub curvature_high: f64,
    /// Number of bisection steps taken.
    pub iterations: usize,
}

/// Finds the temperature where the curvature of `N(c)` at `c = 0` changes
/// sign, by bisection on `[t_low, t_high]` down to a bracket of width
/// `tol` (using the fixed probe step [`CURVATURE_STEP`]).
///
/// The endpoints must straddle the transition: curvature positive at
/// `t_low` and negative at `t_high` (or vice versa), otherwise
/// `Error::NoSignChange` is returned with both endpoint values.
pub fn find_critical_temperature(
    t_low: f64,
    t_high: f64,
    tol: f64,
) -> Result<CriticalTemperatureResult> {
    if !(t_low.is_finite() && t_high.is_finite() && t_low < t_high) {
        return Err(Error::InvalidRange(format!(
            "need finite t_low < t_high, got [{t_low}, {t_high}]"
        )));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidRange(format!(
            "bracket tolerance must be finite and positive, got {tol}"
        )));
    }

    let mut low = t_low;
    let mut high = t_high;
    let mut curvature_low = curvature_at_zero(low, CURVATURE_STEP)?;
    let mut curvature_high = curvature_at_zero(high, CURVATURE_STEP)?;
    // A strict `< 0.0` product keeps NaN endpoints on the error path too.
    let straddles_zero = curvature_low * curvature_high < 0.0;
    if !straddles_zero {
        return Err(Error::NoSignChange {
            low,
            high,
            curvature_low,
            curvature_high,
        });
    }

    let mut iterations = 0;
    while high - low > tol {
        if iterations >= MAX_BISECTION_ITERATIONS {
            return Err(Error::NoConvergence {
                sweeps: iterations,
                off_norm: high - low,
            });
        }
        let mid = 0.5 * (low + high);
        let curvature_mid = curvature_at_zero(mid, CURVATURE_STEP)?;
        iterations += 1;
        if (curvature_mid < 0.0) == (curvature_low < 0.0) {
            low = mid;
            curvature_low = curvature_mid;
        } else {
            high = mid;
            curvature_high = curvature_mid;
        }
    }

    Ok(CriticalTemperatureResult {
        t_c: 0.5 * (low + high),
        bracket: (low, high),
        curvature_low,
        curvature_high,
        iterations,
    })
}

/// Sweeps the thermal negativity over a `c` grid (at `d = 0`) for each
/// temperature, returning one `(temperature, series)` pair per entry of
/// `temps` in the order given.
pub fn thermal_sweep(
    temps: &[f64],
    c_min: f64,
    c_max: f64,
    steps: usize,
) -> Result<Vec<(f64, SweepSeries)>> {
    validate_grid(c_min, c_max, steps)?;
    for &t in temps {
        if !(t.is_finite() && t > 0.0) {
            return Err(Error::InvalidTemperature(t));
        }
    }
    let grid = linear_grid(c_min, c_max, steps);
    let mut out = Vec::with_capacity(temps.len());
    for &t in temps {
        let mut series = SweepSeries::new("c", vec!["negativity".to_string()]);
        for &c in &grid {
            series.push_record(c, vec![thermal_negativity(c, 0.0, t)?])?;
        }
        out.push((t, series));
    }
    Ok(out)
}
