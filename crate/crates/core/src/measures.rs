//! Bipartite states and their entanglement measures.
//!
//! Two validated state types — [`PureState`] and [`DensityMatrix`] — carry
//! their bipartite dimensions with them, so the measures below never have
//! to guess how a joint index factors. The measures are the I-concurrence
//! for pure states and the negativity for arbitrary states, plus an
//! independent Schmidt-coefficient route to the pure-state negativity that
//! exists purely to cross-check the partial-transpose route.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eig, partial_trace, partial_transpose, trace_norm, BipartiteDims, ComplexMatrix,
    Factor,
};

/// Largest deviation of `‖ψ‖²` from 1 accepted by [`PureState::new`].
pub const STATE_NORM_TOL: f64 = 1e-12;
/// Largest deviation of the trace from 1 accepted by [`DensityMatrix::new`].
pub const DENSITY_TRACE_TOL: f64 = 1e-10;
/// Most negative eigenvalue accepted by [`DensityMatrix::new`].
pub const DENSITY_EIGENVALUE_FLOOR: f64 = -1e-10;

/// Per-subsystem scale factors of the I-concurrence. Both are
/// conventionally unity; they are kept as named constants so the formulas
/// below read like their textbook form.
pub const CONCURRENCE_SCALE_FIRST: f64 = 1.0;
pub const CONCURRENCE_SCALE_SECOND: f64 = 1.0;

/// Normalized pure state of a bipartite system.
///
/// Amplitudes are stored in the joint basis with the first factor as the
/// slow index: `amplitudes[a * d_b + b]` is the coefficient of `|a⟩⊗|b⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
    dims: BipartiteDims,
}

impl PureState {
    /// Wraps amplitudes that are already normalized (within
    /// [`STATE_NORM_TOL`]).
    pub fn new(amplitudes: Vec<Complex64>, dims: BipartiteDims) -> Result<Self> {
        if amplitudes.len() != dims.total() {
            return Err(Error::DimensionMismatch {
                expected: dims.total(),
                got: amplitudes.len(),
            });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !norm_sqr.is_finite() || (norm_sqr - 1.0).abs() > STATE_NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { amplitudes, dims })
    }

    /// Normalizes arbitrary amplitudes; any overall scale is absorbed here.
    ///
    /// Rejects vectors too close to zero for the direction to mean anything.
    pub fn normalized(mut amplitudes: Vec<Complex64>, dims: BipartiteDims) -> Result<Self> {
        if amplitudes.len() != dims.total() {
            return Err(Error::DimensionMismatch {
                expected: dims.total(),
                got: amplitudes.len(),
            });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !norm_sqr.is_finite() || norm_sqr < 1e-30 {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let inv = 1.0 / norm_sqr.sqrt();
        for a in &mut amplitudes {
            *a *= inv;
        }
        Ok(Self { amplitudes, dims })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn dims(&self) -> BipartiteDims {
        self.dims
    }

    /// Amplitude of the joint basis state `|a⟩⊗|b⟩`.
    pub fn amplitude(&self, a: usize, b: usize) -> Complex64 {
        self.amplitudes[self.dims.joint_index(a, b)]
    }

    /// Inner product `⟨self|other⟩`.
    pub fn overlap(&self, other: &PureState) -> Complex64 {
        assert_eq!(self.dims, other.dims, "overlap requires matching dims");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// The projector `|ψ⟩⟨ψ|` as a raw matrix.
    pub fn projector(&self) -> ComplexMatrix {
        let n = self.amplitudes.len();
        ComplexMatrix::from_fn(n, n, |i, j| self.amplitudes[i] * self.amplitudes[j].conj())
    }

    /// The projector `|ψ⟩⟨ψ|` as a density matrix.
    ///
    /// Valid by construction (unit trace, rank one, positive), so this
    /// skips the eigenvalue gate that [`DensityMatrix::new`] applies to
    /// untrusted input.
    pub fn density(&self) -> DensityMatrix {
        DensityMatrix {
            matrix: self.projector(),
            dims: self.dims,
        }
    }

    /// Reduced density matrix of one factor, `tr_other |ψ⟩⟨ψ|`.
    pub fn reduced(&self, keep: Factor) -> ComplexMatrix {
        partial_trace(&self.projector(), self.dims, keep)
            .expect("projector shape matches state dims by construction")
    }
}

/// Validated density matrix of a bipartite system.
///
/// Construction via [`DensityMatrix::new`] checks Hermiticity, unit trace,
/// and positive semidefiniteness, so every value of this type is a
/// physical state (within the stated tolerances).
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dims: BipartiteDims,
}

impl DensityMatrix {
    /// Validates and wraps a candidate density matrix.
    pub fn new(matrix: ComplexMatrix, dims: BipartiteDims) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() != dims.total() {
            return Err(Error::DimensionMismatch {
                expected: dims.total(),
                got: matrix.rows(),
            });
        }
        let eig = hermitian_eig(&matrix)?; // rejects non-Hermitian input
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > DENSITY_TRACE_TOL || trace.im.abs() > DENSITY_TRACE_TOL {
            return Err(Error::InvalidTrace { trace: trace.re });
        }
        let min_eigenvalue = eig.eigenvalues[0];
        if min_eigenvalue < DENSITY_EIGENVALUE_FLOOR {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
        }
        Ok(Self { matrix, dims })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dims(&self) -> BipartiteDims {
        self.dims
    }

    /// `tr ρ²` — 1 for pure states, 1/n for the maximally mixed state.
    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    /// Recovers the state vector when the matrix is (numerically) a rank-1
    /// projector, i.e. `1 - tr ρ² ≤ tol`. The overall phase is arbitrary.
    pub fn as_pure_state(&self, tol: f64) -> Option<PureState> {
        if 1.0 - self.purity() > tol {
            return None;
        }
        // For ρ = |ψ⟩⟨ψ|, the column with the largest diagonal entry is
        // ψ scaled by a nonzero amplitude; normalization restores ψ.
        let n = self.matrix.rows();
        let pivot = (0..n)
            .max_by(|&i, &j| self.matrix[(i, i)].re.total_cmp(&self.matrix[(j, j)].re))
            .expect("density matrix is non-empty");
        PureState::normalized(self.matrix.column(pivot), self.dims).ok()
    }
}

/// Largest value the I-concurrence can take on the given bipartite space:
/// `sqrt(2 (d-1)/d)` with `d` the smaller subsystem dimension (scale
/// factors of unity).
pub fn concurrence_max(dims: BipartiteDims) -> f64 {
    let d = dims.d_a.min(dims.d_b) as f64;
    (2.0 * CONCURRENCE_SCALE_FIRST * CONCURRENCE_SCALE_SECOND * (d - 1.0) / d).sqrt()
}

/// I-concurrence of a pure bipartite state:
/// `C = sqrt(2 ν₁ ν₂ (1 - tr ρ_A²))`, where `ρ_A` is either reduced state.
///
/// Zero exactly for product states, and at most [`concurrence_max`].
pub fn concurrence_pure(state: &PureState) -> f64 {
    let rho_a = state.reduced(Factor::First);
    let purity = (&rho_a * &rho_a).trace().re;
    let arg = 2.0 * CONCURRENCE_SCALE_FIRST * CONCURRENCE_SCALE_SECOND * (1.0 - purity);
    // Purity can exceed 1 by a few ulp for product states; clamp.
    arg.max(0.0).sqrt()
}

/// Negativity `N = max(0, (‖ρ^{T_A}‖₁ - 1) / 2)` of a bipartite state.
///
/// The partial transpose is taken over the first factor; transposing the
/// second instead gives the same value because the two results are full
/// transposes of one another.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    let pt = partial_transpose(rho.matrix(), rho.dims(), Factor::First)?;
    let norm = trace_norm(&pt)?;
    Ok(((norm - 1.0) / 2.0).max(0.0))
}

/// Pure-state negativity computed from Schmidt coefficients instead of the
/// partial transpose: `N = ((Σ_i sqrt(λ_i))² - 1) / 2` with `λ_i` the
/// eigenvalues of the reduced state.
///
/// Exists as an independent cross-check of [`negativity`]; the two must
/// agree on pure states to solver accuracy.
pub fn schmidt_negativity_oracle(state: &PureState) -> Result<f64> {
    // Both reduced states share the Schmidt spectrum, but the larger factor
    // pads it with zeros whose numerical jitter is amplified by the square
    // root; diagonalize the smaller side so every eigenvalue is genuine.
    let keep = if state.dims().d_a <= state.dims().d_b {
        Factor::First
    } else {
        Factor::Second
    };
    let rho_a = state.reduced(keep);
    let eig = hermitian_eig(&rho_a)?;
    let sum_sqrt: f64 = eig
        .eigenvalues
        .iter()
        .map(|&lambda| lambda.max(0.0).sqrt())
        .sum();
    Ok(((sum_sqrt * sum_sqrt - 1.0) / 2.0).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::basis::*;
    use crate::spin::nucleus_electron_dims;

    const ZERO: Complex64 = Complex64::new(0.0, 0.0);
    const ONE: Complex64 = Complex64::new(1.0, 0.0);

    fn basis_state(dims: BipartiteDims, k: usize) -> PureState {
        let mut amp = vec![ZERO; dims.total()];
        amp[k] = ONE;
        PureState::new(amp, dims).unwrap()
    }

    /// (|0,↑⟩ + |-1,↓⟩)/√2 — maximally entangled across the 3×2 split.
    fn bell_like_state() -> PureState {
        let dims = nucleus_electron_dims();
        let mut amp = vec![ZERO; 6];
        amp[NUC_ZERO_EL_UP] = ONE;
        amp[NUC_DOWN_EL_DOWN] = ONE;
        PureState::normalized(amp, dims).unwrap()
    }

    /// -√(1/3)|0,↓⟩ + √(2/3)|-1,↑⟩ — one of the zero-field ground states.
    fn lambda_state() -> PureState {
        let dims = nucleus_electron_dims();
        let mut amp = vec![ZERO; 6];
        amp[NUC_ZERO_EL_DOWN] = -(1.0f64 / 3.0).sqrt() * ONE;
        amp[NUC_DOWN_EL_UP] = (2.0f64 / 3.0).sqrt() * ONE;
        PureState::new(amp, dims).unwrap()
    }

    #[test]
    fn pure_state_rejects_unnormalized_input() {
        let dims = nucleus_electron_dims();
        let amp = vec![ONE; 6];
        match PureState::new(amp, dims) {
            Err(Error::NotNormalized { norm_sqr }) => assert!((norm_sqr - 6.0).abs() < 1e-12),
            other => panic!("expected NotNormalized, got {other:?}"),
        }
    }

    #[test]
    fn pure_state_rejects_wrong_length() {
        let dims = nucleus_electron_dims();
        assert!(matches!(
            PureState::new(vec![ONE; 5], dims),
            Err(Error::DimensionMismatch {
                expected: 6,
                got: 5
            })
        ));
    }

    #[test]
    fn normalized_rescales_and_rejects_null_vector() {
        let dims = BipartiteDims::new(2, 2);
        let s = PureState::normalized(vec![2.0 * ONE, ZERO, ZERO, ZERO], dims).unwrap();
        assert!((s.amplitudes()[0] - ONE).norm() < 1e-15);
        assert!(PureState::normalized(vec![ZERO; 4], dims).is_err());
    }

    #[test]
    fn product_state_has_no_entanglement() {
        let s = basis_state(nucleus_electron_dims(), NUC_UP_EL_UP);
        assert_eq!(concurrence_pure(&s), 0.0);
        assert!(negativity(&s.density()).unwrap() <= 1e-12);
    }

    #[test]
    fn bell_like_state_is_maximally_entangled() {
        let s = bell_like_state();
        assert!((concurrence_pure(&s) - 1.0).abs() < 1e-12);
        assert!((negativity(&s.density()).unwrap() - 0.5).abs() < 1e-12);
        assert!((schmidt_negativity_oracle(&s).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn lambda_state_measures() {
        let s = lambda_state();
        let two_sqrt2_over_3 = 2.0 * std::f64::consts::SQRT_2 / 3.0;
        assert!((concurrence_pure(&s) - two_sqrt2_over_3).abs() < 1e-12);
        let n = negativity(&s.density()).unwrap();
        assert!((n - std::f64::consts::SQRT_2 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn lambda_state_reduced_spectrum() {
        let rho_a = lambda_state().reduced(Factor::First);
        let eig = hermitian_eig(&rho_a).unwrap();
        let expect = [0.0, 1.0 / 3.0, 2.0 / 3.0];
        for (got, want) in eig.eigenvalues.iter().zip(expect) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn singlet_in_two_by_two() {
        let dims = BipartiteDims::new(2, 2);
        let amp = vec![ZERO, ONE, -ONE, ZERO];
        let s = PureState::normalized(amp, dims).unwrap();
        assert!((concurrence_pure(&s) - 1.0).abs() < 1e-12);
        assert!((negativity(&s.density()).unwrap() - 0.5).abs() < 1e-12);
        assert!((concurrence_max(dims) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn concurrence_bound_by_smaller_dimension() {
        assert!((concurrence_max(nucleus_electron_dims()) - 1.0).abs() < 1e-15);
        let d33 = concurrence_max(BipartiteDims::new(3, 3));
        assert!((d33 - (4.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn density_matrix_rejects_bad_input() {
        let dims = BipartiteDims::new(2, 2);

        let mut not_hermitian = ComplexMatrix::identity(4).scaled(0.25);
        not_hermitian[(0, 1)] = ONE;
        assert!(matches!(
            DensityMatrix::new(not_hermitian, dims),
            Err(Error::NotHermitian { .. })
        ));

        let wrong_trace = ComplexMatrix::identity(4).scaled(0.5);
        assert!(matches!(
            DensityMatrix::new(wrong_trace, dims),
            Err(Error::InvalidTrace { .. })
        ));

        let negative = ComplexMatrix::from_real_diagonal(&[1.5, -0.5, 0.0, 0.0]);
        assert!(matches!(
            DensityMatrix::new(negative, dims),
            Err(Error::NotPositiveSemidefinite { .. })
        ));

        let wrong_shape = ComplexMatrix::identity(5).scaled(0.2);
        assert!(matches!(
            DensityMatrix::new(wrong_shape, dims),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn density_matrix_accepts_maximally_mixed() {
        let dims = nucleus_electron_dims();
        let rho = DensityMatrix::new(ComplexMatrix::identity(6).scaled(1.0 / 6.0), dims).unwrap();
        assert!((rho.purity() - 1.0 / 6.0).abs() < 1e-12);
        assert_eq!(negativity(&rho).unwrap(), 0.0);
        assert!(rho.as_pure_state(1e-9).is_none());
    }

    #[test]
    fn as_pure_state_round_trips_up_to_phase() {
        let s = bell_like_state();
        let recovered = s.density().as_pure_state(1e-9).unwrap();
        let fidelity = s.overlap(&recovered).norm_sqr();
        assert!((fidelity - 1.0).abs() < 1e-12);
    }

    #[test]
    fn oracle_matches_partial_transpose_on_lambda_state() {
        let s = lambda_state();
        let via_pt = negativity(&s.density()).unwrap();
        let via_schmidt = schmidt_negativity_oracle(&s).unwrap();
        assert!((via_pt - via_schmidt).abs() < 1e-12);
    }
}
