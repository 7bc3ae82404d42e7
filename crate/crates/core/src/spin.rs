//! Spin operators and the hyperfine Hamiltonian of the nucleus-electron pair.
//!
//! The model is a spin-1 nucleus exchange-coupled to a spin-1/2 electron,
//! with independent effective fields on each particle:
//!
//! ```text
//! H = j (Ix⊗Sx + Iy⊗Sy + Iz⊗Sz) + c (1⊗Sz) + d (Iz⊗1)
//! ```
//!
//! in reduced units where the exchange coupling `j` is normally 1. The
//! joint basis is nuclear-major: `|m_I, m_S⟩` with `m_I ∈ {+1, 0, -1}`
//! (slow index) and `m_S ∈ {+1/2, -1/2}` (fast index), so e.g. index 3 is
//! `|0, ↓⟩`. Both orderings run from highest to lowest weight.

use num_complex::Complex64;

use crate::linalg::{kron, BipartiteDims, ComplexMatrix};

/// Bohr magneton, J/T (CODATA 2018).
pub const BOHR_MAGNETON_J_PER_T: f64 = 9.274_010_078_3e-24;
/// Nuclear magneton, J/T (CODATA 2018).
pub const NUCLEAR_MAGNETON_J_PER_T: f64 = 5.050_783_746_1e-27;
/// Planck constant, J·s (exact).
pub const PLANCK_J_S: f64 = 6.626_070_15e-34;
/// Boltzmann constant, J/K (exact).
pub const BOLTZMANN_J_PER_K: f64 = 1.380_649e-23;
/// Electron g-factor magnitude used in the field conversion.
pub const ELECTRON_G_FACTOR: f64 = 2.0;
/// Lithium-6 nuclear magnetic moment, in nuclear magnetons.
pub const NUCLEAR_MOMENT_NM: f64 = 0.822;
/// Zero-field hyperfine frequency of the modeled pair, Hz.
pub const HYPERFINE_FREQUENCY_HZ: f64 = 228.0e6;

/// Twice the nuclear spin quantum number (spin 1).
pub const NUCLEAR_TWO_J: u32 = 2;
/// Twice the electron spin quantum number (spin 1/2).
pub const ELECTRON_TWO_J: u32 = 1;

/// Joint basis indices of the 6-level nucleus-electron space.
///
/// Nuclear projection first (`up` = m_I +1, `zero` = 0, `down` = -1),
/// electron projection second (`up` = m_S +1/2, `down` = -1/2).
pub mod basis {
    /// `|+1, ↑⟩`
    pub const NUC_UP_EL_UP: usize = 0;
    /// `|+1, ↓⟩`
    pub const NUC_UP_EL_DOWN: usize = 1;
    /// `|0, ↑⟩`
    pub const NUC_ZERO_EL_UP: usize = 2;
    /// `|0, ↓⟩`
    pub const NUC_ZERO_EL_DOWN: usize = 3;
    /// `|-1, ↑⟩`
    pub const NUC_DOWN_EL_UP: usize = 4;
    /// `|-1, ↓⟩`
    pub const NUC_DOWN_EL_DOWN: usize = 5;
}

/// Dimensions of the nucleus ⊗ electron space: 3 × 2, nucleus first.
pub fn nucleus_electron_dims() -> BipartiteDims {
    BipartiteDims::new(3, 2)
}

/// Cartesian spin operators for a single particle of spin `two_j / 2`.
#[derive(Clone, Debug)]
pub struct SpinOperators {
    /// Hilbert-space dimension, `two_j + 1`.
    pub dim: usize,
    pub sx: ComplexMatrix,
    pub sy: ComplexMatrix,
    pub sz: ComplexMatrix,
}

/// Builds `Sx`, `Sy`, `Sz` for spin `j = two_j / 2` (ħ = 1).
///
/// Basis states are ordered by descending projection, `m = j, j-1, …, -j`,
/// so index 0 is the highest-weight state. The operators come from the
/// ladder matrix elements `S₊|j,m⟩ = sqrt(j(j+1) - m(m+1)) |j,m+1⟩` via
/// `Sx = (S₊ + S₋)/2` and `Sy = -i (S₊ - S₋)/2`; both are assembled by
/// multiplication with exact scale factors so the sparsity pattern of the
/// ladder operators survives bit-for-bit.
pub fn spin_operators(two_j: u32) -> SpinOperators {
    let dim = (two_j + 1) as usize;
    let j = f64::from(two_j) / 2.0;
    let m_of = |k: usize| j - k as f64;

    let mut sz = ComplexMatrix::zeros(dim, dim);
    for k in 0..dim {
        sz[(k, k)] = Complex64::new(m_of(k), 0.0);
    }

    let mut raising = ComplexMatrix::zeros(dim, dim);
    for k in 1..dim {
        let m = m_of(k);
        raising[(k - 1, k)] = Complex64::new((j * (j + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
    }
    let lowering = raising.adjoint();

    let sx = (&raising + &lowering).scaled(0.5);
    let sy = (&raising - &lowering).scaled(Complex64::new(0.0, -0.5));
    SpinOperators { dim, sx, sy, sz }
}

/// Dimensionless parameters of the pair Hamiltonian, in units of the
/// exchange coupling: `H = j_coupling (I·S) + c Sz + d Iz`.
///
/// `c` is the effective field on the electron, `d` the one on the nucleus.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldParams {
    pub j_coupling: f64,
    pub c: f64,
    pub d: f64,
}

impl Default for FieldParams {
    fn default() -> Self {
        Self {
            j_coupling: 1.0,
            c: 0.0,
            d: 0.0,
        }
    }
}

impl FieldParams {
    /// Reduced field parameters with unit exchange coupling.
    pub fn reduced(c: f64, d: f64) -> Self {
        Self {
            j_coupling: 1.0,
            c,
            d,
        }
    }
}

/// Assembles the 6×6 pair Hamiltonian for the given parameters.
///
/// In the nuclear-major basis of [`basis`] the matrix is block diagonal
/// with blocks `{0}`, `{1,2}`, `{3,4}`, `{5}`: the two stretched states
/// `|±1, ±⟩` are exact eigenstates, and the exchange term only couples
/// `|+1,↓⟩ ↔ |0,↑⟩` and `|0,↓⟩ ↔ |-1,↑⟩` with matrix element `j/√2`.
/// Entries outside this pattern cancel exactly (not merely to rounding):
/// the `Ix⊗Sx` and `Iy⊗Sy` contributions there are the same floating-point
/// number with opposite signs.
pub fn build_hamiltonian(params: &FieldParams) -> ComplexMatrix {
    let nuc = spin_operators(NUCLEAR_TWO_J);
    let el = spin_operators(ELECTRON_TWO_J);
    let id_nuc = ComplexMatrix::identity(nuc.dim);
    let id_el = ComplexMatrix::identity(el.dim);

    let exchange = &(&kron(&nuc.sx, &el.sx) + &kron(&nuc.sy, &el.sy)) + &kron(&nuc.sz, &el.sz);
    let electron_field = kron(&id_nuc, &el.sz);
    let nuclear_field = kron(&nuc.sz, &id_el);

    &(&exchange.scaled(params.j_coupling) + &electron_field.scaled(params.c))
        + &nuclear_field.scaled(params.d)
}

/// One reduced energy unit in joules: the exchange coupling is pinned to
/// the zero-field hyperfine quantum `h · f_hf`.
pub fn reduced_energy_unit_joules() -> f64 {
    PLANCK_J_S * HYPERFINE_FREQUENCY_HZ
}

/// Converts laboratory magnetic fields in tesla — `b1` acting on the
/// electron, `b2` on the nucleus — to reduced `c` and `d`.
///
/// The electron couples through `g μ_B`, the nucleus through its magnetic
/// moment with the opposite sign convention, which is why a positive `b2`
/// yields a (small) negative `d`. For equal fields the ratio `|c/d|` is a
/// few thousand: the electron dominates.
pub fn physical_to_reduced(b1_tesla: f64, b2_tesla: f64) -> FieldParams {
    let unit = reduced_energy_unit_joules();
    let c = ELECTRON_G_FACTOR * BOHR_MAGNETON_J_PER_T * b1_tesla / unit;
    let d = -NUCLEAR_MOMENT_NM * NUCLEAR_MAGNETON_J_PER_T * b2_tesla / unit;
    FieldParams::reduced(c, d)
}

/// Converts a laboratory temperature in kelvin to reduced units.
pub fn reduced_temperature_from_kelvin(kelvin: f64) -> f64 {
    BOLTZMANN_J_PER_K * kelvin / reduced_energy_unit_joules()
}

/// Kelvin per reduced temperature unit — about 11 mK, which is what makes
/// the cold-gas regime interesting here.
pub fn kelvin_per_reduced_unit() -> f64 {
    reduced_energy_unit_joules() / BOLTZMANN_J_PER_K
}
