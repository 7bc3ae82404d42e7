//! Dense complex linear algebra for small Hilbert spaces.
//!
//! Everything here is sized for the handful-of-levels matrices this crate
//! works with (6×6 and below), so the implementations favor clarity and
//! exactness over asymptotic speed: row-major `Vec<Complex64>` storage, a
//! cyclic Jacobi eigensolver, and index-shuffling partial trace / partial
//! transpose that introduce no rounding of their own.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest allowed deviation `max |a_ij - conj(a_ji)|` for a matrix to be
/// accepted by Hermitian-only routines.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Off-diagonal Frobenius norm below which the Jacobi iteration stops.
pub const JACOBI_OFF_DIAGONAL_TARGET: f64 = 1e-13;

/// Sweep cap for [`hermitian_eig`]; reaching it is reported as an error,
/// never papered over with a partial result.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Dense complex matrix in row-major storage.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be nonzero");
        Self {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix entry by entry from `f(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Square matrix with the given complex diagonal.
    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Square matrix with the given real diagonal.
    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace requires a square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// The matrix scaled by a (complex or real) factor.
    pub fn scaled(&self, factor: impl Into<Complex64>) -> Self {
        let factor = factor.into();
        let mut out = self.clone();
        for entry in &mut out.entries {
            *entry *= factor;
        }
        out
    }

    /// Largest `|a_ij - conj(a_ji)|` over all index pairs, `i <= j`.
    ///
    /// Returns `f64::INFINITY` when any entry is non-finite, so NaN and
    /// infinity can never sneak past a Hermiticity gate.
    pub fn hermiticity_deviation(&self) -> f64 {
        assert!(
            self.is_square(),
            "Hermiticity is defined for square matrices"
        );
        let mut max_dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                let dev = (self[(i, j)] - self[(j, i)].conj()).norm();
                if !dev.is_finite() {
                    return f64::INFINITY;
                }
                max_dev = max_dev.max(dev);
            }
        }
        max_dev
    }

    /// Whether the matrix is Hermitian within `tol` (see
    /// [`hermiticity_deviation`](Self::hermiticity_deviation)).
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermiticity_deviation() <= tol
    }

    /// Largest entrywise absolute difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch in max_abs_diff"
        );
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Copy of column `j` as a vector of amplitudes.
    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch in addition"
        );
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch in subtraction"
        );
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert!(self.cols == rhs.rows, "shape mismatch in multiplication");
        ComplexMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self[(i, k)] * rhs[(k, j)]).sum()
        })
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Dimensions of a bipartite Hilbert space `H_A ⊗ H_B`.
///
/// A joint basis index factors as `k = a * d_b + b`, i.e. the first factor
/// is the slow (outer) index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartiteDims {
    pub d_a: usize,
    pub d_b: usize,
}

impl BipartiteDims {
    pub fn new(d_a: usize, d_b: usize) -> Self {
        assert!(d_a >= 1 && d_b >= 1, "subsystem dimensions must be nonzero");
        Self { d_a, d_b }
    }

    /// Dimension of the joint space.
    pub fn total(self) -> usize {
        self.d_a * self.d_b
    }

    /// Joint basis index of `|a⟩ ⊗ |b⟩`.
    pub fn joint_index(self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.d_a && b < self.d_b, "basis index out of range");
        a * self.d_b + b
    }
}

/// Which tensor factor an operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    /// The first (outer, slow-index) factor.
    First,
    /// The second (inner, fast-index) factor.
    Second,
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(a.rows() * b.rows(), a.cols() * b.cols(), |i, j| {
        let (ia, ib) = (i / b.rows(), i % b.rows());
        let (ja, jb) = (j / b.cols(), j % b.cols());
        a[(ia, ja)] * b[(ib, jb)]
    })
}

/// Result of diagonalizing a Hermitian matrix: `A = V Λ V†`.
#[derive(Clone, Debug)]
pub struct HermitianEigenDecomposition {
    /// Real eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Unitary matrix whose `k`-th column is the eigenvector for
    /// `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigenDecomposition {
    /// Copy of the `k`-th eigenvector.
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        self.eigenvectors.column(k)
    }
}

fn ensure_hermitian(matrix: &ComplexMatrix) -> Result<()> {
    if !matrix.is_square() {
        return Err(Error::DimensionMismatch {
            expected: matrix.rows(),
            got: matrix.cols(),
        });
    }
    let dev = matrix.hermiticity_deviation();
    if dev > HERMITICITY_TOL {
        return Err(Error::NotHermitian { max_deviation: dev });
    }
    Ok(())
}

/// Off-diagonal Frobenius norm `sqrt(Σ_{i≠j} |a_ij|²)`, assuming Hermitian
/// symmetry so only the upper triangle is visited.
fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let mut sum = 0.0;
    for i in 0..a.rows() {
        for j in (i + 1)..a.cols() {
            sum += a[(i, j)].norm_sqr();
        }
    }
    (2.0 * sum).sqrt()
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Each sweep visits every upper-triangle pair `(p, q)` and applies a
/// complex plane rotation chosen to annihilate `a_pq`. Writing
/// `a_pq = r e^{iφ}` and `θ = (a_qq - a_pp) / 2r`, the rotation is
///
/// ```text
/// U[p,p] = c e^{iφ},   U[p,q] = s e^{iφ},
/// U[q,p] = -s,         U[q,q] = c,
/// ```
///
/// with `t = sign(θ) / (|θ| + sqrt(θ² + 1))`, `c = 1/sqrt(1 + t²)` and
/// `s = t c` — the smaller root of `t² + 2θt - 1 = 0`, which keeps every
/// rotation angle below π/4 and the iteration stable. The update
/// `A ← U† A U` is accumulated into `V ← V U`, so on success `A = V Λ V†`.
///
/// Pairs with `a_pq` exactly zero are skipped, which means exact sparsity
/// patterns (block structure) survive the iteration bit-for-bit: entries
/// that start at zero are only ever updated as linear combinations of other
/// exact zeros.
///
/// The iteration stops once the off-diagonal Frobenius norm drops below
/// [`JACOBI_OFF_DIAGONAL_TARGET`]; if `max_sweeps` sweeps pass without
/// reaching it, `Error::NoConvergence` is returned rather than a silently
/// inaccurate decomposition. For well-scaled matrices of this crate's size
/// convergence takes a handful of sweeps, so [`hermitian_eig`]'s cap of
/// [`JACOBI_MAX_SWEEPS`] is generous.
///
/// Reference: Golub & Van Loan, *Matrix Computations*, §8.5 (cyclic Jacobi),
/// adapted to complex Hermitian input.
pub fn hermitian_eig_with_sweep_cap(
    matrix: &ComplexMatrix,
    max_sweeps: usize,
) -> Result<HermitianEigenDecomposition> {
    ensure_hermitian(matrix)?;
    let n = matrix.rows();
    let mut a = matrix.clone();
    let mut v = ComplexMatrix::identity(n);

    let mut off = off_diagonal_norm(&a);
    let mut sweeps = 0;
    while off > JACOBI_OFF_DIAGONAL_TARGET {
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r;
                let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Rows: A ← U† A.
                for j in 0..n {
                    let ap = a[(p, j)];
                    let aq = a[(q, j)];
                    a[(p, j)] = phase.conj() * ap * c - aq * s;
                    a[(q, j)] = phase.conj() * ap * s + aq * c;
                }
                // Columns: A ← A U.
                for i in 0..n {
                    let ap = a[(i, p)];
                    let aq = a[(i, q)];
                    a[(i, p)] = phase * ap * c - aq * s;
                    a[(i, q)] = phase * ap * s + aq * c;
                }
                // The rotation annihilates (p, q) analytically; pin the pair
                // to exact zero and the touched diagonal to exact real so
                // rounding noise cannot accumulate there.
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

                // Accumulate V ← V U.
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)];
                    v[(i, p)] = phase * vp * c - vq * s;
                    v[(i, q)] = phase * vp * s + vq * c;
                }
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a);
    }

    // Sort ascending; the permutation is applied to the eigenvector columns
    // so column k always matches eigenvalue k.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[(k, k)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);

    Ok(HermitianEigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigendecomposition of a Hermitian matrix (ascending eigenvalues).
///
/// See [`hermitian_eig_with_sweep_cap`] for the algorithm; this wrapper uses
/// the default cap of [`JACOBI_MAX_SWEEPS`] sweeps.
pub fn hermitian_eig(matrix: &ComplexMatrix) -> Result<HermitianEigenDecomposition> {
    hermitian_eig_with_sweep_cap(matrix, JACOBI_MAX_SWEEPS)
}

/// Partial trace of a joint-space operator, keeping the chosen factor.
///
/// With `k = a · d_b + b` indexing (first factor slow):
/// keeping the first factor gives `out[i,j] = Σ_b rho[(i,b),(j,b)]`, keeping
/// the second gives `out[s,t] = Σ_a rho[(a,s),(a,t)]`. Entries are summed
/// without any other arithmetic, so the operation is exact up to addition
/// rounding.
pub fn partial_trace(
    rho: &ComplexMatrix,
    dims: BipartiteDims,
    keep: Factor,
) -> Result<ComplexMatrix> {
    check_joint_shape(rho, dims)?;
    let out = match keep {
        Factor::First => ComplexMatrix::from_fn(dims.d_a, dims.d_a, |i, j| {
            (0..dims.d_b)
                .map(|b| rho[(dims.joint_index(i, b), dims.joint_index(j, b))])
                .sum()
        }),
        Factor::Second => ComplexMatrix::from_fn(dims.d_b, dims.d_b, |s, t| {
            (0..dims.d_a)
                .map(|a| rho[(dims.joint_index(a, s), dims.joint_index(a, t))])
                .sum()
        }),
    };
    Ok(out)
}

/// Partial transpose of a joint-space operator over the chosen factor.
///
/// Transposing the first factor maps `rho[(a,s),(b,t)] → rho[(b,s),(a,t)]`,
/// the second maps `rho[(a,s),(b,t)] → rho[(a,t),(b,s)]`. This is a pure
/// permutation of entries — no arithmetic — so applying it twice returns
/// the original matrix bit-for-bit.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    dims: BipartiteDims,
    transposed: Factor,
) -> Result<ComplexMatrix> {
    check_joint_shape(rho, dims)?;
    let out = match transposed {
        Factor::First => ComplexMatrix::from_fn(dims.total(), dims.total(), |row, col| {
            let (a, s) = (row / dims.d_b, row % dims.d_b);
            let (b, t) = (col / dims.d_b, col % dims.d_b);
            rho[(dims.joint_index(b, s), dims.joint_index(a, t))]
        }),
        Factor::Second => ComplexMatrix::from_fn(dims.total(), dims.total(), |row, col| {
            let (a, s) = (row / dims.d_b, row % dims.d_b);
            let (b, t) = (col / dims.d_b, col % dims.d_b);
            rho[(dims.joint_index(a, t), dims.joint_index(b, s))]
        }),
    };
    Ok(out)
}

fn check_joint_shape(rho: &ComplexMatrix, dims: BipartiteDims) -> Result<()> {
    if !rho.is_square() || rho.rows() != dims.total() {
        return Err(Error::DimensionMismatch {
            expected: dims.total(),
            got: rho.rows(),
        });
    }
    Ok(())
}

/// Trace norm `‖m‖₁ = Σ |λ_i|` of a Hermitian matrix.
///
/// Only Hermitian input is accepted: the eigenvalues are then real and the
/// trace norm is the sum of their absolute values, with no singular-value
/// machinery needed.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    let eig = hermitian_eig(m)?;
    Ok(eig.eigenvalues.iter().map(|lambda| lambda.abs()).sum())
}
