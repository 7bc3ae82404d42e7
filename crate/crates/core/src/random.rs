//! Random matrices and states, mainly for exercising invariants in tests.
//!
//! The constructions prioritize validity over any particular measure:
//! uniform entries are fine for checking algebraic identities, bounds, and
//! oracle agreement, which is all these are used for. Everything takes the
//! RNG as an argument so callers control seeding and reproducibility.

use num_complex::Complex64;
use rand::Rng;

use crate::linalg::{hermitian_eig, kron, BipartiteDims, ComplexMatrix};
use crate::measures::{DensityMatrix, PureState};

fn random_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Random Hermitian matrix with entries of order one.
pub fn random_hermitian(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        for j in (i + 1)..n {
            let z = random_complex(rng);
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

/// Random unitary matrix: the eigenvector matrix of a random Hermitian one.
pub fn random_unitary(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let h = random_hermitian(n, rng);
    hermitian_eig(&h)
        .expect("random Hermitian matrices diagonalize")
        .eigenvectors
}

/// Random normalized pure state on the given bipartite space.
pub fn random_pure_state(dims: BipartiteDims, rng: &mut impl Rng) -> PureState {
    loop {
        let amp: Vec<Complex64> = (0..dims.total()).map(|_| random_complex(rng)).collect();
        // Resample in the (vanishing-probability) case of a near-null draw.
        if let Ok(state) = PureState::normalized(amp, dims) {
            return state;
        }
    }
}

/// Random full-rank density matrix, `B B† / tr(B B†)` for random `B`.
pub fn random_density_matrix(dims: BipartiteDims, rng: &mut impl Rng) -> DensityMatrix {
    let n = dims.total();
    let b = ComplexMatrix::from_fn(n, n, |_, _| random_complex(rng));
    let bb = &b * &b.adjoint();
    let rho = bb.scaled(1.0 / bb.trace().re);
    DensityMatrix::new(rho, dims).expect("B B† normalized by its trace is a valid state")
}

/// Random product state `ρ_A ⊗ ρ_B` — separable by construction, so its
/// negativity must vanish.
pub fn random_product_density(dims: BipartiteDims, rng: &mut impl Rng) -> DensityMatrix {
    let a = random_density_matrix(BipartiteDims::new(dims.d_a, 1), rng);
    let b = random_density_matrix(BipartiteDims::new(dims.d_b, 1), rng);
    let joint = kron(a.matrix(), b.matrix());
    DensityMatrix::new(joint, dims).expect("product of valid states is a valid state")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2, 3, 6] {
            let u = random_unitary(n, &mut rng);
            let utu = &u.adjoint() * &u;
            assert!(utu.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-11);
        }
    }

    #[test]
    fn seeded_draws_are_reproducible() {
        let dims = BipartiteDims::new(3, 2);
        let a = random_pure_state(dims, &mut ChaCha8Rng::seed_from_u64(42));
        let b = random_pure_state(dims, &mut ChaCha8Rng::seed_from_u64(42));
        assert_eq!(a.amplitudes(), b.amplitudes());
    }

    #[test]
    fn density_draws_are_valid_and_full_rank() {
        let dims = BipartiteDims::new(3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let rho = random_density_matrix(dims, &mut rng);
        let purity = rho.purity();
        assert!(purity > 1.0 / 6.0 && purity < 1.0);
    }

    #[test]
    fn product_density_has_product_shape() {
        let dims = BipartiteDims::new(3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let rho = random_product_density(dims, &mut rng);
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
    }
}
