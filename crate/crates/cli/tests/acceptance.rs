//! Acceptance suite: one test per published claim about this tool, each at
//! its stated tolerance. A green run here means the library reproduces the
//! reference values for the lithium-6 hyperfine system — peak concurrence
//! 2√2/3, zero-field mixture negativity 1/3, the thermal spot values, the
//! critical temperature near 0.107 — and that the numerics satisfy their
//! structural guarantees on randomized input.

use std::process::Command;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hfent_core::ground::{
    concurrence_closed_form, ground_energy_closed_form, ground_point, ground_state,
    zero_field_ground_mixture, DEFAULT_DEGENERACY_TOL,
};
use hfent_core::linalg::{
    hermitian_eig, kron, partial_trace, partial_transpose, ComplexMatrix, Factor,
};
use hfent_core::measures::{concurrence_pure, negativity, schmidt_negativity_oracle, PureState};
use hfent_core::random::{random_density_matrix, random_pure_state, random_unitary};
use hfent_core::spin::{build_hamiltonian, nucleus_electron_dims, spin_operators, FieldParams};
use hfent_core::thermal::{
    curvature_at_zero, find_critical_temperature, gibbs_state, thermal_negativity, ThermalParams,
    CURVATURE_STEP,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn criterion_01_peak_concurrence_is_two_root_two_thirds() {
    let peak = 2.0 * 2.0_f64.sqrt() / 3.0;
    assert!((concurrence_closed_form(1e-6) - peak).abs() < 1e-6);
    assert!((concurrence_closed_form(-1e-6) - peak).abs() < 1e-6);
    assert_eq!((peak * 1000.0).round() / 1000.0, 0.943);
}

#[test]
fn criterion_02_degenerate_mixture_negativity_is_one_third() {
    let n = negativity(&zero_field_ground_mixture()).unwrap();
    assert!(
        (n - 1.0 / 3.0).abs() < 1e-9,
        "negativity of the zero-field mixture is {n}, expected 1/3"
    );
}

#[test]
fn criterion_03_thermal_negativity_spot_values() {
    let warm = thermal_negativity(0.0, 0.0, 0.5).unwrap();
    assert!((warm - 0.243).abs() < 0.001, "t = 0.5 gives {warm}");
    let cold = thermal_negativity(0.0, 0.0, 0.05).unwrap();
    assert!((cold - 0.333).abs() < 0.001, "t = 0.05 gives {cold}");
}

#[test]
fn criterion_04_critical_temperature_near_0_107() {
    let start = Instant::now();
    let result = find_critical_temperature(0.05, 0.5, 1e-4).unwrap();
    let elapsed = start.elapsed();
    assert!(
        (result.t_c - 0.107).abs() < 0.003,
        "t_c = {}, expected 0.107 ± 0.003",
        result.t_c
    );
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "bisection took {elapsed:?}, budget is 5 s"
    );
}

#[test]
fn criterion_05_closed_forms_match_numerics_on_500_random_fields() {
    let mut rng = rng(0xacce_0005);
    for _ in 0..500 {
        let mut c: f64 = rng.gen_range(-10.0..10.0);
        while c.abs() < 1e-6 {
            c = rng.gen_range(-10.0..10.0);
        }
        let gs = ground_state(&FieldParams::reduced(c, 0.0), DEFAULT_DEGENERACY_TOL).unwrap();
        assert!(
            (gs.energy - ground_energy_closed_form(c)).abs() < 1e-9,
            "energy mismatch at c = {c}"
        );
        let pure = gs
            .state
            .as_pure_state(1e-9)
            .expect("simple level off the crossing");
        assert!(
            (concurrence_pure(&pure) - concurrence_closed_form(c)).abs() < 1e-9,
            "concurrence mismatch at c = {c}"
        );
    }
}

/// The Hamiltonian in the product basis |m_I, m_S⟩ ordered
/// (+1,↑), (+1,↓), (0,↑), (0,↓), (−1,↑), (−1,↓): Zeeman terms on the
/// diagonal, and the flip-flop coupling 1/√2 linking the two aligned pairs.
fn reference_matrix(c: f64, d: f64) -> ComplexMatrix {
    let f = 0.5_f64.sqrt();
    let diag = [
        0.5 + c / 2.0 + d,
        -0.5 - c / 2.0 + d,
        c / 2.0,
        -c / 2.0,
        -0.5 + c / 2.0 - d,
        0.5 - c / 2.0 - d,
    ];
    let mut m = ComplexMatrix::zeros(6, 6);
    for (k, &e) in diag.iter().enumerate() {
        m[(k, k)] = Complex64::new(e, 0.0);
    }
    for (p, q) in [(1, 2), (2, 1), (3, 4), (4, 3)] {
        m[(p, q)] = Complex64::new(f, 0.0);
    }
    m
}

#[test]
fn criterion_06_hamiltonian_matches_reference_matrix_with_exact_zero_pattern() {
    let coupled = [(1, 2), (2, 1), (3, 4), (4, 3)];
    let mut rng = rng(0xacce_0006);
    for _ in 0..50 {
        let c = rng.gen_range(-10.0..10.0);
        let d = rng.gen_range(-10.0..10.0);
        let h = build_hamiltonian(&FieldParams::reduced(c, d));
        assert!(h.max_abs_diff(&reference_matrix(c, d)) < 1e-12);
        for i in 0..6 {
            for j in 0..6 {
                if i != j && !coupled.contains(&(i, j)) {
                    assert_eq!(
                        h[(i, j)],
                        Complex64::new(0.0, 0.0),
                        "entry ({i}, {j}) must be exactly zero"
                    );
                }
            }
        }
    }
}

#[test]
fn criterion_07_negativity_matches_schmidt_oracle_on_200_pure_states() {
    let dims = nucleus_electron_dims();
    let mut rng = rng(0xacce_0007);
    for _ in 0..200 {
        let psi = random_pure_state(dims, &mut rng);
        let via_pt = negativity(&psi.density()).unwrap();
        let via_schmidt = schmidt_negativity_oracle(&psi).unwrap();
        assert!(
            (via_pt - via_schmidt).abs() < 1e-9,
            "disagreement {}",
            (via_pt - via_schmidt).abs()
        );
    }
}

#[test]
fn criterion_08_property_suite() {
    spin_commutation_and_casimir();
    partial_transpose_involution_and_trace_preservation();
    local_unitary_invariance_of_both_measures();
    evenness_in_the_electron_field();
    gibbs_state_validity();
    zero_temperature_continuity();
}

fn spin_commutation_and_casimir() {
    for two_j in 1..=4u32 {
        let ops = spin_operators(two_j);
        let j = f64::from(two_j) / 2.0;
        let i_unit = Complex64::new(0.0, 1.0);

        let pairs = [
            (&ops.sx, &ops.sy, &ops.sz),
            (&ops.sy, &ops.sz, &ops.sx),
            (&ops.sz, &ops.sx, &ops.sy),
        ];
        for (a, b, c) in pairs {
            let comm = &(a * b) - &(b * a);
            let expected = c.scaled(i_unit);
            assert!(
                comm.max_abs_diff(&expected) < 1e-12,
                "commutator broken for two_j = {two_j}"
            );
        }

        let casimir = &(&(&ops.sx * &ops.sx) + &(&ops.sy * &ops.sy)) + &(&ops.sz * &ops.sz);
        let expected = ComplexMatrix::identity(ops.dim).scaled(j * (j + 1.0));
        assert!(
            casimir.max_abs_diff(&expected) < 1e-12,
            "Casimir broken for two_j = {two_j}"
        );
    }
}

fn partial_transpose_involution_and_trace_preservation() {
    let dims = nucleus_electron_dims();
    let mut rng = rng(0xacce_0008);
    for _ in 0..50 {
        let rho = random_density_matrix(dims, &mut rng);
        for factor in [Factor::First, Factor::Second] {
            let once = partial_transpose(rho.matrix(), dims, factor).unwrap();
            let twice = partial_transpose(&once, dims, factor).unwrap();
            assert_eq!(&twice, rho.matrix(), "involution must be exact");
        }
        for keep in [Factor::First, Factor::Second] {
            let reduced = partial_trace(rho.matrix(), dims, keep).unwrap();
            assert!((reduced.trace() - rho.matrix().trace()).norm() < 1e-12);
        }
    }
}

fn local_unitary_invariance_of_both_measures() {
    let dims = nucleus_electron_dims();
    let mut rng = rng(0xacce_0009);
    for _ in 0..100 {
        let psi = random_pure_state(dims, &mut rng);
        let u = kron(&random_unitary(3, &mut rng), &random_unitary(2, &mut rng));
        let col = ComplexMatrix::from_fn(6, 1, |i, _| psi.amplitudes()[i]);
        let rotated_col = &u * &col;
        let rotated =
            PureState::normalized((0..6).map(|i| rotated_col[(i, 0)]).collect(), dims).unwrap();

        assert!((concurrence_pure(&psi) - concurrence_pure(&rotated)).abs() < 1e-9);
        let n0 = negativity(&psi.density()).unwrap();
        let n1 = negativity(&rotated.density()).unwrap();
        assert!((n0 - n1).abs() < 1e-9);
    }
}

fn evenness_in_the_electron_field() {
    for c in [0.25, 0.5, 1.0, 1.7, 3.0, 4.5] {
        let plus = ground_point(c, DEFAULT_DEGENERACY_TOL).unwrap();
        let minus = ground_point(-c, DEFAULT_DEGENERACY_TOL).unwrap();
        assert!((plus.energy_numeric - minus.energy_numeric).abs() < 1e-12);
        assert!((plus.concurrence_numeric - minus.concurrence_numeric).abs() < 1e-12);
        assert!((plus.negativity_mixed - minus.negativity_mixed).abs() < 1e-12);
        for t in [0.05, 0.2, 0.5] {
            let n_plus = thermal_negativity(c, 0.0, t).unwrap();
            let n_minus = thermal_negativity(-c, 0.0, t).unwrap();
            assert!((n_plus - n_minus).abs() < 1e-10);
        }
    }
}

fn gibbs_state_validity() {
    let allowed = [(1, 2), (2, 1), (3, 4), (4, 3)];
    let mut rng = rng(0xacce_000a);
    for _ in 0..100 {
        let field = FieldParams::reduced(rng.gen_range(-5.0..5.0), rng.gen_range(-1.0..1.0));
        let t = 10f64.powf(rng.gen_range(-2.0..1.0));
        let rho = gibbs_state(&ThermalParams::new(field, t).unwrap()).unwrap();

        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
        assert!(hermitian_eig(rho.matrix()).unwrap().eigenvalues[0] >= -1e-12);

        let h = build_hamiltonian(&field);
        let comm = &(&h * rho.matrix()) - &(rho.matrix() * &h);
        assert!(comm.max_abs_diff(&ComplexMatrix::zeros(6, 6)) < 1e-10);

        for i in 0..6 {
            for j in 0..6 {
                if i != j && !allowed.contains(&(i, j)) {
                    assert!(rho.matrix()[(i, j)].norm() < 1e-14);
                }
            }
        }
    }
}

fn zero_temperature_continuity() {
    for c in [-2.0, -1.0, 0.0, 1.0, 2.0] {
        let cold = thermal_negativity(c, 0.0, 1e-3).unwrap();
        let gs = ground_state(&FieldParams::reduced(c, 0.0), DEFAULT_DEGENERACY_TOL).unwrap();
        let ground = negativity(&gs.state).unwrap();
        assert!(
            (cold - ground).abs() < 1e-3,
            "t → 0 discontinuity at c = {c}: {cold} vs {ground}"
        );
    }
}

#[test]
fn criterion_09_extremum_flips_between_cold_and_warm() {
    assert!(curvature_at_zero(0.05, CURVATURE_STEP).unwrap() > 0.0);
    assert!(curvature_at_zero(0.5, CURVATURE_STEP).unwrap() < 0.0);
}

#[test]
fn criterion_10_cli_output_is_deterministic() {
    let exe = env!("CARGO_BIN_EXE_hfent");
    let args = [
        "ground-sweep",
        "--c-min",
        "-3",
        "--c-max",
        "3",
        "--steps",
        "301",
    ];

    let first = Command::new(exe).args(args).output().unwrap();
    let second = Command::new(exe).args(args).output().unwrap();
    assert!(first.status.success() && second.status.success());
    assert_eq!(first.stdout, second.stdout, "runs must be byte-identical");

    let text = String::from_utf8(first.stdout).unwrap();
    assert_eq!(
        text.lines().count(),
        301 + 1,
        "one row per step plus the header"
    );
    assert_eq!(
        text.lines().next().unwrap(),
        "c,energy_numeric,energy_closed,concurrence_numeric,concurrence_closed,negativity_mixed"
    );
}
