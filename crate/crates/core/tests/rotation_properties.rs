mod common;

use common::{random_commuting_group, rng};
use fcmeasure::circuit::ExponentRole;
use fcmeasure::oracle::{
    circuit_matrix, is_unitary, max_deviation, pauli_matrix, random_state, simulate_circuit, symbolic_matrix,
};
use fcmeasure::transform::{expand_in_tau, is_qwc_group, Sign};
use fcmeasure::{build_unitary_symbolic, find_basis, synthesize, transform_group, DenseOperator64, PauliProduct};
use nalgebra::Complex;
use rand::Rng;

fn dense(p: &PauliProduct) -> DenseOperator64 {
    pauli_matrix(p).unwrap()
}

#[test]
fn groups_rotate_to_qubitwise_commuting_form() {
    let mut r = rng(41);
    for _ in 0..300 {
        let n = r.random_range(1..=10);
        let group = random_commuting_group(n, 14, &mut r);
        let basis = find_basis(&group).unwrap();
        basis.validate().unwrap();
        let t = transform_group(&group, &basis).unwrap();
        assert!(is_qwc_group(&t.transformed));
        assert_eq!(t.transformed.len(), group.len());
        for ((src, dst), e) in group.terms().iter().zip(t.transformed.terms()).zip(&t.expansions) {
            assert_eq!(src.coeff.abs(), dst.coeff.abs());
            assert_eq!(dst.coeff == src.coeff, e.sign == Sign::Plus || src.coeff == 0.0);
            // Output support is exactly the σ qubits of the expansion.
            let mut qubits: Vec<usize> = e.subset.iter().map(|&k| basis.sigmas()[k].qubit).collect();
            qubits.sort();
            assert_eq!(dst.pauli.support(), qubits);
        }
    }
}

#[test]
fn expansions_agree_with_dense_products() {
    let mut r = rng(42);
    for _ in 0..80 {
        let n = r.random_range(1..=5);
        let group = random_commuting_group(n, 10, &mut r);
        let basis = find_basis(&group).unwrap();
        for term in group.terms() {
            let e = expand_in_tau(&term.pauli, &basis).unwrap();
            let dim = 1 << n;
            let mut m = DenseOperator64::identity(dim, dim);
            for &k in &e.subset {
                m *= dense(&basis.taus()[k]);
            }
            let s = if e.sign == Sign::Plus { 1.0 } else { -1.0 };
            assert!(max_deviation(&dense(&term.pauli), &(m * Complex::new(s, 0.0))) < 1e-12);
        }
    }
}

#[test]
fn unitary_maps_each_tau_to_its_sigma() {
    let mut r = rng(43);
    for _ in 0..60 {
        let n = r.random_range(1..=6);
        let basis = find_basis(&random_commuting_group(n, 8, &mut r)).unwrap();
        let u = symbolic_matrix::<f64>(&build_unitary_symbolic(&basis).unwrap()).unwrap();
        assert!(is_unitary(&u, 1e-10));
        for i in 0..n {
            let rotated = u.adjoint() * dense(&basis.taus()[i]) * &u;
            assert!(max_deviation(&rotated, &dense(&basis.sigma_product(i))) < 1e-10);
        }
    }
}

#[test]
fn circuit_equals_symbolic_unitary() {
    let mut r = rng(44);
    for _ in 0..60 {
        let n = r.random_range(1..=6);
        let basis = find_basis(&random_commuting_group(n, 8, &mut r)).unwrap();
        let synth = synthesize(&basis).unwrap();
        let c = circuit_matrix::<f64>(&synth.circuit).unwrap();
        let u = symbolic_matrix::<f64>(&build_unitary_symbolic(&basis).unwrap()).unwrap();
        assert!(is_unitary(&c, 1e-10));
        // Equal including the global phase.
        assert!(max_deviation(&c, &u) < 1e-10, "n = {n}");
    }
}

#[test]
fn circuit_followed_by_inverse_is_identity() {
    let mut r = rng(45);
    for _ in 0..20 {
        let n = r.random_range(1..=6);
        let basis = find_basis(&random_commuting_group(n, 8, &mut r)).unwrap();
        let c = synthesize(&basis).unwrap().circuit;
        let mut round = c.clone();
        round.append(&c.inverse());
        for _ in 0..20 {
            let psi = random_state::<f64, _>(n, &mut r);
            let out = simulate_circuit(&round, &psi).unwrap();
            assert!((out - &psi).norm() < 1e-12);
            let once = simulate_circuit(&c, &psi).unwrap();
            assert!((once.norm() - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn gate_counts_follow_exponent_weights() {
    let mut r = rng(46);
    for _ in 0..100 {
        let n = r.random_range(1..=12);
        let basis = find_basis(&random_commuting_group(n, 10, &mut r)).unwrap();
        let synth = synthesize(&basis).unwrap();
        let counts = synth.gate_counts();
        assert_eq!(counts.sigma_exponents, 2 * n);
        assert_eq!(counts.tau_exponents, n);
        let cnots: usize = synth.exponents.iter().map(|(_, e)| 2 * (e.pauli().weight() - 1)).sum();
        let singles: usize = synth.exponents.iter().map(|(_, e)| 4 * e.pauli().weight() + 1).sum();
        assert_eq!(counts.cnots, cnots);
        assert!(counts.single_qubit_gates <= singles);
        for (role, e) in &synth.exponents {
            if *role == ExponentRole::Sigma {
                assert_eq!(e.pauli().weight(), 1);
            }
        }
    }
}
