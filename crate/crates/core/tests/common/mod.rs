#![allow(dead_code)]

use std::path::PathBuf;

use fcmeasure::{Hamiltonian64, PauliAxis, PauliProduct, SymplecticVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn fixture_hamiltonian(name: &str) -> Hamiltonian64 {
    Hamiltonian64::parse(&fixture(name)).unwrap()
}

pub fn p(s: &str) -> PauliProduct {
    s.parse().unwrap()
}

pub fn random_product<R: Rng>(n: usize, rng: &mut R) -> PauliProduct {
    let axes: Vec<PauliAxis> = (0..n).map(|_| PauliAxis::ALL[rng.random_range(0..4)]).collect();
    PauliProduct::from_axes(&axes)
}

pub fn random_hamiltonian<R: Rng>(n: usize, terms: usize, rng: &mut R) -> Hamiltonian64 {
    let list: Vec<(f64, PauliProduct)> =
        (0..terms).map(|_| (rng.random_range(0.1..1.0), random_product(n, rng))).collect();
    Hamiltonian64::new(n, list).unwrap()
}

/// Generators of a random Lagrangian subspace: the `Z_q` basis pushed
/// through random H, S and CNOT actions on the binary vectors.
pub fn random_lagrangian<R: Rng>(n: usize, rng: &mut R) -> Vec<SymplecticVector> {
    let mut gens: Vec<(Vec<bool>, Vec<bool>)> = (0..n)
        .map(|q| {
            let mut z = vec![false; n];
            z[q] = true;
            (vec![false; n], z)
        })
        .collect();
    for _ in 0..6 * n * n {
        let kind = if n > 1 { rng.random_range(0..3) } else { rng.random_range(0..2) };
        let a = rng.random_range(0..n);
        let b = (a + rng.random_range(1..n.max(2))) % n;
        for (x, z) in gens.iter_mut() {
            match kind {
                0 => std::mem::swap(&mut x[a], &mut z[a]),
                1 => z[a] ^= x[a],
                _ => {
                    x[b] ^= x[a];
                    z[a] ^= z[b];
                }
            }
        }
    }
    gens.iter().map(|(x, z)| SymplecticVector::from_blocks(x, z)).collect()
}

/// Random fully commuting group: distinct random products from a random
/// Lagrangian span, optionally with a constant term.
pub fn random_commuting_group<R: Rng>(n: usize, max_terms: usize, rng: &mut R) -> Hamiltonian64 {
    let gens = random_lagrangian(n, rng);
    let size = rng.random_range(1..=max_terms);
    let mut list = Vec::new();
    if rng.random_bool(0.3) {
        list.push((rng.random_range(-1.0..1.0), PauliProduct::identity(n)));
    }
    for _ in 0..size {
        let mut v = SymplecticVector::zero(n);
        for g in &gens {
            if rng.random_bool(0.5) {
                v.xor_assign(g);
            }
        }
        let magnitude: f64 = rng.random_range(0.05..1.0);
        let coeff = if rng.random_bool(0.5) { magnitude } else { -magnitude };
        list.push((coeff, PauliProduct::from_symplectic(&v)));
    }
    Hamiltonian64::new(n, list).unwrap()
}

/// Random undirected graph as an edge list, each pair present with `density`.
pub fn random_edges<R: Rng>(n: usize, density: f64, rng: &mut R) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(density) {
                edges.push((a, b));
            }
        }
    }
    edges
}
