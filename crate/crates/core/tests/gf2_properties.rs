mod common;

use common::{random_lagrangian, rng};
use fcmeasure::gf2::{lagrangian_extract, row_reduce, solve, symplectic_complement, BinaryMatrix, SubspaceBasis};
use fcmeasure::SymplecticVector;
use rand::Rng;

fn random_vector<R: Rng>(n: usize, r: &mut R) -> SymplecticVector {
    let bits: Vec<bool> = (0..2 * n).map(|_| r.random_bool(0.5)).collect();
    SymplecticVector::from_bits(&bits)
}

#[test]
fn complement_dimension_and_involution() {
    let mut r = rng(21);
    for _ in 0..300 {
        let n = r.random_range(1..=9);
        let k = r.random_range(0..=2 * n + 1);
        let vs: Vec<SymplecticVector> = (0..k).map(|_| random_vector(n, &mut r)).collect();
        let v = SubspaceBasis::span_of(n, vs.clone()).unwrap();
        let perp = symplectic_complement(&v);
        assert_eq!(perp.dim(), 2 * n - v.dim());
        for a in perp.vectors() {
            assert!(vs.iter().all(|b| !a.inner(b)));
        }
        assert!(symplectic_complement(&perp).same_span(&v));
    }
}

#[test]
fn extraction_from_complement_of_isotropic() {
    let mut r = rng(22);
    for _ in 0..300 {
        let n = r.random_range(1..=10);
        let lag = random_lagrangian(n, &mut r);
        // Random sub-span of a Lagrangian subspace is isotropic.
        let picked: Vec<SymplecticVector> = lag.iter().filter(|_| r.random_bool(0.5)).cloned().collect();
        let v = SubspaceBasis::span_of(n, picked).unwrap();
        assert!(v.dim() == 0 || v.is_isotropic());
        let perp = symplectic_complement(&v);
        assert!(perp.is_coisotropic());
        let l = lagrangian_extract(&perp).unwrap();
        assert!(l.is_lagrangian());
        assert_eq!(l.dim(), n);
        assert!(l.contains_subspace(&v));
        assert!(perp.contains_subspace(&l));
    }
}

#[test]
fn solve_reconstructs_members() {
    let mut r = rng(23);
    for _ in 0..300 {
        let n = r.random_range(1..=8);
        let rows: Vec<SymplecticVector> = (0..r.random_range(1..=2 * n)).map(|_| random_vector(n, &mut r)).collect();
        let m = BinaryMatrix::new(n, rows.clone()).unwrap();
        let mut target = SymplecticVector::zero(n);
        for row in &rows {
            if r.random_bool(0.5) {
                target.xor_assign(row);
            }
        }
        let x = solve(&m, &target).unwrap();
        let mut sum = SymplecticVector::zero(n);
        for (row, _) in rows.iter().zip(&x).filter(|(_, &b)| b) {
            sum.xor_assign(row);
        }
        assert_eq!(sum, target);
        let (span, rank) = row_reduce(&m);
        let outside = random_vector(n, &mut r);
        assert_eq!(solve(&m, &outside).is_ok(), span.contains(&outside));
        assert!(rank <= rows.len().min(2 * n));
    }
}
