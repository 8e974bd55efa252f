//! Linear algebra over GF(2) on symplectic vectors.
//!
//! Elimination always takes the lowest available pivot column and, within
//! it, the first row carrying a one, so every routine here is deterministic
//! for a fixed input order.

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::pauli::SymplecticVector;

/// Rows of `2N` bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMatrix {
    n_qubits: usize,
    rows: Vec<SymplecticVector>,
}

impl BinaryMatrix {
    pub fn new(n_qubits: usize, rows: Vec<SymplecticVector>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.n_qubits() != n_qubits) {
            return Err(Error::QubitMismatch { left: n_qubits, right: r.n_qubits() });
        }
        Ok(BinaryMatrix { n_qubits, rows })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_cols(&self) -> usize {
        2 * self.n_qubits
    }

    pub fn rows(&self) -> &[SymplecticVector] {
        &self.rows
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceKind {
    Isotropic,
    Coisotropic,
    Lagrangian,
    General,
}

/// Linearly independent vectors spanning a subspace of GF(2)^{2N}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    n_qubits: usize,
    basis: Vec<SymplecticVector>,
    kind: SubspaceKind,
}

impl SubspaceBasis {
    /// Reduces `vectors` to an independent spanning set and classifies it.
    pub fn span_of(n_qubits: usize, vectors: Vec<SymplecticVector>) -> Result<Self> {
        let (basis, _) = row_reduce(&BinaryMatrix::new(n_qubits, vectors)?);
        Ok(basis)
    }

    /// Wraps vectors already known to be independent.
    fn from_independent(n_qubits: usize, basis: Vec<SymplecticVector>) -> Self {
        let kind = classify(n_qubits, &basis);
        SubspaceBasis { n_qubits, basis, kind }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vectors(&self) -> &[SymplecticVector] {
        &self.basis
    }

    pub fn into_vectors(self) -> Vec<SymplecticVector> {
        self.basis
    }

    pub fn kind(&self) -> SubspaceKind {
        self.kind
    }

    pub fn is_isotropic(&self) -> bool {
        matches!(self.kind, SubspaceKind::Isotropic | SubspaceKind::Lagrangian)
    }

    pub fn is_coisotropic(&self) -> bool {
        matches!(self.kind, SubspaceKind::Coisotropic | SubspaceKind::Lagrangian)
    }

    pub fn is_lagrangian(&self) -> bool {
        self.kind == SubspaceKind::Lagrangian
    }

    pub fn contains(&self, v: &SymplecticVector) -> bool {
        let m = BinaryMatrix { n_qubits: self.n_qubits, rows: self.basis.clone() };
        solve(&m, v).is_ok()
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Equality as subspaces, by mutual membership.
    pub fn same_span(&self, other: &SubspaceBasis) -> bool {
        self.n_qubits == other.n_qubits && self.contains_subspace(other) && other.contains_subspace(self)
    }
}

fn pairwise_orthogonal(vectors: &[SymplecticVector]) -> bool {
    vectors.iter().enumerate().all(|(i, u)| vectors[i + 1..].iter().all(|v| !u.inner(v)))
}

fn classify(n_qubits: usize, basis: &[SymplecticVector]) -> SubspaceKind {
    let isotropic = pairwise_orthogonal(basis);
    if isotropic && basis.len() == n_qubits {
        return SubspaceKind::Lagrangian;
    }
    if isotropic {
        return SubspaceKind::Isotropic;
    }
    if basis.len() > n_qubits {
        // Coisotropic iff the complement is contained, i.e. the complement
        // is orthogonal to every vector of the subspace.
        let perp = null_space_symplectic(n_qubits, basis);
        if perp.iter().all(|w| basis.iter().all(|v| !v.inner(w))) {
            return SubspaceKind::Coisotropic;
        }
    }
    SubspaceKind::General
}

/// Reduced row-echelon form of the rows, with pivot columns.
struct Echelon {
    rows: Vec<SymplecticVector>,
    pivots: Vec<usize>,
    /// For each echelon row, which input rows were summed to produce it.
    combos: Vec<BitString>,
}

fn echelon(n_qubits: usize, input: &[SymplecticVector]) -> Echelon {
    let m = input.len();
    let mut rows: Vec<SymplecticVector> = input.to_vec();
    let mut combos: Vec<BitString> = (0..m)
        .map(|i| {
            let mut b = BitString::zeros(m);
            b.set(i, true);
            b
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..2 * n_qubits {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| rows[i].bit(col)) else {
            continue;
        };
        rows.swap(r, p);
        combos.swap(r, p);
        let (pivot_row, pivot_combo) = (rows[r].clone(), combos[r].clone());
        for i in 0..m {
            if i != r && rows[i].bit(col) {
                rows[i].xor_assign(&pivot_row);
                combos[i].xor_assign(&pivot_combo);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    combos.truncate(r);
    Echelon { rows, pivots, combos }
}

/// Basis of the row space (in reduced echelon form) and the rank.
pub fn row_reduce(m: &BinaryMatrix) -> (SubspaceBasis, usize) {
    let e = echelon(m.n_qubits, &m.rows);
    let rank = e.rows.len();
    (SubspaceBasis::from_independent(m.n_qubits, e.rows), rank)
}

/// `{u : (u|v) = 0 for all v in vectors}`: the ordinary null space with
/// its `x` and `z` halves interchanged.
fn null_space_symplectic(n_qubits: usize, vectors: &[SymplecticVector]) -> Vec<SymplecticVector> {
    let e = echelon(n_qubits, vectors);
    let dim = 2 * n_qubits;
    let mut is_pivot = vec![false; dim];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    (0..dim)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut n = SymplecticVector::zero(n_qubits);
            n.set_bit(free, true);
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                if row.bit(free) {
                    n.set_bit(p, true);
                }
            }
            n.swap_blocks()
        })
        .collect()
}

pub fn symplectic_complement(v: &SubspaceBasis) -> SubspaceBasis {
    let perp = null_space_symplectic(v.n_qubits, &v.basis);
    SubspaceBasis::from_independent(v.n_qubits, perp)
}

/// Extracts a Lagrangian subspace from a coisotropic one by symplectic
/// Gram-Schmidt.
///
/// While some pair `(i, j)`, `i < j`, has `(c_i|c_j) = 1` (first such pair in
/// lexicographic order), every other vector is replaced by
/// `c_k + (c_k|c_j) c_i + (c_k|c_i) c_j` and `c_j` is discarded. Each round
/// removes one hyperbolic pair's worth of dimension, so a coisotropic input
/// of dimension `M` ends with `N` mutually orthogonal vectors. The kept
/// member `c_i` is orthogonal to everything that remains, which keeps the
/// radical `V` of the input inside the result.
pub fn lagrangian_extract(coiso: &SubspaceBasis) -> Result<SubspaceBasis> {
    let n = coiso.n_qubits;
    let mut c: Vec<SymplecticVector> = coiso.basis.clone();
    while let Some((i, j)) = first_anticommuting_pair(&c) {
        let (ci, cj) = (c[i].clone(), c[j].clone());
        for (k, ck) in c.iter_mut().enumerate() {
            if k == i || k == j {
                continue;
            }
            let with_j = ck.inner(&cj);
            let with_i = ck.inner(&ci);
            if with_j {
                ck.xor_assign(&ci);
            }
            if with_i {
                ck.xor_assign(&cj);
            }
        }
        c.remove(j);
    }
    if c.len() != n {
        return Err(Error::InvalidBasis(format!(
            "input of dimension {} is not coisotropic: extraction left {} vectors, expected {n}",
            coiso.dim(),
            c.len()
        )));
    }
    Ok(SubspaceBasis::from_independent(n, c))
}

fn first_anticommuting_pair(c: &[SymplecticVector]) -> Option<(usize, usize)> {
    (0..c.len()).find_map(|i| (i + 1..c.len()).find(|&j| c[i].inner(&c[j])).map(|j| (i, j)))
}

/// Finds `x` with `sum_k x_k * rows[k] = b` over GF(2).
///
/// Returns [`Error::TermOutsideSpan`] when `b` is not in the row space.
pub fn solve(a: &BinaryMatrix, b: &SymplecticVector) -> Result<Vec<bool>> {
    if b.n_qubits() != a.n_qubits {
        return Err(Error::QubitMismatch { left: a.n_qubits, right: b.n_qubits() });
    }
    let e = echelon(a.n_qubits, &a.rows);
    let mut rest = b.clone();
    let mut x = BitString::zeros(a.rows.len());
    for ((row, &p), combo) in e.rows.iter().zip(&e.pivots).zip(&e.combos) {
        if rest.bit(p) {
            rest.xor_assign(row);
            x.xor_assign(combo);
        }
    }
    if !rest.is_zero() {
        return Err(Error::TermOutsideSpan { term: format!("{b:?}") });
    }
    Ok((0..a.rows.len()).map(|k| x.get(k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(bits: &str) -> SymplecticVector {
        let bools: Vec<bool> = bits.chars().filter(|c| *c == '0' || *c == '1').map(|c| c == '1').collect();
        SymplecticVector::from_bits(&bools)
    }

    fn span(n: usize, vs: &[&str]) -> SubspaceBasis {
        SubspaceBasis::span_of(n, vs.iter().map(|s| v(s)).collect()).unwrap()
    }

    #[test]
    fn duplicate_rows_rank_one() {
        let m = BinaryMatrix::new(2, vec![v("10;01"), v("10;01")]).unwrap();
        assert_eq!(row_reduce(&m).1, 1);
    }

    #[test]
    fn zero_matrix_rank_zero() {
        let m = BinaryMatrix::new(2, vec![v("00;00")]).unwrap();
        let (basis, rank) = row_reduce(&m);
        assert_eq!(rank, 0);
        assert_eq!(basis.dim(), 0);
    }

    #[test]
    fn complement_of_isotropic_line() {
        let iso = span(2, &["10;00"]);
        assert_eq!(iso.kind(), SubspaceKind::Isotropic);
        let perp = symplectic_complement(&iso);
        assert!(perp.same_span(&span(2, &["10;00", "01;00", "00;01"])));
        assert_eq!(perp.kind(), SubspaceKind::Coisotropic);
        assert!(symplectic_complement(&perp).same_span(&iso));
    }

    #[test]
    fn lagrangian_is_self_complementary() {
        let l = span(2, &["10;00", "01;00"]);
        assert!(l.is_lagrangian());
        assert!(symplectic_complement(&l).same_span(&l));
    }

    #[test]
    fn full_space_has_zero_complement() {
        let full = span(2, &["10;00", "01;00", "00;10", "00;01"]);
        assert_eq!(symplectic_complement(&full).dim(), 0);
    }

    #[test]
    fn extract_already_lagrangian_is_unchanged() {
        let l = span(2, &["10;00", "01;00"]);
        assert_eq!(lagrangian_extract(&l).unwrap(), l);
    }

    #[test]
    fn extract_drops_second_pair_member() {
        let basis = SubspaceBasis::from_independent(2, vec![v("10;00"), v("01;00"), v("00;01")]);
        let l = lagrangian_extract(&basis).unwrap();
        assert_eq!(l.vectors(), &[v("10;00"), v("01;00")]);
        assert!(l.is_lagrangian());
    }

    #[test]
    fn extract_rejects_non_coisotropic() {
        // span{X0, Z0} on two qubits: symplectic but too small.
        let basis = SubspaceBasis::from_independent(2, vec![v("10;00"), v("00;10")]);
        assert!(matches!(lagrangian_extract(&basis), Err(Error::InvalidBasis(_))));
    }

    #[test]
    fn solve_unit_and_zero() {
        let rows = vec![v("10;00"), v("01;00"), v("00;10"), v("00;01")];
        let m = BinaryMatrix::new(2, rows.clone()).unwrap();
        for (k, r) in rows.iter().enumerate() {
            let x = solve(&m, r).unwrap();
            assert_eq!(x.iter().filter(|&&b| b).count(), 1);
            assert!(x[k]);
        }
        assert_eq!(solve(&m, &SymplecticVector::zero(2)).unwrap(), vec![false; 4]);
    }

    #[test]
    fn solve_inconsistent() {
        let m = BinaryMatrix::new(2, vec![v("10;00")]).unwrap();
        assert!(matches!(solve(&m, &v("01;00")), Err(Error::TermOutsideSpan { .. })));
    }

    #[test]
    fn solve_dependent_rows() {
        let m = BinaryMatrix::new(2, vec![v("10;00"), v("10;00"), v("01;00")]).unwrap();
        let x = solve(&m, &v("11;00")).unwrap();
        let mut sum = SymplecticVector::zero(2);
        for (k, &b) in x.iter().enumerate() {
            if b {
                sum.xor_assign(&m.rows()[k]);
            }
        }
        assert_eq!(sum, v("11;00"));
    }
}
