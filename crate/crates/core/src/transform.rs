//! Rotation of a fully commuting group of Pauli products into a
//! qubit-wise commuting one.
//!
//! For a group of `N`-qubit pairwise commuting products we build `N`
//! independent, mutually commuting products `τ_1..τ_N` (a Lagrangian basis
//! containing the group) and single-qubit partners `σ_1..σ_N` on distinct
//! qubits with `{τ_i, σ_i} = 0` and `[τ_i, σ_j] = 0` for `i != j`. With
//! `V_i = (τ_i + σ_i)/√2` and `U = V_1 V_2 ⋯ V_N` we get `U† τ_i U = σ_i`,
//! so a group term `P = p ∏_{k∈K} τ_k` maps to `p ∏_{k∈K} σ_k`.

use std::collections::HashMap;
use std::fmt;

use num_complex::Complex;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::gf2::{self, BinaryMatrix};
use crate::hamiltonian::{Hamiltonian, Term};
use crate::pauli::{PauliAxis, PauliProduct, SymplecticVector};
use crate::scalar::Coefficient;

/// Largest basis size for which the Pauli-sum expansion of `U` is built.
pub const SYMBOLIC_UNITARY_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SigmaAssignment {
    pub qubit: usize,
    pub axis: PauliAxis,
}

impl SigmaAssignment {
    pub fn new(qubit: usize, axis: PauliAxis) -> Self {
        SigmaAssignment { qubit, axis }
    }

    pub fn to_product(self, n_qubits: usize) -> PauliProduct {
        PauliProduct::single(n_qubits, self.qubit, self.axis)
    }
}

impl fmt::Display for SigmaAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.axis, self.qubit)
    }
}

/// Validated pair of τ products and their single-qubit σ partners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSigmaBasis {
    n_qubits: usize,
    taus: Vec<PauliProduct>,
    sigmas: Vec<SigmaAssignment>,
}

impl TauSigmaBasis {
    /// Accepts an externally chosen basis after checking every invariant.
    pub fn new(taus: Vec<PauliProduct>, sigmas: Vec<SigmaAssignment>) -> Result<Self> {
        let n_qubits = taus.first().map(PauliProduct::n_qubits).unwrap_or(0);
        let basis = TauSigmaBasis { n_qubits, taus, sigmas };
        basis.validate()?;
        Ok(basis)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn taus(&self) -> &[PauliProduct] {
        &self.taus
    }

    pub fn sigmas(&self) -> &[SigmaAssignment] {
        &self.sigmas
    }

    pub fn sigma_product(&self, i: usize) -> PauliProduct {
        self.sigmas[i].to_product(self.n_qubits)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n_qubits;
        let bad = |msg: String| Err(Error::InvalidBasis(msg));
        if n == 0 {
            return bad("empty basis".into());
        }
        validate_taus(&self.taus)?;
        if self.sigmas.len() != n {
            return bad(format!("{} sigmas for {n} taus", self.sigmas.len()));
        }
        let mut used = vec![false; n];
        for s in &self.sigmas {
            if s.qubit >= n || s.axis.is_identity() {
                return bad(format!("sigma {s} is not a single-qubit Pauli on {n} qubits"));
            }
            if std::mem::replace(&mut used[s.qubit], true) {
                return bad(format!("qubit {} carries two sigmas", s.qubit));
            }
        }
        for (i, tau) in self.taus.iter().enumerate() {
            for j in 0..n {
                let anticommutes = !tau.commutes_with(&self.sigma_product(j));
                if anticommutes != (i == j) {
                    return bad(format!(
                        "tau {i} ({tau}) and sigma {j} ({}) {}",
                        self.sigmas[j],
                        if anticommutes { "anticommute" } else { "commute" }
                    ));
                }
            }
        }
        Ok(())
    }

    fn tau_matrix(&self) -> BinaryMatrix {
        BinaryMatrix::new(self.n_qubits, self.taus.iter().map(PauliProduct::to_symplectic).collect())
            .expect("taus share a qubit count")
    }
}

/// `N` phase-free, independent, mutually commuting products on `N` qubits.
fn validate_taus(taus: &[PauliProduct]) -> Result<()> {
    let n = taus.first().map(PauliProduct::n_qubits).unwrap_or(0);
    let bad = |msg: String| Err(Error::InvalidBasis(msg));
    if taus.len() != n {
        return bad(format!("{} taus on {n} qubits", taus.len()));
    }
    if let Some(t) = taus.iter().find(|t| t.n_qubits() != n || t.phase_exp() != 0) {
        return bad(format!("tau {t} is not a phase-free product on {n} qubits"));
    }
    for (i, a) in taus.iter().enumerate() {
        for b in &taus[i + 1..] {
            if !a.commutes_with(b) {
                return bad(format!("taus {a} and {b} anticommute"));
            }
        }
    }
    let m = BinaryMatrix::new(n, taus.iter().map(PauliProduct::to_symplectic).collect())?;
    if gf2::row_reduce(&m).1 != n {
        return bad("taus are linearly dependent".into());
    }
    Ok(())
}

/// Lagrangian τ basis whose span contains every product of the group.
///
/// Row reduction of the term vectors gives an isotropic `V`. If
/// `dim V < N` the basis is completed inside the symplectic complement
/// `V⊥` by [`gf2::lagrangian_extract`]. Identity terms contribute nothing.
pub fn find_tau_products(n_qubits: usize, products: &[PauliProduct]) -> Result<Vec<PauliProduct>> {
    if n_qubits == 0 {
        return Err(Error::Unsupported("groups need at least one qubit".into()));
    }
    for (i, a) in products.iter().enumerate() {
        if a.n_qubits() != n_qubits {
            return Err(Error::QubitMismatch { left: n_qubits, right: a.n_qubits() });
        }
        for (j, b) in products.iter().enumerate().skip(i + 1) {
            if !a.commutes_with(b) {
                return Err(Error::NotCommuting { first: i, second: j });
            }
        }
    }
    let vectors: Vec<SymplecticVector> =
        products.iter().filter(|p| !p.is_identity_axes()).map(PauliProduct::to_symplectic).collect();
    let (v, rank) = gf2::row_reduce(&BinaryMatrix::new(n_qubits, vectors)?);
    let lagrangian = if rank == n_qubits {
        v.clone()
    } else {
        let perp = gf2::symplectic_complement(&v);
        gf2::lagrangian_extract(&perp).map_err(|e| Error::Defect(format!("Lagrangian completion failed: {e}")))?
    };
    if !lagrangian.is_lagrangian() || !lagrangian.contains_subspace(&v) {
        return Err(Error::Defect("completed basis is not a Lagrangian superset of the group".into()));
    }
    Ok(lagrangian.vectors().iter().map(PauliProduct::from_symplectic).collect())
}

pub fn find_tau<T: Coefficient>(group: &Hamiltonian<T>) -> Result<Vec<PauliProduct>> {
    let products: Vec<PauliProduct> = group.terms().iter().map(|t| t.pauli.clone()).collect();
    find_tau_products(group.n_qubits(), &products)
}

/// Assigns σ partners to a Lagrangian τ basis.
///
/// Step `i` takes the lowest unassigned qubit on which `τ_i` acts, sets
/// `σ_i` to the fixed anticommuting axis there, then replaces every other
/// `τ_k` anticommuting with `σ_i` by `τ_k τ_i` (vector sum, phase dropped).
/// Updating the earlier τ's as well as the later ones keeps
/// `[τ_j, σ_i] = 0` for `j < i`; the span is unchanged.
///
/// The returned basis carries the updated τ's.
pub fn find_sigma(taus: &[PauliProduct]) -> Result<TauSigmaBasis> {
    validate_taus(taus)?;
    let n = taus.len();
    let mut vecs: Vec<SymplecticVector> = taus.iter().map(PauliProduct::to_symplectic).collect();
    let mut assigned = vec![false; n];
    let mut sigmas = Vec::with_capacity(n);
    for i in 0..n {
        let qubit = (0..n)
            .find(|&q| !assigned[q] && !vecs[i].axis(q).is_identity())
            .ok_or_else(|| Error::Defect(format!("tau {i} acts only on qubits that already carry a sigma")))?;
        let axis = vecs[i].axis(qubit).anticommuting_partner().expect("non-identity axis");
        assigned[qubit] = true;
        let sigma = SigmaAssignment::new(qubit, axis);
        let sigma_vec = sigma.to_product(n).to_symplectic();
        let tau_i = vecs[i].clone();
        for (k, v) in vecs.iter_mut().enumerate() {
            if k != i && v.inner(&sigma_vec) {
                v.xor_assign(&tau_i);
            }
        }
        sigmas.push(sigma);
    }
    let taus = vecs.iter().map(PauliProduct::from_symplectic).collect();
    let basis = TauSigmaBasis { n_qubits: n, taus, sigmas };
    basis.validate().map_err(|e| Error::Defect(format!("sigma search produced an invalid basis: {e}")))?;
    Ok(basis)
}

/// τ and σ sets for a fully commuting group.
pub fn find_basis<T: Coefficient>(group: &Hamiltonian<T>) -> Result<TauSigmaBasis> {
    find_sigma(&find_tau(group)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply<T: Float>(self, value: T) -> T {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }
}

/// `P = p ∏_{k ∈ subset} τ_k` with the product taken in ascending `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub subset: Vec<usize>,
    pub sign: Sign,
}

/// Writes `term` as a signed product of τ's.
///
/// The subset comes from a GF(2) solve; the sign from multiplying the chosen
/// τ's with exact phase tracking. Hermitian `term` and commuting τ's force a
/// real sign; anything else is reported as a defect.
pub fn expand_in_tau(term: &PauliProduct, basis: &TauSigmaBasis) -> Result<Expansion> {
    if term.n_qubits() != basis.n_qubits {
        return Err(Error::QubitMismatch { left: basis.n_qubits, right: term.n_qubits() });
    }
    let x = gf2::solve(&basis.tau_matrix(), term.symplectic())
        .map_err(|_| Error::TermOutsideSpan { term: term.to_string() })?;
    let subset: Vec<usize> = x.iter().enumerate().filter(|(_, &b)| b).map(|(k, _)| k).collect();
    let product = subset.iter().fold(PauliProduct::identity(basis.n_qubits), |acc, &k| acc.mul(&basis.taus[k]));
    debug_assert_eq!(product.symplectic(), term.symplectic());
    let sign = match (4 + term.phase_exp() - product.phase_exp()) % 4 {
        0 => Sign::Plus,
        2 => Sign::Minus,
        k => {
            return Err(Error::Defect(format!("expansion of {term} carries phase i^{k}")));
        }
    };
    Ok(Expansion { subset, sign })
}

/// A fully commuting group after rotation: same coefficients up to sign,
/// every product a tensor product of σ's.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformedGroup<T> {
    pub term_indices: Vec<usize>,
    pub transformed: Hamiltonian<T>,
    pub expansions: Vec<Expansion>,
}

/// Applies `P -> p ∏_{k∈K} σ_k` to every term; constant terms pass through.
pub fn transform_group<T: Coefficient>(group: &Hamiltonian<T>, basis: &TauSigmaBasis) -> Result<TransformedGroup<T>> {
    let n = basis.n_qubits;
    if group.n_qubits() != n {
        return Err(Error::QubitMismatch { left: n, right: group.n_qubits() });
    }
    let mut terms = Vec::with_capacity(group.len());
    let mut expansions = Vec::with_capacity(group.len());
    for t in group.terms() {
        let e = expand_in_tau(&t.pauli, basis)?;
        let factors: Vec<(usize, PauliAxis)> =
            e.subset.iter().map(|&k| (basis.sigmas[k].qubit, basis.sigmas[k].axis)).collect();
        let pauli = PauliProduct::from_sparse(n, &factors)?;
        terms.push(Term { coeff: e.sign.apply(t.coeff), pauli });
        expansions.push(e);
    }
    let transformed = Hamiltonian::from_terms_unchecked(n, terms);
    debug_assert!(is_qwc_group(&transformed));
    Ok(TransformedGroup { term_indices: (0..group.len()).collect(), transformed, expansions })
}

pub fn is_qwc_group<T: Coefficient>(h: &Hamiltonian<T>) -> bool {
    let t = h.terms();
    t.iter().enumerate().all(|(i, a)| t[i + 1..].iter().all(|b| a.pauli.qubitwise_commutes_with(&b.pauli)))
}

/// `re + i·im` with integer parts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ONE: GaussianInt = GaussianInt { re: 1, im: 0 };

    /// `self · i^k`.
    pub fn times_i_pow(self, k: u8) -> GaussianInt {
        match k % 4 {
            0 => self,
            1 => GaussianInt { re: -self.im, im: self.re },
            2 => GaussianInt { re: -self.re, im: -self.im },
            _ => GaussianInt { re: self.im, im: -self.re },
        }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }
}

impl std::ops::Add for GaussianInt {
    type Output = GaussianInt;

    fn add(self, o: GaussianInt) -> GaussianInt {
        GaussianInt { re: self.re + o.re, im: self.im + o.im }
    }
}

/// `2^{-n/2} Σ c_k P_k` with Gaussian-integer `c_k` and phase-free `P_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicUnitary {
    pub n_qubits: usize,
    /// Number of `1/√2` factors in the overall scale.
    pub sqrt2_divisor: usize,
    pub terms: Vec<(GaussianInt, PauliProduct)>,
}

impl SymbolicUnitary {
    pub fn scale<T: Float>(&self) -> T {
        T::from(0.5f64.sqrt().powi(self.sqrt2_divisor as i32)).unwrap()
    }

    pub fn coefficient<T: Float>(&self, k: usize) -> Complex<T> {
        let (c, _) = self.terms[k];
        let s = self.scale::<T>();
        Complex::new(T::from(c.re).unwrap() * s, T::from(c.im).unwrap() * s)
    }

    /// Integer coefficient of a phase-free product, zero when absent.
    pub fn integer_coefficient(&self, p: &PauliProduct) -> GaussianInt {
        self.terms.iter().find(|(_, q)| q == p).map(|(c, _)| *c).unwrap_or_default()
    }
}

impl fmt::Display for SymbolicUnitary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^(-{}/2) * [", self.sqrt2_divisor)?;
        for (k, (c, p)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({}{:+}i) {}", c.re, c.im, p.label())?;
        }
        f.write_str("]")
    }
}

/// Expands `∏_i (τ_i + σ_i)/√2`, factors in ascending `i`, into a Pauli sum
/// with exact phases. Limited to [`SYMBOLIC_UNITARY_LIMIT`] qubits.
pub fn build_unitary_symbolic(basis: &TauSigmaBasis) -> Result<SymbolicUnitary> {
    let n = basis.n_qubits;
    if n > SYMBOLIC_UNITARY_LIMIT {
        return Err(Error::SizeBound { what: "symbolic unitary qubits", limit: SYMBOLIC_UNITARY_LIMIT, got: n });
    }
    let mut terms: Vec<(GaussianInt, PauliProduct)> = vec![(GaussianInt::ONE, PauliProduct::identity(n))];
    for i in 0..n {
        let factors = [basis.taus[i].clone(), basis.sigma_product(i)];
        let mut next: Vec<(GaussianInt, PauliProduct)> = Vec::with_capacity(terms.len() * 2);
        let mut index: HashMap<PauliProduct, usize> = HashMap::new();
        for (c, p) in &terms {
            for f in &factors {
                let prod = p.mul(f);
                let coeff = c.times_i_pow(prod.phase_exp());
                let key = prod.unsigned();
                match index.get(&key) {
                    Some(&slot) => next[slot].0 = next[slot].0 + coeff,
                    None => {
                        index.insert(key.clone(), next.len());
                        next.push((coeff, key));
                    }
                }
            }
        }
        next.retain(|(c, _)| !c.is_zero());
        terms = next;
    }
    Ok(SymbolicUnitary { n_qubits: n, sqrt2_divisor: n, terms })
}
