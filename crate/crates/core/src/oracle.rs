//! Dense-matrix and enumeration oracles.
//!
//! Everything here works on explicit `2^N × 2^N` complex matrices built from
//! Kronecker products, so it is independent of the symplectic machinery it is
//! used to check. Qubit 0 is the leftmost Kronecker factor: in a basis index
//! it is the most significant bit.

use nalgebra::{Complex, DMatrix, DVector};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_distr::{Distribution, StandardNormal};

use crate::circuit::{CliffordCircuit, Gate};
use crate::cover::{validate_cover, CliqueCover, Method, Relation};
use crate::error::{Error, Result};
use crate::hamiltonian::Hamiltonian;
use crate::pauli::{all_products, PauliAxis, PauliProduct};
use crate::plan::{MeasurementPlan, PlanGroup};
use crate::scalar::OracleScalar;
use crate::transform::{build_unitary_symbolic, is_qwc_group, SymbolicUnitary, SYMBOLIC_UNITARY_LIMIT};

pub type DenseOperator<T> = DMatrix<Complex<T>>;
pub type DenseState<T> = DVector<Complex<T>>;

/// Hard cap for any dense matrix or state.
pub const DENSE_QUBIT_CAP: usize = 12;
pub const SPECTRUM_QUBIT_CAP: usize = 10;
/// Cap for random-state expectation checks and full unitary comparisons.
pub const EXPECTATION_QUBIT_CAP: usize = 8;
/// `4^n` enumeration cap for [`count_compatible`].
pub const COUNT_QUBIT_CAP: usize = 8;

fn cap(what: &'static str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        return Err(Error::SizeBound { what, limit, got });
    }
    Ok(())
}

fn c<T: OracleScalar>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::from_f64(re).unwrap(), T::from_f64(im).unwrap())
}

fn to_f64<T: OracleScalar>(x: T) -> f64 {
    x.to_f64_lossy()
}

/// `i^k`.
fn i_pow<T: OracleScalar>(k: u8) -> Complex<T> {
    match k % 4 {
        0 => c(1.0, 0.0),
        1 => c(0.0, 1.0),
        2 => c(-1.0, 0.0),
        _ => c(0.0, -1.0),
    }
}

/// `e^{iπk/4}`.
fn eighth_root<T: OracleScalar>(k: u8) -> Complex<T> {
    let angle = std::f64::consts::FRAC_PI_4 * f64::from(k % 8);
    c(angle.cos(), angle.sin())
}

pub fn axis_matrix<T: OracleScalar>(axis: PauliAxis) -> DenseOperator<T> {
    let (o, l, i) = (c::<T>(0.0, 0.0), c::<T>(1.0, 0.0), c::<T>(0.0, 1.0));
    let entries = match axis {
        PauliAxis::I => [l, o, o, l],
        PauliAxis::X => [o, l, l, o],
        PauliAxis::Y => [o, -i, i, o],
        PauliAxis::Z => [l, o, o, -l],
    };
    DMatrix::from_row_slice(2, 2, &entries)
}

pub fn pauli_matrix<T: OracleScalar>(p: &PauliProduct) -> Result<DenseOperator<T>> {
    cap("dense qubits", DENSE_QUBIT_CAP, p.n_qubits())?;
    let mut m = DMatrix::from_element(1, 1, i_pow::<T>(p.phase_exp()));
    for q in 0..p.n_qubits() {
        m = m.kronecker(&axis_matrix::<T>(p.axis(q)));
    }
    Ok(m)
}

pub fn hamiltonian_matrix<T: OracleScalar>(h: &Hamiltonian<T>) -> Result<DenseOperator<T>> {
    let n = h.n_qubits();
    cap("dense qubits", DENSE_QUBIT_CAP, n)?;
    let dim = 1usize << n;
    let mut m = DMatrix::zeros(dim, dim);
    for t in h.terms() {
        m += pauli_matrix::<T>(&t.pauli)? * Complex::new(t.coeff, T::zero());
    }
    Ok(m)
}

/// Matrix of the circuit's unitary, column by column.
pub fn circuit_matrix<T: OracleScalar>(circuit: &CliffordCircuit) -> Result<DenseOperator<T>> {
    let n = circuit.n_qubits();
    cap("dense qubits", DENSE_QUBIT_CAP, n)?;
    let dim = 1usize << n;
    let mut m = DMatrix::zeros(dim, dim);
    for j in 0..dim {
        let mut e = DVector::zeros(dim);
        e[j] = c(1.0, 0.0);
        m.set_column(j, &simulate_circuit(circuit, &e)?);
    }
    Ok(m)
}

pub fn symbolic_matrix<T: OracleScalar>(u: &SymbolicUnitary) -> Result<DenseOperator<T>> {
    cap("dense qubits", DENSE_QUBIT_CAP, u.n_qubits)?;
    let dim = 1usize << u.n_qubits;
    let mut m = DMatrix::zeros(dim, dim);
    for (k, (_, p)) in u.terms.iter().enumerate() {
        m += pauli_matrix::<T>(p)? * u.coefficient::<T>(k);
    }
    Ok(m)
}

/// Anything with a dense matrix representation.
pub trait ToDense<T: OracleScalar> {
    fn to_dense(&self) -> Result<DenseOperator<T>>;
}

impl<T: OracleScalar> ToDense<T> for PauliProduct {
    fn to_dense(&self) -> Result<DenseOperator<T>> {
        pauli_matrix(self)
    }
}

impl<T: OracleScalar> ToDense<T> for Hamiltonian<T> {
    fn to_dense(&self) -> Result<DenseOperator<T>> {
        hamiltonian_matrix(self)
    }
}

impl<T: OracleScalar> ToDense<T> for CliffordCircuit {
    fn to_dense(&self) -> Result<DenseOperator<T>> {
        circuit_matrix(self)
    }
}

impl<T: OracleScalar> ToDense<T> for SymbolicUnitary {
    fn to_dense(&self) -> Result<DenseOperator<T>> {
        symbolic_matrix(self)
    }
}

pub fn dense_matrix<T: OracleScalar, X: ToDense<T> + ?Sized>(x: &X) -> Result<DenseOperator<T>> {
    x.to_dense()
}

/// Applies the gates in order (first gate first), then the global phase.
pub fn simulate_circuit<T: OracleScalar>(circuit: &CliffordCircuit, state: &DenseState<T>) -> Result<DenseState<T>> {
    let n = circuit.n_qubits();
    cap("dense qubits", DENSE_QUBIT_CAP, n)?;
    let dim = 1usize << n;
    if state.len() != dim {
        return Err(Error::Unsupported(format!("state of length {} for {n} qubits", state.len())));
    }
    let mask = |q: usize| 1usize << (n - 1 - q);
    let r = c::<T>(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let i = c::<T>(0.0, 1.0);
    let mut s = state.clone();
    for gate in circuit.gates() {
        match *gate {
            Gate::Cnot { control, target } => {
                let (mc, mt) = (mask(control), mask(target));
                for k in (0..dim).filter(|k| k & mc != 0 && k & mt == 0) {
                    s.swap_rows(k, k | mt);
                }
            }
            Gate::H(q) | Gate::S(q) | Gate::Sdg(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) => {
                let m = mask(q);
                for k0 in (0..dim).filter(|k| k & m == 0) {
                    let k1 = k0 | m;
                    let (a, b) = (s[k0], s[k1]);
                    let (na, nb) = match gate {
                        Gate::H(_) => ((a + b) * r, (a - b) * r),
                        Gate::S(_) => (a, b * i),
                        Gate::Sdg(_) => (a, -(b * i)),
                        Gate::X(_) => (b, a),
                        Gate::Y(_) => (-(b * i), a * i),
                        _ => (a, -b),
                    };
                    s[k0] = na;
                    s[k1] = nb;
                }
            }
        }
    }
    Ok(s * eighth_root::<T>(circuit.global_phase_exp()))
}

/// Eigenvalues of a Hermitian operator, ascending.
pub fn operator_spectrum<T: OracleScalar>(m: &DenseOperator<T>) -> Vec<T> {
    let mut ev: Vec<T> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    ev
}

pub fn spectrum<T: OracleScalar>(h: &Hamiltonian<T>) -> Result<Vec<T>> {
    cap("spectrum qubits", SPECTRUM_QUBIT_CAP, h.n_qubits())?;
    Ok(operator_spectrum(&hamiltonian_matrix(h)?))
}

/// Largest difference between the sorted spectra.
pub fn spectrum_deviation<T: OracleScalar>(h1: &Hamiltonian<T>, h2: &Hamiltonian<T>) -> Result<f64> {
    if h1.n_qubits() != h2.n_qubits() {
        return Err(Error::QubitMismatch { left: h1.n_qubits(), right: h2.n_qubits() });
    }
    let (a, b) = (spectrum(h1)?, spectrum(h2)?);
    Ok(a.iter().zip(&b).map(|(x, y)| (to_f64(*x) - to_f64(*y)).abs()).fold(0.0, f64::max))
}

pub fn spectra_equal<T: OracleScalar>(h1: &Hamiltonian<T>, h2: &Hamiltonian<T>) -> Result<bool> {
    Ok(spectrum_deviation(h1, h2)? <= 1e-9)
}

/// Normalised state with independent complex Gaussian amplitudes.
pub fn random_state<T: OracleScalar, R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> DenseState<T> {
    let dim = 1usize << n_qubits;
    let v: Vec<f64> = (0..2 * dim).map(|_| StandardNormal.sample(rng)).collect();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    DVector::from_iterator(dim, (0..dim).map(|k| c(v[2 * k] / norm, v[2 * k + 1] / norm)))
}

pub fn expectation<T: OracleScalar>(m: &DenseOperator<T>, psi: &DenseState<T>) -> Complex<T> {
    psi.dotc(&(m * psi))
}

/// `max |⟨ψ|H|ψ⟩ − ⟨Uψ|A|Uψ⟩|` over `trials` random states.
pub fn expectation_invariance<T: OracleScalar, R: Rng + ?Sized>(
    h: &Hamiltonian<T>,
    a: &Hamiltonian<T>,
    u: &DenseOperator<T>,
    trials: usize,
    rng: &mut R,
) -> Result<f64> {
    let n = h.n_qubits();
    cap("expectation qubits", EXPECTATION_QUBIT_CAP, n)?;
    if a.n_qubits() != n {
        return Err(Error::QubitMismatch { left: n, right: a.n_qubits() });
    }
    let (hm, am) = (hamiltonian_matrix(h)?, hamiltonian_matrix(a)?);
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let psi = random_state::<T, R>(n, rng);
        let phi = u * &psi;
        let d = expectation(&hm, &psi) - expectation(&am, &phi);
        worst = worst.max(to_f64(d.norm()));
    }
    Ok(worst)
}

/// Largest entrywise modulus of `a − b`.
pub fn max_deviation<T: OracleScalar>(a: &DenseOperator<T>, b: &DenseOperator<T>) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    a.iter().zip(b.iter()).map(|(x, y)| to_f64((*x - *y).norm())).fold(0.0, f64::max)
}

/// Like [`max_deviation`] after aligning `b` to `a` by a global phase.
pub fn max_deviation_up_to_phase<T: OracleScalar>(a: &DenseOperator<T>, b: &DenseOperator<T>) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    let Some((k, _)) = b
        .iter()
        .enumerate()
        .map(|(k, x)| (k, to_f64(x.norm())))
        .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap_or(std::cmp::Ordering::Equal))
    else {
        return 0.0;
    };
    if to_f64(b[k].norm()) == 0.0 {
        return max_deviation(a, b);
    }
    let ratio = a[k] / b[k];
    let phase = ratio / Complex::new(ratio.norm(), T::zero());
    max_deviation(a, &(b * phase))
}

pub fn is_unitary<T: OracleScalar>(u: &DenseOperator<T>, tol: f64) -> bool {
    let id = DMatrix::identity(u.nrows(), u.ncols());
    max_deviation(&(u * u.adjoint()), &id) <= tol
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompatCounts {
    pub n_qwc: usize,
    pub n_commuting: usize,
}

/// Counts, over all `4^n` products including the identity, those that
/// qubit-wise commute and those that commute with `template`.
pub fn count_compatible(template: &PauliProduct, n: usize) -> Result<CompatCounts> {
    cap("enumeration qubits", COUNT_QUBIT_CAP, n)?;
    if template.n_qubits() != n {
        return Err(Error::QubitMismatch { left: n, right: template.n_qubits() });
    }
    let mut counts = CompatCounts { n_qwc: 0, n_commuting: 0 };
    for p in all_products(n) {
        counts.n_qwc += usize::from(template.qubitwise_commutes_with(&p));
        counts.n_commuting += usize::from(template.commutes_with(&p));
    }
    Ok(counts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    /// `None` for whole-plan checks.
    pub group: Option<usize>,
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Failed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    /// Tolerance for comparisons after diagonalisation and for expectations.
    pub tolerance: f64,
    /// Tolerance for direct matrix algebra.
    pub algebra_tolerance: f64,
    pub trials: usize,
    pub seed: u64,
    /// Largest group size for the full-unitary and expectation checks.
    pub dense_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tolerance: 1e-9,
            algebra_tolerance: 1e-10,
            trials: 16,
            seed: 0,
            dense_cap: EXPECTATION_QUBIT_CAP,
        }
    }
}

struct Recorder {
    group: Option<usize>,
    checks: Vec<Check>,
}

impl Recorder {
    fn push(&mut self, name: &'static str, status: CheckStatus, detail: impl Into<String>) {
        self.checks.push(Check { group: self.group, name, status, detail: detail.into() });
    }

    fn verdict(&mut self, name: &'static str, ok: bool, detail: impl Into<String>) {
        self.push(name, if ok { CheckStatus::Passed } else { CheckStatus::Failed }, detail);
    }

    fn deviation(&mut self, name: &'static str, dev: f64, tol: f64) {
        self.verdict(name, dev <= tol, format!("max deviation {dev:.3e} (tolerance {tol:.0e})"));
    }

    fn skip(&mut self, name: &'static str, why: impl Into<String>) {
        self.push(name, CheckStatus::Skipped, why);
    }

    fn error(&mut self, name: &'static str, e: Error) {
        self.push(name, CheckStatus::Failed, e.to_string());
    }
}

/// Checks a plan against its source Hamiltonian with independent oracles.
///
/// Per group: the τ/σ basis invariants, qubit-wise commutation of the
/// rotated terms, term-by-term coefficient magnitudes, equal spectra, and
/// (up to `dense_cap` qubits) `U†HU = A` with `U` from the circuit, random
/// expectation values, and circuit versus symbolic unitary. Whole plan: the
/// groups partition the terms into commuting sets.
pub fn verify_plan<T: OracleScalar>(
    h: &Hamiltonian<T>,
    plan: &MeasurementPlan<T>,
    opts: &VerifyOptions,
) -> VerifyReport {
    let mut rec = Recorder { group: None, checks: Vec::new() };
    if plan.n_qubits != h.n_qubits() {
        rec.error("qubits", Error::QubitMismatch { left: h.n_qubits(), right: plan.n_qubits });
        return VerifyReport { checks: rec.checks };
    }
    let cover = CliqueCover {
        relation: Relation::Fc,
        method: Method::Gc,
        groups: plan.groups.iter().map(|g| g.term_indices.clone()).collect(),
    };
    match validate_cover(h, &cover, Relation::Fc).into_result() {
        Ok(()) => rec.verdict("partition", true, format!("{} groups cover {} terms", cover.len(), h.len())),
        Err(e) => rec.error("partition", e),
    }
    let mut rng = StdRng::seed_from_u64(opts.seed);
    for (gi, g) in plan.groups.iter().enumerate() {
        rec.group = Some(gi);
        verify_group(&mut rec, h, g, opts, &mut rng);
    }
    VerifyReport { checks: rec.checks }
}

fn verify_group<T: OracleScalar>(
    rec: &mut Recorder,
    h: &Hamiltonian<T>,
    g: &PlanGroup<T>,
    opts: &VerifyOptions,
    rng: &mut StdRng,
) {
    let n = h.n_qubits();
    match g.basis.validate() {
        Ok(()) => rec.verdict("basis", true, "tau/sigma relations hold"),
        Err(e) => rec.error("basis", e),
    }
    rec.verdict("qwc", is_qwc_group(&g.transformed), "rotated terms commute qubit-wise");
    let source = match h.select(&g.term_indices) {
        Ok(s) => s,
        Err(e) => return rec.error("terms", e),
    };
    let a = &g.transformed;
    if a.len() != source.len() {
        rec.verdict("coefficients", false, format!("{} rotated terms for {} source terms", a.len(), source.len()));
    } else {
        let dev = source
            .terms()
            .iter()
            .zip(a.terms())
            .map(|(s, t)| (to_f64(s.coeff).abs() - to_f64(t.coeff).abs()).abs())
            .fold(0.0, f64::max);
        rec.deviation("coefficients", dev, opts.algebra_tolerance);
    }
    if n > SPECTRUM_QUBIT_CAP {
        rec.skip("spectrum", format!("{n} qubits exceeds the spectrum cap"));
    } else {
        match spectrum_deviation(&source, a) {
            Ok(dev) => rec.deviation("spectrum", dev, opts.tolerance),
            Err(e) => rec.error("spectrum", e),
        }
    }
    let unitary_checks = ["conjugation", "expectation", "circuit_vs_symbolic"];
    if n > opts.dense_cap.min(EXPECTATION_QUBIT_CAP) {
        for name in unitary_checks {
            rec.skip(name, format!("{n} qubits exceeds the dense cap"));
        }
        return;
    }
    let u = match circuit_matrix::<T>(&g.circuit) {
        Ok(u) => u,
        Err(e) => {
            for name in unitary_checks {
                rec.error(name, e.clone());
            }
            return;
        }
    };
    let conj = (|| -> Result<f64> {
        let hm = hamiltonian_matrix(&source)?;
        Ok(max_deviation(&(u.adjoint() * hm * &u), &hamiltonian_matrix(a)?))
    })();
    match conj {
        Ok(dev) => rec.deviation("conjugation", dev, opts.tolerance),
        Err(e) => rec.error("conjugation", e),
    }
    match expectation_invariance(&source, a, &u, opts.trials, rng) {
        Ok(dev) => rec.deviation("expectation", dev, opts.tolerance),
        Err(e) => rec.error("expectation", e),
    }
    if n > SYMBOLIC_UNITARY_LIMIT {
        rec.skip("circuit_vs_symbolic", "basis too large for the symbolic unitary");
        return;
    }
    let sym = build_unitary_symbolic(&g.basis).and_then(|s| symbolic_matrix::<T>(&s));
    match sym {
        Ok(s) => rec.deviation("circuit_vs_symbolic", max_deviation_up_to_phase(&s, &u), opts.algebra_tolerance),
        Err(e) => rec.error("circuit_vs_symbolic", e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliProduct {
        s.parse().unwrap()
    }

    fn re(x: f64) -> Complex<f64> {
        Complex::new(x, 0.0)
    }

    #[test]
    fn z_is_diagonal() {
        let m: DenseOperator<f64> = pauli_matrix(&p("Z")).unwrap();
        assert_eq!(m, DMatrix::from_row_slice(2, 2, &[re(1.0), re(0.0), re(0.0), re(-1.0)]));
    }

    #[test]
    fn qubit_zero_is_leftmost_factor() {
        let xy: DenseOperator<f64> = pauli_matrix(&p("XY")).unwrap();
        let expected = axis_matrix::<f64>(PauliAxis::X).kronecker(&axis_matrix::<f64>(PauliAxis::Y));
        assert_eq!(xy, expected);
        // X on qubit 0 flips the most significant index bit.
        let x0: DenseOperator<f64> = pauli_matrix(&p("XI")).unwrap();
        assert_eq!(x0[(2, 0)], re(1.0));
    }

    #[test]
    fn phase_is_included() {
        let m: DenseOperator<f64> = pauli_matrix(&p("Z").with_phase(1)).unwrap();
        assert_eq!(m[(1, 1)], Complex::new(0.0, -1.0));
    }

    #[test]
    fn model_spectrum() {
        let h: Hamiltonian<f64> = Hamiltonian::parse("1 X0 X1\n1 Z0 Z1\n").unwrap();
        let ev = spectrum(&h).unwrap();
        for (got, want) in ev.iter().zip([-2.0, 0.0, 0.0, 2.0]) {
            assert!((got - want).abs() < 1e-12, "{ev:?}");
        }
    }

    #[test]
    fn empty_circuit_keeps_state() {
        let mut rng = StdRng::seed_from_u64(1);
        let psi = random_state::<f64, _>(3, &mut rng);
        let out = simulate_circuit(&CliffordCircuit::new(3), &psi).unwrap();
        assert!((out - psi).norm() < 1e-15);
    }

    #[test]
    fn gate_matrices() {
        let one = |g: Gate| circuit_matrix::<f64>(&CliffordCircuit::from_gates(1, vec![g], 0).unwrap()).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!(
            max_deviation(&one(Gate::H(0)), &DMatrix::from_row_slice(2, 2, &[re(s), re(s), re(s), re(-s)])) < 1e-15
        );
        assert_eq!(one(Gate::S(0))[(1, 1)], Complex::new(0.0, 1.0));
        assert_eq!(one(Gate::Sdg(0))[(1, 1)], Complex::new(0.0, -1.0));
        for axis in [PauliAxis::X, PauliAxis::Y, PauliAxis::Z] {
            let g = match axis {
                PauliAxis::X => Gate::X(0),
                PauliAxis::Y => Gate::Y(0),
                _ => Gate::Z(0),
            };
            assert_eq!(one(g), axis_matrix::<f64>(axis));
        }
        // CNOT with control 0 maps |10> to |11>.
        let cx = circuit_matrix::<f64>(
            &CliffordCircuit::from_gates(2, vec![Gate::Cnot { control: 0, target: 1 }], 0).unwrap(),
        )
        .unwrap();
        assert_eq!(cx[(3, 2)], re(1.0));
        assert_eq!(cx[(0, 0)], re(1.0));
    }

    #[test]
    fn counts_for_identity_template() {
        let c = count_compatible(&PauliProduct::identity(3), 3).unwrap();
        assert_eq!(c, CompatCounts { n_qwc: 64, n_commuting: 64 });
    }

    #[test]
    fn caps_enforced() {
        assert!(matches!(count_compatible(&PauliProduct::identity(9), 9), Err(Error::SizeBound { .. })));
        assert!(matches!(pauli_matrix::<f64>(&PauliProduct::identity(13)), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn phase_alignment() {
        let a: DenseOperator<f64> = pauli_matrix(&p("XZ")).unwrap();
        let b = &a * Complex::new(0.0, 1.0);
        assert!(max_deviation(&a, &b) > 1.0);
        assert!(max_deviation_up_to_phase(&a, &b) < 1e-15);
    }
}
