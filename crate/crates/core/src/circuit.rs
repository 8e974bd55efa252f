//! Clifford circuits for the per-group rotation `U = V_1 ⋯ V_N`.
//!
//! Each `V_i = (τ_i + σ_i)/√2` is rewritten as
//! `(-i) e^{iπ/4 σ_i} e^{iπ/4 τ_i} e^{iπ/4 σ_i}` and every `π/4` Pauli
//! exponential is lowered to basis changes around a CNOT ladder.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pauli::{PauliAxis, PauliProduct};
use crate::transform::TauSigmaBasis;

/// `exp(iπ/4 · pauli)` for a phase-free, non-identity product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliExponent {
    pauli: PauliProduct,
}

impl PauliExponent {
    pub fn new(pauli: PauliProduct) -> Result<Self> {
        if pauli.is_identity_axes() {
            return Err(Error::Unsupported("exponent of the identity".into()));
        }
        Ok(PauliExponent { pauli: pauli.unsigned() })
    }

    pub fn pauli(&self) -> &PauliProduct {
        &self.pauli
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    H(usize),
    S(usize),
    Sdg(usize),
    X(usize),
    Y(usize),
    Z(usize),
    Cnot { control: usize, target: usize },
}

impl Gate {
    pub fn name(&self) -> &'static str {
        match self {
            Gate::H(_) => "H",
            Gate::S(_) => "S",
            Gate::Sdg(_) => "SDG",
            Gate::X(_) => "X",
            Gate::Y(_) => "Y",
            Gate::Z(_) => "Z",
            Gate::Cnot { .. } => "CNOT",
        }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::H(q) | Gate::S(q) | Gate::Sdg(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) => vec![q],
            Gate::Cnot { control, target } => vec![control, target],
        }
    }

    pub fn is_two_qubit(&self) -> bool {
        matches!(self, Gate::Cnot { .. })
    }

    pub fn inverse(&self) -> Gate {
        match *self {
            Gate::S(q) => Gate::Sdg(q),
            Gate::Sdg(q) => Gate::S(q),
            g => g,
        }
    }

    pub fn from_parts(name: &str, qubits: &[usize]) -> Result<Gate> {
        let bad = || Error::Parse { line: 0, message: format!("bad gate `{name}` on {qubits:?}") };
        let one = || if qubits.len() == 1 { Ok(qubits[0]) } else { Err(bad()) };
        Ok(match name.to_ascii_uppercase().as_str() {
            "H" => Gate::H(one()?),
            "S" => Gate::S(one()?),
            "SDG" => Gate::Sdg(one()?),
            "X" => Gate::X(one()?),
            "Y" => Gate::Y(one()?),
            "Z" => Gate::Z(one()?),
            "CNOT" | "CX" => {
                if qubits.len() != 2 || qubits[0] == qubits[1] {
                    return Err(bad());
                }
                Gate::Cnot { control: qubits[0], target: qubits[1] }
            }
            _ => return Err(bad()),
        })
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        for q in self.qubits() {
            write!(f, " {q}")?;
        }
        Ok(())
    }
}

/// Gates in time order (`gates[0]` acts first) and a global phase.
///
/// The implemented unitary is `e^{iπ·global_phase_exp/4} · G_last ⋯ G_first`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordCircuit {
    n_qubits: usize,
    gates: Vec<Gate>,
    global_phase_exp: u8,
}

impl CliffordCircuit {
    pub fn new(n_qubits: usize) -> Self {
        CliffordCircuit { n_qubits, gates: Vec::new(), global_phase_exp: 0 }
    }

    pub fn from_gates(n_qubits: usize, gates: Vec<Gate>, global_phase_exp: u8) -> Result<Self> {
        let mut c = CliffordCircuit::new(n_qubits);
        c.global_phase_exp = global_phase_exp % 8;
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn global_phase_exp(&self) -> u8 {
        self.global_phase_exp
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        if let Some(&q) = gate.qubits().iter().find(|&&q| q >= self.n_qubits) {
            return Err(Error::Unsupported(format!("gate {gate} touches qubit {q} of {}", self.n_qubits)));
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Multiplies the global phase by `e^{iπ·eighths/4}`.
    pub fn add_phase(&mut self, eighths: u8) {
        self.global_phase_exp = (self.global_phase_exp + eighths) % 8;
    }

    /// Runs `other` after `self`.
    pub fn append(&mut self, other: &CliffordCircuit) {
        assert_eq!(self.n_qubits, other.n_qubits);
        self.gates.extend_from_slice(&other.gates);
        self.add_phase(other.global_phase_exp);
    }

    pub fn inverse(&self) -> CliffordCircuit {
        CliffordCircuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
            global_phase_exp: (8 - self.global_phase_exp) % 8,
        }
    }

    pub fn cnot_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_two_qubit()).count()
    }

    pub fn single_qubit_count(&self) -> usize {
        self.gates.len() - self.cnot_count()
    }

    /// One gate per line, preceded by `qubits:` and `phase:` headers.
    pub fn to_text(&self) -> String {
        let mut out = format!("qubits: {}\nphase: {}\n", self.n_qubits, self.global_phase_exp);
        for g in &self.gates {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_record(&self) -> CircuitRecord {
        CircuitRecord {
            n_qubits: self.n_qubits,
            global_phase_exp: self.global_phase_exp,
            gates: self.gates.iter().map(|g| GateRecord { name: g.name().to_string(), qubits: g.qubits() }).collect(),
        }
    }

    pub fn from_record(r: &CircuitRecord) -> Result<Self> {
        let gates = r.gates.iter().map(|g| Gate::from_parts(&g.name, &g.qubits)).collect::<Result<Vec<_>>>()?;
        Self::from_gates(r.n_qubits, gates, r.global_phase_exp)
    }
}

impl FromStr for CliffordCircuit {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut n_qubits = None;
        let mut phase = 0u8;
        let mut gates = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: lineno + 1, message };
            if let Some(rest) = line.strip_prefix("qubits:") {
                n_qubits = Some(rest.trim().parse::<usize>().map_err(|_| err(format!("bad qubit count `{rest}`")))?);
                continue;
            }
            if let Some(rest) = line.strip_prefix("phase:") {
                phase = rest.trim().parse::<u8>().map_err(|_| err(format!("bad phase `{rest}`")))?;
                continue;
            }
            let mut parts = line.split_whitespace();
            let name = parts.next().unwrap_or_default();
            let qubits = parts
                .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad qubit `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            gates.push(Gate::from_parts(name, &qubits).map_err(|e| err(e.to_string()))?);
        }
        let n = n_qubits.ok_or(Error::Parse { line: 0, message: "missing `qubits:` header".into() })?;
        CliffordCircuit::from_gates(n, gates, phase)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateRecord {
    pub name: String,
    pub qubits: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitRecord {
    pub n_qubits: usize,
    pub global_phase_exp: u8,
    pub gates: Vec<GateRecord>,
}

/// Global phase of the exponent form of `V`, in eighths of a turn: `-i`.
pub const V_PHASE_EIGHTHS: u8 = 6;

/// `(τ + σ)/√2 = e^{iπ·6/4} · e^{iπ/4 σ} e^{iπ/4 τ} e^{iπ/4 σ}`.
///
/// Returns the phase in eighths and the three exponents in operator order
/// (which is also time order, the sequence being a palindrome).
pub fn exponent_sequence(tau: &PauliProduct, sigma: &PauliProduct) -> Result<(u8, [PauliExponent; 3])> {
    if tau.n_qubits() != sigma.n_qubits() {
        return Err(Error::QubitMismatch { left: tau.n_qubits(), right: sigma.n_qubits() });
    }
    if sigma.weight() != 1 {
        return Err(Error::InvalidBasis(format!("sigma {sigma} is not a single-qubit Pauli")));
    }
    if tau.commutes_with(sigma) {
        return Err(Error::InvalidBasis(format!("{tau} and {sigma} commute")));
    }
    let s = PauliExponent::new(sigma.clone())?;
    let t = PauliExponent::new(tau.clone())?;
    Ok((V_PHASE_EIGHTHS, [s.clone(), t, s]))
}

/// Circuit equal to `exp(iπ/4 · P)` exactly, including the global phase.
///
/// Support qubits `q_1 < … < q_w` are rotated to `Z` (`H` for `X`,
/// `S†` then `H` for `Y`), a CNOT ladder folds the parity onto `q_w`,
/// `exp(iπ/4 Z) = e^{iπ/4} S†` acts there, and everything is undone.
pub fn decompose_exponent(e: &PauliExponent) -> CliffordCircuit {
    let p = &e.pauli;
    let n = p.n_qubits();
    let support = p.support();
    let mut basis_change = Vec::new();
    for &q in &support {
        match p.axis(q) {
            PauliAxis::X => basis_change.push(Gate::H(q)),
            PauliAxis::Y => {
                basis_change.push(Gate::Sdg(q));
                basis_change.push(Gate::H(q));
            }
            _ => {}
        }
    }
    let ladder: Vec<Gate> = support.windows(2).map(|w| Gate::Cnot { control: w[0], target: w[1] }).collect();
    let target = *support.last().expect("exponent is non-identity");

    let mut gates = basis_change.clone();
    gates.extend_from_slice(&ladder);
    gates.push(Gate::Sdg(target));
    gates.extend(ladder.iter().rev().copied());
    gates.extend(basis_change.iter().rev().map(Gate::inverse));
    CliffordCircuit { n_qubits: n, gates, global_phase_exp: 1 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExponentRole {
    Sigma,
    Tau,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateCounts {
    pub cnots: usize,
    pub single_qubit_gates: usize,
    /// Single-qubit `π/4` exponents, `2N`.
    pub sigma_exponents: usize,
    /// τ exponents (generally multi-qubit), `N`.
    pub tau_exponents: usize,
}

/// Exponent list and lowered circuit for `U = V_1 ⋯ V_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Synthesis {
    /// Exponents in operator order: `V_1`'s three first.
    pub exponents: Vec<(ExponentRole, PauliExponent)>,
    pub circuit: CliffordCircuit,
}

impl Synthesis {
    pub fn gate_counts(&self) -> GateCounts {
        gate_counts(self)
    }
}

/// Lowers `U = V_1 V_2 ⋯ V_N`. The circuit's unitary equals `U` exactly;
/// in time order `V_N` is applied first.
pub fn synthesize(basis: &TauSigmaBasis) -> Result<Synthesis> {
    let n = basis.n_qubits();
    let mut exponents = Vec::with_capacity(3 * n);
    let mut per_factor = Vec::with_capacity(n);
    for (i, tau) in basis.taus().iter().enumerate() {
        let (phase, seq) = exponent_sequence(tau, &basis.sigma_product(i))?;
        let mut v = CliffordCircuit::new(n);
        v.add_phase(phase);
        for (k, e) in seq.into_iter().enumerate() {
            v.append(&decompose_exponent(&e));
            exponents.push((if k == 1 { ExponentRole::Tau } else { ExponentRole::Sigma }, e));
        }
        per_factor.push(v);
    }
    let mut circuit = CliffordCircuit::new(n);
    for v in per_factor.iter().rev() {
        circuit.append(v);
    }
    Ok(Synthesis { exponents, circuit })
}

pub fn gate_counts(s: &Synthesis) -> GateCounts {
    GateCounts {
        cnots: s.circuit.cnot_count(),
        single_qubit_gates: s.circuit.single_qubit_count(),
        sigma_exponents: s.exponents.iter().filter(|(r, _)| *r == ExponentRole::Sigma).count(),
        tau_exponents: s.exponents.iter().filter(|(r, _)| *r == ExponentRole::Tau).count(),
    }
}
