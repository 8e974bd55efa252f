//! Whole-Hamiltonian measurement plans: one rotated group per clique.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circuit::{synthesize, CircuitRecord, CliffordCircuit, GateCounts};
use crate::cover::{validate_cover, CliqueCover, Relation};
use crate::error::{Error, Result};
use crate::hamiltonian::{Hamiltonian, Term};
use crate::pauli::{PauliAxis, PauliProduct};
use crate::scalar::Coefficient;
use crate::transform::{expand_in_tau, find_basis, transform_group, Expansion, SigmaAssignment, TauSigmaBasis};

#[derive(Clone, Debug, PartialEq)]
pub struct PlanGroup<T> {
    /// Indices into the source Hamiltonian, in the order of `transformed`.
    pub term_indices: Vec<usize>,
    pub basis: TauSigmaBasis,
    pub transformed: Hamiltonian<T>,
    pub expansions: Vec<Expansion>,
    pub circuit: CliffordCircuit,
    pub gate_counts: GateCounts,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementPlan<T> {
    pub n_qubits: usize,
    pub groups: Vec<PlanGroup<T>>,
}

fn in_group(group: usize) -> impl Fn(Error) -> Error {
    move |e| Error::InGroup { group, source: Box::new(e) }
}

/// Builds the τ/σ basis, rotated group and circuit for one group of terms.
pub fn plan_group<T: Coefficient>(h: &Hamiltonian<T>, term_indices: &[usize]) -> Result<PlanGroup<T>> {
    let group = h.select(term_indices)?;
    let basis = find_basis(&group)?;
    let rotated = transform_group(&group, &basis)?;
    let synthesis = synthesize(&basis)?;
    Ok(PlanGroup {
        term_indices: term_indices.to_vec(),
        gate_counts: synthesis.gate_counts(),
        circuit: synthesis.circuit,
        basis,
        transformed: rotated.transformed,
        expansions: rotated.expansions,
    })
}

/// Rotates every group of a fully commuting cover. Groups are processed in
/// parallel; the result keeps the cover's group order.
pub fn pipeline<T: Coefficient>(h: &Hamiltonian<T>, cover: &CliqueCover) -> Result<MeasurementPlan<T>> {
    validate_cover(h, cover, Relation::Fc).into_result()?;
    let groups = cover
        .groups
        .par_iter()
        .enumerate()
        .map(|(gi, indices)| plan_group(h, indices).map_err(in_group(gi)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MeasurementPlan { n_qubits: h.n_qubits(), groups })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaRecord {
    pub qubit: usize,
    pub axis: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: f64,
    pub pauli: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub term_indices: Vec<usize>,
    pub tau: Vec<String>,
    pub sigma: Vec<SigmaRecord>,
    pub transformed: Vec<TermRecord>,
    pub circuit: CircuitRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gate_counts: Option<GateCounts>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanRecord {
    pub n_qubits: usize,
    pub groups: Vec<GroupRecord>,
}

impl<T: Coefficient> MeasurementPlan<T> {
    pub fn to_record(&self) -> PlanRecord {
        PlanRecord {
            n_qubits: self.n_qubits,
            groups: self
                .groups
                .iter()
                .map(|g| GroupRecord {
                    term_indices: g.term_indices.clone(),
                    tau: g.basis.taus().iter().map(PauliProduct::label).collect(),
                    sigma: g
                        .basis
                        .sigmas()
                        .iter()
                        .map(|s| SigmaRecord { qubit: s.qubit, axis: s.axis.to_string() })
                        .collect(),
                    transformed: g
                        .transformed
                        .terms()
                        .iter()
                        .map(|t| TermRecord { coeff: t.coeff.to_f64_lossy(), pauli: t.pauli.label() })
                        .collect(),
                    circuit: g.circuit.to_record(),
                    gate_counts: Some(g.gate_counts),
                })
                .collect(),
        }
    }

    /// Rebuilds a plan from its record against the source Hamiltonian.
    ///
    /// Only structural consistency is enforced here (parsable strings, a
    /// valid basis, source terms expressible in it). Numerical agreement is
    /// the verifier's job, so a record with altered coefficients loads fine.
    pub fn from_record(record: &PlanRecord, h: &Hamiltonian<T>) -> Result<Self> {
        if record.n_qubits != h.n_qubits() {
            return Err(Error::QubitMismatch { left: h.n_qubits(), right: record.n_qubits });
        }
        let n = record.n_qubits;
        let groups = record
            .groups
            .iter()
            .enumerate()
            .map(|(gi, g)| group_from_record(g, h, n).map_err(in_group(gi)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MeasurementPlan { n_qubits: n, groups })
    }
}

fn group_from_record<T: Coefficient>(g: &GroupRecord, h: &Hamiltonian<T>, n: usize) -> Result<PlanGroup<T>> {
    let taus = g.tau.iter().map(|s| PauliProduct::parse_label(s, n)).collect::<Result<Vec<_>>>()?;
    let sigmas = g
        .sigma
        .iter()
        .map(|s| {
            let axis = s
                .axis
                .chars()
                .next()
                .and_then(PauliAxis::from_letter)
                .filter(|_| s.axis.len() == 1)
                .ok_or_else(|| Error::Parse { line: 0, message: format!("bad sigma axis `{}`", s.axis) })?;
            Ok(SigmaAssignment::new(s.qubit, axis))
        })
        .collect::<Result<Vec<_>>>()?;
    let basis = TauSigmaBasis::new(taus, sigmas)?;
    let source = h.select(&g.term_indices)?;
    let expansions = source.terms().iter().map(|t| expand_in_tau(&t.pauli, &basis)).collect::<Result<Vec<_>>>()?;
    let terms = g
        .transformed
        .iter()
        .map(|t| {
            let coeff = T::from_f64(t.coeff)
                .ok_or_else(|| Error::Parse { line: 0, message: format!("bad coefficient {}", t.coeff) })?;
            Ok(Term { coeff, pauli: PauliProduct::parse_label(&t.pauli, n)? })
        })
        .collect::<Result<Vec<_>>>()?;
    let circuit = CliffordCircuit::from_record(&g.circuit)?;
    if circuit.n_qubits() != n {
        return Err(Error::QubitMismatch { left: n, right: circuit.n_qubits() });
    }
    let gate_counts = match g.gate_counts {
        Some(c) => c,
        None => synthesize(&basis)?.gate_counts(),
    };
    Ok(PlanGroup {
        term_indices: g.term_indices.clone(),
        basis,
        transformed: Hamiltonian::from_terms_unchecked(n, terms),
        expansions,
        circuit,
        gate_counts,
    })
}
