//! Real-coefficient Pauli-sum Hamiltonians and their line-oriented text format.
//!
//! ```text
//! # comment
//! qubits: 4
//! -0.4738 I
//! 0.1412 Z1
//! 0.0558 X2 Z1 X0
//! ```
//!
//! Without a `qubits:` header the qubit count is one more than the largest
//! index used. Repeated terms are merged by summing their coefficients and
//! terms whose magnitude falls below [`Coefficient::drop_tolerance`] are
//! dropped.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::pauli::{parse_tokens, PauliAxis, PauliProduct};
use crate::scalar::Coefficient;

type RawTerm<T> = (usize, T, Vec<(usize, PauliAxis)>);

#[derive(Clone, Debug, PartialEq)]
pub struct Term<T> {
    pub coeff: T,
    pub pauli: PauliProduct,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Hamiltonian<T> {
    n_qubits: usize,
    terms: Vec<Term<T>>,
}

impl<T: Coefficient> Hamiltonian<T> {
    /// Builds a Hamiltonian, merging repeated axes and dropping negligible terms.
    ///
    /// The first occurrence of an axis pattern fixes its position.
    pub fn new(n_qubits: usize, terms: impl IntoIterator<Item = (T, PauliProduct)>) -> Result<Self> {
        Self::with_tolerance(n_qubits, terms, T::drop_tolerance())
    }

    pub fn with_tolerance(
        n_qubits: usize,
        terms: impl IntoIterator<Item = (T, PauliProduct)>,
        tolerance: T,
    ) -> Result<Self> {
        let mut index: HashMap<PauliProduct, usize> = HashMap::new();
        let mut merged: Vec<Term<T>> = Vec::new();
        for (coeff, pauli) in terms {
            if pauli.n_qubits() != n_qubits {
                return Err(Error::QubitMismatch { left: n_qubits, right: pauli.n_qubits() });
            }
            if pauli.phase_exp() != 0 {
                return Err(Error::Unsupported(format!(
                    "term {pauli} carries a phase; Hamiltonian coefficients must be real"
                )));
            }
            match index.get(&pauli) {
                Some(&i) => merged[i].coeff = merged[i].coeff + coeff,
                None => {
                    index.insert(pauli.clone(), merged.len());
                    merged.push(Term { coeff, pauli });
                }
            }
        }
        merged.retain(|t| t.coeff.abs() >= tolerance);
        Ok(Hamiltonian { n_qubits, terms: merged })
    }

    /// Wraps terms verbatim: no merging, no dropping. Callers guarantee
    /// distinct, phase-free products.
    pub(crate) fn from_terms_unchecked(n_qubits: usize, terms: Vec<Term<T>>) -> Self {
        Hamiltonian { n_qubits, terms }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn terms(&self) -> &[Term<T>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficients(&self) -> Vec<T> {
        self.terms.iter().map(|t| t.coeff).collect()
    }

    /// Sub-Hamiltonian made of the terms at `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        let mut terms = Vec::with_capacity(indices.len());
        for &i in indices {
            let t = self.terms.get(i).ok_or_else(|| {
                Error::Unsupported(format!("term index {i} out of range ({} terms)", self.terms.len()))
            })?;
            terms.push(t.clone());
        }
        Ok(Hamiltonian { n_qubits: self.n_qubits, terms })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with_tolerance(text, T::drop_tolerance())
    }

    pub fn parse_with_tolerance(text: &str, tolerance: T) -> Result<Self> {
        let mut declared: Option<(usize, usize)> = None;
        // (line number, coefficient, factors)
        let mut raw: Vec<RawTerm<T>> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = match line.find('#') {
                Some(pos) => &line[..pos],
                None => line,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("qubits:") {
                let n: usize = rest.trim().parse().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("bad qubit count `{}`", rest.trim()),
                })?;
                if n == 0 {
                    return Err(Error::Parse { line: lineno, message: "qubit count must be positive".into() });
                }
                declared = Some((n, lineno));
                continue;
            }
            let (coeff_tok, term) = match line.split_once(char::is_whitespace) {
                Some((c, t)) => (c, t.trim()),
                None => {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("expected `<coeff> <term>`, got `{line}`"),
                    })
                }
            };
            let coeff = parse_coefficient::<T>(coeff_tok).map_err(|message| Error::Parse { line: lineno, message })?;
            let factors = parse_tokens(term).map_err(|message| Error::Parse { line: lineno, message })?;
            raw.push((lineno, coeff, factors));
        }
        if raw.is_empty() {
            return Err(Error::EmptyHamiltonian);
        }
        let max_index = raw.iter().flat_map(|(_, _, f)| f.iter().map(|&(q, _)| q)).max();
        let n_qubits = match declared {
            Some((n, _)) => n,
            None => max_index.map_or(1, |m| m + 1),
        };
        let mut terms = Vec::with_capacity(raw.len());
        for (lineno, coeff, factors) in raw {
            if let Some(&(q, _)) = factors.iter().find(|&&(q, _)| q >= n_qubits) {
                return Err(Error::Parse { line: lineno, message: format!("qubit index {q} >= n_qubits {n_qubits}") });
            }
            let pauli = PauliProduct::from_sparse(n_qubits, &factors)
                .map_err(|e| Error::Parse { line: lineno, message: e.to_string() })?;
            terms.push((coeff, pauli));
        }
        let h = Self::with_tolerance(n_qubits, terms, tolerance)?;
        if h.is_empty() {
            return Err(Error::EmptyHamiltonian);
        }
        Ok(h)
    }

    /// Writes the text format with an explicit `qubits:` header.
    pub fn serialize(&self) -> String {
        let mut out = format!("qubits: {}\n", self.n_qubits);
        for t in &self.terms {
            let _ = writeln!(out, "{} {}", t.coeff, t.pauli.label());
        }
        out
    }
}

fn parse_coefficient<T: Coefficient>(tok: &str) -> std::result::Result<T, String> {
    if tok.contains(['i', 'j']) && !tok.eq_ignore_ascii_case("inf") && !tok.eq_ignore_ascii_case("-inf") {
        return Err(format!("non-real coefficient `{tok}`"));
    }
    let value: T = tok.parse().map_err(|_| format!("malformed coefficient `{tok}`"))?;
    if !value.is_finite() {
        return Err(format!("non-finite coefficient `{tok}`"));
    }
    Ok(value)
}

pub fn parse_hamiltonian<T: Coefficient>(text: &str) -> Result<Hamiltonian<T>> {
    Hamiltonian::parse(text)
}

pub fn serialize_hamiltonian<T: Coefficient>(h: &Hamiltonian<T>) -> String {
    h.serialize()
}
