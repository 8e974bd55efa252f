//! Pauli products, their binary symplectic images, and commutation tests.
//!
//! A Pauli product on `N` qubits is stored as a pair of packed bit blocks
//! `(x, z)` plus a phase exponent `k`, the operator being `i^k` times the
//! tensor product of single-qubit axes. Axis `i` is encoded by `(x_i, z_i)`:
//! `I = (0,0)`, `X = (1,0)`, `Z = (0,1)`, `Y = (1,1)`. Qubit indices are
//! zero-based.

use std::fmt;
use std::str::FromStr;

use crate::bits::BitString;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliAxis {
    I,
    X,
    Y,
    Z,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 4] = [PauliAxis::I, PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliAxis::I,
            (true, false) => PauliAxis::X,
            (true, true) => PauliAxis::Y,
            (false, true) => PauliAxis::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliAxis::I => (false, false),
            PauliAxis::X => (true, false),
            PauliAxis::Y => (true, true),
            PauliAxis::Z => (false, true),
        }
    }

    pub fn is_identity(self) -> bool {
        self == PauliAxis::I
    }

    pub fn letter(self) -> char {
        match self {
            PauliAxis::I => 'I',
            PauliAxis::X => 'X',
            PauliAxis::Y => 'Y',
            PauliAxis::Z => 'Z',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'I' => Some(PauliAxis::I),
            'X' => Some(PauliAxis::X),
            'Y' => Some(PauliAxis::Y),
            'Z' => Some(PauliAxis::Z),
            _ => None,
        }
    }

    /// Fixed choice of a single-qubit axis anticommuting with `self`:
    /// `X -> Z`, `Y -> X`, `Z -> X`. `None` for the identity.
    pub fn anticommuting_partner(self) -> Option<Self> {
        match self {
            PauliAxis::I => None,
            PauliAxis::X => Some(PauliAxis::Z),
            PauliAxis::Y => Some(PauliAxis::X),
            PauliAxis::Z => Some(PauliAxis::X),
        }
    }
}

impl fmt::Display for PauliAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Length-`2N` binary vector over GF(2): `x` block then `z` block.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymplecticVector {
    n_qubits: usize,
    x: BitString,
    z: BitString,
}

impl SymplecticVector {
    pub fn zero(n_qubits: usize) -> Self {
        SymplecticVector { n_qubits, x: BitString::zeros(n_qubits), z: BitString::zeros(n_qubits) }
    }

    /// Builds a vector from its `2N` components in `(x ; z)` layout.
    pub fn from_bits(bits: &[bool]) -> Self {
        assert!(bits.len().is_multiple_of(2), "symplectic vectors have even length");
        let n = bits.len() / 2;
        SymplecticVector { n_qubits: n, x: BitString::from_bools(&bits[..n]), z: BitString::from_bools(&bits[n..]) }
    }

    pub fn from_blocks(x: &[bool], z: &[bool]) -> Self {
        assert_eq!(x.len(), z.len());
        SymplecticVector { n_qubits: x.len(), x: BitString::from_bools(x), z: BitString::from_bools(z) }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// Number of components, `2N`.
    pub fn dim(&self) -> usize {
        2 * self.n_qubits
    }

    pub fn x_block(&self) -> &BitString {
        &self.x
    }

    pub fn z_block(&self) -> &BitString {
        &self.z
    }

    /// Component `c` in the flat `(x ; z)` layout.
    #[inline]
    pub fn bit(&self, c: usize) -> bool {
        if c < self.n_qubits {
            self.x.get(c)
        } else {
            self.z.get(c - self.n_qubits)
        }
    }

    #[inline]
    pub fn set_bit(&mut self, c: usize, value: bool) {
        if c < self.n_qubits {
            self.x.set(c, value)
        } else {
            self.z.set(c - self.n_qubits, value)
        }
    }

    pub fn axis(&self, qubit: usize) -> PauliAxis {
        PauliAxis::from_bits(self.x.get(qubit), self.z.get(qubit))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn xor_assign(&mut self, other: &SymplecticVector) {
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    pub fn xor(&self, other: &SymplecticVector) -> SymplecticVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// `x_u · z_v + z_u · x_v (mod 2)`; sizes must agree.
    #[inline]
    pub fn inner(&self, other: &SymplecticVector) -> bool {
        debug_assert_eq!(self.n_qubits, other.n_qubits);
        self.x.and_parity(&other.z) ^ self.z.and_parity(&other.x)
    }

    /// Image under the symplectic metric: swaps the `x` and `z` blocks.
    pub fn swap_blocks(&self) -> SymplecticVector {
        SymplecticVector { n_qubits: self.n_qubits, x: self.z.clone(), z: self.x.clone() }
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.dim()).map(|c| self.bit(c)).collect()
    }
}

impl fmt::Debug for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?};{:?})", self.x, self.z)
    }
}

pub fn symplectic_inner(u: &SymplecticVector, v: &SymplecticVector) -> Result<bool> {
    check_sizes(u.n_qubits, v.n_qubits)?;
    Ok(u.inner(v))
}

fn check_sizes(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::QubitMismatch { left, right });
    }
    Ok(())
}

/// `i^phase_exp` times a tensor product of single-qubit Pauli axes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliProduct {
    vec: SymplecticVector,
    phase_exp: u8,
}

impl PauliProduct {
    pub fn identity(n_qubits: usize) -> Self {
        PauliProduct { vec: SymplecticVector::zero(n_qubits), phase_exp: 0 }
    }

    pub fn from_axes(axes: &[PauliAxis]) -> Self {
        let mut vec = SymplecticVector::zero(axes.len());
        for (q, axis) in axes.iter().enumerate() {
            let (x, z) = axis.bits();
            vec.x.set(q, x);
            vec.z.set(q, z);
        }
        PauliProduct { vec, phase_exp: 0 }
    }

    /// Product with the given `(qubit, axis)` factors; each qubit at most once.
    pub fn from_sparse(n_qubits: usize, factors: &[(usize, PauliAxis)]) -> Result<Self> {
        let mut axes = vec![PauliAxis::I; n_qubits];
        for &(q, axis) in factors {
            if q >= n_qubits {
                return Err(Error::Unsupported(format!("qubit {q} out of range for {n_qubits} qubits")));
            }
            if !axes[q].is_identity() {
                return Err(Error::Unsupported(format!("qubit {q} appears twice")));
            }
            axes[q] = axis;
        }
        Ok(Self::from_axes(&axes))
    }

    pub fn single(n_qubits: usize, qubit: usize, axis: PauliAxis) -> Self {
        let mut axes = vec![PauliAxis::I; n_qubits];
        axes[qubit] = axis;
        Self::from_axes(&axes)
    }

    /// Phase-free product with the given binary image.
    pub fn from_symplectic(vec: &SymplecticVector) -> Self {
        PauliProduct { vec: vec.clone(), phase_exp: 0 }
    }

    pub fn with_phase(mut self, phase_exp: u8) -> Self {
        self.phase_exp = phase_exp % 4;
        self
    }

    pub fn n_qubits(&self) -> usize {
        self.vec.n_qubits
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn axis(&self, qubit: usize) -> PauliAxis {
        self.vec.axis(qubit)
    }

    pub fn axes(&self) -> Vec<PauliAxis> {
        (0..self.n_qubits()).map(|q| self.axis(q)).collect()
    }

    /// Qubits carrying a non-identity axis, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n_qubits()).filter(|&q| !self.axis(q).is_identity()).collect()
    }

    pub fn weight(&self) -> usize {
        self.vec.x.words().iter().zip(self.vec.z.words()).map(|(x, z)| (x | z).count_ones() as usize).sum()
    }

    /// True when every axis is `I` (the phase is not inspected).
    pub fn is_identity_axes(&self) -> bool {
        self.vec.is_zero()
    }

    pub fn symplectic(&self) -> &SymplecticVector {
        &self.vec
    }

    pub fn to_symplectic(&self) -> SymplecticVector {
        self.vec.clone()
    }

    /// The same axes with the phase stripped.
    pub fn unsigned(&self) -> PauliProduct {
        PauliProduct { vec: self.vec.clone(), phase_exp: 0 }
    }

    pub fn commutes_with(&self, other: &PauliProduct) -> bool {
        !self.vec.inner(&other.vec)
    }

    pub fn qubitwise_commutes_with(&self, other: &PauliProduct) -> bool {
        // A qubit conflicts when both axes are non-identity and differ.
        let (ax, az) = (self.vec.x.words(), self.vec.z.words());
        let (bx, bz) = (other.vec.x.words(), other.vec.z.words());
        (0..ax.len()).all(|w| {
            let a_on = ax[w] | az[w];
            let b_on = bx[w] | bz[w];
            let differ = (ax[w] ^ bx[w]) | (az[w] ^ bz[w]);
            a_on & b_on & differ == 0
        })
    }

    /// Operator product `self · other` with exact phase.
    pub fn mul(&self, other: &PauliProduct) -> PauliProduct {
        debug_assert_eq!(self.n_qubits(), other.n_qubits());
        let mut plus = 0u32;
        let mut minus = 0u32;
        let (ax, az) = (self.vec.x.words(), self.vec.z.words());
        let (bx, bz) = (other.vec.x.words(), other.vec.z.words());
        for w in 0..ax.len() {
            let (a_x, a_y, a_z) = (ax[w] & !az[w], ax[w] & az[w], !ax[w] & az[w]);
            let (b_x, b_y, b_z) = (bx[w] & !bz[w], bx[w] & bz[w], !bx[w] & bz[w]);
            // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
            plus += ((a_x & b_y) | (a_y & b_z) | (a_z & b_x)).count_ones();
            minus += ((a_y & b_x) | (a_z & b_y) | (a_x & b_z)).count_ones();
        }
        let phase = (self.phase_exp as u32 + other.phase_exp as u32 + plus + 3 * minus) % 4;
        PauliProduct { vec: self.vec.xor(&other.vec), phase_exp: phase as u8 }
    }

    /// Tokens in the text format: `X0 Y3`, or `I` for the identity axes.
    pub fn label(&self) -> String {
        let tokens: Vec<String> =
            self.support().into_iter().map(|q| format!("{}{}", self.axis(q).letter(), q)).collect();
        if tokens.is_empty() {
            "I".to_string()
        } else {
            tokens.join(" ")
        }
    }

    /// Parses a phase-free label such as `X0 Z2` or `I` on `n_qubits` qubits.
    pub fn parse_label(label: &str, n_qubits: usize) -> Result<Self> {
        let factors = parse_tokens(label).map_err(|message| Error::Parse { line: 0, message })?;
        for &(q, _) in &factors {
            if q >= n_qubits {
                return Err(Error::Parse { line: 0, message: format!("qubit index {q} >= n_qubits {n_qubits}") });
            }
        }
        Self::from_sparse(n_qubits, &factors).map_err(|e| Error::Parse { line: 0, message: e.to_string() })
    }
}

/// Splits a term into `(qubit, axis)` factors. `I` alone means no factors.
pub(crate) fn parse_tokens(term: &str) -> std::result::Result<Vec<(usize, PauliAxis)>, String> {
    let tokens: Vec<&str> = term.split_whitespace().collect();
    if tokens.is_empty() {
        return Err("missing term".into());
    }
    if tokens.len() == 1 && tokens[0] == "I" {
        return Ok(Vec::new());
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(tokens.len());
    for tok in tokens {
        let mut chars = tok.chars();
        let letter = chars.next().ok_or_else(|| "empty token".to_string())?;
        let axis = match letter {
            'X' => PauliAxis::X,
            'Y' => PauliAxis::Y,
            'Z' => PauliAxis::Z,
            _ => return Err(format!("malformed token `{tok}`")),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("malformed token `{tok}`"));
        }
        let q: usize = rest.parse().map_err(|_| format!("malformed token `{tok}`"))?;
        if !seen.insert(q) {
            return Err(format!("qubit {q} appears twice"));
        }
        out.push((q, axis));
    }
    Ok(out)
}

impl fmt::Display for PauliProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = ["", "i*", "-", "-i*"][self.phase_exp as usize];
        write!(f, "{prefix}{}", self.label())
    }
}

impl fmt::Debug for PauliProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliProduct[{}]({self})", self.n_qubits())
    }
}

/// Parses a dense label such as `XIZY` (qubit 0 first).
impl FromStr for PauliProduct {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let axes = s
            .chars()
            .map(|c| {
                PauliAxis::from_letter(c)
                    .ok_or_else(|| Error::Parse { line: 0, message: format!("bad axis letter `{c}`") })
            })
            .collect::<Result<Vec<_>>>()?;
        if axes.is_empty() {
            return Err(Error::Parse { line: 0, message: "empty Pauli string".into() });
        }
        Ok(PauliProduct::from_axes(&axes))
    }
}

pub fn multiply(p: &PauliProduct, q: &PauliProduct) -> Result<PauliProduct> {
    check_sizes(p.n_qubits(), q.n_qubits())?;
    Ok(p.mul(q))
}

pub fn to_symplectic(p: &PauliProduct) -> SymplecticVector {
    p.to_symplectic()
}

pub fn from_symplectic(v: &SymplecticVector) -> PauliProduct {
    PauliProduct::from_symplectic(v)
}

/// Full commutation, `[p, q] = 0`.
pub fn commutes(p: &PauliProduct, q: &PauliProduct) -> Result<bool> {
    check_sizes(p.n_qubits(), q.n_qubits())?;
    Ok(p.commutes_with(q))
}

/// Qubit-wise commutation: on every qubit the axes agree or one is `I`.
pub fn qwc(p: &PauliProduct, q: &PauliProduct) -> Result<bool> {
    check_sizes(p.n_qubits(), q.n_qubits())?;
    Ok(p.qubitwise_commutes_with(q))
}

/// Every `n`-qubit phase-free Pauli product, qubit 0 varying fastest.
pub fn all_products(n_qubits: usize) -> impl Iterator<Item = PauliProduct> {
    let total = 1usize << (2 * n_qubits);
    (0..total).map(move |mut code| {
        let axes: Vec<PauliAxis> = (0..n_qubits)
            .map(|_| {
                let a = PauliAxis::ALL[code & 3];
                code >>= 2;
                a
            })
            .collect();
        PauliProduct::from_axes(&axes)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliProduct {
        s.parse().unwrap()
    }

    #[test]
    fn xy_is_i_z() {
        let r = multiply(&p("X"), &p("Y")).unwrap();
        assert_eq!(r.axes(), vec![PauliAxis::Z]);
        assert_eq!(r.phase_exp(), 1);
        let r = multiply(&p("Y"), &p("X")).unwrap();
        assert_eq!(r.phase_exp(), 3);
    }

    #[test]
    fn identity_is_neutral() {
        let a = p("XYZI").with_phase(2);
        assert_eq!(multiply(&a, &PauliProduct::identity(4)).unwrap(), a);
    }

    #[test]
    fn mapping_example() {
        let v = to_symplectic(&p("XYZI"));
        assert_eq!(v.to_bools(), vec![true, true, false, false, false, true, true, false]);
        assert!(to_symplectic(&PauliProduct::identity(2)).is_zero());
    }

    #[test]
    fn mismatch_errors() {
        assert!(matches!(multiply(&p("X"), &p("XX")), Err(Error::QubitMismatch { .. })));
        assert!(commutes(&p("X"), &p("XX")).is_err());
        assert!(qwc(&p("X"), &p("XX")).is_err());
        assert!(symplectic_inner(&p("X").to_symplectic(), &p("XX").to_symplectic()).is_err());
    }

    #[test]
    fn qwc_vs_full() {
        assert!(commutes(&p("XX"), &p("XI")).unwrap());
        assert!(qwc(&p("XX"), &p("XI")).unwrap());
        assert!(commutes(&p("XX"), &p("YY")).unwrap());
        assert!(!qwc(&p("XX"), &p("YY")).unwrap());
        assert!(!commutes(&p("X"), &p("Z")).unwrap());
    }

    #[test]
    fn labels_round_trip() {
        let a = PauliProduct::parse_label("X0 Z3", 5).unwrap();
        assert_eq!(a.label(), "X0 Z3");
        assert_eq!(PauliProduct::parse_label("I", 2).unwrap(), PauliProduct::identity(2));
        assert!(PauliProduct::parse_label("X0 X0", 2).is_err());
        assert!(PauliProduct::parse_label("X2", 2).is_err());
        assert!(PauliProduct::parse_label("Q1", 2).is_err());
    }

    #[test]
    fn weight_across_words() {
        let mut axes = vec![PauliAxis::I; 70];
        axes[1] = PauliAxis::X;
        axes[65] = PauliAxis::Z;
        axes[69] = PauliAxis::Y;
        assert_eq!(PauliProduct::from_axes(&axes).weight(), 3);
        assert_eq!(PauliProduct::from_axes(&axes).support(), vec![1, 65, 69]);
    }
}
