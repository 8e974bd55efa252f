//! Measurement grouping for qubit Hamiltonians.
//!
//! Terms of `H = Σ c_k P_k` are grouped into fully commuting sets by clique
//! covering their compatibility graph. Each group is then rotated by a
//! Clifford unitary `U` into a qubit-wise commuting group with the same
//! coefficients up to sign, so every group can be read out with one
//! single-qubit measurement setting after applying `U`'s circuit.
//!
//! ```
//! use fcmeasure::{build_graph, cover, pipeline, Hamiltonian64, Method, Relation};
//!
//! let h = Hamiltonian64::parse("0.7 X0 X1\n-0.3 Z0 Z1\n").unwrap();
//! let graph = build_graph(&h, Relation::Fc);
//! let groups = cover(&graph, Method::Dsatur, 64).unwrap();
//! assert_eq!(groups.len(), 1);
//! let plan = pipeline(&h, &groups).unwrap();
//! let rotated: Vec<String> = plan.groups[0].transformed.terms().iter().map(|t| t.pauli.label()).collect();
//! assert_eq!(rotated, ["Z0", "X1"]);
//! ```

pub mod bits;
pub mod circuit;
pub mod cover;
pub mod error;
pub mod gf2;
pub mod hamiltonian;
pub mod oracle;
pub mod pauli;
pub mod plan;
pub mod scalar;
pub mod transform;

pub use circuit::{synthesize, CliffordCircuit, Gate, GateCounts, PauliExponent, Synthesis};
pub use cover::{
    build_graph, build_graph_parallel, cover, cover_exact, cover_greedy, cover_rlf, validate_cover, CliqueCover,
    CompatGraph, CoverStats, GreedyOrder, Method, Relation, DEFAULT_EXACT_LIMIT,
};
pub use error::{Error, Result};
pub use hamiltonian::{parse_hamiltonian, serialize_hamiltonian, Hamiltonian, Term};
pub use oracle::{verify_plan, DenseOperator, VerifyOptions, VerifyReport};
pub use pauli::{PauliAxis, PauliProduct, SymplecticVector};
pub use plan::{pipeline, MeasurementPlan, PlanGroup, PlanRecord};
pub use scalar::{Coefficient, OracleScalar};
pub use transform::{
    build_unitary_symbolic, find_basis, find_sigma, find_tau, transform_group, SigmaAssignment, TauSigmaBasis,
    TransformedGroup,
};

pub type Hamiltonian64 = Hamiltonian<f64>;
pub type Hamiltonian32 = Hamiltonian<f32>;
pub type MeasurementPlan64 = MeasurementPlan<f64>;
pub type TransformedGroup64 = TransformedGroup<f64>;
pub type DenseOperator64 = DenseOperator<f64>;
