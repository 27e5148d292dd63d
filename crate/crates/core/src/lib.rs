//! Determinant invariants of order `2^(n/2)` for even-n qubit pure states.
//!
//! The amplitudes of an n-qubit state can be laid out as a square
//! `2^(n/2) × 2^(n/2)` matrix by choosing which half of the qubits indexes
//! rows. Up to transposition there are `C(n-1, n/2-1)` such choices, and the
//! determinant of each one is covariant under local invertible operators:
//!
//! ```text
//! D(A₁⊗…⊗Aₙ ψ) = D(ψ) · (det A₁ ⋯ det Aₙ)^(2^((n-2)/2))
//! ```
//!
//! Whether each determinant vanishes is therefore a SLOCC-invariant
//! property, and the zero pattern splits the state space into families.
//!
//! Modules, bottom up:
//! - [`scalar`]: exact Gaussian rationals and `Complex64`
//! - [`qstate`]: states, local operators, qubit permutations
//! - [`partition`]: the row/column splits and their permutations
//! - [`detengine`]: coefficient matrices, Bareiss and LU determinants
//! - [`invariants`]: invariant vectors, signatures, the equation check
//! - [`completeness`]: action of transpositions `(1,i)` on the invariants
//! - [`stateio`], [`report`]: file format and serializable reports

pub mod completeness;
pub mod detengine;
pub mod error;
pub mod invariants;
pub mod partition;
pub mod qstate;
pub mod report;
pub mod scalar;
pub mod stateio;

pub use completeness::{
    completeness_table, completeness_table_with, transposition_action, ActionRow, ActionTable,
    IndexAction,
};
pub use detengine::{build_matrix, det_exact, det_float, CoeffMatrix, DetValue, ZeroTest};
pub use error::{Error, Result};
pub use invariants::{
    all_invariants, inequivalence_check, signature, verify_slocc_equation, EvalConfig,
    InvariantVector, Signature, SloccCheckReport, Verdict,
};
pub use partition::{
    enumerate_partitions, partition_count, sigma_of_partition, BitPartition, SigmaPermutation,
};
pub use qstate::{
    apply_local_ops, canonical_state, make_basis_state, permute_qubits, random_invertible_chain,
    random_state, CanonicalKind, LocalOperator, OperatorChain, PureState, QubitPermutation,
};
pub use scalar::{GaussRational, Mode, Scalar};

pub use num_complex::Complex64;
