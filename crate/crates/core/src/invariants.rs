//! The full invariant vector, zero-pattern signatures and the SLOCC
//! determinant equation check.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::detengine::{build_matrix, DetValue, ZeroTest};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, BitPartition};
use crate::qstate::{apply_local_ops, check_qubit_count, OperatorChain, PureState};
use crate::scalar::{pow, Mode, Scalar};

pub const DEFAULT_MAX_QUBITS_EXACT: usize = 8;
pub const DEFAULT_MAX_QUBITS_FLOAT: usize = 12;
/// Relative tolerance for float-mode equation checks.
pub const SLOCC_FLOAT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EvalConfig {
    pub zero: ZeroTest,
    /// Overrides the per-mode qubit ceiling.
    pub max_n: Option<usize>,
}

impl EvalConfig {
    pub fn max_qubits(&self, mode: Mode) -> usize {
        self.max_n.unwrap_or(match mode {
            Mode::Exact => DEFAULT_MAX_QUBITS_EXACT,
            Mode::Float => DEFAULT_MAX_QUBITS_FLOAT,
        })
    }

    pub fn check_n(&self, n: usize, mode: Mode) -> Result<()> {
        check_qubit_count(n, self.max_qubits(mode))
    }
}

/// `D_n^1 … D_n^c` in canonical partition order.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantVector<S> {
    pub n: usize,
    pub values: Vec<DetValue<S>>,
}

impl<S: Scalar> InvariantVector<S> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based access matching the `D_n^i` numbering.
    pub fn get(&self, i: usize) -> &DetValue<S> {
        &self.values[i - 1]
    }

    pub fn signature(&self) -> Signature {
        Signature::from_delta(self.values.iter().map(|v| !v.zero_verdict).collect())
    }
}

fn eval_partition<S: Scalar>(
    state: &PureState<S>,
    p: &BitPartition,
    cfg: &EvalConfig,
) -> Result<DetValue<S>> {
    S::determinant(&build_matrix(state, p)?, &cfg.zero)
}

#[cfg(feature = "parallel")]
fn eval_all<S: Scalar>(
    state: &PureState<S>,
    parts: &[BitPartition],
    cfg: &EvalConfig,
) -> Result<Vec<DetValue<S>>> {
    use rayon::prelude::*;
    parts
        .par_iter()
        .map(|p| eval_partition(state, p, cfg))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn eval_all<S: Scalar>(
    state: &PureState<S>,
    parts: &[BitPartition],
    cfg: &EvalConfig,
) -> Result<Vec<DetValue<S>>> {
    parts
        .iter()
        .map(|p| eval_partition(state, p, cfg))
        .collect()
}

pub fn all_invariants<S: Scalar>(
    state: &PureState<S>,
    cfg: &EvalConfig,
) -> Result<InvariantVector<S>> {
    cfg.check_n(state.n(), S::MODE)?;
    let parts = enumerate_partitions(state.n())?;
    Ok(InvariantVector {
        n: state.n(),
        values: eval_all(state, &parts, cfg)?,
    })
}

/// Zero pattern `δ₁…δ_c` of the invariants; `family_id` packs `δ₁` as bit 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub delta: Vec<bool>,
    pub family_id: BigUint,
}

impl Signature {
    pub fn from_delta(delta: Vec<bool>) -> Self {
        let mut family_id = BigUint::zero();
        for (i, &d) in delta.iter().enumerate() {
            if d {
                family_id.set_bit(i as u64, true);
            }
        }
        Signature { delta, family_id }
    }

    /// `δ₁` first, e.g. `0000000001`.
    pub fn delta_string(&self) -> String {
        self.delta
            .iter()
            .map(|&d| if d { '1' } else { '0' })
            .collect()
    }

    /// 1-based indices where the two signatures differ.
    pub fn differences(&self, other: &Signature) -> Vec<usize> {
        self.delta
            .iter()
            .zip(&other.delta)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} family={}", self.delta_string(), self.family_id)
    }
}

pub fn signature<S: Scalar>(state: &PureState<S>, cfg: &EvalConfig) -> Result<Signature> {
    Ok(all_invariants(state, cfg)?.signature())
}

/// `2^((n-2)/2)`, the power on the product of operator determinants.
pub fn slocc_exponent(n: usize) -> u64 {
    1u64 << ((n - 2) / 2)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SloccEntry<S> {
    pub index: usize,
    /// `σ det M(a,n)` for the transformed state.
    pub lhs: DetValue<S>,
    /// `σ det M(b,n) · (∏ det A_i)^exponent`.
    pub rhs: S,
    pub pass: bool,
    /// `None` in exact mode and when both sides are numerically zero.
    pub rel_err: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SloccCheckReport<S> {
    pub n: usize,
    pub exponent: u64,
    pub det_product: S,
    pub entries: Vec<SloccEntry<S>>,
}

impl<S: Scalar> SloccCheckReport<S> {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn max_rel_err(&self) -> Option<f64> {
        self.entries
            .iter()
            .filter_map(|e| e.rel_err)
            .fold(None, |m, r| Some(m.map_or(r, |m: f64| m.max(r))))
    }
}

/// Transforms `psi` by `ops` and checks every invariant against the
/// right-hand side of the determinant equation.
pub fn verify_slocc_equation<S: Scalar>(
    psi: &PureState<S>,
    ops: &OperatorChain<S>,
    cfg: &EvalConfig,
) -> Result<SloccCheckReport<S>> {
    if ops.len() != psi.n() {
        return Err(Error::SizeMismatch {
            expected: psi.n(),
            found: ops.len(),
        });
    }
    if let Some(qubit) = ops.first_singular(&cfg.zero) {
        return Err(Error::NonInvertible { qubit });
    }
    let n = psi.n();
    let exponent = slocc_exponent(n);
    let det_product = ops.det_product();
    let factor = pow(&det_product, exponent);

    let transformed = apply_local_ops(psi, ops)?;
    let before = all_invariants(psi, cfg)?;
    let after = all_invariants(&transformed, cfg)?;

    let entries = after
        .values
        .into_iter()
        .zip(before.values)
        .enumerate()
        .map(|(i, (lhs, b))| {
            let rhs = b.value * factor.clone();
            let (pass, rel_err) = S::compare(&lhs, &rhs, SLOCC_FLOAT_TOLERANCE);
            SloccEntry {
                index: i + 1,
                lhs,
                rhs,
                pass,
                rel_err,
            }
        })
        .collect();
    Ok(SloccCheckReport {
        n,
        exponent,
        det_product,
        entries,
    })
}

/// Outcome of comparing two zero patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Some invariant vanishes for one state only; lists those indices.
    Inequivalent { witnesses: Vec<usize> },
    /// Same family. This does not imply SLOCC equivalence.
    Undecided,
}

impl Verdict {
    pub fn is_inequivalent(&self) -> bool {
        matches!(self, Verdict::Inequivalent { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Inequivalent { .. } => f.write_str("INEQUIVALENT"),
            Verdict::Undecided => f.write_str("UNDECIDED"),
        }
    }
}

pub fn compare_signatures(a: &Signature, b: &Signature) -> Verdict {
    let witnesses = a.differences(b);
    if witnesses.is_empty() {
        Verdict::Undecided
    } else {
        Verdict::Inequivalent { witnesses }
    }
}

pub fn inequivalence_check<S: Scalar>(
    a: &PureState<S>,
    b: &PureState<S>,
    cfg: &EvalConfig,
) -> Result<Verdict> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(compare_signatures(&signature(a, cfg)?, &signature(b, cfg)?))
}
