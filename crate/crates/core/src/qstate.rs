//! Even-n qubit pure states, local operators and qubit permutations.
//!
//! Amplitude index `i` is read as the bit string `i₁i₂…iₙ` with qubit 1 the
//! most significant bit. States are not normalized unless a float-mode
//! canonical constructor asks for it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::detengine::ZeroTest;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest qubit count a state may be built with at all. Evaluation limits
/// are tighter; see [`crate::invariants::EvalConfig`].
pub const HARD_MAX_QUBITS: usize = 24;

/// Bounded number of redraws for a random invertible operator.
pub const MAX_REJECTIONS: usize = 1000;

/// Rejects odd `n` and `n` outside `2..=max`.
pub fn check_qubit_count(n: usize, max: usize) -> Result<()> {
    if n % 2 == 1 {
        return Err(Error::OddQubitCount(n));
    }
    if n < 2 || n > max {
        return Err(Error::QubitCountOutOfRange { n, max });
    }
    Ok(())
}

/// Value of qubit `pos` (1-based) in basis index `index` of an `n`-qubit register.
#[inline]
pub fn bit_at(index: usize, pos: usize, n: usize) -> usize {
    (index >> (n - pos)) & 1
}

#[derive(Debug, Clone, PartialEq)]
pub struct PureState<S> {
    n: usize,
    amps: Vec<S>,
}

impl<S: Scalar> PureState<S> {
    pub fn new(n: usize, amps: Vec<S>) -> Result<Self> {
        check_qubit_count(n, HARD_MAX_QUBITS)?;
        if amps.len() != 1 << n {
            return Err(Error::AmplitudeCount {
                expected: 1 << n,
                found: amps.len(),
            });
        }
        Ok(PureState { n, amps })
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_qubit_count(n, HARD_MAX_QUBITS)?;
        Ok(PureState {
            n,
            amps: vec![S::zero(); 1 << n],
        })
    }

    /// Builds a state from `(index, amplitude)` pairs; later pairs overwrite.
    pub fn from_sparse(n: usize, entries: impl IntoIterator<Item = (usize, S)>) -> Result<Self> {
        let mut s = Self::zero(n)?;
        for (i, a) in entries {
            if i >= s.amps.len() {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            s.amps[i] = a;
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[S] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> &S {
        &self.amps[index]
    }

    pub fn into_amplitudes(self) -> Vec<S> {
        self.amps
    }

    pub fn nonzero_indices(&self) -> Vec<usize> {
        (0..self.amps.len())
            .filter(|&i| !self.amps[i].is_zero())
            .collect()
    }

    pub fn scale(&self, factor: &S) -> Self {
        PureState {
            n: self.n,
            amps: self
                .amps
                .iter()
                .map(|a| a.clone() * factor.clone())
                .collect(),
        }
    }

    /// `alpha·self + beta·other`.
    pub fn combine(&self, alpha: &S, other: &Self, beta: &S) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let amps = self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| alpha.clone() * a.clone() + beta.clone() * b.clone())
            .collect();
        Ok(PureState { n: self.n, amps })
    }
}

pub fn make_basis_state<S: Scalar>(n: usize, index: usize) -> Result<PureState<S>> {
    check_qubit_count(n, HARD_MAX_QUBITS)?;
    if index >= 1 << n {
        return Err(Error::IndexOutOfRange { index, n });
    }
    PureState::from_sparse(n, [(index, S::one())])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalKind {
    Ghz,
    W,
    Dicke(usize),
    Chi6,
}

impl std::str::FromStr for CanonicalKind {
    type Err = String;

    /// Accepts `ghz`, `w`, `dicke:k` and `chi6`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "ghz" => Ok(CanonicalKind::Ghz),
            "w" => Ok(CanonicalKind::W),
            "chi6" | "chi" => Ok(CanonicalKind::Chi6),
            other => match other.strip_prefix("dicke:") {
                Some(k) => k
                    .parse()
                    .map(CanonicalKind::Dicke)
                    .map_err(|_| format!("bad Dicke excitation number in {s:?}")),
                None => Err(format!(
                    "unknown state kind {s:?}; expected ghz, w, dicke:k or chi6"
                )),
            },
        }
    }
}

/// Basis indices (and signs) of the six-qubit witness state.
pub const CHI6_TERMS: [(usize, i64); 8] = [
    (0, 1),
    (5, 1),
    (18, 1),
    (23, 1),
    (40, 1),
    (45, 1),
    (58, 1),
    (63, -1),
];

/// GHZ, W, Dicke and chi states. Exact mode leaves them unnormalized.
pub fn canonical_state<S: Scalar>(kind: CanonicalKind, n: usize) -> Result<PureState<S>> {
    check_qubit_count(n, HARD_MAX_QUBITS)?;
    match kind {
        CanonicalKind::Ghz => {
            let a = S::norm_factor(2);
            PureState::from_sparse(n, [(0, a.clone()), ((1 << n) - 1, a)])
        }
        CanonicalKind::W => canonical_state(CanonicalKind::Dicke(1), n),
        CanonicalKind::Dicke(k) => {
            if k < 1 || k >= n {
                return Err(Error::DickeOutOfRange { n, k });
            }
            let terms: Vec<usize> = (0..1usize << n)
                .filter(|i| i.count_ones() as usize == k)
                .collect();
            let a = S::norm_factor(terms.len() as u64);
            PureState::from_sparse(n, terms.into_iter().map(|i| (i, a.clone())))
        }
        CanonicalKind::Chi6 => {
            if n != 6 {
                return Err(Error::ChiRequiresSix(n));
            }
            let a = S::norm_factor(8);
            PureState::from_sparse(
                n,
                CHI6_TERMS
                    .iter()
                    .map(|&(i, sign)| (i, a.clone() * S::from_ints(sign, 0))),
            )
        }
    }
}

/// A 2x2 operator `[[e00, e01], [e10, e11]]` acting on one qubit.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalOperator<S> {
    pub e: [S; 4],
}

impl<S: Scalar> LocalOperator<S> {
    pub fn new(e00: S, e01: S, e10: S, e11: S) -> Self {
        LocalOperator {
            e: [e00, e01, e10, e11],
        }
    }

    pub fn identity() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn det(&self) -> S {
        let [a, b, c, d] = &self.e;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &other.e;
        let m = |x: &S, y: &S, u: &S, v: &S| x.clone() * y.clone() + u.clone() * v.clone();
        Self::new(m(a, p, b, r), m(a, q, b, s), m(c, p, d, r), m(c, q, d, s))
    }
}

/// One local operator per qubit, `A₁ ⊗ … ⊗ Aₙ`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorChain<S> {
    ops: Vec<LocalOperator<S>>,
}

impl<S: Scalar> OperatorChain<S> {
    pub fn new(ops: Vec<LocalOperator<S>>) -> Self {
        OperatorChain { ops }
    }

    pub fn identity(n: usize) -> Self {
        OperatorChain {
            ops: vec![LocalOperator::identity(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn ops(&self) -> &[LocalOperator<S>] {
        &self.ops
    }

    pub fn determinants(&self) -> Vec<S> {
        self.ops.iter().map(LocalOperator::det).collect()
    }

    /// `det(A₁)⋯det(Aₙ)`.
    pub fn det_product(&self) -> S {
        self.ops.iter().fold(S::one(), |acc, op| acc * op.det())
    }

    /// First qubit (1-based) whose operator fails the invertibility test.
    pub fn first_singular(&self, zero: &ZeroTest) -> Option<usize> {
        self.ops
            .iter()
            .position(|op| !S::is_invertible(&op.e, &op.det(), zero))
            .map(|k| k + 1)
    }

    pub fn is_invertible(&self, zero: &ZeroTest) -> bool {
        self.first_singular(zero).is_none()
    }

    /// Per-qubit product `self_k · other_k`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(OperatorChain {
            ops: self
                .ops
                .iter()
                .zip(&other.ops)
                .map(|(a, b)| a.compose(b))
                .collect(),
        })
    }
}

/// Applies `A₁ ⊗ … ⊗ Aₙ` as n single-qubit contractions.
pub fn apply_local_ops<S: Scalar>(
    state: &PureState<S>,
    ops: &OperatorChain<S>,
) -> Result<PureState<S>> {
    let n = state.n;
    if ops.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: ops.len(),
        });
    }
    let mut amps = state.amps.clone();
    for (k, op) in ops.ops.iter().enumerate() {
        let mask = 1usize << (n - 1 - k);
        let [e00, e01, e10, e11] = &op.e;
        for i in 0..amps.len() {
            if i & mask != 0 {
                continue;
            }
            let x0 = amps[i].clone();
            let x1 = amps[i | mask].clone();
            amps[i] = e00.clone() * x0.clone() + e01.clone() * x1.clone();
            amps[i | mask] = e10.clone() * x0 + e11.clone() * x1;
        }
    }
    Ok(PureState { n, amps })
}

/// Bijection `π` on qubit positions `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QubitPermutation {
    // images[k - 1] = π(k)
    images: Vec<usize>,
}

impl QubitPermutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(QubitPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        QubitPermutation {
            images: (1..=n).collect(),
        }
    }

    /// The transposition `(a,b)`; `(a,a)` is the identity.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::NotAPermutation(n));
        }
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// Product of transpositions in operator notation: the rightmost acts first.
    pub fn from_product(n: usize, transpositions: &[(usize, usize)]) -> Result<Self> {
        transpositions
            .iter()
            .try_fold(Self::identity(n), |acc, &(a, b)| {
                Ok(acc.compose(&Self::transposition(n, a, b)?))
            })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        QubitPermutation {
            images: other.images.iter().map(|&k| self.apply(k)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        QubitPermutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Image of a set of positions, sorted.
    pub fn apply_to_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&k| self.apply(k)).collect();
        out.sort_unstable();
        out
    }
}

/// Moves the content of qubit `k` to position `π(k)`.
pub fn permute_qubits<S: Scalar>(
    state: &PureState<S>,
    pi: &QubitPermutation,
) -> Result<PureState<S>> {
    let n = state.n;
    if pi.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: pi.n(),
        });
    }
    let mut amps = vec![S::zero(); state.amps.len()];
    for (i, a) in state.amps.iter().enumerate() {
        let mut j = 0usize;
        for k in 1..=n {
            if bit_at(i, k, n) == 1 {
                j |= 1 << (n - pi.apply(k));
            }
        }
        amps[j] = a.clone();
    }
    Ok(PureState { n, amps })
}

const STATE_STREAM: u64 = 0;
const CHAIN_STREAM: u64 = 1;

fn seeded(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Draws a state from a caller-supplied generator.
pub fn random_state_with<S: Scalar, R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<PureState<S>> {
    check_qubit_count(n, HARD_MAX_QUBITS)?;
    let amps = (0..1usize << n).map(|_| S::sample(rng)).collect();
    Ok(PureState { n, amps })
}

/// Seeded random state: Gaussian integers in `[-9,9]²` (exact) or
/// uniform entries of `[-1,1)²` (float).
pub fn random_state<S: Scalar>(n: usize, seed: u64) -> Result<PureState<S>> {
    random_state_with(n, &mut seeded(seed, STATE_STREAM))
}

pub fn random_invertible_chain_with<S: Scalar, R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<OperatorChain<S>> {
    let mut ops = Vec::with_capacity(n);
    for _ in 0..n {
        let mut accepted = None;
        for _ in 0..MAX_REJECTIONS {
            let op = LocalOperator::new(
                S::sample(rng),
                S::sample(rng),
                S::sample(rng),
                S::sample(rng),
            );
            if S::accept_random_det(&op.det()) {
                accepted = Some(op);
                break;
            }
        }
        ops.push(accepted.ok_or(Error::RejectionExhausted(MAX_REJECTIONS))?);
    }
    Ok(OperatorChain { ops })
}

/// Seeded random chain; float operators are redrawn until `|det| ≥ 0.1`.
pub fn random_invertible_chain<S: Scalar>(n: usize, seed: u64) -> Result<OperatorChain<S>> {
    random_invertible_chain_with(n, &mut seeded(seed, CHAIN_STREAM))
}
