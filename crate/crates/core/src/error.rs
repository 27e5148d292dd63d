use thiserror::Error;

/// Errors raised by state construction, evaluation and table generation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("qubit count {0} is odd; only even n is supported")]
    OddQubitCount(usize),
    #[error("qubit count {n} outside supported range 2..={max}")]
    QubitCountOutOfRange { n: usize, max: usize },
    #[error("basis index {index} out of range for {n} qubits")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("expected {expected} amplitudes, found {found}")]
    AmplitudeCount { expected: usize, found: usize },
    #[error("size mismatch: expected {expected} qubits, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("Dicke excitation number {k} out of range 1..={} for {n} qubits", .n - 1)]
    DickeOutOfRange { n: usize, k: usize },
    #[error("the chi state is defined for 6 qubits, not {0}")]
    ChiRequiresSix(usize),
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("invalid bit split: {0}")]
    InvalidBitSplit(String),
    #[error("local operator on qubit {qubit} is not invertible")]
    NonInvertible { qubit: usize },
    #[error("matrix contains a non-finite entry")]
    NonFinite,
    #[error("rejection sampling exhausted {0} draws without an invertible operator")]
    RejectionExhausted(usize),
    #[error(
        "permutation {perm}: invariant {j} still matches several targets after {probes} probes"
    )]
    AmbiguousMatch {
        perm: String,
        j: usize,
        probes: usize,
    },
    #[error("permutation {perm}: invariant {j} matches no invariant of the original state")]
    NoMatch { perm: String, j: usize },
    #[error("permutation {perm} does not act as a bijection on the invariants")]
    NotBijective { perm: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("state file uses decimal values; exact mode needs integers or rationals")]
    DecimalInExactMode,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
