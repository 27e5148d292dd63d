//! The `slocc-state v1` text format.
//!
//! ```text
//! # slocc-state v1
//! n 4
//! 0 1 0
//! 15 1/2 -3
//! ```
//!
//! After the header and the `n` line every line is `<index> <re> <im>`.
//! Numbers are integers, rationals `p/q` or decimals. Omitted indices are
//! zero. Blank lines and further `#` lines are ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qstate::{check_qubit_count, PureState, HARD_MAX_QUBITS};
use crate::scalar::{rational_to_f64, GaussRational, Scalar};

pub const HEADER: &str = "# slocc-state v1";

#[derive(Debug, Clone, PartialEq)]
pub enum Number {
    Rational(BigRational),
    Decimal(f64),
}

impl Number {
    fn parse(tok: &str) -> Option<Number> {
        if let Ok(i) = BigInt::from_str(tok) {
            return Some(Number::Rational(BigRational::from_integer(i)));
        }
        if let Some((p, q)) = tok.split_once('/') {
            let p = BigInt::from_str(p).ok()?;
            let q = BigInt::from_str(q).ok()?;
            if q.is_zero() {
                return None;
            }
            return Some(Number::Rational(BigRational::new(p, q)));
        }
        // reject inf/nan spellings that f64::from_str would accept
        let numeric = tok
            .chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '+' | '-' | '.' | 'e' | 'E'));
        if !numeric {
            return None;
        }
        f64::from_str(tok)
            .ok()
            .filter(|v| v.is_finite())
            .map(Number::Decimal)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Number::Rational(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Number::Rational(q) => rational_to_f64(q),
            Number::Decimal(v) => *v,
        }
    }
}

/// A parsed state file, kept sparse until converted to a mode.
#[derive(Debug, Clone, PartialEq)]
pub struct StateFile {
    pub n: usize,
    pub entries: Vec<(usize, Number, Number)>,
}

impl StateFile {
    /// True when every number is an integer or rational.
    pub fn is_exact(&self) -> bool {
        self.entries
            .iter()
            .all(|(_, re, im)| re.is_exact() && im.is_exact())
    }

    pub fn to_exact(&self) -> Result<PureState<GaussRational>> {
        let entries = self
            .entries
            .iter()
            .map(|(i, re, im)| match (re, im) {
                (Number::Rational(re), Number::Rational(im)) => {
                    Ok((*i, GaussRational::new(re.clone(), im.clone())))
                }
                _ => Err(Error::DecimalInExactMode),
            })
            .collect::<Result<Vec<_>>>()?;
        PureState::from_sparse(self.n, entries)
    }

    pub fn to_float(&self) -> Result<PureState<Complex64>> {
        PureState::from_sparse(
            self.n,
            self.entries
                .iter()
                .map(|(i, re, im)| (*i, Complex64::new(re.to_f64(), im.to_f64()))),
        )
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses a state file. `max_n` bounds the declared qubit count.
pub fn parse_state(text: &str, max_n: usize) -> Result<StateFile> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l.trim()));
    match lines.next() {
        Some((_, HEADER)) => {}
        Some((k, other)) => {
            return Err(parse_err(
                k,
                format!("expected {HEADER:?}, found {other:?}"),
            ))
        }
        None => return Err(parse_err(1, "empty input")),
    }
    let mut body = lines.filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (k, n_line) = body
        .next()
        .ok_or_else(|| parse_err(2, "missing `n` line"))?;
    let n: usize = match n_line.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", v] => v
            .parse()
            .map_err(|_| parse_err(k, format!("bad qubit count {v:?}")))?,
        _ => {
            return Err(parse_err(
                k,
                format!("expected `n <even integer>`, found {n_line:?}"),
            ))
        }
    };
    check_qubit_count(n, max_n.min(HARD_MAX_QUBITS))?;

    let dim = 1usize << n;
    let mut seen = std::collections::HashSet::new();
    let mut entries = Vec::new();
    for (k, line) in body {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [idx, re, im] = toks.as_slice() else {
            return Err(parse_err(
                k,
                format!("expected `<index> <re> <im>`, found {line:?}"),
            ));
        };
        let index: usize = idx
            .parse()
            .map_err(|_| parse_err(k, format!("bad index {idx:?}")))?;
        if index >= dim {
            return Err(parse_err(
                k,
                format!("index {index} out of range for n={n}"),
            ));
        }
        if !seen.insert(index) {
            return Err(parse_err(k, format!("duplicate index {index}")));
        }
        let re = Number::parse(re).ok_or_else(|| parse_err(k, format!("bad number {re:?}")))?;
        let im = Number::parse(im).ok_or_else(|| parse_err(k, format!("bad number {im:?}")))?;
        entries.push((index, re, im));
    }
    Ok(StateFile { n, entries })
}

/// Writes the nonzero amplitudes of `state` in ascending index order.
pub fn write_state<S: Scalar>(state: &PureState<S>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{HEADER}");
    let _ = writeln!(out, "n {}", state.n());
    for i in state.nonzero_indices() {
        let a = state.amplitude(i);
        let _ = writeln!(out, "{} {} {}", i, a.re_string(), a.im_string());
    }
    out
}
