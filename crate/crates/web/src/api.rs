//! JSON-in, JSON-out operations behind the browser bindings. Kept free of
//! wasm types so they can be tested natively.

use serde::Serialize;
use serde_json::json;

use slocc_core::report::InvariantReport;
use slocc_core::stateio::{parse_state, HEADER};
use slocc_core::{
    all_invariants, build_matrix, canonical_state, completeness_table, enumerate_partitions,
    random_state, CanonicalKind, Complex64, EvalConfig, GaussRational, PureState, Scalar,
};

pub type ApiResult = Result<String, String>;

/// Largest n the page offers; exact evaluation beyond this is slow in a tab.
pub const MAX_DEMO_QUBITS: usize = 8;

enum State {
    Exact(PureState<GaussRational>),
    Float(PureState<Complex64>),
}

/// `source` is a kind name (`ghz`, `w`, `dicke:k`, `chi6`), `random:<seed>`,
/// or the full text of a state file.
fn load(source: &str, n: usize) -> Result<State, String> {
    let source = source.trim();
    if source.starts_with(HEADER) {
        let f = parse_state(source, MAX_DEMO_QUBITS).map_err(|e| e.to_string())?;
        return if f.is_exact() {
            f.to_exact().map(State::Exact).map_err(|e| e.to_string())
        } else {
            f.to_float().map(State::Float).map_err(|e| e.to_string())
        };
    }
    if n > MAX_DEMO_QUBITS {
        return Err(format!("the demo is limited to n <= {MAX_DEMO_QUBITS}"));
    }
    let state = match source.strip_prefix("random:") {
        Some(seed) => {
            let seed: u64 = seed.parse().map_err(|_| format!("bad seed {seed:?}"))?;
            random_state::<GaussRational>(n, seed)
        }
        None => canonical_state::<GaussRational>(source.parse::<CanonicalKind>()?, n),
    };
    state.map(State::Exact).map_err(|e| e.to_string())
}

fn to_json(v: &impl Serialize) -> ApiResult {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

pub fn enumerate(n: usize) -> ApiResult {
    if n > MAX_DEMO_QUBITS {
        return Err(format!("the demo is limited to n <= {MAX_DEMO_QUBITS}"));
    }
    let parts = enumerate_partitions(n).map_err(|e| e.to_string())?;
    let rows: Vec<_> = parts
        .iter()
        .map(|p| {
            json!({
                "index": p.index(),
                "sigma": p.sigma().cycle_string(),
                "row_bits": p.row_bits(),
                "col_bits": p.col_bits(),
            })
        })
        .collect();
    to_json(&rows)
}

fn matrix_json<S: Scalar>(state: &PureState<S>, index: usize) -> ApiResult {
    let parts = enumerate_partitions(state.n()).map_err(|e| e.to_string())?;
    let p = index
        .checked_sub(1)
        .and_then(|i| parts.get(i))
        .ok_or_else(|| format!("invariant index {index} out of range 1..={}", parts.len()))?;
    let m = build_matrix(state, p).map_err(|e| e.to_string())?;
    let det = S::determinant(&m, &EvalConfig::default().zero).map_err(|e| e.to_string())?;
    let cells: Vec<Vec<_>> = m
        .rows()
        .map(|row| {
            row.iter()
                .map(|z| {
                    let c = z.to_complex();
                    json!({ "re": c.re, "im": c.im, "label": label(z) })
                })
                .collect()
        })
        .collect();
    to_json(&json!({
        "n": state.n(),
        "index": index,
        "sigma": p.sigma().cycle_string(),
        "row_bits": m.row_bits(),
        "col_bits": m.col_bits(),
        "cells": cells,
        "det": label(&det.value),
        "zero": det.zero_verdict,
    }))
}

fn label<S: Scalar>(z: &S) -> String {
    let (re, im) = (z.re_string(), z.im_string());
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", _) => format!("{im}i"),
        _ if im.starts_with('-') => format!("{re}{im}i"),
        _ => format!("{re}+{im}i"),
    }
}

/// Coefficient matrix of invariant `index` for the given state, with its determinant.
pub fn coefficient_matrix(source: &str, n: usize, index: usize) -> ApiResult {
    match load(source, n)? {
        State::Exact(s) => matrix_json(&s, index),
        State::Float(s) => matrix_json(&s, index),
    }
}

/// All invariants, the signature and the family id.
pub fn invariants(source: &str, n: usize) -> ApiResult {
    let cfg = EvalConfig::default();
    let report = match load(source, n)? {
        State::Exact(s) => all_invariants(&s, &cfg).and_then(|v| InvariantReport::new(&v)),
        State::Float(s) => all_invariants(&s, &cfg).and_then(|v| InvariantReport::new(&v)),
    }
    .map_err(|e| e.to_string())?;
    to_json(&report)
}

/// Action of the transpositions `(1,i)` on the invariants.
pub fn completeness(n: usize, probes: usize, seed: u64) -> ApiResult {
    if n > MAX_DEMO_QUBITS {
        return Err(format!("the demo is limited to n <= {MAX_DEMO_QUBITS}"));
    }
    let t = completeness_table(n, probes, seed).map_err(|e| e.to_string())?;
    to_json(&t)
}
