//! Action of qubit permutations on the invariant set.
//!
//! For a permutation π the action is read off numerically: with random exact
//! probe states ψ, the invariants of `π·ψ` are matched against `±` the
//! invariants of `ψ`. A match that survives every probe is an identity of
//! polynomials with overwhelming probability; a wrong match would require
//! every probe to land on the zero set of a nonzero polynomial.

use std::fmt::Write as _;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{all_invariants, EvalConfig, InvariantVector};
use crate::partition::partition_count;
use crate::qstate::{permute_qubits, random_state_with, PureState, QubitPermutation};
use crate::scalar::{GaussRational, Mode};

pub const DEFAULT_PROBES: usize = 3;
/// Probe count used when the default leaves a match ambiguous.
pub const ESCALATED_PROBES: usize = 8;

type Q = GaussRational;

/// Image of each invariant under a permutation: `D_j(π·ψ) = signs[j]·D_{targets[j]}(ψ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexAction {
    pub targets: Vec<usize>,
    pub signs: Vec<i8>,
}

impl IndexAction {
    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.targets.len() + 1];
        self.targets.iter().all(|&t| {
            let fresh = t >= 1 && t < seen.len() && !seen[t];
            if fresh {
                seen[t] = true;
            }
            fresh
        })
    }

    /// Action of `first` followed by `second` on the state, i.e. of the
    /// permutation `second ∘ first`.
    pub fn then(first: &IndexAction, second: &IndexAction) -> IndexAction {
        let targets = second
            .targets
            .iter()
            .map(|&m| first.targets[m - 1])
            .collect();
        let signs = second
            .targets
            .iter()
            .zip(&second.signs)
            .map(|(&m, &s)| s * first.signs[m - 1])
            .collect();
        IndexAction { targets, signs }
    }
}

/// One row of the table: the action of the transposition `(1,i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActionRow {
    pub i: usize,
    pub targets: Vec<usize>,
    pub signs: Vec<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActionTable {
    pub n: usize,
    /// Probe states generated for the table.
    pub probes: usize,
    pub rows: Vec<ActionRow>,
}

/// Random exact probe states and their invariants, drawn from one seeded stream.
pub struct ProbeSet {
    n: usize,
    rng: ChaCha8Rng,
    states: Vec<PureState<Q>>,
    invariants: Vec<InvariantVector<Q>>,
    cfg: EvalConfig,
}

impl ProbeSet {
    pub fn new(n: usize, probes: usize, seed: u64, cfg: &EvalConfig) -> Result<Self> {
        cfg.check_n(n, Mode::Exact)?;
        let mut set = ProbeSet {
            n,
            rng: ChaCha8Rng::seed_from_u64(seed),
            states: Vec::new(),
            invariants: Vec::new(),
            cfg: *cfg,
        };
        set.extend_to(probes.max(1))?;
        Ok(set)
    }

    /// Draws further probes; earlier probes are unchanged.
    pub fn extend_to(&mut self, probes: usize) -> Result<()> {
        while self.states.len() < probes {
            let s = random_state_with::<Q, _>(self.n, &mut self.rng)?;
            self.invariants.push(all_invariants(&s, &self.cfg)?);
            self.states.push(s);
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Matches invariants of permuted probes against the originals.
    pub fn action(&self, pi: &QubitPermutation) -> Result<IndexAction> {
        let label = || format!("{:?}", pi.images());
        let c = self.invariants[0].len();
        let mut candidates: Vec<Vec<(usize, i8)>> =
            vec![(1..=c).flat_map(|m| [(m, 1i8), (m, -1i8)]).collect(); c];
        for (state, base) in self.states.iter().zip(&self.invariants) {
            let moved = all_invariants(&permute_qubits(state, pi)?, &self.cfg)?;
            for (j, cands) in candidates.iter_mut().enumerate() {
                let w = &moved.values[j].value;
                cands.retain(|&(m, s)| {
                    let v = &base.values[m - 1].value;
                    if s == 1 {
                        w == v
                    } else {
                        *w == -v.clone()
                    }
                });
            }
            if candidates.iter().all(|c| c.len() <= 1) {
                break;
            }
        }
        let mut targets = Vec::with_capacity(c);
        let mut signs = Vec::with_capacity(c);
        for (j, cands) in candidates.into_iter().enumerate() {
            match cands.as_slice() {
                [(m, s)] => {
                    targets.push(*m);
                    signs.push(*s);
                }
                [] => {
                    return Err(Error::NoMatch {
                        perm: label(),
                        j: j + 1,
                    })
                }
                _ => {
                    return Err(Error::AmbiguousMatch {
                        perm: label(),
                        j: j + 1,
                        probes: self.len(),
                    })
                }
            }
        }
        Ok(IndexAction { targets, signs })
    }

    pub fn transposition_row(&self, i: usize) -> Result<ActionRow> {
        let pi = QubitPermutation::transposition(self.n, 1, i)?;
        let a = self.action(&pi)?;
        Ok(ActionRow {
            i,
            targets: a.targets,
            signs: a.signs,
        })
    }
}

/// Action of an arbitrary qubit permutation on the invariants.
pub fn permutation_action(pi: &QubitPermutation, probes: usize, seed: u64) -> Result<IndexAction> {
    ProbeSet::new(pi.n(), probes, seed, &EvalConfig::default())?.action(pi)
}

/// Action of the transposition `(1,i)`.
pub fn transposition_action(n: usize, i: usize, probes: usize, seed: u64) -> Result<ActionRow> {
    if i == 0 || i > n {
        return Err(Error::NotAPermutation(n));
    }
    ProbeSet::new(n, probes, seed, &EvalConfig::default())?.transposition_row(i)
}

pub fn completeness_table(n: usize, probes: usize, seed: u64) -> Result<ActionTable> {
    completeness_table_with(n, probes, seed, &EvalConfig::default())
}

/// All rows `(1,1)…(1,n)`. An ambiguous match is retried once with
/// [`ESCALATED_PROBES`] probes.
pub fn completeness_table_with(
    n: usize,
    probes: usize,
    seed: u64,
    cfg: &EvalConfig,
) -> Result<ActionTable> {
    partition_count(n)?;
    let mut set = ProbeSet::new(n, probes, seed, cfg)?;
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let row = match set.transposition_row(i) {
            Err(Error::AmbiguousMatch { .. }) if set.len() < ESCALATED_PROBES => {
                set.extend_to(ESCALATED_PROBES)?;
                set.transposition_row(i)?
            }
            other => other?,
        };
        let check = IndexAction {
            targets: row.targets.clone(),
            signs: row.signs.clone(),
        };
        if !check.is_bijection() {
            return Err(Error::NotBijective {
                perm: format!("(1,{i})"),
            });
        }
        rows.push(row);
    }
    Ok(ActionTable {
        n,
        probes: set.len(),
        rows,
    })
}

impl ActionTable {
    /// Plain-text table in the layout `(1,i)  D_n^a  D_n^b …`, followed by
    /// the sign of each match.
    pub fn render_text(&self) -> String {
        let n = self.n;
        let mut out = String::new();
        let _ = writeln!(out, "trans  determinant invariants");
        for row in &self.rows {
            let cells = row.targets.iter().map(|t| format!("D{n}^{t}")).join("  ");
            let _ = writeln!(out, "({},{})  {}", 1, row.i, cells);
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "signs");
        for row in &self.rows {
            let cells = row
                .signs
                .iter()
                .map(|&s| if s > 0 { "+" } else { "-" })
                .join("  ");
            let _ = writeln!(out, "({},{})  {}", 1, row.i, cells);
        }
        out
    }
}
