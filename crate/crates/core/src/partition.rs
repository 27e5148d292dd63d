//! Row/column splits of the qubit positions and the permutations that
//! produce them from the base split `{1..n/2} | {n/2+1..n}`.
//!
//! A split is described by `R ⊆ {1..n/2-1}` (base row bits moved to the
//! columns) and `T ⊆ {n/2+1..n}` (base column bits moved to the rows) with
//! `|R| = |T| = k`. Bit `n/2` always stays a row bit, which picks one
//! representative out of each split/transpose pair.

use std::fmt;

use itertools::Itertools;
use num_integer::binomial;

use crate::error::{Error, Result};
use crate::qstate::QubitPermutation;

fn check_even(n: usize) -> Result<()> {
    if n % 2 == 1 {
        return Err(Error::OddQubitCount(n));
    }
    if n < 2 {
        return Err(Error::QubitCountOutOfRange { n, max: usize::MAX });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitPartition {
    n: usize,
    r: Vec<usize>,
    t: Vec<usize>,
    row_bits: Vec<usize>,
    col_bits: Vec<usize>,
    index: usize,
}

impl BitPartition {
    /// Builds the split for the given `R`, `T`; `index` is its 1-based
    /// position within [`enumerate_partitions`].
    fn from_sets(n: usize, r: Vec<usize>, t: Vec<usize>, index: usize) -> Self {
        let h = n / 2;
        let row_bits: Vec<usize> = (1..=h)
            .filter(|b| !r.contains(b))
            .chain(t.iter().copied())
            .sorted_unstable()
            .collect();
        let col_bits = (1..=n).filter(|b| !row_bits.contains(b)).collect();
        BitPartition {
            n,
            r,
            t,
            row_bits,
            col_bits,
            index,
        }
    }

    /// Looks up the canonical split whose row or column set equals `bits`.
    pub fn from_row_bits(n: usize, bits: &[usize]) -> Result<Self> {
        let mut bits = bits.to_vec();
        bits.sort_unstable();
        enumerate_partitions(n)?
            .into_iter()
            .find(|p| p.row_bits == bits || p.col_bits == bits)
            .ok_or_else(|| Error::InvalidBitSplit(format!("{bits:?} is not a half of 1..={n}")))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.r.len()
    }

    pub fn moved_row_bits(&self) -> &[usize] {
        &self.r
    }

    pub fn moved_col_bits(&self) -> &[usize] {
        &self.t
    }

    pub fn row_bits(&self) -> &[usize] {
        &self.row_bits
    }

    pub fn col_bits(&self) -> &[usize] {
        &self.col_bits
    }

    /// 1-based canonical position.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn sigma(&self) -> SigmaPermutation {
        sigma_of_partition(self)
    }
}

fn fmt_set(f: &mut fmt::Formatter<'_>, bits: &[usize]) -> fmt::Result {
    write!(f, "{{{}}}", bits.iter().join(","))
}

impl fmt::Display for BitPartition {
    /// `rows={2,3,4} cols={1,5,6}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("rows=")?;
        fmt_set(f, &self.row_bits)?;
        f.write_str(" cols=")?;
        fmt_set(f, &self.col_bits)
    }
}

/// `C(n-1, n/2-1)`.
pub fn partition_count(n: usize) -> Result<u64> {
    check_even(n)?;
    Ok(binomial((n - 1) as u64, (n / 2 - 1) as u64))
}

/// All splits in canonical order: `k` ascending, then `R` and `T`
/// lexicographically. Entry 1 is the base split.
pub fn enumerate_partitions(n: usize) -> Result<Vec<BitPartition>> {
    check_even(n)?;
    let h = n / 2;
    let mut out = Vec::new();
    for k in 0..h {
        for r in (1..h).combinations(k) {
            for t in (h + 1..=n).combinations(k) {
                let index = out.len() + 1;
                out.push(BitPartition::from_sets(n, r.clone(), t, index));
            }
        }
    }
    Ok(out)
}

/// The permutation taking the base split to a given one, in two forms:
/// pairs `(r₁,t₁)…(r_k,t_k)` and the star form `(1,r₁)(1,t₁)…(1,r_k)(1,t_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaPermutation {
    n: usize,
    pairs: Vec<(usize, usize)>,
    normal_form: Vec<(usize, usize)>,
}

impl SigmaPermutation {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Star-form factors, including any degenerate `(1,1)`.
    pub fn normal_form(&self) -> &[(usize, usize)] {
        &self.normal_form
    }

    pub fn pair_permutation(&self) -> QubitPermutation {
        QubitPermutation::from_product(self.n, &self.pairs).expect("pairs lie in 1..=n")
    }

    /// Star-form product in operator notation (rightmost factor first).
    pub fn normal_permutation(&self) -> QubitPermutation {
        QubitPermutation::from_product(self.n, &self.normal_form).expect("factors lie in 1..=n")
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Star form with `(1,1)` factors dropped, or `I`.
    pub fn cycle_string(&self) -> String {
        render_cycles(&self.normal_form)
    }

    pub fn pair_string(&self) -> String {
        render_cycles(&self.pairs)
    }
}

impl fmt::Display for SigmaPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

/// Renders `(a,b)(c,d)…`, skipping `(a,a)`; an empty product is `I`.
pub fn render_cycles(factors: &[(usize, usize)]) -> String {
    let s: String = factors
        .iter()
        .filter(|(a, b)| a != b)
        .map(|(a, b)| format!("({a},{b})"))
        .collect();
    if s.is_empty() {
        "I".to_string()
    } else {
        s
    }
}

/// Parses the output of [`render_cycles`].
pub fn parse_cycles(s: &str) -> Result<Vec<(usize, usize)>> {
    let bad = || Error::InvalidBitSplit(format!("malformed cycle string {s:?}"));
    let s = s.trim();
    if s == "I" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let end = body.find(')').ok_or_else(bad)?;
        let (a, b) = body[..end].split_once(',').ok_or_else(bad)?;
        out.push((
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ));
        rest = &body[end + 1..];
    }
    Ok(out)
}

pub fn sigma_of_partition(p: &BitPartition) -> SigmaPermutation {
    let pairs: Vec<_> = p.r.iter().copied().zip(p.t.iter().copied()).collect();
    let normal_form = pairs.iter().flat_map(|&(r, t)| [(1, r), (1, t)]).collect();
    SigmaPermutation {
        n: p.n,
        pairs,
        normal_form,
    }
}

/// Canonical index of the split `rows | complement`, whichever half holds bit n/2.
pub fn canonical_index_of(n: usize, rows: &[usize]) -> Result<usize> {
    BitPartition::from_row_bits(n, rows).map(|p| p.index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(partition_count(2).unwrap(), 1);
        assert_eq!(partition_count(4).unwrap(), 3);
        assert_eq!(partition_count(6).unwrap(), 10);
        assert_eq!(partition_count(8).unwrap(), 35);
        assert_eq!(partition_count(5), Err(Error::OddQubitCount(5)));
        assert!(enumerate_partitions(7).is_err());
    }

    #[test]
    fn counting_formulas_agree() {
        for n in [2usize, 4, 6, 8, 10, 12] {
            let h = (n / 2) as u64;
            let sum: u64 = (0..h).map(|k| binomial(h - 1, k) * binomial(h, k)).sum();
            assert_eq!(partition_count(n).unwrap(), sum);
            assert_eq!(2 * sum, binomial(n as u64, h));
        }
    }

    #[test]
    fn four_qubit_order() {
        let ps = enumerate_partitions(4).unwrap();
        let desc: Vec<_> = ps
            .iter()
            .map(|p| (p.k(), p.r.clone(), p.t.clone()))
            .collect();
        assert_eq!(
            desc,
            vec![
                (0, vec![], vec![]),
                (1, vec![1], vec![3]),
                (1, vec![1], vec![4])
            ]
        );
        assert_eq!(ps[1].row_bits(), &[2, 3]);
        assert_eq!(ps[2].row_bits(), &[2, 4]);
    }

    #[test]
    fn six_qubit_sigmas() {
        let got: Vec<_> = enumerate_partitions(6)
            .unwrap()
            .iter()
            .map(|p| p.sigma().cycle_string())
            .collect();
        assert_eq!(
            got,
            [
                "I",
                "(1,4)",
                "(1,5)",
                "(1,6)",
                "(1,2)(1,4)",
                "(1,2)(1,5)",
                "(1,2)(1,6)",
                "(1,4)(1,2)(1,5)",
                "(1,4)(1,2)(1,6)",
                "(1,5)(1,2)(1,6)"
            ]
        );
    }

    #[test]
    fn sigma_forms() {
        let ps = enumerate_partitions(6).unwrap();
        let p = ps.iter().find(|p| p.r == [2] && p.t == [4]).unwrap();
        let s = p.sigma();
        assert_eq!(s.pairs(), &[(2, 4)]);
        assert_eq!(s.normal_form(), &[(1, 2), (1, 4)]);
        let p = ps.iter().find(|p| p.r == [1, 2] && p.t == [4, 5]).unwrap();
        assert_eq!(p.sigma().normal_form(), &[(1, 1), (1, 4), (1, 2), (1, 5)]);
        assert_eq!(p.sigma().cycle_string(), "(1,4)(1,2)(1,5)");
        assert!(ps[0].sigma().is_identity());
        assert!(ps[0].sigma().normal_permutation().is_identity());
    }

    #[test]
    fn both_sigma_forms_induce_the_split() {
        for n in [2usize, 4, 6, 8, 10] {
            let base: Vec<usize> = (1..=n / 2).collect();
            for p in enumerate_partitions(n).unwrap() {
                let s = p.sigma();
                assert_eq!(s.pair_permutation().apply_to_set(&base), p.row_bits());
                assert_eq!(s.normal_permutation().apply_to_set(&base), p.row_bits());
            }
        }
    }

    #[test]
    fn partition_invariants() {
        for n in [2usize, 4, 6, 8, 10] {
            let ps = enumerate_partitions(n).unwrap();
            assert_eq!(ps.len() as u64, partition_count(n).unwrap());
            let mut seen = HashSet::new();
            for (i, p) in ps.iter().enumerate() {
                assert_eq!(p.index(), i + 1);
                assert_eq!(p.row_bits().len(), n / 2);
                assert_eq!(p.col_bits().len(), n / 2);
                assert!(p.row_bits().contains(&(n / 2)));
                assert!(p.moved_col_bits().iter().all(|t| p.row_bits().contains(t)));
                assert!(p.moved_row_bits().iter().all(|r| p.col_bits().contains(r)));
                let mut all: Vec<_> = p.row_bits().iter().chain(p.col_bits()).copied().collect();
                all.sort_unstable();
                assert_eq!(all, (1..=n).collect::<Vec<_>>());
                // a split and its transpose count once
                let key = [p.row_bits().to_vec(), p.col_bits().to_vec()];
                let mut sorted = key.clone();
                sorted.sort();
                assert!(seen.insert(sorted));
            }
        }
    }

    #[test]
    fn display_format() {
        let ps = enumerate_partitions(6).unwrap();
        assert_eq!(ps[1].to_string(), "rows={2,3,4} cols={1,5,6}");
    }

    #[test]
    fn cycle_parse_round_trip() {
        for s in ["I", "(1,4)", "(1,4)(1,2)(1,5)"] {
            assert_eq!(render_cycles(&parse_cycles(s).unwrap()), s);
        }
        assert!(parse_cycles("(1,4").is_err());
        assert!(parse_cycles("1,4)").is_err());
    }

    #[test]
    fn lookup_by_either_half() {
        assert_eq!(canonical_index_of(6, &[1, 2, 6]).unwrap(), 8);
        assert_eq!(canonical_index_of(6, &[3, 4, 5]).unwrap(), 8);
        assert!(canonical_index_of(6, &[1, 2]).is_err());
    }
}
