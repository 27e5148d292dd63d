//! Independent oracles shared by the integration suites.

#![allow(dead_code)]

pub mod reference_grids;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use slocc_core::{GaussRational, LocalOperator, OperatorChain, PureState, Scalar};

pub type Q = GaussRational;

/// Cofactor expansion along the first row of each minor, memoized on the
/// set of remaining columns.
pub fn laplace_det<S: Scalar>(rows: &[Vec<S>]) -> S {
    let d = rows.len();
    assert!(d <= 16);
    let full = (1usize << d) - 1;
    let mut memo: Vec<Option<S>> = vec![None; 1 << d];
    memo[0] = Some(S::one());
    fn minor<S: Scalar>(rows: &[Vec<S>], mask: usize, memo: &mut Vec<Option<S>>) -> S {
        if let Some(v) = &memo[mask] {
            return v.clone();
        }
        let d = rows.len();
        let r = d - mask.count_ones() as usize;
        let mut acc = S::zero();
        let mut pos = 0;
        for j in 0..d {
            if mask & (1 << j) == 0 {
                continue;
            }
            let term = rows[r][j].clone() * minor(rows, mask & !(1 << j), memo);
            acc = if pos % 2 == 0 { acc + term } else { acc - term };
            pos += 1;
        }
        memo[mask] = Some(acc.clone());
        acc
    }
    minor(rows, full, &mut memo)
}

/// Explicit `A₁ ⊗ … ⊗ Aₙ` as a dense `2^n × 2^n` matrix.
pub fn kron_matrix<S: Scalar>(chain: &OperatorChain<S>) -> Vec<Vec<S>> {
    let mut m = vec![vec![S::one()]];
    for op in chain.ops() {
        let d = m.len();
        let mut next = vec![vec![S::zero(); 2 * d]; 2 * d];
        for i in 0..d {
            for j in 0..d {
                for a in 0..2 {
                    for b in 0..2 {
                        next[i * 2 + a][j * 2 + b] = m[i][j].clone() * op.e[a * 2 + b].clone();
                    }
                }
            }
        }
        m = next;
    }
    m
}

pub fn mat_vec<S: Scalar>(m: &[Vec<S>], v: &[S]) -> Vec<S> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

pub fn rational<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(-9i64..=9)),
        BigInt::from(rng.gen_range(1i64..=5)),
    )
}

pub fn random_rational_matrix<R: Rng>(rng: &mut R, d: usize) -> Vec<Vec<Q>> {
    (0..d)
        .map(|_| {
            (0..d)
                .map(|_| Q::new(rational(rng), rational(rng)))
                .collect()
        })
        .collect()
}

pub fn random_integer_matrix<R: Rng>(rng: &mut R, d: usize) -> Vec<Vec<Q>> {
    (0..d)
        .map(|_| {
            (0..d)
                .map(|_| Q::from_ints(rng.gen_range(-9..=9), rng.gen_range(-9..=9)))
                .collect()
        })
        .collect()
}

/// State whose amplitude at index `i` is `i` itself, so matrix entries name
/// their own amplitude.
pub fn index_state(n: usize) -> PureState<Q> {
    PureState::new(n, (0..1i64 << n).map(|i| Q::from_ints(i, 0)).collect()).unwrap()
}

pub fn index_grid(m: &slocc_core::CoeffMatrix<Q>) -> Vec<Vec<usize>> {
    m.rows()
        .map(|r| {
            r.iter()
                .map(|z| usize::try_from(z.re.to_integer()).unwrap())
                .collect()
        })
        .collect()
}

pub fn grid_to_vec<const D: usize>(g: &[[usize; D]; D]) -> Vec<Vec<usize>> {
    g.iter().map(|r| r.to_vec()).collect()
}

/// Random state with only `support` nonzero amplitudes, so zero patterns vary.
pub fn sparse_state<R: Rng>(rng: &mut R, n: usize, support: usize) -> PureState<Q> {
    let entries: Vec<_> = (0..support)
        .map(|_| {
            (
                rng.gen_range(0..1usize << n),
                Q::from_ints(rng.gen_range(1..=9), rng.gen_range(-9..=9)),
            )
        })
        .collect();
    PureState::from_sparse(n, entries).unwrap()
}

pub fn identity_op<S: Scalar>() -> LocalOperator<S> {
    LocalOperator::identity()
}
