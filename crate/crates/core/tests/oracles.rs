//! Cross-checks of the engines against independent brute-force routes.

mod common;

use common::reference_grids::{D4, D6, M_A4};
use common::*;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slocc_core::detengine::{matricize, matrix_from_rows};
use slocc_core::*;

#[test]
fn local_ops_match_kronecker_product() {
    for (n, seeds) in [(2usize, 0..10u64), (4, 10..30), (6, 30..33)] {
        for seed in seeds {
            let s = random_state::<Q>(n, seed).unwrap();
            let chain = random_invertible_chain::<Q>(n, seed).unwrap();
            let fast = apply_local_ops(&s, &chain).unwrap();
            let slow = mat_vec(&kron_matrix(&chain), s.amplitudes());
            assert_eq!(fast.amplitudes(), slow.as_slice(), "n={n} seed={seed}");
        }
    }
}

#[test]
fn laplace_oracle_sanity() {
    let m = vec![
        vec![Q::from_ints(2, 0), Q::from_ints(0, 1)],
        vec![Q::from_ints(3, 0), Q::from_ints(4, 0)],
    ];
    // 2·4 - i·3
    assert_eq!(laplace_det(&m), Q::from_ints(8, -3));
    let id: Vec<Vec<Q>> = (0..5)
        .map(|i| (0..5).map(|j| Q::from_ints((i == j) as i64, 0)).collect())
        .collect();
    assert_eq!(laplace_det(&id), Q::from_ints(1, 0));
}

#[test]
fn bareiss_matches_laplace_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..60 {
        let d = rng.gen_range(1..=6);
        let rows = random_rational_matrix(&mut rng, d);
        let expect = laplace_det(&rows);
        assert_eq!(det_exact(&matrix_from_rows(rows).unwrap()).value, expect);
    }
}

#[test]
fn singular_matrices_are_exactly_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for d in 3..=8 {
        let mut rows = random_integer_matrix(&mut rng, d);
        // last row = first row + 2·second
        rows[d - 1] = (0..d)
            .map(|j| rows[0][j].clone() + Q::from_ints(2, 0) * rows[1][j].clone())
            .collect();
        let v = det_exact(&matrix_from_rows(rows).unwrap());
        assert!(v.zero_verdict);
    }
}

fn value_grid(state: &PureState<Q>, grid: &[Vec<usize>]) -> Vec<Vec<Q>> {
    grid.iter()
        .map(|r| r.iter().map(|&i| state.amplitude(i).clone()).collect())
        .collect()
}

#[test]
fn four_qubit_invariants_equal_displayed_determinants() {
    let cfg = EvalConfig::default();
    for seed in 0..10 {
        let s = random_state::<Q>(4, seed).unwrap();
        let v = all_invariants(&s, &cfg).unwrap();
        for (k, g) in D4.iter().enumerate() {
            let direct = laplace_det(&value_grid(&s, &grid_to_vec(g)));
            assert_eq!(v.get(k + 1).value, direct, "D4^{}", k + 1);
        }
        let base = laplace_det(&value_grid(&s, &grid_to_vec(&M_A4)));
        assert_eq!(v.get(1).value, base);
    }
}

#[test]
fn six_qubit_invariants_equal_displayed_determinants_up_to_sign() {
    // D6^4 differs from the engine layout by two row exchanges, the others
    // by a transpose, so no sign changes
    let signs = [1; 10];
    let cfg = EvalConfig::default();
    for seed in 0..3 {
        let s = random_state::<Q>(6, seed).unwrap();
        let v = all_invariants(&s, &cfg).unwrap();
        for (k, g) in D6.iter().enumerate() {
            let direct = laplace_det(&value_grid(&s, &grid_to_vec(g)));
            let expect = if signs[k] == 1 { direct } else { -direct };
            assert_eq!(v.get(k + 1).value, expect, "D6^{}", k + 1);
        }
    }
}

#[test]
fn displayed_six_qubit_layouts_relative_to_engine() {
    let s = index_state(6);
    let parts = enumerate_partitions(6).unwrap();
    for (k, g) in D6.iter().enumerate() {
        let m = build_matrix(&s, &parts[k]).unwrap();
        let shown = grid_to_vec(g);
        match k + 1 {
            1 | 2 | 3 | 5 | 7 => assert_eq!(index_grid(&m), shown),
            6 | 8 | 9 | 10 => assert_eq!(index_grid(&m.transpose()), shown),
            4 => {
                let mut swapped = m.clone();
                swapped.swap_rows(1, 2);
                swapped.swap_rows(5, 6);
                assert_eq!(index_grid(&swapped), shown);
                // equivalently: row digits read in bit order (2,6,3)
                let reordered = matricize(&s, &[2, 6, 3], parts[3].col_bits()).unwrap();
                assert_eq!(index_grid(&reordered), shown);
            }
            _ => unreachable!(),
        }
    }
}

#[test]
fn float_engine_tracks_exact_engine() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let d = rng.gen_range(1..=16);
        let rows = random_integer_matrix(&mut rng, d);
        let exact = det_exact(&matrix_from_rows(rows.clone()).unwrap())
            .value
            .to_complex();
        let f: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|z| z.to_complex()).collect())
            .collect();
        let got = det_float(&matrix_from_rows(f).unwrap(), &ZeroTest::default())
            .unwrap()
            .value;
        assert!((got - exact).norm() <= 1e-8 * exact.norm(), "d={d}");
    }
}

#[test]
fn composed_transpositions_match_direct_probe() {
    for n in [4usize, 6] {
        let table = completeness_table(n, 3, 1).unwrap();
        for i in 2..=n {
            for j in 2..=n {
                if i == j {
                    continue;
                }
                // state transformed by (1,j) first, then (1,i)
                let pi = QubitPermutation::from_product(n, &[(1, i), (1, j)]).unwrap();
                let direct = completeness::permutation_action(&pi, 3, 2).unwrap();
                let row = |k: usize| IndexAction {
                    targets: table.rows[k - 1].targets.clone(),
                    signs: table.rows[k - 1].signs.clone(),
                };
                let composed = IndexAction::then(&row(j), &row(i));
                assert_eq!(composed.targets, direct.targets, "n={n} (1,{i})(1,{j})");
            }
        }
    }
}
