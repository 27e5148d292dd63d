//! Coefficient matrices and their determinants.
//!
//! A matrix is a matricization of the amplitude vector: the bits listed in
//! `row_bits` (first listed = most significant digit) select the row, the
//! bits in `col_bits` select the column.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::BitPartition;
use crate::qstate::PureState;
use crate::scalar::{GaussRational, Scalar};

/// Default relative factor applied to the Hadamard bound in float mode.
pub const DEFAULT_ZERO_FACTOR: f64 = 1e-9;

/// Float-mode zero test: `|det| ≤ factor · ∏‖row‖`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroTest {
    pub factor: f64,
}

impl Default for ZeroTest {
    fn default() -> Self {
        ZeroTest {
            factor: DEFAULT_ZERO_FACTOR,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoeffMatrix<S> {
    d: usize,
    entries: Vec<S>,
    row_bits: Vec<usize>,
    col_bits: Vec<usize>,
    partition: Option<usize>,
}

impl<S: Scalar> CoeffMatrix<S> {
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.entries[row * self.d + col]
    }

    pub fn row(&self, row: usize) -> &[S] {
        &self.entries[row * self.d..(row + 1) * self.d]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.d)
    }

    pub fn row_bits(&self) -> &[usize] {
        &self.row_bits
    }

    pub fn col_bits(&self) -> &[usize] {
        &self.col_bits
    }

    /// Canonical index of the partition this matrix was built from.
    pub fn partition_index(&self) -> Option<usize> {
        self.partition
    }

    pub fn transpose(&self) -> Self {
        let d = self.d;
        let entries = (0..d * d)
            .map(|k| self.entries[(k % d) * d + k / d].clone())
            .collect();
        CoeffMatrix {
            d,
            entries,
            row_bits: self.col_bits.clone(),
            col_bits: self.row_bits.clone(),
            partition: self.partition,
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.d {
            self.entries.swap(a * self.d + c, b * self.d + c);
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> CoeffMatrix<T> {
        CoeffMatrix {
            d: self.d,
            entries: self.entries.iter().map(f).collect(),
            row_bits: self.row_bits.clone(),
            col_bits: self.col_bits.clone(),
            partition: self.partition,
        }
    }
}

/// Offsets contributed by each digit pattern of the listed bits.
fn scatter_offsets(bits: &[usize], n: usize) -> Vec<usize> {
    let m = bits.len();
    (0..1usize << m)
        .map(|v| {
            bits.iter().enumerate().fold(0, |acc, (j, &b)| {
                if (v >> (m - 1 - j)) & 1 == 1 {
                    acc | 1 << (n - b)
                } else {
                    acc
                }
            })
        })
        .collect()
}

/// Matricizes `state` with the given ordered row and column bits.
pub fn matricize<S: Scalar>(
    state: &PureState<S>,
    row_bits: &[usize],
    col_bits: &[usize],
) -> Result<CoeffMatrix<S>> {
    let n = state.n();
    let mut all: Vec<usize> = row_bits.iter().chain(col_bits).copied().collect();
    all.sort_unstable();
    if row_bits.len() != col_bits.len() || all != (1..=n).collect::<Vec<_>>() {
        return Err(Error::InvalidBitSplit(format!(
            "rows {row_bits:?} / cols {col_bits:?} do not split 1..={n} in halves"
        )));
    }
    let rows = scatter_offsets(row_bits, n);
    let cols = scatter_offsets(col_bits, n);
    let amps = state.amplitudes();
    let entries = rows
        .iter()
        .flat_map(|&r| cols.iter().map(move |&c| amps[r | c].clone()))
        .collect();
    Ok(CoeffMatrix {
        d: rows.len(),
        entries,
        row_bits: row_bits.to_vec(),
        col_bits: col_bits.to_vec(),
        partition: None,
    })
}

/// Coefficient matrix of `state` under partition `p`.
pub fn build_matrix<S: Scalar>(state: &PureState<S>, p: &BitPartition) -> Result<CoeffMatrix<S>> {
    if p.n() != state.n() {
        return Err(Error::SizeMismatch {
            expected: p.n(),
            found: state.n(),
        });
    }
    let mut m = matricize(state, p.row_bits(), p.col_bits())?;
    m.partition = Some(p.index());
    Ok(m)
}

/// Builds a matrix directly from rows; used by tests and cross-checks.
pub fn matrix_from_rows<S: Scalar>(rows: Vec<Vec<S>>) -> Result<CoeffMatrix<S>> {
    let d = rows.len();
    if rows.iter().any(|r| r.len() != d) {
        return Err(Error::InvalidBitSplit("matrix is not square".into()));
    }
    Ok(CoeffMatrix {
        d,
        entries: rows.into_iter().flatten().collect(),
        row_bits: Vec::new(),
        col_bits: Vec::new(),
        partition: None,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetValue<S> {
    pub value: S,
    pub zero_verdict: bool,
    /// Threshold used by the float engine; `None` in exact mode.
    pub zero_bound: Option<f64>,
}

impl<S: Scalar> DetValue<S> {
    pub fn is_zero(&self) -> bool {
        self.zero_verdict
    }
}

#[derive(Clone, PartialEq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    /// Division known to be exact in Z[i].
    fn div_exact(&self, o: &GaussInt) -> GaussInt {
        if o.im.is_zero() {
            return GaussInt {
                re: &self.re / &o.re,
                im: &self.im / &o.re,
            };
        }
        let norm = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        debug_assert!(re.is_multiple_of(&norm) && im.is_multiple_of(&norm));
        GaussInt {
            re: re / &norm,
            im: im / &norm,
        }
    }
}

/// Clears denominators row by row; returns integer rows and the row scales.
fn integerize(m: &CoeffMatrix<GaussRational>) -> (Vec<Vec<GaussInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = m
        .rows()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |l, z| l.lcm(z.re.denom()).lcm(z.im.denom()));
            scale *= &l;
            row.iter()
                .map(|z| GaussInt {
                    re: z.re.numer() * (&l / z.re.denom()),
                    im: z.im.numer() * (&l / z.im.denom()),
                })
                .collect()
        })
        .collect();
    (rows, scale)
}

/// Fraction-free Bareiss elimination over the Gaussian integers.
fn bareiss(mut a: Vec<Vec<GaussInt>>) -> GaussInt {
    let d = a.len();
    let one = GaussInt {
        re: BigInt::one(),
        im: BigInt::zero(),
    };
    if d == 0 {
        return one;
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..d - 1 {
        if a[k][k].is_zero() {
            match (k + 1..d).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => {
                    return GaussInt {
                        re: BigInt::zero(),
                        im: BigInt::zero(),
                    }
                }
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..d {
                row[j] = row[j]
                    .mul(pivot)
                    .sub(&lead.mul(&pivot_row[j]))
                    .div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[d - 1][d - 1].clone();
    if negate {
        GaussInt {
            re: -det.re,
            im: -det.im,
        }
    } else {
        det
    }
}

/// Exact determinant over Q(i).
pub fn det_exact(m: &CoeffMatrix<GaussRational>) -> DetValue<GaussRational> {
    let (rows, scale) = integerize(m);
    let det = bareiss(rows);
    let denom = BigRational::from_integer(scale);
    let value = GaussRational::new(
        BigRational::from_integer(det.re) / &denom,
        BigRational::from_integer(det.im) / &denom,
    );
    DetValue {
        zero_verdict: value.is_zero(),
        value,
        zero_bound: None,
    }
}

/// Product of row Euclidean norms.
pub fn hadamard_bound(m: &CoeffMatrix<Complex64>) -> f64 {
    m.rows()
        .map(|r| r.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt())
        .product()
}

/// LU with partial pivoting; zero when `|det| ≤ factor · hadamard_bound`.
pub fn det_float(m: &CoeffMatrix<Complex64>, zero: &ZeroTest) -> Result<DetValue<Complex64>> {
    if m.entries
        .iter()
        .any(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return Err(Error::NonFinite);
    }
    let d = m.d;
    let bound = zero.factor * hadamard_bound(m);
    let mut a = m.entries.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..d {
        let (p, best) = (k..d)
            .map(|i| (i, a[i * d + k].norm()))
            .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best == 0.0 {
            det = Complex64::new(0.0, 0.0);
            break;
        }
        if p != k {
            for c in 0..d {
                a.swap(k * d + c, p * d + c);
            }
            det = -det;
        }
        let pivot = a[k * d + k];
        det *= pivot;
        for i in k + 1..d {
            let f = a[i * d + k] / pivot;
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in k + 1..d {
                let v = a[k * d + j];
                a[i * d + j] -= f * v;
            }
        }
    }
    let zero_verdict = bound == 0.0 || det.norm() <= bound;
    Ok(DetValue {
        value: det,
        zero_verdict,
        zero_bound: Some(bound),
    })
}
