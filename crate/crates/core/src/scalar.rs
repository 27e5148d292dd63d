//! Scalar fields used for amplitudes and operator entries.
//!
//! Two representations exist: [`GaussRational`] for exact arithmetic over
//! Q(i) and [`Complex64`] for floating point. A computation is generic over
//! one of them, so the two never mix inside one evaluation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::detengine::{self, CoeffMatrix, DetValue, ZeroTest};
use crate::error::Result;

/// Which arithmetic a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

/// A Gaussian rational `re + im·i` with both parts in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRational {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    /// Parses the textual parts written by [`Scalar::re_string`].
    pub fn parse(re: &str, im: &str) -> Option<Self> {
        Some(GaussRational {
            re: BigRational::from_str(re.trim()).ok()?,
            im: BigRational::from_str(im.trim()).ok()?,
        })
    }

    pub fn conj(&self) -> Self {
        GaussRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        // numerator/denominator beyond f64 range individually
        let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
        let n = (q.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (q.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})i", self.re, self.im)
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for GaussRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussRational {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for GaussRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussRational {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Mul for GaussRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, o: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for GaussRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational::from_ints(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::from_ints(1, 0)
    }
}

impl From<BigInt> for GaussRational {
    fn from(v: BigInt) -> Self {
        GaussRational {
            re: BigRational::from_integer(v),
            im: BigRational::zero(),
        }
    }
}

/// Field operations plus the mode-specific hooks the engines need.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const MODE: Mode;

    fn from_ints(re: i64, im: i64) -> Self;

    /// `1/sqrt(terms)` in float mode, `1` in exact mode.
    fn norm_factor(terms: u64) -> Self;

    /// Determinant through the engine appropriate for this field.
    fn determinant(m: &CoeffMatrix<Self>, zero: &ZeroTest) -> Result<DetValue<Self>>;

    /// Random amplitude or operator entry.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Acceptance rule for a random operator determinant.
    fn accept_random_det(det: &Self) -> bool;

    /// Invertibility of a 2x2 operator given its entries and determinant.
    fn is_invertible(entries: &[Self; 4], det: &Self, zero: &ZeroTest) -> bool;

    /// Compares two values that should be equal. Returns the pass flag and,
    /// in float mode, the relative error.
    fn compare(lhs: &DetValue<Self>, rhs: &Self, tol: f64) -> (bool, Option<f64>);

    fn re_string(&self) -> String;
    fn im_string(&self) -> String;
    fn to_complex(&self) -> Complex64;
}

impl Scalar for GaussRational {
    const MODE: Mode = Mode::Exact;

    fn from_ints(re: i64, im: i64) -> Self {
        GaussRational::from_ints(re, im)
    }

    fn norm_factor(_terms: u64) -> Self {
        GaussRational::one()
    }

    fn determinant(m: &CoeffMatrix<Self>, _zero: &ZeroTest) -> Result<DetValue<Self>> {
        Ok(detengine::det_exact(m))
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        GaussRational::from_ints(rng.gen_range(-9..=9), rng.gen_range(-9..=9))
    }

    fn accept_random_det(det: &Self) -> bool {
        !det.is_zero()
    }

    fn is_invertible(_entries: &[Self; 4], det: &Self, _zero: &ZeroTest) -> bool {
        !det.is_zero()
    }

    fn compare(lhs: &DetValue<Self>, rhs: &Self, _tol: f64) -> (bool, Option<f64>) {
        (lhs.value == *rhs, None)
    }

    fn re_string(&self) -> String {
        self.re.to_string()
    }

    fn im_string(&self) -> String {
        self.im.to_string()
    }

    fn to_complex(&self) -> Complex64 {
        GaussRational::to_complex(self)
    }
}

impl Scalar for Complex64 {
    const MODE: Mode = Mode::Float;

    fn from_ints(re: i64, im: i64) -> Self {
        Complex64::new(re as f64, im as f64)
    }

    fn norm_factor(terms: u64) -> Self {
        Complex64::new(1.0 / (terms as f64).sqrt(), 0.0)
    }

    fn determinant(m: &CoeffMatrix<Self>, zero: &ZeroTest) -> Result<DetValue<Self>> {
        detengine::det_float(m, zero)
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    }

    fn accept_random_det(det: &Self) -> bool {
        det.norm() >= 0.1
    }

    fn is_invertible(entries: &[Self; 4], det: &Self, zero: &ZeroTest) -> bool {
        let r0 = (entries[0].norm_sqr() + entries[1].norm_sqr()).sqrt();
        let r1 = (entries[2].norm_sqr() + entries[3].norm_sqr()).sqrt();
        let bound = r0 * r1;
        bound > 0.0 && det.norm() > zero.factor * bound
    }

    fn compare(lhs: &DetValue<Self>, rhs: &Self, tol: f64) -> (bool, Option<f64>) {
        let diff = (lhs.value - rhs).norm();
        let scale = lhs.value.norm().max(rhs.norm());
        let rel = if scale == 0.0 { 0.0 } else { diff / scale };
        // both sides numerically zero: relative error is noise over noise
        let both_zero = lhs.zero_verdict && rhs.norm() <= lhs.zero_bound.unwrap_or(0.0);
        if both_zero {
            (true, None)
        } else {
            (rel <= tol, Some(rel))
        }
    }

    fn re_string(&self) -> String {
        format!("{}", self.re)
    }

    fn im_string(&self) -> String {
        format!("{}", self.im)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }
}

/// `base^exp` by repeated squaring.
pub fn pow<S: Scalar>(base: &S, mut exp: u64) -> S {
    let mut acc = S::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * sq.clone();
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.clone() * sq;
        }
    }
    acc
}
