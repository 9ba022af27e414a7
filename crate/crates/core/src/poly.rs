//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored in ascending order: `coeffs[i]` is the coefficient
//! of `t^i`. The representation is canonical: the zero polynomial is the empty
//! vector and every other polynomial has a nonzero last entry.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Result of comparing `f` with its reciprocal `f_*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Reciprocal,
    AntiReciprocal,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Plus,
    Minus,
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("unknown sign '{other}'"))),
        }
    }
}

/// Parameters of a Salem-Boyd sequence member `t^n P(t) ± P_*(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SalemBoydSpec {
    pub base: IntPolynomial,
    pub exponent: usize,
    pub sign: Sign,
}

impl IntPolynomial {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `c * t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// Multiplication by `t^k`.
    pub fn shift_by_power(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Largest power of `t` dividing the polynomial (0 for the zero polynomial).
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `t^d f(1/t)` where `d = deg f`.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::from_coeffs(self.coeffs.iter().rev().cloned().collect()))
    }

    pub fn symmetry_class(&self) -> Result<Symmetry> {
        let rec = self.reciprocal()?;
        Ok(if rec == *self {
            Symmetry::Reciprocal
        } else if -rec == *self {
            Symmetry::AntiReciprocal
        } else {
            Symmetry::Neither
        })
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    /// Sign of `f(x)` computed exactly through the homogenized integer form
    /// `den^d f(num/den)`, which avoids rational normalization.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        let (num, den) = (x.numer(), x.denom());
        let mut acc = self.coeffs[d].clone();
        let mut den_pow = BigInt::one();
        for c in self.coeffs[..d].iter().rev() {
            den_pow *= den;
            acc = acc * num + c * &den_pow;
        }
        // num-rational keeps denominators positive, so den^d > 0.
        acc.cmp(&BigInt::zero())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_complex(&self, z: Complex<f64>) -> Complex<f64> {
        self.coeffs.iter().rev().fold(Complex::zero(), |acc, c| {
            acc * z + c.to_f64().unwrap_or(f64::NAN)
        })
    }

    /// The Salem-Boyd polynomial `t^n P ± P_*` for a monic base `P`.
    pub fn salem_boyd(spec: &SalemBoydSpec) -> Result<Self> {
        if !spec.base.is_monic() {
            let lc = spec
                .base
                .leading_coeff()
                .map_or_else(|| "0".to_string(), ToString::to_string);
            return Err(Error::NotMonic(lc));
        }
        let shifted = spec.base.shift_by_power(spec.exponent);
        let rec = spec.base.reciprocal()?;
        Ok(match spec.sign {
            Sign::Plus => shifted + rec,
            Sign::Minus => shifted - rec,
        })
    }

    /// Lossy conversion for floating-point root finding.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Largest absolute value among the coefficients.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default()
    }
}

fn combine(a: &IntPolynomial, b: &IntPolynomial, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntPolynomial {
    let len = a.coeffs.len().max(b.coeffs.len());
    let zero = BigInt::zero();
    IntPolynomial::from_coeffs(
        (0..len)
            .map(|i| f(a.coeffs.get(i).unwrap_or(&zero), b.coeffs.get(i).unwrap_or(&zero)))
            .collect(),
    )
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        combine(self, rhs, |x, y| x + y)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        combine(self, rhs, |x, y| x - y)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $f(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

/// Text format: comma-separated ascending coefficients, `"-2,-1,1"` for `t^2 - t - 2`.
/// The zero polynomial prints as `"0"`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        s.split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient '{tok}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }
}

/// JSON form: an array of integers, with entries beyond the 53-bit safe range
/// written as decimal strings.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&json::int_value(c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<serde_json::Value>::deserialize(deserializer)?;
        raw.iter()
            .map(json::parse_int)
            .collect::<Result<Vec<_>>>()
            .map(IntPolynomial::from_coeffs)
            .map_err(de::Error::custom)
    }
}
