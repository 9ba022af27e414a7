//! Exact integer matrices: determinants, characteristic polynomials,
//! irreducibility, and Perron roots of nonnegative matrices.
//!
//! Convention: column `j` holds the image of basis vector `v_j`, so a matrix
//! acts on coefficient vectors by left multiplication.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;
use crate::poly::IntPolynomial;
use crate::spectral::{rational_from_f64, RootEnclosure};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    /// Row-major.
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidMatrix("dimension must be at least 1".into()));
        }
        Ok(Self {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidMatrix("dimension must be at least 1".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != dim) {
            return Err(Error::InvalidMatrix(format!(
                "row {bad} has {} entries, expected {dim}",
                rows[bad].len()
            )));
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: impl Into<BigInt>) {
        self.entries[row * self.dim + col] = value.into();
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.dim)
    }

    /// Square sub-block on the index range `range` (rows and columns).
    pub fn block(&self, range: std::ops::Range<usize>) -> Result<Self> {
        let rows = range
            .clone()
            .map(|i| range.clone().map(|j| self.get(i, j).clone()).collect())
            .collect();
        Self::from_rows(rows)
    }

    pub fn abs(&self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(Signed::abs).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim, "vector length must match dimension");
        self.rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `x I - M` evaluated at an integer `x`.
    fn shifted(&self, x: &BigInt) -> Vec<Vec<BigInt>> {
        self.rows()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, a)| if i == j { x - a } else { -a })
                    .collect()
            })
            .collect()
    }

    /// `det(x I - M)` by fraction-free elimination.
    pub fn char_value_at(&self, x: &BigInt) -> BigInt {
        bareiss_det(self.shifted(x))
    }

    pub fn determinant(&self) -> BigInt {
        bareiss_det(self.rows().map(<[BigInt]>::to_vec).collect())
    }

    /// Monic `det(t I - M)`, recovered by exact interpolation of its values at
    /// `t = 0, 1, ..., dim`.
    pub fn char_poly(&self) -> Result<IntPolynomial> {
        let n = self.dim;
        let values: Vec<BigInt> = (0..=n).map(|k| self.char_value_at(&BigInt::from(k))).collect();
        let coeffs = interpolate_consecutive(&values)?;
        let p = IntPolynomial::from_coeffs(coeffs);
        if p.degree() != Some(n) || !p.is_monic() {
            return Err(Error::CrossCheck(format!(
                "interpolated characteristic polynomial {p} is not monic of degree {n}"
            )));
        }
        Ok(p)
    }

    /// Strong connectivity of the support graph `i -> j` whenever `M_ij != 0`.
    pub fn is_irreducible(&self) -> bool {
        if self.dim == 1 {
            return !self.get(0, 0).is_zero();
        }
        let reach_all = |forward: bool| {
            let mut seen = vec![false; self.dim];
            let mut queue = VecDeque::from([0usize]);
            seen[0] = true;
            while let Some(i) = queue.pop_front() {
                let edge = |j: usize| if forward { self.get(i, j) } else { self.get(j, i) };
                let next: Vec<usize> = (0..self.dim).filter(|&j| !seen[j] && !edge(j).is_zero()).collect();
                for j in next {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach_all(true) && reach_all(false)
    }

    fn check_nonnegative(&self) -> Result<()> {
        for (k, e) in self.entries.iter().enumerate() {
            if e.is_negative() {
                return Err(Error::NegativeEntry {
                    row: k / self.dim,
                    col: k % self.dim,
                });
            }
        }
        Ok(())
    }

    /// Perron–Frobenius eigenvalue of a nonnegative irreducible matrix,
    /// bracketed by the min/max Collatz–Wielandt ratios of a positive vector.
    ///
    /// The vector comes from power iteration on `M + I` (primitive whenever
    /// `M` is irreducible). The bracket is evaluated in exact rationals, so
    /// the enclosure is rigorous even though the vector is approximate; it
    /// carries no polynomial sign certificate.
    pub fn perron_root(&self, tol: f64) -> Result<RootEnclosure> {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::Tolerance(tol));
        }
        self.check_nonnegative()?;
        if !self.is_irreducible() {
            return Err(Error::Reducible);
        }
        let tol_q = rational_from_f64(tol)?;
        let n = self.dim;
        let a: Vec<f64> = self.entries.iter().map(|e| e.to_f64().unwrap_or(f64::INFINITY)).collect();

        let mut x = vec![1.0f64; n];
        let mut best: Option<(BigRational, BigRational)> = None;
        for iteration in 0..200_000usize {
            let mut y = x.clone();
            for i in 0..n {
                y[i] += (0..n).map(|j| a[i * n + j] * x[j]).sum::<f64>();
            }
            let norm = y.iter().cloned().fold(0.0, f64::max);
            for v in y.iter_mut() {
                *v /= norm;
            }
            x = y;
            if iteration % 16 == 15 {
                let (lo, hi) = self.collatz_wielandt(&x)?;
                let narrow = &hi - &lo <= tol_q;
                if best.as_ref().is_none_or(|(bl, bh)| &hi - &lo < bh - bl) {
                    best = Some((lo, hi));
                }
                if narrow {
                    break;
                }
                // Converged in f64 without reaching tol: no further progress.
                let (fl, fh) = best.as_ref().map(|(l, h)| (l.to_f64().unwrap(), h.to_f64().unwrap())).unwrap();
                if iteration > 4096 && (fh - fl) <= 1e-13 * fh.abs().max(1.0) {
                    break;
                }
            }
        }
        let (lower, upper) = best.expect("at least one Collatz–Wielandt evaluation");
        if &upper - &lower > tol_q {
            return Err(Error::NoConvergence {
                iterations: 200_000,
                precision: 53,
            });
        }
        let witness = ((&lower + &upper) / BigInt::from(2)).to_f64().unwrap_or(f64::NAN);
        Ok(RootEnclosure {
            lower,
            upper,
            witness,
            certified: false,
        })
    }

    /// Exact `(min_i (Mx)_i / x_i, max_i (Mx)_i / x_i)` for a positive vector `x`.
    fn collatz_wielandt(&self, x: &[f64]) -> Result<(BigRational, BigRational)> {
        let xq: Vec<BigRational> = x
            .iter()
            .map(|&v| {
                if v > 0.0 {
                    rational_from_f64(v)
                } else {
                    // Keep the test vector strictly positive.
                    Ok(BigRational::new(BigInt::one(), BigInt::from(1u64 << 52)))
                }
            })
            .collect::<Result<_>>()?;
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for (i, row) in self.rows().enumerate() {
            let mx: BigRational = row
                .iter()
                .zip(&xq)
                .map(|(a, v)| BigRational::from_integer(a.clone()) * v)
                .sum();
            let ratio = mx / &xq[i];
            if lo.as_ref().is_none_or(|l| &ratio < l) {
                lo = Some(ratio.clone());
            }
            if hi.as_ref().is_none_or(|h| &ratio > h) {
                hi = Some(ratio);
            }
        }
        Ok((lo.unwrap(), hi.unwrap()))
    }
}

/// Fraction-free Gaussian elimination; every intermediate division is exact.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Coefficients of the degree-`n` polynomial taking `values[k]` at `t = k`,
/// through Newton's forward-difference form. Fails unless the result is integral.
fn interpolate_consecutive(values: &[BigInt]) -> Result<Vec<BigInt>> {
    let n = values.len();
    // Forward differences Δ^k y_0.
    let mut diffs = Vec::with_capacity(n);
    let mut row = values.to_vec();
    for _ in 0..n {
        diffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // sum_k Δ^k y_0 * t(t-1)...(t-k+1) / k!
    let mut acc = vec![BigRational::zero(); n];
    let mut falling = vec![BigInt::one()];
    let mut factorial = BigInt::one();
    for (k, d) in diffs.iter().enumerate() {
        if k > 0 {
            factorial *= BigInt::from(k);
            // falling *= (t - (k - 1))
            let shift = BigInt::from(k - 1);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &shift;
            }
            falling = next;
        }
        if d.is_zero() {
            continue;
        }
        for (i, c) in falling.iter().enumerate() {
            acc[i] += BigRational::new(c * d, factorial.clone());
        }
    }
    acc.into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::CrossCheck(format!("non-integral interpolated coefficient {c}")))
            }
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    dim: usize,
    entries: Vec<Vec<serde_json::Value>>,
}

/// JSON form `{"dim": d, "entries": [[...], ...]}`, rows listed top to bottom.
impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            dim: self.dim,
            entries: self.rows().map(|r| r.iter().map(json::int_value).collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MatrixJson::deserialize(d)?;
        let rows = raw
            .entries
            .iter()
            .map(|r| r.iter().map(json::parse_int).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let m = IntMatrix::from_rows(rows).map_err(D::Error::custom)?;
        if m.dim != raw.dim {
            return Err(D::Error::custom(format!("dim {} does not match {} rows", raw.dim, m.dim)));
        }
        Ok(m)
    }
}
