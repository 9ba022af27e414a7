//! Simultaneous approximation of all complex roots (Aberth–Ehrlich iteration).
//!
//! A double-precision pass supplies starting points; the iteration then
//! continues at a multiprecision working precision until every Newton
//! correction `|f(z)/f'(z)|` falls below the requested precision.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;

use super::mp::{Field, MpComplex};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

pub const DEFAULT_BITS: usize = 128;
pub const MAX_BITS: usize = 1024;

#[derive(Clone, Copy, Debug)]
pub struct AberthOptions {
    /// Initial working precision in bits; doubled on failure.
    pub bits: usize,
    pub max_bits: usize,
    pub max_iterations: usize,
}

impl Default for AberthOptions {
    fn default() -> Self {
        Self {
            bits: DEFAULT_BITS,
            max_bits: MAX_BITS,
            max_iterations: 500,
        }
    }
}

/// One root approximation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxRoot {
    pub value: Complex<f64>,
    /// Newton correction `|f(z)/f'(z)|` at the working precision.
    pub residual: f64,
    /// Weierstrass inclusion radius `d |f(z_i)| / (|a_d| prod_{j != i} |z_i - z_j|)`.
    /// The union of these disks contains every root.
    pub radius: f64,
}

fn horner<T: Field>(coeffs: &[T], z: &T) -> T {
    let mut it = coeffs.iter().rev();
    let mut acc = it.next().expect("nonempty coefficients").clone();
    for c in it {
        acc = acc.mul(z).add(c);
    }
    acc
}

/// One Jacobi sweep. Returns the Newton residuals measured before the update.
fn sweep<T: Field>(f: &[T], df: &[T], roots: &mut [T], bits: usize) -> Vec<f64> {
    let n = roots.len();
    let one = T::from_c64(Complex::new(1.0, 0.0), bits);
    let mut updates = Vec::with_capacity(n);
    let mut residuals = Vec::with_capacity(n);
    for i in 0..n {
        let fz = horner(f, &roots[i]);
        if fz.is_zero() {
            updates.push(None);
            residuals.push(0.0);
            continue;
        }
        let dfz = horner(df, &roots[i]);
        if dfz.is_zero() {
            // Critical point: nudge off it.
            let nudge = T::from_c64(Complex::new(1e-8, 1e-8), bits);
            updates.push(Some(nudge));
            residuals.push(f64::INFINITY);
            continue;
        }
        let newton = fz.div(&dfz);
        residuals.push(newton.to_c64().norm());
        let mut repulsion = T::from_c64(Complex::zero(), bits);
        for j in 0..n {
            if j != i {
                let diff = roots[i].sub(&roots[j]);
                if !diff.is_zero() {
                    repulsion = repulsion.add(&one.div(&diff));
                }
            }
        }
        let denom = one.sub(&newton.mul(&repulsion));
        let step = if denom.is_zero() { newton } else { newton.div(&denom) };
        updates.push(Some(step));
    }
    for (z, u) in roots.iter_mut().zip(updates) {
        if let Some(u) = u {
            *z = z.sub(&u);
        }
    }
    residuals
}

/// Starting points on a circle of radius given by the Fujiwara-style bound,
/// rotated off the real axis so conjugate pairs separate.
fn initial_points(coeffs: &[f64]) -> Vec<Complex<f64>> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d].abs();
    let mut radius: f64 = 0.0;
    for (k, c) in coeffs[..d].iter().enumerate() {
        let ratio = (c.abs() / lead).powf(1.0 / (d - k) as f64);
        radius = radius.max(ratio);
    }
    let radius = if radius > 0.0 { radius } else { 1.0 };
    (0..d)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            Complex::from_polar(radius, theta)
        })
        .collect()
}

fn derivative<T: Field>(coeffs: &[BigInt], bits: usize) -> Vec<T> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| T::from_int(&(c * BigInt::from(i)), bits))
        .collect()
}

fn run<T: Field>(
    poly: &IntPolynomial,
    start: &[Complex<f64>],
    precision: f64,
    bits: usize,
    max_iterations: usize,
) -> (Vec<T>, Option<Vec<f64>>) {
    let f: Vec<T> = poly.coeffs().iter().map(|c| T::from_int(c, bits)).collect();
    let df: Vec<T> = derivative(poly.coeffs(), bits);
    let mut roots: Vec<T> = start.iter().map(|z| T::from_c64(*z, bits)).collect();
    for _ in 0..max_iterations {
        let residuals = sweep(&f, &df, &mut roots, bits);
        if residuals.iter().any(|r| r.is_nan()) {
            return (roots, None);
        }
        if residuals.iter().all(|r| *r < precision) {
            // The sweep already applied one more correction; report the
            // residuals of the final iterates.
            let finals = roots
                .iter()
                .map(|z| {
                    let dfz = horner(&df, z);
                    let fz = horner(&f, z);
                    if fz.is_zero() {
                        0.0
                    } else if dfz.is_zero() {
                        f64::INFINITY
                    } else {
                        fz.div(&dfz).to_c64().norm()
                    }
                })
                .collect();
            return (roots, Some(finals));
        }
    }
    (roots, None)
}

fn inclusion_radii<T: Field>(poly: &IntPolynomial, roots: &[T], bits: usize) -> Vec<f64> {
    let f: Vec<T> = poly.coeffs().iter().map(|c| T::from_int(c, bits)).collect();
    let lead = T::from_int(poly.leading_coeff().expect("nonzero"), bits);
    let d = roots.len() as f64;
    roots
        .iter()
        .enumerate()
        .map(|(i, zi)| {
            let mut den = lead.clone();
            for (j, zj) in roots.iter().enumerate() {
                if j != i {
                    den = den.mul(&zi.sub(zj));
                }
            }
            let fz = horner(&f, zi);
            if fz.is_zero() {
                0.0
            } else if den.is_zero() {
                f64::INFINITY
            } else {
                d * fz.div(&den).to_c64().norm()
            }
        })
        .collect()
}

/// All `deg f` complex roots of `f`, each with its residual and inclusion radius.
pub fn all_roots(f: &IntPolynomial, precision: f64) -> Result<Vec<ApproxRoot>> {
    all_roots_with(f, precision, AberthOptions::default())
}

pub fn all_roots_with(f: &IntPolynomial, precision: f64, opts: AberthOptions) -> Result<Vec<ApproxRoot>> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::InvalidParams("constant polynomial has no roots".into()));
    }
    if !(precision.is_finite() && precision > 0.0) {
        return Err(Error::Tolerance(precision));
    }
    // Exact zero roots are split off; the iteration runs on the cofactor.
    let zeros = f.trailing_zeros();
    let core = IntPolynomial::from_coeffs(f.coeffs()[zeros..].to_vec());
    let mut out: Vec<ApproxRoot> = (0..zeros)
        .map(|_| ApproxRoot {
            value: Complex::zero(),
            residual: 0.0,
            radius: 0.0,
        })
        .collect();
    if core.degree() == Some(0) {
        return Ok(out);
    }

    let start = initial_points(&core.to_f64_coeffs());
    // Warm start in double precision; failure here only costs iterations.
    let (warm, _) = run::<Complex<f64>>(&core, &start, 1e-12, 53, opts.max_iterations.min(100));
    let warm: Vec<Complex<f64>> = if warm.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        warm
    } else {
        start
    };

    let mut bits = opts.bits;
    loop {
        if let (roots, Some(residuals)) = run::<MpComplex>(&core, &warm, precision, bits, opts.max_iterations) {
            let radii = inclusion_radii(&core, &roots, bits);
            out.extend(roots.iter().zip(residuals).zip(radii).map(|((z, residual), radius)| ApproxRoot {
                value: z.to_c64(),
                residual,
                radius,
            }));
            return Ok(out);
        }
        if bits >= opts.max_bits {
            return Err(Error::NoConvergence {
                iterations: opts.max_iterations,
                precision: bits,
            });
        }
        bits = (bits * 2).min(opts.max_bits);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<ApproxRoot>) -> Vec<Complex<f64>> {
        v.sort_by(|a, b| {
            a.value
                .re
                .partial_cmp(&b.value.re)
                .unwrap()
                .then(a.value.im.partial_cmp(&b.value.im).unwrap())
        });
        v.into_iter().map(|r| r.value).collect()
    }

    #[test]
    fn difference_of_squares() {
        let roots = sorted(all_roots(&IntPolynomial::from_i64(&[-1, 0, 1]), 1e-20).unwrap());
        assert!((roots[0] - Complex::new(-1.0, 0.0)).norm() < 1e-15);
        assert!((roots[1] - Complex::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn r1_roots() {
        let roots = sorted(all_roots(&IntPolynomial::from_i64(&[-2, -1, 1]), 1e-20).unwrap());
        assert!((roots[0] - Complex::new(-1.0, 0.0)).norm() < 1e-15);
        assert!((roots[1] - Complex::new(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn double_root_is_resolved_at_working_precision() {
        // (t^2 - 3t + 1)(t + 1)^2
        let approx = all_roots(&IntPolynomial::from_i64(&[1, -1, -4, -1, 1]), 1e-15).unwrap();
        let roots = sorted(approx.clone());
        let phi2 = (3.0 + 5f64.sqrt()) / 2.0;
        assert!((roots[0] + 1.0).norm() < 1e-12, "{:?}", roots[0]);
        assert!((roots[1] + 1.0).norm() < 1e-12, "{:?}", roots[1]);
        assert!((roots[2].re - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-14);
        assert!((roots[3].re - phi2).abs() < 1e-14);
        assert!(approx.iter().all(|r| r.radius < 1e-12), "{approx:?}");
    }

    #[test]
    fn zero_roots_split_off() {
        let f = IntPolynomial::from_i64(&[0, 0, -1, 0, 1]);
        let roots = all_roots(&f, 1e-20).unwrap();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots.iter().filter(|r| r.value == Complex::zero()).count(), 2);
    }

    #[test]
    fn rejects_constants() {
        assert!(all_roots(&IntPolynomial::from_i64(&[3]), 1e-10).is_err());
        assert!(all_roots(&IntPolynomial::zero(), 1e-10).is_err());
    }

    #[test]
    fn cyclotomic_roots_sit_on_the_circle() {
        let roots = all_roots(&IntPolynomial::from_i64(&[1, 1, 1]), 1e-20).unwrap();
        for r in roots {
            assert!((r.value.norm() - 1.0).abs() < 1e-15);
        }
    }
}
