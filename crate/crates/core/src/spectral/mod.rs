//! Certified real-root isolation, complex root sets, Mahler measure, and
//! unit-circle root counts for integer polynomials.
//!
//! Real roots are certified with exact rational arithmetic only: Sturm counts
//! locate the largest root and the reported enclosure endpoints are checked
//! for a strict sign change. Floating point appears only in the witness value
//! and in the complex root set, which carries residuals instead of a
//! certificate.

mod aberth;
pub(crate) mod mp;
mod sturm;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

pub use aberth::{all_roots, all_roots_with, AberthOptions, ApproxRoot, DEFAULT_BITS, MAX_BITS};
pub use sturm::SturmSequence;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Default half-width of the band around `|z| = 1` treated as on the circle.
pub const DEFAULT_CIRCLE_TOL: f64 = 1e-9;

/// An interval `[lower, upper]` with rational endpoints around a real root.
#[derive(Clone, Debug, PartialEq)]
pub struct RootEnclosure {
    pub lower: BigRational,
    pub upper: BigRational,
    pub witness: f64,
    /// `f(lower) * f(upper) < 0` was verified exactly.
    pub certified: bool,
}

impl RootEnclosure {
    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    pub fn lower_f64(&self) -> f64 {
        self.lower.to_f64().unwrap_or(f64::NAN)
    }

    pub fn upper_f64(&self) -> f64 {
        self.upper.to_f64().unwrap_or(f64::NAN)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lower <= x && x <= &self.upper
    }

    /// Strictly below `other` with no overlap.
    pub fn is_below(&self, other: &RootEnclosure) -> bool {
        self.upper < other.lower
    }

    /// Re-checks the sign-change certificate against `f`.
    pub fn verify_sign_change(&self, f: &IntPolynomial) -> bool {
        let lo = f.sign_at(&self.lower);
        let hi = f.sign_at(&self.upper);
        lo != Ordering::Equal && hi != Ordering::Equal && lo != hi
    }
}

/// Root counts relative to the unit circle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct UnitCircleCensus {
    pub outside: usize,
    pub on_circle: usize,
    pub inside: usize,
    pub tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MahlerMeasure {
    pub value: f64,
    pub error_bound: f64,
}

pub(crate) fn rational_from_f64(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or(Error::Tolerance(x))
}

fn check_tol(tol: f64) -> Result<BigRational> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Tolerance(tol));
    }
    rational_from_f64(tol)
}

/// Cauchy bound `1 + max |c_i / c_d|`: every root has modulus below it.
pub fn cauchy_bound(f: &IntPolynomial) -> BigRational {
    let d = f.degree().unwrap_or(0);
    let lead = f.coeffs().last().map(Signed::abs).unwrap_or_else(BigInt::one);
    let max = f.coeffs()[..d].iter().map(Signed::abs).max().unwrap_or_default();
    BigRational::one() + BigRational::new(max, lead)
}

fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigInt::from(2)
}

/// Greatest real root of `f` strictly above `floor`, enclosed to width `tol`.
///
/// Bisection keeps the invariant that `(hi, inf)` holds no root while
/// `(lo, hi]` holds at least one; once a single root remains and `f` changes
/// sign across it, plain sign bisection takes over.
pub fn largest_real_root(f: &IntPolynomial, floor: &BigRational, tol: f64) -> Result<RootEnclosure> {
    let tol_q = check_tol(tol)?;
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::NoRootAbove(floor.to_string()));
    }
    let sturm = SturmSequence::new(f);
    if sturm.count_above(floor) == 0 {
        return Err(Error::NoRootAbove(floor.to_string()));
    }
    let bound = cauchy_bound(f);
    let mut lo = floor.clone();
    let mut hi = if &bound > floor { bound } else { floor + BigInt::one() };

    // Phase 1: isolate the largest root.
    loop {
        if sturm.count_between(&lo, &hi) == 1 {
            break;
        }
        let mid = midpoint(&lo, &hi);
        if f.sign_at(&mid) == Ordering::Equal && sturm.count_above(&mid) == 0 {
            return Ok(exact_root_enclosure(f, &sturm, mid, &lo, &tol_q));
        }
        if sturm.count_above(&mid) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if f.sign_at(&hi) == Ordering::Equal {
        return Ok(exact_root_enclosure(f, &sturm, hi.clone(), &lo, &tol_q));
    }

    let sign_hi = f.sign_at(&hi);
    let mut sign_lo = f.sign_at(&lo);
    if sign_lo == Ordering::Equal {
        // lo is a smaller root; any point just right of it has the sign
        // of f on the isolating interval's left part.
        lo = next_point_right(f, &sturm, &lo, &hi);
        sign_lo = f.sign_at(&lo);
    }
    let certified_possible = sign_lo != sign_hi;

    // Phase 2: shrink.
    while &hi - &lo > tol_q {
        let mid = midpoint(&lo, &hi);
        let s = f.sign_at(&mid);
        if s == Ordering::Equal {
            return Ok(exact_root_enclosure(f, &sturm, mid, &lo, &tol_q));
        }
        if certified_possible {
            if s == sign_hi {
                hi = mid;
            } else {
                lo = mid;
            }
        } else if sturm.count_between(&mid, &hi) == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let enclosure = RootEnclosure {
        witness: polish_witness(f, &lo, &hi),
        certified: certified_possible,
        lower: lo,
        upper: hi,
    };
    debug_assert!(!enclosure.certified || enclosure.verify_sign_change(f));
    Ok(enclosure)
}

/// A point in `(a, b)` with no root in `(a, point]`, found by halving towards `a`.
fn next_point_right(f: &IntPolynomial, sturm: &SturmSequence, a: &BigRational, b: &BigRational) -> BigRational {
    let mut p = midpoint(a, b);
    while sturm.count_between(a, &p) > 0 || f.sign_at(&p) == Ordering::Equal {
        p = midpoint(a, &p);
    }
    p
}

/// Enclosure around a root that bisection hit exactly.
fn exact_root_enclosure(
    f: &IntPolynomial,
    sturm: &SturmSequence,
    root: BigRational,
    lo: &BigRational,
    tol: &BigRational,
) -> RootEnclosure {
    let mut half = (tol / BigInt::from(2)).min(&root - lo);
    loop {
        let lower = &root - &half;
        let upper = &root + &half;
        // Only the root itself may lie in [lower, upper].
        if sturm.count_between(&lower, &upper) == 1 && f.sign_at(&lower) != Ordering::Equal {
            let certified = f.sign_at(&lower) != f.sign_at(&upper);
            return RootEnclosure {
                witness: root.to_f64().unwrap_or(f64::NAN),
                certified,
                lower,
                upper,
            };
        }
        half /= BigInt::from(2);
    }
}

/// Midpoint of the enclosure refined by a few Newton steps in `f64`, kept
/// inside the enclosure. The certificate never depends on it.
fn polish_witness(f: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> f64 {
    let a = lo.to_f64().unwrap_or(f64::NAN);
    let b = hi.to_f64().unwrap_or(f64::NAN);
    let df = f.derivative();
    let mut x = midpoint(lo, hi).to_f64().unwrap_or(f64::NAN);
    for _ in 0..4 {
        let d = df.eval_f64(x);
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let next = x - f.eval_f64(x) / d;
        if !(a..=b).contains(&next) {
            break;
        }
        x = next;
    }
    x
}

/// Mahler measure `|a_d| prod max(1, |z_i|)` with an error bound from the
/// inclusion radii of the computed roots.
pub fn mahler_measure(f: &IntPolynomial, tol: f64) -> Result<MahlerMeasure> {
    mahler_measure_with(f, tol, AberthOptions::default())
}

/// [`mahler_measure`] starting from the working precision in `opts`.
pub fn mahler_measure_with(f: &IntPolynomial, tol: f64, mut opts: AberthOptions) -> Result<MahlerMeasure> {
    check_tol(tol)?;
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    let lead = f.leading_coeff().unwrap().abs().to_f64().unwrap_or(f64::NAN);
    if deg == 0 {
        return Ok(MahlerMeasure {
            value: lead,
            error_bound: 0.0,
        });
    }
    loop {
        let precision = (tol * 1e-3 / deg as f64).max(1e-60);
        let roots = all_roots_with(f, precision, opts)?;
        let mut value = lead;
        let mut upper = lead;
        let mut lower = lead;
        for r in &roots {
            let m = r.value.norm();
            value *= m.max(1.0);
            upper *= (m + r.radius).max(1.0);
            lower *= (m - r.radius).max(1.0);
        }
        let error_bound = (upper - value).max(value - lower);
        if error_bound <= tol || opts.bits >= opts.max_bits {
            return Ok(MahlerMeasure { value, error_bound });
        }
        opts.bits = (opts.bits * 2).min(opts.max_bits);
    }
}

/// Counts roots outside, on, and inside the unit circle. A root whose
/// modulus is within `tol` of 1 counts as on the circle.
pub fn count_outside_unit(f: &IntPolynomial, tol: f64) -> Result<UnitCircleCensus> {
    count_outside_unit_with(f, tol, AberthOptions::default())
}

/// [`count_outside_unit`] starting from the working precision in `opts`.
pub fn count_outside_unit_with(f: &IntPolynomial, tol: f64, mut opts: AberthOptions) -> Result<UnitCircleCensus> {
    check_tol(tol)?;
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(UnitCircleCensus {
            outside: 0,
            on_circle: 0,
            inside: 0,
            tol,
        });
    }
    loop {
        let precision = (tol * 1e-3).max(1e-60);
        let roots = all_roots_with(f, precision, opts)?;
        // A root whose inclusion disk straddles a band edge is ambiguous;
        // retry at higher precision before classifying it.
        let ambiguous = roots.iter().any(|r| {
            let gap = (r.value.norm() - 1.0).abs();
            r.radius > 0.0 && (gap - tol).abs() <= r.radius
        });
        if !ambiguous || opts.bits >= opts.max_bits {
            let mut census = UnitCircleCensus {
                outside: 0,
                on_circle: 0,
                inside: 0,
                tol,
            };
            for r in &roots {
                let m = r.value.norm();
                if (m - 1.0).abs() <= tol {
                    census.on_circle += 1;
                } else if m > 1.0 {
                    census.outside += 1;
                } else {
                    census.inside += 1;
                }
            }
            return Ok(census);
        }
        opts.bits = (opts.bits * 2).min(opts.max_bits);
    }
}

/// Largest modulus over all complex roots (uncertified).
pub fn max_root_modulus(f: &IntPolynomial, precision: f64) -> Result<f64> {
    let roots = all_roots(f, precision)?;
    Ok(roots.iter().map(|r| r.value.norm()).fold(0.0, f64::max))
}
