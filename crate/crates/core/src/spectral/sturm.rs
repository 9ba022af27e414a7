//! Sturm sequences over the integers (primitive pseudo-remainder sequence).
//!
//! Each remainder is a positive rational multiple of the classical Sturm
//! remainder, so sign-variation counts are unchanged while coefficients stay
//! integral and content-free.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::poly::IntPolynomial;

#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<IntPolynomial>,
}

fn primitive(p: &IntPolynomial) -> IntPolynomial {
    let c = p.content();
    if c.is_zero() || c == BigInt::from(1) {
        return p.clone();
    }
    IntPolynomial::from_coeffs(p.coeffs().iter().map(|a| a / &c).collect())
}

/// Remainder of `a` by `b` after scaling `a` by a positive multiplier,
/// reduced to a primitive polynomial.
fn positive_prem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("divisor is nonzero");
    let lc = b.leading_coeff().expect("divisor is nonzero");
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    // r = lc^scalings * a - q * b
    let mut scalings = 0usize;
    loop {
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        if r.len() <= db {
            break;
        }
        let shift = r.len() - 1 - db;
        let top = r.pop().unwrap();
        for c in r.iter_mut() {
            *c *= lc;
        }
        for (i, bc) in b.coeffs()[..db].iter().enumerate() {
            r[i + shift] -= &top * bc;
        }
        scalings += 1;
    }
    let rem = primitive(&IntPolynomial::from_coeffs(r));
    if lc.is_negative() && scalings % 2 == 1 {
        -rem
    } else {
        rem
    }
}

/// Sign of `p` just to the right of `x`: the sign of the first nonvanishing
/// derivative at `x`.
pub(crate) fn sign_right(p: &IntPolynomial, x: &BigRational) -> Ordering {
    let mut q = p.clone();
    loop {
        if q.is_zero() {
            return Ordering::Equal;
        }
        match q.sign_at(x) {
            Ordering::Equal => q = q.derivative(),
            s => return s,
        }
    }
}

impl SturmSequence {
    pub fn new(f: &IntPolynomial) -> Self {
        let mut seq = Vec::new();
        if f.is_zero() {
            return Self { seq };
        }
        seq.push(primitive(f));
        let d = primitive(&f.derivative());
        if d.is_zero() {
            return Self { seq };
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let r = positive_prem(&seq[n - 2], &seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-r);
        }
        Self { seq }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Sign variations just to the right of `x`.
    pub fn variations_right_of(&self, x: &BigRational) -> usize {
        Self::variations(self.seq.iter().map(|p| sign_right(p, x)))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::variations(
            self.seq
                .iter()
                .map(|p| p.leading_coeff().map_or(Ordering::Equal, |c| c.cmp(&BigInt::zero()))),
        )
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_between(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_right_of(a)
            .saturating_sub(self.variations_right_of(b))
    }

    /// Number of distinct real roots in `(a, +inf)`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations_right_of(a)
            .saturating_sub(self.variations_at_pos_infinity())
    }
}
