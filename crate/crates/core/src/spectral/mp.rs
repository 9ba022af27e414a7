//! Complex arithmetic at a fixed binary working precision.
//!
//! Root finding runs through the [`Field`] trait so the same Aberth sweep
//! serves both the `f64` warm start and the multiprecision refinement.

use astro_float::{BigFloat, RoundingMode, Sign, Word};
use num_complex::Complex;

const RM: RoundingMode = RoundingMode::ToEven;

/// The operations the simultaneous root iteration needs from a complex scalar.
pub(crate) trait Field: Clone {
    fn from_c64(z: Complex<f64>, bits: usize) -> Self;
    fn from_int(c: &num_bigint::BigInt, bits: usize) -> Self;
    fn to_c64(&self) -> Complex<f64>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Field for Complex<f64> {
    fn from_c64(z: Complex<f64>, _bits: usize) -> Self {
        z
    }
    fn from_int(c: &num_bigint::BigInt, _bits: usize) -> Self {
        use num_traits::ToPrimitive;
        Complex::new(c.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn to_c64(&self) -> Complex<f64> {
        *self
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

#[derive(Clone, Debug)]
pub(crate) struct MpComplex {
    re: BigFloat,
    im: BigFloat,
    bits: usize,
}

/// `f64` value of a `BigFloat`, truncated to the top mantissa word.
pub(crate) fn big_to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    if x.is_zero() {
        return 0.0;
    }
    let Some((words, _, sign, exp, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    // Mantissa is normalized: value = 0.mantissa * 2^exp with the top bit set.
    let top = words.last().copied().unwrap_or(0) as f64 / 2f64.powi(Word::BITS as i32);
    let mag = top * 2f64.powi(exp);
    if sign == Sign::Neg {
        -mag
    } else {
        mag
    }
}

impl MpComplex {
    fn new(re: BigFloat, im: BigFloat, bits: usize) -> Self {
        Self { re, im, bits }
    }

    fn norm_sqr(&self) -> BigFloat {
        let p = self.bits;
        self.re
            .mul(&self.re, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
    }
}

impl Field for MpComplex {
    fn from_c64(z: Complex<f64>, bits: usize) -> Self {
        Self::new(BigFloat::from_f64(z.re, bits), BigFloat::from_f64(z.im, bits), bits)
    }

    fn from_int(c: &num_bigint::BigInt, bits: usize) -> Self {
        use num_traits::ToPrimitive;
        let re = match c.to_i128() {
            Some(v) => BigFloat::from_i128(v, bits),
            None => {
                let mut consts = astro_float::Consts::new().expect("constant cache");
                BigFloat::parse(&c.to_string(), astro_float::Radix::Dec, bits, RM, &mut consts)
            }
        };
        Self::new(re, BigFloat::from_f64(0.0, bits), bits)
    }

    fn to_c64(&self) -> Complex<f64> {
        Complex::new(big_to_f64(&self.re), big_to_f64(&self.im))
    }

    fn add(&self, o: &Self) -> Self {
        let p = self.bits.max(o.bits);
        Self::new(self.re.add(&o.re, p, RM), self.im.add(&o.im, p, RM), p)
    }

    fn sub(&self, o: &Self) -> Self {
        let p = self.bits.max(o.bits);
        Self::new(self.re.sub(&o.re, p, RM), self.im.sub(&o.im, p, RM), p)
    }

    fn mul(&self, o: &Self) -> Self {
        let p = self.bits.max(o.bits);
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        Self::new(re, im, p)
    }

    fn div(&self, o: &Self) -> Self {
        let p = self.bits.max(o.bits);
        let den = o.norm_sqr();
        let re = self.re.mul(&o.re, p, RM).add(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.im.mul(&o.re, p, RM).sub(&self.re.mul(&o.im, p, RM), p, RM);
        Self::new(re.div(&den, p, RM), im.div(&den, p, RM), p)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_round_trip() {
        for x in [1.0, -1.0, 0.5, 3.25, -1e-30, 6.02e23, 1.0 / 3.0] {
            assert_eq!(big_to_f64(&BigFloat::from_f64(x, 128)), x);
        }
        assert_eq!(big_to_f64(&BigFloat::from_f64(0.0, 128)), 0.0);
    }

    #[test]
    fn division_beyond_double_precision() {
        let one = MpComplex::from_c64(Complex::new(1.0, 0.0), 256);
        let three = MpComplex::from_c64(Complex::new(3.0, 0.0), 256);
        let third = one.div(&three);
        // 1 - 3 * (1/3) is at the 256-bit rounding level, far below f64 epsilon.
        let resid = one.sub(&third.mul(&three)).to_c64().norm();
        assert!(resid < 1e-70, "{resid}");
        let i = MpComplex::from_c64(Complex::new(0.0, 1.0), 128);
        assert_eq!(i.mul(&i).to_c64(), Complex::new(-1.0, 0.0));
    }

    #[test]
    fn integer_lift() {
        let big: num_bigint::BigInt = "123456789012345678901234567890".parse().unwrap();
        let z = MpComplex::from_int(&big, 256);
        assert!((z.to_c64().re - 1.2345678901234568e29).abs() < 1e14);
    }
}
