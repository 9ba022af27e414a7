//! The braid families `beta(m,n)` and `sigma(m,n)`: Thurston–Nielsen type,
//! train-track transition matrices, characteristic polynomials, dilatations,
//! singularity data, and the genus-`g` minimizer.
//!
//! Sigma parameters are normalized to `m < n` before any construction; the
//! dilatation is symmetric in `(m, n)` and only that orientation has a
//! transition matrix here.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::poly::{IntPolynomial, SalemBoydSpec, Sign};
use crate::spectral::{largest_real_root, rational_from_f64, RootEnclosure};

/// Dilatation of the Lehmer (Leininger) mapping class, for comparison only.
pub const LEHMER_NUMBER: f64 = 1.176_280_818_259_917_5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Beta,
    Sigma,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Beta => "beta",
            Family::Sigma => "sigma",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "beta" | "b" => Ok(Family::Beta),
            "sigma" | "s" => Ok(Family::Sigma),
            other => Err(Error::Parse(format!("unknown family '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FamilyParams {
    pub family: Family,
    pub m: u32,
    pub n: u32,
}

impl FamilyParams {
    pub fn new(family: Family, m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParams(format!("m and n must be >= 1, got ({m}, {n})")));
        }
        Ok(Self { family, m, n })
    }

    pub fn beta(m: u32, n: u32) -> Result<Self> {
        Self::new(Family::Beta, m, n)
    }

    pub fn sigma(m: u32, n: u32) -> Result<Self> {
        Self::new(Family::Sigma, m, n)
    }

    /// Number of strands, `m + n + 1`.
    pub fn strands(&self) -> u32 {
        self.m + self.n + 1
    }

    /// `g = (m + n) / 2`, defined only for even `m + n`.
    pub fn genus(&self) -> Result<u32> {
        if (self.m + self.n).is_multiple_of(2) {
            Ok((self.m + self.n) / 2)
        } else {
            Err(Error::InvalidParams(format!(
                "g is undefined for odd m + n = {}",
                self.m + self.n
            )))
        }
    }

    /// Sigma parameters reordered so that `m <= n`; beta parameters unchanged.
    pub fn normalized(&self) -> Self {
        match self.family {
            Family::Sigma if self.m > self.n => Self {
                m: self.n,
                n: self.m,
                ..*self
            },
            _ => *self,
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.family, self.m, self.n)
    }
}

/// Thurston–Nielsen type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TnClass {
    PseudoAnosov,
    Reducible,
    Periodic,
}

impl TnClass {
    pub fn as_str(self) -> &'static str {
        match self {
            TnClass::PseudoAnosov => "pseudo_anosov",
            TnClass::Reducible => "reducible",
            TnClass::Periodic => "periodic",
        }
    }
}

impl fmt::Display for TnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn classify(params: &FamilyParams) -> TnClass {
    match params.family {
        Family::Beta => TnClass::PseudoAnosov,
        Family::Sigma => match params.m.abs_diff(params.n) {
            0 => TnClass::Periodic,
            1 => TnClass::Reducible,
            _ => TnClass::PseudoAnosov,
        },
    }
}

fn require_pa(params: &FamilyParams) -> Result<()> {
    match classify(params) {
        TnClass::PseudoAnosov => Ok(()),
        tn => Err(Error::NotPseudoAnosov {
            family: params.family.as_str(),
            m: params.m,
            n: params.n,
            tn,
        }),
    }
}

/// `R_m(t) = t^m (t - 1) - 2`.
pub fn r_poly(m: u32) -> Result<IntPolynomial> {
    if m == 0 {
        return Err(Error::InvalidParams("m must be >= 1".into()));
    }
    let m = m as usize;
    let mut coeffs = vec![BigInt::from(0); m + 2];
    coeffs[0] = BigInt::from(-2);
    coeffs[m] = BigInt::from(-1);
    coeffs[m + 1] = BigInt::one();
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Transition matrix of the graph map on the edges `e(p,1), ..., e(p,m+1)`:
/// `v_1 -> v_{m+1}`, `v_k -> v_{k-1}` for `2 <= k <= m`, `v_{m+1} -> 2 v_m + v_{m+1}`.
pub fn r_matrix(m: u32) -> Result<IntMatrix> {
    if m == 0 {
        return Err(Error::InvalidParams("m must be >= 1".into()));
    }
    let m = m as usize;
    let mut a = IntMatrix::zeros(m + 1)?;
    write_r_block(&mut a, m);
    Ok(a)
}

/// Writes the `(m+1) x (m+1)` R-block into the upper-left corner (0-based indices).
fn write_r_block(a: &mut IntMatrix, m: usize) {
    for i in 0..m - 1 {
        a.set(i, i + 1, 1);
    }
    a.set(m - 1, m, 2);
    a.set(m, 0, 1);
    a.set(m, m, 1);
}

/// `T_{m,n} = t^{n+1} R_m + (R_m)_*` for beta and
/// `S_{m,n} = t^{n+1} R_m - (R_m)_*` (with `m < n`) for sigma.
pub fn closed_form_poly(params: &FamilyParams) -> Result<IntPolynomial> {
    require_pa(params)?;
    let p = params.normalized();
    let sign = match p.family {
        Family::Beta => Sign::Plus,
        Family::Sigma => Sign::Minus,
    };
    IntPolynomial::salem_boyd(&SalemBoydSpec {
        base: r_poly(p.m)?,
        exponent: p.n as usize + 1,
        sign,
    })
}

/// The `(m+n+2) x (m+n+2)` transition matrix in the basis
/// `v_k = e(p,k)` (`k <= m`), `v_{m+1} = e(p,m+n+1)`,
/// `v_{m+1+k} = e(m+k,m+k+1)` (`k <= n`), `v_{m+n+2} = e(p,m+1)`.
///
/// The sigma matrix differs from the beta matrix in the single entry at
/// row `v_{m+n+1}`, column `v_{m+1}`, which is `-1` instead of `1`.
pub fn transition_matrix(params: &FamilyParams) -> Result<IntMatrix> {
    require_pa(params)?;
    let p = params.normalized();
    let (m, n) = (p.m as usize, p.n as usize);
    let dim = m + n + 2;
    let mut a = IntMatrix::zeros(dim)?;
    // 1-based (row, col) as in the basis description.
    let mut put = |r: usize, c: usize, v: i64| a.set(r - 1, c - 1, v);

    // Upper-left block: R_m on v_1..v_{m+1}.
    for i in 1..m {
        put(i, i + 1, 1);
    }
    put(m, m + 1, 2);
    put(m + 1, 1, 1);
    put(m + 1, m + 1, 1);
    // Coupling into the tail block.
    put(m, m + 2, 1);
    put(m, dim, 1);
    put(m + 1, m + 2, 2);
    // Tail block: v_{k+1} -> v_k along the chain v_{m+2}..v_{m+n+1}.
    for i in m + 2..m + n + 1 {
        put(i, i + 1, 1);
    }
    let flipped = match p.family {
        Family::Beta => 1,
        Family::Sigma => -1,
    };
    put(m + n + 1, m + 1, flipped);
    put(dim, m + 2, -1);
    Ok(a)
}

/// Fixed vector `w = 2(v_1 + ... + v_m) + v_{m+1} - (v_{m+2} + ... + v_{m+n+1}) + v_{m+n+2}`
/// of the sigma matrix.
pub fn kernel_vector(m: u32, n: u32) -> Result<Vec<BigInt>> {
    let p = FamilyParams::sigma(m, n)?;
    require_pa(&p)?;
    let p = p.normalized();
    let (m, n) = (p.m as usize, p.n as usize);
    let mut w = Vec::with_capacity(m + n + 2);
    w.extend(std::iter::repeat_n(BigInt::from(2), m));
    w.push(BigInt::one());
    w.extend(std::iter::repeat_n(BigInt::from(-1), n));
    w.push(BigInt::one());
    Ok(w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    MatrixCharpoly,
    BothAgree,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed_form",
            Provenance::MatrixCharpoly => "matrix_charpoly",
            Provenance::BothAgree => "both_agree",
        }
    }
}

/// Outcome of a dilatation query. `defining_poly`, `root`, and `provenance`
/// are present exactly when `tn` is pseudo-Anosov.
#[derive(Clone, Debug, PartialEq)]
pub struct DilatationResult {
    pub params: FamilyParams,
    pub tn: TnClass,
    pub defining_poly: Option<IntPolynomial>,
    pub root: Option<RootEnclosure>,
    pub provenance: Option<Provenance>,
}

impl DilatationResult {
    pub fn lambda(&self) -> Option<f64> {
        self.root.as_ref().map(|r| r.witness)
    }
}

fn one() -> BigRational {
    BigRational::one()
}

/// Dilatation from the closed-form polynomial, cross-validated against the
/// characteristic polynomial of the transition matrix.
pub fn dilatation(params: &FamilyParams, tol: f64) -> Result<DilatationResult> {
    let tn = classify(params);
    if tn != TnClass::PseudoAnosov {
        return Ok(DilatationResult {
            params: *params,
            tn,
            defining_poly: None,
            root: None,
            provenance: None,
        });
    }
    let poly = closed_form_poly(params)?;
    let root = largest_real_root(&poly, &one(), tol)?;
    let charpoly = transition_matrix(params)?.char_poly()?;
    let matrix_root = largest_real_root(&charpoly, &one(), tol)?;
    let gap = (&root.lower + &root.upper - &matrix_root.lower - &matrix_root.upper) / BigInt::from(2);
    if gap.abs() > rational_from_f64(2.0 * tol)? {
        return Err(Error::CrossCheck(format!(
            "{params}: closed form root {} vs matrix root {}",
            root.witness, matrix_root.witness
        )));
    }
    Ok(DilatationResult {
        params: *params,
        tn,
        defining_poly: Some(poly),
        root: Some(root),
        provenance: Some(Provenance::BothAgree),
    })
}

/// Dilatation from the closed-form polynomial alone.
pub fn dilatation_closed_form(params: &FamilyParams, tol: f64) -> Result<DilatationResult> {
    let tn = classify(params);
    if tn != TnClass::PseudoAnosov {
        return dilatation(params, tol);
    }
    let poly = closed_form_poly(params)?;
    let root = largest_real_root(&poly, &one(), tol)?;
    Ok(DilatationResult {
        params: *params,
        tn,
        defining_poly: Some(poly),
        root: Some(root),
        provenance: Some(Provenance::ClosedForm),
    })
}

/// Prong counts of the invariant foliations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityData {
    pub marked_point_prongs: u32,
    pub marked_point_count: u32,
    pub p_prongs: u32,
    pub q_prongs: Option<u32>,
    pub p_infinity_prongs: u32,
}

impl SingularityData {
    /// `sum (2 - prongs)` over all singularities; equals 4 on the sphere.
    pub fn euler_poincare_sum(&self) -> i64 {
        let term = |k: u32| 2 - i64::from(k);
        i64::from(self.marked_point_count) * term(self.marked_point_prongs)
            + term(self.p_prongs)
            + self.q_prongs.map_or(0, term)
            + term(self.p_infinity_prongs)
    }
}

pub fn singularity_data(params: &FamilyParams) -> Result<SingularityData> {
    require_pa(params)?;
    let p = params.normalized();
    Ok(match p.family {
        Family::Beta => SingularityData {
            marked_point_prongs: 1,
            marked_point_count: p.strands(),
            p_prongs: p.m + 1,
            q_prongs: Some(p.n + 1),
            p_infinity_prongs: 1,
        },
        Family::Sigma => SingularityData {
            marked_point_prongs: 1,
            marked_point_count: p.strands(),
            p_prongs: p.m + 1,
            q_prongs: None,
            p_infinity_prongs: p.n,
        },
    })
}

/// Whether the lift to the branched double cover has orientable invariant foliations.
pub fn orientable_lift(params: &FamilyParams) -> Result<bool> {
    require_pa(params)?;
    Ok(match params.family {
        Family::Beta => params.m % 2 == 1 && params.n % 2 == 1,
        Family::Sigma => (params.m + params.n).is_multiple_of(2) && params.m.abs_diff(params.n) >= 2,
    })
}

/// `t^{2g+1} - 2t^{g+1} - 2t^g + 1`, whose largest root is `lambda_g`.
pub fn minimizer_poly(g: u32) -> IntPolynomial {
    let g = g as usize;
    &(&IntPolynomial::monomial(1, 2 * g + 1) - &IntPolynomial::monomial(2, g + 1))
        + &(&IntPolynomial::monomial(-2, g) + &IntPolynomial::one())
}

/// `t^{2k} - 4 t^k + 1`, whose largest root is `(2 + sqrt 3)^{1/k}`.
pub fn silver_root_poly(k: u32) -> IntPolynomial {
    let k = k as usize;
    &(&IntPolynomial::monomial(1, 2 * k) - &IntPolynomial::monomial(4, k)) + &IntPolynomial::one()
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinimizerReport {
    pub g: u32,
    /// Dilatation of `sigma(g-1, g+1)`.
    pub result: DilatationResult,
    /// Independent enclosure of the largest root of [`minimizer_poly`].
    pub minimizer_poly_root: RootEnclosure,
    /// `|p(lambda)|` for `p = minimizer_poly(g)` at the witness.
    pub equation_residual: f64,
    /// `|lambda^{g+1} - (lambda + 1 + sqrt(lambda^2 + lambda + 1))|` at the witness.
    pub quadratic_residual: f64,
    /// Enclosure of `(2 + sqrt 3)^{1/(g+1)}`.
    pub lower_bound: RootEnclosure,
    /// Enclosure of `(2 + sqrt 3)^{1/g}`.
    pub upper_bound: RootEnclosure,
}

impl MinimizerReport {
    /// Both enclosures of `lambda_g` agree and sit strictly between the bound enclosures.
    pub fn bounds_certified(&self) -> bool {
        let root = self.result.root.as_ref().expect("minimizer is pseudo-Anosov");
        self.lower_bound.is_below(root)
            && root.is_below(&self.upper_bound)
            && self.lower_bound.is_below(&self.minimizer_poly_root)
            && self.minimizer_poly_root.is_below(&self.upper_bound)
    }

    pub fn lambda(&self) -> f64 {
        self.result.lambda().expect("minimizer is pseudo-Anosov")
    }
}

/// Least dilatation `lambda_g` among the families with `m + n = 2g`,
/// attained by `sigma(g-1, g+1)`, with its defining-equation and bound checks.
pub fn minimizer(g: u32, tol: f64) -> Result<MinimizerReport> {
    if g < 2 {
        return Err(Error::InvalidParams(format!("minimizer requires g >= 2, got {g}")));
    }
    let params = FamilyParams::sigma(g - 1, g + 1)?;
    let result = dilatation_closed_form(&params, tol)?;
    let root = result.root.clone().expect("sigma(g-1,g+1) is pseudo-Anosov");
    let eq = minimizer_poly(g);
    let minimizer_poly_root = largest_real_root(&eq, &one(), tol)?;
    let lambda = root.witness;
    let equation_residual = eq.eval_f64(lambda).abs();
    let quadratic_residual =
        (lambda.powi(g as i32 + 1) - (lambda + 1.0 + (lambda * lambda + lambda + 1.0).sqrt())).abs();
    let lower_bound = largest_real_root(&silver_root_poly(g + 1), &one(), tol)?;
    let upper_bound = largest_real_root(&silver_root_poly(g), &one(), tol)?;
    Ok(MinimizerReport {
        g,
        result,
        minimizer_poly_root,
        equation_residual,
        quadratic_residual,
        lower_bound,
        upper_bound,
    })
}

/// `log(lambda)` of a witness value, for tables.
pub fn log_lambda(result: &DilatationResult) -> Option<f64> {
    result.root.as_ref().map(|r| r.witness.ln())
}

/// Midpoint of an enclosure as an `f64`.
pub fn enclosure_mid(e: &RootEnclosure) -> f64 {
    ((&e.lower + &e.upper) / BigInt::from(2)).to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&FamilyParams::sigma(3, 3).unwrap()), TnClass::Periodic);
        assert_eq!(classify(&FamilyParams::sigma(2, 3).unwrap()), TnClass::Reducible);
        assert_eq!(classify(&FamilyParams::sigma(3, 2).unwrap()), TnClass::Reducible);
        assert_eq!(classify(&FamilyParams::beta(7, 2).unwrap()), TnClass::PseudoAnosov);
        assert_eq!(classify(&FamilyParams::sigma(1, 3).unwrap()), TnClass::PseudoAnosov);
        assert!(FamilyParams::beta(0, 2).is_err());
    }

    #[test]
    fn r_family() {
        assert_eq!(r_poly(1).unwrap(), poly(&[-2, -1, 1]));
        assert_eq!(r_poly(2).unwrap(), poly(&[-2, 0, -1, 1]));
        for m in 1..=6 {
            assert_eq!(r_matrix(m).unwrap().char_poly().unwrap(), r_poly(m).unwrap());
        }
        assert_eq!(
            r_matrix(1).unwrap(),
            IntMatrix::from_i64_rows(&[&[0, 2], &[1, 1]]).unwrap()
        );
        assert!(r_poly(0).is_err());
    }

    #[test]
    fn closed_forms() {
        let b11 = FamilyParams::beta(1, 1).unwrap();
        assert_eq!(closed_form_poly(&b11).unwrap(), poly(&[1, -1, -4, -1, 1]));
        let s13 = FamilyParams::sigma(1, 3).unwrap();
        assert_eq!(closed_form_poly(&s13).unwrap(), poly(&[-1, 1, 2, 0, -2, -1, 1]));
        assert_eq!(
            closed_form_poly(&FamilyParams::sigma(3, 1).unwrap()).unwrap(),
            closed_form_poly(&s13).unwrap()
        );
        // T_{2,3} and S_{1,4} differ only in cyclotomic factors: (t^2+1) versus (t-1)(t+1).
        let t23 = closed_form_poly(&FamilyParams::beta(2, 3).unwrap()).unwrap();
        let s14 = closed_form_poly(&FamilyParams::sigma(1, 4).unwrap()).unwrap();
        assert_ne!(t23, s14);
        assert_eq!(&t23 * &poly(&[-1, 0, 1]), &s14 * &poly(&[1, 0, 1]));
        let err = closed_form_poly(&FamilyParams::sigma(2, 2).unwrap()).unwrap_err();
        assert!(err.to_string().contains("periodic"), "{err}");
    }

    #[test]
    fn matrices_match_closed_forms() {
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 5), (1, 3)] {
            let b = FamilyParams::beta(m, n).unwrap();
            assert_eq!(
                transition_matrix(&b).unwrap().char_poly().unwrap(),
                closed_form_poly(&b).unwrap()
            );
        }
        let b22 = transition_matrix(&FamilyParams::beta(2, 2).unwrap()).unwrap();
        assert_eq!(b22.block(0..3).unwrap(), r_matrix(2).unwrap());
    }

    #[test]
    fn sigma_matrix_fixed_vector() {
        let s13 = transition_matrix(&FamilyParams::sigma(1, 3).unwrap()).unwrap();
        let w = kernel_vector(1, 3).unwrap();
        assert_eq!(w, [2, 1, -1, -1, -1, 1].map(BigInt::from).to_vec());
        assert_eq!(s13.mul_vec(&w), w);
        assert_eq!(
            kernel_vector(1, 4).unwrap(),
            [2, 1, -1, -1, -1, -1, 1].map(BigInt::from).to_vec()
        );
        // char poly carries the eigenvalue 1
        let cp = s13.char_poly().unwrap();
        assert_eq!(cp.eval_int(&BigInt::one()), BigInt::from(0));
        assert!(kernel_vector(2, 3).is_err());
    }

    #[test]
    fn singularity_examples() {
        let b = singularity_data(&FamilyParams::beta(2, 3).unwrap()).unwrap();
        assert_eq!((b.p_prongs, b.q_prongs, b.p_infinity_prongs, b.marked_point_count), (3, Some(4), 1, 6));
        assert_eq!(b.euler_poincare_sum(), 4);
        let s = singularity_data(&FamilyParams::sigma(1, 3).unwrap()).unwrap();
        assert_eq!((s.p_prongs, s.q_prongs, s.p_infinity_prongs, s.marked_point_count), (2, None, 3, 5));
        assert_eq!(s.euler_poincare_sum(), 4);
        assert_eq!(singularity_data(&FamilyParams::sigma(3, 1).unwrap()).unwrap(), s);
        assert!(singularity_data(&FamilyParams::sigma(4, 4).unwrap()).is_err());
    }

    #[test]
    fn orientability() {
        assert!(orientable_lift(&FamilyParams::beta(1, 1).unwrap()).unwrap());
        assert!(!orientable_lift(&FamilyParams::beta(1, 2).unwrap()).unwrap());
        assert!(orientable_lift(&FamilyParams::sigma(4, 6).unwrap()).unwrap());
        assert!(!orientable_lift(&FamilyParams::sigma(1, 4).unwrap()).unwrap());
        assert!(orientable_lift(&FamilyParams::sigma(2, 3).unwrap()).is_err());
    }

    #[test]
    fn dilatation_examples() {
        let d = dilatation(&FamilyParams::beta(1, 1).unwrap(), 1e-9).unwrap();
        assert!((d.lambda().unwrap() - 2.618_033_988_7).abs() < 1e-9);
        assert_eq!(d.provenance, Some(Provenance::BothAgree));
        let d = dilatation(&FamilyParams::sigma(1, 3).unwrap(), 1e-9).unwrap();
        assert!((d.lambda().unwrap() - 1.72208).abs() < 1e-5);
        let d = dilatation(&FamilyParams::sigma(2, 2).unwrap(), 1e-9).unwrap();
        assert_eq!(d.tn, TnClass::Periodic);
        assert!(d.root.is_none() && d.defining_poly.is_none());
    }

    #[test]
    fn minimizer_g2() {
        let r = minimizer(2, 1e-9).unwrap();
        assert!((r.lambda() - 1.72208).abs() < 1e-5);
        assert!(r.bounds_certified());
        assert!((r.lower_bound.witness - 1.55113).abs() < 1e-5);
        assert!((r.upper_bound.witness - 1.93185).abs() < 1e-5);
        assert!(r.equation_residual < 1e-8);
        assert!(r.quadratic_residual < 1e-8);
        assert!(minimizer(1, 1e-9).is_err());
    }

    #[test]
    fn genus() {
        assert_eq!(FamilyParams::sigma(4, 6).unwrap().genus().unwrap(), 5);
        assert!(FamilyParams::sigma(1, 4).unwrap().genus().is_err());
    }
}
