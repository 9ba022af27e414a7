//! The verification suite behind `dilatation verify`.

use dilatation::families::{
    self, classify, closed_form_poly, dilatation, dilatation_closed_form, kernel_vector, minimizer, r_matrix,
    r_poly, singularity_data, transition_matrix, Family, FamilyParams, TnClass,
};
use dilatation::horseshoe::{code_to_family, family_to_codes, Form};
use dilatation::spectral::{count_outside_unit_with, largest_real_root, mahler_measure_with, AberthOptions};
use dilatation::{IntPolynomial, RootEnclosure, SalemBoydSpec, Sign, Symmetry};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::render::json_f64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Depth {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Upper bound for `m` and `n`.
    pub mn: u32,
    /// Upper bound for `g` in the minimizer checks.
    pub g: u32,
    /// Upper bound for the Salem–Boyd exponent.
    pub sb_n: usize,
    pub tol: f64,
    pub aberth: AberthOptions,
}

impl Limits {
    pub fn new(depth: Depth, tol: f64, aberth: AberthOptions) -> Self {
        let (mn, g, sb_n) = match depth {
            Depth::Quick => (4, 5, 10),
            Depth::Full => (10, 50, 30),
        };
        Self {
            mn,
            g,
            sb_n,
            tol,
            aberth,
        }
    }
}

#[derive(Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub range: String,
    pub passed: bool,
    /// Smallest slack observed: separation for strict inequalities, tolerance
    /// minus error for approximate equalities, `null` for exact identities.
    pub worst_margin: serde_json::Value,
    pub detail: String,
}

#[derive(Serialize)]
pub struct Summary {
    pub passed: usize,
    pub total: usize,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub depth: Depth,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }
}

/// Running minimum of the slack, plus a failure message if any.
#[derive(Default)]
struct Probe {
    margin: Option<f64>,
    failure: Option<String>,
    cases: usize,
}

impl Probe {
    fn case(&mut self) {
        self.cases += 1;
    }

    fn slack(&mut self, s: f64) {
        self.margin = Some(self.margin.map_or(s, |m| m.min(s)));
    }

    fn require(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok && self.failure.is_none() {
            self.failure = Some(msg());
        }
    }

    /// `a` strictly below `b`, certified by disjoint enclosures.
    fn below(&mut self, a: &RootEnclosure, b: &RootEnclosure, what: impl FnOnce() -> String) {
        self.case();
        let gap = (&b.lower - &a.upper).to_f64().unwrap_or(f64::NAN);
        self.slack(gap);
        self.require(a.is_below(b), what);
    }

    fn within(&mut self, err: f64, tol: f64, what: impl FnOnce() -> String) {
        self.case();
        self.slack(tol - err);
        self.require(err <= tol, what);
    }

    fn exact(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.case();
        self.require(ok, what);
    }
}

type Outcome = Result<Probe, String>;

fn err(e: dilatation::Error) -> String {
    e.to_string()
}

fn pa_params(lim: &Limits) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for family in [Family::Beta, Family::Sigma] {
        for m in 1..=lim.mn {
            for n in 1..=lim.mn {
                let p = FamilyParams::new(family, m, n).unwrap();
                if classify(&p) == TnClass::PseudoAnosov {
                    out.push(p);
                }
            }
        }
    }
    out
}

fn lam(p: FamilyParams, tol: f64) -> Result<RootEnclosure, String> {
    dilatation_closed_form(&p, tol)
        .map_err(err)?
        .root
        .ok_or_else(|| format!("{p} has no dilatation"))
}

fn overlap(a: &RootEnclosure, b: &RootEnclosure) -> bool {
    a.lower <= b.upper && b.lower <= a.upper
}

fn check_classification(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for m in 1..=lim.mn {
        for n in 1..=lim.mn {
            pr.exact(classify(&FamilyParams::beta(m, n).unwrap()) == TnClass::PseudoAnosov, || {
                format!("beta({m},{n}) not pseudo-Anosov")
            });
            let want = match m.abs_diff(n) {
                0 => TnClass::Periodic,
                1 => TnClass::Reducible,
                _ => TnClass::PseudoAnosov,
            };
            let got = dilatation(&FamilyParams::sigma(m, n).unwrap(), lim.tol).map_err(err)?;
            pr.exact(got.tn == want && got.root.is_some() == (want == TnClass::PseudoAnosov), || {
                format!("sigma({m},{n}) is {}, expected {want}", got.tn)
            });
        }
    }
    Ok(pr)
}

fn check_r_matrix(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for m in 1..=lim.mn {
        let cp = r_matrix(m).map_err(err)?.char_poly().map_err(err)?;
        pr.exact(cp == r_poly(m).map_err(err)?, || format!("char_poly(R_{m}) != R_{m}"));
    }
    Ok(pr)
}

fn check_matrix_agreement(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for p in pa_params(lim) {
        let closed = closed_form_poly(&p).map_err(err)?;
        let cp = transition_matrix(&p).map_err(err)?.char_poly().map_err(err)?;
        let a = largest_real_root(&closed, &BigRational::one(), lim.tol).map_err(err)?;
        let b = largest_real_root(&cp, &BigRational::one(), lim.tol).map_err(err)?;
        pr.within((a.witness - b.witness).abs(), lim.tol, || format!("{p}: {} vs {}", a.witness, b.witness));
    }
    Ok(pr)
}

fn check_charpoly_exact(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for p in pa_params(lim) {
        let closed = closed_form_poly(&p).map_err(err)?;
        let cp = transition_matrix(&p).map_err(err)?.char_poly().map_err(err)?;
        pr.exact(cp == closed, || format!("{p}: char poly differs from the closed form"));
    }
    Ok(pr)
}

fn check_kernel_vector(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for p in pa_params(lim).into_iter().filter(|p| p.family == Family::Sigma) {
        let s = transition_matrix(&p).map_err(err)?;
        let w = kernel_vector(p.m, p.n).map_err(err)?;
        pr.exact(s.mul_vec(&w) == w, || format!("{p}: S'w != w"));
    }
    Ok(pr)
}

fn check_irreducible(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for p in pa_params(lim) {
        let support = transition_matrix(&p).map_err(err)?.abs();
        pr.exact(support.is_irreducible(), || format!("{p}: support is reducible"));
    }
    Ok(pr)
}

fn check_symmetry(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for p in pa_params(lim) {
        let swapped = FamilyParams::new(p.family, p.n, p.m).unwrap();
        let (a, b) = (lam(p, lim.tol)?, lam(swapped, lim.tol)?);
        pr.within((a.witness - b.witness).abs(), 1e-9, || format!("{p}: {} vs {}", a.witness, b.witness));
    }
    Ok(pr)
}

fn check_beta_decreasing(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for m in 1..=lim.mn {
        for n in 1..lim.mn {
            let (a, b) = (lam(FamilyParams::beta(m, n + 1).unwrap(), lim.tol)?, lam(FamilyParams::beta(m, n).unwrap(), lim.tol)?);
            pr.below(&a, &b, || format!("beta({m},{}) !< beta({m},{n})", n + 1));
        }
    }
    Ok(pr)
}

fn check_sigma_increasing(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for m in 1..=lim.mn {
        for n in m + 2..lim.mn {
            let (a, b) = (lam(FamilyParams::sigma(m, n).unwrap(), lim.tol)?, lam(FamilyParams::sigma(m, n + 1).unwrap(), lim.tol)?);
            pr.below(&a, &b, || format!("sigma({m},{n}) !< sigma({m},{})", n + 1));
        }
    }
    Ok(pr)
}

fn check_beta_exceeds_sigma(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for p in pa_params(lim).into_iter().filter(|p| p.family == Family::Sigma) {
        let s = lam(p, lim.tol)?;
        let b = lam(FamilyParams::beta(p.m, p.n).unwrap(), lim.tol)?;
        pr.below(&s, &b, || format!("sigma({},{}) !< beta({},{})", p.m, p.n, p.m, p.n));
    }
    Ok(pr)
}

fn check_minimizer_comparisons(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for m in 2..=lim.mn {
        let bmm = lam(FamilyParams::beta(m, m).unwrap(), lim.tol)?;
        let smin = lam(FamilyParams::sigma(m - 1, m + 1).unwrap(), lim.tol)?;
        pr.below(&smin, &bmm, || format!("sigma({},{}) !< beta({m},{m})", m - 1, m + 1));
        for k in 1..m {
            let other = lam(FamilyParams::beta(m - k, m + k).unwrap(), lim.tol)?;
            pr.below(&bmm, &other, || format!("beta({m},{m}) !< beta({},{})", m - k, m + k));
        }
    }
    Ok(pr)
}

fn check_t23_s14(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    let t23 = closed_form_poly(&FamilyParams::beta(2, 3).unwrap()).map_err(err)?;
    let s14 = closed_form_poly(&FamilyParams::sigma(1, 4).unwrap()).map_err(err)?;
    let t2m1 = IntPolynomial::from_i64(&[-1, 0, 1]);
    let t2p1 = IntPolynomial::from_i64(&[1, 0, 1]);
    pr.exact(&t23 * &t2m1 == &s14 * &t2p1, || "T_{2,3}(t^2-1) != S_{1,4}(t^2+1)".into());
    let (a, b) = (lam(FamilyParams::beta(2, 3).unwrap(), lim.tol)?, lam(FamilyParams::sigma(1, 4).unwrap(), lim.tol)?);
    pr.exact(overlap(&a, &b), || "dilatation enclosures are disjoint".into());
    Ok(pr)
}

fn check_euler_poincare(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for p in pa_params(lim) {
        let s = singularity_data(&p).map_err(err)?.euler_poincare_sum();
        pr.exact(s == 4, || format!("{p}: sum = {s}"));
    }
    Ok(pr)
}

fn check_mahler_rm(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for m in 1..=lim.mn {
        let mm = mahler_measure_with(&r_poly(m).map_err(err)?, 1e-10, lim.aberth).map_err(err)?;
        pr.within((mm.value - 2.0).abs() + mm.error_bound, 1e-8, || format!("M(R_{m}) = {}", mm.value));
    }
    Ok(pr)
}

fn salem_boyd(base: &IntPolynomial, n: usize, sign: Sign) -> Result<IntPolynomial, String> {
    IntPolynomial::salem_boyd(&SalemBoydSpec {
        base: base.clone(),
        exponent: n,
        sign,
    })
    .map_err(err)
}

fn check_root_count(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for m in 1..=lim.mn.min(6) {
        let base = r_poly(m).map_err(err)?;
        let bound = count_outside_unit_with(&base, lim.tol, lim.aberth).map_err(err)?.outside;
        for n in 1..=lim.sb_n {
            for sign in [Sign::Plus, Sign::Minus] {
                let q = salem_boyd(&base, n, sign)?;
                let c = count_outside_unit_with(&q, lim.tol, lim.aberth).map_err(err)?;
                pr.case();
                pr.slack(bound as f64 - c.outside as f64);
                pr.require(c.outside <= bound, || format!("N(Q_{n}) = {} > N(R_{m}) = {bound}", c.outside));
            }
        }
    }
    Ok(pr)
}

fn check_salem_boyd_symmetry(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for m in 1..=lim.mn {
        let base = r_poly(m).map_err(err)?;
        for n in 1..=lim.sb_n {
            for (sign, want) in [(Sign::Plus, Symmetry::Reciprocal), (Sign::Minus, Symmetry::AntiReciprocal)] {
                let got = salem_boyd(&base, n, sign)?.symmetry_class().map_err(err)?;
                pr.exact(got == want, || format!("Q_{n} for R_{m}: {got:?}"));
            }
        }
    }
    Ok(pr)
}

fn check_minimizer_bounds(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for g in 2..=lim.g {
        let r = minimizer(g, lim.tol).map_err(err)?;
        let root = r.result.root.as_ref().expect("pseudo-Anosov");
        pr.below(&r.lower_bound, root, || format!("g={g}: lower bound"));
        pr.below(root, &r.upper_bound, || format!("g={g}: upper bound"));
        pr.exact(r.bounds_certified() && root.certified, || format!("g={g}: not certified"));
    }
    Ok(pr)
}

fn check_minimizer_equation(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for g in 2..=lim.g {
        let r = minimizer(g, lim.tol).map_err(err)?;
        let root = r.result.root.as_ref().expect("pseudo-Anosov");
        pr.exact(overlap(root, &r.minimizer_poly_root), || {
            format!("g={g}: enclosures of S_(g-1,g+1) and the minimizer equation are disjoint")
        });
        pr.within(r.equation_residual, 1e-8, || format!("g={g}: residual {}", r.equation_residual));
        pr.within(r.quadratic_residual, 1e-8, || format!("g={g}: residual {}", r.quadratic_residual));
    }
    Ok(pr)
}

fn check_orientable(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for p in pa_params(lim) {
        let got = families::orientable_lift(&p).map_err(err)?;
        let want = match p.family {
            Family::Beta => p.m % 2 == 1 && p.n % 2 == 1,
            Family::Sigma => (p.m + p.n) % 2 == 0,
        };
        pr.exact(got == want, || format!("{p}: orientable_lift = {got}"));
    }
    Ok(pr)
}

fn check_horseshoe(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    for m in 1..=lim.mn.min(5) {
        for n in m + 2..=m + 2 + lim.mn {
            let (a, b) = family_to_codes(m, n).map_err(err)?;
            for (code, form) in [(a, Form::A), (b, Form::B)] {
                let found = code_to_family(&code).map_err(err)?.map(|f| (f.m, f.n, f.form));
                pr.exact(found == Some((m, n, form)) && code.len() as u32 == m + n + 1, || {
                    format!("{code}: {found:?}")
                });
            }
        }
    }
    Ok(pr)
}

fn check_anchors(lim: &Limits) -> Outcome {
    let mut pr = Probe::default();
    let zhirov = largest_real_root(&IntPolynomial::from_i64(&[1, -1, -1, -1, 1]), &BigRational::one(), lim.tol)
        .map_err(err)?;
    let s13 = lam(FamilyParams::sigma(1, 3).unwrap(), lim.tol)?;
    pr.within((s13.witness - zhirov.witness).abs(), 1e-9, || "sigma(1,3) vs Zhirov root".into());
    let s25 = lam(FamilyParams::sigma(2, 5).unwrap(), lim.tol)?;
    pr.within((s25.witness - 1.5823).abs(), 5e-5, || format!("sigma(2,5) = {}", s25.witness));
    let s46 = lam(FamilyParams::sigma(4, 6).unwrap(), lim.tol)?;
    pr.within((s46.witness.ln() - 0.240965).abs(), 1e-6, || format!("log sigma(4,6) = {}", s46.witness.ln()));
    let r2 = largest_real_root(&r_poly(2).map_err(err)?, &BigRational::one(), lim.tol).map_err(err)?;
    pr.within((r2.witness - 1.69562).abs(), 1e-5, || format!("lambda(R_2) = {}", r2.witness));
    Ok(pr)
}

type CheckFn = fn(&Limits) -> Outcome;

fn checks(lim: &Limits) -> Vec<(&'static str, String, CheckFn)> {
    let mn = format!("1 <= m,n <= {}", lim.mn);
    let g = format!("2 <= g <= {}", lim.g);
    let sb = format!("1 <= m <= {}, 1 <= n <= {}", lim.mn.min(6), lim.sb_n);
    vec![
        ("tn_classification", mn.clone(), check_classification as CheckFn),
        ("r_matrix_char_poly", format!("1 <= m <= {}", lim.mn), check_r_matrix),
        ("matrix_closed_form_root_agreement", mn.clone(), check_matrix_agreement),
        ("matrix_char_poly_exact", mn.clone(), check_charpoly_exact),
        ("sigma_fixed_vector", mn.clone(), check_kernel_vector),
        ("transition_support_irreducible", mn.clone(), check_irreducible),
        ("dilatation_symmetry", mn.clone(), check_symmetry),
        ("beta_decreasing_in_n", mn.clone(), check_beta_decreasing),
        ("sigma_increasing_in_n", mn.clone(), check_sigma_increasing),
        ("beta_exceeds_sigma", mn.clone(), check_beta_exceeds_sigma),
        ("minimizer_comparisons", format!("2 <= m <= {}", lim.mn), check_minimizer_comparisons),
        ("t23_s14_identity", "beta(2,3), sigma(1,4)".into(), check_t23_s14),
        ("euler_poincare_balance", mn.clone(), check_euler_poincare),
        ("orientable_lift", mn.clone(), check_orientable),
        ("mahler_r_m", format!("1 <= m <= {}", lim.mn), check_mahler_rm),
        ("salem_boyd_root_count", sb.clone(), check_root_count),
        ("salem_boyd_symmetry", format!("1 <= m <= {}, 1 <= n <= {}", lim.mn, lim.sb_n), check_salem_boyd_symmetry),
        ("minimizer_bounds", g.clone(), check_minimizer_bounds),
        ("minimizer_equation", g, check_minimizer_equation),
        ("horseshoe_round_trip", format!("1 <= m <= {}", lim.mn.min(5)), check_horseshoe),
        ("numeric_anchors", "sigma(1,3), sigma(2,5), sigma(4,6), R_2".into(), check_anchors),
    ]
}

pub fn run(depth: Depth, lim: &Limits) -> VerifyReport {
    let results: Vec<CheckResult> = checks(lim)
        .into_par_iter()
        .map(|(id, range, f)| {
            let (passed, worst_margin, detail) = match f(lim) {
                Ok(pr) => match pr.failure {
                    None => (true, pr.margin, format!("{} cases", pr.cases)),
                    Some(msg) => (false, pr.margin, msg),
                },
                Err(msg) => (false, None, msg),
            };
            CheckResult {
                id,
                range,
                passed,
                worst_margin: worst_margin.map_or(serde_json::Value::Null, json_f64),
                detail,
            }
        })
        .collect();
    let passed = results.iter().filter(|c| c.passed).count();
    VerifyReport {
        depth,
        summary: Summary {
            passed,
            total: results.len(),
        },
        checks: results,
    }
}
