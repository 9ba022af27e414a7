//! Acceptance criteria. One line per criterion, with the tolerances and runtime
//! budgets pinned. Run with `cargo test -p dilatation --test acceptance`.

use std::io::Write;
use std::time::{Duration, Instant};

use dilatation::families::{
    self, closed_form_poly, dilatation, dilatation_closed_form, kernel_vector, minimizer, r_matrix,
    r_poly, singularity_data, transition_matrix, FamilyParams, TnClass,
};
use dilatation::horseshoe::{code_to_family, family_to_codes, Form};
use dilatation::spectral::{count_outside_unit, largest_real_root, mahler_measure};
use dilatation::{IntPolynomial, RootEnclosure, SalemBoydSpec, Sign, Symmetry};
use num_rational::BigRational;
use num_traits::One;

const TOL: f64 = 1e-9;

struct Outcome {
    id: u32,
    name: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
    budget: Duration,
}

fn run(id: u32, name: &'static str, budget_secs: f64, check: impl FnOnce() -> Result<String, String>) -> Outcome {
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs_f64(budget_secs);
    let (ok, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    let passed = ok && elapsed < budget;
    let detail = if ok && !passed {
        format!("{detail}; over runtime budget")
    } else {
        detail
    };
    let o = Outcome {
        id,
        name,
        passed,
        detail,
        elapsed,
        budget,
    };
    emit(format!(
        "criterion {:>2} {} {:<34} {:>8.3}s / {:>5.1}s  {}",
        o.id,
        if o.passed { "PASS" } else { "FAIL" },
        o.name,
        o.elapsed.as_secs_f64(),
        o.budget.as_secs_f64(),
        o.detail
    ));
    o
}

/// Written past the test harness's capture so the lines appear in plain `cargo test` output.
fn emit(line: String) {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").and_then(|()| out.flush()).ok();
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn lam(params: FamilyParams) -> Result<RootEnclosure, String> {
    dilatation_closed_form(&params, TOL)
        .map_err(|e| e.to_string())?
        .root
        .ok_or_else(|| format!("{params} has no dilatation"))
}

/// Plain double-precision bisection for a sign change on `[lo, hi]`.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    assert!(flo * f(hi) < 0.0, "no sign change on [{lo}, {hi}]");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) == (flo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn c1_zhirov() -> Result<String, String> {
    let zhirov = p(&[1, -1, -1, -1, 1]);
    let oracle = bisect(|x| x.powi(4) - x.powi(3) - x * x - x + 1.0, 1.5, 2.0);
    let certified = largest_real_root(&zhirov, &BigRational::one(), TOL).map_err(|e| e.to_string())?;
    let d = dilatation(&FamilyParams::sigma(1, 3).unwrap(), TOL).map_err(|e| e.to_string())?;
    let lambda = d.lambda().unwrap();
    ensure((lambda - oracle).abs() <= 1e-9, || format!("λ={lambda} vs bisection {oracle}"))?;
    ensure((lambda - certified.witness).abs() <= 1e-9, || {
        format!("λ={lambda} vs certified Zhirov root {}", certified.witness)
    })?;
    Ok(format!("λ(σ1,3)={lambda:.12}, Zhirov root={oracle:.12}"))
}

fn c2_sigma25() -> Result<String, String> {
    let d = dilatation(&FamilyParams::sigma(2, 5).unwrap(), TOL).map_err(|e| e.to_string())?;
    let lambda = d.lambda().unwrap();
    ensure((lambda - 1.5823).abs() <= 5e-5, || format!("λ={lambda}"))?;
    Ok(format!("λ(σ2,5)={lambda:.10}"))
}

fn c3_sigma46() -> Result<String, String> {
    let d = dilatation(&FamilyParams::sigma(4, 6).unwrap(), TOL).map_err(|e| e.to_string())?;
    let log = d.lambda().unwrap().ln();
    ensure((log - 0.240965).abs() <= 1e-6, || format!("log λ={log}"))?;
    Ok(format!("log λ(σ4,6)={log:.10}"))
}

fn c4_r2() -> Result<String, String> {
    let exact = largest_real_root(&r_poly(2).unwrap(), &BigRational::one(), TOL).map_err(|e| e.to_string())?;
    let perron = r_matrix(2).unwrap().perron_root(TOL).map_err(|e| e.to_string())?;
    ensure((exact.witness - 1.69562).abs() <= 1e-5, || format!("λ(R2)={}", exact.witness))?;
    ensure((perron.witness - exact.witness).abs() <= 2.0 * TOL, || {
        format!("Perron root {} vs char-poly root {}", perron.witness, exact.witness)
    })?;
    Ok(format!("λ(R2)={:.10}", exact.witness))
}

fn c5_mahler() -> Result<String, String> {
    let mut worst: f64 = 0.0;
    for m in 1..=12 {
        let mm = mahler_measure(&r_poly(m).unwrap(), 1e-10).map_err(|e| e.to_string())?;
        let err = (mm.value - 2.0).abs() + mm.error_bound;
        ensure(err <= 1e-8, || format!("M(R{m})={} ± {}", mm.value, mm.error_bound))?;
        worst = worst.max(err);
    }
    Ok(format!("m=1..12, worst |M-2|+bound={worst:.2e}"))
}

fn c6_identity() -> Result<String, String> {
    let t23 = closed_form_poly(&FamilyParams::beta(2, 3).unwrap()).map_err(|e| e.to_string())?;
    let s14 = closed_form_poly(&FamilyParams::sigma(1, 4).unwrap()).map_err(|e| e.to_string())?;
    ensure(t23 == s14, || {
        format!(
            "T2,3=[{t23}] != S1,4=[{s14}]; they agree only after cancelling cyclotomic factors: T2,3·(t²−1) == S1,4·(t²+1) is {}",
            &t23 * &p(&[-1, 0, 1]) == &s14 * &p(&[1, 0, 1])
        )
    })?;
    Ok("T2,3 == S1,4".into())
}

fn c7_oracle() -> Result<String, String> {
    let mut count = 0;
    for m in 1..=10u32 {
        for n in 1..=10u32 {
            for params in [FamilyParams::beta(m, n).unwrap(), FamilyParams::sigma(m, n).unwrap()] {
                if families::classify(&params) != TnClass::PseudoAnosov {
                    continue;
                }
                let closed = closed_form_poly(&params).map_err(|e| e.to_string())?;
                let matrix = transition_matrix(&params).map_err(|e| e.to_string())?;
                let cp = matrix.char_poly().map_err(|e| e.to_string())?;
                let a = largest_real_root(&closed, &BigRational::one(), TOL).map_err(|e| e.to_string())?;
                let b = largest_real_root(&cp, &BigRational::one(), TOL).map_err(|e| e.to_string())?;
                ensure((a.witness - b.witness).abs() <= TOL, || {
                    format!("{params}: {} vs {}", a.witness, b.witness)
                })?;
                ensure(matrix.abs().is_irreducible(), || format!("{params}: reducible support"))?;
                match params.family {
                    families::Family::Beta => {
                        ensure(cp == closed, || format!("{params}: char poly != T"))?;
                    }
                    families::Family::Sigma => {
                        let w = kernel_vector(m, n).map_err(|e| e.to_string())?;
                        ensure(matrix.mul_vec(&w) == w, || format!("{params}: S'w != w"))?;
                        ensure(cp == closed, || format!("{params}: char poly != S"))?;
                    }
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} pseudo-Anosov parameter pairs"))
}

fn c8_bounds() -> Result<String, String> {
    let mut narrowest = f64::INFINITY;
    for g in 2..=50 {
        let r = minimizer(g, TOL).map_err(|e| e.to_string())?;
        ensure(r.bounds_certified(), || format!("g={g}: enclosures not strictly inside"))?;
        let root = r.result.root.as_ref().unwrap();
        ensure(root.certified && r.lower_bound.certified && r.upper_bound.certified, || {
            format!("g={g}: uncertified enclosure")
        })?;
        narrowest = narrowest.min((r.lambda() - r.lower_bound.witness).min(r.upper_bound.witness - r.lambda()));
    }
    Ok(format!("g=2..50, smallest gap to a bound {narrowest:.3e}"))
}

fn c9_ordering() -> Result<String, String> {
    let mut comparisons = 0;
    let strictly_below = |a: &RootEnclosure, b: &RootEnclosure, what: String| {
        ensure(a.is_below(b), || format!("{what}: [{}, {}] vs [{}, {}]", a.witness, a.upper_f64(), b.lower_f64(), b.witness))
    };
    for m in 1..=6u32 {
        let beta: Vec<RootEnclosure> = (1..=20).map(|n| lam(FamilyParams::beta(m, n).unwrap())).collect::<Result<_, _>>()?;
        for n in 1..20usize {
            strictly_below(&beta[n], &beta[n - 1], format!("b({m},{}) < b({m},{n})", n + 1))?;
            comparisons += 1;
        }
        let mut prev: Option<RootEnclosure> = None;
        for n in m + 2..=20 {
            let s = lam(FamilyParams::sigma(m, n).unwrap())?;
            if let Some(prev) = &prev {
                strictly_below(prev, &s, format!("s({m},{}) < s({m},{n})", n - 1))?;
                comparisons += 1;
            }
            strictly_below(&s, &beta[n as usize - 1], format!("σ({m},{n}) < β({m},{n})"))?;
            comparisons += 1;
            prev = Some(s);
        }
        if m >= 2 {
            let bmm = &beta[m as usize - 1];
            let smin = lam(FamilyParams::sigma(m - 1, m + 1).unwrap())?;
            strictly_below(&smin, bmm, format!("σ({},{}) < β({m},{m})", m - 1, m + 1))?;
            comparisons += 1;
            for k in 1..m {
                let other = lam(FamilyParams::beta(m - k, m + k).unwrap())?;
                strictly_below(bmm, &other, format!("β({m},{m}) < β({},{})", m - k, m + k))?;
                comparisons += 1;
            }
        }
    }
    Ok(format!("{comparisons} strict comparisons with disjoint enclosures"))
}

struct RootCounts {
    polys: usize,
    on_circle: usize,
    /// `N(R_m)` for `m = 1..=6`.
    base: Vec<usize>,
}

/// Checks the Salem–Boyd law `N(Q_n^±) <= N(R_m)` for `m <= 6`, `n <= 30`.
fn salem_boyd_counts() -> Result<RootCounts, String> {
    let mut counts = RootCounts {
        polys: 0,
        on_circle: 0,
        base: Vec::new(),
    };
    for m in 1..=6u32 {
        let base = r_poly(m).unwrap();
        let bound = count_outside_unit(&base, TOL).map_err(|e| e.to_string())?.outside;
        counts.base.push(bound);
        for n in 1..=30usize {
            for sign in [Sign::Plus, Sign::Minus] {
                let q = IntPolynomial::salem_boyd(&SalemBoydSpec {
                    base: base.clone(),
                    exponent: n,
                    sign,
                })
                .map_err(|e| e.to_string())?;
                let census = count_outside_unit(&q, TOL).map_err(|e| e.to_string())?;
                ensure(census.outside <= bound, || {
                    format!("N(Q{n}{sign:?}) = {} > N(R{m}) = {bound}", census.outside)
                })?;
                ensure(census.outside + census.on_circle + census.inside == q.degree().unwrap(), || {
                    format!("census of Q{n} for R{m} misses roots")
                })?;
                counts.polys += 1;
                counts.on_circle += census.on_circle;
            }
        }
    }
    Ok(counts)
}

fn c10_root_count() -> Result<String, String> {
    let counts = salem_boyd_counts()?;
    let summary = format!(
        "N(Q_n) <= N(R_m) holds for {} polynomials ({} roots on the circle reported separately)",
        counts.polys, counts.on_circle
    );
    ensure(counts.base.iter().all(|&b| b == 1), || {
        format!("{summary}, but N(R_m) for m=1..6 is {:?}, not 1", counts.base)
    })?;
    Ok(summary)
}

fn c11_properties() -> Result<String, String> {
    // Reciprocal involution on polynomials with nonzero constant term.
    for c in [&[1, 2, 3][..], &[-2, -1, 1], &[5, 0, 0, -7, 1], &[3, 1, 4, 1, 5, 9, 2, 6]] {
        let f = p(c);
        let back = f.reciprocal().and_then(|r| r.reciprocal()).map_err(|e| e.to_string())?;
        ensure(back == f, || format!("reciprocal involution fails on [{f}]"))?;
    }
    // Q_n^+ reciprocal, Q_n^- anti-reciprocal.
    for m in 1..=6 {
        for n in 1..=30 {
            for (sign, want) in [(Sign::Plus, Symmetry::Reciprocal), (Sign::Minus, Symmetry::AntiReciprocal)] {
                let q = IntPolynomial::salem_boyd(&SalemBoydSpec {
                    base: r_poly(m).unwrap(),
                    exponent: n,
                    sign,
                })
                .map_err(|e| e.to_string())?;
                ensure(q.symmetry_class().map_err(|e| e.to_string())? == want, || {
                    format!("Q{n}{sign:?} of R{m} is not {want:?}")
                })?;
            }
        }
    }
    // Euler–Poincaré balance and the symmetry of the dilatation.
    for m in 1..=8u32 {
        for n in 1..=8u32 {
            for params in [FamilyParams::beta(m, n).unwrap(), FamilyParams::sigma(m, n).unwrap()] {
                if families::classify(&params) != TnClass::PseudoAnosov {
                    continue;
                }
                let s = singularity_data(&params).map_err(|e| e.to_string())?;
                ensure(s.euler_poincare_sum() == 4, || format!("{params}: Euler–Poincaré sum {}", s.euler_poincare_sum()))?;
                let swapped = FamilyParams::new(params.family, n, m).unwrap();
                let (a, b) = (lam(params)?, lam(swapped)?);
                ensure((a.witness - b.witness).abs() <= 1e-9, || format!("{params}: {} vs {}", a.witness, b.witness))?;
            }
        }
    }
    // Residual of the minimizer equation.
    let mut worst: f64 = 0.0;
    for g in 2..=50 {
        let r = minimizer(g, TOL).map_err(|e| e.to_string())?;
        ensure(r.equation_residual < 1e-8, || format!("g={g}: residual {}", r.equation_residual))?;
        worst = worst.max(r.equation_residual);
    }
    // Horseshoe round trip.
    for m in 1..=5 {
        for n in m + 2..=12 {
            let (a, b) = family_to_codes(m, n).map_err(|e| e.to_string())?;
            for (code, form) in [(a, Form::A), (b, Form::B)] {
                let found = code_to_family(&code).map_err(|e| e.to_string())?;
                ensure(found.map(|f| (f.m, f.n, f.form)) == Some((m, n, form)), || {
                    format!("round trip of {code}: {found:?}")
                })?;
            }
        }
    }
    Ok(format!("all property suites hold; worst minimizer residual {worst:.2e}"))
}

/// Criteria that cannot pass as literally stated. See the README for the analysis.
const KNOWN_FAILING: &[u32] = &[6, 10];

#[test]
fn acceptance() {
    let outcomes = [
        run(1, "Zhirov anchor", 1.0, c1_zhirov),
        run(2, "λ(σ2,5) = 1.5823", 1.0, c2_sigma25),
        run(3, "log λ(σ4,6) = 0.240965", 1.0, c3_sigma46),
        run(4, "λ(R2) = 1.69562", 1.0, c4_r2),
        run(5, "M(R_m) = 2, m ≤ 12", 5.0, c5_mahler),
        run(6, "T2,3 == S1,4 structurally", 1.0, c6_identity),
        run(7, "closed form vs transition matrix", 60.0, c7_oracle),
        run(8, "(2+√3) bounds, g = 2..50", 60.0, c8_bounds),
        run(9, "monotonicity and ordering", 120.0, c9_ordering),
        run(10, "Salem–Boyd root count", 60.0, c10_root_count),
        run(11, "property suites", 30.0, c11_properties),
    ];
    let passed = outcomes.iter().filter(|o| o.passed).count();
    emit(format!("acceptance: {passed}/{} criteria pass", outcomes.len()));
    let unexpected: Vec<_> = outcomes
        .iter()
        .filter(|o| !o.passed && !KNOWN_FAILING.contains(&o.id))
        .map(|o| format!("{} ({})", o.id, o.name))
        .collect();
    assert!(unexpected.is_empty(), "failing criteria: {unexpected:?}");
}

/// The literal structural identity; fails, see [`KNOWN_FAILING`].
#[test]
#[ignore = "T2,3 and S1,4 differ by cyclotomic factors; only their dilatations agree"]
fn criterion_6_literal_identity() {
    assert_eq!(
        closed_form_poly(&FamilyParams::beta(2, 3).unwrap()).unwrap(),
        closed_form_poly(&FamilyParams::sigma(1, 4).unwrap()).unwrap()
    );
}

/// The root-count law itself, without the `N(R_m) = 1` premise of criterion 10.
#[test]
fn salem_boyd_root_count_law() {
    let counts = salem_boyd_counts().unwrap();
    // R_m has no roots inside the circle; -1 is its only root on it (odd m).
    let expected: Vec<usize> = (1..=6).map(|m| if m % 2 == 0 { m + 1 } else { m }).collect();
    assert_eq!(counts.base, expected);
}
