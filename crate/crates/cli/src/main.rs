//! `dilatation`: dilatations of the braid families, Salem–Boyd tables,
//! horseshoe codes, and the verification suite.
//!
//! Exit codes: 0 success, 1 failed verification or internal error,
//! 2 invalid parameters or input, 3 closed-form/matrix disagreement.

mod render;
mod verify;

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dilatation::families::{dilatation, Family, FamilyParams};
use dilatation::horseshoe::{canonicalize, code_to_family, FamilyMatch};
use dilatation::spectral::{count_outside_unit_with, largest_real_root, mahler_measure_with, AberthOptions, MAX_BITS};
use dilatation::{Error, IntPolynomial, SalemBoydSpec, Sign};
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use render::{DilatationJson, SalemBoydJson, SalemBoydLimit, SalemBoydRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(name = "dilatation", version, about = "Certified dilatations of the braids beta(m,n) and sigma(m,n)")]
struct Cli {
    /// Width of root enclosures and numeric tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Shorthand for `--format csv`.
    #[arg(long, global = true)]
    csv: bool,

    /// Starting working precision in bits for complex root finding.
    #[arg(long, global = true, default_value_t = dilatation::spectral::DEFAULT_BITS)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dilatation of a single braid.
    Dilatation {
        #[arg(value_parser = parse_family)]
        family: Family,
        m: u32,
        n: u32,
    },
    /// Dilatations over a grid of parameters, e.g. `table sigma 1..3 1..8`.
    Table {
        #[arg(value_parser = parse_family)]
        family: Family,
        /// Inclusive range `a..b`, or a single value.
        #[arg(value_parser = parse_range)]
        m_range: RangeInclusive<u32>,
        #[arg(value_parser = parse_range)]
        n_range: RangeInclusive<u32>,
    },
    /// Mahler measure, largest real root, and root census along a Salem–Boyd sequence.
    SalemBoyd {
        /// File holding the monic base polynomial, as ascending coefficients `c0,c1,...`.
        poly_file: PathBuf,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, default_value = "plus", value_parser = parse_sign)]
        sign: Sign,
    },
    /// Run the verification suite.
    Verify {
        #[arg(value_enum, default_value_t = verify::Depth::Quick)]
        depth: verify::Depth,
    },
    /// Family parameters of a horseshoe periodic-orbit code.
    Horseshoe { code: String },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let bad = || format!("malformed range '{s}', expected a..b");
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(a.trim().parse().map_err(|_| bad())?..=b.trim().parse().map_err(|_| bad())?)
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            Ok(v..=v)
        }
    }
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParams(_)
            | Error::Parse(_)
            | Error::NotMonic(_)
            | Error::Tolerance(_)
            | Error::ZeroPolynomial
            | Error::NotPseudoAnosov { .. } => 2,
            Error::CrossCheck(_) => 3,
            _ => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

struct Ctx {
    tol: f64,
    format: Format,
    aberth: AberthOptions,
}

fn emit_json<T: Serialize>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn io_failure(e: io::Error) -> Failure {
    Failure {
        code: 1,
        message: e.to_string(),
    }
}

fn cmd_dilatation(ctx: &Ctx, out: &mut impl Write, family: Family, m: u32, n: u32) -> Result<(), Failure> {
    let d = dilatation(&FamilyParams::new(family, m, n)?, ctx.tol)?;
    match ctx.format {
        Format::Json => emit_json(out, &DilatationJson::from(&d)),
        Format::Csv => writeln!(out, "{}\n{}", render::DILATATION_CSV_HEADER, render::dilatation_csv(&d)),
    }
    .map_err(io_failure)
}

fn cmd_table(
    ctx: &Ctx,
    out: &mut impl Write,
    family: Family,
    ms: RangeInclusive<u32>,
    ns: RangeInclusive<u32>,
) -> Result<(), Failure> {
    if ms.start() == &0 || ns.start() == &0 {
        return Err(usage("m and n must be >= 1"));
    }
    let cells: Vec<(u32, u32)> = ms.flat_map(|m| ns.clone().map(move |n| (m, n))).collect();
    // The parallel collect preserves the lexicographic order of `cells`.
    let rows = cells
        .into_par_iter()
        .map(|(m, n)| dilatation(&FamilyParams::new(family, m, n)?, ctx.tol))
        .collect::<Result<Vec<_>, Error>>()?;
    match ctx.format {
        Format::Json => emit_json(out, &rows.iter().map(DilatationJson::from).collect::<Vec<_>>()),
        Format::Csv => {
            let mut text = format!("{}\n", render::DILATATION_CSV_HEADER);
            for r in &rows {
                text.push_str(&render::dilatation_csv(r));
                text.push('\n');
            }
            out.write_all(text.as_bytes())
        }
    }
    .map_err(io_failure)
}

fn lambda_above_one(f: &IntPolynomial, tol: f64) -> Result<Option<f64>, Error> {
    match largest_real_root(f, &BigRational::one(), tol) {
        Ok(r) => Ok(Some(r.witness)),
        Err(Error::NoRootAbove(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn cmd_salem_boyd(ctx: &Ctx, out: &mut impl Write, path: &PathBuf, n_max: usize, sign: Sign) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let base: IntPolynomial = text.trim().parse()?;
    if !base.is_monic() {
        return Err(Error::NotMonic(base.leading_coeff().map_or("0".into(), |c| c.to_string())).into());
    }
    let row = |n: usize| -> Result<SalemBoydRow, Error> {
        let q = IntPolynomial::salem_boyd(&SalemBoydSpec {
            base: base.clone(),
            exponent: n,
            sign,
        })?;
        let mm = mahler_measure_with(&q, ctx.tol, ctx.aberth)?;
        let census = count_outside_unit_with(&q, ctx.tol, ctx.aberth)?;
        Ok(SalemBoydRow::new(
            n,
            q.degree().unwrap_or(0),
            mm.value,
            mm.error_bound,
            lambda_above_one(&q, ctx.tol)?,
            census.outside,
            census.on_circle,
        ))
    };
    let rows = (0..=n_max).into_par_iter().map(row).collect::<Result<Vec<_>, Error>>()?;
    let limit = if base.degree() == Some(0) {
        SalemBoydLimit {
            degree: 0,
            mahler: render::json_f64(1.0),
            mahler_error: render::json_f64(0.0),
            lambda: serde_json::Value::Null,
            outside: 0,
            on_circle: 0,
        }
    } else {
        let mm = mahler_measure_with(&base, ctx.tol, ctx.aberth)?;
        let census = count_outside_unit_with(&base, ctx.tol, ctx.aberth)?;
        SalemBoydLimit {
            degree: base.degree().unwrap_or(0),
            mahler: render::json_f64(mm.value),
            mahler_error: render::json_f64(mm.error_bound),
            lambda: lambda_above_one(&base, ctx.tol)?.map_or(serde_json::Value::Null, render::json_f64),
            outside: census.outside,
            on_circle: census.on_circle,
        }
    };
    let report = SalemBoydJson {
        base: &base,
        sign: match sign {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        },
        rows,
        limit,
    };
    match ctx.format {
        Format::Json => emit_json(out, &report),
        Format::Csv => writeln!(out, "{}", render::salem_boyd_csv(&report).join("\n")),
    }
    .map_err(io_failure)
}

fn cmd_verify(ctx: &Ctx, out: &mut impl Write, depth: verify::Depth) -> Result<(), Failure> {
    let report = verify::run(depth, &verify::Limits::new(depth, ctx.tol, ctx.aberth));
    match ctx.format {
        Format::Json => emit_json(out, &report),
        Format::Csv => {
            let mut text = String::from("id,range,passed,worst_margin,detail\n");
            for c in &report.checks {
                let margin = c.worst_margin.as_f64().map(render::sig10).unwrap_or_default();
                text.push_str(&format!(
                    "{},\"{}\",{},{margin},\"{}\"\n",
                    c.id,
                    c.range,
                    c.passed,
                    c.detail.replace('"', "'")
                ));
            }
            out.write_all(text.as_bytes())
        }
    }
    .map_err(io_failure)?;
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: format!("{} of {} checks failed", report.summary.total - report.summary.passed, report.summary.total),
        })
    }
}

#[derive(Serialize)]
struct FamilyJson {
    m: u32,
    n: u32,
    form: String,
}

#[derive(Serialize)]
struct HorseshoeJson<'a> {
    code: &'a str,
    canonical: String,
    family: Option<FamilyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dilatation: Option<DilatationJson<'a>>,
}

fn cmd_horseshoe(ctx: &Ctx, out: &mut impl Write, code: &str) -> Result<(), Failure> {
    let orbit = canonicalize(code)?;
    let found = code_to_family(code)?;
    let result = found
        .map(|FamilyMatch { m, n, .. }| dilatation(&FamilyParams::sigma(m, n)?, ctx.tol))
        .transpose()?;
    match ctx.format {
        Format::Json => emit_json(
            out,
            &HorseshoeJson {
                code,
                canonical: orbit.canonical,
                family: found.map(|f| FamilyJson {
                    m: f.m,
                    n: f.n,
                    form: f.form.to_string(),
                }),
                dilatation: result.as_ref().map(DilatationJson::from),
            },
        ),
        Format::Csv => {
            let (m, n, form) = found.map_or((String::new(), String::new(), String::new()), |f| {
                (f.m.to_string(), f.n.to_string(), f.form.to_string())
            });
            let lambda = result.as_ref().and_then(|d| d.lambda()).map(render::sig10).unwrap_or_default();
            writeln!(out, "code,canonical,m,n,form,lambda\n{code},{},{m},{n},{form},{lambda}", orbit.canonical)
        }
    }
    .map_err(io_failure)
}

fn run(cli: Cli) -> Result<(), Failure> {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(usage(format!("--tol must be a positive real, got {}", cli.tol)));
    }
    if !(64..=MAX_BITS).contains(&cli.precision) {
        return Err(usage(format!("--precision must lie in 64..={MAX_BITS}, got {}", cli.precision)));
    }
    let ctx = Ctx {
        tol: cli.tol,
        format: if cli.csv { Format::Csv } else { cli.format },
        aberth: AberthOptions {
            bits: cli.precision,
            ..AberthOptions::default()
        },
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Dilatation { family, m, n } => cmd_dilatation(&ctx, &mut out, family, m, n),
        Command::Table { family, m_range, n_range } => cmd_table(&ctx, &mut out, family, m_range, n_range),
        Command::SalemBoyd { poly_file, n_max, sign } => cmd_salem_boyd(&ctx, &mut out, &poly_file, n_max, sign),
        Command::Verify { depth } => cmd_verify(&ctx, &mut out, depth),
        Command::Horseshoe { code } => cmd_horseshoe(&ctx, &mut out, &code),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
