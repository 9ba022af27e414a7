//! Output formatting. Floats are rendered with 10 significant digits,
//! rounded half-to-even on the exact binary value (Rust's `{:e}` formatting).

use dilatation::families::{DilatationResult, Family};
use dilatation::{IntPolynomial, RootEnclosure};
use serde::Serialize;
use serde_json::Value;

pub const SIG_DIGITS: usize = 10;

/// `x` with exactly [`SIG_DIGITS`] significant digits; positional notation
/// for decimal exponents in `-5..10`, scientific otherwise.
pub fn sig10(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..10).contains(&exp) {
        return sci;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let body = if exp < 0 {
        format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
    } else {
        let point = exp as usize + 1;
        if point >= digits.len() {
            format!("{digits}{}", "0".repeat(point - digits.len()))
        } else {
            format!("{}.{}", &digits[..point], &digits[point..])
        }
    };
    format!("{sign}{body}")
}

/// JSON number carrying the [`sig10`] rendering of `x`; `null` when not finite.
pub fn json_f64(x: f64) -> Value {
    sig10(x)
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map_or(Value::Null, Value::Number)
}

fn opt_json_f64(x: Option<f64>) -> Value {
    x.map_or(Value::Null, json_f64)
}

#[derive(Serialize)]
pub struct RootJson {
    pub lower: String,
    pub upper: String,
    pub witness: Value,
}

impl From<&RootEnclosure> for RootJson {
    fn from(r: &RootEnclosure) -> Self {
        Self {
            lower: r.lower.to_string(),
            upper: r.upper.to_string(),
            witness: json_f64(r.witness),
        }
    }
}

#[derive(Serialize)]
pub struct DilatationJson<'a> {
    pub family: Family,
    pub m: u32,
    pub n: u32,
    pub tn_class: &'static str,
    pub poly: Option<&'a IntPolynomial>,
    pub root: Option<RootJson>,
    pub provenance: Option<&'static str>,
}

impl<'a> From<&'a DilatationResult> for DilatationJson<'a> {
    fn from(d: &'a DilatationResult) -> Self {
        Self {
            family: d.params.family,
            m: d.params.m,
            n: d.params.n,
            tn_class: d.tn.as_str(),
            poly: d.defining_poly.as_ref(),
            root: d.root.as_ref().map(RootJson::from),
            provenance: d.provenance.map(|p| p.as_str()),
        }
    }
}

pub const DILATATION_CSV_HEADER: &str = "family,m,n,class,lambda,log_lambda";

pub fn dilatation_csv(d: &DilatationResult) -> String {
    let (lambda, log) = match d.lambda() {
        Some(l) => (sig10(l), sig10(l.ln())),
        None => (String::new(), String::new()),
    };
    format!("{},{},{},{},{lambda},{log}", d.params.family, d.params.m, d.params.n, d.tn)
}

#[derive(Serialize)]
pub struct SalemBoydRow {
    pub n: usize,
    pub degree: usize,
    pub mahler: Value,
    pub mahler_error: Value,
    pub lambda: Value,
    pub outside: usize,
    pub on_circle: usize,
}

impl SalemBoydRow {
    pub fn new(
        n: usize,
        degree: usize,
        mahler: f64,
        mahler_error: f64,
        lambda: Option<f64>,
        outside: usize,
        on_circle: usize,
    ) -> Self {
        Self {
            n,
            degree,
            mahler: json_f64(mahler),
            mahler_error: json_f64(mahler_error),
            lambda: opt_json_f64(lambda),
            outside,
            on_circle,
        }
    }
}

#[derive(Serialize)]
pub struct SalemBoydLimit {
    pub degree: usize,
    pub mahler: Value,
    pub mahler_error: Value,
    pub lambda: Value,
    pub outside: usize,
    pub on_circle: usize,
}

#[derive(Serialize)]
pub struct SalemBoydJson<'a> {
    pub base: &'a IntPolynomial,
    pub sign: &'static str,
    pub rows: Vec<SalemBoydRow>,
    pub limit: SalemBoydLimit,
}

pub const SALEM_BOYD_CSV_HEADER: &str = "n,degree,mahler,lambda,outside,on_circle";

fn value_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Number(x) => x.as_f64().map(sig10).unwrap_or_default(),
        other => other.to_string(),
    }
}

pub fn salem_boyd_csv(out: &SalemBoydJson) -> Vec<String> {
    let mut lines = vec![SALEM_BOYD_CSV_HEADER.to_string()];
    for r in &out.rows {
        lines.push(format!(
            "{},{},{},{},{},{}",
            r.n,
            r.degree,
            value_cell(&r.mahler),
            value_cell(&r.lambda),
            r.outside,
            r.on_circle
        ));
    }
    let l = &out.limit;
    lines.push(format!(
        "P,{},{},{},{},{}",
        l.degree,
        value_cell(&l.mahler),
        value_cell(&l.lambda),
        l.outside,
        l.on_circle
    ));
    lines
}
