//! Integer <-> JSON conversion shared by the polynomial and matrix formats.
//! Values outside the IEEE-double safe range travel as decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;

use crate::error::{Error, Result};

const SAFE: i64 = (1 << 53) - 1;

pub(crate) fn int_value(c: &BigInt) -> Value {
    match c.to_i64().filter(|v| v.abs() <= SAFE) {
        Some(v) => Value::from(v),
        None => Value::String(c.to_string()),
    }
}

pub(crate) fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("non-integer value {n}"))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer '{s}'"))),
        other => Err(Error::Parse(format!("expected an integer, found {other}"))),
    }
}
