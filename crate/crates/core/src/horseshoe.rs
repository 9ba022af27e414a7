//! Periodic-orbit codes of the Smale horseshoe and their `sigma(m,n)` braid types.
//!
//! A code is a cyclic binary word. The orbits with codes
//! `1 0^{n-1} 1 0^m` (form A) and `1 0^{n-1} 1 0^{m-1} 1` (form B), `n >= m + 2`,
//! have the braid type of `sigma(m,n)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeOrbit {
    pub word: String,
    pub period: usize,
    /// Lexicographically least rotation of `word`.
    pub canonical: String,
    /// False when `word` is a power of a shorter word.
    pub primitive: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Form {
    A,
    B,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::A => "A",
            Form::B => "B",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyMatch {
    pub m: u32,
    pub n: u32,
    pub form: Form,
}

fn validate(word: &str) -> Result<()> {
    if word.is_empty() {
        return Err(Error::Parse("empty horseshoe code".into()));
    }
    if let Some(c) = word.chars().find(|c| *c != '0' && *c != '1') {
        return Err(Error::Parse(format!("horseshoe code must be binary, found '{c}'")));
    }
    Ok(())
}

fn rotations(word: &str) -> impl Iterator<Item = String> + '_ {
    (0..word.len()).map(move |k| format!("{}{}", &word[k..], &word[..k]))
}

pub fn canonicalize(word: &str) -> Result<CodeOrbit> {
    validate(word)?;
    let canonical = rotations(word).min().expect("nonempty word");
    let len = word.len();
    let primitive = !(1..len).any(|d| len.is_multiple_of(d) && word[d..] == word[..len - d]);
    Ok(CodeOrbit {
        word: word.to_owned(),
        period: len,
        canonical,
        primitive,
    })
}

/// Splits `1 0^a 1 ...` into `a` and the remainder after the second `1`.
fn leading_gap(w: &[u8]) -> Option<(usize, &[u8])> {
    let rest = w.strip_prefix(b"1")?;
    let zeros = rest.iter().take_while(|&&b| b == b'0').count();
    let rest = rest[zeros..].strip_prefix(b"1")?;
    Some((zeros, rest))
}

fn in_range(m: usize, n: usize) -> Option<(u32, u32)> {
    (m >= 1 && n >= m + 2).then_some((m as u32, n as u32))
}

fn match_form_a(w: &[u8]) -> Option<(u32, u32)> {
    let (gap, tail) = leading_gap(w)?;
    if tail.iter().all(|&b| b == b'0') {
        in_range(tail.len(), gap + 1)
    } else {
        None
    }
}

fn match_form_b(w: &[u8]) -> Option<(u32, u32)> {
    let (gap, tail) = leading_gap(w)?;
    let (last, zeros) = tail.split_last()?;
    if *last == b'1' && zeros.iter().all(|&b| b == b'0') {
        in_range(zeros.len() + 1, gap + 1)
    } else {
        None
    }
}

/// Family parameters of a code, trying every rotation. Form A is preferred
/// when both forms match.
pub fn code_to_family(word: &str) -> Result<Option<FamilyMatch>> {
    validate(word)?;
    let rots: Vec<String> = rotations(word).collect();
    for (form, matcher) in [(Form::A, match_form_a as fn(&[u8]) -> _), (Form::B, match_form_b)] {
        if let Some((m, n)) = rots.iter().find_map(|r| matcher(r.as_bytes())) {
            return Ok(Some(FamilyMatch { m, n, form }));
        }
    }
    Ok(None)
}

/// The form A and form B codes of `sigma(m,n)`.
pub fn family_to_codes(m: u32, n: u32) -> Result<(String, String)> {
    if m < 1 || n < m + 2 {
        return Err(Error::InvalidParams(format!(
            "horseshoe codes need m >= 1 and n >= m + 2, got ({m}, {n})"
        )));
    }
    let (m, n) = (m as usize, n as usize);
    let head = format!("1{}1", "0".repeat(n - 1));
    Ok((
        format!("{head}{}", "0".repeat(m)),
        format!("{head}{}1", "0".repeat(m - 1)),
    ))
}
