//! Polynomial text format.
//!
//! Two spellings are accepted:
//!
//! * a comma-separated ascending coefficient list `c0,c1,...,cn`, each entry
//!   an integer `p` or a fraction `p/q` with `q > 0`;
//! * a human-readable sum such as `3/4*x^2 - x + 5`.
//!
//! Input containing `x` is read as the human form, anything else as a
//! coefficient list. The coefficient list is the canonical printed form.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::scalar::Field;

use super::Poly;

fn parse_rational<T: Field + FromStr>(tok: &str) -> Result<T> {
    let bad = || Error::Parse(format!("malformed rational '{tok}'"));
    let body = tok.strip_prefix(['-', '+']).unwrap_or(tok);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    if den.is_some_and(|d| d.bytes().all(|b| b == b'0')) {
        return Err(Error::Parse(format!("zero denominator in '{tok}'")));
    }
    let clean = tok.strip_prefix('+').unwrap_or(tok);
    clean.parse::<T>().map_err(|_| bad())
}

fn parse_list<T: Field + FromStr>(s: &str) -> Result<Poly<T>> {
    let coeffs = s
        .split(',')
        .map(|t| parse_rational(t.trim()))
        .collect::<Result<Vec<T>>>()?;
    Ok(Poly::new(coeffs))
}

fn parse_term<T: Field + FromStr>(term: &str, negative: bool) -> Result<(usize, T)> {
    let (coef, exp) = match term.find('x') {
        None => (term, None),
        Some(pos) => {
            let (c, rest) = term.split_at(pos);
            let rest = &rest[1..];
            let exp = if rest.is_empty() {
                1
            } else {
                let e = rest
                    .strip_prefix('^')
                    .ok_or_else(|| Error::Parse(format!("unexpected text after x in '{term}'")))?;
                e.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad exponent in '{term}'")))?
            };
            (c.strip_suffix('*').unwrap_or(c), Some(exp))
        }
    };
    let value: T = match (coef.is_empty(), exp) {
        (true, Some(_)) => T::one(),
        (true, None) => return Err(Error::Parse("empty term".into())),
        (false, _) => parse_rational(coef)?,
    };
    let value = if negative { -value } else { value };
    Ok((exp.unwrap_or(0), value))
}

fn parse_human<T: Field + FromStr>(s: &str) -> Result<Poly<T>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.contains(',') {
        return Err(Error::Parse("mixes coefficient-list and human-readable forms".into()));
    }
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push((std::mem::take(&mut current), negative));
            negative = ch == '-';
        } else if (ch == '+' || ch == '-') && i == 0 {
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    terms.push((current, negative));
    let mut coeffs: Vec<T> = Vec::new();
    for (term, neg) in terms {
        let (k, c) = parse_term::<T>(&term, neg)?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, T::zero());
        }
        coeffs[k] = coeffs[k].clone() + c;
    }
    Ok(Poly::new(coeffs))
}

/// Parses either accepted spelling.
pub fn parse_poly<T: Field + FromStr>(s: &str) -> Result<Poly<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if s.contains('x') {
        parse_human(s)
    } else {
        parse_list(s)
    }
}

impl<T: Field + FromStr> FromStr for Poly<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

/// Canonical coefficient-list spelling; the zero polynomial prints as `0`.
pub fn to_coeff_list<T: Field>(p: &Poly<T>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// Human-readable spelling, highest degree first.
pub fn to_human<T: Field + Signed>(p: &Poly<T>) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        match (mag.is_one(), k) {
            (_, 0) => out.push_str(&mag.to_string()),
            (true, _) => out.push_str(&mono),
            (false, _) => out.push_str(&format!("{mag}*{mono}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<T: Field + Signed> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_human(self))
    }
}
