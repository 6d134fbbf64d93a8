//! JSON encodings. Rationals are always `"p/q"` strings, integers are decimal
//! strings, polynomials are ascending coefficient arrays.

use eulerdecomp::poly::text::to_human;
use eulerdecomp::{Int, QLinear, QPoly, Rat};
use serde_json::{json, Value};

pub fn rat(r: &Rat) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn int(i: &Int) -> Value {
    Value::String(i.to_string())
}

pub fn poly(p: &QPoly) -> Value {
    json!({
        "coeffs": p.coeffs().iter().map(rat).collect::<Vec<_>>(),
        "text": to_human(p),
    })
}

pub fn linear(l: &QLinear) -> Value {
    json!({ "slope": rat(l.slope()), "intercept": rat(l.intercept()) })
}

/// `a*x + b` with the usual sign handling.
pub fn linear_text(l: &QLinear) -> String {
    to_human(&l.to_poly())
}
