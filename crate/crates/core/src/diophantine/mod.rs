//! The equation `-1^k + 2^k - ⋯ + (-1)^x x^k = g(y)`: exact verification,
//! bounded search, recognition of the exceptional shapes of `g`, and the
//! explicit infinite solution families.

mod classify;
mod family;
mod pell;

use std::collections::HashMap;

use num_traits::{One, Pow, Signed, Zero};

use crate::classical::{alt_power_sum_closed_with, euler_poly};
use crate::error::{Error, Result};
use crate::poly::count_simple_roots;
use crate::{Int, QPoly, Rat};

pub use classify::{classify_all, classify_g, examined_splits, CaseTag, ExceptionalForm, Witness};
pub use family::{
    family_case_i, family_case_ii, family_case_iii, family_case_iv, family_case_v, FamilyPoint, FamilySpec,
    SolutionFamily,
};
pub use pell::PellState;

/// Checks `Σ_{i=1..x} (-1)^i i^k = g(y)` exactly; `x` counts the summands.
pub fn verify_solution(k: u32, g: &QPoly, x: &Int, y: &Int) -> Result<bool> {
    verify_with(&euler_poly(k as usize), g, x, y)
}

pub(crate) fn verify_with(e_k: &QPoly, g: &QPoly, x: &Int, y: &Int) -> Result<bool> {
    if x < &Int::one() {
        return Err(Error::Precondition(format!("x must be at least 1, got {x}")));
    }
    Ok(alt_power_sum_closed_with(e_k, x) == g.eval(&Rat::from_integer(y.clone())))
}

/// How the left-hand side is produced while scanning `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LhsMode {
    /// Running alternating sum, one power per step.
    Running,
    /// Closed form through `E_k` at every step.
    Closed,
}

/// Search box: `1 ≤ x ≤ x_max`, `y_min ≤ y ≤ y_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBox {
    pub x_max: u64,
    pub y_min: i64,
    pub y_max: i64,
}

/// Every `(x, y)` in the box solving the equation, sorted.
pub fn brute_search(k: u32, g: &QPoly, bounds: SearchBox) -> Vec<(u64, i64)> {
    brute_search_with(k, g, bounds, LhsMode::Running)
}

pub fn brute_search_with(k: u32, g: &QPoly, bounds: SearchBox, mode: LhsMode) -> Vec<(u64, i64)> {
    if bounds.x_max == 0 || bounds.y_min > bounds.y_max {
        return Vec::new();
    }
    let mut values: HashMap<Rat, Vec<i64>> = HashMap::new();
    for y in bounds.y_min..=bounds.y_max {
        values.entry(g.eval(&Rat::from_integer(y.into()))).or_default().push(y);
    }
    let e_k = euler_poly(k as usize);
    let mut running = Int::zero();
    let mut out = Vec::new();
    for x in 1..=bounds.x_max {
        let lhs = match mode {
            LhsMode::Running => {
                let term: Int = Int::from(x).pow(k);
                if x % 2 == 0 {
                    running += term;
                } else {
                    running -= term;
                }
                Rat::from_integer(running.clone())
            }
            LhsMode::Closed => alt_power_sum_closed_with(&e_k, &Int::from(x)),
        };
        if let Some(ys) = values.get(&lhs) {
            out.extend(ys.iter().map(|&y| (x, y)));
        }
    }
    out.sort_unstable();
    out
}

/// `E_m + b` has at least three simple complex roots for every sampled `b`.
pub fn theorem_rak_check(m: usize, b_values: &[Rat]) -> Result<bool> {
    if m < 7 {
        return Err(Error::Precondition(format!("the simple-root bound needs m >= 7, got {m}")));
    }
    let e_m: QPoly = euler_poly(m);
    for b in b_values {
        let shifted = &e_m + &QPoly::constant(b.clone());
        if count_simple_roots(&shifted)? < 3 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn require_positive_integer(value: &Rat, what: &str, index: u64) -> Result<Int> {
    if !value.is_integer() || !value.is_positive() {
        return Err(Error::Emission { index, reason: format!("{what} = {value} is not a positive integer") });
    }
    Ok(value.to_integer())
}
