use std::fmt;

use num_traits::{One, Zero};

use crate::classical::{branch_outer, e_tilde, euler_poly, Parity};
use crate::decompose::try_decompose;
use crate::error::{Error, Result};
use crate::poly::{poly_nth_root, right_linear_candidates, squarefree_decompose};
use crate::recognize::detect_power_form;
use crate::{QLinear, QPoly, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    I,
    II,
    III,
    IV,
    V,
}

impl CaseTag {
    pub const ALL: [CaseTag; 5] = [CaseTag::I, CaseTag::II, CaseTag::III, CaseTag::IV, CaseTag::V];

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::I => "i",
            CaseTag::II => "ii",
            CaseTag::III => "iii",
            CaseTag::IV => "iv",
            CaseTag::V => "v",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        CaseTag::ALL
            .into_iter()
            .find(|c| c.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown case '{s}' (expected i, ii, iii, iv or v)")))
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Case data; the argument of `E_k` (case i) or `Ẽ_s` (cases ii–v) is
/// rebuilt from it by [`Witness::inner_argument`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `E_k(p)`.
    I { p: QPoly },
    /// `Ẽ_s(p²)`.
    II { p: QPoly },
    /// `Ẽ_s(δ·p²)`.
    III { delta: QLinear, p: QPoly },
    /// `Ẽ_s(γ·δ^t)`.
    IV { gamma: Rat, delta: QLinear, t: usize },
    /// `Ẽ_s((a·δ² + b)·p²)`.
    V { a: Rat, b: Rat, delta: QLinear, p: QPoly },
}

impl Witness {
    pub fn case_tag(&self) -> CaseTag {
        match self {
            Witness::I { .. } => CaseTag::I,
            Witness::II { .. } => CaseTag::II,
            Witness::III { .. } => CaseTag::III,
            Witness::IV { .. } => CaseTag::IV,
            Witness::V { .. } => CaseTag::V,
        }
    }

    pub fn inner_argument(&self) -> QPoly {
        match self {
            Witness::I { p } => p.clone(),
            Witness::II { p } => p.pow(2),
            Witness::III { delta, p } => &delta.to_poly() * &p.pow(2),
            Witness::IV { gamma, delta, t } => delta.to_poly().pow(*t as u32).scale(gamma),
            Witness::V { a, b, delta, p } => {
                let d = delta.to_poly();
                let quad = &d.pow(2).scale(a) + &QPoly::constant(b.clone());
                &quad * &p.pow(2)
            }
        }
    }
}

/// `g = f∘E_k∘p` or `g = f∘Ẽ_{k/2}∘R` with `f(X) = (E_k(0) ± X)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalForm {
    pub k: u32,
    /// Branch whose `f` appears; `EvenN` has slope `1/2`, `OddN` slope `-1/2`.
    pub sign: Parity,
    pub f: QLinear,
    pub witness: Witness,
}

impl ExceptionalForm {
    pub fn case_tag(&self) -> CaseTag {
        self.witness.case_tag()
    }

    /// `s = k/2` for cases ii–v.
    pub fn s(&self) -> Option<u32> {
        (self.case_tag() != CaseTag::I).then_some(self.k / 2)
    }

    pub fn inner_argument(&self) -> QPoly {
        self.witness.inner_argument()
    }

    pub fn recompose(&self) -> QPoly {
        let outer: QPoly = match self.witness {
            Witness::I { .. } => euler_poly(self.k as usize),
            _ => e_tilde((self.k / 2) as usize),
        };
        self.f.apply_poly(&outer.compose(&self.inner_argument()))
    }
}

fn check_inputs(k: u32, g: &QPoly) -> Result<()> {
    if k < 7 {
        return Err(Error::Precondition(format!("classification needs k >= 7, got {k}")));
    }
    match g.deg() {
        Some(d) if d >= 2 => Ok(()),
        _ => Err(Error::Precondition("classification needs deg g >= 2".into())),
    }
}

/// Every `R` with `target = outer∘R`.
fn match_outer(target: &QPoly, outer: &QPoly) -> Result<Vec<QPoly>> {
    let (Some(n), Some(m)) = (target.deg(), outer.deg()) else {
        return Ok(Vec::new());
    };
    if m == 0 || n % m != 0 {
        return Ok(Vec::new());
    }
    let d = n / m;
    if d == 1 {
        return Ok(right_linear_candidates(target, outer).into_iter().map(|l| l.to_poly()).collect());
    }
    let Some(pair) = try_decompose(target, d)? else {
        return Ok(Vec::new());
    };
    let scaled = pair.scaled_outer();
    Ok(right_linear_candidates(&scaled, outer).into_iter().map(|l| l.apply_poly(&pair.inner)).collect())
}

fn even_part_root(parts: &[(QPoly, usize)]) -> QPoly {
    parts.iter().fold(QPoly::one(), |acc, (f, m)| &acc * &f.pow((*m / 2) as u32))
}

/// Shapes of `R` recognised as arguments of `Ẽ_s`, in check order.
fn residual_witnesses(r: &QPoly) -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    let Some(d) = r.deg() else {
        return Ok(out);
    };
    if d == 0 {
        return Ok(out);
    }
    if let Some(p) = poly_nth_root(r, 2) {
        out.push(Witness::II { p });
    }
    if d >= 3 && d % 2 == 1 {
        if let Some(form) = detect_power_form(r).filter(|f| f.v.is_zero()) {
            let delta = QLinear::new(Rat::one(), form.shift.clone())?;
            out.push(Witness::IV { gamma: form.u, delta, t: d });
        }
    }
    let sqf = squarefree_decompose(r)?;
    let odd: QPoly = sqf
        .parts
        .iter()
        .filter(|(_, m)| m % 2 == 1)
        .fold(QPoly::one(), |acc, (f, _)| &acc * f);
    let p = even_part_root(&sqf.parts);
    match odd.deg() {
        Some(1) => {
            let delta = QLinear::from_poly(&odd.scale(&sqf.content)).expect("linear");
            out.push(Witness::III { delta, p });
        }
        Some(2) => {
            let sigma = -odd.coeff(1) / Rat::from_integer(2.into());
            let e = odd.coeff(0) - &sigma * &sigma;
            let a = sqf.content.clone();
            let b = &a * &e;
            let delta = QLinear::new(Rat::one(), -sigma)?;
            out.push(Witness::V { a, b, delta, p });
        }
        _ => {}
    }
    Ok(out)
}

/// Every exceptional form of `g`, over both signs of `f` and every possible
/// argument. Cases overlap: for even `k` case ii is case i written through
/// `Ẽ_s`, and case iv is a special case of case iii.
pub fn classify_all(k: u32, g: &QPoly) -> Result<Vec<ExceptionalForm>> {
    check_inputs(k, g)?;
    let e_k: QPoly = euler_poly(k as usize);
    let e_tilde_s: Option<QPoly> = (k % 2 == 0).then(|| e_tilde((k / 2) as usize));
    let mut out = Vec::new();
    for sign in Parity::BOTH {
        let f = branch_outer(&e_k.coeff(0), sign);
        let target = f.inverse().apply_poly(g);
        for p in match_outer(&target, &e_k)? {
            out.push(ExceptionalForm { k, sign, f: f.clone(), witness: Witness::I { p } });
        }
        if let Some(et) = &e_tilde_s {
            for r in match_outer(&target, et)? {
                for witness in residual_witnesses(&r)? {
                    out.push(ExceptionalForm { k, sign, f: f.clone(), witness });
                }
            }
        }
    }
    out.retain(|form| form.recompose() == *g);
    out.sort_by_key(|form| priority(form.case_tag()));
    Ok(out)
}

fn priority(tag: CaseTag) -> usize {
    match tag {
        CaseTag::I => 0,
        CaseTag::II => 1,
        CaseTag::IV => 2,
        CaseTag::III => 3,
        CaseTag::V => 4,
    }
}

/// First exceptional form found, trying i, ii, iv, iii, v in that order.
pub fn classify_g(k: u32, g: &QPoly) -> Result<Option<ExceptionalForm>> {
    Ok(classify_all(k, g)?.into_iter().next())
}

/// Outer factors and inner degrees the recogniser tries for `g`.
pub fn examined_splits(k: u32, g: &QPoly) -> Result<Vec<(String, usize)>> {
    check_inputs(k, g)?;
    let n = g.deg().unwrap();
    let mut out = Vec::new();
    if n % k as usize == 0 {
        out.push((format!("E_{k}"), n / k as usize));
    }
    let s = (k / 2) as usize;
    if k % 2 == 0 && n % s == 0 {
        out.push((format!("Ẽ_{s}"), n / s));
    }
    Ok(out)
}
