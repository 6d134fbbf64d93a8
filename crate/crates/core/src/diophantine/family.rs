use num_integer::Integer;
use num_traits::One;

use crate::classical::{branch_outer, e_tilde, euler_poly, Parity};
use crate::error::{Error, Result};
use crate::{rat, Int, QLinear, QPoly, Rat};

use super::classify::CaseTag;
use super::pell::PellState;
use super::{require_positive_integer, verify_with};

/// Parameters of one of the explicit families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `p = h∘r`, solutions `(r(m), m)`.
    I { r: QPoly },
    /// `p = 2r ∓ 1/2`, solutions `(r(m), m)`.
    II { r: QPoly },
    /// `δ = x`, `p = r - 1/2`, `y` an odd square.
    III { r: QPoly },
    /// `γ = 1/4`, `δ = x`, odd `t ≥ 3`.
    IV { t: usize },
    /// `a = 1/2`, `b = 1/4`, `δ = x`, `p = 4r + 1`, `y` from the Pell sequence.
    V { r: QPoly },
}

impl FamilySpec {
    pub fn case_tag(&self) -> CaseTag {
        match self {
            FamilySpec::I { .. } => CaseTag::I,
            FamilySpec::II { .. } => CaseTag::II,
            FamilySpec::III { .. } => CaseTag::III,
            FamilySpec::IV { .. } => CaseTag::IV,
            FamilySpec::V { .. } => CaseTag::V,
        }
    }
}

/// One emitted solution. `x` is the variable of `f(E_k(h(x))) = g(y)`;
/// `terms` is the number of summands on the original left-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPoint {
    pub index: u64,
    pub x: Int,
    pub y: Int,
    pub terms: Int,
}

/// Lazily emits verified solutions for `m = 1, 2, …`. Stops after the first
/// error.
#[derive(Clone, Debug)]
pub struct SolutionFamily {
    spec: FamilySpec,
    k: u32,
    branch: Parity,
    g: QPoly,
    e_k: QPoly,
    index: u64,
    failed: bool,
}

impl SolutionFamily {
    fn new(spec: FamilySpec, k: u32, branch: Parity) -> Result<Self> {
        if k < 1 {
            return Err(Error::Precondition("k must be at least 1".into()));
        }
        if spec.case_tag() != CaseTag::I && k % 2 == 1 {
            return Err(Error::Precondition(format!("case {} needs even k, got {k}", spec.case_tag())));
        }
        let e_k: QPoly = euler_poly(k as usize);
        let f = branch_outer(&e_k.coeff(0), branch);
        let x = QPoly::x();
        let g = match &spec {
            FamilySpec::I { r } => {
                let h = match branch {
                    Parity::EvenN => QLinear::new(rat(2, 1), rat(1, 1))?,
                    Parity::OddN => QLinear::new(rat(2, 1), rat(0, 1))?,
                };
                f.apply_poly(&e_k.compose(&h.apply_poly(r)))
            }
            spec => {
                let arg = match spec {
                    FamilySpec::II { r } => {
                        let half = match branch {
                            Parity::OddN => rat(-1, 2),
                            Parity::EvenN => rat(1, 2),
                        };
                        (&r.scale(&rat(2, 1)) + &QPoly::constant(half)).pow(2)
                    }
                    FamilySpec::III { r } => &x * &(r + &QPoly::constant(rat(-1, 2))).pow(2),
                    FamilySpec::IV { t } => {
                        if *t < 3 || t % 2 == 0 {
                            return Err(Error::Precondition(format!("t must be odd and at least 3, got {t}")));
                        }
                        QPoly::monomial(rat(1, 4), *t)
                    }
                    FamilySpec::V { r } => {
                        let quad = QPoly::new(vec![rat(1, 4), rat(0, 1), rat(1, 2)]);
                        let p = &r.scale(&rat(4, 1)) + &QPoly::one();
                        &quad * &p.pow(2)
                    }
                    FamilySpec::I { .. } => unreachable!(),
                };
                f.apply_poly(&e_tilde::<Rat>((k / 2) as usize).compose(&arg))
            }
        };
        Ok(Self { spec, k, branch, g, e_k, index: 0, failed: false })
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn case_tag(&self) -> CaseTag {
        self.spec.case_tag()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn branch(&self) -> Parity {
        self.branch
    }

    /// Right-hand side polynomial of the family's equation.
    pub fn g(&self) -> &QPoly {
        &self.g
    }

    /// Candidate point for index `m ≥ 1`, before verification.
    fn point(&self, m: u64) -> Result<(Int, Int)> {
        let mi = Int::from(m);
        let at = |r: &QPoly, y: &Int| r.eval(&Rat::from_integer(y.clone()));
        match &self.spec {
            FamilySpec::I { r } | FamilySpec::II { r } => {
                let x = require_positive_integer(&at(r, &mi), "r(m)", m)?;
                Ok((x, mi))
            }
            FamilySpec::III { r } => {
                let w = match self.branch {
                    Parity::OddN => &mi * 4 + 3,
                    Parity::EvenN => &mi * 4 + 1,
                };
                let y = &w * &w;
                let big_r = require_positive_integer(&at(r, &y), "r(y)", m)?;
                if big_r.is_even() {
                    return Err(Error::Emission { index: m, reason: format!("r(y) = {big_r} is even") });
                }
                let x = (&w * &big_r - (&mi * 2 + 1)) / 2;
                Ok((x, y))
            }
            FamilySpec::IV { t } => {
                let (w, x) = match self.branch {
                    Parity::OddN => {
                        let w: Int = &mi * 4 - 1;
                        let x = (num_traits::pow(w.clone(), *t) + 1) / 4;
                        (w, x)
                    }
                    Parity::EvenN => {
                        let w: Int = &mi * 4 + 1;
                        let x = (num_traits::pow(w.clone(), *t) - 1) / 4;
                        (w, x)
                    }
                };
                Ok((x, &w * &w))
            }
            FamilySpec::V { r } => {
                let idx = match self.branch {
                    Parity::OddN => 2 * m + 1,
                    Parity::EvenN => 2 * m,
                };
                let pell = PellState::at(idx);
                let rv = require_positive_integer(&at(r, &pell.b), "r(y)", m)?;
                let p = rv * 4 + 1;
                let num: Int = match self.branch {
                    Parity::OddN => &pell.a * &p + 1,
                    Parity::EvenN => &pell.a * &p - 1,
                };
                let (x, rem) = num.div_rem(&Int::from(4));
                if rem != Int::from(0) {
                    return Err(Error::Emission { index: m, reason: "x is not an integer".into() });
                }
                Ok((x, pell.b))
            }
        }
    }

    fn emit(&self, m: u64) -> Result<FamilyPoint> {
        let (x, y) = self.point(m)?;
        if x < Int::one() {
            return Err(Error::Emission { index: m, reason: format!("x = {x} is not positive") });
        }
        let terms = self.branch.terms(&x);
        if !verify_with(&self.e_k, &self.g, &terms, &y)? {
            return Err(Error::Emission { index: m, reason: format!("({x}, {y}) fails verification") });
        }
        Ok(FamilyPoint { index: m, x, y, terms })
    }
}

impl Iterator for SolutionFamily {
    type Item = Result<FamilyPoint>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        self.index += 1;
        let out = self.emit(self.index);
        self.failed = out.is_err();
        Some(out)
    }
}

pub fn family_case_i(k: u32, r: &QPoly, branch: Parity) -> Result<SolutionFamily> {
    SolutionFamily::new(FamilySpec::I { r: r.clone() }, k, branch)
}

pub fn family_case_ii(k: u32, r: &QPoly, branch: Parity) -> Result<SolutionFamily> {
    SolutionFamily::new(FamilySpec::II { r: r.clone() }, k, branch)
}

pub fn family_case_iii(k: u32, r: &QPoly, branch: Parity) -> Result<SolutionFamily> {
    SolutionFamily::new(FamilySpec::III { r: r.clone() }, k, branch)
}

pub fn family_case_iv(k: u32, t: usize, branch: Parity) -> Result<SolutionFamily> {
    SolutionFamily::new(FamilySpec::IV { t }, k, branch)
}

pub fn family_case_v(k: u32, r: &QPoly, branch: Parity) -> Result<SolutionFamily> {
    SolutionFamily::new(FamilySpec::V { r: r.clone() }, k, branch)
}
