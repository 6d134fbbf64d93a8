//! Batch verification of the structural results the library relies on, over
//! configurable index ranges. Each check produces one [`CheckRow`] per index.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classical::{dickson, e_tilde, euler_poly, half_shift_square};
use crate::decompose::{all_decompositions, decompositions_equivalent, is_indecomposable, MAX_DEGREE};
use crate::diophantine::theorem_rak_check;
use crate::error::{Error, Result};
use crate::recognize::{
    detect_dickson_form, detect_power_form, dickson_extrema, dickson_extremum_shapes, lemma_dr_check,
};
use crate::{rat, QLinear, QPoly, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    /// `E_k` is indecomposable for odd `k`.
    EulerOdd,
    /// `E_k` for even `k` has one decomposition class, `Ẽ_{k/2}∘(x-1/2)²`.
    EulerEven,
    /// `Ẽ_m` is indecomposable.
    ETilde,
    /// `E_m + b` keeps at least three simple roots.
    SimpleRoots,
    /// Extremum types of `D_k(x, a)`.
    DicksonExtrema,
    /// Real quadratic factors of `(x+1)^n - x^n` have positive coefficients.
    RealFactors,
    /// `E_n` is neither a shifted power nor a Dickson form for `n ≥ 5`; `E_4` is.
    EulerNotDickson,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::EulerOdd,
        Check::EulerEven,
        Check::ETilde,
        Check::SimpleRoots,
        Check::DicksonExtrema,
        Check::RealFactors,
        Check::EulerNotDickson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::EulerOdd => "euler-odd-indecomposable",
            Check::EulerEven => "euler-even-unique",
            Check::ETilde => "etilde-indecomposable",
            Check::SimpleRoots => "simple-roots",
            Check::DicksonExtrema => "dickson-extrema",
            Check::RealFactors => "real-factor-signs",
            Check::EulerNotDickson => "euler-not-dickson",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRow {
    pub check: Check,
    pub index: usize,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremOptions {
    /// Largest Euler index for the decomposition checks.
    pub euler_max: usize,
    /// Largest `m` for the simple-root check (smallest is 7).
    pub rak_max: usize,
    /// Largest `k` for the Dickson extremum check.
    pub dickson_max: usize,
    /// Largest even `n` for the real-factor check.
    pub factor_max: usize,
    /// Seed for the random samples.
    pub seed: u64,
    /// Random samples drawn per index where a check samples.
    pub samples: usize,
}

impl Default for TheoremOptions {
    fn default() -> Self {
        Self { euler_max: 30, rak_max: 20, dickson_max: 12, factor_max: 40, seed: 0, samples: 3 }
    }
}

impl TheoremOptions {
    pub fn validate(&self) -> Result<()> {
        if self.euler_max < 4 || self.euler_max > MAX_DEGREE {
            return Err(Error::Precondition(format!("euler-max must lie in 4..={MAX_DEGREE}")));
        }
        if self.rak_max < 7 || self.rak_max > MAX_DEGREE {
            return Err(Error::Precondition(format!("rak-max must lie in 7..={MAX_DEGREE}")));
        }
        if self.dickson_max < 3 || self.dickson_max > MAX_DEGREE {
            return Err(Error::Precondition(format!("dickson-max must lie in 3..={MAX_DEGREE}")));
        }
        if self.factor_max < 2 || self.factor_max > 1000 {
            return Err(Error::Precondition("factor-max must lie in 2..=1000".into()));
        }
        Ok(())
    }
}

fn row(check: Check, index: usize, outcome: Result<(bool, String)>) -> CheckRow {
    match outcome {
        Ok((passed, detail)) => CheckRow { check, index, passed, detail },
        Err(e) => CheckRow { check, index, passed: false, detail: format!("error: {e}") },
    }
}

fn random_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

fn random_nonzero_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    loop {
        let r = random_rat(rng, bound);
        if r != rat(0, 1) {
            return r;
        }
    }
}

pub fn euler_odd(k: usize) -> Result<(bool, String)> {
    let ok = is_indecomposable(&euler_poly::<Rat>(k))?;
    Ok((ok, if ok { "indecomposable".into() } else { "found a decomposition".into() }))
}

pub fn euler_even(k: usize) -> Result<(bool, String)> {
    let e: QPoly = euler_poly(k);
    let set = all_decompositions(&e)?;
    if set.inner_degrees() != vec![2] {
        return Ok((false, format!("inner degrees {:?}", set.inner_degrees())));
    }
    let d = &set.pairs[0];
    let ell = decompositions_equivalent((&e_tilde::<Rat>(k / 2), &half_shift_square()), (&d.scaled_outer(), &d.inner))?;
    Ok((true, format!("inner degree 2, witness {ell}")))
}

pub fn etilde(m: usize) -> Result<(bool, String)> {
    let ok = is_indecomposable(&e_tilde::<Rat>(m))?;
    Ok((ok, if ok { "indecomposable".into() } else { "found a decomposition".into() }))
}

/// The fixed sample of shifts `b` used for `E_m + b`.
pub fn simple_root_shifts(m: usize) -> Vec<Rat> {
    vec![
        rat(0, 1),
        rat(1, 1),
        rat(-1, 1),
        rat(1, 2),
        rat(-1, 2),
        rat(17, 3),
        -euler_poly::<Rat>(m).eval(&rat(1, 2)),
    ]
}

fn simple_roots(m: usize, extra: &[Rat]) -> Result<(bool, String)> {
    let mut bs = simple_root_shifts(m);
    bs.extend_from_slice(extra);
    let ok = theorem_rak_check(m, &bs)?;
    Ok((ok, format!("{} shifts", bs.len())))
}

pub fn dickson_extrema_shapes_hold(k: usize) -> Result<(bool, String)> {
    let (plus, minus) = dickson_extremum_shapes(k);
    for a in [rat(1, 1), rat(4, 1), rat(9, 1), rat(1, 4)] {
        let reports = dickson_extrema(k, &a)?;
        if reports[0].kind != plus || reports[1].kind != minus {
            return Ok((false, format!("a = {a}: types {:?} / {:?}", reports[0].kind, reports[1].kind)));
        }
    }
    Ok((true, format!("+ {plus:?}, - {minus:?}")))
}

/// `E_4(cx + 1/2) = c⁴·D_4(x, 3/(8c²)) + 1/32`.
pub fn euler_four_identity(c: &Rat) -> bool {
    let lin = QPoly::new(vec![rat(1, 2), c.clone()]);
    let lhs = euler_poly::<Rat>(4).compose(&lin);
    let a = rat(3, 8) / (c * c);
    let c4 = c * c * c * c;
    let rhs = &dickson(4, &a).scale(&c4) + &QPoly::constant(rat(1, 32));
    lhs == rhs
}

fn euler_not_dickson(n: usize, samples: &[(Rat, Rat)]) -> Result<(bool, String)> {
    let e: QPoly = euler_poly(n);
    if n == 4 {
        let ok = detect_dickson_form(&e).is_some()
            && [rat(1, 1), rat(2, 1), rat(1, 3)].iter().all(euler_four_identity);
        return Ok((ok, "Dickson form found".into()));
    }
    let mut variants = vec![e.clone()];
    for (c, d) in samples {
        variants.push(e.compose(&QLinear::new(c.clone(), d.clone())?.to_poly()));
    }
    for v in &variants {
        if detect_power_form(v).is_some() || detect_dickson_form(v).is_some() {
            return Ok((false, format!("special form found for {v}")));
        }
    }
    Ok((true, format!("{} variants", variants.len())))
}

/// Runs every check over the configured ranges.
pub fn run(opts: &TheoremOptions) -> Result<Vec<CheckRow>> {
    opts.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut rows = Vec::new();
    for k in (3..=opts.euler_max).filter(|k| k % 2 == 1) {
        rows.push(row(Check::EulerOdd, k, euler_odd(k)));
    }
    for k in (4..=opts.euler_max).filter(|k| k % 2 == 0) {
        rows.push(row(Check::EulerEven, k, euler_even(k)));
    }
    for m in 2..=opts.euler_max / 2 {
        rows.push(row(Check::ETilde, m, etilde(m)));
    }
    for m in 7..=opts.rak_max {
        let extra: Vec<Rat> = (0..opts.samples).map(|_| random_rat(&mut rng, 50)).collect();
        rows.push(row(Check::SimpleRoots, m, simple_roots(m, &extra)));
    }
    for k in 3..=opts.dickson_max {
        rows.push(row(Check::DicksonExtrema, k, dickson_extrema_shapes_hold(k)));
    }
    for n in (2..=opts.factor_max).filter(|n| n % 2 == 0) {
        let outcome = lemma_dr_check(n).map(|ok| (ok, "canonical factorization".to_string()));
        rows.push(row(Check::RealFactors, n, outcome));
    }
    for n in 4..=12 {
        let samples: Vec<(Rat, Rat)> =
            (0..opts.samples).map(|_| (random_nonzero_rat(&mut rng, 9), random_rat(&mut rng, 9))).collect();
        rows.push(row(Check::EulerNotDickson, n, euler_not_dickson(n, &samples)));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_pass() {
        let opts = TheoremOptions { euler_max: 12, rak_max: 9, dickson_max: 6, factor_max: 10, seed: 7, samples: 2 };
        let rows = run(&opts).unwrap();
        assert!(rows.iter().all(|r| r.passed), "{:?}", rows.iter().find(|r| !r.passed));
        for check in Check::ALL {
            assert!(rows.iter().any(|r| r.check == check), "{check}");
        }
    }

    #[test]
    fn ranges_validated() {
        let opts = TheoremOptions { rak_max: 6, ..Default::default() };
        assert!(run(&opts).is_err());
        let opts = TheoremOptions { euler_max: MAX_DEGREE + 1, ..Default::default() };
        assert!(run(&opts).is_err());
    }

    #[test]
    fn four_identity() {
        assert!(euler_four_identity(&rat(2, 1)));
        assert!(euler_four_identity(&rat(-5, 7)));
    }
}
