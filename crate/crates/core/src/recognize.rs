//! Standard pairs, detection of power and Dickson shapes up to linear
//! changes of variable, and the extremum structure of Dickson polynomials.

use std::f64::consts::PI;

use num_integer::Integer;
use num_traits::pow;

use crate::classical::{binomial, dickson};
use crate::error::{Error, Result};
use crate::poly::{depress, squarefree_decompose, Linear, Poly};
use crate::scalar::Field;
use crate::Int;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairKind<T> {
    /// `(x^m, a·x^r·p(x)^m)`
    First { m: usize, r: usize, a: T, p: Poly<T> },
    /// `(x², (a·x² + b)·p(x)²)`
    Second { a: T, b: T, p: Poly<T> },
    /// `(D_m(x, a^n), D_n(x, a^m))`
    Third { m: usize, n: usize, a: T },
    /// `(a^{-m/2}·D_m(x, a), -b^{-n/2}·D_n(x, b))`
    Fourth { m: usize, n: usize, a: T, b: T },
    /// `((a·x² - 1)³, 3x⁴ - 4x³)`
    Fifth { a: T },
}

/// A standard pair; construction enforces the parameter constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardPair<T> {
    kind: PairKind<T>,
    switched: bool,
}

fn nonzero<T: Field>(v: &T, name: &str) -> Result<()> {
    if v.is_zero() {
        return Err(Error::InvalidStandardPair(format!("{name} must be nonzero")));
    }
    Ok(())
}

impl<T: Field> StandardPair<T> {
    pub fn first(m: usize, r: usize, a: T, p: Poly<T>, switched: bool) -> Result<Self> {
        nonzero(&a, "a")?;
        if m == 0 || r >= m {
            return Err(Error::InvalidStandardPair(format!("need 0 <= r < m, got r={r}, m={m}")));
        }
        if r.gcd(&m) != 1 {
            return Err(Error::InvalidStandardPair(format!("gcd(r, m) = {} != 1", r.gcd(&m))));
        }
        let Some(dp) = p.deg() else {
            return Err(Error::InvalidStandardPair("p must be nonzero".into()));
        };
        if r + dp == 0 {
            return Err(Error::InvalidStandardPair("r + deg p must be positive".into()));
        }
        Ok(Self { kind: PairKind::First { m, r, a, p }, switched })
    }

    pub fn second(a: T, b: T, p: Poly<T>, switched: bool) -> Result<Self> {
        nonzero(&a, "a")?;
        nonzero(&b, "b")?;
        if p.is_zero() {
            return Err(Error::InvalidStandardPair("p must be nonzero".into()));
        }
        Ok(Self { kind: PairKind::Second { a, b, p }, switched })
    }

    pub fn third(m: usize, n: usize, a: T, switched: bool) -> Result<Self> {
        nonzero(&a, "a")?;
        if m == 0 || n == 0 || m.gcd(&n) != 1 {
            return Err(Error::InvalidStandardPair(format!("third kind needs gcd(m, n) = 1, got m={m}, n={n}")));
        }
        Ok(Self { kind: PairKind::Third { m, n, a }, switched })
    }

    pub fn fourth(m: usize, n: usize, a: T, b: T, switched: bool) -> Result<Self> {
        nonzero(&a, "a")?;
        nonzero(&b, "b")?;
        if m == 0 || n == 0 || m.gcd(&n) != 2 {
            return Err(Error::InvalidStandardPair(format!("fourth kind needs gcd(m, n) = 2, got m={m}, n={n}")));
        }
        Ok(Self { kind: PairKind::Fourth { m, n, a, b }, switched })
    }

    pub fn fifth(a: T, switched: bool) -> Result<Self> {
        nonzero(&a, "a")?;
        Ok(Self { kind: PairKind::Fifth { a }, switched })
    }

    pub fn kind(&self) -> &PairKind<T> {
        &self.kind
    }

    pub fn switched(&self) -> bool {
        self.switched
    }

    /// The pair `(f₁, g₁)` as polynomials, with the switch applied.
    pub fn materialize(&self) -> (Poly<T>, Poly<T>) {
        let one = T::one();
        let (f1, g1) = match &self.kind {
            PairKind::First { m, r, a, p } => (
                Poly::monomial(one, *m),
                &Poly::monomial(a.clone(), *r) * &p.pow(*m as u32),
            ),
            PairKind::Second { a, b, p } => (
                Poly::monomial(one, 2),
                &Poly::new(vec![b.clone(), T::zero(), a.clone()]) * &p.pow(2),
            ),
            PairKind::Third { m, n, a } => (
                dickson(*m, &pow(a.clone(), *n)),
                dickson(*n, &pow(a.clone(), *m)),
            ),
            PairKind::Fourth { m, n, a, b } => {
                let fa = T::one() / pow(a.clone(), m / 2);
                let fb = -(T::one() / pow(b.clone(), n / 2));
                (dickson(*m, a).scale(&fa), dickson(*n, b).scale(&fb))
            }
            PairKind::Fifth { a } => (
                Poly::new(vec![-T::one(), T::zero(), a.clone()]).pow(3),
                Poly::from_ints(&[0, 0, 0, -4, 3]),
            ),
        };
        if self.switched {
            (g1, f1)
        } else {
            (f1, g1)
        }
    }
}

/// `p(x) = u·(x + shift)^degree + v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerForm<T> {
    pub u: T,
    pub v: T,
    pub shift: T,
    pub degree: usize,
}

impl<T: Field> PowerForm<T> {
    pub fn materialize(&self) -> Poly<T> {
        let base = Poly::new(vec![self.shift.clone(), T::one()]);
        &base.pow(self.degree as u32).scale(&self.u) + &Poly::constant(self.v.clone())
    }
}

/// `p(x) = u·D_q(inner(x), a) + v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicksonForm<T> {
    pub u: T,
    pub v: T,
    pub a: T,
    pub inner: Linear<T>,
    pub degree: usize,
}

impl<T: Field> DicksonForm<T> {
    pub fn materialize(&self) -> Poly<T> {
        let d = dickson(self.degree, &self.a).compose(&self.inner.to_poly());
        &d.scale(&self.u) + &Poly::constant(self.v.clone())
    }
}

/// Decides whether `p = u·(x + shift)^q + v` with `q = deg p ≥ 2`.
pub fn detect_power_form<T: Field>(p: &Poly<T>) -> Option<PowerForm<T>> {
    let q = p.deg().filter(|&q| q >= 2)?;
    let (s, depressed) = depress(p).ok()?;
    if (1..q).any(|i| !depressed.coeff(i).is_zero()) {
        return None;
    }
    let form = PowerForm { u: depressed.coeff(q), v: depressed.coeff(0), shift: -s, degree: q };
    (form.materialize() == *p).then_some(form)
}

/// Decides whether `p = u·D_q(ℓ(x), a) + v` for some linear `ℓ` and `a ≠ 0`,
/// `q = deg p ≥ 3`.
///
/// Because `D_q(c·x, c²·a) = c^q·D_q(x, a)`, the slope of `ℓ` can be absorbed
/// into `u` and `a`; the witness returned always has slope 1. The shift comes
/// from depressing `p` (Dickson polynomials have no `x^{q-1}` term), `u` from
/// the leading coefficient and `a` from the `x^{q-2}` coefficient, which is
/// `-q·a·u`. All remaining coefficients are then checked exactly.
pub fn detect_dickson_form<T: Field>(p: &Poly<T>) -> Option<DicksonForm<T>> {
    let q = p.deg().filter(|&q| q >= 3)?;
    let (s, depressed) = depress(p).ok()?;
    let u = depressed.coeff(q);
    let a = -depressed.coeff(q - 2) / (T::from_int(q as i64) * u.clone());
    if a.is_zero() {
        return None;
    }
    let d = dickson(q, &a);
    let v = depressed.coeff(0) - u.clone() * d.coeff(0);
    if &d.scale(&u) + &Poly::constant(v.clone()) != depressed {
        return None;
    }
    let inner = Linear::new(T::one(), -s).expect("unit slope");
    let form = DicksonForm { u, v, a, inner, degree: q };
    (form.materialize() == *p).then_some(form)
}

/// An extremum `c` of `P` together with the ascending root multiplicities of
/// `P - c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremumReport<T> {
    pub value: T,
    pub kind: Vec<usize>,
}

/// Types of the two extrema `±2a^{k/2}` of `D_k(x, a)`, computed from the
/// square-free decomposition of `D_k(x, a) ∓ 2a^{k/2}`.
pub fn dickson_extrema<T: Field>(k: usize, a: &T) -> Result<Vec<ExtremumReport<T>>> {
    if k < 3 {
        return Err(Error::Precondition(format!("dickson_extrema needs k >= 3, got {k}")));
    }
    if a.is_zero() {
        return Err(Error::Precondition("dickson_extrema needs a != 0".into()));
    }
    let half_power = if k % 2 == 0 {
        pow(a.clone(), k / 2)
    } else {
        let root = a.nth_root(2).ok_or_else(|| {
            Error::IrrationalPower(format!(
                "a^(k/2) with odd k = {k} is rational only when a is a rational square; {a} is not"
            ))
        })?;
        pow(root, k)
    };
    let d = dickson(k, a);
    let two = T::from_int(2);
    [two.clone() * half_power.clone(), -(two * half_power)]
        .into_iter()
        .map(|value| {
            let shifted = &d - &Poly::constant(value.clone());
            let kind = squarefree_decompose(&shifted)?.root_multiplicities();
            Ok(ExtremumReport { value, kind })
        })
        .collect()
}

/// The multiplicity shapes expected for `D_k` extrema: `(+, -)`.
pub fn dickson_extremum_shapes(k: usize) -> (Vec<usize>, Vec<usize>) {
    if k % 2 == 1 {
        let shape: Vec<usize> = std::iter::once(1).chain(std::iter::repeat(2).take((k - 1) / 2)).collect();
        (shape.clone(), shape)
    } else {
        let plus = [1, 1].into_iter().chain(std::iter::repeat(2).take((k - 2) / 2)).collect();
        (plus, vec![2; k / 2])
    }
}

/// Relative tolerance for the floating-point factor reconstruction.
pub const LEMMA_DR_TOLERANCE: f64 = 1e-9;

/// Checks the canonical real factorization
/// `(x+1)^n - x^n = (2x+1)·∏_{j=1}^{n/2-1} (c_j x² + c_j x + 1)`,
/// `c_j = 2 - 2cos(2πj/n)`, in double precision: every `c_j` must be positive
/// and the product must match the binomial expansion coefficient-wise.
pub fn lemma_dr_check(n: usize) -> Result<bool> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Precondition(format!("n must be a positive even integer, got {n}")));
    }
    let mut product: Poly<f64> = Poly::new(vec![1.0, 2.0]);
    for j in 1..n / 2 {
        let c = 2.0 - 2.0 * (2.0 * PI * j as f64 / n as f64).cos();
        if c <= LEMMA_DR_TOLERANCE {
            return Ok(false);
        }
        product = &product * &Poly::new(vec![1.0, c, c]);
    }
    let exact: Vec<f64> = (0..n).map(|i| binomial::<crate::Rat>(n, i)).map(|b| rat_to_f64(&b)).collect();
    if product.deg() != Some(n - 1) {
        return Ok(false);
    }
    Ok(exact.iter().enumerate().all(|(i, e)| {
        let got = product.coeff(i);
        (got - e).abs() <= LEMMA_DR_TOLERANCE * e.abs().max(1.0)
    }))
}

fn rat_to_f64(r: &crate::Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("finite binomial")
}

/// The pivotal inequality from the even-index case of the Euler
/// indecomposability argument: `C(k,4) > (t-1)·k²·(k-2)·(k-3)/16`.
/// It fails for every `t ≥ 2`, `k ≥ 4`.
pub fn coefficient_inequality_holds(t: usize, k: usize) -> bool {
    let lhs = Int::from(16) * Int::from(k) * Int::from(k.saturating_sub(1)) * Int::from(k.saturating_sub(2))
        * Int::from(k.saturating_sub(3))
        / Int::from(24);
    let rhs = Int::from(t as i64 - 1) * Int::from(k * k) * Int::from(k as i64 - 2) * Int::from(k as i64 - 3);
    lhs > rhs
}
