//! Euler polynomials, Euler numbers, the reduced polynomials `Ẽ_m`, Dickson
//! polynomials and the alternating power sum.

use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::poly::{Linear, Poly};
use crate::scalar::Field;
use crate::{Int, QLinear, QPoly, Rat};

/// `C(n, k)` in the target field, by the multiplicative formula.
pub(crate) fn binomial<T: Field>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(T::one(), |acc, j| {
        acc * T::from_int((n - j) as i64) / T::from_int(j as i64 + 1)
    })
}

/// The Euler polynomial `E_k`, solved coefficient by coefficient from the top
/// out of `E_k(x+1) + E_k(x) = 2x^k`.
///
/// Comparing coefficients of `x^i` gives
/// `2cᵢ + Σ_{j>i} C(j,i)·c_j = 2[i = k]`, which is triangular in `cᵢ`.
pub fn euler_poly<T: Field>(k: usize) -> Poly<T> {
    let half = T::one() / T::from_int(2);
    let mut c = vec![T::zero(); k + 1];
    c[k] = T::one();
    for i in (0..k).rev() {
        let mut binom = T::one();
        let mut acc = T::zero();
        for j in (i + 1)..=k {
            // C(j, i) from C(j-1, i)
            binom = binom * T::from_int(j as i64) / T::from_int((j - i) as i64);
            acc = acc + binom.clone() * c[j].clone();
        }
        c[i] = -(acc * half.clone());
    }
    Poly::new(c)
}

/// The Euler number `E_j = 2^j·E_j(1/2)`.
pub fn euler_number<T: Field>(j: usize) -> T {
    euler_number_from(&euler_poly(j), j)
}

fn euler_number_from<T: Field>(e: &Poly<T>, j: usize) -> T {
    let half = T::one() / T::from_int(2);
    let value = num_traits::pow(T::from_int(2), j) * e.eval(&half);
    assert!(value.is_integral(), "Euler number E_{j} = {value} is not an integer");
    value
}

/// Memoized Euler polynomials and numbers `E_0 … E_max`.
///
/// Build once, then share read-only; [`EulerTable::extend_to`] needs `&mut`.
#[derive(Clone, Debug)]
pub struct EulerTable<T> {
    polys: Vec<Poly<T>>,
    numbers: Vec<T>,
}

impl<T: Field> EulerTable<T> {
    pub fn new(max_index: usize) -> Self {
        let mut table = Self { polys: Vec::new(), numbers: Vec::new() };
        table.extend_to(max_index);
        table
    }

    pub fn max_index(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn extend_to(&mut self, max_index: usize) {
        for j in self.polys.len()..=max_index {
            let e = euler_poly(j);
            self.numbers.push(euler_number_from(&e, j));
            self.polys.push(e);
        }
    }

    pub fn poly(&self, k: usize) -> Option<&Poly<T>> {
        self.polys.get(k)
    }

    pub fn number(&self, j: usize) -> Option<&T> {
        self.numbers.get(j)
    }

    pub fn polys(&self) -> &[Poly<T>] {
        &self.polys
    }

    pub fn numbers(&self) -> &[T] {
        &self.numbers
    }
}

/// `Ẽ_m(x) = Σ_{j=0}^{m} C(2m, 2j)·E_{2j}/4^j · x^{m-j}`, so that
/// `E_{2m}(x) = Ẽ_m((x - 1/2)²)`.
pub fn e_tilde<T: Field>(m: usize) -> Poly<T> {
    let table = EulerTable::<T>::new(2 * m);
    e_tilde_from(&table, m)
}

pub fn e_tilde_from<T: Field>(table: &EulerTable<T>, m: usize) -> Poly<T> {
    let mut coeffs = vec![T::zero(); m + 1];
    let mut four_pow = T::one();
    for j in 0..=m {
        let number = table.number(2 * j).expect("table covers 2m").clone();
        coeffs[m - j] = binomial::<T>(2 * m, 2 * j) * number / four_pow.clone();
        four_pow = four_pow * T::from_int(4);
    }
    Poly::new(coeffs)
}

/// The argument `(x - 1/2)²` that turns `Ẽ_m` into `E_{2m}`.
pub fn half_shift_square<T: Field>() -> Poly<T> {
    let half = T::one() / T::from_int(2);
    Poly::new(vec![half.clone() * half.clone(), -T::one(), T::one()])
}

/// Dickson polynomial `D_m(x, a) = Σ_{i ≤ m/2} m/(m-i)·C(m-i, i)·(-a)^i·x^{m-2i}`,
/// with `D_0 = 2`.
pub fn dickson<T: Field>(m: usize, a: &T) -> Poly<T> {
    if m == 0 {
        return Poly::constant(T::from_int(2));
    }
    let mut coeffs = vec![T::zero(); m + 1];
    let mut neg_a_pow = T::one();
    for i in 0..=m / 2 {
        let weight = T::from_int(m as i64) / T::from_int((m - i) as i64) * binomial::<T>(m - i, i);
        coeffs[m - 2 * i] = weight * neg_a_pow.clone();
        neg_a_pow = neg_a_pow * -a.clone();
    }
    Poly::new(coeffs)
}

/// `Σ_{i=1..n} (-1)^i i^k` by direct summation.
pub fn alt_power_sum_direct(k: u32, n: u64) -> Rat {
    let mut sum = Int::zero();
    for i in 1..=n {
        let term: Int = Int::from(i).pow(k);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Rat::from_integer(sum)
}

/// `(E_k(0) + (-1)^n·E_k(n+1)) / 2`.
pub fn alt_power_sum_closed(k: u32, n: &Int) -> Rat {
    alt_power_sum_closed_with(&euler_poly(k as usize), n)
}

/// Closed form with a precomputed `E_k`.
pub fn alt_power_sum_closed_with(e_k: &QPoly, n: &Int) -> Rat {
    let at_end = e_k.eval(&Rat::from_integer(n + Int::one()));
    let signed = if n.is_even() { at_end } else { -at_end };
    (e_k.coeff(0) + signed) / Rat::from_integer(2.into())
}

/// Parity of the number of summands `n` on the left-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `n = 2x`: `f(X) = (E_k(0) + X)/2`, `h(x) = 2x + 1`.
    EvenN,
    /// `n = 2x - 1`: `f(X) = (E_k(0) - X)/2`, `h(x) = 2x`.
    OddN,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::EvenN, Parity::OddN];

    pub fn name(self) -> &'static str {
        match self {
            Parity::EvenN => "even-n",
            Parity::OddN => "odd-n",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "even-n" | "even" => Ok(Parity::EvenN),
            "odd-n" | "odd" => Ok(Parity::OddN),
            other => Err(Error::Parse(format!("unknown parity branch '{other}'"))),
        }
    }

    /// Number of summands corresponding to reduced variable `x`.
    pub fn terms(self, x: &Int) -> Int {
        match self {
            Parity::EvenN => x * 2,
            Parity::OddN => x * 2 - 1,
        }
    }
}

/// The two linear maps turning the left-hand side into `F_k(x) = f(E_k(h(x)))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSides {
    pub k: u32,
    pub branch: Parity,
    pub f: QLinear,
    pub h: QLinear,
    e_k: QPoly,
}

impl EquationSides {
    /// `F_k = f ∘ E_k ∘ h`.
    pub fn composed(&self) -> QPoly {
        self.f.apply_poly(&self.e_k.compose(&self.h.to_poly()))
    }

    pub fn euler(&self) -> &QPoly {
        &self.e_k
    }

    /// `f(E_k(h(x)))` at an integer point.
    pub fn eval(&self, x: &Int) -> Rat {
        let hx = self.h.apply(&Rat::from_integer(x.clone()));
        self.f.apply(&self.e_k.eval(&hx))
    }
}

/// The outer linear map `f(X) = (E_k(0) ± X)/2` for a branch.
pub fn branch_outer(e_k0: &Rat, branch: Parity) -> QLinear {
    let half = crate::rat(1, 2);
    let slope = match branch {
        Parity::EvenN => half.clone(),
        Parity::OddN => -half.clone(),
    };
    Linear::new(slope, e_k0 * &half).expect("nonzero slope")
}

pub fn equation_sides(k: u32, branch: Parity) -> Result<EquationSides> {
    if k < 1 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let e_k: QPoly = euler_poly(k as usize);
    let f = branch_outer(&e_k.coeff(0), branch);
    let h = match branch {
        Parity::EvenN => Linear::new(crate::rat(2, 1), crate::rat(1, 1)),
        Parity::OddN => Linear::new(crate::rat(2, 1), crate::rat(0, 1)),
    }
    .expect("nonzero slope");
    Ok(EquationSides { k, branch, f, h, e_k })
}
