//! Functional decomposition in the tame case.
//!
//! Every nontrivial decomposition `f = g∘h` of a monic `f` is equivalent to a
//! unique pair `(g̃, h̃)` where both factors are monic with coefficients in the
//! base field and `g̃` has no `x^{t-1}` term. The top `k` coefficients of `f`
//! determine `h̃` through a triangular system, and `g̃` then falls out of the
//! base-`h̃` expansion of `f`. Non-monic inputs are handled by dividing out the
//! leading coefficient and carrying it as a scale on the outer factor.

use crate::error::{Error, Result};
use crate::poly::{polynomial_in, right_linear_candidates, series_root, Linear, Poly};
use crate::scalar::Field;

/// Inputs above this degree are refused.
pub const MAX_DEGREE: usize = 512;

/// `f = scale · outer∘inner` with `outer`, `inner` monic and `outer` depressed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedDecomposition<T> {
    pub outer: Poly<T>,
    pub inner: Poly<T>,
    pub scale: T,
}

impl<T: Field> NormalizedDecomposition<T> {
    pub fn outer_degree(&self) -> usize {
        self.outer.deg().unwrap_or(0)
    }

    pub fn inner_degree(&self) -> usize {
        self.inner.deg().unwrap_or(0)
    }

    /// `scale · outer`, the outer factor of the original (non-monic) input.
    pub fn scaled_outer(&self) -> Poly<T> {
        self.outer.scale(&self.scale)
    }

    pub fn composed(&self) -> Poly<T> {
        self.scaled_outer().compose(&self.inner)
    }

    /// Checks monicity, the vanishing `x^{t-1}` coefficient and degrees.
    pub fn is_normalized(&self) -> bool {
        let t = self.outer_degree();
        self.outer.is_monic()
            && self.inner.is_monic()
            && t >= 2
            && self.inner_degree() >= 2
            && self.outer.coeff(t - 1).is_zero()
    }
}

/// All normalized decompositions of `source`, one per admissible inner degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionSet<T> {
    pub source: Poly<T>,
    pub pairs: Vec<NormalizedDecomposition<T>>,
}

impl<T: Field> DecompositionSet<T> {
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn inner_degrees(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.inner_degree()).collect()
    }

    pub fn at_inner_degree(&self, k: usize) -> Option<&NormalizedDecomposition<T>> {
        self.pairs.iter().find(|p| p.inner_degree() == k)
    }
}

fn degree_checked<T: Field>(f: &Poly<T>, min: usize, what: &'static str) -> Result<usize> {
    let n = f.deg().unwrap_or(0);
    if f.is_zero() || n < min.max(1) {
        return Err(Error::ConstantPolynomial(what));
    }
    if n > MAX_DEGREE {
        return Err(Error::DegreeLimit { degree: n, limit: MAX_DEGREE });
    }
    Ok(n)
}

fn check_inner_degree(n: usize, k: usize) -> Result<()> {
    if k < 2 || 2 * k > n || n % k != 0 {
        return Err(Error::InvalidInnerDegree { degree: n, inner: k });
    }
    Ok(())
}

/// Splits `f` as `lc(f) · monic`.
pub fn normalize_monic<T: Field>(f: &Poly<T>) -> Result<(T, Poly<T>)> {
    degree_checked(f, 1, "normalize_monic")?;
    let lc = f.leading().unwrap().clone();
    Ok((lc, f.monic()))
}

/// The only possible normalized inner factor of degree `k` of a monic `f`.
///
/// Writing `f = h̃^t + a_{t-2}h̃^{t-2} + …`, the coefficients of `x^{n-1}` down
/// to `x^{n-k}` only see `h̃^t`, so `h̃` is the polynomial part of `f^{1/t}`:
/// the reversed coefficients of `h̃` are the first `k` terms of the power
/// series `t`-th root of the reversed coefficients of `f`.
pub fn inner_candidate<T: Field>(f: &Poly<T>, k: usize) -> Result<Poly<T>> {
    let n = degree_checked(f, 2, "inner_candidate")?;
    if !f.is_monic() {
        return Err(Error::Precondition("inner_candidate expects a monic polynomial".into()));
    }
    check_inner_degree(n, k)?;
    // top[j] = c_{n-j}; root[j] = b_{k-j}
    let top: Vec<T> = (0..=k).map(|j| f.coeff(n - j)).collect();
    let mut root = series_root(&top, n / k, k + 1);
    root.reverse();
    Ok(Poly::new(root))
}

/// The normalized decomposition with inner degree `k`, if `f` has one.
pub fn try_decompose<T: Field>(f: &Poly<T>, k: usize) -> Result<Option<NormalizedDecomposition<T>>> {
    let n = degree_checked(f, 2, "try_decompose")?;
    check_inner_degree(n, k)?;
    let (scale, monic) = normalize_monic(f)?;
    let inner = inner_candidate(&monic, k)?;
    let Some(outer) = polynomial_in(&monic, &inner)? else {
        return Ok(None);
    };
    let pair = NormalizedDecomposition { outer, inner, scale };
    debug_assert!(pair.is_normalized());
    Ok(Some(pair))
}

/// Brings an arbitrary decomposition `f = g∘h` to normalized form: conjugate
/// by the inner leading coefficient, then shift to kill the `x^{t-1}` term of
/// the outer factor.
pub fn normalize_pair<T: Field>(g: &Poly<T>, h: &Poly<T>) -> Result<NormalizedDecomposition<T>> {
    let t = degree_checked(g, 2, "normalize_pair")?;
    degree_checked(h, 2, "normalize_pair")?;
    let b = h.leading().unwrap().clone();
    let g_hat = g.compose(&Poly::monomial(b.clone(), 1));
    let h_hat = h.scale(&(T::one() / b));
    let scale = g_hat.leading().unwrap().clone();
    let g_hat = g_hat.monic();
    let shift = g_hat.coeff(t - 1) / T::from_int(t as i64);
    let outer = g_hat.shift(&-shift.clone());
    let inner = &h_hat + &Poly::constant(shift);
    Ok(NormalizedDecomposition { outer, inner, scale })
}

/// Tries every inner degree `k | deg f` with `2 ≤ k ≤ deg f / 2`, ascending.
pub fn all_decompositions<T: Field>(f: &Poly<T>) -> Result<DecompositionSet<T>> {
    let n = degree_checked(f, 2, "all_decompositions")?;
    let mut pairs = Vec::new();
    for k in (2..=n / 2).filter(|k| n % k == 0) {
        if let Some(p) = try_decompose(f, k)? {
            pairs.push(p);
        }
    }
    Ok(DecompositionSet { source: f.clone(), pairs })
}

/// No nontrivial decomposition exists. Over a field of characteristic zero
/// this holds over every extension field as well.
pub fn is_indecomposable<T: Field>(f: &Poly<T>) -> Result<bool> {
    Ok(all_decompositions(f)?.is_empty())
}

/// Moves linear slack outward so every factor after the first is monic with
/// zero constant term. Two chains are equivalent iff their canonical forms
/// coincide.
pub fn canonicalize_chain<T: Field>(chain: &[Poly<T>]) -> Vec<Poly<T>> {
    let mut out = chain.to_vec();
    for i in (1..out.len()).rev() {
        let lc = out[i].leading().unwrap().clone();
        let ell = Linear::new(T::one() / lc, -out[i].coeff(0) / out[i].leading().unwrap().clone())
            .expect("nonzero slope");
        out[i] = ell.apply_poly(&out[i]);
        out[i - 1] = out[i - 1].compose(&ell.inverse().to_poly());
    }
    out
}

fn chains_of<T: Field>(f: &Poly<T>) -> Result<Vec<Vec<Poly<T>>>> {
    let set = all_decompositions(f)?;
    if set.is_empty() {
        return Ok(vec![vec![f.clone()]]);
    }
    let mut out: Vec<Vec<Poly<T>>> = Vec::new();
    for pair in &set.pairs {
        let outer_chains = chains_of(&pair.scaled_outer())?;
        let inner_chains = chains_of(&pair.inner)?;
        for oc in &outer_chains {
            for ic in &inner_chains {
                let chain: Vec<Poly<T>> = oc.iter().chain(ic.iter()).cloned().collect();
                let chain = canonicalize_chain(&chain);
                if !out.contains(&chain) {
                    out.push(chain);
                }
            }
        }
    }
    Ok(out)
}

/// Every complete decomposition of `f` up to equivalence, outermost factor
/// first, in canonical form (see [`canonicalize_chain`]).
pub fn complete_decompositions<T: Field>(f: &Poly<T>) -> Result<Vec<Vec<Poly<T>>>> {
    degree_checked(f, 2, "complete_decompositions")?;
    chains_of(f)
}

/// Composes a chain, outermost first.
pub fn compose_chain<T: Field>(chain: &[Poly<T>]) -> Poly<T> {
    chain
        .iter()
        .rev()
        .fold(Poly::x(), |acc, p| p.compose(&acc))
}

/// The linear `ℓ` relating two decompositions of the same polynomial:
/// `d2.outer = d1.outer∘ℓ` and `d1.inner = ℓ∘d2.inner`.
pub fn decompositions_equivalent<T: Field>(
    d1: (&Poly<T>, &Poly<T>),
    d2: (&Poly<T>, &Poly<T>),
) -> Result<Linear<T>> {
    let (g1, h1) = d1;
    let (g2, h2) = d2;
    if g1.deg() != g2.deg() || h1.deg() != h2.deg() || g1.compose(h1) != g2.compose(h2) {
        return Err(Error::DecompositionMismatch);
    }
    right_linear_candidates(g2, g1)
        .into_iter()
        .find(|ell| ell.apply_poly(h2) == *h1)
        .ok_or_else(|| Error::Precondition("no linear map relates the two decompositions".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{e_tilde, euler_poly, half_shift_square};
    use crate::{rat, QPoly, Rat};

    #[test]
    fn normalize_monic_examples() {
        assert_eq!(normalize_monic(&QPoly::from_ints(&[0, 0, 2])).unwrap(), (rat(2, 1), QPoly::from_ints(&[0, 0, 1])));
        let f = QPoly::from_ints(&[0, -1, 0, 1]);
        assert_eq!(normalize_monic(&f).unwrap(), (rat(1, 1), f.clone()));
        let g = QPoly::monomial(rat(-1, 3), 4);
        assert_eq!(normalize_monic(&g).unwrap(), (rat(-1, 3), QPoly::monomial(rat(1, 1), 4)));
        assert!(normalize_monic(&QPoly::from_ints(&[5])).is_err());
    }

    #[test]
    fn inner_candidate_examples() {
        let f = QPoly::from_ints(&[1, 0, 2, 0, 1]);
        assert_eq!(inner_candidate(&f, 2).unwrap(), QPoly::from_ints(&[1, 0, 1]));
        let d = try_decompose(&f, 2).unwrap().unwrap();
        assert_eq!(d.outer, QPoly::from_ints(&[0, 0, 1]));

        let e8: QPoly = euler_poly(8);
        assert_eq!(inner_candidate(&e8, 2).unwrap().coeff(1), rat(-1, 1));

        assert_eq!(inner_candidate(&QPoly::monomial(rat(1, 1), 6), 2).unwrap(), QPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn inner_candidate_rejects_bad_degrees() {
        let f = QPoly::monomial(rat(1, 1), 6);
        assert!(matches!(inner_candidate(&f, 4), Err(Error::InvalidInnerDegree { .. })));
        assert!(matches!(inner_candidate(&f, 6), Err(Error::InvalidInnerDegree { .. })));
        assert!(matches!(inner_candidate(&f, 1), Err(Error::InvalidInnerDegree { .. })));
        assert!(inner_candidate(&f.scale(&rat(2, 1)), 2).is_err());
    }

    #[test]
    fn euler_eight_matches_reduced_form() {
        let e8: QPoly = euler_poly(8);
        let d = try_decompose(&e8, 2).unwrap().unwrap();
        assert_eq!(d.composed(), e8);
        let ell = decompositions_equivalent((&e_tilde::<Rat>(4), &half_shift_square()), (&d.outer, &d.inner)).unwrap();
        assert_eq!(e_tilde::<Rat>(4).compose(&ell.to_poly()), d.outer);
    }

    #[test]
    fn odd_euler_does_not_decompose() {
        let e9: QPoly = euler_poly(9);
        assert_eq!(try_decompose(&e9, 3).unwrap(), None);
    }

    #[test]
    fn constructed_composite_roundtrips() {
        let f = QPoly::from_ints(&[0, 1, 1]).pow(3).compose(&QPoly::x());
        let f = &f + &QPoly::from_ints(&[5]);
        let d = try_decompose(&f, 2).unwrap().unwrap();
        assert!(d.is_normalized());
        assert_eq!(d.composed(), f);
    }

    #[test]
    fn all_decompositions_examples() {
        let e10: QPoly = euler_poly(10);
        assert_eq!(all_decompositions(&e10).unwrap().inner_degrees(), vec![2]);
        let e11: QPoly = euler_poly(11);
        assert!(all_decompositions(&e11).unwrap().is_empty());
        let x8 = QPoly::monomial(rat(1, 1), 8);
        assert_eq!(all_decompositions(&x8).unwrap().inner_degrees(), vec![2, 4]);
    }

    #[test]
    fn indecomposability_examples() {
        assert!(is_indecomposable(&euler_poly::<Rat>(9)).unwrap());
        assert!(is_indecomposable(&e_tilde::<Rat>(6)).unwrap());
        assert!(!is_indecomposable(&QPoly::monomial(rat(1, 1), 4)).unwrap());
    }

    #[test]
    fn complete_decomposition_examples() {
        let degrees = |chains: &Vec<Vec<QPoly>>| -> Vec<Vec<usize>> {
            chains.iter().map(|c| c.iter().map(|p| p.deg().unwrap()).collect()).collect()
        };
        let x8 = QPoly::monomial(rat(1, 1), 8);
        let chains = complete_decompositions(&x8).unwrap();
        assert_eq!(degrees(&chains), vec![vec![2, 2, 2]]);

        let e12: QPoly = euler_poly(12);
        let chains = complete_decompositions(&e12).unwrap();
        assert_eq!(degrees(&chains), vec![vec![6, 2]]);
        assert_eq!(compose_chain(&chains[0]), e12);

        let x6 = QPoly::monomial(rat(1, 1), 6);
        let chains = complete_decompositions(&x6).unwrap();
        assert_eq!(degrees(&chains), vec![vec![3, 2], vec![2, 3]]);
        for c in &chains {
            assert_eq!(compose_chain(c), x6);
        }
    }

    #[test]
    fn equivalence_examples() {
        let x2 = QPoly::from_ints(&[0, 0, 1]);
        let ell = decompositions_equivalent(
            (&x2, &QPoly::from_ints(&[1, 1])),
            (&QPoly::from_ints(&[1, 2, 1]), &QPoly::x()),
        )
        .unwrap();
        assert_eq!(ell, Linear::new(rat(1, 1), rat(1, 1)).unwrap());

        let g = QPoly::from_ints(&[3, 1, 4, 1]);
        let h = QPoly::from_ints(&[5, 9, 2]);
        assert_eq!(decompositions_equivalent((&g, &h), (&g, &h)).unwrap(), Linear::identity());
    }

    #[test]
    fn equivalence_rejects_mismatched_pairs() {
        let x2 = QPoly::from_ints(&[0, 0, 1]);
        let r = decompositions_equivalent((&x2, &QPoly::from_ints(&[1, 1])), (&x2, &QPoly::from_ints(&[2, 1])));
        assert_eq!(r, Err(Error::DecompositionMismatch));
    }

    #[test]
    fn degree_guard() {
        let big = QPoly::monomial(rat(1, 1), MAX_DEGREE + 2);
        assert!(matches!(all_decompositions(&big), Err(Error::DegreeLimit { .. })));
    }
}
