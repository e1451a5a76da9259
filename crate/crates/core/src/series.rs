//! Truncated formal power series and the R-type transforms built on them.
//!
//! A [`FormalSeries`] of truncation `K` stores `c_0, …, c_K` and all
//! arithmetic is modulo `z^{K+1}`. Binary operations take the smaller
//! truncation of their operands.

use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cumulants::{
    cumulants_from_moments, first_off_support, power_moments, CumulantError, MomentSequence,
};
use crate::cyclo::CycloNum;
use crate::scalar::{factorial, Field, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("{op} needs constant term {expected}")]
    ConstantTerm { op: &'static str, expected: &'static str },
    #[error("compositional inverse needs a nonzero linear coefficient")]
    NoLinearTerm,
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Cumulant(#[from] CumulantError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "SeriesRepr<F>", try_from = "SeriesRepr<F>")]
#[serde(bound(serialize = "F: Field + Serialize", deserialize = "F: Field + Deserialize<'de>"))]
pub struct FormalSeries<F: Field> {
    coeffs: Vec<F>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr<F> {
    truncation: usize,
    coeffs: Vec<F>,
}

impl<F: Field> From<FormalSeries<F>> for SeriesRepr<F> {
    fn from(s: FormalSeries<F>) -> Self {
        SeriesRepr {
            truncation: s.truncation(),
            coeffs: s.coeffs,
        }
    }
}

impl<F: Field> TryFrom<SeriesRepr<F>> for FormalSeries<F> {
    type Error = String;
    fn try_from(r: SeriesRepr<F>) -> Result<Self, String> {
        if r.coeffs.len() != r.truncation + 1 {
            return Err(format!(
                "truncation {} needs {} coefficients, got {}",
                r.truncation,
                r.truncation + 1,
                r.coeffs.len()
            ));
        }
        Ok(FormalSeries { coeffs: r.coeffs })
    }
}

impl<F: Field> FormalSeries<F> {
    /// Builds `c_0 + c_1 z + …`; the truncation is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least c_0");
        FormalSeries { coeffs }
    }

    pub fn zero(truncation: usize) -> Self {
        FormalSeries {
            coeffs: vec![F::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        Self::monomial(F::one(), 0, truncation)
    }

    /// `c z^k`, which is zero if `k` exceeds the truncation.
    pub fn monomial(c: F, k: usize, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        if k <= truncation {
            s.coeffs[k] = c;
        }
        s
    }

    /// Reads `coeffs[i]` for `i ≤ K` and pads with zeros.
    pub fn from_prefix(coeffs: &[F], truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        for (dst, src) in s.coeffs.iter_mut().zip(coeffs) {
            *dst = src.clone();
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, truncation: usize) -> Self {
        Self::from_prefix(&self.coeffs, truncation.min(self.truncation()))
    }

    pub fn scale(&self, c: &F) -> Self {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Indices whose coefficient is nonzero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&k| !self.coeffs[k].is_zero())
            .collect()
    }

    /// `f(z^n)`, keeping the truncation.
    pub fn substitute_power(&self, n: usize) -> Self {
        assert!(n >= 1);
        let mut out = Self::zero(self.truncation());
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * n <= self.truncation() {
                out.coeffs[k * n] = c.clone();
            }
        }
        out
    }

    /// Multiplicative inverse; needs `c_0 ≠ 0`.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0].inv().ok_or(SeriesError::ConstantTerm {
            op: "reciprocal",
            expected: "≠ 0",
        })?;
        let k = self.truncation();
        let mut g = vec![F::zero(); k + 1];
        g[0] = inv0.clone();
        for i in 1..=k {
            let mut acc = F::zero();
            for j in 1..=i {
                acc = acc + self.coeffs[j].clone() * g[i - j].clone();
            }
            g[i] = -(acc * inv0.clone());
        }
        Ok(FormalSeries { coeffs: g })
    }

    /// `exp f`, from `g' = f'g`: `k g_k = Σ_{j=1}^{k} j f_j g_{k-j}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTerm { op: "exp", expected: "0" });
        }
        let k = self.truncation();
        let mut g = vec![F::zero(); k + 1];
        g[0] = F::one();
        for i in 1..=k {
            let mut acc = F::zero();
            for j in 1..=i {
                acc = acc + F::from_i64(j as i64) * self.coeffs[j].clone() * g[i - j].clone();
            }
            g[i] = acc / F::from_i64(i as i64);
        }
        Ok(FormalSeries { coeffs: g })
    }

    /// `log f`, from `f g' = f'`: `k g_k = k f_k − Σ_{j=1}^{k-1} j g_j f_{k-j}`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTerm { op: "log", expected: "1" });
        }
        let k = self.truncation();
        let mut g = vec![F::zero(); k + 1];
        for i in 1..=k {
            let mut acc = F::from_i64(i as i64) * self.coeffs[i].clone();
            for (j, gj) in g.iter().enumerate().take(i).skip(1) {
                acc = acc - F::from_i64(j as i64) * gj.clone() * self.coeffs[i - j].clone();
            }
            g[i] = acc / F::from_i64(i as i64);
        }
        Ok(FormalSeries { coeffs: g })
    }

    /// `self(inner(z))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTerm {
                op: "composition (inner series)",
                expected: "0",
            });
        }
        let k = self.truncation().min(inner.truncation());
        let inner = inner.truncate(k);
        let mut acc = Self::zero(k);
        for c in self.coeffs[..=k].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// `g` with `f(g(z)) = z`, solved one coefficient at a time: with
    /// `g_1, …, g_{k-1}` fixed, the `z^k` coefficient of `f(g)` is
    /// `f_1 g_k + (terms already known)`.
    pub fn comp_inverse(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTerm {
                op: "compositional inverse",
                expected: "0",
            });
        }
        let k = self.truncation();
        if k == 0 {
            return Ok(Self::zero(0));
        }
        let f1_inv = self.coeffs[1].inv().ok_or(SeriesError::NoLinearTerm)?;
        let mut g = Self::monomial(f1_inv.clone(), 1, k);
        for i in 2..=k {
            let known = self.compose(&g)?.coeffs[i].clone();
            g.coeffs[i] = -(known * f1_inv.clone());
        }
        Ok(g)
    }

    /// `Σ_k μ_k z^k / k!` with `μ_0 = 1`.
    pub fn egf(mu: &MomentSequence<F>, truncation: usize) -> Result<Self, SeriesError> {
        check_truncation(mu, truncation)?;
        Ok(FormalSeries {
            coeffs: (0..=truncation)
                .map(|k| mu.get(k) * F::from_rational(&factorial(k)).inv().expect("k! ≠ 0"))
                .collect(),
        })
    }

    /// `Σ_k μ_k z^k` with `μ_0 = 1`.
    pub fn ogf(mu: &MomentSequence<F>, truncation: usize) -> Result<Self, SeriesError> {
        check_truncation(mu, truncation)?;
        Ok(FormalSeries {
            coeffs: (0..=truncation).map(|k| mu.get(k)).collect(),
        })
    }
}

fn check_truncation<R: Ring>(mu: &MomentSequence<R>, k: usize) -> Result<(), SeriesError> {
    if mu.truncation() < k {
        return Err(CumulantError::InsufficientTruncation {
            have: mu.truncation(),
            need: k,
        }
        .into());
    }
    Ok(())
}

impl<F: Field> Add for &FormalSeries<F> {
    type Output = FormalSeries<F>;
    fn add(self, rhs: Self) -> FormalSeries<F> {
        let k = self.truncation().min(rhs.truncation());
        FormalSeries {
            coeffs: (0..=k)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<F: Field> Sub for &FormalSeries<F> {
    type Output = FormalSeries<F>;
    fn sub(self, rhs: Self) -> FormalSeries<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &FormalSeries<F> {
    type Output = FormalSeries<F>;
    fn neg(self) -> FormalSeries<F> {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<F: Field> Mul for &FormalSeries<F> {
    type Output = FormalSeries<F>;
    fn mul(self, rhs: Self) -> FormalSeries<F> {
        let k = self.truncation().min(rhs.truncation());
        let mut out = vec![F::zero(); k + 1];
        for (i, a) in self.coeffs[..=k].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=k - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        FormalSeries { coeffs: out }
    }
}

/// `R₁[μ](z) = Σ α_k z^k / k!` with `α` the classical cumulants.
pub fn r1_transform<F: Field>(
    mu: &MomentSequence<F>,
    truncation: usize,
) -> Result<FormalSeries<F>, SeriesError> {
    let alpha = cumulants_from_moments(mu, &F::one(), truncation)?;
    let mut coeffs = vec![F::zero()];
    for k in 1..=truncation {
        coeffs.push(alpha.get(k) * F::from_rational(&factorial(k)).inv().expect("k! ≠ 0"));
    }
    Ok(FormalSeries::new(coeffs))
}

/// `log Σ μ_k z^k / k!`; the second route to `R₁`.
pub fn r1_from_log<F: Field>(
    mu: &MomentSequence<F>,
    truncation: usize,
) -> Result<FormalSeries<F>, SeriesError> {
    FormalSeries::egf(mu, truncation)?.log()
}

/// `R₀[μ](z) = Σ α_k z^k` with `α` the free cumulants.
pub fn r0_transform<F: Field>(
    mu: &MomentSequence<F>,
    truncation: usize,
) -> Result<FormalSeries<F>, SeriesError> {
    let alpha = cumulants_from_moments(mu, &F::zero(), truncation)?;
    let mut coeffs = vec![F::zero()];
    coeffs.extend(alpha.values().iter().cloned());
    Ok(FormalSeries::new(coeffs))
}

/// `G(K(z)) − z` with `G(ζ) = Σ_{k≥0} μ_k ζ^{-(k+1)}` and
/// `K(z) = (1 + R₀(z))/z`.
///
/// Writing `G` as a series in `w = 1/ζ` and substituting
/// `w = 1/K(z) = z / (1 + R₀(z))` clears the pole, so the identity is
/// checked as an ordinary composition. The result vanishes exactly when
/// `r0` is the R-transform of `μ` through `z^K`.
pub fn r0_relation_residual<F: Field>(
    mu: &MomentSequence<F>,
    r0: &FormalSeries<F>,
) -> Result<FormalSeries<F>, SeriesError> {
    let k = r0.truncation();
    check_truncation(mu, k)?;
    let g = FormalSeries::new(
        (0..=k)
            .map(|i| if i == 0 { F::zero() } else { mu.get(i - 1) })
            .collect(),
    );
    let one_plus = &FormalSeries::one(k) + r0;
    let w = &FormalSeries::monomial(F::one(), 1, k) * &one_plus.reciprocal()?;
    Ok(&g.compose(&w)? - &FormalSeries::monomial(F::one(), 1, k))
}

/// `r_{n,q}[μ](z) = Σ_{k≥1} α^q_{nk} z^{nk} / k!`.
pub fn rnq_transform(
    mu: &MomentSequence<CycloNum>,
    n: usize,
    q: &CycloNum,
    truncation: usize,
) -> Result<FormalSeries<CycloNum>, SeriesError> {
    if !q.is_proper_root(n as u64) {
        return Err(SeriesError::Hypothesis(format!(
            "q = {q} is not a proper {n}-th root of unity"
        )));
    }
    check_support(mu, n, truncation)?;
    let alpha = cumulants_from_moments(mu, q, truncation)?;
    let mut out = FormalSeries::zero(truncation);
    for k in 1..=truncation / n {
        out.coeffs[n * k] = alpha.get(n * k) * CycloNum::from_rational(factorial(k)).inverse().expect("k! ≠ 0");
    }
    Ok(out)
}

fn check_support(
    mu: &MomentSequence<CycloNum>,
    n: usize,
    truncation: usize,
) -> Result<(), SeriesError> {
    if let Some(k) = first_off_support(mu, n, truncation)? {
        return Err(SeriesError::Hypothesis(format!(
            "μ_{k} ≠ 0 but {n} does not divide {k}"
        )));
    }
    Ok(())
}

/// `R₁[μ_{aⁿ}](zⁿ)`: the classical transform of the moments of `aⁿ`, read in
/// the variable `zⁿ`.
pub fn r1_of_power(
    mu: &MomentSequence<CycloNum>,
    n: usize,
    truncation: usize,
) -> Result<FormalSeries<CycloNum>, SeriesError> {
    let levels = truncation / n;
    if levels == 0 {
        return Ok(FormalSeries::zero(truncation));
    }
    let r1 = r1_transform(&power_moments(mu, n, levels)?, levels)?;
    Ok(FormalSeries::from_prefix(r1.coeffs(), truncation).substitute_power(n))
}

/// `n / gcd(δ, n)`, the order of `q^δ` for primitive `q`.
pub fn reduced_order(delta: i64, n: usize) -> usize {
    let r = delta.rem_euclid(n as i64) as usize;
    n / r.gcd(&n)
}

/// `R₁[μ]` for degree 0, otherwise `r_{n', q^δ}[μ]` with `n' = n / gcd(δ, n)`.
pub fn graded_r_transform(
    mu: &MomentSequence<CycloNum>,
    delta: i64,
    n: usize,
    q: &CycloNum,
    truncation: usize,
) -> Result<FormalSeries<CycloNum>, SeriesError> {
    if !q.is_primitive(n as u64) {
        return Err(SeriesError::Hypothesis(format!(
            "q = {q} is not a primitive {n}-th root of unity"
        )));
    }
    let r = delta.rem_euclid(n as i64);
    if r == 0 {
        return r1_transform(mu, truncation);
    }
    let n_red = reduced_order(r, n);
    let q_red = q.powi(r).expect("roots of unity are invertible");
    rnq_transform(mu, n_red, &q_red, truncation)
}

/// `log Σ_{k≥0} μ_{kn'} z^{kn'} / k!` with `n' = n / gcd(δ, n)`.
pub fn graded_log_formula<F: Field>(
    mu: &MomentSequence<F>,
    delta: i64,
    n: usize,
    truncation: usize,
) -> Result<FormalSeries<F>, SeriesError> {
    let n_red = reduced_order(delta, n);
    check_truncation(mu, truncation)?;
    let mut s = FormalSeries::zero(truncation);
    for k in 0..=truncation / n_red {
        s.coeffs[k * n_red] =
            mu.get(k * n_red) * F::from_rational(&factorial(k)).inv().expect("k! ≠ 0");
    }
    s.log()
}

/// Moments of `x + y` for classically independent commuting `x, y`:
/// `Σ_j C(k, j) μ_{x,j} μ_{y,k-j}`.
pub fn convolve_moments<F: Field>(
    x: &MomentSequence<F>,
    y: &MomentSequence<F>,
    truncation: usize,
) -> Result<MomentSequence<F>, SeriesError> {
    check_truncation(x, truncation)?;
    check_truncation(y, truncation)?;
    let values = (1..=truncation)
        .map(|k| {
            (0..=k).fold(F::zero(), |acc, j| {
                let c = F::from_rational(&crate::scalar::Rational::from_integer(
                    crate::scalar::binomial(k, j),
                ));
                acc + c * x.get(j) * y.get(k - j)
            })
        })
        .collect();
    Ok(MomentSequence::new(values)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cumulants::random_rational;
    use crate::cyclo::root_of_unity;
    use crate::scalar::{rat, rat_int, Rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s(v: &[Rational]) -> FormalSeries<Rational> {
        FormalSeries::new(v.to_vec())
    }

    fn random_series(rng: &mut ChaCha8Rng, c0: i64, k: usize) -> FormalSeries<Rational> {
        let mut v = vec![rat_int(c0)];
        v.extend((1..=k).map(|_| random_rational(rng, 50)));
        s(&v)
    }

    fn gaussian(k: usize) -> MomentSequence<Rational> {
        // (2j-1)!! at even indices
        let mut v = Vec::new();
        let mut dfact = rat_int(1);
        for i in 1..=k {
            if i % 2 == 0 {
                dfact *= rat_int(i as i64 - 1);
                v.push(dfact.clone());
            } else {
                v.push(rat_int(0));
            }
        }
        MomentSequence::new(v).unwrap()
    }

    #[test]
    fn log_one_plus_z() {
        let f = s(&[rat_int(1), rat_int(1), rat_int(0), rat_int(0), rat_int(0), rat_int(0)]);
        let l = f.log().unwrap();
        let expect: Vec<Rational> = (0..=5)
            .map(|k| {
                if k == 0 {
                    rat_int(0)
                } else {
                    rat(if k % 2 == 1 { 1 } else { -1 }, k)
                }
            })
            .collect();
        assert_eq!(l.coeffs(), &expect[..]);
    }

    #[test]
    fn exp_log_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for k in 1..=10 {
            let f = random_series(&mut rng, 1, k);
            assert_eq!(f.log().unwrap().exp().unwrap(), f);
            let g = random_series(&mut rng, 0, k);
            assert_eq!(g.exp().unwrap().log().unwrap(), g);
        }
        assert!(s(&[rat_int(2), rat_int(1)]).log().is_err());
        assert!(s(&[rat_int(1)]).exp().is_err());
    }

    #[test]
    fn geometric_inverse() {
        // z/(1-z) = z + z² + … ; its inverse is z/(1+z) = z − z² + z³ − …
        let k = 10;
        let f = s(&(0..=k).map(|i| rat_int((i > 0) as i64)).collect::<Vec<_>>());
        let g = f.comp_inverse().unwrap();
        let expect: Vec<Rational> = (0..=k)
            .map(|i| match i {
                0 => rat_int(0),
                i if i % 2 == 1 => rat_int(1),
                _ => rat_int(-1),
            })
            .collect();
        assert_eq!(g.coeffs(), &expect[..]);
        let z = FormalSeries::monomial(rat_int(1), 1, k);
        assert_eq!(f.compose(&g).unwrap(), z);
        assert_eq!(z.comp_inverse().unwrap(), z);
    }

    #[test]
    fn comp_inverse_two_sided() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..5 {
            let mut f = random_series(&mut rng, 0, 8);
            if f.coeff(1) == rat_int(0) {
                f = &f + &FormalSeries::monomial(rat_int(1), 1, 8);
            }
            let g = f.comp_inverse().unwrap();
            let z = FormalSeries::monomial(rat_int(1), 1, 8);
            assert_eq!(f.compose(&g).unwrap(), z);
            assert_eq!(g.compose(&f).unwrap(), z);
        }
        let no_linear = s(&[rat_int(0), rat_int(0), rat_int(1)]);
        assert_eq!(no_linear.comp_inverse(), Err(SeriesError::NoLinearTerm));
    }

    #[test]
    fn reciprocal_of_one_minus_z() {
        let f = s(&[rat_int(1), rat_int(-1), rat_int(0), rat_int(0)]);
        assert_eq!(f.reciprocal().unwrap().coeffs(), &vec![rat_int(1); 4][..]);
    }

    #[test]
    fn gaussian_r1() {
        let mu = gaussian(12);
        let expect = FormalSeries::monomial(rat(1, 2), 2, 12);
        assert_eq!(r1_transform(&mu, 12).unwrap(), expect);
        assert_eq!(r1_from_log(&mu, 12).unwrap(), expect);
    }

    #[test]
    fn constant_variable_r1() {
        let mu = MomentSequence::new(vec![rat_int(1); 6]).unwrap();
        assert_eq!(r1_transform(&mu, 6).unwrap(), FormalSeries::monomial(rat_int(1), 1, 6));
    }

    #[test]
    fn semicircle_r0() {
        // Catalan numbers at even indices
        let cat = [1, 2, 5, 14, 42];
        let v: Vec<Rational> = (1..=10)
            .map(|k| if k % 2 == 0 { rat_int(cat[k / 2 - 1]) } else { rat_int(0) })
            .collect();
        let mu = MomentSequence::new(v).unwrap();
        let r0 = r0_transform(&mu, 10).unwrap();
        assert_eq!(r0, FormalSeries::monomial(rat_int(1), 2, 10));
        assert!(r0_relation_residual(&mu, &r0).unwrap().is_zero());
    }

    #[test]
    fn r0_relation_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..5 {
            let mu = MomentSequence::new((0..8).map(|_| random_rational(&mut rng, 100)).collect()).unwrap();
            let r0 = r0_transform(&mu, 8).unwrap();
            assert!(r0_relation_residual(&mu, &r0).unwrap().is_zero());
            // a perturbed transform must fail the relation
            let bad = &r0 + &FormalSeries::monomial(rat_int(1), 3, 8);
            assert!(!r0_relation_residual(&mu, &bad).unwrap().is_zero());
        }
    }

    #[test]
    fn rnq_support_and_power_path() {
        let mu = gaussian(12).map(|r| CycloNum::from_rational(r.clone()));
        let minus_one = CycloNum::from_int(-1);
        let r = rnq_transform(&mu, 2, &minus_one, 12).unwrap();
        assert!(r.support().iter().all(|k| k % 2 == 0));
        assert_eq!(r, r1_of_power(&mu, 2, 12).unwrap());
        let zero = MomentSequence::new(vec![CycloNum::from_int(0); 12]).unwrap();
        assert!(rnq_transform(&zero, 3, &root_of_unity(3, 1), 12).unwrap().is_zero());
        assert!(rnq_transform(&mu, 2, &CycloNum::from_int(1), 12).is_err());
    }

    #[test]
    fn graded_cases() {
        assert_eq!(reduced_order(4, 6), 3);
        assert_eq!(reduced_order(-1, 4), 4);
        assert_eq!(reduced_order(0, 5), 1);
        let mu = gaussian(12).map(|r| CycloNum::from_rational(r.clone()));
        let q = root_of_unity(4, 1);
        assert_eq!(graded_r_transform(&mu, 0, 4, &q, 12).unwrap(), r1_transform(&mu, 12).unwrap());
        assert_eq!(
            graded_r_transform(&mu, 2, 4, &q, 12).unwrap(),
            graded_log_formula(&mu, 2, 4, 12).unwrap()
        );
        assert!(graded_r_transform(&mu, 1, 4, &q, 12).is_err());
        assert!(graded_r_transform(&mu, 1, 4, &CycloNum::from_int(-1), 12).is_err());
    }

    #[test]
    fn classical_linearity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = MomentSequence::new((0..10).map(|_| random_rational(&mut rng, 100)).collect()).unwrap();
        let y = MomentSequence::new((0..10).map(|_| random_rational(&mut rng, 100)).collect()).unwrap();
        let xy = convolve_moments(&x, &y, 10).unwrap();
        assert_eq!(
            r1_transform(&xy, 10).unwrap(),
            &r1_transform(&x, 10).unwrap() + &r1_transform(&y, 10).unwrap()
        );
    }

    #[test]
    fn json_shape() {
        let f = s(&[rat_int(1), rat(1, 2)]);
        let json = serde_json::to_string(&f.map_to_cyclo()).unwrap();
        assert_eq!(
            json,
            r#"{"truncation":1,"coeffs":[{"conductor":1,"coeffs":["1"]},{"conductor":1,"coeffs":["1/2"]}]}"#
        );
        let back: FormalSeries<CycloNum> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f.map_to_cyclo());
        assert!(serde_json::from_str::<FormalSeries<CycloNum>>(r#"{"truncation":3,"coeffs":[]}"#).is_err());
    }

    impl FormalSeries<Rational> {
        fn map_to_cyclo(&self) -> FormalSeries<CycloNum> {
            FormalSeries::new(self.coeffs.iter().cloned().map(CycloNum::from_rational).collect())
        }
    }
}
