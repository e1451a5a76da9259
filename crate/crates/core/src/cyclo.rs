//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! A [`CycloNum`] is a residue in ℚ[x]/(Φ_N(x)) where `x` stands for the
//! distinguished primitive root ζ_N = x mod Φ_N. Because Φ_N is irreducible
//! the quotient is a field: zero tests are exact and every nonzero value is
//! invertible. Values with different conductors are combined by embedding
//! both into ℚ(ζ_lcm) via ζ_n ↦ ζ_M^{M/n}.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::poly::RatPoly;
use crate::scalar::{parse_rational, rational_to_string, Field, Rational, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,
    #[error("value is not a root of unity")]
    NotRootOfUnity,
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("invalid scalar spec `{0}` (expected `p/q`, `zeta:n:k`)")]
    BadSpec(String),
    #[error("malformed cyclotomic value: {0}")]
    Malformed(String),
}

/// Φ_n(x) with ascending integer coefficients, computed by dividing
/// `x^n - 1` by Φ_d for every proper divisor `d` of `n`.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_poly needs n >= 1");
    modulus(n)
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

fn compute_cyclotomic(n: u64) -> RatPoly {
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    coeffs[0] = -Rational::one();
    coeffs[n as usize] = Rational::one();
    let mut p = RatPoly::new(coeffs);
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = p.div_rem(&modulus(d));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

/// Cached Φ_n as a monic rational polynomial.
fn modulus(n: u64) -> Arc<RatPoly> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<RatPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    let p = Arc::new(compute_cyclotomic(n));
    cache.write().unwrap().entry(n).or_insert(p).clone()
}

/// Euler's totient, which is `deg Φ_n`.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn reduce(mut coeffs: Vec<Rational>, conductor: u64) -> Vec<Rational> {
    let phi = modulus(conductor);
    let d = phi.degree().unwrap();
    for i in (d..coeffs.len()).rev() {
        if coeffs[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut coeffs[i], Rational::zero());
        for (j, m) in phi.coeffs()[..d].iter().enumerate() {
            if !m.is_zero() {
                coeffs[i - d + j] -= &c * m;
            }
        }
    }
    coeffs.resize(d, Rational::zero());
    coeffs
}

/// An element of ℚ(ζ_N), stored as its reduced residue mod Φ_N.
#[derive(Clone, Debug)]
pub struct CycloNum {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    /// Builds a value from an arbitrary-length coefficient vector in ζ_N,
    /// reducing modulo Φ_N.
    pub fn from_coeffs(conductor: u64, coeffs: Vec<Rational>) -> Result<Self, CycloError> {
        if conductor == 0 {
            return Err(CycloError::ZeroConductor);
        }
        Ok(CycloNum {
            conductor,
            coeffs: reduce(coeffs, conductor),
        })
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloNum {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    /// ζ_n^k in ℚ(ζ_n). Negative `k` is reduced mod `n`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "root_of_unity needs n >= 1");
        let e = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        CycloNum {
            conductor: n,
            coeffs: reduce(coeffs, n),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The rational value, if this element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        // The basis 1, ζ, …, ζ^{φ(N)-1} is linearly independent over ℚ.
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses this value in ℚ(ζ_target); `target` must be a multiple
    /// of the current conductor.
    pub fn embed(&self, target: u64) -> Self {
        assert!(
            target.is_multiple_of(self.conductor),
            "cannot embed Q(zeta_{}) into Q(zeta_{target})",
            self.conductor
        );
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        CycloNum {
            conductor: target,
            coeffs: reduce(coeffs, target),
        }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let l = self.conductor.lcm(&other.conductor);
        (self.embed(l), other.embed(l))
    }

    fn aligned_ref<'a>(
        a: &'a Self,
        b: &'a Self,
    ) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if a.conductor == b.conductor {
            (Cow::Borrowed(a), Cow::Borrowed(b))
        } else {
            let (x, y) = a.aligned(b);
            (Cow::Owned(x), Cow::Owned(y))
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let (a, b) = Self::aligned_ref(self, rhs);
        let n = a.conductor;
        if n == 1 {
            return Self::from_rational(&a.coeffs[0] * &b.coeffs[0]);
        }
        let mut out = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        CycloNum {
            conductor: n,
            coeffs: reduce(out, n),
        }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let (a, b) = Self::aligned_ref(self, rhs);
        CycloNum {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        CycloNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via extended Euclid against Φ_N.
    pub fn inverse(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        let a = RatPoly::new(self.coeffs.clone());
        let (g, s) = a.gcd_cofactor(&modulus(self.conductor));
        debug_assert_eq!(g.degree(), Some(0));
        let mut coeffs = s.into_coeffs();
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Self::from_coeffs(self.conductor, coeffs)
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, CycloError> {
        Ok(self.mul_ref(&rhs.inverse()?))
    }

    /// `self^e` for any integer `e`; negative powers require `self ≠ 0`.
    pub fn powi(&self, e: i64) -> Result<Self, CycloError> {
        if e >= 0 {
            Ok(Ring::pow(self, e as u64))
        } else {
            Ok(Ring::pow(&self.inverse()?, e.unsigned_abs()))
        }
    }

    /// Least `d ≥ 1` with `self^d = 1`.
    ///
    /// Every root of unity in ℚ(ζ_N) has order dividing lcm(2, N).
    pub fn unity_order(&self) -> Result<u64, CycloError> {
        if self.is_zero() {
            return Err(CycloError::NotRootOfUnity);
        }
        let bound = self.conductor.lcm(&2);
        let one = Self::from_int(1);
        if Ring::pow(self, bound) != one {
            return Err(CycloError::NotRootOfUnity);
        }
        let order = (1..=bound)
            .filter(|d| bound.is_multiple_of(*d))
            .find(|&d| Ring::pow(self, d) == one)
            .expect("bound itself satisfies the equation");
        Ok(order)
    }

    /// True iff this is a root of unity of order exactly `n`.
    pub fn is_primitive(&self, n: u64) -> bool {
        self.unity_order().is_ok_and(|d| d == n)
    }

    /// True iff `self^n = 1` and `self ≠ 1`.
    pub fn is_proper_root(&self, n: u64) -> bool {
        self.unity_order().is_ok_and(|d| d > 1 && n.is_multiple_of(d))
    }
}

/// ζ_n^k as a [`CycloNum`]; the spelled-out name used throughout.
pub fn root_of_unity(n: u64, k: i64) -> CycloNum {
    CycloNum::root_of_unity(n, k)
}

/// All primitive `n`-th roots of unity, ζ_n^k with gcd(k, n) = 1.
pub fn primitive_roots(n: u64) -> Vec<CycloNum> {
    (1..=n)
        .filter(|k| k.gcd(&n) == 1)
        .map(|k| root_of_unity(n, k as i64))
        .collect()
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNum {}

impl Add for CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: CycloNum) -> CycloNum {
        self.add_ref(&rhs)
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            conductor: self.conductor,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: CycloNum) -> CycloNum {
        self.add_ref(&(-rhs))
    }
}

impl Mul for CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: CycloNum) -> CycloNum {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &'a CycloNum) -> CycloNum {
        self.mul_ref(rhs)
    }
}

impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &'a CycloNum) -> CycloNum {
        self.add_ref(rhs)
    }
}

/// Panics on a zero divisor; use [`CycloNum::try_div`] to handle it.
impl Div for CycloNum {
    type Output = CycloNum;
    fn div(self, rhs: CycloNum) -> CycloNum {
        self.try_div(&rhs).expect("division by zero")
    }
}

impl Zero for CycloNum {
    fn zero() -> Self {
        CycloNum::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for CycloNum {
    fn one() -> Self {
        CycloNum::from_int(1)
    }
}

impl Ring for CycloNum {
    fn from_i64(v: i64) -> Self {
        CycloNum::from_int(v)
    }
}

impl Field for CycloNum {
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn from_rational(r: &Rational) -> Self {
        CycloNum::from_rational(r.clone())
    }
}

impl From<Rational> for CycloNum {
    fn from(r: Rational) -> Self {
        CycloNum::from_rational(r)
    }
}

/// Accepts `zeta:n:k` (ζ_n^k) or a rational literal `p/q` / `p`.
impl FromStr for CycloNum {
    type Err = CycloError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("zeta:") {
            let (n, k) = rest
                .split_once(':')
                .ok_or_else(|| CycloError::BadSpec(s.to_string()))?;
            let n: u64 = n.parse().map_err(|_| CycloError::BadSpec(s.to_string()))?;
            let k: i64 = k.parse().map_err(|_| CycloError::BadSpec(s.to_string()))?;
            if n == 0 {
                return Err(CycloError::BadSpec(s.to_string()));
            }
            return Ok(root_of_unity(n, k));
        }
        parse_rational(t)
            .map(CycloNum::from_rational)
            .ok_or_else(|| CycloError::BadSpec(s.to_string()))
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let n = self.conductor;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "ζ{n}")?,
                (1, false) => write!(f, "{mag}·ζ{n}")?,
                (_, true) => write!(f, "ζ{n}^{i}")?,
                (_, false) => write!(f, "{mag}·ζ{n}^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    conductor: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloRepr {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(rational_to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = CycloRepr::deserialize(d)?;
        if repr.conductor == 0 {
            return Err(D::Error::custom(CycloError::ZeroConductor));
        }
        let expected = euler_phi(repr.conductor) as usize;
        if repr.coeffs.len() != expected {
            return Err(D::Error::custom(CycloError::Malformed(format!(
                "conductor {} needs {expected} coefficients, got {}",
                repr.conductor,
                repr.coeffs.len()
            ))));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| {
                parse_rational(c)
                    .ok_or_else(|| D::Error::custom(CycloError::Malformed(c.to_string())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycloNum {
            conductor: repr.conductor,
            coeffs,
        })
    }
}
