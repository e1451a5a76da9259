//! Coefficient traits shared by the cumulant engine, the series code and the
//! algebra models.
//!
//! The moment/cumulant recursion only ever needs ring operations (the
//! one-block partition enters with weight one), so it is generic over
//! [`Ring`]. Series exp/log and compositional inversion divide, so they need
//! a [`Field`].

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_i64(v: i64) -> Self;

    /// `self^e` by square-and-multiply; `x^0 = 1` for every `x`, including 0.
    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

pub trait Field: Ring + Div<Output = Self> {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;
}

impl Ring for Rational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

/// Parses `p/q` or `p` (no decimals). Rejects a zero denominator.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    let r = BigRational::new(num, den);
    debug_assert!(r.denom().is_positive());
    Some(r)
}

/// `k!` as a rational.
pub fn factorial(k: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    BigRational::from_integer(acc)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(Ring::pow(&Rational::zero(), 0), rat_int(1));
        assert_eq!(Ring::pow(&rat_int(0), 3), rat_int(0));
        assert_eq!(Ring::pow(&rat(2, 3), 3), rat(8, 27));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("6/4"), Some(rat(3, 2)));
        assert_eq!(parse_rational("-7"), Some(rat_int(-7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("0.5"), None);
        assert_eq!(rational_to_string(&rat(-3, 6)), "-1/2");
        assert_eq!(rational_to_string(&rat(4, 2)), "2");
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(8, 4), BigInt::from(70));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(factorial(5), rat_int(120));
    }
}
