//! Dense univariate polynomials over ℚ.
//!
//! Used as the carrier for ℚ[x]/(Φ_N) arithmetic and, through its [`Ring`]
//! impl, as a "generic q" coefficient ring: running the cumulant engine with
//! the indeterminate `q` yields the moment formulas as polynomials in `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::{rat_int, Rational, Ring};

/// Coefficients in ascending degree order, with no trailing zeros
/// (the zero polynomial is the empty vector).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::default(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] * &lead_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[i - dd + j] -= t;
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Returns `(g, s)` with `s·self ≡ g (mod modulus)` and `g` the monic gcd.
    pub fn gcd_cofactor(&self, modulus: &Self) -> (Self, Self) {
        let (mut r0, mut r1) = (modulus.clone(), self.clone());
        let (mut s0, mut s1) = (Self::default(), Self::constant(Rational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0 - q * s1.clone();
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        match r0.leading().cloned() {
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv))
            }
            None => (r0, s0),
        }
    }
}

impl Add for RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: RatPoly) -> RatPoly {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        RatPoly::new(long)
    }
}

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: RatPoly) -> RatPoly {
        self + (-rhs)
    }
}

impl Mul for RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Zero for RatPoly {
    fn zero() -> Self {
        RatPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for RatPoly {
    fn one() -> Self {
        RatPoly::from_ints(&[1])
    }
}

impl Ring for RatPoly {
    fn from_i64(v: i64) -> Self {
        RatPoly::from_ints(&[v])
    }
}

impl fmt::Display for RatPoly {
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
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}*q")?,
                _ if unit => write!(f, "q^{i}")?,
                _ => write!(f, "{mag}*q^{i}")?,
            }
        }
        Ok(())
    }
}
