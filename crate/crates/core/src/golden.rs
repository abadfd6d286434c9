//! Exact arithmetic in the ring `Z[eps]`, where `eps = (1 + sqrt 5) / 2`.
//!
//! Elements are stored as the coefficient pair `(a, b)` of `a + b*eps`. Since
//! `{1, eps}` is a basis of the ring over `Z`, the pair is already canonical
//! and equality is componentwise. Multiplication reduces with `eps^2 = eps + 1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `(1 + sqrt 5) / 2`
pub const GOLDEN_RATIO: f64 = 1.618_033_988_749_895;

/// An element `a + b*eps` of `Z[eps]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GoldenInt {
    a: BigInt,
    b: BigInt,
}

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn eps() -> Self {
        Self::new(0, 1)
    }

    /// `eps^{-1} = eps - 1`
    pub fn eps_inverse() -> Self {
        Self::new(-1, 1)
    }

    /// Coefficient of `1`.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Coefficient of `eps`.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Field norm `(a + b eps)(a + b eps')` with `eps' = 1 - eps`, which is
    /// `a^2 + ab - b^2`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Galois conjugate `a + b eps'`, written in the `{1, eps}` basis.
    pub fn conjugate(&self) -> Self {
        Self::new(&self.a + &self.b, -&self.b)
    }

    /// `eps^k` for any integer `k`.
    ///
    /// Non-negative powers come from square-and-multiply on `eps`, negative
    /// powers from the same on `eps - 1`.
    pub fn eps_pow(k: i64) -> Self {
        let base = if k >= 0 {
            Self::eps()
        } else {
            Self::eps_inverse()
        };
        base.pow(k.unsigned_abs())
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::one();
        let mut square = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &square;
            }
            exp >>= 1;
            if exp > 0 {
                square = &square * &square;
            }
        }
        acc
    }

    /// Floating-point value, for display.
    ///
    /// When `a` and `b` have opposite signs the direct sum cancels badly (small
    /// negative powers of `eps` have Fibonacci-sized coefficients), so the value
    /// is recovered as `norm / conjugate`, where the conjugate sum has no
    /// cancellation and the norm is exact.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        if self.a.is_negative() == self.b.is_negative() || self.a.is_zero() || self.b.is_zero() {
            return a + b * GOLDEN_RATIO;
        }
        let conj = a + b * (1.0 - GOLDEN_RATIO);
        self.norm().to_f64().unwrap_or(f64::NAN) / conj
    }
}

impl From<i64> for GoldenInt {
    fn from(a: i64) -> Self {
        Self::new(a, 0)
    }
}

impl Add<&GoldenInt> for &GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: GoldenInt) -> GoldenInt {
        &self + &rhs
    }
}

impl AddAssign<&GoldenInt> for GoldenInt {
    fn add_assign(&mut self, rhs: &GoldenInt) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl Sub<&GoldenInt> for &GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: GoldenInt) -> GoldenInt {
        &self - &rhs
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt::new(-self.a, -self.b)
    }
}

impl Neg for &GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt::new(-&self.a, -&self.b)
    }
}

// (a + b eps)(c + d eps) = ac + (ad + bc) eps + bd (eps + 1)
impl Mul<&GoldenInt> for &GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: &GoldenInt) -> GoldenInt {
        let bd = &self.b * &rhs.b;
        GoldenInt::new(
            &self.a * &rhs.a + &bd,
            &self.a * &rhs.b + &self.b * &rhs.a + bd,
        )
    }
}

impl Mul for GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: GoldenInt) -> GoldenInt {
        &self * &rhs
    }
}

impl std::iter::Sum for GoldenInt {
    fn sum<I: Iterator<Item = GoldenInt>>(iter: I) -> Self {
        iter.fold(GoldenInt::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl Zero for GoldenInt {
    fn zero() -> Self {
        GoldenInt::zero()
    }
    fn is_zero(&self) -> bool {
        GoldenInt::is_zero(self)
    }
}

impl One for GoldenInt {
    fn one() -> Self {
        GoldenInt::one()
    }
}

/// Prints `a + b*eps`, folding the sign of `b` into the operator.
impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}*eps", self.a, -&self.b)
        } else {
            write!(f, "{} + {}*eps", self.a, self.b)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed golden integer {0:?}: expected `a + b*eps` or `a - b*eps`")]
pub struct ParseGoldenError(String);

impl FromStr for GoldenInt {
    type Err = ParseGoldenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseGoldenError(s.to_string());
        let mut parts = s.split_whitespace();
        let a: BigInt = parts.next().ok_or_else(err)?.parse().map_err(|_| err())?;
        let op = parts.next().ok_or_else(err)?;
        let b_term = parts.next().ok_or_else(err)?;
        if parts.next().is_some() {
            return Err(err());
        }
        let b: BigInt = b_term
            .strip_suffix("*eps")
            .ok_or_else(err)?
            .parse()
            .map_err(|_| err())?;
        if b.is_negative() {
            return Err(err());
        }
        match op {
            "+" => Ok(GoldenInt::new(a, b)),
            "-" => Ok(GoldenInt::new(a, -b)),
            _ => Err(err()),
        }
    }
}
