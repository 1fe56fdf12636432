//! Exact rational scalars on top of arbitrary-precision integers.
//!
//! Every quantity in this crate (coordinates, slopes, intercepts, areas,
//! centroids) is a [`Rational`]. Values are stored reduced with a positive
//! denominator, so equality is structural and ordering agrees with the
//! ordering of real numbers.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{pow, Signed, ToPrimitive, Zero};

use crate::Error;

/// An exact rational number, always reduced, denominator always positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Checked construction of `p/q`. Fails when `q` is zero; any other
    /// input is reduced and sign-normalized.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, Error> {
        let q = q.into();
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(p.into(), q)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational::from_integer(0)
    }

    pub fn one() -> Self {
        Rational::from_integer(1)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Nearest double. For display and statistical sampling only; the exact
    /// value never leaves the rational world inside the library.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

/// Shorthand for small literal fractions.
///
/// Panics when `q` is zero; use [`Rational::new`] for checked construction.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p, q).expect("rat() requires a nonzero denominator")
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational prints "p/q", or just "p" when the denominator is 1.
        self.0.fmt(f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts integers (`-3`), reduced or unreduced fractions (`10/4`),
    /// and finite decimals with an optional exponent (`0.25`, `1e-2`).
    /// All forms convert exactly; there is no floating-point round trip.
    fn from_str(text: &str) -> Result<Self, Error> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::NumberSyntax(text.to_string()));
        }
        if let Some((num, den)) = trimmed.split_once('/') {
            let bad = || Error::NumberSyntax(text.to_string());
            let num = BigInt::from_str(num).map_err(|_| bad())?;
            let den = BigInt::from_str(den).map_err(|_| bad())?;
            return Rational::new(num, den);
        }
        parse_decimal(trimmed).ok_or_else(|| Error::NumberSyntax(text.to_string()))
    }
}

/// Exact decimal parser: `[+-]digits[.digits][(e|E)[+-]digits]`.
fn parse_decimal(text: &str) -> Option<Rational> {
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    // A wild exponent would allocate a gigantic power of ten.
    if exponent.unsigned_abs() > 10_000 {
        return None;
    }
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return None;
    }
    let mut numer = BigInt::from_str(&format!("{int_part}{frac_part}"))
        .expect("digit strings always parse");
    if negative {
        numer = -numer;
    }
    let ten = BigInt::from(10);
    let mut denom = pow(ten.clone(), frac_part.len());
    if exponent >= 0 {
        numer *= pow(ten, exponent as usize);
    } else {
        denom *= pow(ten, exponent.unsigned_abs() as usize);
    }
    Some(Rational(BigRational::new(numer, denom)))
}

macro_rules! binop {
    ($imp:ident, $method:ident) => {
        impl $imp for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $imp<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $imp<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $imp<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}
