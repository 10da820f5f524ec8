//! Exact integer and rational arithmetic.
//!
//! [`Rational`] is a normalized fraction over arbitrary-precision integers and
//! is the only scalar type used by the rest of the crate. Its text form is
//! `num/den`, with the denominator omitted when it equals one (`3/2`, `-7`, `0`).

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Integer = BigInt;

/// A fraction in lowest terms with a positive denominator.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in lowest terms, moving the sign to the numerator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The integer value, if the fraction has denominator one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer().clone())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<&BigInt> for Rational {
    fn from(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
}

macro_rules! from_primitive {
    ($($t:ty),*) => {
        $(impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(BigInt::from(n))
            }
        })*
    };
}

from_primitive!(i32, i64, u32, u64, usize, i128);

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, as `BigRational` does; use `checked_div` for fallible division.
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

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

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `[+-]digits` or `[+-]digits/digits`; whitespace is rejected.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let digits = |t: &str| -> Result<BigUint> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigUint>().map_err(|_| bad())
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (digits(n)?, digits(d)?),
            None => (digits(body)?, BigUint::one()),
        };
        let sign = if negative { Sign::Minus } else { Sign::Plus };
        Rational::new(BigInt::from_biguint(sign, num), BigInt::from(den))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Evidence that a rational is an exact `power`-th power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactWitness {
    pub root: Rational,
    pub power: u32,
}

impl ExactWitness {
    pub fn value(&self) -> Rational {
        self.root.pow(self.power)
    }
}

/// Exact integer `n`-th root of a nonnegative integer, if one exists.
fn exact_integer_root(value: &BigUint, n: u32) -> Option<BigUint> {
    let root = value.nth_root(n);
    (num_traits::pow(root.clone(), n as usize) == *value).then_some(root)
}

/// Returns the rational `n`-th root of `r` when it exists.
///
/// Even powers only admit nonnegative values and report the nonnegative root;
/// odd powers accept either sign. Zero is exact of every power.
pub fn nth_root_exact(r: &Rational, n: u32) -> Option<ExactWitness> {
    assert!(n >= 1, "root index must be positive");
    if r.is_zero() {
        return Some(ExactWitness {
            root: Rational::zero(),
            power: n,
        });
    }
    if r.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    // Lowest terms: the fraction is a power iff numerator and denominator are.
    let num = exact_integer_root(r.numer().magnitude(), n)?;
    let den = exact_integer_root(r.denom().magnitude(), n)?;
    let sign = if r.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    };
    let root = Rational(BigRational::new(
        BigInt::from_biguint(sign, num),
        BigInt::from(den),
    ));
    Some(ExactWitness { root, power: n })
}

pub fn is_square(r: &Rational) -> bool {
    nth_root_exact(r, 2).is_some()
}

pub fn gcd3(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<BigInt> {
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(Error::GcdUndefined);
    }
    Ok(a.gcd(b).gcd(c))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Prime factorization of a positive integer as `(prime, exponent)` pairs.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, usize)> {
    if n.is_one() || n.is_zero() {
        return Vec::new();
    }
    let (factors, rest) = num_prime::nt_funcs::factors(n.clone(), None);
    // `rest` is only populated when a composite could not be split; bail loudly.
    assert!(rest.is_none(), "factorization of {n} did not complete");
    factors.into_iter().collect()
}

/// All positive divisors of a positive integer, ascending.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(out.len() * (e + 1));
        for d in &out {
            let mut term = d.clone();
            for _ in 0..=e {
                next.push(term.clone());
                term *= &p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Squarefree integer `d` with `r = d * s^2` for some rational `s`.
pub fn squarefree_part(r: &Rational) -> Result<BigInt> {
    if r.is_zero() {
        return Err(Error::Domain("zero has no squarefree part".into()));
    }
    let product = r.numer().magnitude() * r.denom().magnitude();
    let kernel: BigUint = factorize(&product)
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .map(|(p, _)| p)
        .product();
    let sign = if r.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    };
    Ok(BigInt::from_biguint(sign, kernel))
}
