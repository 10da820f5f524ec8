//! Dense univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::{binomial, Rational};

/// Coefficients are stored lowest degree first; trailing zeros are trimmed so
/// the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        Poly::from_ascending(vec![c.into()])
    }

    /// The identity polynomial `y`.
    pub fn var() -> Self {
        Poly::from_ascending(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_ascending(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_descending(mut coeffs: Vec<Rational>) -> Self {
        coeffs.reverse();
        Poly::from_ascending(coeffs)
    }

    /// `(shift + y)^n` expanded with binomial coefficients.
    pub fn shifted_power(shift: &Rational, n: u32) -> Self {
        let coeffs = (0..=n)
            .map(|k| Rational::from(binomial(n, k)) * shift.pow(n - k))
            .collect();
        Poly::from_ascending(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Coefficient of `y^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn ascending(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn descending(&self) -> Vec<Rational> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn eval(&self, y: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * y + c)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Poly::from_ascending(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Poly::constant(1), |acc, _| &acc * self)
    }

    /// Scales to leading coefficient one.
    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lead.recip()?))
    }

    /// Euclidean division: `self = quotient * divisor + remainder`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let d_deg = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let d_lead_inv = divisor.coeffs[d_deg].recip()?;
        let mut rem = self.coeffs.clone();
        let Some(deg) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if deg < d_deg {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); deg - d_deg + 1];
        for i in (0..=deg - d_deg).rev() {
            let c = &rem[i + d_deg] * &d_lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &(&c * dc);
            }
            quot[i] = c;
        }
        rem.truncate(d_deg);
        Ok((Poly::from_ascending(quot), Poly::from_ascending(rem)))
    }

    /// Discriminant for degree 2 and 3; `None` otherwise.
    pub fn discriminant(&self) -> Option<Rational> {
        match self.degree()? {
            2 => {
                let (c, b, a) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
                Some(b * b - Rational::from(4) * a * c)
            }
            3 => {
                let (d, c, b, a) = (
                    &self.coeffs[0],
                    &self.coeffs[1],
                    &self.coeffs[2],
                    &self.coeffs[3],
                );
                let k = |n: i64| Rational::from(n);
                Some(
                    b * b * c * c
                        - k(4) * a * c.pow(3)
                        - k(4) * b.pow(3) * d
                        - k(27) * a * a * d * d
                        + k(18) * a * b * c * d,
                )
            }
            _ => None,
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_ascending((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_ascending((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::from_ascending(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_ascending(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() || k == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

/// Serialized as an array of `num/den` strings, highest degree first.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in self.coeffs.iter().rev() {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Poly::from_descending(Vec::<Rational>::deserialize(
            deserializer,
        )?))
    }
}
