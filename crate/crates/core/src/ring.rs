//! Ring and module structure on rows `N(y, n)` and triangles `T(y)`.
//!
//! Every operation acts on the index `y` alone, so elements are stored by index
//! and entries are materialized on demand. Integer indices give the ring
//! isomorphic to the integers; rational indices give its field of fractions.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::triangle::{Row, Triangle};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RingRow {
    pub y: Rational,
    pub n: u32,
}

impl RingRow {
    pub fn new(y: impl Into<Rational>, n: u32) -> Self {
        RingRow { y: y.into(), n }
    }

    pub fn zero(n: u32) -> Self {
        RingRow::new(0, n)
    }

    /// `N(1, n)`, the Pascal row.
    pub fn one(n: u32) -> Self {
        RingRow::new(1, n)
    }

    pub fn is_integral(&self) -> bool {
        self.y.is_integer()
    }

    fn check(&self, other: &RingRow) -> Result<()> {
        if self.n != other.n {
            return Err(Error::IncompatibleRows(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &RingRow) -> Result<RingRow> {
        self.check(other)?;
        Ok(RingRow {
            y: &self.y + &other.y,
            n: self.n,
        })
    }

    pub fn mul(&self, other: &RingRow) -> Result<RingRow> {
        self.check(other)?;
        Ok(RingRow {
            y: &self.y * &other.y,
            n: self.n,
        })
    }

    pub fn neg(&self) -> RingRow {
        RingRow {
            y: -&self.y,
            n: self.n,
        }
    }

    pub fn scale(&self, alpha: &BigInt) -> RingRow {
        RingRow {
            y: Rational::from(alpha) * &self.y,
            n: self.n,
        }
    }

    /// Multiplicative inverse in the fraction field, `N(1/y, n)`.
    pub fn inverse(&self) -> Result<RingRow> {
        Ok(RingRow {
            y: self.y.recip()?,
            n: self.n,
        })
    }

    pub fn row(&self) -> Row {
        Row::new(&self.y, self.n)
    }

    /// Recovers the ring element from a materialized row.
    pub fn from_row(row: &Row) -> Result<RingRow> {
        match row.entries.get(1) {
            Some(first) => Ok(RingRow {
                y: first.checked_div(&Rational::from(row.n))?,
                n: row.n,
            }),
            // N(y, 0) = (1) for every y; the index is not recoverable.
            None => Err(Error::Domain("row 0 does not determine its index".into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RingTriangle {
    pub y: Rational,
    pub depth: u32,
}

impl RingTriangle {
    pub fn new(y: impl Into<Rational>, depth: u32) -> Self {
        RingTriangle { y: y.into(), depth }
    }

    /// `T(1)`, the Pascal triangle.
    pub fn pascal(depth: u32) -> Self {
        RingTriangle::new(1, depth)
    }

    // Operands of different depth combine at the larger depth.
    pub fn add(&self, other: &RingTriangle) -> RingTriangle {
        RingTriangle {
            y: &self.y + &other.y,
            depth: self.depth.max(other.depth),
        }
    }

    pub fn mul(&self, other: &RingTriangle) -> RingTriangle {
        RingTriangle {
            y: &self.y * &other.y,
            depth: self.depth.max(other.depth),
        }
    }

    pub fn scale(&self, alpha: &BigInt) -> RingTriangle {
        RingTriangle {
            y: Rational::from(alpha) * &self.y,
            depth: self.depth,
        }
    }

    pub fn row(&self, n: u32) -> RingRow {
        RingRow {
            y: self.y.clone(),
            n,
        }
    }

    pub fn materialize(&self) -> Triangle {
        Triangle::new(&self.y, self.depth)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_examples() {
        assert_eq!(
            RingRow::new(2, 3).add(&RingRow::new(3, 3)).unwrap(),
            RingRow::new(5, 3)
        );
        assert_eq!(
            RingRow::new(7, 3).add(&RingRow::zero(3)).unwrap(),
            RingRow::new(7, 3)
        );
        assert_eq!(
            RingRow::new(4, 2).add(&RingRow::new(-4, 2)).unwrap(),
            RingRow::zero(2)
        );
        assert_eq!(
            RingRow::new(1, 2).add(&RingRow::new(1, 3)),
            Err(Error::IncompatibleRows(2, 3))
        );
        assert!(Error::IncompatibleRows(2, 3)
            .to_string()
            .starts_with("incompatible rows"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            RingRow::new(2, 3).mul(&RingRow::one(3)).unwrap(),
            RingRow::new(2, 3)
        );
        assert_eq!(
            RingRow::new(2, 4).mul(&RingRow::new(3, 4)).unwrap(),
            RingRow::new(6, 4)
        );
        assert_eq!(
            RingRow::new(9, 5).mul(&RingRow::zero(5)).unwrap(),
            RingRow::zero(5)
        );
        assert!(RingRow::new(1, 2).mul(&RingRow::new(1, 4)).is_err());
    }

    #[test]
    fn scale_examples() {
        assert_eq!(
            RingTriangle::new(2, 4).scale(&3.into()),
            RingTriangle::new(6, 4)
        );
        assert_eq!(
            RingTriangle::new(-5, 4).scale(&1.into()),
            RingTriangle::new(-5, 4)
        );
        assert_eq!(RingRow::new(7, 5).scale(&0.into()), RingRow::zero(5));
    }

    #[test]
    fn fraction_field_inverse() {
        let u = RingRow::new(Rational::new(-3, 4).unwrap(), 3);
        assert_eq!(u.mul(&u.inverse().unwrap()).unwrap(), RingRow::one(3));
        assert!(RingRow::zero(3).inverse().is_err());
    }

    #[test]
    fn triangles_combine_at_larger_depth() {
        let t = RingTriangle::new(2, 3).add(&RingTriangle::new(5, 6));
        assert_eq!(t, RingTriangle::new(7, 6));
        assert_eq!(
            RingTriangle::new(4, 2).mul(&RingTriangle::pascal(2)),
            RingTriangle::new(4, 2)
        );
        assert_eq!(t.materialize().rows.len(), 7);
    }

    #[test]
    fn row_round_trip() {
        let u = RingRow::new(Rational::new(5, 3).unwrap(), 4);
        assert_eq!(RingRow::from_row(&u.row()).unwrap(), u);
        assert!(RingRow::from_row(&RingRow::new(3, 0).row()).is_err());
    }
}
