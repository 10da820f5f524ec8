//! Newtonian triangle rows and the digital correspondence.
//!
//! Row `n` of the triangle `T(y)` lists the coefficients of `(x + y)^n` in
//! descending powers of `x`: `(1, C(n,1) y, C(n,2) y^2, ..., y^n)`. Reading a
//! row as the digits of a number in base `x` gives `(x + y)^n`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{binomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub y: Rational,
    pub n: u32,
    pub entries: Vec<Rational>,
}

impl Row {
    /// Builds the row from binomial coefficients: entry `r` is `C(n,r) y^r`.
    pub fn new(y: &Rational, n: u32) -> Row {
        let entries = (0..=n)
            .map(|r| Rational::from(binomial(n, r)) * y.pow(r))
            .collect();
        Row {
            y: y.clone(),
            n,
            entries,
        }
    }

    /// Next row via `y * C(n-1,r-1) y^(r-1) + C(n-1,r) y^r = C(n,r) y^r`.
    pub fn next(&self) -> Row {
        let len = self.entries.len() + 1;
        let entries = (0..len)
            .map(|r| {
                let carried = r
                    .checked_sub(1)
                    .map(|i| &self.y * &self.entries[i])
                    .unwrap_or_default();
                carried + self.entries.get(r).cloned().unwrap_or_default()
            })
            .collect();
        Row {
            y: self.y.clone(),
            n: self.n + 1,
            entries,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn row(y: &Rational, n: u32) -> Row {
    Row::new(y, n)
}

/// Row `n` reached by iterating the build-up recurrence from row 0.
pub fn row_by_recurrence(y: &Rational, n: u32) -> Row {
    let mut current = Row {
        y: y.clone(),
        n: 0,
        entries: vec![Rational::one()],
    };
    for _ in 0..n {
        current = current.next();
    }
    current
}

/// Rows `0..=depth` of `T(y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triangle {
    pub y: Rational,
    pub rows: Vec<Row>,
}

impl Triangle {
    pub fn new(y: &Rational, depth: u32) -> Triangle {
        let mut rows = Vec::with_capacity(depth as usize + 1);
        rows.push(row_by_recurrence(y, 0));
        for _ in 0..depth {
            let next = rows.last().expect("row 0 present").next();
            rows.push(next);
        }
        Triangle { y: y.clone(), rows }
    }

    pub fn depth(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    pub fn row(&self, n: u32) -> Option<&Row> {
        self.rows.get(n as usize)
    }
}

/// Positional reading `sum_r entries[r] * base^(n-r)`, which is `(base + y)^n`.
pub fn delta_positional(row: &Row, base: &Rational) -> Rational {
    row.entries
        .iter()
        .fold(Rational::zero(), |acc, e| acc * base + e)
}

/// Result of carrying a row into base-`base` digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarriedNumber {
    /// Most significant digit first.
    pub digits: String,
    pub value: BigInt,
}

/// Carries the entries of a row with nonnegative integer entries right to left
/// into digits of the given base.
pub fn delta_carry(row: &Row, base: u32) -> Result<CarriedNumber> {
    if !(2..=36).contains(&base) {
        return Err(Error::InvalidBase(base));
    }
    let ints = row
        .entries
        .iter()
        .map(|e| match e.to_integer() {
            Some(i) if i >= BigInt::zero() => Ok(i),
            _ => Err(Error::CarryUndefined(format!("entry {e}"))),
        })
        .collect::<Result<Vec<_>>>()?;

    let big_base = BigInt::from(base);
    let mut carry = BigInt::zero();
    let mut digits_rev: Vec<u32> = Vec::with_capacity(ints.len() + 4);
    for entry in ints.iter().rev() {
        let (q, d) = (entry + &carry).div_rem(&big_base);
        digits_rev.push(d.to_u32().expect("digit below base"));
        carry = q;
    }
    while !carry.is_zero() {
        let (q, d) = carry.div_rem(&big_base);
        digits_rev.push(d.to_u32().expect("digit below base"));
        carry = q;
    }
    // Leading zeros only arise for the all-zero row, which cannot occur (entry 0 is 1).
    while digits_rev.len() > 1 && digits_rev.last() == Some(&0) {
        digits_rev.pop();
    }

    let mut value = BigInt::zero();
    let mut digits = String::with_capacity(digits_rev.len());
    for &d in digits_rev.iter().rev() {
        value = value * &big_base + d;
        digits.push(char::from_digit(d, base).expect("digit below base"));
    }
    Ok(CarriedNumber { digits, value })
}

/// `f_n(y) = (10 + y)^n`.
pub fn f(n: u32, y: &Rational) -> Rational {
    (Rational::from(10) + y).pow(n)
}
