#![allow(dead_code)]

use newtonian_core::Rational;
use proptest::prelude::*;

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (-max_num..=max_num, 1..=max_den).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn nonzero_rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    rational(max_num, max_den).prop_filter("nonzero", |r| !r.is_zero())
}

/// `(10 + y)^n` by repeated multiplication of the base.
pub fn power_oracle(base: &Rational, n: u32) -> Rational {
    (0..n).fold(Rational::one(), |acc, _| acc * base)
}
