//! Bounded brute-force searches used as independent oracles.
//!
//! Every search fans its outer loop out with rayon and sorts the witnesses
//! before returning, so results do not depend on scheduling.

use std::ops::RangeInclusive;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Roots;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::fermat::{q_poly, r3_poly};
use crate::numeric::{nth_root_exact, Rational};
use crate::pythagoras::{diophantine_form, Triple};
use crate::triangle::f;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport<W> {
    pub query: String,
    pub bounds: serde_json::Map<String, serde_json::Value>,
    pub exhaustive: bool,
    pub witnesses: Vec<W>,
    pub elapsed_ms: u64,
}

impl<W> SearchReport<W> {
    fn finish(
        query: impl Into<String>,
        bounds: serde_json::Value,
        witnesses: Vec<W>,
        started: Instant,
    ) -> Self {
        let serde_json::Value::Object(bounds) = bounds else {
            panic!("bounds must be a JSON object");
        };
        SearchReport {
            query: query.into(),
            bounds,
            exhaustive: true,
            witnesses,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }
}

fn int_string<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IntegralTriple {
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub primitive: bool,
}

impl IntegralTriple {
    pub fn to_triple(&self) -> Triple {
        Triple::new(self.alpha, self.beta, self.gamma)
    }
}

fn isqrt_exact(v: u128) -> Option<u128> {
    let r = v.sqrt();
    (r * r == v).then_some(r)
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All `0 < α <= β < γ <= bound` with `α² + β² = γ²`, ordered by `(α, β)`.
pub fn enumerate_pythagorean(bound: u64) -> Vec<IntegralTriple> {
    let mut triples: Vec<IntegralTriple> = (1..=bound)
        .into_par_iter()
        .flat_map_iter(|alpha| {
            (alpha..=bound).filter_map(move |beta| {
                let sum =
                    u128::from(alpha) * u128::from(alpha) + u128::from(beta) * u128::from(beta);
                let gamma = isqrt_exact(sum)? as u64;
                (gamma <= bound).then(|| IntegralTriple {
                    alpha,
                    beta,
                    gamma,
                    primitive: gcd_u64(gcd_u64(alpha, beta), gamma) == 1,
                })
            })
        })
        .collect();
    triples.sort();
    triples
}

/// The enumeration as a search report.
pub fn pythagorean_search(bound: u64) -> SearchReport<IntegralTriple> {
    let started = Instant::now();
    SearchReport::finish(
        "a^2 + b^2 = c^2",
        serde_json::json!({ "bound": bound }),
        enumerate_pythagorean(bound),
        started,
    )
}

/// Checks that `diophantine_form(α, γ - β)` reproduces every enumerated triple;
/// witnesses are the triples that fail.
pub fn coverage_check(bound: u64) -> SearchReport<IntegralTriple> {
    let started = Instant::now();
    let mut failures: Vec<IntegralTriple> = enumerate_pythagorean(bound)
        .into_par_iter()
        .filter(|t| {
            let a = Rational::from(t.gamma - t.beta);
            match diophantine_form(&Rational::from(t.alpha), &a) {
                Ok(d) => d.values() != t.to_triple().values(),
                Err(_) => true,
            }
        })
        .collect();
    failures.sort();
    SearchReport::finish(
        "coverage of integral triples by the Diophantine form",
        serde_json::json!({ "bound": bound }),
        failures,
        started,
    )
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PowerSumWitness {
    pub u: u64,
    pub v: u64,
    pub w: u64,
}

/// Tests `u^n + v^n = w^n` over `1 <= u <= v < w <= bound`.
pub fn fermat_search(n: u32, bound: u64) -> SearchReport<PowerSumWitness> {
    let started = Instant::now();
    let mut witnesses: Vec<PowerSumWitness> = (1..=bound)
        .into_par_iter()
        .flat_map_iter(|u| {
            let un = num_traits::pow(BigInt::from(u), n as usize);
            (u..=bound).filter_map(move |v| {
                let sum = &un + num_traits::pow(BigInt::from(v), n as usize);
                let w = sum.nth_root(n);
                let exact = num_traits::pow(w.clone(), n as usize) == sum;
                let w: u64 = w.try_into().ok()?;
                (exact && w > v && w <= bound).then_some(PowerSumWitness { u, v, w })
            })
        })
        .collect();
    witnesses.sort();
    SearchReport::finish(
        format!("u^{n} + v^{n} = w^{n}"),
        serde_json::json!({ "n": n, "bound": bound }),
        witnesses,
        started,
    )
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PowerValueWitness {
    #[serde(serialize_with = "int_string")]
    pub y: BigInt,
    pub value: Rational,
    pub root: Rational,
}

/// Integer `y` in range with `Q_{n-1,a}(y)` an exact `n`-th power. Values of `y`
/// where `Q`, `f_n(y)` or `f_n(y + a)` vanish are skipped.
pub fn q_power_scan(
    n: u32,
    a: &Rational,
    y_range: RangeInclusive<i64>,
) -> Result<SearchReport<PowerValueWitness>> {
    let started = Instant::now();
    let poly = q_poly(n, a)?;
    let bounds = serde_json::json!({
        "n": n,
        "a": a.to_string(),
        "y_min": *y_range.start(),
        "y_max": *y_range.end(),
    });
    let mut witnesses: Vec<PowerValueWitness> = y_range
        .into_par_iter()
        .filter_map(|y| {
            let y = Rational::from(y);
            if f(n, &y).is_zero() || f(n, &(&y + a)).is_zero() {
                return None;
            }
            let value = poly.eval(&y);
            if value.is_zero() {
                return None;
            }
            let w = nth_root_exact(&value, n)?;
            Some(PowerValueWitness {
                y: y.to_integer().expect("integer y"),
                value,
                root: w.root,
            })
        })
        .collect();
    witnesses.sort();
    Ok(SearchReport::finish(
        format!("Q_{{{},a}}(y) exact of power {n}", n - 1),
        bounds,
        witnesses,
        started,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CubeSquareWitness {
    pub u: u64,
    pub v: u64,
    pub w: u64,
    /// `u - v`.
    pub a: u64,
    /// Whether `a = k²/3` for an integer `k`, i.e. `3a` is a square.
    pub in_family: bool,
}

/// All `1 <= v < u <= bound`, `w >= 1` with `u³ - v³ = w²`.
pub fn cubic_square_search(bound: u64) -> SearchReport<CubeSquareWitness> {
    let started = Instant::now();
    let mut witnesses: Vec<CubeSquareWitness> = (1..=bound)
        .into_par_iter()
        .flat_map_iter(|u| {
            (1..u).filter_map(move |v| {
                let diff = u128::from(u).pow(3) - u128::from(v).pow(3);
                let w = isqrt_exact(diff)? as u64;
                let a = u - v;
                Some(CubeSquareWitness {
                    u,
                    v,
                    w,
                    a,
                    in_family: isqrt_exact(3 * u128::from(a)).is_some(),
                })
            })
        })
        .collect();
    witnesses.sort();
    SearchReport::finish(
        "u^3 - v^3 = w^2",
        serde_json::json!({ "bound": bound }),
        witnesses,
        started,
    )
}

/// `Σ terms[i]^power == rhs^power`, exactly.
pub fn verify_sum_identity(terms: &[BigInt], power: u32, rhs: &BigInt) -> bool {
    let lhs: BigInt = terms
        .iter()
        .map(|t| num_traits::pow(t.clone(), power as usize))
        .sum();
    lhs == num_traits::pow(rhs.clone(), power as usize)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CubeIdentityWitness {
    pub y: i64,
    pub a: i64,
    pub b: i64,
    /// `R_{3,a,b}(y) = (10 + y + c)^3`.
    pub c: i64,
    pub value: i64,
}

/// Integer `(y, a, b)` with `R_{3,a,b}(y)` a nonzero cube `t³`, reported with
/// `c = t - 10 - y`. Skips `a = 0`, `b = 0`, `a = b` (the cubes cancel) and
/// any zero base among `10 + y`, `10 + y + a`, `10 + y + b`.
pub fn r3_exactness_search(
    y_range: RangeInclusive<i64>,
    a_range: RangeInclusive<i64>,
    b_range: RangeInclusive<i64>,
) -> SearchReport<CubeIdentityWitness> {
    let started = Instant::now();
    let bounds = serde_json::json!({
        "y_min": *y_range.start(), "y_max": *y_range.end(),
        "a_min": *a_range.start(), "a_max": *a_range.end(),
        "b_min": *b_range.start(), "b_max": *b_range.end(),
    });
    let pairs: Vec<(i64, i64)> = a_range
        .flat_map(|a| b_range.clone().map(move |b| (a, b)))
        .filter(|&(a, b)| a != 0 && b != 0 && a != b)
        .collect();
    let mut witnesses: Vec<CubeIdentityWitness> = pairs
        .into_par_iter()
        .flat_map_iter(|(a, b)| {
            let poly = r3_poly(&Rational::from(a), &Rational::from(b)).expect("nonzero a, b");
            y_range.clone().filter_map(move |y| {
                if [10 + y, 10 + y + a, 10 + y + b].contains(&0) {
                    return None;
                }
                let value = poly.eval(&Rational::from(y));
                if value.is_zero() {
                    return None;
                }
                let t = nth_root_exact(&value, 3)?.root.to_i64()?;
                Some(CubeIdentityWitness {
                    y,
                    a,
                    b,
                    c: t - 10 - y,
                    value: value.to_i64()?,
                })
            })
        })
        .collect();
    witnesses.sort();
    SearchReport::finish("R_{3,a,b}(y) exact of power 3", bounds, witnesses, started)
}
