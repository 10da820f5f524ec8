//! Fermat polynomials and their companions.
//!
//! `Q_{n-1,a}(y) = f_n(y + a) - f_n(y)` has a perfect `n`-th power value exactly
//! when `u^n + v^n = w^n` has a solution with `v = 10 + y` and `w = v + a`.
//! This module builds `Q`, the companion sum `P_{n,a}`, the residuals `R_{1,λ}`
//! and `R_{3,a,b}`, and analyses them: elementary symmetric functions of the
//! roots, rational roots, complete reducibility and small-degree Galois orders.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::{
    binomial, divisors, factorial, is_square, nth_root_exact, squarefree_part, Rational,
};
use crate::poly::Poly;

fn ten() -> Rational {
    Rational::from(10)
}

/// `Q_{n-1,a}`: coefficient of `y^(n-j)` is `C(n,j) ((10+a)^j - 10^j)` for `j = 1..=n`.
pub fn q_poly(n: u32, a: &Rational) -> Result<Poly> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if a.is_zero() {
        return Err(Error::ZeroParameter("a"));
    }
    let shifted = ten() + a;
    let coeffs = (1..=n)
        .map(|j| Rational::from(binomial(n, j)) * (shifted.pow(j) - ten().pow(j)))
        .collect();
    Ok(Poly::from_descending(coeffs))
}

/// `P_{n,a}(y) = f_n(y + a) + f_n(y)`.
pub fn p_poly(n: u32, a: &Rational) -> Poly {
    &Poly::shifted_power(&(ten() + a), n) + &Poly::shifted_power(&ten(), n)
}

/// `R_{1,λ}(y) = f_2(λy) - λ² f_2(y)`, by expansion.
pub fn r1_lambda(lambda: &Rational) -> Result<Poly> {
    if lambda.is_zero() || lambda.is_one() {
        return Err(Error::ExcludedParameter(format!("lambda = {lambda}")));
    }
    let scaled = &Poly::constant(ten()) + &Poly::var().scale(lambda);
    let base = Poly::shifted_power(&ten(), 2);
    Ok(&scaled.pow(2) - &base.scale(&lambda.square()))
}

/// `R_{3,a,b}(y) = f_3(y + a) - f_3(y + b) - f_3(y)`.
pub fn r3_poly(a: &Rational, b: &Rational) -> Result<Poly> {
    if a.is_zero() {
        return Err(Error::ZeroParameter("a"));
    }
    if b.is_zero() {
        return Err(Error::ZeroParameter("b"));
    }
    let cube = |shift: &Rational| Poly::shifted_power(&(ten() + shift), 3);
    Ok(&(&cube(a) - &cube(b)) - &cube(&Rational::zero()))
}

/// Elementary symmetric functions of the roots of the monic `Q_{n-1,a} / (n a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricCoefficients {
    /// Sum of the roots.
    pub s1: Rational,
    /// Sum of pairwise products; present when there are at least two roots.
    pub s2: Option<Rational>,
    /// Product of the roots.
    pub s_last: Rational,
}

/// Closed forms `s1 = -(n-1)(a+20)/2`, `s2 = (n-1)(n-2)(a²+30a+300)/6` and
/// `s_last = (-1)^(n-1) (a^(n-1) + 10n a^(n-2) + ... + 10^(n-1) n) / n`.
pub fn symmetric_coefficients(n: u32, a: &Rational) -> Result<SymmetricCoefficients> {
    if n < 2 {
        return Err(Error::Domain("symmetric coefficients need n >= 2".into()));
    }
    if a.is_zero() {
        return Err(Error::ZeroParameter("a"));
    }
    let nq = Rational::from(n);
    let s1 = -(Rational::from(n - 1) * (a + Rational::from(20))) / Rational::from(2);
    let s2 = (n >= 3).then(|| {
        Rational::from((n - 1) * (n - 2))
            * (a.square() + Rational::from(30) * a + Rational::from(300))
            / Rational::from(6)
    });
    let tail: Rational = (1..=n)
        .map(|j| Rational::from(binomial(n, j)) * a.pow(j - 1) * ten().pow(n - j))
        .sum();
    let sign = if (n - 1).is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    let s_last = sign * tail / nq;
    Ok(SymmetricCoefficients { s1, s2, s_last })
}

/// Integer-coefficient primitive multiple of `p`.
fn primitive_integer_coeffs(p: &Poly) -> Vec<BigInt> {
    let lcm = p
        .ascending()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .ascending()
        .iter()
        .map(|c| {
            (c * &Rational::from(&lcm))
                .to_integer()
                .expect("denominators cleared")
        })
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &content).collect()
}

/// Rational roots of `p`, with multiplicity, ascending.
///
/// Candidates `±d/e` with `d` dividing the constant term and `e` the leading
/// coefficient of the primitive integer multiple are tested by exact evaluation;
/// each hit is divided out and retried for multiplicity.
pub fn rational_roots(p: &Poly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let mut ints = primitive_integer_coeffs(p);
    let zeros = ints.iter().take_while(|c| c.is_zero()).count();
    roots.extend(std::iter::repeat_n(Rational::zero(), zeros));
    ints.drain(..zeros);
    let mut rest = Poly::from_ascending(ints.into_iter().map(Rational::from).collect());

    while let Some(deg) = rest.degree() {
        match deg {
            0 => break,
            1 => {
                roots.push(-rest.coeff(0) / rest.coeff(1));
                break;
            }
            2 => {
                let disc = rest.discriminant().expect("quadratic");
                if let Some(w) = nth_root_exact(&disc, 2) {
                    let two_a = Rational::from(2) * rest.coeff(2);
                    let b = rest.coeff(1);
                    roots.push((-&b - &w.root) / &two_a);
                    roots.push((-&b + &w.root) / &two_a);
                }
                break;
            }
            _ => {
                let ints = primitive_integer_coeffs(&rest);
                let (c0, lead) = (&ints[0], &ints[deg]);
                let found = divisors(lead.magnitude()).into_iter().find_map(|e| {
                    divisors(c0.magnitude()).into_iter().find_map(|d| {
                        [1i32, -1].into_iter().find_map(|sign| {
                            let cand = Rational::new(
                                BigInt::from(d.clone()) * sign,
                                BigInt::from(e.clone()),
                            )
                            .expect("positive divisor");
                            rest.eval(&cand).is_zero().then_some(cand)
                        })
                    })
                });
                let Some(root) = found else { break };
                let linear = Poly::from_descending(vec![Rational::one(), -&root]);
                rest = rest.div_rem(&linear)?.0;
                roots.push(root);
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// True when every root of `p` is rational.
pub fn completely_reducible(p: &Poly) -> Result<bool> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(rational_roots(p)?.len() == degree)
}

/// For a quadratic without rational roots, the squarefree `d` with both roots
/// in `Q(√d)` but not in `Q`. `None` for other degrees or split quadratics.
pub fn quadratic_extension_radicand(p: &Poly) -> Option<BigInt> {
    if p.degree()? != 2 {
        return None;
    }
    let disc = p.discriminant()?;
    if is_square(&disc) {
        return None;
    }
    squarefree_part(&disc).ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GaloisStatus {
    Exact,
    ClaimOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisReport {
    pub degree: u32,
    pub computed_order: Option<u64>,
    #[serde(serialize_with = "as_string")]
    pub claimed_order: BigInt,
    pub status: GaloisStatus,
}

impl GaloisReport {
    /// `Some(true)` when the computed order matches `(n-1)!`; `None` if not computed.
    pub fn consistent(&self) -> Option<bool> {
        self.computed_order
            .map(|c| BigInt::from(c) == self.claimed_order)
    }
}

fn as_string<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

/// Order of the Galois group of `Q_{n-1,a}` over the rationals, computed exactly
/// for degree at most three; the claimed value `(n-1)!` is always reported.
pub fn galois_order(n: u32, a: &Rational) -> Result<GaloisReport> {
    let q = q_poly(n, a)?;
    let degree = n - 1;
    let claimed_order = factorial(degree);
    let computed = match degree {
        0 | 1 => Some(1),
        2 => Some(if is_square(&q.discriminant().expect("quadratic")) {
            1
        } else {
            2
        }),
        3 => Some(cubic_galois_order(&q)?),
        _ => None,
    };
    Ok(GaloisReport {
        degree,
        computed_order: computed,
        claimed_order,
        status: if computed.is_some() {
            GaloisStatus::Exact
        } else {
            GaloisStatus::ClaimOnly
        },
    })
}

fn cubic_galois_order(cubic: &Poly) -> Result<u64> {
    let roots = rational_roots(cubic)?;
    Ok(match roots.len() {
        3 => 1,
        // One rational root and an irreducible quadratic cofactor.
        1 => 2,
        0 if is_square(&cubic.discriminant().expect("cubic")) => 3,
        0 => 6,
        k => unreachable!("cubic with exactly {k} rational roots"),
    })
}
