//! The arithmetic group on the Pythagorean curve `P_a: y² = 2a x + a(20 + a)`,
//! the parametrized candidates on `E_a: y² = Q_{2,a}(x)`, and the bounded search
//! for points on the Fermat curves `y^n = Q_{n-1,a}(x)`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fermat::q_poly;
use crate::numeric::{nth_root_exact, Rational};

fn twenty() -> Rational {
    Rational::from(20)
}

/// `y² = 2a x + a(20 + a)`.
pub fn on_p_curve(x: &Rational, y: &Rational, a: &Rational) -> bool {
    y.square() == Rational::from(2) * a * x + a * &(twenty() + a)
}

/// A point of `G(P_a)` stored by its parameters; coordinates are derived.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupPoint {
    pub p: Rational,
    pub q: Rational,
    pub z: Rational,
    pub a: Rational,
}

impl GroupPoint {
    pub fn new(
        p: impl Into<Rational>,
        q: impl Into<Rational>,
        z: impl Into<Rational>,
        a: impl Into<Rational>,
    ) -> Result<Self> {
        let point = GroupPoint {
            p: p.into(),
            q: q.into(),
            z: z.into(),
            a: a.into(),
        };
        for (value, name) in [(&point.p, "p"), (&point.q, "q"), (&point.a, "a")] {
            if value.is_zero() {
                return Err(Error::ZeroParameter(name));
            }
        }
        Ok(point)
    }

    /// `x = p²z²/2a + pqz/a + (q² - a(20+a))/2a`.
    pub fn x(&self) -> Rational {
        let two_a = Rational::from(2) * &self.a;
        (&self.p * &self.z).square() / &two_a
            + &self.p * &self.q * &self.z / &self.a
            + (self.q.square() - &self.a * &(twenty() + &self.a)) / &two_a
    }

    /// `y = p z + q`.
    pub fn y(&self) -> Rational {
        &self.p * &self.z + &self.q
    }

    pub fn on_curve(&self) -> bool {
        on_p_curve(&self.x(), &self.y(), &self.a)
    }

    fn same_fiber(&self, other: &GroupPoint) -> Result<()> {
        if self.z != other.z || self.a != other.a {
            return Err(Error::DifferentFibers);
        }
        Ok(())
    }

    /// Componentwise product of the `(p, q)` parameters.
    pub fn mul(&self, other: &GroupPoint) -> Result<GroupPoint> {
        self.same_fiber(other)?;
        Ok(GroupPoint {
            p: &self.p * &other.p,
            q: &self.q * &other.q,
            z: self.z.clone(),
            a: self.a.clone(),
        })
    }

    /// The identity `(p, q) = (1, 1)` on the fiber `(z, a)`.
    pub fn identity(z: impl Into<Rational>, a: impl Into<Rational>) -> Result<GroupPoint> {
        GroupPoint::new(1, 1, z, a)
    }

    pub fn inverse(&self) -> GroupPoint {
        GroupPoint {
            p: self.p.recip().expect("p is nonzero"),
            q: self.q.recip().expect("q is nonzero"),
            z: self.z.clone(),
            a: self.a.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.p.is_one() && self.q.is_one()
    }

    /// `self^m` for any integer `m`.
    pub fn pow(&self, m: i32) -> GroupPoint {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        GroupPoint {
            p: base.p.pow(m.unsigned_abs()),
            q: base.q.pow(m.unsigned_abs()),
            z: self.z.clone(),
            a: self.a.clone(),
        }
    }
}

impl Serialize for GroupPoint {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(6))?;
        map.serialize_entry("p", &self.p)?;
        map.serialize_entry("q", &self.q)?;
        map.serialize_entry("z", &self.z)?;
        map.serialize_entry("a", &self.a)?;
        map.serialize_entry("x", &self.x())?;
        map.serialize_entry("y", &self.y())?;
        map.end()
    }
}

/// A parametrized candidate point on `E_a` with `a = k²/3`, so that `√(3a) = |k|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ECurveCandidate {
    pub p: Rational,
    pub q: Rational,
    pub z: Rational,
    #[serde(serialize_with = "as_string")]
    pub k: BigInt,
    pub a: Rational,
    pub x: Rational,
    pub y: Rational,
    /// `Q_{2,a}(x) - y²`; zero iff the candidate lies on `E_a`.
    pub residual: Rational,
}

impl ECurveCandidate {
    pub fn on_curve(&self) -> bool {
        self.residual.is_zero()
    }
}

fn as_string<S: serde::Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

/// Evaluates the displayed parametrization
/// `x = p z/√(3a) + (2pq√(3a) - (3a² + 60a) p)/(6ap)`, `y = p z + q`
/// and reports how far the point misses `E_a`.
pub fn ea_candidate(
    p: &Rational,
    q: &Rational,
    z: &Rational,
    k: &BigInt,
) -> Result<ECurveCandidate> {
    if k.sign() == num_bigint::Sign::NoSign {
        return Err(Error::ZeroParameter("k"));
    }
    if p.is_zero() {
        return Err(Error::ZeroParameter("p"));
    }
    if q.is_zero() {
        return Err(Error::ZeroParameter("q"));
    }
    let a = Rational::new(k * k, 3)?;
    let root = Rational::from(k.abs());
    let lin = Rational::from(3) * a.square() + Rational::from(60) * &a;
    let x = p * z / &root
        + (Rational::from(2) * p * q * &root - lin * p) / (Rational::from(6) * &a * p);
    let y = p * z + q;
    let residual = q_poly(3, &a)?.eval(&x) - y.square();
    Ok(ECurveCandidate {
        p: p.clone(),
        q: q.clone(),
        z: z.clone(),
        k: k.clone(),
        a,
        x,
        y,
        residual,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FermatCurvePoint {
    pub x: Rational,
    pub y: Rational,
}

/// Rational `x = num/den` with `|num| <= bound`, `1 <= den <= bound`, for which
/// `Q_{n-1,a}(x)` is a nonzero exact `n`-th power. Points with `x + 10 = 0` or
/// `x + 10 + a = 0` correspond to a vanishing side and are skipped.
pub fn fermat_curve_points(n: u32, a: &Rational, bound: u64) -> Result<Vec<FermatCurvePoint>> {
    if n <= 2 {
        return Err(Error::Domain("Fermat curves need n > 2".into()));
    }
    let poly = q_poly(n, a)?;
    let ten = Rational::from(10);
    let bound_i = bound as i64;
    let mut points: Vec<FermatCurvePoint> = (1..=bound_i)
        .into_par_iter()
        .flat_map_iter(|den| {
            let poly = &poly;
            let ten = &ten;
            (-bound_i..=bound_i)
                .filter(move |num| num.gcd(&den) == 1)
                .filter_map(move |num| {
                    let x = Rational::new(num, den).expect("positive denominator");
                    let v = ten + &x;
                    if v.is_zero() || (&v + a).is_zero() {
                        return None;
                    }
                    let value = poly.eval(&x);
                    if value.is_zero() {
                        return None;
                    }
                    nth_root_exact(&value, n).map(|w| FermatCurvePoint { x, y: w.root })
                })
        })
        .collect();
    points.sort();
    Ok(points)
}
