//! Rational Pythagorean triples from the perfect-square values of `Q_{1,a}`.
//!
//! With `t = p x + q`, the choice
//! `y = (p²/2a) x² + (pq/a) x + (q² - a(20+a))/2a` makes `Q_{1,a}(y) = t²`, and
//! `(t, 10 + y, 10 + y + a)` is a Pythagorean triple.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fermat::rational_roots;
use crate::numeric::{gcd3, Rational};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ordering {
    /// `(t, β, γ)`: the linear parameter is the first leg.
    #[default]
    AlphaMin,
    /// `(β, t, γ)`: the legs swapped.
    BetaMin,
}

impl std::str::FromStr for Ordering {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha-min" => Ok(Ordering::AlphaMin),
            "beta-min" => Ok(Ordering::BetaMin),
            other => Err(Error::Domain(format!("unknown ordering {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TripleParams {
    pub p: Rational,
    pub q: Rational,
    pub x: Rational,
    pub a: Rational,
    pub ordering: Ordering,
}

impl TripleParams {
    pub fn new(
        p: impl Into<Rational>,
        q: impl Into<Rational>,
        x: impl Into<Rational>,
        a: impl Into<Rational>,
    ) -> Self {
        TripleParams {
            p: p.into(),
            q: q.into(),
            x: x.into(),
            a: a.into(),
            ordering: Ordering::AlphaMin,
        }
    }

    pub fn with_ordering(mut self, ordering: Ordering) -> Self {
        self.ordering = ordering;
        self
    }

    /// The linear parameter `t = p x + q`.
    pub fn linear(&self) -> Rational {
        &self.p * &self.x + &self.q
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub provenance: Option<TripleParams>,
}

/// `{alpha, beta, gamma, gcd?, degenerate?}`; `gcd` only for integral triples,
/// `degenerate` only when set.
impl Serialize for Triple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let gcd = gcd_class(self).ok();
        let degenerate = self.is_degenerate();
        let len = 3 + usize::from(gcd.is_some()) + usize::from(degenerate);
        let mut map = serializer.serialize_map(Some(len))?;
        map.serialize_entry("alpha", &self.alpha)?;
        map.serialize_entry("beta", &self.beta)?;
        map.serialize_entry("gamma", &self.gamma)?;
        if let Some(g) = gcd {
            map.serialize_entry("gcd", &g.to_string())?;
        }
        if degenerate {
            map.serialize_entry("degenerate", &true)?;
        }
        map.end()
    }
}

#[derive(Deserialize)]
struct TripleFields {
    alpha: Rational,
    beta: Rational,
    gamma: Rational,
}

impl<'de> Deserialize<'de> for Triple {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let f = TripleFields::deserialize(deserializer)?;
        Ok(Triple::new(f.alpha, f.beta, f.gamma))
    }
}

impl Triple {
    pub fn new(
        alpha: impl Into<Rational>,
        beta: impl Into<Rational>,
        gamma: impl Into<Rational>,
    ) -> Self {
        Triple {
            alpha: alpha.into(),
            beta: beta.into(),
            gamma: gamma.into(),
            provenance: None,
        }
    }

    pub fn is_pythagorean(&self) -> bool {
        self.alpha.square() + self.beta.square() == self.gamma.square()
    }

    /// A zero component.
    pub fn is_degenerate(&self) -> bool {
        self.alpha.is_zero() || self.beta.is_zero() || self.gamma.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.alpha.is_integer() && self.beta.is_integer() && self.gamma.is_integer()
    }

    pub fn components(&self) -> [&Rational; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    /// Same values, provenance dropped; used for set comparisons.
    pub fn values(&self) -> (Rational, Rational, Rational) {
        (self.alpha.clone(), self.beta.clone(), self.gamma.clone())
    }
}

fn require_nonzero(value: &Rational, name: &'static str) -> Result<()> {
    if value.is_zero() {
        Err(Error::ZeroParameter(name))
    } else {
        Ok(())
    }
}

/// The `y` making `Q_{1,a}(y)` the square of `p x + q`.
pub fn y_solution(params: &TripleParams) -> Result<Rational> {
    let TripleParams { p, q, x, a, .. } = params;
    require_nonzero(a, "a")?;
    let two_a = Rational::from(2) * a;
    let quad = p.square() / &two_a;
    let lin = p * q / a;
    let constant = (q.square() - a * &(Rational::from(20) + a)) / &two_a;
    Ok(quad * x.square() + lin * x + constant)
}

/// The general rational Pythagorean triple for the given parameters.
pub fn triple_from_params(params: &TripleParams) -> Result<Triple> {
    require_nonzero(&params.a, "a")?;
    let a = &params.a;
    let t = params.linear();
    let two_a = Rational::from(2) * a;
    let leg = (t.square() - a.square()) / &two_a;
    let hyp = (t.square() + a.square()) / &two_a;
    let (alpha, beta) = match params.ordering {
        Ordering::AlphaMin => (t, leg),
        Ordering::BetaMin => (leg, t),
    };
    let triple = Triple {
        alpha,
        beta,
        gamma: hyp,
        provenance: Some(params.clone()),
    };
    assert!(
        triple.is_pythagorean(),
        "generated triple fails the Pythagorean identity"
    );
    Ok(triple)
}

/// Both `x` with `p x + q = ±alpha`, i.e. the roots of `p²x² + 2pqx + (q² - alpha²)`.
pub fn invert_x(alpha: &Rational, p: &Rational, q: &Rational) -> Result<(Rational, Rational)> {
    if p.is_zero() {
        return Err(Error::ZeroParameter("p"));
    }
    Ok(((alpha - q) / p, (-alpha - q) / p))
}

/// `(α, (α² - a²)/2a, (α² + a²)/2a)`.
pub fn diophantine_form(alpha: &Rational, a: &Rational) -> Result<Triple> {
    require_nonzero(a, "a")?;
    let two_a = Rational::from(2) * a;
    Ok(Triple::new(
        alpha.clone(),
        (alpha.square() - a.square()) / &two_a,
        (alpha.square() + a.square()) / &two_a,
    ))
}

/// A triple with the given first element, from `p = 1, x = 0, q = α, a = 1`.
pub fn triple_for_first_element(alpha: &Rational) -> Triple {
    triple_from_params(&TripleParams::new(1, alpha.clone(), 0, 1)).expect("a = 1 is nonzero")
}

/// `h(α, β, γ) = gcd(α, β, γ)` on integral triples.
pub fn gcd_class(t: &Triple) -> Result<BigInt> {
    let [a, b, c] = t.components().map(Rational::to_integer);
    match (a, b, c) {
        (Some(a), Some(b), Some(c)) => gcd3(&a, &b, &c),
        _ => Err(Error::NotIntegral),
    }
}

/// Groups integral triples into the classes `P_m` of common gcd `m`.
pub fn partition(triples: &[Triple]) -> Result<BTreeMap<BigInt, Vec<Triple>>> {
    let mut classes: BTreeMap<BigInt, Vec<Triple>> = BTreeMap::new();
    for t in triples {
        classes.entry(gcd_class(t)?).or_default().push(t.clone());
    }
    Ok(classes)
}

/// gcd of the triple generated by integer parameters.
pub fn vartheta(p: i64, q: i64, x: i64, a: i64) -> Result<BigInt> {
    let t = triple_from_params(&TripleParams::new(p, q, x, a))?;
    if !t.is_integral() {
        return Err(Error::NotIntegral);
    }
    gcd_class(&t)
}

/// Discriminant `4b(b - 20)` of `2a² - 2ba + 10b` viewed as a quadratic in `a`.
pub fn b_discriminant(b: &Rational) -> Rational {
    let quadratic_in_a = Poly::from_descending(vec![
        Rational::from(2),
        -Rational::from(2) * b,
        Rational::from(10) * b,
    ]);
    quadratic_in_a.discriminant().expect("quadratic in a")
}

/// The unique nonzero `b` for which the discriminant in `a` vanishes.
pub fn b_constant() -> BigInt {
    // 4b(b - 20) = 4b² - 80b as a polynomial in b; its roots are 0 and 20.
    let disc_in_b = Poly::from_descending(vec![
        Rational::from(4),
        Rational::from(-80),
        Rational::zero(),
    ]);
    let roots = rational_roots(&disc_in_b).expect("nonzero polynomial");
    let nonzero: Vec<_> = roots.into_iter().filter(|r| !r.is_zero()).collect();
    assert_eq!(nonzero.len(), 1);
    let b = &nonzero[0];
    assert!(b_discriminant(b).is_zero());
    b.to_integer().expect("integral root")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermat::q_poly;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn vals(t: &Triple) -> [String; 3] {
        t.components().map(|c| c.to_string())
    }

    #[test]
    fn y_solution_examples() {
        let params = TripleParams::new(1, 3, 0, 1);
        let y = y_solution(&params).unwrap();
        assert_eq!(y, q("-6"));
        assert_eq!(q_poly(2, &q("1")).unwrap().eval(&y), q("9"));

        let params = TripleParams::new(0, q("5/2"), 7, 3);
        let y = y_solution(&params).unwrap();
        assert_eq!(y, (q("25/4") - q("69")) / q("6"));
        assert_eq!(q_poly(2, &q("3")).unwrap().eval(&y), q("25/4"));

        let params = TripleParams::new(2, 1, 1, 3);
        let y = y_solution(&params).unwrap();
        assert_eq!(y, q("-10"));
        assert_eq!(q_poly(2, &q("3")).unwrap().eval(&y), q("9"));

        assert_eq!(
            y_solution(&TripleParams::new(1, 1, 1, 0)),
            Err(Error::ZeroParameter("a"))
        );
    }

    #[test]
    fn triple_examples() {
        assert_eq!(
            vals(&triple_from_params(&TripleParams::new(1, 3, 0, 1)).unwrap()),
            ["3", "4", "5"]
        );
        assert_eq!(
            vals(&triple_from_params(&TripleParams::new(1, 5, 0, 1)).unwrap()),
            ["5", "12", "13"]
        );
        let t = triple_from_params(&TripleParams::new(1, 0, 0, 4)).unwrap();
        assert_eq!(vals(&t), ["0", "-2", "2"]);
        assert!(t.is_degenerate());
        let swapped =
            triple_from_params(&TripleParams::new(1, 3, 0, 1).with_ordering(Ordering::BetaMin))
                .unwrap();
        assert_eq!(vals(&swapped), ["4", "3", "5"]);
        assert!(triple_from_params(&TripleParams::new(1, 3, 0, 0)).is_err());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(
            invert_x(&q("3"), &q("1"), &q("3")).unwrap(),
            (q("0"), q("-6"))
        );
        assert_eq!(
            invert_x(&q("7/2"), &q("1"), &q("0")).unwrap(),
            (q("7/2"), q("-7/2"))
        );
        assert_eq!(
            invert_x(&q("5"), &q("2"), &q("1")).unwrap(),
            (q("2"), q("-3"))
        );
        assert_eq!(
            invert_x(&q("5"), &q("0"), &q("1")),
            Err(Error::ZeroParameter("p"))
        );
    }

    #[test]
    fn diophantine_examples() {
        assert_eq!(
            vals(&diophantine_form(&q("3"), &q("1")).unwrap()),
            ["3", "4", "5"]
        );
        assert_eq!(
            vals(&diophantine_form(&q("7"), &q("1")).unwrap()),
            ["7", "24", "25"]
        );
        let t = diophantine_form(&q("5/3"), &q("5/3")).unwrap();
        assert_eq!(vals(&t), ["5/3", "0", "5/3"]);
        assert!(diophantine_form(&q("3"), &q("0")).is_err());
    }

    #[test]
    fn first_element_examples() {
        assert_eq!(vals(&triple_for_first_element(&q("3"))), ["3", "4", "5"]);
        let t = triple_for_first_element(&q("1/2"));
        assert_eq!(vals(&t), ["1/2", "-3/8", "5/8"]);
        assert!(t.is_pythagorean());
        let t = triple_for_first_element(&q("0"));
        assert_eq!(vals(&t), ["0", "-1/2", "1/2"]);
        assert!(t.is_degenerate());
    }

    #[test]
    fn gcd_class_examples() {
        assert_eq!(gcd_class(&Triple::new(6, 8, 10)).unwrap(), BigInt::from(2));
        assert_eq!(gcd_class(&Triple::new(3, 4, 5)).unwrap(), BigInt::from(1));
        assert_eq!(gcd_class(&Triple::new(9, 12, 15)).unwrap(), BigInt::from(3));
        let half = Triple::new(q("1/2"), q("-3/8"), q("5/8"));
        assert_eq!(gcd_class(&half), Err(Error::NotIntegral));
    }

    #[test]
    fn partition_examples() {
        let set = [
            Triple::new(3, 4, 5),
            Triple::new(6, 8, 10),
            Triple::new(5, 12, 13),
        ];
        let classes = partition(&set).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(
            classes[&BigInt::from(1)],
            vec![set[0].clone(), set[2].clone()]
        );
        assert_eq!(classes[&BigInt::from(2)], vec![set[1].clone()]);
        assert!(partition(&[]).unwrap().is_empty());
        assert_eq!(partition(&set[..1]).unwrap().len(), 1);
    }

    #[test]
    fn vartheta_examples() {
        assert_eq!(vartheta(1, 3, 0, 1).unwrap(), BigInt::from(1));
        assert_eq!(vartheta(1, 6, 0, 2).unwrap(), BigInt::from(2));
        assert_eq!(vartheta(1, 5, 0, 1).unwrap(), BigInt::from(1));
        assert_eq!(vartheta(1, 2, 0, 1), Err(Error::NotIntegral));
    }

    #[test]
    fn json_form() {
        let t = Triple::new(6, 8, 10);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"alpha":"6","beta":"8","gamma":"10","gcd":"2"}"#);
        assert_eq!(serde_json::from_str::<Triple>(&json).unwrap(), t);
        let d = triple_for_first_element(&q("0"));
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"alpha":"0","beta":"-1/2","gamma":"1/2","degenerate":true}"#
        );
    }

    #[test]
    fn b_constant_chain() {
        assert_eq!(b_constant(), BigInt::from(20));
        assert_eq!(b_discriminant(&q("20")), q("0"));
        assert_eq!(b_discriminant(&q("5")), q("-300"));
    }
}
