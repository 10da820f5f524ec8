//! Acceptance criteria, one line per criterion. Every check is exact; the only
//! tolerance is the wall-clock limit beside each criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use newtonian_core::curve::{ea_candidate, GroupPoint};
use newtonian_core::fermat::{galois_order, q_poly, symmetric_coefficients};
use newtonian_core::pythagoras::{
    diophantine_form, invert_x, partition, triple_from_params, y_solution, Triple, TripleParams,
};
use newtonian_core::ring::RingRow;
use newtonian_core::search::{
    enumerate_pythagorean, fermat_search, q_power_scan, r3_exactness_search, verify_sum_identity,
};
use newtonian_core::triangle::{delta_carry, delta_positional, row};
use newtonian_core::Rational;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;

fn rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    Rational::new(
        rng.gen_range(-max_num..=max_num),
        rng.gen_range(1..=max_den),
    )
    .unwrap()
}

fn nonzero(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    loop {
        let r = rational(rng, max_num, max_den);
        if !r.is_zero() {
            return r;
        }
    }
}

fn power(base: &Rational, n: u32) -> Rational {
    (0..n).fold(Rational::one(), |acc, _| acc * base)
}

/// Coefficients of `(c + y)^n`, ascending, by repeated convolution.
fn expand(c: &Rational, n: u32) -> Vec<Rational> {
    let mut coeffs = vec![Rational::one()];
    for _ in 0..n {
        let mut next = vec![Rational::zero(); coeffs.len() + 1];
        for (i, k) in coeffs.iter().enumerate() {
            next[i] += &(k * c);
            next[i + 1] += k;
        }
        coeffs = next;
    }
    coeffs
}

/// Outcome of one criterion: `Ok(detail)` or `Err(reason)`.
type Outcome = Result<String, String>;

type Criterion = (
    &'static str,
    u64,
    Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome>,
);

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    let detail = detail.into();
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn delta_identity() -> Outcome {
    let ten = Rational::from(10);
    for y in 0..=20i64 {
        for n in 0..=12u32 {
            let y = Rational::from(y);
            let r = row(&y, n);
            let expected = power(&(&ten + &y), n);
            let carried = delta_carry(&r, 10).map_err(|e| e.to_string())?;
            if Rational::from(carried.value) != expected || delta_positional(&r, &ten) != expected {
                return Err(format!("mismatch at y = {y}, n = {n}"));
            }
        }
    }
    Ok("273 rows".into())
}

fn coefficients(rng: &mut ChaCha8Rng) -> Outcome {
    let ten = Rational::from(10);
    for _ in 0..20 {
        let a = nonzero(rng, 100, 20);
        for n in 1..=10u32 {
            let mut oracle: Vec<Rational> = expand(&(&ten + &a), n)
                .into_iter()
                .zip(expand(&ten, n))
                .map(|(s, b)| s - b)
                .collect();
            while oracle.last().is_some_and(Rational::is_zero) {
                oracle.pop();
            }
            let got = q_poly(n, &a).map_err(|e| e.to_string())?;
            if got.ascending() != &oracle[..] {
                return Err(format!("n = {n}, a = {a}"));
            }
        }
    }
    Ok("200 polynomials".into())
}

fn parametrization(rng: &mut ChaCha8Rng) -> Outcome {
    let ten = Rational::from(10);
    for _ in 0..1000 {
        let params = TripleParams::new(
            rational(rng, 1000, 50),
            rational(rng, 1000, 50),
            rational(rng, 1000, 50),
            nonzero(rng, 1000, 50),
        );
        let t = triple_from_params(&params).map_err(|e| e.to_string())?;
        let y = y_solution(&params).map_err(|e| e.to_string())?;
        let ok = t.alpha.square() + t.beta.square() == t.gamma.square()
            && t.beta == &ten + &y
            && t.gamma == &t.beta + &params.a;
        if !ok {
            return Err(format!("{:?}", params));
        }
    }
    Ok("1000 parameter sets".into())
}

fn inversion(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..500 {
        let (p, q, x) = (
            nonzero(rng, 1000, 50),
            rational(rng, 1000, 50),
            rational(rng, 1000, 50),
        );
        let (r1, r2) = invert_x(&(&p * &x + &q), &p, &q).map_err(|e| e.to_string())?;
        if r1 != x && r2 != x {
            return Err(format!("p = {p}, q = {q}, x = {x}"));
        }
    }
    Ok("500 round trips".into())
}

/// Triples with hypotenuse <= bound from Euclid's formula, as a cross-check
/// on the enumeration oracle's counts.
fn euclid_count(bound: u64) -> (usize, usize) {
    let mut all = BTreeSet::new();
    let mut primitive = 0;
    for m in 2..=bound {
        for n in 1..m {
            let c = m * m + n * n;
            if c > bound {
                break;
            }
            let (a, b) = (m * m - n * n, 2 * m * n);
            let coprime = num_integer::gcd(m, n) == 1 && (m - n) % 2 == 1;
            if coprime {
                primitive += 1;
            }
            for k in (1..).take_while(|k| k * c <= bound) {
                all.insert((k * a.min(b), k * a.max(b), k * c));
            }
        }
    }
    (all.len(), primitive)
}

fn coverage() -> Outcome {
    let triples = enumerate_pythagorean(100);
    let primitive = triples.iter().filter(|t| t.primitive).count();
    for t in &triples {
        let d = diophantine_form(&Rational::from(t.alpha), &Rational::from(t.gamma - t.beta))
            .map_err(|e| e.to_string())?;
        if d.values() != t.to_triple().values() {
            return Err(format!(
                "({}, {}, {}) not reproduced",
                t.alpha, t.beta, t.gamma
            ));
        }
    }
    let euclid = euclid_count(100);
    check(
        euclid == (triples.len(), primitive),
        format!(
            "{} triples, {} primitive, all reproduced; Euclid count {} / {}",
            triples.len(),
            primitive,
            euclid.0,
            euclid.1
        ),
    )
}

fn gcd_partition() -> Outcome {
    let triples: Vec<Triple> = enumerate_pythagorean(100)
        .iter()
        .map(|t| t.to_triple())
        .collect();
    let classes = partition(&triples).map_err(|e| e.to_string())?;
    let mut union = BTreeSet::new();
    for members in classes.values() {
        for t in members {
            if !union.insert(t.values()) {
                return Err(format!("{:?} appears in two classes", t.values()));
            }
        }
    }
    let input: BTreeSet<_> = triples.iter().map(Triple::values).collect();
    check(
        union == input,
        format!("{} classes, disjoint, union = input", classes.len()),
    )
}

fn desk_scale_fermat() -> Outcome {
    let mut scans = 0;
    for n in [3u32, 4, 5] {
        for a in 1..=10 {
            let report =
                q_power_scan(n, &Rational::from(a), -100..=100).map_err(|e| e.to_string())?;
            if !report.exhaustive || !report.is_empty() {
                return Err(format!(
                    "n = {n}, a = {a}: {} witness(es)",
                    report.witnesses.len()
                ));
            }
            scans += 1;
        }
    }
    for (n, bound) in [(3, 200), (4, 100)] {
        let report = fermat_search(n, bound);
        if !report.exhaustive || !report.is_empty() {
            return Err(format!(
                "fermat n = {n}: {} witness(es)",
                report.witnesses.len()
            ));
        }
    }
    Ok(format!(
        "{scans} scans and 2 power-sum searches empty, all exhaustive"
    ))
}

fn symmetric(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..20 {
        let a = nonzero(rng, 100, 20);
        for n in 2..=10u32 {
            let monic = q_poly(n, &a)
                .and_then(|p| p.monic())
                .map_err(|e| e.to_string())?;
            let s = symmetric_coefficients(n, &a).map_err(|e| e.to_string())?;
            let d = (n - 1) as usize;
            let sign = if d.is_multiple_of(2) {
                Rational::one()
            } else {
                -Rational::one()
            };
            let ok = monic.coeff(d - 1) == -&s.s1
                && (n < 3 || Some(monic.coeff(d - 2)) == s.s2)
                && monic.coeff(0) == sign * &s.s_last;
            if !ok {
                return Err(format!("Vieta readback, n = {n}, a = {a}"));
            }
        }
    }
    for _ in 0..50 {
        let a = nonzero(rng, 100, 20);
        let quad = q_poly(3, &a).map_err(|e| e.to_string())?;
        if quad.discriminant() != Some(-Rational::from(3) * a.pow(4)) {
            return Err(format!("discriminant, a = {a}"));
        }
        if galois_order(3, &a)
            .map_err(|e| e.to_string())?
            .computed_order
            != Some(2)
        {
            return Err(format!("Galois order, a = {a}"));
        }
    }
    Ok("Vieta 180 cases; discriminant and order 2 for 50 a".into())
}

fn group_axioms(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..10 {
        let (z, a) = (rational(rng, 100, 20), nonzero(rng, 100, 20));
        let e = GroupPoint::identity(z.clone(), a.clone()).map_err(|e| e.to_string())?;
        let point = |rng: &mut ChaCha8Rng| {
            GroupPoint::new(
                nonzero(rng, 50, 10),
                nonzero(rng, 50, 10),
                z.clone(),
                a.clone(),
            )
            .unwrap()
        };
        for _ in 0..200 {
            let (u, v, w) = (point(rng), point(rng), point(rng));
            let mul = |x: &GroupPoint, y: &GroupPoint| x.mul(y).unwrap();
            let uv = mul(&u, &v);
            let ok = uv.on_curve()
                && mul(&uv, &w) == mul(&u, &mul(&v, &w))
                && uv == mul(&v, &u)
                && mul(&u, &e) == u
                && mul(&u, &u.inverse()) == e;
            if !ok {
                return Err(format!("fiber z = {z}, a = {a}"));
            }
        }
    }
    Ok("2000 triples over 10 fibers".into())
}

fn ea_residual(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..50 {
        let k = loop {
            let k = rng.gen_range(-40i64..=40);
            if k != 0 {
                break k;
            }
        };
        let (p, q, z) = (
            nonzero(rng, 100, 20),
            nonzero(rng, 100, 20),
            rational(rng, 100, 20),
        );
        let c = ea_candidate(&p, &q, &z, &BigInt::from(k)).map_err(|e| e.to_string())?;
        if c.residual != c.a.pow(3) / Rational::from(4) || c.on_curve() {
            return Err(format!("k = {k}: residual {}", c.residual));
        }
    }
    Ok("residual = a^3/4 for 50 candidates; membership refuted".into())
}

fn identities() -> Outcome {
    let cases: [(&[i64], u32, i64); 6] = [
        (&[3, 4], 2, 5),
        (&[3, 4, 12], 2, 13),
        (&[3, 4, 12, 84], 2, 85),
        (&[3, 4, 5], 3, 6),
        (&[4, 6, 8, 9, 14], 4, 15),
        (&[4, 5, 6, 7, 9, 11], 5, 12),
    ];
    for (terms, n, rhs) in cases {
        let big: Vec<BigInt> = terms.iter().map(|&t| t.into()).collect();
        if !verify_sum_identity(&big, n, &rhs.into()) {
            return Err(format!("{terms:?}^{n} != {rhs}^{n}"));
        }
    }
    let report = r3_exactness_search(-10..=0, 1..=5, 1..=5);
    let found = report
        .witnesses
        .iter()
        .any(|w| (w.y, w.a, w.b, w.c) == (-6, 2, 1, -1));
    check(found, "six identities; (y, a, b, c) = (-6, 2, 1, -1) found")
}

fn ring_module(rng: &mut ChaCha8Rng) -> Outcome {
    for n in 0..=8u32 {
        let pascal = RingRow::one(n);
        if pascal.row().entries != row(&Rational::one(), n).entries {
            return Err(format!("T(1) row {n}"));
        }
        for _ in 0..200 {
            let [u, v, w] = [(); 3].map(|_| RingRow::new(rng.gen_range(-1000i64..=1000), n));
            let (alpha, beta) = (
                BigInt::from(rng.gen_range(-100i64..=100)),
                BigInt::from(rng.gen_range(-100i64..=100)),
            );
            let add = |x: &RingRow, y: &RingRow| x.add(y).unwrap();
            let mul = |x: &RingRow, y: &RingRow| x.mul(y).unwrap();
            let ok = add(&add(&u, &v), &w) == add(&u, &add(&v, &w))
                && mul(&mul(&u, &v), &w) == mul(&u, &mul(&v, &w))
                && add(&u, &v) == add(&v, &u)
                && mul(&u, &v) == mul(&v, &u)
                && mul(&u, &add(&v, &w)) == add(&mul(&u, &v), &mul(&u, &w))
                && mul(&u, &pascal) == u
                && u.scale(&(&alpha + &beta)) == add(&u.scale(&alpha), &u.scale(&beta))
                && u.scale(&alpha).scale(&beta) == u.scale(&(&alpha * &beta));
            if !ok {
                return Err(format!("n = {n}, y = ({}, {}, {})", u.y, v.y, w.y));
            }
        }
    }
    Ok("1800 samples; T(1) is the identity".into())
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let criteria: Vec<Criterion> = vec![
        (
            "delta identity, 0 <= y <= 20, 0 <= n <= 12",
            1,
            Box::new(|_| delta_identity()),
        ),
        (
            "Q_{n-1,a} coefficients vs expansion",
            1,
            Box::new(coefficients),
        ),
        (
            "parametrized triples are Pythagorean",
            2,
            Box::new(parametrization),
        ),
        ("invert_x round trip", 1, Box::new(inversion)),
        (
            "coverage of triples with hypotenuse <= 100",
            5,
            Box::new(|_| coverage()),
        ),
        (
            "gcd partition of the bound-100 set",
            1,
            Box::new(|_| gcd_partition()),
        ),
        (
            "desk-scale power searches are empty",
            60,
            Box::new(|_| desk_scale_fermat()),
        ),
        (
            "symmetric functions, discriminant, Galois order",
            2,
            Box::new(symmetric),
        ),
        ("curve group axioms", 2, Box::new(group_axioms)),
        ("E_a residual law", 1, Box::new(ea_residual)),
        (
            "power-sum identities and four cubes",
            1,
            Box::new(|_| identities()),
        ),
        ("ring and module axioms", 1, Box::new(ring_module)),
    ];

    let mut failures = 0;
    for (i, (name, limit_s, run)) in criteria.into_iter().enumerate() {
        let started = Instant::now();
        let outcome = run(&mut rng);
        let elapsed = started.elapsed();
        let limit = Duration::from_secs(limit_s);
        let (pass, detail) = match outcome {
            Ok(detail) if elapsed < limit => (true, detail),
            Ok(detail) => (false, format!("{detail}; too slow")),
            Err(reason) => (false, reason),
        };
        failures += usize::from(!pass);
        println!(
            "{} {:>2}. {name} [tolerance: exact; {:.3}s < {limit_s}s] {detail}",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64(),
        );
    }
    println!("{} of 12 criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
