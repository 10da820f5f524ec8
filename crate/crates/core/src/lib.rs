//! Exact rational arithmetic for Newtonian triangles: binomial rows of
//! `(10 + y)^n`, their digit readings, the Fermat polynomials `Q_{n-1,a}`,
//! rational Pythagorean triples, the group on the Pythagorean curve, and
//! bounded deterministic searches behind a verification ledger.

pub mod curve;
pub mod error;
pub mod fermat;
pub mod ledger;
pub mod numeric;
pub mod poly;
pub mod pythagoras;
pub mod ring;
pub mod search;
pub mod triangle;

pub use error::{Error, Result};
pub use numeric::{nth_root_exact, ExactWitness, Integer, Rational};
pub use poly::Poly;
