//! Cohomological dimension filtrations of cyclic modules `R/I` over a
//! polynomial ring, and the annihilator, attached primes and support bound
//! of the top local cohomology module `H^d_a(R/I)`, computed with exact
//! ideal arithmetic and cross-checked through Hochster's formula.

pub mod cd;
pub mod error;
pub mod groebner;
pub mod hochster;
pub mod job;
pub mod parse;
pub mod primdec;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
pub use groebner::{buchberger_reduced, Ideal};
pub use parse::parse_polynomial;
pub use ring::{Field, Monomial, MonomialOrder, Polynomial, Ring};
