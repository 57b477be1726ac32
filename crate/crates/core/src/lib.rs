//! Exact invariants of monomial ideals and graded sequences of ideals:
//! Hilbert–Samuel multiplicities, volumes, multiplier ideals and log
//! canonical thresholds, plus a Gröbner engine for reducing polynomial
//! ideals to monomial ones.
//!
//! ```
//! use ai_core::{newton, parse::parse_monomial_ideal, rational::ratio};
//!
//! let a = parse_monomial_ideal("x^2, y^3", None).unwrap();
//! assert_eq!(newton::multiplicity(&a).unwrap(), 6);
//! assert_eq!(newton::lct(&a).unwrap(), ratio(5, 6));
//! ```

pub mod error;
pub mod groebner;
pub mod monomial;
pub mod multiplier;
pub mod newton;
pub mod parse;
pub mod rational;
pub mod report;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use groebner::{MonomialOrder, OrderKind, Polynomial, PolynomialIdeal};
pub use monomial::{Exponent, MonomialIdeal};
pub use newton::{NewtonPolyhedron, WeightVector};
pub use rational::Rational;
pub use sequences::{GradedSequence, LimitEstimate};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
