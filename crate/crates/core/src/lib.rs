//! Gröbner bases of saturations `I : φ^∞` and lexicographic bases of
//! zero-dimensional colon ideals `I : φ` over prime fields.

pub mod bench;
pub mod error;
pub mod f4;
pub mod f4sat;
pub mod fglm;
pub mod io;
pub mod oracle;
pub mod ring;

pub use error::{Diagnostic, Error, Result};
pub use f4::{f4, GroebnerBasis};
pub use ring::{Monomial, MonomialOrder, Polynomial, PrimeField, Ring, Term};
