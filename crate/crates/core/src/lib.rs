//! Reduction numbers of monomial ideals.
//!
//! The crate computes Hilbert functions, Krull dimensions and colengths of
//! monomial ideals, Borel specializations and their sets `P(x^A)`,
//! reduction numbers with respect to sets of variables, lex-segment ideals
//! with a given Hilbert function, and the bounds relating them. An exact
//! Gröbner-basis engine over the rationals (module [`groebner`]) serves as an
//! independent oracle for arbitrary homogeneous ideals.

pub mod binom;
pub mod corpus;
pub mod borel;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod lexmac;
pub mod monomial;
pub mod parse;
pub mod reduction;
pub mod scenarios;

pub use error::{Error, Result};
pub use hilbert::{hilbert, HilbertTable};
pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, RingContext, TermOrder};
