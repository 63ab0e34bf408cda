//! Exact tools for the dimension filtration of standard graded algebras
//! presented by monomial ideals or simplicial complexes: Björner-Wachs
//! polynomials, h-triangles, reverse lexicographic generic initial ideals,
//! and sequential Cohen-Macaulay tests.

pub mod error;
pub mod filtration;
pub mod groebner;
pub mod io;
pub mod monomial;
pub mod ring;
pub mod simplicial;

pub use error::{Error, Result};
