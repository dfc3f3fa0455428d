//! Closed-form Gröbner bases of `I_{n,k} = (x1^2, ..., xn^2, (x1 + ... + xn)^k)`
//! and the invariants derived from them: Hilbert series, the weak Lefschetz
//! property and graded Betti numbers of the initial ideal.

pub mod cli;
pub mod closed_form;
pub mod error;
pub mod groebner;
pub mod lattice;
pub mod lefschetz;
pub mod poly;
pub mod resolution;

pub use error::{Error, Result};
