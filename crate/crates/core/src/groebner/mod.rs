//! General-purpose Gröbner basis engine, used as an independent oracle.

mod basis;
mod ideal;

pub use basis::{buchberger, buchberger_unreduced, reduce_basis, s_polynomial, GroebnerBasis};
pub use ideal::MonomialIdeal;
