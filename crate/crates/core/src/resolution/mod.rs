//! Graded Betti numbers of `in(I_{n,k})`: a closed formula for the
//! squarefree part, Murai's formula for the whole ideal and a
//! Mayer-Vietoris tree resolution, plus structural checks.

pub mod betti;
pub mod formulas;
pub mod mvt;

pub use betti::{BettiEntry, BettiTable};
pub use formulas::{
    a_p, adjoin_square, betti_ghp, betti_murai, betti_recursion, betti_shape_check,
    extremal_diagonal, ghp_closed, ghp_sum, hilbert_numerators, initial_ideal,
    is_strongly_squarefree_stable, murai, pd_reg, squarefree_monomials_in, squarefree_part,
    ShapeItem, ShapeReport,
};
pub use mvt::{betti_from_mvt, build_mvt, MvtBetti, MvtNode, MvtTree};
