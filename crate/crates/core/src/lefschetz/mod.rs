//! Weak Lefschetz property of `R/I_{n,k}`: exact ranks of multiplication
//! maps, seeded random linear forms and syzygy-derived kernel witnesses.

pub mod quotient;
pub mod rank;
pub mod verify;
pub mod witness;

pub use quotient::QuotientAlgebra;
pub use rank::{rank, rank_mod_p, Matrix, FAST_PRIME};
pub use verify::{
    classify_wlp, direct_wlp, generic_rank, kernel_witness, map_rank, quotient_by_power_hilbert,
    switched_algebra, switched_initial_algebra, verify_wlp, Certificate, FailingMap, KernelWitness,
    MapReport, RankAlgebra, WlpOptions, WlpVerdict,
};
pub use witness::{GenericLinearForm, SyzygyWitness, WitnessVariant};
