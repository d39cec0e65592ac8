//! Partitions, `U(n)` signatures, and exact tableau counts.

mod partition;
mod schur;
mod signature;

pub use partition::{partitions_of, Partition, SkewShape};
pub use schur::{
    bareiss_det, binomial, branching_sum, char_eval, dim_f64, dim_schur, e_ones, h_ones, skew_count, ssyt_brute,
    weyl_dimension, BRUTE_CELL_CAP,
};
pub use signature::{
    canonicalize_signature, conjugate_signature, enumerate_signatures, signatures_of_weight,
    Signature,
};
