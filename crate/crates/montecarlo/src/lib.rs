//! Monte Carlo estimates over Haar-random unitary matrices.
//!
//! Every estimator takes an explicit seed. Samples are drawn in fixed-size
//! chunks, each from its own ChaCha stream keyed by `(seed, chunk)`, so the
//! output does not depend on the number of worker threads.

mod error;
mod estimators;
mod haar;
mod ks;
mod rng;
mod stats;

pub use error::{McError, McResult};
pub use estimators::{
    clopper_pearson, default_t_grid, khintchine_estimate, moment_oracle, psi2_estimate, psi2_profile, sample_traces, sg_check,
    tail_check, trace_moments, u2_moment_quadrature, KhintchineReport, Psi2Profile, SgReport,
    SgRow, TailReport, DEFAULT_PSI2_MAX_P, MIN_MOMENT_SAMPLES, MIN_PSI2_SAMPLES, TAIL_CONFIDENCE,
};
pub use haar::{sample_haar_unitary, sample_naive_unitary, unitarity_residual, Unitary};
pub use ks::{ks_critical, ks_statistic, KsReport};
pub use rng::{stream, CHUNK};
pub use stats::{jackknife, mean, pairwise_sum, SampleStats};
