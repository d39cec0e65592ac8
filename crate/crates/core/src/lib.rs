//! Exact Fourier-side algebra for central measures on unitary groups.
//!
//! Irreducible representations of `U(n)` are indexed by [`Signature`]s; a
//! central measure on a product of unitary groups is determined by one
//! scalar per irrep, which this crate represents symbolically as a
//! [`CentralSpectrum`] and evaluates exactly as a big rational.
//!
//! The crate is `no_std` (it needs `alloc`). Enable the `parallel` feature to
//! spread signature enumeration across a rayon pool.

#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod combinatorics;
pub mod error;
pub mod gap;
pub mod peak;
pub mod rational;
pub mod spectra;

pub use combinatorics::{Partition, Signature, SkewShape};
pub use error::{Error, Result};
pub use gap::{certify_gap, gamma_analytic, GapCertificate};
pub use peak::{build_product_peak, PeakPlan};
pub use rational::Rational;
pub use spectra::{CentralSpectrum, ProductSignature};
