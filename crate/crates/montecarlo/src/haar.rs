use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{McError, McResult};

pub type Unitary = DMatrix<Complex64>;

fn gaussian_matrix<R: Rng + ?Sized>(d: usize, rng: &mut R) -> DMatrix<Complex64> {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    DMatrix::from_fn(d, d, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re * scale, im * scale)
    })
}

fn check_dim(d: usize) -> McResult<()> {
    if d == 0 {
        return Err(McError::OutOfRange {
            what: "dimension",
            detail: "d must be at least 1".into(),
        });
    }
    Ok(())
}

/// Haar-distributed element of `U(d)`: QR of a complex Gaussian matrix with
/// each column of `Q` rotated by the phase of the matching diagonal entry of
/// `R`. nalgebra already returns `R` with a positive real diagonal, in which
/// case the rotation is the identity.
pub fn sample_haar_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> McResult<Unitary> {
    check_dim(d)?;
    let qr = gaussian_matrix(d, rng).qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..d {
        let rjj = r[(j, j)];
        let norm = rjj.norm();
        if norm > 0.0 {
            let phase = rjj / norm;
            for i in 0..d {
                q[(i, j)] *= phase;
            }
        }
    }
    Ok(q)
}

/// QR with `R`'s diagonal left at the phase of the pivot entries `g_jj`, as a
/// plain Householder step produces, and no correction. Not Haar: kept to
/// show the difference.
pub fn sample_naive_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> McResult<Unitary> {
    check_dim(d)?;
    let g = gaussian_matrix(d, rng);
    let mut q = g.clone().qr().q();
    for j in 0..d {
        let pivot = g[(j, j)];
        let norm = pivot.norm();
        if norm > 0.0 {
            let phase = (pivot / norm).conj();
            for i in 0..d {
                q[(i, j)] *= phase;
            }
        }
    }
    Ok(q)
}

/// `max |(u* u - I)_{ij}|`.
pub fn unitarity_residual(u: &Unitary) -> f64 {
    let d = u.nrows();
    let prod = u.adjoint() * u;
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((prod[(i, j)] - Complex64::new(target, 0.0)).norm());
        }
    }
    worst
}
