//! Schur and skew-Schur evaluations.
//!
//! `s_λ(1^m)` counts semistandard fillings of `λ` by `{1, …, m}`; it is also
//! the dimension of the irrep of `U(m)` with highest weight `λ`.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::partition::{Partition, SkewShape};
use crate::error::{Error, Result};

/// `s_λ(1^m)` via the hook-content formula `∏_cells (m + c) / h`.
///
/// Returns zero when `λ` has more than `m` parts and one for the empty
/// partition. Agrees with [`weyl_dimension`] (see tests); this form costs
/// `O(|λ|)` regardless of `m`.
pub fn dim_schur(lambda: &Partition, m: usize) -> BigUint {
    if lambda.len() > m {
        return BigUint::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = m as i64 + j as i64 - i as i64;
            let arm = row as usize - j - 1;
            let leg = conj.part(j) as usize - i - 1;
            num *= content as u64;
            den *= (arm + leg + 1) as u64;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// `∏_{i<j≤m} (λ_i − λ_j + j − i) / (j − i)`, the Weyl dimension product,
/// evaluated literally.
pub fn weyl_dimension(lambda: &Partition, m: usize) -> BigUint {
    if lambda.len() > m {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=m {
        for j in (i + 1)..=m {
            let li = u64::from(lambda.row(i));
            let lj = u64::from(lambda.row(j));
            num *= li - lj + (j - i) as u64;
            den *= (j - i) as u64;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// Complete homogeneous symmetric polynomial at the all-ones point:
/// `h_r(1^m) = C(m + r − 1, r)`, `h_0 = 1`, `h_{r<0} = 0`.
pub fn h_ones(r: i64, m: usize) -> BigUint {
    match r {
        r if r < 0 => BigUint::zero(),
        0 => BigUint::one(),
        _ if m == 0 => BigUint::zero(),
        r => binomial(m as u64 + r as u64 - 1, r as u64),
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Elementary symmetric polynomial at the all-ones point: `e_r(1^m) = C(m, r)`.
pub fn e_ones(r: i64, m: usize) -> BigUint {
    if r < 0 {
        BigUint::zero()
    } else {
        binomial(m as u64, r as u64)
    }
}

/// `s_{λ/μ}(1^m)` by the skew Jacobi–Trudi determinant
/// `det[h_{λ_i − μ_j − i + j}(1^m)]`, or its dual in `e` on the conjugate
/// shapes when that matrix is smaller.
pub fn skew_count(shape: &SkewShape, m: usize) -> BigUint {
    let outer = shape.outer();
    let inner = shape.inner();
    if outer.is_empty() {
        return BigUint::one();
    }
    if inner.is_empty() {
        return dim_schur(outer, m);
    }
    let det = if outer.first() as usize > outer.len() {
        jacobi_trudi(outer, inner, |r| h_ones(r, m))
    } else {
        jacobi_trudi(&outer.conjugate(), &inner.conjugate(), |r| e_ones(r, m))
    };
    debug_assert!(!det.is_negative());
    det.to_biguint().unwrap_or_default()
}

fn jacobi_trudi(outer: &Partition, inner: &Partition, entry: impl Fn(i64) -> BigUint) -> BigInt {
    let size = outer.len();
    let matrix: Vec<Vec<BigInt>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let r = i64::from(outer.part(i)) - i64::from(inner.part(j)) - i as i64
                        + j as i64;
                    BigInt::from(entry(r))
                })
                .collect()
        })
        .collect();
    bareiss_det(matrix)
}

/// Right-hand side of the branching rule at the identity:
/// `Σ_{μ ⊆ λ} s_μ(1^k) · s_{λ/μ}(1^{n-k})`. Equals `s_λ(1^n)`.
pub fn branching_sum(lambda: &Partition, k: usize, n: usize) -> BigUint {
    lambda
        .subpartitions()
        .into_iter()
        .map(|mu| {
            let left = dim_schur(&mu, k);
            if left.is_zero() {
                return left;
            }
            let shape = SkewShape::new(lambda.clone(), mu).expect("subpartition");
            left * skew_count(&shape, n - k)
        })
        .sum()
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Brute-force enumeration is refused above this many cells.
pub const BRUTE_CELL_CAP: usize = 20;

/// Counts semistandard fillings of a skew shape by `{1, …, m}` by exhaustive
/// backtracking. Independent of [`dim_schur`] and [`skew_count`].
pub fn ssyt_brute(shape: &SkewShape, m: usize) -> Result<BigUint> {
    let cells = shape.cells();
    if cells > BRUTE_CELL_CAP {
        return Err(Error::CellCapExceeded {
            cells,
            cap: BRUTE_CELL_CAP,
        });
    }
    let outer = shape.outer();
    let inner = shape.inner();
    let rows = outer.len();
    // grid[i][j] = 0 for cells outside the skew shape.
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; outer.part(i) as usize]).collect();
    let order: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (inner.part(i) as usize..outer.part(i) as usize).map(move |j| (i, j)))
        .collect();

    fn rec(
        idx: usize,
        order: &[(usize, usize)],
        inner: &Partition,
        grid: &mut Vec<Vec<usize>>,
        m: usize,
    ) -> u64 {
        if idx == order.len() {
            return 1;
        }
        let (i, j) = order[idx];
        let mut lo = 1;
        if j > inner.part(i) as usize {
            lo = lo.max(grid[i][j - 1]);
        }
        if i > 0 && j >= inner.part(i - 1) as usize {
            lo = lo.max(grid[i - 1][j] + 1);
        }
        let mut total = 0;
        for v in lo..=m {
            grid[i][j] = v;
            total += rec(idx + 1, order, inner, grid, m);
        }
        grid[i][j] = 0;
        total
    }

    Ok(BigUint::from(rec(0, &order, inner, &mut grid, m)))
}

/// `s_λ(t_1, …, t_n)` by the Jacobi–Trudi determinant in the complete
/// homogeneous polynomials of `t`. For unit-modulus `t` this is the character
/// of the irrep `λ` at the diagonal unitary with eigenvalues `t`.
pub fn char_eval(lambda: &Partition, t: &[Complex64]) -> Result<Complex64> {
    if lambda.len() > t.len() {
        return Err(Error::DimensionMismatch {
            expected: t.len(),
            got: lambda.len(),
        });
    }
    let size = lambda.len();
    if size == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let top = lambda.first() as usize + size;
    let mut h = vec![Complex64::new(0.0, 0.0); top + 1];
    h[0] = Complex64::new(1.0, 0.0);
    for &x in t {
        for r in 1..=top {
            let prev = h[r - 1];
            h[r] += x * prev;
        }
    }
    let mut a: Vec<Vec<Complex64>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let r = lambda.part(i) as i64 - i as i64 + j as i64;
                    if r < 0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        h[r as usize]
                    }
                })
                .collect()
        })
        .collect();
    Ok(complex_det(&mut a))
}

fn complex_det(a: &mut [Vec<Complex64>]) -> Complex64 {
    let n = a.len();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&x, &y| {
                a[x][k]
                    .norm_sqr()
                    .partial_cmp(&a[y][k].norm_sqr())
                    .unwrap_or(core::cmp::Ordering::Equal)
            })
            .unwrap_or(k);
        if a[pivot][k].norm_sqr() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != k {
            a.swap(pivot, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                let v = a[k][j];
                a[i][j] -= f * v;
            }
        }
    }
    det
}

/// `s_λ(1^m)` as an `f64`, for display.
pub fn dim_f64(lambda: &Partition, m: usize) -> f64 {
    dim_schur(lambda, m).to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn skew(o: &[u32], i: &[u32]) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    #[test]
    fn dimension_examples() {
        for n in 1..10 {
            assert_eq!(dim_schur(&p(&[1]), n), BigUint::from(n));
        }
        assert_eq!(dim_schur(&p(&[2, 1]), 3), BigUint::from(8u32));
        assert_eq!(dim_schur(&p(&[1, 1, 1]), 2), BigUint::zero());
        assert_eq!(dim_schur(&Partition::empty(), 0), BigUint::one());
        assert_eq!(dim_schur(&p(&[2]), 4), BigUint::from(10u32));
    }

    #[test]
    fn weyl_matches_hook_content() {
        for w in 0..=7 {
            for lam in super::super::partitions_of(w, usize::MAX) {
                for m in 0..=7 {
                    assert_eq!(dim_schur(&lam, m), weyl_dimension(&lam, m), "{lam} {m}");
                }
            }
        }
    }

    #[test]
    fn skew_examples() {
        let lam = p(&[3, 2, 2]);
        for m in 0..5 {
            assert_eq!(skew_count(&skew(&[3, 2, 2], &[3, 2, 2]), m), BigUint::one());
            assert_eq!(skew_count(&SkewShape::new(lam.clone(), lam.clone()).unwrap(), m), BigUint::one());
        }
        assert_eq!(skew_count(&skew(&[1, 1, 1], &[]), 3), BigUint::one());
        assert_eq!(skew_count(&skew(&[1, 1, 1], &[]), 4), BigUint::from(4u32));
        for n in 3..9usize {
            let col = Partition::rectangle(1, n - 1);
            for k in 1..n - 1 {
                let shape = SkewShape::new(col.clone(), Partition::rectangle(1, k)).unwrap();
                assert_eq!(skew_count(&shape, n - k), BigUint::from(n - k));
            }
        }
    }

    #[test]
    fn brute_examples() {
        assert_eq!(ssyt_brute(&skew(&[2], &[]), 2).unwrap(), BigUint::from(3u32));
        assert_eq!(ssyt_brute(&skew(&[2, 1], &[]), 3).unwrap(), BigUint::from(8u32));
        assert_eq!(ssyt_brute(&skew(&[1], &[]), 0).unwrap(), BigUint::zero());
        assert_eq!(ssyt_brute(&skew(&[2, 1], &[1]), 2).unwrap(), BigUint::from(4u32));
        assert!(matches!(
            ssyt_brute(&skew(&[21], &[]), 2),
            Err(Error::CellCapExceeded { cells: 21, .. })
        ));
    }

    #[test]
    fn char_eval_examples() {
        let t = [
            Complex64::new(0.3, -1.2),
            Complex64::new(2.0, 0.5),
            Complex64::new(-0.7, 0.1),
        ];
        let sum: Complex64 = t.iter().sum();
        assert!((char_eval(&p(&[1]), &t).unwrap() - sum).norm_sqr() < 1e-24);
        let e2 = t[0] * t[1] + t[0] * t[2] + t[1] * t[2];
        assert!((char_eval(&p(&[1, 1]), &t).unwrap() - e2).norm_sqr() < 1e-24);
        let ones = [Complex64::new(1.0, 0.0); 5];
        for lam in [p(&[2, 1]), p(&[3, 3, 1]), p(&[4, 2, 2, 1])] {
            let v = char_eval(&lam, &ones).unwrap();
            let dim = dim_f64(&lam, 5);
            assert!((v.re - dim).abs() <= 1e-9 * dim && v.im.abs() <= 1e-9 * dim);
        }
        assert!(char_eval(&p(&[1, 1, 1, 1]), &t).is_err());
    }

    #[test]
    fn bareiss_small() {
        let m = vec![
            vec![BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(4), BigInt::from(3)],
        ];
        assert_eq!(bareiss_det(m), BigInt::from(2));
        let m = vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0)],
        ];
        assert_eq!(bareiss_det(m), BigInt::from(-1));
    }
}
