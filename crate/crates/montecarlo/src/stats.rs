/// Summary of a Monte Carlo estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleStats {
    pub estimator: String,
    pub estimate: f64,
    pub stderr: f64,
    pub samples: usize,
    pub seed: u64,
}

impl SampleStats {
    /// `estimate ± 3·stderr`.
    pub fn interval(&self) -> (f64, f64) {
        (self.estimate - 3.0 * self.stderr, self.estimate + 3.0 * self.stderr)
    }

    pub fn covers(&self, value: f64) -> bool {
        let (lo, hi) = self.interval();
        lo <= value && value <= hi
    }
}

/// Sum in a fixed binary-tree order.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const LEAF: usize = 64;
    if xs.len() <= LEAF {
        return xs.iter().sum();
    }
    let (a, b) = xs.split_at(xs.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

pub fn mean(xs: &[f64]) -> f64 {
    pairwise_sum(xs) / xs.len() as f64
}

/// Delete-one jackknife for `f(mean of column 0, mean of column 1, …)`.
/// Columns must have equal length `n ≥ 2`. Returns `(estimate, stderr)`.
pub fn jackknife(columns: &[&[f64]], f: impl Fn(&[f64]) -> f64) -> (f64, f64) {
    let n = columns[0].len();
    debug_assert!(columns.iter().all(|c| c.len() == n) && n >= 2);
    let sums: Vec<f64> = columns.iter().map(|c| pairwise_sum(c)).collect();
    let full: Vec<f64> = sums.iter().map(|s| s / n as f64).collect();
    let estimate = f(&full);
    let denom = (n - 1) as f64;
    let mut buf = vec![0.0; columns.len()];
    let thetas: Vec<f64> = (0..n)
        .map(|i| {
            for (j, c) in columns.iter().enumerate() {
                buf[j] = (sums[j] - c[i]) / denom;
            }
            f(&buf)
        })
        .collect();
    let bar = mean(&thetas);
    let dev: Vec<f64> = thetas.iter().map(|t| (t - bar) * (t - bar)).collect();
    let var = denom / n as f64 * pairwise_sum(&dev);
    (estimate, var.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jackknife_of_mean_is_classical() {
        let xs: Vec<f64> = (0..100).map(|i| ((i * 37) % 11) as f64).collect();
        let (est, se) = jackknife(&[&xs], |m| m[0]);
        let m = mean(&xs);
        let var: f64 = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / 99.0;
        assert!((est - m).abs() < 1e-12);
        assert!((se - (var / 100.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn pairwise_matches_naive_on_integers() {
        let xs: Vec<f64> = (0..1000).map(f64::from).collect();
        assert_eq!(pairwise_sum(&xs), 499500.0);
    }
}
