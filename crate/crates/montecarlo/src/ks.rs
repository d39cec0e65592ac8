/// Two-sample Kolmogorov–Smirnov comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct KsReport {
    pub statistic: f64,
    pub critical: f64,
    pub alpha: f64,
    pub reject: bool,
}

/// `sup |F_a - F_b|` over the pooled sample.
pub fn ks_statistic(a: &[f64], b: &[f64]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (n, m) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut worst = 0.0f64;
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        worst = worst.max((i as f64 / n - j as f64 / m).abs());
    }
    worst
}

/// Asymptotic critical value `c(α)·sqrt((n+m)/(nm))` for α ∈ {0.10, 0.05,
/// 0.01, 0.001}.
pub fn ks_critical(alpha: f64, n: usize, m: usize) -> f64 {
    let c = (-(alpha / 2.0).ln() / 2.0).sqrt();
    c * ((n + m) as f64 / (n as f64 * m as f64)).sqrt()
}

impl KsReport {
    pub fn compare(a: &[f64], b: &[f64], alpha: f64) -> Self {
        let statistic = ks_statistic(a, b);
        let critical = ks_critical(alpha, a.len(), b.len());
        KsReport {
            statistic,
            critical,
            alpha,
            reject: statistic > critical,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn critical_constant_at_one_percent() {
        let c = ks_critical(0.01, 1, 1) / 2f64.sqrt();
        assert!((c - 1.6276).abs() < 1e-3);
    }

    #[test]
    fn identical_and_shifted() {
        let a: Vec<f64> = (0..1000).map(f64::from).collect();
        assert_eq!(ks_statistic(&a, &a), 0.0);
        let b: Vec<f64> = a.iter().map(|x| x + 500.0).collect();
        assert!((ks_statistic(&a, &b) - 0.5).abs() < 1e-9);
    }
}
