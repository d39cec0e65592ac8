use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use statrs::function::beta::beta_reg;

use crate::error::{McError, McResult};
use crate::haar::sample_haar_unitary;
use crate::rng::{chunk_sizes, stream};
use crate::stats::{jackknife, mean, pairwise_sum, SampleStats};

pub const MIN_MOMENT_SAMPLES: usize = 1000;
pub const MIN_PSI2_SAMPLES: usize = 10_000;
pub const DEFAULT_PSI2_MAX_P: u32 = 12;

/// Streams at or above this index are reserved for auxiliary draws.
const AUX_STREAM: u64 = 1 << 62;

/// `tr u` for `samples` independent Haar draws from `U(d)`.
pub fn sample_traces(d: usize, samples: usize, seed: u64) -> McResult<Vec<Complex64>> {
    sample_trace_rows(&[d], samples, seed).map(|rows| rows.into_iter().map(|r| r[0]).collect())
}

/// One row per draw: `tr u_k` for independent `u_k ∈ U(dims[k])`.
fn sample_trace_rows(dims: &[usize], samples: usize, seed: u64) -> McResult<Vec<Vec<Complex64>>> {
    if dims.contains(&0) {
        return Err(McError::OutOfRange {
            what: "dimension",
            detail: "d must be at least 1".into(),
        });
    }
    let chunks = chunk_sizes(samples);
    let parts: Vec<Vec<Vec<Complex64>>> = chunks
        .par_iter()
        .enumerate()
        .map(|(c, &size)| {
            let mut rng = stream(seed, c as u64);
            (0..size)
                .map(|_| {
                    dims.iter()
                        .map(|&d| sample_haar_unitary(d, &mut rng).expect("d >= 1").trace())
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

fn check_even(p: u32) -> McResult<()> {
    if p == 0 || p % 2 == 1 {
        return Err(McError::OutOfRange {
            what: "moment order",
            detail: format!("p must be a positive even integer, got {p}"),
        });
    }
    Ok(())
}

/// `E|tr u|^p` on `U(d)` with a jackknife standard error.
pub fn trace_moments(d: usize, p: u32, samples: usize, seed: u64) -> McResult<SampleStats> {
    check_even(p)?;
    if samples < MIN_MOMENT_SAMPLES {
        return Err(McError::Refused(format!(
            "need at least {MIN_MOMENT_SAMPLES} samples, got {samples}"
        )));
    }
    let values: Vec<f64> = sample_traces(d, samples, seed)?
        .iter()
        .map(|t| t.norm_sqr().powi(p as i32 / 2))
        .collect();
    let (estimate, stderr) = jackknife(&[&values], |m| m[0]);
    Ok(SampleStats {
        estimator: format!("E|tr u|^{p} on U({d})"),
        estimate,
        stderr,
        samples,
        seed,
    })
}

/// Exact `E|tr u|^{2k}` on `U(d)`: the number of permutations of `k` letters
/// whose longest increasing subsequence has length at most `d`, counted as
/// `Σ (f^λ)²` over `λ ⊢ k` with at most `d` rows. Equals `k!` when `k ≤ d`.
pub fn moment_oracle(d: usize, k: u32) -> u128 {
    let mut total = 0u128;
    let mut stack = vec![(Vec::<u32>::new(), k, k)];
    while let Some((parts, left, cap)) = stack.pop() {
        if left == 0 {
            if parts.len() <= d {
                let f = standard_tableaux(&parts);
                total += f * f;
            }
            continue;
        }
        for first in (1..=cap.min(left)).rev() {
            let mut next = parts.clone();
            next.push(first);
            stack.push((next, left - first, first));
        }
    }
    total
}

fn standard_tableaux(parts: &[u32]) -> u128 {
    let n: u32 = parts.iter().sum();
    let mut num: u128 = (1..=u128::from(n)).product();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&r| r > j).count() as u32;
            num /= u128::from(arm + leg + 1);
        }
    }
    num
}

/// `E|tr u|^p` on `U(2)` by integrating against the eigenvalue density
/// `|e^{iθ₁} - e^{iθ₂}|² / 2`. The integrand depends only on `θ₁ - θ₂`, and the
/// trapezoid rule is exact for trigonometric polynomials of low degree.
pub fn u2_moment_quadrature(p: u32) -> f64 {
    let nodes = 4 * (p as usize + 4);
    let h = std::f64::consts::TAU / nodes as f64;
    let vals: Vec<f64> = (0..nodes)
        .map(|i| {
            let phi = i as f64 * h;
            let c = phi.cos();
            (2.0 + 2.0 * c).powf(p as f64 / 2.0) * (2.0 - 2.0 * c) / 2.0
        })
        .collect();
    pairwise_sum(&vals) / nodes as f64
}

/// `p^{-1/2} (E|X|^p)^{1/p}` for each even `p ≤ max_p`, and its maximum.
#[derive(Clone, Debug, PartialEq)]
pub struct Psi2Profile {
    pub value: f64,
    pub argmax_p: u32,
    pub per_p: Vec<(u32, f64)>,
}

pub fn psi2_profile(xs: &[f64], max_p: u32) -> McResult<Psi2Profile> {
    check_even(max_p)?;
    if xs.len() < MIN_PSI2_SAMPLES {
        return Err(McError::Refused(format!(
            "need at least {MIN_PSI2_SAMPLES} samples, got {}",
            xs.len()
        )));
    }
    let mut per_p = Vec::new();
    let mut best = (f64::NEG_INFINITY, 0);
    for p in (2..=max_p).step_by(2) {
        let moments: Vec<f64> = xs.iter().map(|x| x.abs().powi(p as i32)).collect();
        let v = mean(&moments).powf(1.0 / p as f64) / (p as f64).sqrt();
        per_p.push((p, v));
        if v > best.0 {
            best = (v, p);
        }
    }
    Ok(Psi2Profile {
        value: best.0,
        argmax_p: best.1,
        per_p,
    })
}

/// Even-moment proxy for the ψ₂ norm with `p ≤ 12`.
pub fn psi2_estimate(xs: &[f64]) -> McResult<f64> {
    psi2_profile(xs, DEFAULT_PSI2_MAX_P).map(|p| p.value)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SgRow {
    pub t: f64,
    pub mgf: f64,
    pub stderr: f64,
    pub bound: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SgReport {
    pub s: f64,
    pub mean: f64,
    pub mean_stderr: f64,
    pub rows: Vec<SgRow>,
    pub pass: bool,
}

/// Grid `-3, -2.75, …, 3`.
pub fn default_t_grid() -> Vec<f64> {
    (-12..=12).map(|i| i as f64 / 4.0).collect()
}

/// Checks `E exp(tX) ≤ exp(s²t²/2)·(1 + 3·rse)` on the grid, where `rse` is
/// the relative standard error of the empirical mgf. Refuses samples whose
/// mean is not within three standard errors of zero.
pub fn sg_check(xs: &[f64], s: f64, grid: &[f64]) -> McResult<SgReport> {
    if xs.len() < 2 {
        return Err(McError::Refused("need at least two samples".into()));
    }
    let (m, se) = jackknife(&[xs], |v| v[0]);
    if m.abs() > 3.0 * se {
        return Err(McError::Refused(format!(
            "sample is not centered: mean {m} with stderr {se}"
        )));
    }
    let rows: Vec<SgRow> = grid
        .iter()
        .map(|&t| {
            let e: Vec<f64> = xs.iter().map(|x| (t * x).exp()).collect();
            let (mgf, stderr) = jackknife(&[&e], |v| v[0]);
            let rse = if mgf > 0.0 { stderr / mgf } else { 0.0 };
            let bound = (s * s * t * t / 2.0).exp() * (1.0 + 3.0 * rse);
            SgRow {
                t,
                mgf,
                stderr,
                bound,
                pass: mgf <= bound,
            }
        })
        .collect();
    let pass = rows.iter().all(|r| r.pass);
    Ok(SgReport {
        s,
        mean: m,
        mean_stderr: se,
        rows,
        pass,
    })
}

pub const TAIL_CONFIDENCE: f64 = 0.99;

#[derive(Clone, Debug, PartialEq)]
pub struct TailReport {
    pub d: usize,
    pub delta: f64,
    pub samples: usize,
    pub seed: u64,
    pub events: usize,
    pub empirical: f64,
    pub confidence: f64,
    pub interval: (f64, f64),
    /// `arccos(δ)/π`, known in closed form for `d = 1`.
    pub exact: Option<f64>,
    pub theta: Option<f64>,
    /// `e·θ^{d²}`.
    pub bound_rhs: Option<f64>,
    pub consistent: Option<bool>,
    pub vacuous: bool,
    pub verdict: String,
}

impl TailReport {
    pub fn exact_in_interval(&self) -> Option<bool> {
        self.exact
            .map(|p| self.interval.0 <= p && p <= self.interval.1)
    }
}

/// Exact Clopper–Pearson interval for `events` successes in `n` trials.
pub fn clopper_pearson(events: usize, n: usize, confidence: f64) -> (f64, f64) {
    let alpha = 1.0 - confidence;
    let (x, n) = (events as f64, n as f64);
    let lower = if events == 0 {
        0.0
    } else {
        bisect(|p| beta_reg(x, n - x + 1.0, p) - alpha / 2.0)
    };
    let upper = if events as f64 == n {
        1.0
    } else {
        bisect(|p| beta_reg(x + 1.0, n - x, p) - (1.0 - alpha / 2.0))
    };
    (lower, upper)
}

/// Root of an increasing function on `[0, 1]`.
fn bisect(f: impl Fn(f64) -> f64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// `P(Re tr u > δd)` on `U(d)` with an exact binomial interval, compared with
/// `e·θ^{d²}` when `θ` is given.
pub fn tail_check(
    d: usize,
    delta: f64,
    samples: usize,
    seed: u64,
    theta: Option<f64>,
) -> McResult<TailReport> {
    if !(0.0..1.0).contains(&delta) {
        return Err(McError::OutOfRange {
            what: "delta",
            detail: format!("need 0 <= delta < 1, got {delta}"),
        });
    }
    if samples == 0 {
        return Err(McError::OutOfRange {
            what: "samples",
            detail: "need at least one sample".into(),
        });
    }
    let level = delta * d as f64;
    let events = sample_traces(d, samples, seed)?
        .iter()
        .filter(|t| t.re > level)
        .count();
    let interval = clopper_pearson(events, samples, TAIL_CONFIDENCE);
    let exact = (d == 1).then(|| delta.acos() / std::f64::consts::PI);
    let bound_rhs = theta.map(|th| std::f64::consts::E * th.powi((d * d) as i32));
    let consistent = bound_rhs.map(|b| interval.0 <= b);
    let vacuous = events == 0;
    let verdict = match consistent {
        None => "no bound supplied".to_string(),
        Some(true) if vacuous => "consistent (no events)".to_string(),
        Some(true) => "consistent".to_string(),
        Some(false) => "inconsistent".to_string(),
    };
    Ok(TailReport {
        d,
        delta,
        samples,
        seed,
        events,
        empirical: events as f64 / samples as f64,
        confidence: TAIL_CONFIDENCE,
        interval,
        exact,
        theta,
        bound_rhs,
        consistent,
        vacuous,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct KhintchineReport {
    pub p: u32,
    pub dims: Vec<usize>,
    pub trials: usize,
    /// `E|f|^p / (E|f|²)^{p/2}` per trial.
    pub ratios: Vec<f64>,
    /// The largest ratio, with its jackknife error.
    pub best: SampleStats,
    pub best_coefficients: Vec<f64>,
    /// `best^{1/p}`.
    pub norm_convention: f64,
    /// `(p/2)!`, the same ratio for a standard complex Gaussian.
    pub gaussian_ratio: f64,
    pub gaussian_norm: f64,
}

/// Largest observed `E|f|^p / (E|f|²)^{p/2}` for `f = Σ x_k tr u_k` over
/// `trials` random unit vectors `x`. All trials share one set of Haar draws.
pub fn khintchine_estimate(
    p: u32,
    dims: &[usize],
    trials: usize,
    samples: usize,
    seed: u64,
) -> McResult<KhintchineReport> {
    check_even(p)?;
    if dims.is_empty() || trials == 0 || samples < 2 {
        return Err(McError::OutOfRange {
            what: "khintchine inputs",
            detail: "need non-empty dims, trials >= 1 and samples >= 2".into(),
        });
    }
    let rows = sample_trace_rows(dims, samples, seed)?;
    let coefficients: Vec<Vec<f64>> = (0..trials)
        .map(|t| {
            let mut rng = stream(seed, AUX_STREAM + t as u64);
            let x: Vec<f64> = dims.iter().map(|_| rng.sample(StandardNormal)).collect();
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            x.into_iter().map(|v| v / norm).collect()
        })
        .collect();
    let half = p as i32 / 2;
    let results: Vec<(f64, f64)> = coefficients
        .par_iter()
        .map(|x| {
            let (mut high, mut two) = (Vec::with_capacity(samples), Vec::with_capacity(samples));
            for row in &rows {
                let f: Complex64 = row.iter().zip(x).map(|(t, c)| t * c).sum();
                let a = f.norm_sqr();
                two.push(a);
                high.push(a.powi(half));
            }
            jackknife(&[&high, &two], |m| m[0] / m[1].powi(half))
        })
        .collect();
    let (best_idx, &(est, se)) = results
        .iter()
        .enumerate()
        .max_by(|a, b| a.1 .0.total_cmp(&b.1 .0).then(b.0.cmp(&a.0)))
        .expect("trials >= 1");
    let gaussian_ratio: f64 = (1..=half).map(f64::from).product();
    Ok(KhintchineReport {
        p,
        dims: dims.to_vec(),
        trials,
        ratios: results.iter().map(|r| r.0).collect(),
        best: SampleStats {
            estimator: format!("max over trials of E|f|^{p}/(E|f|^2)^{half}"),
            estimate: est,
            stderr: se,
            samples,
            seed,
        },
        best_coefficients: coefficients[best_idx].clone(),
        norm_convention: est.powf(1.0 / p as f64),
        gaussian_ratio,
        gaussian_norm: gaussian_ratio.powf(1.0 / p as f64),
    })
}
