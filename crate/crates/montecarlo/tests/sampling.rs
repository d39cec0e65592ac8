use num_complex::Complex64;
use rand_distr::{Distribution, StandardNormal};
use ugap_montecarlo::*;

#[test]
fn draws_are_unitary() {
    let mut rng = stream(3, 0);
    for d in 1..=12 {
        for _ in 0..20 {
            let u = sample_haar_unitary(d, &mut rng).unwrap();
            assert!(unitarity_residual(&u) <= 1e-12, "d={d}");
        }
    }
    let u = sample_haar_unitary(1, &mut rng).unwrap();
    assert!((u[(0, 0)].norm() - 1.0).abs() < 1e-12);
    assert!(sample_haar_unitary(0, &mut rng).is_err());
}

fn entry_mean(naive: bool, samples: usize) -> (Complex64, f64) {
    let mut rng = stream(11, 0);
    let xs: Vec<Complex64> = (0..samples)
        .map(|_| {
            let u = if naive {
                sample_naive_unitary(3, &mut rng).unwrap()
            } else {
                sample_haar_unitary(3, &mut rng).unwrap()
            };
            u[(0, 0)]
        })
        .collect();
    let re: Vec<f64> = xs.iter().map(|z| z.re).collect();
    let im: Vec<f64> = xs.iter().map(|z| z.im).collect();
    let (mr, sr) = jackknife(&[&re], |m| m[0]);
    let (mi, si) = jackknife(&[&im], |m| m[0]);
    (Complex64::new(mr, mi), sr.max(si))
}

#[test]
fn entry_mean_vanishes_only_with_phase_fix() {
    let (m, se) = entry_mean(false, 100_000);
    assert!(m.re.abs() <= 3.0 * se && m.im.abs() <= 3.0 * se, "{m} ± {se}");
    let (m, se) = entry_mean(true, 20_000);
    assert!(m.norm() > 10.0 * se, "naive sampler looked centered: {m} ± {se}");
}

fn rotated_traces(naive: bool, v_seed: u64) -> KsReport {
    let d = 3;
    let v = sample_haar_unitary(d, &mut stream(v_seed, 0)).unwrap();
    let mut rng = stream(21, 0);
    let n = 10_000;
    let draw = |rng: &mut _| {
        if naive {
            sample_naive_unitary(d, rng).unwrap()
        } else {
            sample_haar_unitary(d, rng).unwrap()
        }
    };
    let plain: Vec<f64> = (0..n).map(|_| draw(&mut rng).trace().re).collect();
    let rotated: Vec<f64> = (0..n).map(|_| (&v * draw(&mut rng)).trace().re).collect();
    KsReport::compare(&plain, &rotated, 0.01)
}

#[test]
fn left_invariance_separates_samplers() {
    let haar = rotated_traces(false, 5);
    assert!(!haar.reject, "{haar:?}");
    let naive = rotated_traces(true, 5);
    assert!(naive.reject, "{naive:?}");
}

#[test]
fn reproducible_streams() {
    let a = sample_traces(4, 10_000, 99).unwrap();
    let b = sample_traces(4, 10_000, 99).unwrap();
    assert_eq!(a, b);
    let c = sample_traces(4, 10_000, 100).unwrap();
    assert_ne!(a, c);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let serial = pool.install(|| trace_moments(4, 4, 10_000, 99).unwrap());
    assert_eq!(serial, trace_moments(4, 4, 10_000, 99).unwrap());
}

#[test]
fn moment_ladder() {
    for d in [2usize, 3, 6] {
        for k in 1..=3u32.min(d as u32) {
            let s = trace_moments(d, 2 * k, 50_000, 1000 + d as u64).unwrap();
            let exact = moment_oracle(d, k) as f64;
            assert_eq!(exact, (1..=k).product::<u32>() as f64);
            assert!(s.covers(exact), "d={d} k={k}: {s:?}");
        }
    }
    let one = trace_moments(1, 4, 1000, 1).unwrap();
    assert!((one.estimate - 1.0).abs() < 1e-12);
    assert!(trace_moments(2, 3, 1000, 1).is_err());
    assert!(trace_moments(2, 2, 999, 1).is_err());
}

fn gaussians(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = stream(seed, 0);
    (0..n).map(|_| StandardNormal.sample(&mut rng)).collect()
}

#[test]
fn psi2_proxy() {
    let g = gaussians(200_000, 4);
    let p = psi2_profile(&g, 12).unwrap();
    assert_eq!(p.argmax_p, 2);
    assert!((p.value - std::f64::consts::FRAC_1_SQRT_2).abs() < 0.01, "{p:?}");
    let scaled: Vec<f64> = g.iter().map(|x| 3.0 * x).collect();
    let s = psi2_estimate(&scaled).unwrap();
    assert!((s - 3.0 * p.value).abs() < 1e-9);
}

#[test]
fn subgaussian_checks() {
    let grid = default_t_grid();
    let g = gaussians(100_000, 8);
    assert!(sg_check(&g, 1.0, &grid).unwrap().pass);
    for d in [2usize, 5] {
        let re: Vec<f64> = sample_traces(d, 100_000, 30 + d as u64)
            .unwrap()
            .iter()
            .map(|t| t.re)
            .collect();
        let r = sg_check(&re, 1.0, &grid).unwrap();
        assert!(r.pass, "d={d}: {:?}", r.rows.iter().find(|r| !r.pass));
    }
}

#[test]
fn tail_reports() {
    let r = tail_check(1, 0.5, 100_000, 2, Some(0.5)).unwrap();
    assert_eq!(r.exact_in_interval(), Some(true), "{r:?}");
    let r = tail_check(6, 0.9, 20_000, 2, Some(0.9)).unwrap();
    assert_eq!(r.events, 0);
    assert!(r.vacuous);
    assert_eq!(r.verdict, "consistent (no events)");
    assert!(tail_check(1, 1.0, 10, 1, None).is_err());
}

#[test]
fn khintchine_ratios() {
    let r = khintchine_estimate(4, &[3], 1, 100_000, 5).unwrap();
    assert!(r.best.covers(2.0), "{:?}", r.best);
    assert!((r.norm_convention - r.best.estimate.powf(0.25)).abs() < 1e-12);
    assert!((r.gaussian_norm - 2f64.powf(0.25)).abs() < 1e-12);
    let r = khintchine_estimate(2, &[2, 3], 4, 10_000, 5).unwrap();
    for ratio in r.ratios {
        assert!((ratio - 1.0).abs() < 1e-12);
    }
    let r = khintchine_estimate(4, &[4; 12], 8, 50_000, 6).unwrap();
    assert!((r.best.estimate - 2.0).abs() < 0.15, "{:?}", r.best);
}

#[test]
fn nalgebra_qr_has_positive_diagonal() {
    let mut rng = stream(17, 0);
    for d in 1..=6 {
        let g = nalgebra::DMatrix::from_fn(d, d, |_, _| {
            Complex64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng))
        });
        let r = g.qr().r();
        for j in 0..d {
            assert!(r[(j, j)].im == 0.0 && r[(j, j)].re > 0.0);
        }
    }
}
