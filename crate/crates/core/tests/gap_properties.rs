use num_traits::{One, Zero};
use ugap_core::combinatorics::{Partition, Signature};
use ugap_core::gap::{
    analytic_bound, certify_analytic, certify_gap, gamma_analytic, product_sup, s_set, ProductDomain,
    Variant,
};
use ugap_core::rational::{self, ratio, Rational};
use ugap_core::spectra::{mu_kn_eval, CentralSpectrum};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts).unwrap()
}

#[test]
fn domination_four_to_ten() {
    for n in 4..=10 {
        let c = certify_gap(n, 12, 12).unwrap();
        let e = c.enumeration.as_ref().unwrap();
        assert!(e.violations.is_empty(), "n={n}: {:?}", e.violations.first());
        assert!(c.verdict, "n={n}: {:?}", c.failure);
        assert!(e.max_value <= c.gamma_analytic);
    }
}

#[test]
fn enumeration_attains_gamma() {
    // Odd n attains it too, at (2), d = 0.
    for n in 4..=9 {
        let c = certify_gap(n, 6, 6).unwrap();
        assert!(c.gamma_attained(), "n={n}");
        let e = c.enumeration.unwrap();
        assert_eq!(e.argmax, Signature::from_canonical(n, p(&[2]), 0).unwrap());
    }
}

#[test]
fn delta_is_one_half() {
    for n in 4..=50 {
        let nu = CentralSpectrum::nu(n).unwrap();
        for s in s_set(n) {
            assert_eq!(nu.eval_single(&s).unwrap(), rational::half(), "n={n}");
        }
    }
}

#[test]
fn analytic_table_range() {
    let quarter = ratio(1, 4);
    for n in 4..=200usize {
        let c = certify_analytic(n).unwrap();
        assert!(c.verdict, "n={n}");
        let g = &c.gamma_analytic;
        assert!(*g > quarter && *g < rational::half());
        if n % 2 == 0 {
            assert_eq!(*g, ratio(n as i64 + 2, 4 * (n as i64 + 1)));
            assert!(g - &quarter <= ratio(1, n as i64));
        }
    }
}

/// Odd-`n` bounds obtained by pairing row `k+1` with the columns beyond `k`
/// are too small: these signatures exceed them.
#[test]
fn narrower_odd_bounds_fail() {
    let n = 5usize;
    let k = 2usize;
    let narrow_wide = ratio(((n - k) * (n - k - 1)) as i64, (n * (n + 1)) as i64);
    let narrow_column = ratio(((n - k - 1) * (n - k - 2)) as i64, (n * (n - 1)) as i64);
    let narrow_hook = ratio(((k + 1) * (n - k - 1)) as i64, ((n + 1) * (n - 1)) as i64);

    let v = mu_kn_eval(k, n, &p(&[1, 1, 1]), 1).unwrap();
    assert_eq!(v, ratio(3, 10));
    assert!(v > narrow_column);
    let v = mu_kn_eval(k, n, &p(&[2, 2, 2, 2]), 2).unwrap();
    assert_eq!(v, ratio(2, 5));
    assert!(v > narrow_wide);
    let v = mu_kn_eval(k, n, &p(&[2, 1, 1, 1]), 1).unwrap();
    assert_eq!(v, ratio(3, 8));
    assert!(v > narrow_hook);

    for (lambda, d) in [(p(&[1, 1, 1]), 1), (p(&[2, 2, 2, 2]), 2), (p(&[2, 1, 1, 1]), 1)] {
        let b = analytic_bound(n, k, &lambda, d, Variant::Odd).unwrap().value().unwrap();
        assert!(mu_kn_eval(k, n, &lambda, d).unwrap() <= b);
    }
}

#[test]
fn riesz_product_second_order() {
    let dims = [1usize, 2, 3];
    let level = ratio(1, 32);
    let factors = dims
        .iter()
        .map(|&n| CentralSpectrum::riesz(&level * rational::from_int(n as i64), n).unwrap())
        .collect();
    let spec = CentralSpectrum::product(factors).unwrap();
    let domain = ProductDomain::new(&dims, 4, 4, true);
    let sup = product_sup(&spec, &domain, 3, |pi| {
        pi.components().iter().filter(|s| !s.is_trivial()).count() < 2
    })
    .unwrap();
    assert_eq!(sup.max, &level * &level);
    let first_order = product_sup(&spec, &domain, 1, |_| false).unwrap();
    assert_eq!(first_order.max, level);
}

#[test]
fn gamma_refuses_small_n() {
    for n in 0..4 {
        assert!(gamma_analytic(n).is_err());
        assert!(certify_analytic(n).is_err());
    }
}

#[test]
fn haar_and_dirac_extremes() {
    let haar = CentralSpectrum::haar(&[4]).unwrap();
    let dirac = CentralSpectrum::dirac(&[4]).unwrap();
    for s in ProductDomain::new(&[4], 4, 2, true).factor(0) {
        assert!(haar.eval_single(s).unwrap().is_zero());
        assert!(dirac.eval_single(s).unwrap().is_one());
    }
    let _: Rational = Rational::zero();
}

#[test]
fn branching_small() {
    use ugap_core::combinatorics::{branching_sum, dim_schur, partitions_of};
    for n in 2..=5 {
        for w in 0..=5 {
            for lambda in partitions_of(w, n) {
                for k in 1..n {
                    assert_eq!(branching_sum(&lambda, k, n), dim_schur(&lambda, n));
                }
            }
        }
    }
}
