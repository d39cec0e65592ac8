//! Peak-set plans: turning spectral gaps into measures whose Fourier
//! transform is one on a target set and small elsewhere.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gap::{gamma_analytic, product_sup, s_set, GapCertificate, ProductDomain};
use crate::rational::{self, ratio, Rational};
use crate::spectra::{CentralSpectrum, ProductSignature};

/// Factors of dimension at least this get Rider's measure; smaller ones get
/// a Riesz-type density.
pub const THRESHOLD: usize = 4;

/// Gap level of every Riesz factor: `1/(2N²)` with `N` the threshold.
pub fn riesz_level() -> Rational {
    ratio(1, 2 * (THRESHOLD * THRESHOLD) as i64)
}

/// Smallest `m` with `2^{-m} ≤` [`riesz_level`].
pub fn level_power() -> u32 {
    let level = riesz_level();
    let mut m = 1;
    while ratio(1, 1i64 << m) > level {
        m += 1;
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    SplitByDimension {
        threshold: usize,
        riesz: Vec<usize>,
        nu: Vec<usize>,
    },
    /// Riesz density on one factor with parameter `param`; its coefficient
    /// at `σ` and `σ̄` is `level`.
    Riesz {
        factor: usize,
        dim: usize,
        param: Rational,
        level: Rational,
    },
    Nu {
        factor: usize,
        dim: usize,
        gamma: Rational,
    },
    /// Convolution power applied to every Rider factor to match levels.
    LevelPower { m: u32 },
    /// Product of the factors: a `(delta, gamma)` gap on the union of the
    /// per-factor target sets.
    Product { delta: Rational, gamma: Rational },
    /// A single certified gap, used as-is.
    Gap { delta: Rational, gamma: Rational },
    /// `δ⁻¹(μ - m_G)`: `ε = γ/δ`, `w = (‖μ‖ + 1)/δ`.
    Normalize {
        delta: Rational,
        gamma: Rational,
        tv: Rational,
    },
    Amplify { m: u32 },
    /// Restriction to total weight one; keeps `σ`, drops `σ̄`.
    Twist,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pq = rational::to_pq;
        match self {
            Step::SplitByDimension { threshold, riesz, nu } => {
                write!(f, "split(N={threshold}, riesz={riesz:?}, nu={nu:?})")
            }
            Step::Riesz { factor, dim, param, level } => write!(
                f,
                "riesz(factor={factor}, n={dim}, param={}, level={})",
                pq(param),
                pq(level)
            ),
            Step::Nu { factor, dim, gamma } => {
                write!(f, "nu(factor={factor}, n={dim}, gamma={})", pq(gamma))
            }
            Step::LevelPower { m } => write!(f, "level_power(m={m})"),
            Step::Product { delta, gamma } => {
                write!(f, "product(delta={}, gamma={})", pq(delta), pq(gamma))
            }
            Step::Gap { delta, gamma } => write!(f, "gap(delta={}, gamma={})", pq(delta), pq(gamma)),
            Step::Normalize { delta, gamma, tv } => write!(
                f,
                "normalize(delta={}, gamma={}, tv={})",
                pq(delta),
                pq(gamma),
                pq(tv)
            ),
            Step::Amplify { m } => write!(f, "amplify(m={m})"),
            Step::Twist => f.write_str("twist"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakPlan {
    pub target_set: Vec<ProductSignature>,
    pub spectrum: CentralSpectrum,
    pub epsilon: Rational,
    pub weight_w: Rational,
    pub steps: Vec<Step>,
}

impl PeakPlan {
    pub fn group(&self) -> &[usize] {
        self.spectrum.group()
    }

    /// Recomputes `(ε, w)` from the steps alone.
    pub fn audit(&self) -> Result<(Rational, Rational)> {
        let mut state: Option<(Rational, Rational)> = None;
        for step in &self.steps {
            match step {
                Step::Normalize { delta, gamma, tv } => {
                    state = Some((gamma / delta, (tv + Rational::one()) / delta));
                }
                Step::Amplify { m } => {
                    let (e, w) = state.ok_or_else(|| {
                        Error::Refused("amplification before normalization".into())
                    })?;
                    state = Some((rational::pow(&e, *m), rational::pow(&w, *m)));
                }
                _ => {}
            }
        }
        state.ok_or_else(|| Error::Refused("plan has no normalization step".into()))
    }

    /// Whether [`PeakPlan::audit`] reproduces the stored values.
    pub fn audit_ok(&self) -> bool {
        self.audit()
            .is_ok_and(|(e, w)| e == self.epsilon && w == self.weight_w)
    }
}

/// Normalizes a measure with a `(delta, gamma)` gap on `target`.
pub fn peak_from_gap(
    spectrum: CentralSpectrum,
    target: Vec<ProductSignature>,
    delta: Rational,
    gamma: Rational,
    mut steps: Vec<Step>,
) -> Result<PeakPlan> {
    if !delta.is_positive() {
        return Err(Error::OutOfRange {
            what: "delta",
            detail: format!("need delta > 0, got {}", rational::to_pq(&delta)),
        });
    }
    if gamma >= delta {
        return Err(Error::Refused(format!(
            "gamma = {} is not below delta = {}; epsilon would be at least 1",
            rational::to_pq(&gamma),
            rational::to_pq(&delta)
        )));
    }
    let tv = spectrum.tv_bound().clone();
    let spectrum = CentralSpectrum::normalize(delta.clone(), spectrum)?;
    let epsilon = &gamma / &delta;
    let weight_w = spectrum.tv_bound().clone();
    steps.push(Step::Normalize { delta, gamma, tv });
    Ok(PeakPlan {
        target_set: target,
        spectrum,
        epsilon,
        weight_w,
        steps,
    })
}

fn s_targets(n: usize) -> Vec<ProductSignature> {
    s_set(n).into_iter().map(ProductSignature::single).collect()
}

/// Peak plan from a gap certificate for `ν_n`.
pub fn gap_to_peak(cert: &GapCertificate) -> Result<PeakPlan> {
    if !cert.verdict {
        return Err(Error::Refused(format!(
            "certificate for n={} has verdict false",
            cert.n
        )));
    }
    peak_from_gap(
        cert.measure.clone(),
        s_targets(cert.n),
        cert.delta.clone(),
        cert.gamma_analytic.clone(),
        alloc::vec![Step::Gap {
            delta: cert.delta.clone(),
            gamma: cert.gamma_analytic.clone(),
        }],
    )
}

/// Peak plan from the Riesz density on `U(n)`, which has a `(δ/n, 0)` gap.
pub fn riesz_peak(delta: Rational, n: usize) -> Result<PeakPlan> {
    let spec = CentralSpectrum::riesz(delta.clone(), n)?;
    let level = &delta / rational::from_int(n as i64);
    peak_from_gap(
        spec,
        s_targets(n),
        level.clone(),
        Rational::zero(),
        alloc::vec![Step::Gap {
            delta: level,
            gamma: Rational::zero(),
        }],
    )
}

/// `m`-fold convolution power: `(ε, w) → (εᵐ, wᵐ)`.
pub fn amplify(plan: &PeakPlan, m: u32) -> Result<PeakPlan> {
    if m == 0 {
        return Err(Error::OutOfRange {
            what: "power",
            detail: "amplification power must be at least 1".into(),
        });
    }
    if m == 1 {
        return Ok(plan.clone());
    }
    let mut steps = plan.steps.clone();
    steps.push(Step::Amplify { m });
    Ok(PeakPlan {
        target_set: plan.target_set.clone(),
        spectrum: CentralSpectrum::power(plan.spectrum.clone(), m)?,
        epsilon: rational::pow(&plan.epsilon, m),
        weight_w: rational::pow(&plan.weight_w, m),
        steps,
    })
}

/// Smallest `m ≥ 1` with `epsilon^m ≤ target`.
pub fn amplification_power(epsilon: &Rational, target: &Rational) -> Result<u32> {
    if epsilon >= &Rational::one() {
        return Err(Error::Refused("epsilon >= 1 cannot be amplified".into()));
    }
    if !target.is_positive() {
        return Err(Error::OutOfRange {
            what: "epsilon target",
            detail: "must be positive".into(),
        });
    }
    let mut m = 1u32;
    let mut e = epsilon.clone();
    while e > *target {
        m += 1;
        e *= epsilon;
    }
    Ok(m)
}

/// Amplifies to `ε ≤ target` with the smallest possible power.
pub fn amplify_to(plan: &PeakPlan, target: &Rational) -> Result<PeakPlan> {
    amplify(plan, amplification_power(&plan.epsilon, target)?)
}

/// Restricts the plan to total weight one, which keeps `σ` on each factor
/// and drops `σ̄`.
pub fn twist_plan(plan: &PeakPlan) -> PeakPlan {
    let mut steps = plan.steps.clone();
    steps.push(Step::Twist);
    PeakPlan {
        target_set: plan
            .target_set
            .iter()
            .filter(|s| s.total_weight() == 1)
            .cloned()
            .collect(),
        spectrum: CentralSpectrum::twist(plan.spectrum.clone()),
        epsilon: plan.epsilon.clone(),
        weight_w: plan.weight_w.clone(),
        steps,
    }
}

/// Peak plan on `∏ U(dims[i])` for the set `{σ at one factor, trivial
/// elsewhere}` with off-set bound at most `epsilon_target`.
pub fn build_product_peak(dims: &[usize], epsilon_target: &Rational) -> Result<PeakPlan> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::OutOfRange {
            what: "dims",
            detail: format!("need non-empty positive factor sizes, got {dims:?}"),
        });
    }
    if !epsilon_target.is_positive() {
        return Err(Error::OutOfRange {
            what: "epsilon target",
            detail: format!("must be positive, got {}", rational::to_pq(epsilon_target)),
        });
    }
    if epsilon_target >= &Rational::one() {
        return Err(Error::Refused(format!(
            "epsilon target {} is not below 1",
            rational::to_pq(epsilon_target)
        )));
    }

    let (small, large): (Vec<usize>, Vec<usize>) =
        (0..dims.len()).partition(|&i| dims[i] < THRESHOLD);
    let mut steps = alloc::vec![Step::SplitByDimension {
        threshold: THRESHOLD,
        riesz: small.clone(),
        nu: large.clone(),
    }];
    let m = if small.is_empty() { 1 } else { level_power() };
    let delta = if small.is_empty() {
        rational::half()
    } else {
        ratio(1, 1i64 << m)
    };

    let mut factors = Vec::with_capacity(dims.len());
    let mut gamma = &delta * &delta;
    for (i, &n) in dims.iter().enumerate() {
        if n < THRESHOLD {
            let param = &delta * rational::from_int(n as i64);
            factors.push(CentralSpectrum::riesz(param.clone(), n)?);
            steps.push(Step::Riesz {
                factor: i,
                dim: n,
                param,
                level: delta.clone(),
            });
        } else {
            let g = gamma_analytic(n)?;
            steps.push(Step::Nu {
                factor: i,
                dim: n,
                gamma: g.clone(),
            });
            let nu = CentralSpectrum::nu(n)?;
            let (spec, g) = if m > 1 {
                (CentralSpectrum::power(nu, m)?, rational::pow(&g, m))
            } else {
                (nu, g)
            };
            if g > gamma {
                gamma = g;
            }
            factors.push(spec);
        }
    }
    if m > 1 && !large.is_empty() {
        steps.push(Step::LevelPower { m });
    }
    steps.push(Step::Product {
        delta: delta.clone(),
        gamma: gamma.clone(),
    });

    let spectrum = CentralSpectrum::product(factors)?;
    let mut target = Vec::with_capacity(2 * dims.len());
    for i in 0..dims.len() {
        target.push(ProductSignature::defining_at(dims, i));
        target.push(ProductSignature::defining_conjugate_at(dims, i));
    }
    let plan = peak_from_gap(spectrum, target, delta, gamma, steps)?;
    let plan = amplify_to(&plan, epsilon_target)?;
    Ok(twist_plan(&plan))
}

/// Outcome of checking a plan on a finite domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakVerification {
    pub checked: usize,
    pub on_target: bool,
    pub max_off_target: Rational,
    pub argmax: Option<ProductSignature>,
    pub ok: bool,
    pub failure: Option<String>,
}

/// Exhaustively checks a plan: exactly one on the target set, at most `ε` in
/// absolute value elsewhere, over signatures with at most `max_nontrivial`
/// nontrivial factors, `|λ| ≤ weight_cap` and `|d| ≤ d_cap` per factor.
pub fn verify(
    plan: &PeakPlan,
    weight_cap: u32,
    d_cap: u32,
    max_nontrivial: usize,
) -> Result<PeakVerification> {
    let mut failure = None;
    for t in &plan.target_set {
        let v = plan.spectrum.eval(t)?;
        if !v.is_one() && failure.is_none() {
            failure = Some(format!("value {} at target {t}", rational::to_pq(&v)));
        }
    }
    let on_target = failure.is_none();
    let domain = ProductDomain::new(plan.group(), weight_cap, d_cap, true);
    let sup = product_sup(&plan.spectrum, &domain, max_nontrivial, |pi| {
        plan.target_set.contains(pi)
    });
    let (checked, max_off_target, argmax) = match sup {
        Ok(s) => (s.checked, s.max, Some(s.argmax)),
        Err(Error::EmptySearch) => (0, Rational::zero(), None),
        Err(e) => return Err(e),
    };
    if failure.is_none() && max_off_target > plan.epsilon {
        failure = Some(format!(
            "off-target value {} exceeds epsilon {}",
            rational::to_pq(&max_off_target),
            rational::to_pq(&plan.epsilon)
        ));
    }
    Ok(PeakVerification {
        checked,
        on_target,
        max_off_target,
        argmax,
        ok: failure.is_none(),
        failure,
    })
}
