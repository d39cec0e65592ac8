//! Spectral-gap certification for Rider's measures `ν_n`.

mod bounds;
mod domain;

pub use bounds::{
    analytic_bound, case_value, classify, gamma_analytic, in_s, rider_bound, rider_components,
    Bound, CaseId, JointClass, Variant,
};
pub use domain::{map_chunks, Chunk, ProductDomain};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::combinatorics::Signature;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::spectra::{mu_kn_eval, AtomCache, CentralSpectrum, ProductSignature};

pub const DEFAULT_WEIGHT_CAP: u32 = 12;
pub const DEFAULT_D_CAP: u32 = 12;

/// Largest `|eval|` over a finite domain, with the first maximizer in domain
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Supremum {
    pub max: Rational,
    pub argmax: ProductSignature,
    pub checked: usize,
}

/// `max |ŝpec(π)|` over nontrivial `π` in the domain with at most
/// `max_nontrivial` nontrivial factors and `skip(π)` false.
pub fn product_sup<F>(
    spec: &CentralSpectrum,
    domain: &ProductDomain,
    max_nontrivial: usize,
    skip: F,
) -> Result<Supremum>
where
    F: Fn(&ProductSignature) -> bool + Sync + Send,
{
    if domain.group() != spec.group() {
        return Err(Error::IncompatibleSignature(format!(
            "domain lives on {:?}, spectrum on {:?}",
            domain.group(),
            spec.group()
        )));
    }
    let chunks = domain.chunks(max_nontrivial);
    let partial = map_chunks(domain, &chunks, |members| {
        let mut cache = AtomCache::default();
        let mut best: Option<(Rational, ProductSignature)> = None;
        let mut checked = 0usize;
        for pi in members {
            if skip(&pi) {
                continue;
            }
            checked += 1;
            let v = spec.eval_cached(&pi, &mut cache)?.abs();
            if best.as_ref().is_none_or(|(b, _)| v > *b) {
                best = Some((v, pi));
            }
        }
        Ok::<_, Error>((best, checked))
    });
    let mut best: Option<(Rational, ProductSignature)> = None;
    let mut checked = 0;
    for part in partial {
        let (b, c) = part?;
        checked += c;
        if let Some((v, pi)) = b {
            if best.as_ref().is_none_or(|(cur, _)| v > *cur) {
                best = Some((v, pi));
            }
        }
    }
    let (max, argmax) = best.ok_or(Error::EmptySearch)?;
    Ok(Supremum {
        max,
        argmax,
        checked,
    })
}

fn check_caps(weight_cap: u32, d_cap: u32) -> Result<()> {
    if weight_cap == 0 || d_cap == 0 {
        return Err(Error::OutOfRange {
            what: "enumeration caps",
            detail: format!("need caps >= 1, got weight_cap={weight_cap}, d_cap={d_cap}"),
        });
    }
    Ok(())
}

/// `max |ŝpec(λ, d)|` over nontrivial `(λ, d)` of a single `U(n)` with
/// `|λ| ≤ weight_cap`, `0 ≤ d ≤ d_cap` and not in `exclude`. Ties go to the
/// smallest `(|λ|, λ, d)`.
pub fn exact_sup(
    spec: &CentralSpectrum,
    exclude: &[Signature],
    weight_cap: u32,
    d_cap: u32,
) -> Result<(Rational, Signature)> {
    check_caps(weight_cap, d_cap)?;
    if spec.group().len() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: spec.group().len(),
        });
    }
    let domain = ProductDomain::new(spec.group(), weight_cap, d_cap, false);
    let sup = product_sup(spec, &domain, 1, |pi| exclude.contains(&pi.components()[0]))?;
    let argmax = sup.argmax.components()[0].clone();
    Ok((sup.max, argmax))
}

/// `S_n = {σ_n, σ̄_n}`.
pub fn s_set(n: usize) -> [Signature; 2] {
    [Signature::defining(n), Signature::defining_conjugate(n)]
}

/// One row of the per-measure case table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseBound {
    pub k: usize,
    pub case: CaseId,
    pub variant: Variant,
    pub predicate: &'static str,
    pub bound: Rational,
}

/// One row of the joint class table (odd `n` only).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointBound {
    pub class: JointClass,
    pub bound: Rational,
}

/// A signature where a computed coefficient exceeds the bound that should
/// cover it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub signature: Signature,
    pub quantity: String,
    pub value: Rational,
    pub bound: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub weight_cap: u32,
    pub d_cap: u32,
    pub checked: usize,
    pub max_value: Rational,
    pub argmax: Signature,
    pub violations: Vec<Violation>,
}

pub const GAMMA_BASIS: &str = "gamma is the analytic case bound, valid for every signature; \
the finite enumeration is a consistency cross-check, not the proof";

/// Evidence that `ν_n` has a `(1/2, γ)` spectral gap with respect to `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapCertificate {
    pub n: usize,
    pub measure: CentralSpectrum,
    pub delta: Rational,
    pub delta_conjugate: Rational,
    pub gamma_analytic: Rational,
    pub gamma_basis: &'static str,
    pub case_table: Vec<CaseBound>,
    pub joint_table: Vec<JointBound>,
    pub enumeration: Option<EnumerationReport>,
    pub verdict: bool,
    pub failure: Option<String>,
    pub offending: Option<Signature>,
}

const MAX_REPORTED_VIOLATIONS: usize = 16;

/// Analytic part of the certificate: `δ` at `S_n`, `γ(n)` and the tables.
pub fn certify_analytic(n: usize) -> Result<GapCertificate> {
    if n < 4 {
        return Err(Error::Refused(format!("requires n > 3, got n={n}")));
    }
    let measure = CentralSpectrum::nu(n)?;
    let [sigma, sigma_bar] = s_set(n);
    let delta = measure.eval_single(&sigma)?;
    let delta_conjugate = measure.eval_single(&sigma_bar)?;
    let gamma = gamma_analytic(n)?;

    let mut case_table = Vec::new();
    for (k, variant) in rider_components(n) {
        for case in CaseId::ALL {
            case_table.push(CaseBound {
                k,
                case,
                variant,
                predicate: case.predicate(),
                bound: case_value(n, k, case, variant),
            });
        }
    }
    let joint_table = if n % 2 == 1 {
        JointClass::all()
            .into_iter()
            .map(|class| JointBound {
                class,
                bound: class.bound(n),
            })
            .collect()
    } else {
        Vec::new()
    };

    let half = rational::half();
    let mut failure = None;
    if delta != half || delta_conjugate != half {
        failure = Some(format!(
            "coefficient at S_n is ({}, {}), expected 1/2",
            rational::to_pq(&delta),
            rational::to_pq(&delta_conjugate)
        ));
    } else if gamma >= half {
        failure = Some(format!("gamma = {} is not below 1/2", rational::to_pq(&gamma)));
    }
    Ok(GapCertificate {
        n,
        measure,
        delta,
        delta_conjugate,
        gamma_analytic: gamma,
        gamma_basis: GAMMA_BASIS,
        case_table,
        joint_table,
        enumeration: None,
        verdict: failure.is_none(),
        failure,
        offending: None,
    })
}

fn check_signature(n: usize, sig: &Signature, nu_value: &Rational, gamma: &Rational) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for (k, variant) in rider_components(n) {
        let v = mu_kn_eval(k, n, sig.lambda(), sig.d())?;
        if let Some(b) = analytic_bound(n, k, sig.lambda(), sig.d(), variant)?.value() {
            if v > b {
                out.push(Violation {
                    signature: sig.clone(),
                    quantity: format!("mu({k},{n})"),
                    value: v,
                    bound: b,
                });
            }
        }
    }
    let abs = nu_value.abs();
    if let Some(b) = rider_bound(n, sig) {
        if abs > b {
            out.push(Violation {
                signature: sig.clone(),
                quantity: format!("nu({n}) class bound"),
                value: abs.clone(),
                bound: b,
            });
        }
    }
    if abs > *gamma {
        out.push(Violation {
            signature: sig.clone(),
            quantity: format!("nu({n}) gamma"),
            value: abs,
            bound: gamma.clone(),
        });
    }
    Ok(out)
}

/// Full certificate: the analytic part plus an exhaustive cross-check over
/// `|λ| ≤ weight_cap`, `0 ≤ d ≤ d_cap`, including per-signature domination
/// of every coefficient by its class bound.
pub fn certify_gap(n: usize, weight_cap: u32, d_cap: u32) -> Result<GapCertificate> {
    check_caps(weight_cap, d_cap)?;
    let mut cert = certify_analytic(n)?;
    let s = s_set(n);
    let domain = ProductDomain::new(&[n], weight_cap, d_cap, false);
    let chunks = domain.chunks(1);
    let gamma = cert.gamma_analytic.clone();
    let measure = &cert.measure;
    let partial = map_chunks(&domain, &chunks, |members| {
        let mut cache = AtomCache::default();
        let mut best: Option<(Rational, Signature)> = None;
        let mut violations = Vec::new();
        let mut checked = 0usize;
        for pi in members {
            let sig = &pi.components()[0];
            if s.contains(sig) {
                continue;
            }
            checked += 1;
            let v = measure.eval_cached(&pi, &mut cache)?;
            violations.extend(check_signature(n, sig, &v, &gamma)?);
            let abs = v.abs();
            if best.as_ref().is_none_or(|(b, _)| abs > *b) {
                best = Some((abs, sig.clone()));
            }
        }
        Ok::<_, Error>((best, violations, checked))
    });

    let mut best: Option<(Rational, Signature)> = None;
    let mut violations = Vec::new();
    let mut checked = 0;
    for part in partial {
        let (b, v, c) = part?;
        checked += c;
        violations.extend(v);
        if let Some((val, sig)) = b {
            if best.as_ref().is_none_or(|(cur, _)| val > *cur) {
                best = Some((val, sig));
            }
        }
    }
    let (max_value, argmax) = best.ok_or(Error::EmptySearch)?;
    let total_violations = violations.len();
    violations.truncate(MAX_REPORTED_VIOLATIONS);

    if cert.failure.is_none() {
        if let Some(first) = violations.first() {
            cert.failure = Some(format!(
                "{} domination violation(s); first: {} = {} > {} at {}",
                total_violations,
                first.quantity,
                rational::to_pq(&first.value),
                rational::to_pq(&first.bound),
                first.signature
            ));
            cert.offending = Some(first.signature.clone());
        } else if max_value > cert.gamma_analytic {
            cert.failure = Some(format!(
                "enumerated maximum {} exceeds gamma {}",
                rational::to_pq(&max_value),
                rational::to_pq(&cert.gamma_analytic)
            ));
            cert.offending = Some(argmax.clone());
        }
    }
    cert.verdict = cert.failure.is_none();
    cert.enumeration = Some(EnumerationReport {
        weight_cap,
        d_cap,
        checked,
        max_value,
        argmax,
        violations,
    });
    Ok(cert)
}

impl GapCertificate {
    /// Whether some enumerated signature attains `γ`.
    pub fn gamma_attained(&self) -> bool {
        self.enumeration
            .as_ref()
            .is_some_and(|e| e.max_value == self.gamma_analytic && !e.max_value.is_zero())
    }
}
