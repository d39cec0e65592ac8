//! Fourier-side algebra of central measures on products of unitary groups.
//!
//! A central measure has a scalar Fourier coefficient on every irrep, so it is
//! described here by an expression tree that is evaluated lazily, one
//! signature at a time. Nothing is truncated: `μ_{k,n}` has infinite support
//! on the dual and is only ever evaluated pointwise.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::combinatorics::{dim_schur, skew_count, Partition, Signature, SkewShape};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// One signature per group factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductSignature {
    components: Vec<Signature>,
}

impl ProductSignature {
    pub fn new(components: Vec<Signature>) -> Self {
        ProductSignature { components }
    }

    pub fn single(sig: Signature) -> Self {
        ProductSignature {
            components: alloc::vec![sig],
        }
    }

    pub fn trivial(group: &[usize]) -> Self {
        ProductSignature::new(group.iter().map(|&n| Signature::trivial(n)).collect())
    }

    /// `σ` on factor `index`, trivial elsewhere.
    pub fn defining_at(group: &[usize], index: usize) -> Self {
        let mut p = ProductSignature::trivial(group);
        p.components[index] = Signature::defining(group[index]);
        p
    }

    pub fn defining_conjugate_at(group: &[usize], index: usize) -> Self {
        let mut p = ProductSignature::trivial(group);
        p.components[index] = Signature::defining_conjugate(group[index]);
        p
    }

    pub fn components(&self) -> &[Signature] {
        &self.components
    }

    pub fn is_trivial(&self) -> bool {
        self.components.iter().all(Signature::is_trivial)
    }

    pub fn total_weight(&self) -> i64 {
        self.components.iter().map(Signature::total_weight).sum()
    }

    pub fn conjugate(&self) -> Self {
        ProductSignature::new(self.components.iter().map(Signature::conjugate).collect())
    }
}

impl fmt::Display for ProductSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    /// Conjugation average of Haar measure on `U(k) ⊕ I_{n-k}` inside `U(n)`.
    MuKN { k: usize, n: usize },
    /// Density `1 + δ(tr σ + conj tr σ)` on `U(n)`.
    Riesz { delta: Rational, n: usize },
    Haar,
    DiracIdentity,
    Convolve(Vec<CentralSpectrum>),
    Mix(Vec<(Rational, CentralSpectrum)>),
    Power(Box<CentralSpectrum>, u32),
    Product(Vec<CentralSpectrum>),
    /// Keeps exactly the irreps of total weight one.
    Twist(Box<CentralSpectrum>),
    /// `δ⁻¹ (μ − m_G)`: the signed measure that turns a spectral gap into a
    /// peak-set witness.
    Normalize {
        delta: Rational,
        child: Box<CentralSpectrum>,
    },
}

/// A central measure on `∏ U(group[i])`, as a symbolic Fourier transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSpectrum {
    group: Vec<usize>,
    node: Node,
    tv_bound: Rational,
}

fn check_group(group: &[usize]) -> Result<()> {
    if group.is_empty() || group.contains(&0) {
        return Err(Error::OutOfRange {
            what: "group",
            detail: format!("factor sizes must be positive and non-empty: {group:?}"),
        });
    }
    Ok(())
}

fn same_group(children: &[&CentralSpectrum]) -> Result<Vec<usize>> {
    let first = children.first().ok_or(Error::EmptySearch)?.group.clone();
    for c in children {
        if c.group != first {
            return Err(Error::IncompatibleSignature(format!(
                "operands live on different groups: {:?} vs {:?}",
                first, c.group
            )));
        }
    }
    Ok(first)
}

impl CentralSpectrum {
    pub fn mu(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::OutOfRange {
                what: "(k, n)",
                detail: format!("need 1 <= k < n, got k={k}, n={n}"),
            });
        }
        Ok(CentralSpectrum {
            group: alloc::vec![n],
            node: Node::MuKN { k, n },
            tv_bound: Rational::one(),
        })
    }

    pub fn riesz(delta: Rational, n: usize) -> Result<Self> {
        check_riesz(&delta, n)?;
        Ok(CentralSpectrum {
            group: alloc::vec![n],
            node: Node::Riesz { delta, n },
            tv_bound: Rational::one(),
        })
    }

    pub fn haar(group: &[usize]) -> Result<Self> {
        check_group(group)?;
        Ok(CentralSpectrum {
            group: group.to_vec(),
            node: Node::Haar,
            tv_bound: Rational::one(),
        })
    }

    pub fn dirac(group: &[usize]) -> Result<Self> {
        check_group(group)?;
        Ok(CentralSpectrum {
            group: group.to_vec(),
            node: Node::DiracIdentity,
            tv_bound: Rational::one(),
        })
    }

    /// Rider's measure: `μ_{n/2,n}` for even `n`, the even mixture of
    /// `μ_{(n-1)/2,n}` and `μ_{(n+1)/2,n}` for odd `n`.
    pub fn nu(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange {
                what: "n",
                detail: format!("Rider's measure needs n >= 2, got {n}"),
            });
        }
        if n.is_multiple_of(2) {
            CentralSpectrum::mu(n / 2, n)
        } else if n == 3 {
            // k_- = 1, k_+ = 2
            CentralSpectrum::mix(alloc::vec![
                (rational::half(), CentralSpectrum::mu(1, 3)?),
                (rational::half(), CentralSpectrum::mu(2, 3)?),
            ])
        } else {
            CentralSpectrum::mix(alloc::vec![
                (rational::half(), CentralSpectrum::mu(n / 2, n)?),
                (rational::half(), CentralSpectrum::mu(n / 2 + 1, n)?),
            ])
        }
    }

    pub fn convolve(children: Vec<CentralSpectrum>) -> Result<Self> {
        let group = same_group(&children.iter().collect::<Vec<_>>())?;
        let tv_bound = children.iter().map(|c| c.tv_bound.clone()).product();
        Ok(CentralSpectrum {
            group,
            node: Node::Convolve(children),
            tv_bound,
        })
    }

    /// Convex combination; weights must be non-negative and sum to one.
    pub fn mix(terms: Vec<(Rational, CentralSpectrum)>) -> Result<Self> {
        let group = same_group(&terms.iter().map(|(_, c)| c).collect::<Vec<_>>())?;
        if terms.iter().any(|(w, _)| w.is_negative()) {
            return Err(Error::OutOfRange {
                what: "mix weight",
                detail: "weights must be non-negative".to_string(),
            });
        }
        let total: Rational = terms.iter().map(|(w, _)| w.clone()).sum();
        if !total.is_one() {
            return Err(Error::OutOfRange {
                what: "mix weight",
                detail: format!("weights sum to {total}, not 1"),
            });
        }
        let tv_bound = terms.iter().map(|(w, c)| w * &c.tv_bound).sum();
        Ok(CentralSpectrum {
            group,
            node: Node::Mix(terms),
            tv_bound,
        })
    }

    pub fn power(child: CentralSpectrum, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::OutOfRange {
                what: "power",
                detail: "convolution power must be at least 1".to_string(),
            });
        }
        Ok(CentralSpectrum {
            group: child.group.clone(),
            tv_bound: rational::pow(&child.tv_bound, m),
            node: Node::Power(Box::new(child), m),
        })
    }

    /// Product measure on the concatenation of the factors' groups.
    pub fn product(children: Vec<CentralSpectrum>) -> Result<Self> {
        if children.is_empty() {
            return Err(Error::EmptySearch);
        }
        let group = children.iter().flat_map(|c| c.group.iter().copied()).collect();
        let tv_bound = children.iter().map(|c| c.tv_bound.clone()).product();
        Ok(CentralSpectrum {
            group,
            node: Node::Product(children),
            tv_bound,
        })
    }

    pub fn twist(child: CentralSpectrum) -> Self {
        CentralSpectrum {
            group: child.group.clone(),
            tv_bound: child.tv_bound.clone(),
            node: Node::Twist(Box::new(child)),
        }
    }

    pub fn normalize(delta: Rational, child: CentralSpectrum) -> Result<Self> {
        if !delta.is_positive() {
            return Err(Error::OutOfRange {
                what: "delta",
                detail: format!("normalization needs delta > 0, got {delta}"),
            });
        }
        let tv_bound = (&child.tv_bound + Rational::one()) / &delta;
        Ok(CentralSpectrum {
            group: child.group.clone(),
            node: Node::Normalize {
                delta,
                child: Box::new(child),
            },
            tv_bound,
        })
    }

    pub fn group(&self) -> &[usize] {
        &self.group
    }

    pub fn node(&self) -> &Node {
        &self.node
    }

    /// Upper bound on the total variation norm of the represented measure.
    pub fn tv_bound(&self) -> &Rational {
        &self.tv_bound
    }

    pub fn eval(&self, pi: &ProductSignature) -> Result<Rational> {
        self.eval_cached(pi, &mut AtomCache::default())
    }

    pub fn eval_cached(&self, pi: &ProductSignature, cache: &mut AtomCache) -> Result<Rational> {
        let comps = pi.components();
        if comps.len() != self.group.len() {
            return Err(Error::DimensionMismatch {
                expected: self.group.len(),
                got: comps.len(),
            });
        }
        for (c, &n) in comps.iter().zip(&self.group) {
            if c.n() != n {
                return Err(Error::IncompatibleSignature(format!(
                    "{c} is a U({}) signature, factor is U({n})",
                    c.n()
                )));
            }
        }
        Ok(self.eval_unchecked(comps, cache))
    }

    /// Evaluation at a `U(n)` signature of a single-factor spectrum.
    pub fn eval_single(&self, sig: &Signature) -> Result<Rational> {
        self.eval(&ProductSignature::single(sig.clone()))
    }

    fn eval_unchecked(&self, comps: &[Signature], cache: &mut AtomCache) -> Rational {
        match &self.node {
            Node::MuKN { k, n } => cache.mu(*k, *n, &comps[0]),
            Node::Riesz { delta, n } => riesz_value(delta, *n, &comps[0]),
            Node::Haar => indicator(comps.iter().all(Signature::is_trivial)),
            Node::DiracIdentity => Rational::one(),
            Node::Convolve(children) => {
                let mut acc = Rational::one();
                for c in children {
                    if acc.is_zero() {
                        break;
                    }
                    acc *= c.eval_unchecked(comps, cache);
                }
                acc
            }
            Node::Mix(terms) => terms
                .iter()
                .map(|(w, c)| w * c.eval_unchecked(comps, cache))
                .sum(),
            Node::Power(child, m) => rational::pow(&child.eval_unchecked(comps, cache), *m),
            Node::Product(children) => {
                let mut acc = Rational::one();
                let mut offset = 0;
                for c in children {
                    let width = c.group.len();
                    if !acc.is_zero() {
                        acc *= c.eval_unchecked(&comps[offset..offset + width], cache);
                    }
                    offset += width;
                }
                acc
            }
            Node::Twist(child) => {
                let weight: i64 = comps.iter().map(Signature::total_weight).sum();
                if weight == 1 {
                    child.eval_unchecked(comps, cache)
                } else {
                    Rational::zero()
                }
            }
            Node::Normalize { delta, child } => {
                let trivial = indicator(comps.iter().all(Signature::is_trivial));
                (child.eval_unchecked(comps, cache) - trivial) / delta
            }
        }
    }
}

fn indicator(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Memo of `μ_{k,n}` coefficients, keyed by `(k, signature)`.
#[derive(Default, Debug, Clone)]
pub struct AtomCache {
    mu: BTreeMap<(usize, Signature), Rational>,
}

impl AtomCache {
    fn mu(&mut self, k: usize, n: usize, sig: &Signature) -> Rational {
        if mu_vanishes(k, n, sig.lambda(), sig.d()) {
            return Rational::zero();
        }
        let key = (k, sig.clone());
        if let Some(v) = self.mu.get(&key) {
            return v.clone();
        }
        let v = mu_value(k, n, sig.lambda(), sig.d());
        self.mu.insert(key, v.clone());
        v
    }
}

fn check_riesz(delta: &Rational, n: usize) -> Result<()> {
    if n == 0 || !delta.is_positive() || delta * Rational::from_integer((2 * n).into()) > Rational::one()
    {
        return Err(Error::OutOfRange {
            what: "riesz delta",
            detail: format!("need 0 < delta <= 1/(2n) with n={n}, got {delta}"),
        });
    }
    Ok(())
}

fn riesz_value(delta: &Rational, n: usize, sig: &Signature) -> Rational {
    if sig.is_trivial() {
        Rational::one()
    } else if *sig == Signature::defining(n) || *sig == Signature::defining_conjugate(n) {
        delta / Rational::from_integer(n.into())
    } else {
        Rational::zero()
    }
}

/// Cheap vanishing test: `d < 0`, `λ_k < d`, or `d < λ_{n-k+1}`.
pub fn mu_vanishes(k: usize, n: usize, lambda: &Partition, d: i64) -> bool {
    d < 0 || i64::from(lambda.row(k)) < d || d < i64::from(lambda.row(n - k + 1))
}

fn mu_value(k: usize, n: usize, lambda: &Partition, d: i64) -> Rational {
    if mu_vanishes(k, n, lambda, d) {
        return Rational::zero();
    }
    let inner = Partition::rectangle(d as u32, k);
    let shape = SkewShape::new(lambda.clone(), inner).expect("[d]^k ⊆ λ when λ_k >= d");
    let num = skew_count(&shape, n - k);
    if num.is_zero() {
        return Rational::zero();
    }
    rational::from_big(&num) / rational::from_big(&dim_schur(lambda, n))
}

/// Fourier coefficient of `μ_{k,n}` at the signature `(λ, d)`:
/// `s_{λ/[d]^k}(1^{n-k}) / s_λ(1^n)`, or zero when `[d]^k ⊄ λ` or `d < 0`.
pub fn mu_kn_eval(k: usize, n: usize, lambda: &Partition, d: i64) -> Result<Rational> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange {
            what: "(k, n)",
            detail: format!("need 1 <= k < n, got k={k}, n={n}"),
        });
    }
    if lambda.len() >= n {
        return Err(Error::IncompatibleSignature(format!(
            "lambda={lambda} has too many parts for U({n})"
        )));
    }
    Ok(mu_value(k, n, lambda, d))
}

/// Fourier coefficient of the Riesz-type factor `1 + δ(tr σ + conj tr σ)`.
pub fn riesz_eval(delta: &Rational, n: usize, lambda: &Partition, d: i64) -> Result<Rational> {
    check_riesz(delta, n)?;
    let sig = Signature::from_canonical(n, lambda.clone(), d)?;
    Ok(riesz_value(delta, n, &sig))
}

/// Twisted spectrum: same values on total-weight-one irreps, zero elsewhere.
pub fn central_twist(spec: CentralSpectrum) -> CentralSpectrum {
    CentralSpectrum::twist(spec)
}

impl fmt::Display for CentralSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, items: &[CentralSpectrum]) -> fmt::Result {
            for (i, c) in items.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{c}")?;
            }
            Ok(())
        }
        fn dims(f: &mut fmt::Formatter<'_>, group: &[usize]) -> fmt::Result {
            for (i, n) in group.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{n}")?;
            }
            Ok(())
        }
        match &self.node {
            Node::MuKN { k, n } => write!(f, "mu({k},{n})"),
            Node::Riesz { delta, n } => write!(f, "riesz({},{n})", rational::to_pq(delta)),
            Node::Haar => {
                f.write_str("haar(")?;
                dims(f, &self.group)?;
                f.write_str(")")
            }
            Node::DiracIdentity => {
                f.write_str("dirac(")?;
                dims(f, &self.group)?;
                f.write_str(")")
            }
            Node::Convolve(c) => {
                f.write_str("conv(")?;
                list(f, c)?;
                f.write_str(")")
            }
            Node::Mix(terms) => {
                f.write_str("mix(")?;
                for (i, (w, c)) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{}: {c}", rational::to_pq(w))?;
                }
                f.write_str(")")
            }
            Node::Power(c, m) => write!(f, "pow({c}, {m})"),
            Node::Product(c) => {
                f.write_str("prod(")?;
                list(f, c)?;
                f.write_str(")")
            }
            Node::Twist(c) => write!(f, "twist({c})"),
            Node::Normalize { delta, child } => {
                write!(f, "normalize({}, {child})", rational::to_pq(delta))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn sig(n: usize, parts: &[u32], d: i64) -> ProductSignature {
        ProductSignature::single(Signature::from_canonical(n, p(parts), d).unwrap())
    }

    #[test]
    fn mu_examples() {
        for n in 2..12 {
            for k in 1..n {
                let v = mu_kn_eval(k, n, &p(&[1]), 0).unwrap();
                assert_eq!(v, ratio((n - k) as i64, n as i64));
                assert_eq!(mu_kn_eval(k, n, &Partition::empty(), 0).unwrap(), ratio(1, 1));
            }
        }
        assert_eq!(mu_kn_eval(2, 4, &p(&[2]), 0).unwrap(), ratio(3, 10));
        assert_eq!(mu_kn_eval(2, 4, &p(&[1, 1, 1]), 1).unwrap(), ratio(1, 2));
        assert_eq!(mu_kn_eval(2, 4, &p(&[1]), -1).unwrap(), ratio(0, 1));
        assert!(mu_kn_eval(4, 4, &p(&[1]), 0).is_err());
        assert!(mu_kn_eval(0, 4, &p(&[1]), 0).is_err());
    }

    #[test]
    fn riesz_examples() {
        let delta = ratio(1, 8);
        assert_eq!(riesz_eval(&delta, 4, &p(&[1]), 0).unwrap(), ratio(1, 32));
        assert_eq!(riesz_eval(&delta, 4, &p(&[1, 1, 1]), 1).unwrap(), ratio(1, 32));
        assert_eq!(riesz_eval(&delta, 4, &Partition::empty(), 0).unwrap(), ratio(1, 1));
        assert_eq!(riesz_eval(&delta, 4, &p(&[2]), 0).unwrap(), ratio(0, 1));
        assert!(riesz_eval(&ratio(1, 7), 4, &p(&[1]), 0).is_err());
        assert!(riesz_eval(&ratio(0, 1), 4, &p(&[1]), 0).is_err());
    }

    #[test]
    fn eval_examples() {
        let mix = CentralSpectrum::mix(alloc::vec![
            (ratio(1, 2), CentralSpectrum::mu(2, 5).unwrap()),
            (ratio(1, 2), CentralSpectrum::mu(3, 5).unwrap()),
        ])
        .unwrap();
        assert_eq!(mix.eval(&sig(5, &[1], 0)).unwrap(), ratio(1, 2));

        let mu = CentralSpectrum::mu(2, 4).unwrap();
        let pw = CentralSpectrum::power(mu.clone(), 1).unwrap();
        let s = sig(4, &[2], 0);
        assert_eq!(pw.eval(&s).unwrap(), mu.eval(&s).unwrap());

        let prod = CentralSpectrum::product(alloc::vec![
            CentralSpectrum::nu(5).unwrap(),
            mu.clone()
        ])
        .unwrap();
        let pi = ProductSignature::new(alloc::vec![
            Signature::trivial(5),
            Signature::from_canonical(4, p(&[2]), 0).unwrap()
        ]);
        assert_eq!(prod.eval(&pi).unwrap(), ratio(3, 10));

        // two nontrivial gap-set components multiply: δ·δ
        let pi = ProductSignature::new(alloc::vec![Signature::defining(5), Signature::defining(4)]);
        assert_eq!(prod.eval(&pi).unwrap(), ratio(1, 4));
    }

    #[test]
    fn incompatible_signature_rejected() {
        let mu = CentralSpectrum::mu(2, 4).unwrap();
        assert!(mu.eval(&sig(5, &[1], 0)).is_err());
        assert!(mu.eval(&ProductSignature::trivial(&[4, 4])).is_err());
        let a = CentralSpectrum::mu(2, 4).unwrap();
        let b = CentralSpectrum::mu(2, 5).unwrap();
        assert!(CentralSpectrum::convolve(alloc::vec![a, b]).is_err());
    }

    #[test]
    fn twist_examples() {
        let group = [4usize, 5];
        let base = CentralSpectrum::product(alloc::vec![
            CentralSpectrum::nu(4).unwrap(),
            CentralSpectrum::nu(5).unwrap()
        ])
        .unwrap();
        let tw = central_twist(base.clone());
        let s = ProductSignature::defining_at(&group, 0);
        assert_eq!(tw.eval(&s).unwrap(), base.eval(&s).unwrap());
        let sb = ProductSignature::defining_conjugate_at(&group, 0);
        assert_eq!(tw.eval(&sb).unwrap(), ratio(0, 1));
        assert_eq!(tw.eval(&ProductSignature::trivial(&group)).unwrap(), ratio(0, 1));
        assert_eq!(tw.tv_bound(), base.tv_bound());
    }

    #[test]
    fn tv_bounds_propagate() {
        let mu = CentralSpectrum::mu(2, 4).unwrap();
        let norm = CentralSpectrum::normalize(ratio(1, 2), mu.clone()).unwrap();
        assert_eq!(norm.tv_bound(), &ratio(4, 1));
        let pw = CentralSpectrum::power(norm, 3).unwrap();
        assert_eq!(pw.tv_bound(), &ratio(64, 1));
        assert!(CentralSpectrum::mix(alloc::vec![(ratio(1, 3), mu.clone())]).is_err());
        assert!(CentralSpectrum::mix(alloc::vec![(ratio(3, 2), mu.clone()), (ratio(-1, 2), mu)]).is_err());
    }

    #[test]
    fn display_grammar() {
        let s = CentralSpectrum::twist(
            CentralSpectrum::power(
                CentralSpectrum::product(alloc::vec![
                    CentralSpectrum::riesz(ratio(1, 6), 3).unwrap(),
                    CentralSpectrum::mu(4, 8).unwrap()
                ])
                .unwrap(),
                3,
            )
            .unwrap(),
        );
        assert_eq!(alloc::format!("{s}"), "twist(pow(prod(riesz(1/6,3), mu(4,8)), 3))");
        assert_eq!(
            alloc::format!("{}", CentralSpectrum::nu(5).unwrap()),
            "mix(1/2: mu(2,5), 1/2: mu(3,5))"
        );
    }
}
