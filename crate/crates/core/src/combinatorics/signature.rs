use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use super::partition::{partitions_of, Partition};
use crate::error::{Error, Result};

/// Highest weight of an irreducible representation of `U(n)`.
///
/// Stored in the canonical `(λ, d)` form: `d = -m_n` and `λ_j = m_j + d`, so
/// `λ` has at most `n - 1` nonzero parts and `m_j = λ_j - d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    n: usize,
    lambda: Partition,
    d: i64,
}

impl Signature {
    pub fn from_canonical(n: usize, lambda: Partition, d: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "group size",
                detail: "n must be at least 1".to_string(),
            });
        }
        if lambda.len() >= n {
            return Err(Error::IncompatibleSignature(format!(
                "lambda={lambda} has {} nonzero parts, U({n}) allows at most {}",
                lambda.len(),
                n - 1
            )));
        }
        Ok(Signature { n, lambda, d })
    }

    /// From the highest-weight tuple `m_1 ≥ … ≥ m_n`.
    pub fn from_weights(m: &[i64]) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::OutOfRange {
                what: "group size",
                detail: "empty weight tuple".to_string(),
            });
        }
        if m.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonMonotone(format!("{m:?}")));
        }
        let d = -m[m.len() - 1];
        let parts: Vec<u32> = m
            .iter()
            .map(|&x| u32::try_from(x + d))
            .collect::<core::result::Result<_, _>>()
            .map_err(|_| Error::OutOfRange {
                what: "weight",
                detail: format!("{m:?}"),
            })?;
        Ok(Signature {
            n: m.len(),
            lambda: Partition::new(&parts)?,
            d,
        })
    }

    pub fn trivial(n: usize) -> Self {
        Signature {
            n,
            lambda: Partition::empty(),
            d: 0,
        }
    }

    /// The defining representation `σ_n`.
    pub fn defining(n: usize) -> Self {
        if n == 1 {
            return Signature::from_weights(&[1]).expect("valid");
        }
        Signature {
            n,
            lambda: Partition::new(&[1]).expect("valid"),
            d: 0,
        }
    }

    /// The conjugate of the defining representation, `σ̄_n`.
    pub fn defining_conjugate(n: usize) -> Self {
        Signature::defining(n).conjugate()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn weights(&self) -> Vec<i64> {
        (0..self.n)
            .map(|i| i64::from(self.lambda.part(i)) - self.d)
            .collect()
    }

    /// `Σ m_i = |λ| - n·d`; the character of the central circle `z ↦ zI`.
    pub fn total_weight(&self) -> i64 {
        self.lambda.weight() as i64 - self.n as i64 * self.d
    }

    pub fn is_trivial(&self) -> bool {
        self.lambda.is_empty() && self.d == 0
    }

    /// Contragredient: `m̄_j = -m_{n+1-j}`.
    pub fn conjugate(&self) -> Self {
        let lead = self.lambda.first();
        let parts: Vec<u32> = (0..self.n)
            .map(|i| lead - self.lambda.part(self.n - 1 - i))
            .collect();
        Signature {
            n: self.n,
            lambda: Partition::new(&parts).expect("weakly decreasing"),
            d: i64::from(lead) - self.d,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda={};d={}", self.lambda, self.d)
    }
}

pub fn canonicalize_signature(sig: &Signature) -> (Partition, i64) {
    (sig.lambda.clone(), sig.d)
}

pub fn conjugate_signature(sig: &Signature) -> Signature {
    sig.conjugate()
}

/// Every `(λ, d)` with `ℓ(λ) ≤ n - 1`, `|λ| ≤ weight_cap` and
/// `0 ≤ d ≤ d_cap`, ordered by weight, then lexicographically by parts, then
/// by `d`.
pub fn enumerate_signatures(
    n: usize,
    weight_cap: u32,
    d_cap: u32,
) -> impl Iterator<Item = (Partition, i64)> {
    let max_len = n.saturating_sub(1);
    (0..=weight_cap).flat_map(move |w| {
        partitions_of(w, max_len)
            .into_iter()
            .flat_map(move |lambda| (0..=i64::from(d_cap)).map(move |d| (lambda.clone(), d)))
    })
}

/// Same domain as [`enumerate_signatures`], restricted to one weight class.
pub fn signatures_of_weight(n: usize, weight: u32, d_cap: u32) -> Vec<Signature> {
    partitions_of(weight, n.saturating_sub(1))
        .into_iter()
        .flat_map(|lambda| {
            (0..=i64::from(d_cap)).map(move |d| Signature {
                n,
                lambda: lambda.clone(),
                d,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn canonical_forms_of_distinguished_irreps() {
        let s = Signature::from_weights(&[1, 0, 0, 0]).unwrap();
        assert_eq!(canonicalize_signature(&s), (p(&[1]), 0));
        let s = Signature::from_weights(&[0, 0, 0, -1]).unwrap();
        assert_eq!(canonicalize_signature(&s), (p(&[1, 1, 1]), 1));
        let s = Signature::from_weights(&[0, 0, 0]).unwrap();
        assert_eq!(canonicalize_signature(&s), (Partition::empty(), 0));
    }

    #[test]
    fn round_trip_weights() {
        let m = [3, 1, 1, -2];
        let s = Signature::from_weights(&m).unwrap();
        assert_eq!(s.weights(), m.to_vec());
        assert_eq!(s.total_weight(), 3);
    }

    #[test]
    fn non_monotone_rejected() {
        assert!(matches!(
            Signature::from_weights(&[0, 1]),
            Err(Error::NonMonotone(_))
        ));
    }

    #[test]
    fn conjugation() {
        assert_eq!(Signature::defining(4).conjugate(), Signature::defining_conjugate(4));
        assert_eq!(
            Signature::defining_conjugate(4),
            Signature::from_canonical(4, p(&[1, 1, 1]), 1).unwrap()
        );
        assert_eq!(Signature::trivial(5).conjugate(), Signature::trivial(5));
        let s = Signature::from_canonical(3, p(&[2, 1]), 0).unwrap();
        assert_eq!(s.conjugate().conjugate(), s);
        assert_eq!(Signature::defining(1).conjugate().weights(), alloc::vec![-1]);
    }

    #[test]
    fn enumeration_examples() {
        let all: Vec<_> = enumerate_signatures(2, 2, 2).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], (Partition::empty(), 0));
        assert_eq!(all[8], (p(&[2]), 2));
        assert_eq!(enumerate_signatures(1, 5, 0).count(), 1);
        let n3: Vec<_> = enumerate_signatures(3, 0, 3).collect();
        assert_eq!(n3.len(), 4);
        assert!(n3.iter().all(|(l, _)| l.is_empty()));
    }

    #[test]
    fn lambda_must_fit_group() {
        assert!(Signature::from_canonical(3, p(&[1, 1, 1]), 0).is_err());
    }
}
