//! Finite signature domains for exhaustive cross-checks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::combinatorics::{enumerate_signatures, Signature};
use crate::spectra::ProductSignature;

/// Nontrivial signatures per factor of `∏ U(group[i])`, truncated by caps.
#[derive(Clone, Debug)]
pub struct ProductDomain {
    group: Vec<usize>,
    factors: Vec<Vec<Signature>>,
}

/// A slice of a [`ProductDomain`]: the factors allowed to be nontrivial, with
/// the first of them pinned to one signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chunk {
    support: Vec<usize>,
    first: usize,
}

fn order_key(s: &Signature) -> (u64, &[u32], i64) {
    (s.lambda().weight(), s.lambda().parts(), s.d())
}

impl ProductDomain {
    /// Signatures with `|λ| ≤ weight_cap` and `0 ≤ d ≤ d_cap` on each factor,
    /// ordered by `(|λ|, λ, d)`. With `closed`, conjugates are added too, so
    /// that e.g. `σ_1 = (∅, -1)` is reached.
    pub fn new(group: &[usize], weight_cap: u32, d_cap: u32, closed: bool) -> Self {
        let factors = group
            .iter()
            .map(|&n| {
                let mut set: BTreeSet<Signature> = BTreeSet::new();
                for (lambda, d) in enumerate_signatures(n, weight_cap, d_cap) {
                    let s = Signature::from_canonical(n, lambda, d).expect("enumerated");
                    if s.is_trivial() {
                        continue;
                    }
                    if closed {
                        set.insert(s.conjugate());
                    }
                    set.insert(s);
                }
                let mut v: Vec<Signature> = set.into_iter().collect();
                v.sort_by(|a, b| order_key(a).cmp(&order_key(b)));
                v
            })
            .collect();
        ProductDomain {
            group: group.to_vec(),
            factors,
        }
    }

    pub fn group(&self) -> &[usize] {
        &self.group
    }

    pub fn factor(&self, i: usize) -> &[Signature] {
        &self.factors[i]
    }

    /// Chunks covering every element with between one and `max_nontrivial`
    /// nontrivial components, in a fixed order.
    pub fn chunks(&self, max_nontrivial: usize) -> Vec<Chunk> {
        let mut supports: Vec<Vec<usize>> = Vec::new();
        let width = self.group.len();
        for size in 1..=max_nontrivial.min(width) {
            subsets(width, size, &mut Vec::new(), 0, &mut supports);
        }
        let mut out = Vec::new();
        for support in supports {
            for first in 0..self.factors[support[0]].len() {
                out.push(Chunk {
                    support: support.clone(),
                    first,
                });
            }
        }
        out
    }

    /// Elements of one chunk, in odometer order over the later factors.
    pub fn members(&self, chunk: &Chunk) -> Vec<ProductSignature> {
        let rest = &chunk.support[1..];
        if rest.iter().any(|&i| self.factors[i].is_empty()) {
            return Vec::new();
        }
        let mut base: Vec<Signature> = self.group.iter().map(|&n| Signature::trivial(n)).collect();
        base[chunk.support[0]] = self.factors[chunk.support[0]][chunk.first].clone();
        let mut idx = alloc::vec![0usize; rest.len()];
        let mut out = Vec::new();
        loop {
            let mut comps = base.clone();
            for (slot, &f) in rest.iter().enumerate() {
                comps[f] = self.factors[f][idx[slot]].clone();
            }
            out.push(ProductSignature::new(comps));
            let mut pos = rest.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < self.factors[rest[pos]].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// Number of elements with between one and `max_nontrivial` nontrivial
    /// components.
    pub fn size(&self, max_nontrivial: usize) -> usize {
        let mut supports = Vec::new();
        let width = self.group.len();
        for size in 1..=max_nontrivial.min(width) {
            subsets(width, size, &mut Vec::new(), 0, &mut supports);
        }
        supports
            .iter()
            .map(|s| s.iter().map(|&i| self.factors[i].len()).product::<usize>())
            .sum()
    }
}

fn subsets(width: usize, size: usize, cur: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for i in from..width {
        cur.push(i);
        subsets(width, size, cur, i + 1, out);
        cur.pop();
    }
}

/// Applies `f` to every chunk, in parallel with the `parallel` feature.
/// Results come back in chunk order regardless of scheduling.
pub fn map_chunks<T, F>(domain: &ProductDomain, chunks: &[Chunk], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Vec<ProductSignature>) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        chunks.par_iter().map(|c| f(domain.members(c))).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        chunks.iter().map(|c| f(domain.members(c))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunk_cover_matches_size() {
        let dom = ProductDomain::new(&[2, 3, 1], 2, 2, true);
        for r in 1..=3 {
            let total: usize = dom.chunks(r).iter().map(|c| dom.members(c).len()).sum();
            assert_eq!(total, dom.size(r));
        }
    }

    #[test]
    fn closed_domain_reaches_u1_defining() {
        let dom = ProductDomain::new(&[1], 3, 3, true);
        assert!(dom.factor(0).contains(&Signature::defining(1)));
        let open = ProductDomain::new(&[1], 3, 3, false);
        assert!(!open.factor(0).contains(&Signature::defining(1)));
    }

    #[test]
    fn single_factor_order_is_weight_lex_d() {
        let dom = ProductDomain::new(&[4], 3, 1, false);
        let keys: Vec<_> = dom.factor(0).iter().map(order_key).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
