use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts (a Young diagram).
///
/// Trailing zeros are stripped on construction, so the empty partition is the
/// only partition of weight zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(parts: &[u32]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(join(parts)));
        }
        let end = parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        Ok(Partition(parts[..end].to_vec()))
    }

    /// `(d, d, ..., d)` with `len` copies, written `[d]^len`.
    pub fn rectangle(d: u32, len: usize) -> Self {
        if d == 0 {
            Partition::empty()
        } else {
            Partition(alloc::vec![d; len])
        }
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Zero-based part access; parts past the end read as zero.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// One-based part access matching the usual `λ_i` indexing.
    pub fn row(&self, i: usize) -> u32 {
        debug_assert!(i >= 1);
        self.part(i - 1)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let parts = (0..cols)
            .map(|c| self.0.iter().take_while(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Every partition contained in `self`, including `self` and the empty one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(self.len());
        fn rec(outer: &[u32], i: usize, cap: u32, buf: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(buf).expect("weakly decreasing by construction"));
                return;
            }
            for v in 0..=outer[i].min(cap) {
                buf.push(v);
                rec(outer, i + 1, v, buf, out);
                buf.pop();
            }
        }
        rec(&self.0, 0, u32::MAX, &mut buf, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&join(&self.0))
    }
}

impl core::str::FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `2,1,0`. An empty string or `0` is the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        Partition::new(&parts)
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// All partitions of `weight` with at most `max_len` parts, in increasing
/// lexicographic order of their part sequences.
pub fn partitions_of(weight: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut buf = Vec::new();
    fn rec(rem: u32, cap: u32, max_len: usize, buf: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(buf.clone()));
            return;
        }
        if buf.len() == max_len {
            return;
        }
        for p in 1..=rem.min(cap) {
            buf.push(p);
            rec(rem - p, p, max_len, buf, out);
            buf.pop();
        }
    }
    rec(weight, weight, max_len, &mut buf, &mut out);
    out
}

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cells(&self) -> usize {
        (self.outer.weight() - self.inner.weight()) as usize
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}
