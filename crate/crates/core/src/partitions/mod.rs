//! Partitions, 2-partitions, interlacing and plane partitions.

mod enumerate;
mod plane;

pub use enumerate::{
    boxed_plane_partitions, interlacing_chains, partitions_in_box, partitions_of, plane_partitions_up_to_weight,
    two_partitions_up_to_weight, BoxedPlanePartitions,
};
pub use plane::{BoxDims, DiagonalSlices, PlanePartition, UcPlanePartition};

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Trailing zeros are trimmed; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part before a positive part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part counting from zero; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.part(0)
    }

    /// Multiplicity of `i` (for `i >= 1`).
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// `m[k]` is the multiplicity of `k + 1`, up to the largest part.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = alloc::vec![0; self.largest() as usize];
        for &p in &self.parts {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// Inverse of [`Partition::multiplicities`]: `mults[k]` copies of `k + 1`.
    pub fn from_multiplicities(mults: &[u32]) -> Self {
        let mut parts = Vec::new();
        for (k, &m) in mults.iter().enumerate().rev() {
            parts.extend(core::iter::repeat_n(k as u32 + 1, m as usize));
        }
        Partition { parts }
    }

    /// Young diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Fits the `rows × cols` rectangle `[rows, cols]`.
    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.largest() <= cols
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Every `ν` with `ν ≺ self`.
    pub fn interlacing_predecessors(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        predecessors_rec(&self.parts, 0, &mut cur, &mut out);
        out
    }

    /// Every `μ ≻ self` with `|μ| - |self| <= max_added` and `μ₁ <= max_part`
    /// (when given).
    pub fn interlacing_successors(&self, max_added: u32, max_part: Option<u32>) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        successors_rec(&self.parts, 0, max_added, max_part, &mut cur, &mut out);
        out
    }
}

fn predecessors_rec(mu: &[u32], i: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if i == mu.len() {
        let mut parts = cur.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.push(Partition { parts });
        return;
    }
    let hi = mu[i];
    let lo = mu.get(i + 1).copied().unwrap_or(0);
    for v in lo..=hi {
        cur.push(v);
        predecessors_rec(mu, i + 1, cur, out);
        cur.pop();
    }
}

fn successors_rec(
    nu: &[u32],
    i: usize,
    budget: u32,
    max_part: Option<u32>,
    cur: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    // μ has at most l(ν)+1 parts: μ_i ∈ [ν_i, ν_{i-1}], μ_1 ∈ [ν_1, ∞).
    if i > nu.len() {
        let mut parts = cur.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.push(Partition { parts });
        return;
    }
    let lo = nu.get(i).copied().unwrap_or(0);
    let hi = if i == 0 {
        let h = lo + budget;
        max_part.map_or(h, |m| h.min(m))
    } else {
        nu[i - 1].min(lo + budget)
    };
    if lo > hi {
        return;
    }
    for v in lo..=hi {
        cur.push(v);
        successors_rec(nu, i + 1, budget - (v - lo), max_part, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for tests and examples; panics on invalid input.
#[macro_export]
macro_rules! partition {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new([$($p),+].to_vec()).expect("valid partition")
    };
}

/// `ν ≺ μ`: `μ₁ ≥ ν₁ ≥ μ₂ ≥ ν₂ ≥ …`, missing parts read as zero.
pub fn interlaces(mu: &Partition, nu: &Partition) -> bool {
    let n = mu.len().max(nu.len());
    (0..n).all(|i| mu.part(i) >= nu.part(i) && nu.part(i) >= mu.part(i + 1))
}

/// An ordered pair of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct TwoPartition {
    pub first: Partition,
    pub second: Partition,
}

impl TwoPartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        TwoPartition { first, second }
    }

    pub fn empty() -> Self {
        TwoPartition::default()
    }

    pub fn weight(&self) -> u32 {
        self.first.weight() + self.second.weight()
    }
}

impl fmt::Display for TwoPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// Componentwise interlacing `χ̄ ≺ χ`.
pub fn interlaces_2(chi: &TwoPartition, chibar: &TwoPartition) -> bool {
    interlaces(&chi.first, &chibar.first) && interlaces(&chi.second, &chibar.second)
}
