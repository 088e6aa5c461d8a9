use alloc::vec::Vec;
use core::fmt;

use super::{interlaces, Partition, TwoPartition};
use crate::error::{Error, Result};

/// The lattice box `B(N, L, M)`: at most `n` rows, `l` columns, entries `<= m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoxDims {
    pub n: usize,
    pub l: usize,
    pub m: u32,
}

impl BoxDims {
    pub fn new(n: usize, l: usize, m: u32) -> Self {
        BoxDims { n, l, m }
    }

    pub fn cells(&self) -> usize {
        self.n * self.l * self.m as usize
    }
}

/// Rows weakly decrease left to right and columns top to bottom. Stored
/// trimmed: no trailing zeros in a row, no empty rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlanePartition {
    rows: Vec<Vec<u32>>,
}

impl PlanePartition {
    pub fn new(mut rows: Vec<Vec<u32>>) -> Result<Self> {
        for row in rows.iter_mut() {
            while row.last() == Some(&0) {
                row.pop();
            }
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        for row in &rows {
            if row.contains(&0) || row.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidPlanePartition("rows must weakly decrease"));
            }
        }
        for pair in rows.windows(2) {
            let (upper, lower) = (&pair[0], &pair[1]);
            if lower.len() > upper.len() || lower.iter().zip(upper).any(|(a, b)| a > b) {
                return Err(Error::InvalidPlanePartition("columns must weakly decrease"));
            }
        }
        Ok(PlanePartition { rows })
    }

    pub fn empty() -> Self {
        PlanePartition::default()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at zero-based `(row, col)`; zero outside the support.
    pub fn entry(&self, row: usize, col: usize) -> u32 {
        self.rows.get(row).and_then(|r| r.get(col)).copied().unwrap_or(0)
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn max_entry(&self) -> u32 {
        self.entry(0, 0)
    }

    pub fn weight(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn fits(&self, b: &BoxDims) -> bool {
        self.n_rows() <= b.n && self.n_cols() <= b.l && self.max_entry() <= b.m
    }

    /// Diagonal slices `π_i` for `i` from `-rows` to `cols`; both end slices
    /// are empty.
    pub fn slices(&self) -> DiagonalSlices {
        let (r, c) = (self.n_rows() as i32, self.n_cols() as i32);
        let slices = (-r..=c).map(|i| self.slice(i)).collect();
        DiagonalSlices { first: -r, slices }
    }

    /// `π_i = (π_{1,1+i}, π_{2,2+i}, …)` for `i >= 0` and
    /// `(π_{1-i,1}, π_{2-i,2}, …)` for `i < 0` (one-based indices).
    pub fn slice(&self, i: i32) -> Partition {
        let (dr, dc) = if i >= 0 { (0, i as usize) } else { ((-i) as usize, 0) };
        let parts = (0..)
            .map(|k| self.entry(k + dr, k + dc))
            .take_while(|&v| v > 0)
            .collect();
        Partition::from_sorted(parts)
    }

    /// Reassembles a plane partition from its slices; the slices must form
    /// the interlacing chain of a plane partition.
    pub fn from_slices(slices: &DiagonalSlices) -> Result<Self> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (offset, s) in slices.slices.iter().enumerate() {
            let i = slices.first + offset as i32;
            for (k, &v) in s.parts().iter().enumerate() {
                let (r, c) = if i >= 0 { (k, k + i as usize) } else { (k + (-i) as usize, k) };
                if rows.len() <= r {
                    rows.resize(r + 1, Vec::new());
                }
                if rows[r].len() <= c {
                    rows[r].resize(c + 1, 0);
                }
                rows[r][c] = v;
            }
        }
        let pp = PlanePartition::new(rows)?;
        if !slices.is_chain() || pp.slices().trimmed() != slices.trimmed() {
            return Err(Error::InvalidPlanePartition("slices do not form an interlacing chain"));
        }
        Ok(pp)
    }
}

impl fmt::Debug for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Consecutive diagonal slices `π_first, π_{first+1}, …`. Slices outside the
/// stored range are empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSlices {
    pub first: i32,
    pub slices: Vec<Partition>,
}

impl DiagonalSlices {
    pub fn get(&self, i: i32) -> Partition {
        let k = i - self.first;
        if k < 0 {
            return Partition::empty();
        }
        self.slices.get(k as usize).cloned().unwrap_or_default()
    }

    pub fn last(&self) -> i32 {
        self.first + self.slices.len() as i32 - 1
    }

    pub fn weight(&self) -> u32 {
        self.slices.iter().map(Partition::weight).sum()
    }

    /// `∅ ≺ … ≺ π_{-1} ≺ π_0 ≻ π_1 ≻ … ≻ ∅`
    pub fn is_chain(&self) -> bool {
        let (lo, hi) = (self.first.min(0) - 1, self.last().max(0) + 1);
        (lo..hi).all(|i| {
            let (a, b) = (self.get(i), self.get(i + 1));
            if i < 0 {
                interlaces(&b, &a)
            } else {
                interlaces(&a, &b)
            }
        })
    }

    /// Drops empty slices at both ends, always keeping index 0.
    fn trimmed(&self) -> (i32, Vec<Partition>) {
        let lo = (self.first..0).find(|&i| !self.get(i).is_empty()).unwrap_or(0);
        let hi = (1..=self.last().max(0)).rev().find(|&i| !self.get(i).is_empty()).unwrap_or(0);
        (lo, (lo..=hi).map(|i| self.get(i)).collect())
    }
}

/// A pair of plane partitions, read as a chain of 2-partition slices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct UcPlanePartition {
    pub first: PlanePartition,
    pub second: PlanePartition,
}

impl UcPlanePartition {
    pub fn new(first: PlanePartition, second: PlanePartition) -> Self {
        UcPlanePartition { first, second }
    }

    pub fn weights(&self) -> (u32, u32) {
        (self.first.weight(), self.second.weight())
    }

    /// `χ_i = (π¹_i, π²_i)` for `i` in the returned range start onward.
    pub fn two_slices(&self) -> (i32, Vec<TwoPartition>) {
        let (a, b) = (self.first.slices(), self.second.slices());
        let lo = a.first.min(b.first);
        let hi = a.last().max(b.last());
        (lo, (lo..=hi).map(|i| TwoPartition::new(a.get(i), b.get(i))).collect())
    }

    pub fn fits(&self, b1: &BoxDims, b2: &BoxDims) -> bool {
        self.first.fits(b1) && self.second.fits(b2)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{boxed_plane_partitions, interlaces_2};
    use super::*;
    use crate::partition;

    fn pp(rows: &[&[u32]]) -> PlanePartition {
        PlanePartition::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(PlanePartition::new(alloc::vec![alloc::vec![1, 2]]).is_err());
        assert!(PlanePartition::new(alloc::vec![alloc::vec![1], alloc::vec![2]]).is_err());
        assert!(PlanePartition::new(alloc::vec![alloc::vec![1], alloc::vec![1, 1]]).is_err());
        let p = PlanePartition::new(alloc::vec![alloc::vec![2, 1, 0], alloc::vec![0]]).unwrap();
        assert_eq!(p.rows(), &[alloc::vec![2, 1]]);
        assert_eq!(p.weight(), 3);
    }

    #[test]
    fn slice_examples() {
        let p = pp(&[&[2, 1], &[1]]);
        let s = p.slices();
        assert_eq!(s.get(-1), partition![1]);
        assert_eq!(s.get(0), partition![2]);
        assert_eq!(s.get(1), partition![1]);
        assert_eq!(s.get(-2), partition![]);
        assert_eq!(s.get(2), partition![]);
        assert_eq!(s.weight(), p.weight());

        let one = pp(&[&[1]]).slices();
        assert_eq!(one.get(0), partition![1]);
        assert_eq!(one.slices.len(), 3);

        let e = PlanePartition::empty().slices();
        assert!(e.slices.iter().all(Partition::is_empty));

        let p = pp(&[&[3, 2, 1], &[2, 2], &[1]]);
        let s = p.slices();
        assert_eq!(s.get(0), partition![3, 2]);
        assert_eq!(s.get(-2), partition![1]);
        assert!(s.is_chain());
    }

    #[test]
    fn slices_reassemble_in_three_cube() {
        let mut count = 0;
        for p in boxed_plane_partitions(BoxDims::new(3, 3, 3)) {
            let s = p.slices();
            assert!(s.is_chain());
            assert_eq!(PlanePartition::from_slices(&s).unwrap(), p);
            count += 1;
        }
        assert_eq!(count, 980);
    }

    #[test]
    fn broken_chain_rejected() {
        let s = DiagonalSlices {
            first: 0,
            slices: alloc::vec![partition![1], partition![2]],
        };
        assert!(!s.is_chain());
        assert!(PlanePartition::from_slices(&s).is_err());
    }

    #[test]
    fn uc_slices_interlace_componentwise() {
        let uc = UcPlanePartition::new(pp(&[&[2, 1], &[1]]), pp(&[&[1, 1]]));
        let (lo, chis) = uc.two_slices();
        assert_eq!(lo, -2);
        for i in 0..chis.len() - 1 {
            let idx = lo + i as i32;
            let (a, b) = (&chis[i], &chis[i + 1]);
            if idx < 0 {
                assert!(interlaces_2(b, a));
            } else {
                assert!(interlaces_2(a, b));
            }
        }
        assert_eq!(uc.weights(), (4, 2));
    }
}
