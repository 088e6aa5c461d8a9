use alloc::vec;
use alloc::vec::Vec;

use super::{interlaces, BoxDims, Partition, PlanePartition, TwoPartition};

/// Partitions with at most `rows` parts, each at most `cols`, in
/// lexicographic order. There are `C(rows + cols, rows)` of them.
pub fn partitions_in_box(rows: usize, cols: u32) -> vec::IntoIter<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    box_rec(rows, cols, &mut cur, &mut out);
    out.into_iter()
}

fn box_rec(rows: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition::from_sorted(cur.clone()));
    if cur.len() == rows {
        return;
    }
    for v in 1..=cap {
        cur.push(v);
        box_rec(rows, v, cur, out);
        cur.pop();
    }
}

/// All partitions of `n`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    parts_of_rec(n, n, &mut cur, &mut out);
    out
}

fn parts_of_rec(rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    for v in (1..=cap.min(rest)).rev() {
        cur.push(v);
        parts_of_rec(rest - v, v, cur, out);
        cur.pop();
    }
}

/// Lazy walk over the plane partitions in a box, odometer style over the
/// `n × l` grid in row-reading order.
#[derive(Clone, Debug)]
pub struct BoxedPlanePartitions {
    dims: BoxDims,
    max_weight: Option<u32>,
    grid: Vec<u32>,
    started: bool,
    done: bool,
}

impl BoxedPlanePartitions {
    pub fn new(dims: BoxDims) -> Self {
        BoxedPlanePartitions {
            dims,
            max_weight: None,
            grid: vec![0; dims.n * dims.l],
            started: false,
            done: false,
        }
    }

    /// Only partitions of weight at most `w`.
    pub fn with_max_weight(mut self, w: u32) -> Self {
        self.max_weight = Some(w);
        self
    }

    fn bound_at(&self, p: usize) -> u32 {
        let l = self.dims.l;
        let (r, c) = (p / l, p % l);
        let mut b = self.dims.m;
        if r > 0 {
            b = b.min(self.grid[p - l]);
        }
        if c > 0 {
            b = b.min(self.grid[p - 1]);
        }
        b
    }

    fn advance(&mut self) -> bool {
        let mut prefix: u32 = self.grid.iter().sum();
        for p in (0..self.grid.len()).rev() {
            prefix -= self.grid[p];
            let next = self.grid[p] + 1;
            let weight_ok = self.max_weight.is_none_or(|w| prefix + next <= w);
            if next <= self.bound_at(p) && weight_ok {
                self.grid[p] = next;
                for q in &mut self.grid[p + 1..] {
                    *q = 0;
                }
                return true;
            }
        }
        false
    }

    fn current(&self) -> PlanePartition {
        let rows = if self.dims.l == 0 {
            Vec::new()
        } else {
            self.grid.chunks(self.dims.l).map(<[u32]>::to_vec).collect()
        };
        PlanePartition::new(rows).expect("odometer keeps the grid monotone")
    }
}

impl Iterator for BoxedPlanePartitions {
    type Item = PlanePartition;

    fn next(&mut self) -> Option<PlanePartition> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.current())
    }
}

pub fn boxed_plane_partitions(dims: BoxDims) -> BoxedPlanePartitions {
    BoxedPlanePartitions::new(dims)
}

/// Plane partitions of weight `<= max_weight` inside `rows × cols`.
pub fn plane_partitions_up_to_weight(max_weight: u32, rows: usize, cols: usize) -> BoxedPlanePartitions {
    BoxedPlanePartitions::new(BoxDims::new(rows, cols, max_weight)).with_max_weight(max_weight)
}

/// Chains `π_0 ≻ π_1 ≻ … ≻ π_{len-1} ≻ ∅` with `π_0 ⊆ [rows, cols]`.
pub fn interlacing_chains(len: usize, rows: usize, cols: u32) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cur = Vec::new();
    for top in partitions_in_box(rows.min(len), cols) {
        cur.push(top);
        chains_rec(len, &mut cur, &mut out);
        cur.pop();
    }
    out
}

fn chains_rec(len: usize, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
    let last = cur.last().expect("non-empty chain");
    if cur.len() == len {
        if interlaces(last, &Partition::empty()) {
            out.push(cur.clone());
        }
        return;
    }
    let room = len - cur.len();
    for nu in last.interlacing_predecessors() {
        if nu.len() <= room {
            cur.push(nu);
            chains_rec(len, cur, out);
            cur.pop();
        }
    }
}

/// Pairs `(λ¹, λ²)` with `|λ¹| + |λ²| <= max_weight`.
pub fn two_partitions_up_to_weight(max_weight: u32) -> Vec<TwoPartition> {
    let by_weight: Vec<Vec<Partition>> = (0..=max_weight).map(partitions_of).collect();
    let mut out = Vec::new();
    for w in 0..=max_weight {
        for w1 in 0..=w {
            for a in &by_weight[w1 as usize] {
                for b in &by_weight[(w - w1) as usize] {
                    out.push(TwoPartition::new(a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn box_counts() {
        for rows in 0..5 {
            for cols in 0..5 {
                assert_eq!(partitions_in_box(rows, cols).count() as u64, binom((rows as u64) + cols as u64, rows as u64));
            }
        }
        assert!(partitions_in_box(2, 2).all(|p| p.fits(2, 2)));
    }

    #[test]
    fn partition_numbers() {
        let p: Vec<usize> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(p, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    fn macmahon(n: usize, l: usize, m: u32) -> u64 {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 1..=n {
            for j in 1..=l {
                num *= (i + j + m as usize - 1) as u128;
                den *= (i + j - 1) as u128;
            }
        }
        (num / den) as u64
    }

    #[test]
    fn boxed_counts_match_product_formula() {
        for n in 0..4 {
            for l in 0..4 {
                for m in 0..4 {
                    let c = boxed_plane_partitions(BoxDims::new(n, l, m)).count() as u64;
                    assert_eq!(c, macmahon(n, l, m), "{} {} {}", n, l, m);
                }
            }
        }
    }

    #[test]
    fn boxed_enumeration_is_distinct_and_valid() {
        let dims = BoxDims::new(2, 3, 2);
        let all: Vec<PlanePartition> = boxed_plane_partitions(dims).collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        assert!(all.iter().all(|p| p.fits(&dims)));
    }

    #[test]
    fn plane_partition_numbers() {
        // 1, 1, 3, 6, 13, 24, 48
        let counts = [1, 1, 3, 6, 13, 24, 48];
        for (w, &expected) in counts.iter().enumerate() {
            let w = w as u32;
            let got = plane_partitions_up_to_weight(w, w as usize, w as usize)
                .filter(|p| p.weight() == w)
                .count();
            assert_eq!(got, expected, "weight {}", w);
        }
    }

    #[test]
    fn chain_examples() {
        assert_eq!(interlacing_chains(0, 3, 3), vec![Vec::<Partition>::new()]);
        let c = interlacing_chains(1, 1, 2);
        assert_eq!(c.len(), 3);
        assert!(c.contains(&vec![partition![2]]));
        for chain in interlacing_chains(3, 2, 2) {
            assert_eq!(chain.len(), 3);
            for w in chain.windows(2) {
                assert!(interlaces(&w[0], &w[1]));
            }
            assert!(chain[0].fits(2, 2));
        }
    }

    #[test]
    fn chains_are_non_negative_halves_of_boxed_partitions() {
        // the slices π_0, π_1, … of B(N, N, M) partitions, taken as a set
        let (n, m) = (2usize, 2u32);
        let mut from_pp: Vec<Vec<Partition>> = boxed_plane_partitions(BoxDims::new(n, n, m))
            .map(|p| {
                let s = p.slices();
                (0..n as i32).map(|i| s.get(i)).collect()
            })
            .collect();
        from_pp.sort();
        from_pp.dedup();
        let mut chains = interlacing_chains(n, n, m);
        chains.sort();
        assert_eq!(chains, from_pp);
    }

    #[test]
    fn two_partitions_count() {
        // coefficients of 1/(q;q)^2: 1, 2, 5, 10, 20
        let all = two_partitions_up_to_weight(4);
        let counts: Vec<usize> = (0..=4).map(|w| all.iter().filter(|t| t.weight() == w).count()).collect();
        assert_eq!(counts, [1, 2, 5, 10, 20]);
    }
}
