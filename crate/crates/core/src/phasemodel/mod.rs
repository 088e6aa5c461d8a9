//! The two-site generalized phase model on occupation vectors.

mod actions;
mod ops;
mod scalar;

pub use actions::{
    apply_b_direct, apply_b_monodromy, apply_b_transfer, apply_c_dual, apply_c_monodromy, apply_c_transfer,
    admissible_successors,
};
pub use ops::{l_matrix, monodromy, printed_r_matrix, rtt_residual, verify_rtt, OpMatrix2, OpPoly, OpWord, RMatrix, RttReport};
pub use scalar::{
    scalar_product_op, scalar_product_pp, scalar_product_schur, ScalarArgs, ScalarDims,
};

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactalg::MPoly;
use crate::partitions::Partition;

/// Occupation numbers `n_0, …, n_M` of one sector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccupationVector {
    n: Vec<u32>,
}

impl OccupationVector {
    pub fn new(n: Vec<u32>) -> Result<Self> {
        if n.is_empty() {
            return Err(Error::Domain("occupation vector needs at least site 0"));
        }
        Ok(OccupationVector { n })
    }

    /// The vacuum on sites `0..=m`.
    pub fn vacuum(m: usize) -> Self {
        OccupationVector { n: vec![0; m + 1] }
    }

    /// Largest site index `M`.
    pub fn sites(&self) -> usize {
        self.n.len() - 1
    }

    pub fn occupations(&self) -> &[u32] {
        &self.n
    }

    pub fn get(&self, i: usize) -> u32 {
        self.n.get(i).copied().unwrap_or(0)
    }

    pub(crate) fn set(&mut self, i: usize, v: u32) {
        self.n[i] = v;
    }

    pub fn particles(&self) -> u32 {
        self.n.iter().sum()
    }

    /// `Σ_i = Σ_{k >= i} n_k`
    pub fn partial_sum(&self, i: usize) -> u32 {
        self.n.iter().skip(i).sum()
    }

    /// `Σ_{i>=1} i n_i`, the weight of the image partition.
    pub fn weight(&self) -> u32 {
        self.n.iter().enumerate().map(|(i, &k)| i as u32 * k).sum()
    }
}

impl fmt::Debug for OccupationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for (i, v) in self.n.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "⟩")
    }
}

/// `ν = (1^{n_1} 2^{n_2} … M^{n_M})`; site-0 particles are dropped.
pub fn map_m(n: &OccupationVector) -> Partition {
    Partition::from_multiplicities(&n.n[1..])
}

/// Inverse of [`map_m`] once the particle count fixes `n_0`.
pub fn map_m_inverse(nu: &Partition, particles: u32, m: usize) -> Result<OccupationVector> {
    if nu.len() as u32 > particles {
        return Err(Error::Domain("partition has more parts than particles"));
    }
    if nu.largest() as usize > m {
        return Err(Error::Domain("part exceeds the site bound"));
    }
    let mut n = vec![0; m + 1];
    n[0] = particles - nu.len() as u32;
    for (k, &mult) in nu.multiplicities().iter().enumerate() {
        n[k + 1] = mult;
    }
    Ok(OccupationVector { n })
}

/// Every occupation vector on sites `0..=m` with at most `max` particles,
/// ordered by particle count.
pub fn occupation_vectors(m: usize, max: u32) -> Vec<OccupationVector> {
    let mut out = vec![OccupationVector::vacuum(m)];
    let mut frontier = out.clone();
    for _ in 0..max {
        let mut next: Vec<OccupationVector> = Vec::new();
        for s in &frontier {
            for i in 0..=m {
                let mut t = s.clone();
                t.n[i] += 1;
                if !next.contains(&t) {
                    next.push(t);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// `m ⊳ n`: `Σ_0^m - Σ_0^n = 1` and `0 <= Σ_i^m - Σ_i^n <= 1` for every `i`.
pub fn admissible(m: &OccupationVector, n: &OccupationVector) -> bool {
    if m.sites() != n.sites() {
        return false;
    }
    (0..=m.sites()).all(|i| {
        let d = m.partial_sum(i) as i64 - n.partial_sum(i) as i64;
        if i == 0 {
            d == 1
        } else {
            d == 0 || d == 1
        }
    })
}

/// One factor of an `L`-matrix entry acting on a single site.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalOp {
    Scalar(MPoly),
    Lower,
    Raise,
}

/// Action on a ket: `φ` kills an empty site, `φ†` always raises.
pub fn apply_local(op: &LocalOp, n: u32) -> Vec<(MPoly, u32)> {
    match op {
        LocalOp::Scalar(c) if c.is_zero() => Vec::new(),
        LocalOp::Scalar(c) => vec![(c.clone(), n)],
        LocalOp::Lower if n == 0 => Vec::new(),
        LocalOp::Lower => vec![(MPoly::one(), n - 1)],
        LocalOp::Raise => vec![(MPoly::one(), n + 1)],
    }
}

/// Action on a bra, where the roles of `φ` and `φ†` swap.
pub fn apply_local_dual(op: &LocalOp, m: u32) -> Vec<(MPoly, u32)> {
    match op {
        LocalOp::Lower => apply_local(&LocalOp::Raise, m),
        LocalOp::Raise => apply_local(&LocalOp::Lower, m),
        s => apply_local(s, m),
    }
}

macro_rules! phase_vector_common {
    ($name:ident) => {
        impl $name {
            pub fn zero(sites: usize) -> Self {
                $name { sites, terms: BTreeMap::new() }
            }

            pub fn basis(n: OccupationVector) -> Self {
                let mut v = $name::zero(n.sites());
                v.terms.insert(n, MPoly::one());
                v
            }

            pub fn vacuum(sites: usize) -> Self {
                $name::basis(OccupationVector::vacuum(sites))
            }

            pub fn sites(&self) -> usize {
                self.sites
            }

            pub fn terms(&self) -> impl Iterator<Item = (&OccupationVector, &MPoly)> + '_ {
                self.terms.iter()
            }

            pub fn coeff(&self, n: &OccupationVector) -> MPoly {
                self.terms.get(n).cloned().unwrap_or_else(MPoly::zero)
            }

            pub fn len(&self) -> usize {
                self.terms.len()
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn is_empty(&self) -> bool {
                self.terms.is_empty()
            }

            /// Adds `c·|n⟩`, dropping the key when the sum cancels.
            pub fn add_term(&mut self, n: OccupationVector, c: MPoly) -> Result<()> {
                if n.sites() != self.sites {
                    return Err(Error::Usage("site count mismatch"));
                }
                self.add_unchecked(n, c);
                Ok(())
            }

            pub(crate) fn add_unchecked(&mut self, n: OccupationVector, c: MPoly) {
                if c.is_zero() {
                    return;
                }
                match self.terms.get_mut(&n) {
                    Some(e) => {
                        *e += &c;
                        if e.is_zero() {
                            self.terms.remove(&n);
                        }
                    }
                    None => {
                        self.terms.insert(n, c);
                    }
                }
            }

            pub fn scale(&self, c: &MPoly) -> Self {
                let mut out = $name::zero(self.sites);
                for (n, k) in &self.terms {
                    out.add_unchecked(n.clone(), k * c);
                }
                out
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                let mut out = self.clone();
                for (n, c) in &other.terms {
                    out.add_term(n.clone(), c.clone())?;
                }
                Ok(out)
            }
        }
    };
}

/// A finite combination of kets in one sector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseVector {
    sites: usize,
    terms: BTreeMap<OccupationVector, MPoly>,
}

/// A finite combination of bras in one sector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPhaseVector {
    sites: usize,
    terms: BTreeMap<OccupationVector, MPoly>,
}

phase_vector_common!(PhaseVector);
phase_vector_common!(DualPhaseVector);

/// `⟨m|n⟩ = Π_i δ_{m_i n_i}`, extended bilinearly.
pub fn inner(dual: &DualPhaseVector, ket: &PhaseVector) -> Result<MPoly> {
    if dual.sites != ket.sites {
        return Err(Error::Usage("site count mismatch"));
    }
    let mut total = MPoly::zero();
    for (n, c) in &ket.terms {
        if let Some(d) = dual.terms.get(n) {
            total += d * c;
        }
    }
    Ok(total)
}

/// Pairing on the tensor space, which factors over the two sectors.
pub fn inner_pair(
    dual: (&DualPhaseVector, &DualPhaseVector),
    ket: (&PhaseVector, &PhaseVector),
) -> Result<MPoly> {
    Ok(&inner(dual.0, ket.0)? * &inner(dual.1, ket.1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partitions::partitions_in_box;

    fn occ(n: &[u32]) -> OccupationVector {
        OccupationVector::new(n.to_vec()).unwrap()
    }

    #[test]
    fn local_actions() {
        assert!(apply_local(&LocalOp::Lower, 0).is_empty());
        assert_eq!(apply_local(&LocalOp::Raise, 2), vec![(MPoly::one(), 3)]);
        assert_eq!(apply_local(&LocalOp::Lower, 2), vec![(MPoly::one(), 1)]);
        assert_eq!(apply_local(&LocalOp::Scalar(MPoly::int(3)), 4), vec![(MPoly::int(3), 4)]);
        assert!(apply_local_dual(&LocalOp::Raise, 0).is_empty());
        assert_eq!(apply_local_dual(&LocalOp::Lower, 0), vec![(MPoly::one(), 1)]);
    }

    #[test]
    fn map_m_examples() {
        assert_eq!(map_m(&occ(&[0, 1, 1])), partition![2, 1]);
        assert_eq!(map_m(&occ(&[3, 0, 0])), partition![]);
        assert_eq!(map_m(&occ(&[0, 0, 2, 1])), partition![3, 2, 2]);
    }

    #[test]
    fn map_m_inverse_examples() {
        assert_eq!(map_m_inverse(&partition![2, 1], 3, 2).unwrap(), occ(&[1, 1, 1]));
        assert_eq!(map_m_inverse(&partition![], 0, 5).unwrap(), OccupationVector::vacuum(5));
        assert!(map_m_inverse(&partition![3], 1, 2).is_err());
        assert!(map_m_inverse(&partition![1, 1], 1, 2).is_err());
        for nu in partitions_in_box(3, 3) {
            for extra in 0..2 {
                let n = map_m_inverse(&nu, nu.len() as u32 + extra, 3).unwrap();
                assert_eq!(map_m(&n), nu);
                assert_eq!(n.weight(), nu.weight());
            }
        }
    }

    #[test]
    fn admissible_examples() {
        assert!(admissible(&occ(&[0, 1, 0]), &occ(&[0, 0, 0])));
        assert!(!admissible(&occ(&[0, 1, 1]), &occ(&[0, 0, 0])));
        assert!(!admissible(&occ(&[1, 0, 1]), &occ(&[0, 1, 1])));
        assert!(!admissible(&occ(&[1, 0]), &occ(&[0, 0, 0])));
    }

    #[test]
    fn inner_pairs_basis_states() {
        let d = DualPhaseVector::basis(occ(&[1, 0]));
        assert!(inner(&d, &PhaseVector::basis(occ(&[1, 0]))).unwrap().is_one());
        assert!(inner(&d, &PhaseVector::basis(occ(&[0, 1]))).unwrap().is_zero());
        assert!(inner(&d, &PhaseVector::vacuum(2)).is_err());

        let mut ket = PhaseVector::zero(1);
        ket.add_term(occ(&[1, 0]), MPoly::int(2)).unwrap();
        ket.add_term(occ(&[0, 1]), MPoly::int(5)).unwrap();
        let mut bra = DualPhaseVector::zero(1);
        bra.add_term(occ(&[1, 0]), MPoly::int(3)).unwrap();
        bra.add_term(occ(&[0, 1]), MPoly::int(7)).unwrap();
        assert_eq!(inner(&bra, &ket).unwrap(), MPoly::int(41));
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut v = PhaseVector::vacuum(1);
        v.add_term(OccupationVector::vacuum(1), MPoly::int(-1)).unwrap();
        assert!(v.is_zero());
    }
}
