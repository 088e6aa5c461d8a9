//! Two charged fermion sectors `ψ`, `φ` on Maya diagrams.
//!
//! Slots are half-integers stored doubled. `ψ_m` fills slot `m`, `ψ*_n`
//! empties slot `-n`, and the vacuum fills every positive slot. Signs count
//! filled slots below the one touched; the two sectors commute.

mod vertex;

pub use vertex::{
    apply_h, conjugation_check, gamma_interlacing, gamma_minus_oracle, gamma_plus_oracle, ConjugationKind,
    ConjugationReport, Direction,
};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactalg::MPoly;
use crate::partitions::{partitions_of, Partition, TwoPartition};

/// One sector: charge `c` and partition `λ`, filling slots
/// `i - λ_i - 1/2 - c` for `i >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SectorState {
    pub charge: i32,
    pub partition: Partition,
}

impl SectorState {
    pub fn new(charge: i32, partition: Partition) -> Self {
        SectorState { charge, partition }
    }

    pub fn vacuum() -> Self {
        SectorState::default()
    }

    /// Doubled energy `2|λ| + c²`.
    pub fn doubled_energy(&self) -> u32 {
        2 * self.partition.weight() + (self.charge * self.charge) as u32
    }

    /// Filled slots below a cutoff `K >= min_cutoff`; every slot `>= K` is filled.
    pub fn window(&self, min_cutoff: i32) -> (Vec<i32>, i32) {
        let l = self.partition.len() as i32;
        let natural = 2 * (l + 1) - 1 - 2 * self.charge;
        let mut cutoff = natural;
        while cutoff < min_cutoff {
            cutoff += 2;
        }
        let mut filled: Vec<i32> = self
            .partition
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| 2 * (i as i32 + 1) - 2 * p as i32 - 1 - 2 * self.charge)
            .collect();
        filled.extend((natural..cutoff).step_by(2));
        (filled, cutoff)
    }

    /// Inverse of [`SectorState::window`]; `filled` must be sorted ascending.
    pub fn from_window(mut filled: Vec<i32>, mut cutoff: i32) -> Self {
        while filled.last() == Some(&(cutoff - 2)) {
            filled.pop();
            cutoff -= 2;
        }
        let k = filled.len() as i32;
        let charge = (2 * (k + 1) - 1 - cutoff) / 2;
        let parts = filled
            .iter()
            .enumerate()
            .map(|(i, &s)| ((2 * (i as i32 + 1) - 1 - 2 * charge - s) / 2) as u32)
            .collect();
        SectorState { charge, partition: Partition::from_sorted(parts) }
    }

    pub fn is_filled(&self, slot: i32) -> bool {
        let (filled, _) = self.window(slot + 2);
        filled.binary_search(&slot).is_ok()
    }

    /// Fills or empties `slot`; `None` when it is already in that state.
    pub fn toggle(&self, slot: i32, fill: bool) -> Option<(bool, SectorState)> {
        let (mut filled, cutoff) = self.window(slot + 2);
        let pos = filled.binary_search(&slot);
        let negative = match (pos, fill) {
            (Ok(_), true) | (Err(_), false) => return None,
            (Err(p), true) => {
                filled.insert(p, slot);
                p % 2 == 1
            }
            (Ok(p), false) => {
                filled.remove(p);
                p % 2 == 1
            }
        };
        Some((negative, SectorState::from_window(filled, cutoff)))
    }
}

impl fmt::Debug for SectorState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.charge == 0 {
            write!(f, "{}", self.partition)
        } else {
            write!(f, "{}@{}", self.partition, self.charge)
        }
    }
}

/// A basis vector of the two-sector Fock space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FockState {
    pub psi: SectorState,
    pub phi: SectorState,
}

impl FockState {
    pub fn vacuum() -> Self {
        FockState::default()
    }

    /// The charge-(0,0) state of a 2-partition.
    pub fn from_two_partition(chi: &TwoPartition) -> Self {
        FockState {
            psi: SectorState::new(0, chi.first.clone()),
            phi: SectorState::new(0, chi.second.clone()),
        }
    }

    pub fn charge(&self) -> (i32, i32) {
        (self.psi.charge, self.phi.charge)
    }

    pub fn doubled_energy(&self) -> u32 {
        self.psi.doubled_energy() + self.phi.doubled_energy()
    }

    pub fn sector(&self, s: Sector) -> &SectorState {
        match s {
            Sector::Psi => &self.psi,
            Sector::Phi => &self.phi,
        }
    }

    pub(crate) fn with_sector(&self, s: Sector, st: SectorState) -> FockState {
        let mut out = self.clone();
        match s {
            Sector::Psi => out.psi = st,
            Sector::Phi => out.phi = st,
        }
        out
    }
}

impl fmt::Debug for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{:?}, {:?}⟩", self.psi, self.phi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sector {
    Psi,
    Phi,
}

/// `ψ_m`, `ψ*_m`, `φ_m` or `φ*_m` with `m` stored doubled (odd).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModeOp {
    pub sector: Sector,
    pub starred: bool,
    pub index: i32,
}

impl ModeOp {
    pub fn new(sector: Sector, starred: bool, doubled_index: i32) -> Result<Self> {
        if doubled_index % 2 == 0 {
            return Err(Error::Domain("fermion modes have half-integer index"));
        }
        Ok(ModeOp { sector, starred, index: doubled_index })
    }

    pub fn psi(doubled: i32) -> Self {
        ModeOp::new(Sector::Psi, false, doubled).expect("odd index")
    }

    pub fn psi_star(doubled: i32) -> Self {
        ModeOp::new(Sector::Psi, true, doubled).expect("odd index")
    }

    pub fn phi(doubled: i32) -> Self {
        ModeOp::new(Sector::Phi, false, doubled).expect("odd index")
    }

    pub fn phi_star(doubled: i32) -> Self {
        ModeOp::new(Sector::Phi, true, doubled).expect("odd index")
    }

    /// Slot touched and whether a ket gains it.
    fn slot(&self) -> (i32, bool) {
        if self.starred {
            (-self.index, false)
        } else {
            (self.index, true)
        }
    }
}

/// `op|state⟩` as `(negative sign, new state)`, or `None` for zero.
pub fn apply_mode(op: ModeOp, state: &FockState) -> Option<(bool, FockState)> {
    let (slot, fill) = op.slot();
    let (neg, st) = state.sector(op.sector).toggle(slot, fill)?;
    Some((neg, state.with_sector(op.sector, st)))
}

/// `⟨state|op`: the slot change runs the other way.
pub fn apply_mode_dual(op: ModeOp, state: &FockState) -> Option<(bool, FockState)> {
    let (slot, fill) = op.slot();
    let (neg, st) = state.sector(op.sector).toggle(slot, !fill)?;
    Some((neg, state.with_sector(op.sector, st)))
}

macro_rules! fock_vector_common {
    ($name:ident, $apply:ident, $ket:expr) => {
        impl $name {
            /// Coefficients are truncated to doubled total degree `<= bound`.
            pub fn zero(bound: Option<i32>) -> Self {
                $name { bound, energy_cost: 0, terms: BTreeMap::new() }
            }

            /// An empty vector with the same truncation.
            pub fn empty_like(&self) -> Self {
                $name { bound: self.bound, energy_cost: self.energy_cost, terms: BTreeMap::new() }
            }

            /// Also drops terms whose coefficient degree plus `cost` per unit
            /// of partition weight exceeds the bound (doubled units). Sound
            /// when every later step lowering the weight by `k` costs at least
            /// `k * cost`.
            pub fn with_energy_cost(&self, cost: i32) -> Self {
                let mut out = self.empty_like();
                out.energy_cost = cost;
                for (s, c) in &self.terms {
                    out.add_term(s.clone(), c.clone());
                }
                out
            }

            pub fn basis(s: FockState) -> Self {
                let mut v = $name::zero(None);
                v.add_term(s, MPoly::one());
                v
            }

            pub fn vacuum() -> Self {
                $name::basis(FockState::vacuum())
            }

            pub fn bound(&self) -> Option<i32> {
                self.bound
            }

            pub fn with_bound(&self, bound: Option<i32>) -> Self {
                let mut out = self.empty_like();
                out.bound = bound;
                for (s, c) in &self.terms {
                    out.add_term(s.clone(), c.clone());
                }
                out
            }

            pub fn terms(&self) -> impl Iterator<Item = (&FockState, &MPoly)> + '_ {
                self.terms.iter()
            }

            pub fn coeff(&self, s: &FockState) -> MPoly {
                self.terms.get(s).cloned().unwrap_or_else(MPoly::zero)
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

            pub fn add_term(&mut self, s: FockState, c: MPoly) {
                let c = match self.bound {
                    Some(b) => {
                        let weight = s.psi.partition.weight() + s.phi.partition.weight();
                        c.truncate_doubled(b - self.energy_cost * weight as i32)
                    }
                    None => c,
                };
                if c.is_zero() {
                    return;
                }
                match self.terms.get_mut(&s) {
                    Some(e) => {
                        *e += &c;
                        if e.is_zero() {
                            self.terms.remove(&s);
                        }
                    }
                    None => {
                        self.terms.insert(s, c);
                    }
                }
            }

            pub fn add(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (s, c) in &other.terms {
                    out.add_term(s.clone(), c.clone());
                }
                out
            }

            pub fn sub(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (s, c) in &other.terms {
                    out.add_term(s.clone(), -c);
                }
                out
            }

            pub fn scale(&self, c: &MPoly) -> Self {
                let mut out = self.empty_like();
                for (s, k) in &self.terms {
                    out.add_term(s.clone(), k * c);
                }
                out
            }

            pub fn apply_mode(&self, op: ModeOp) -> Self {
                let mut out = self.empty_like();
                for (s, c) in &self.terms {
                    if let Some((neg, t)) = $apply(op, s) {
                        out.add_term(t, if neg { -c } else { c.clone() });
                    }
                }
                out
            }

            /// Applies a product of modes written left to right (kets act from
            /// the right, bras from the left).
            pub fn apply_word(&self, word: &[ModeOp]) -> Self {
                let mut out = self.clone();
                if $ket {
                    for &op in word.iter().rev() {
                        out = out.apply_mode(op);
                    }
                } else {
                    for &op in word {
                        out = out.apply_mode(op);
                    }
                }
                out
            }
        }
    };
}

/// A finite combination of Fock kets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    bound: Option<i32>,
    energy_cost: i32,
    terms: BTreeMap<FockState, MPoly>,
}

/// A finite combination of Fock bras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFockVector {
    bound: Option<i32>,
    energy_cost: i32,
    terms: BTreeMap<FockState, MPoly>,
}

fock_vector_common!(FockVector, apply_mode, true);
fock_vector_common!(DualFockVector, apply_mode_dual, false);

/// `Σ ⟨s|t⟩` over matching basis states.
pub fn pair(dual: &DualFockVector, ket: &FockVector) -> MPoly {
    let mut total = MPoly::zero();
    for (s, c) in ket.terms() {
        if let Some(d) = dual.terms.get(s) {
            total += d * c;
        }
    }
    match (dual.bound, ket.bound) {
        (Some(a), Some(b)) => total.truncate_doubled(a.min(b)),
        (Some(a), None) | (None, Some(a)) => total.truncate_doubled(a),
        (None, None) => total,
    }
}

/// `⟨vac| a_1 ⋯ a_k` paired with `ket`.
pub fn pairing(dual_word: &[ModeOp], ket: &FockVector) -> MPoly {
    pair(&DualFockVector::vacuum().apply_word(dual_word), ket)
}

/// `Ψ_l` (ket side) as a word, left to right.
fn big_psi(sector: Sector, l: i32) -> Vec<ModeOp> {
    let mk = |starred, idx| ModeOp { sector, starred, index: idx };
    if l < 0 {
        // ψ*_{l+1/2} ⋯ ψ*_{-1/2}
        (0..-l).map(|k| mk(true, 2 * (l + k) + 1)).collect()
    } else {
        // ψ_{-l+1/2} ⋯ ψ_{-1/2}
        (0..l).map(|k| mk(false, 2 * (-l + k) + 1)).collect()
    }
}

/// `Ψ*_l` (bra side) as a word, read literally.
fn big_psi_star(sector: Sector, l: i32) -> Vec<ModeOp> {
    let mk = |starred, idx| ModeOp { sector, starred, index: idx };
    if l < 0 {
        // ψ_{1/2} ⋯ ψ_{-l-1/2}
        (0..-l).map(|k| mk(false, 2 * k + 1)).collect()
    } else {
        // ψ*_{1/2} ⋯ ψ*_{l-1/2}
        (0..l).map(|k| mk(true, 2 * k + 1)).collect()
    }
}

/// `|l₁, l₂⟩ = Ψ_{l₁} Φ_{l₂} |vac⟩`.
pub fn charged_vacuum(l1: i32, l2: i32) -> FockVector {
    let mut word = big_psi(Sector::Psi, l1);
    word.extend(big_psi(Sector::Phi, l2));
    FockVector::vacuum().apply_word(&word)
}

/// `⟨l₁, l₂| = ⟨vac| Ψ*_{l₁} Φ*_{l₂}`.
pub fn charged_dual_vacuum(l1: i32, l2: i32) -> DualFockVector {
    let mut word = big_psi_star(Sector::Psi, l1);
    word.extend(big_psi_star(Sector::Phi, l2));
    DualFockVector::vacuum().apply_word(&word)
}

fn check_levels(mu1: &Partition, mu2: &Partition, l1: i32, l2: i32) -> Result<()> {
    if l1 >= 0 || l2 >= 0 {
        return Err(Error::Domain("levels must be negative"));
    }
    if (-l1) < mu1.len() as i32 || (-l2) < mu2.len() as i32 {
        return Err(Error::Domain("level too shallow for the partition"));
    }
    Ok(())
}

/// `ψ_{m¹_1} ⋯ ψ_{m¹_{-l₁}} φ_{m²_1} ⋯ φ_{m²_{-l₂}} |l₁, l₂⟩` with
/// `m_i = -(μ_i - i) - 1/2`.
pub fn state_from_2partition(mu1: &Partition, mu2: &Partition, l1: i32, l2: i32) -> Result<FockVector> {
    check_levels(mu1, mu2, l1, l2)?;
    let idx = |mu: &Partition, i: i32| -2 * (mu.part(i as usize - 1) as i32 - i) - 1;
    let mut word: Vec<ModeOp> = (1..=-l1).map(|i| ModeOp::psi(idx(mu1, i))).collect();
    word.extend((1..=-l2).map(|i| ModeOp::phi(idx(mu2, i))));
    Ok(charged_vacuum(l1, l2).apply_word(&word))
}

/// `⟨l₂, l₁| φ*_{m²_{-l₂}} ⋯ φ*_{m²_1} ψ*_{m¹_{-l₁}} ⋯ ψ*_{m¹_1}` with
/// `m_i = (μ_i - i) + 1/2`.
pub fn dual_from_2partition(mu1: &Partition, mu2: &Partition, l1: i32, l2: i32) -> Result<DualFockVector> {
    check_levels(mu1, mu2, l1, l2)?;
    let idx = |mu: &Partition, i: i32| 2 * (mu.part(i as usize - 1) as i32 - i) + 1;
    let mut word: Vec<ModeOp> = (1..=-l2).rev().map(|i| ModeOp::phi_star(idx(mu2, i))).collect();
    word.extend((1..=-l1).rev().map(|i| ModeOp::psi_star(idx(mu1, i))));
    Ok(charged_dual_vacuum(l1, l2).apply_word(&word))
}

/// Every basis state with doubled energy at most `2 * max_energy`.
pub fn states_up_to_energy(max_energy: u32) -> Vec<FockState> {
    let cap = 2 * max_energy;
    let mut sectors = Vec::new();
    let max_c = (1..).take_while(|c: &i32| (c * c) as u32 <= cap).last().unwrap_or(0);
    for c in -max_c..=max_c {
        let c2 = (c * c) as u32;
        for w in 0..=(cap - c2) / 2 {
            for p in partitions_of(w) {
                sectors.push(SectorState::new(c, p));
            }
        }
    }
    let mut out = Vec::new();
    for a in &sectors {
        for b in &sectors {
            if a.doubled_energy() + b.doubled_energy() <= cap {
                out.push(FockState { psi: a.clone(), phi: b.clone() });
            }
        }
    }
    out.sort();
    out
}
