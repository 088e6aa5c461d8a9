//! Heisenberg modes `H_n` and the vertex operators `Γ±`.

use alloc::vec::Vec;

use super::{states_up_to_energy, FockState, FockVector, ModeOp, Sector, SectorState};
use crate::error::{Error, Result};
use crate::exactalg::{rat, MPoly};
use crate::partitions::TwoPartition;

fn h_on_sector(n: i32, sec: &SectorState) -> Vec<(bool, SectorState)> {
    if n == 0 {
        return Vec::new();
    }
    let shift = 2 * n;
    let natural = sec.window(i32::MIN).1;
    let (filled, cutoff) = sec.window(natural + 2 * shift.abs());
    let mut out = Vec::new();
    for (p, &t) in filled.iter().enumerate() {
        let target = t + shift;
        if target >= cutoff || filled.binary_search(&target).is_ok() {
            continue;
        }
        let mut next = filled.clone();
        next.remove(p);
        let q = next.binary_search(&target).unwrap_err();
        next.insert(q, target);
        out.push(((p + q) % 2 == 1, SectorState::from_window(next, cutoff)));
    }
    out
}

/// `H_n = Σ_j :ψ_{-j} ψ*_{j+n}:` (or `H̃_n` on the `φ` sector when `tilde`).
/// `H_0` acts as the charge.
pub fn apply_h(n: i32, tilde: bool, v: &FockVector) -> FockVector {
    let sector = if tilde { Sector::Phi } else { Sector::Psi };
    let mut out = v.empty_like();
    for (s, c) in v.terms() {
        let sec = s.sector(sector);
        if n == 0 {
            out.add_term(s.clone(), c.scale(&rat(sec.charge as i64, 1)));
            continue;
        }
        for (neg, t) in h_on_sector(n, sec) {
            out.add_term(s.with_sector(sector, t), if neg { -c } else { c.clone() });
        }
    }
    out
}

/// `exp(X) v` summed until the terms vanish.
fn exponential(v: &FockVector, x: impl Fn(&FockVector) -> FockVector) -> FockVector {
    let mut total = v.clone();
    let mut term = v.clone();
    let mut k = 1i64;
    while !term.is_zero() {
        term = x(&term).scale(&MPoly::constant(rat(1, k)));
        total = total.add(&term);
        k += 1;
    }
    total
}

fn raising_range(z: &MPoly, bound: i32) -> Result<u32> {
    match z.min_doubled_degree() {
        None => Ok(0),
        Some(d) if d <= 0 => Err(Error::Domain("vertex operator arguments need positive degree")),
        Some(d) => Ok((bound.max(0) / d) as u32),
    }
}

fn max_weight(v: &FockVector, sector: Sector) -> u32 {
    v.terms().map(|(s, _)| s.sector(sector).partition.weight()).max().unwrap_or(0)
}

fn add_h_terms(acc: &mut FockVector, v: &FockVector, arg: &MPoly, n: i32, tilde: bool) {
    if arg.is_zero() {
        return;
    }
    let k = n.unsigned_abs();
    let c = arg.pow(k).scale(&rat(1, k as i64));
    *acc = acc.add(&apply_h(n, tilde, v).scale(&c));
}

/// `Γ₊(z,v) = exp Σ_{n≥1} (zⁿ/n) H_n + (vⁿ/n) H̃_n`. Exact: every `H_{n>0}`
/// lowers the energy, so the series stops.
pub fn gamma_plus_oracle(z: &MPoly, v: &MPoly, state: &FockVector) -> FockVector {
    exponential(state, |w| {
        let mut acc = w.empty_like();
        for n in 1..=max_weight(w, Sector::Psi) as i32 {
            add_h_terms(&mut acc, w, z, n, false);
        }
        for n in 1..=max_weight(w, Sector::Phi) as i32 {
            add_h_terms(&mut acc, w, v, n, true);
        }
        acc
    })
}

fn combine_bound(state: &FockVector, d: u32) -> i32 {
    let b = 2 * d as i32;
    state.bound().map_or(b, |s| s.min(b))
}

/// `Γ₋(z,v) = exp Σ_{n≥1} (zⁿ/n) H_{-n} + (vⁿ/n) H̃_{-n}`, with coefficients
/// truncated to total degree `d`.
pub fn gamma_minus_oracle(z: &MPoly, v: &MPoly, state: &FockVector, d: u32) -> Result<FockVector> {
    let bound = combine_bound(state, d);
    let nz = raising_range(z, bound)? as i32;
    let nv = raising_range(v, bound)? as i32;
    let start = state.with_bound(Some(bound));
    Ok(exponential(&start, |w| {
        let mut acc = w.empty_like();
        for n in 1..=nz {
            add_h_terms(&mut acc, w, z, -n, false);
        }
        for n in 1..=nv {
            add_h_terms(&mut acc, w, v, -n, true);
        }
        acc
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Plus,
    Minus,
}

/// The interlacing sums of `Γ±` on a 2-partition state. `d` bounds the total
/// degree of the `Minus` coefficients; `Plus` is exact.
pub fn gamma_interlacing(z: &MPoly, v: &MPoly, chi: &TwoPartition, dir: Direction, d: u32) -> Result<FockVector> {
    let (firsts, seconds, bound) = match dir {
        Direction::Plus => (chi.first.interlacing_predecessors(), chi.second.interlacing_predecessors(), None),
        Direction::Minus => {
            let b = 2 * d as i32;
            (
                chi.first.interlacing_successors(raising_range(z, b)?, None),
                chi.second.interlacing_successors(raising_range(v, b)?, None),
                Some(b),
            )
        }
    };
    let w1 = chi.first.weight() as i64;
    let w2 = chi.second.weight() as i64;
    let mut out = FockVector::zero(bound);
    for a in &firsts {
        let ca = z.pow((a.weight() as i64 - w1).unsigned_abs() as u32);
        for b in &seconds {
            let cb = v.pow((b.weight() as i64 - w2).unsigned_abs() as u32);
            let t = TwoPartition::new(a.clone(), b.clone());
            out.add_term(FockState::from_two_partition(&t), &ca * &cb);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConjugationKind {
    Psi,
    PsiStar,
    Phi,
    PhiStar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationReport {
    pub kind: ConjugationKind,
    pub cases: usize,
    /// `(doubled mode index, state)` pairs where the two sides differ.
    pub failures: Vec<(i32, FockState)>,
}

impl ConjugationReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the mode forms of the `Γ±` conjugation rules on every state of
/// energy at most `d` and every mode `|i| <= d + 1/2`, to total degree `d`:
///
/// - `Γ₊ ψ_i = Σ_{n≥0} zⁿ ψ_{i+n} Γ₊` (and `φ` with `v`),
/// - `Γ₋ Σ_{n≥0} zⁿ ψ*_{i-n} = ψ*_i Γ₋` (and `φ*` with `v`).
pub fn conjugation_check(kind: ConjugationKind, z: &MPoly, v: &MPoly, d: u32) -> Result<ConjugationReport> {
    let bound = 2 * d as i32;
    let (sector, starred, arg) = match kind {
        ConjugationKind::Psi => (Sector::Psi, false, z),
        ConjugationKind::PsiStar => (Sector::Psi, true, z),
        ConjugationKind::Phi => (Sector::Phi, false, v),
        ConjugationKind::PhiStar => (Sector::Phi, true, v),
    };
    let mode = |idx: i32| ModeOp { sector, starred, index: idx };
    let shifts = raising_range(arg, bound)? as i32;
    let top = 2 * d as i32 + 1;
    let mut report = ConjugationReport { kind, cases: 0, failures: Vec::new() };
    for s in states_up_to_energy(d) {
        let ket = FockVector::basis(s.clone()).with_bound(Some(bound));
        for i in (-top..=top).step_by(2) {
            let shifted = |w: &FockVector| {
                let mut acc = FockVector::zero(Some(bound));
                for n in 0..=shifts {
                    let idx = if starred { i - 2 * n } else { i + 2 * n };
                    acc = acc.add(&w.apply_mode(mode(idx)).scale(&arg.pow(n as u32)));
                }
                acc
            };
            let (lhs, rhs) = if starred {
                (gamma_minus_oracle(z, v, &shifted(&ket), d)?, gamma_minus_oracle(z, v, &ket, d)?.apply_mode(mode(i)))
            } else {
                (gamma_plus_oracle(z, v, &ket.apply_mode(mode(i))), shifted(&gamma_plus_oracle(z, v, &ket)))
            };
            report.cases += 1;
            if lhs != rhs {
                report.failures.push((i, s.clone()));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Var;
    use crate::fock::{pair, DualFockVector};
    use crate::partition;
    use crate::partitions::two_partitions_up_to_weight;

    fn zv() -> (MPoly, MPoly) {
        (MPoly::var(Var::plain('z')), MPoly::var(Var::plain('v')))
    }

    fn ket(a: crate::Partition, b: crate::Partition) -> FockVector {
        FockVector::basis(FockState::from_two_partition(&TwoPartition::new(a, b)))
    }

    #[test]
    fn heisenberg_examples() {
        let vac = FockVector::vacuum();
        assert!(apply_h(1, false, &vac).is_zero());
        assert_eq!(apply_h(1, false, &apply_h(-1, false, &vac)), vac);
        assert_eq!(apply_h(-1, false, &vac), ket(partition![1], partition![]));
        assert_eq!(apply_h(-1, true, &vac), ket(partition![], partition![1]));
        let charged = FockVector::vacuum().apply_mode(ModeOp::psi(-1));
        assert_eq!(apply_h(0, false, &charged), charged);
        assert!(apply_h(0, true, &charged).is_zero());
    }

    #[test]
    fn heisenberg_relations() {
        for s in states_up_to_energy(4) {
            let v = FockVector::basis(s.clone());
            for tilde in [false, true] {
                for m in -3..=3 {
                    for n in -3..=3 {
                        let mn = apply_h(m, tilde, &apply_h(n, tilde, &v));
                        let nm = apply_h(n, tilde, &apply_h(m, tilde, &v));
                        let expected = if m + n == 0 { v.scale(&MPoly::int(m as i64)) } else { FockVector::zero(None) };
                        assert_eq!(mn.sub(&nm), expected, "H_{} H_{} on {:?}", m, n, s);
                    }
                    let cross = apply_h(m, !tilde, &apply_h(m, tilde, &v));
                    assert_eq!(cross, apply_h(m, tilde, &apply_h(m, !tilde, &v)));
                }
            }
        }
    }

    #[test]
    fn gamma_examples() {
        let (z, v) = zv();
        assert_eq!(gamma_plus_oracle(&z, &v, &FockVector::vacuum()), FockVector::vacuum());
        let expected = ket(partition![1], partition![]).add(&FockVector::vacuum().scale(&z));
        assert_eq!(gamma_plus_oracle(&z, &v, &ket(partition![1], partition![])), expected);
        assert_eq!(gamma_minus_oracle(&z, &v, &FockVector::vacuum(), 0).unwrap(), FockVector::vacuum().with_bound(Some(0)));

        // successors of ∅ have one row, so (1,1) never appears
        let got = gamma_minus_oracle(&z, &v, &FockVector::vacuum(), 2).unwrap();
        let mut want = FockVector::zero(Some(4));
        let e = crate::partitions::Partition::empty;
        for (a, b, c) in [
            (e(), e(), MPoly::one()),
            (partition![1], e(), z.clone()),
            (e(), partition![1], v.clone()),
            (partition![2], e(), z.pow(2)),
            (partition![1], partition![1], &z * &v),
            (e(), partition![2], v.pow(2)),
        ] {
            want.add_term(FockState::from_two_partition(&TwoPartition::new(a, b)), c);
        }
        assert_eq!(got, want);

        let one = gamma_interlacing(&z, &v, &TwoPartition::empty(), Direction::Minus, 1).unwrap();
        assert_eq!(one.len(), 3);
        assert_eq!(gamma_interlacing(&z, &v, &TwoPartition::empty(), Direction::Plus, 0).unwrap(), FockVector::vacuum());
        assert!(gamma_minus_oracle(&MPoly::one(), &v, &FockVector::vacuum(), 2).is_err());
    }

    #[test]
    fn interlacing_closed_forms_match_the_exponential() {
        let (z, v) = zv();
        for chi in two_partitions_up_to_weight(4) {
            let k = FockVector::basis(FockState::from_two_partition(&chi));
            let plus = gamma_interlacing(&z, &v, &chi, Direction::Plus, 0).unwrap();
            assert_eq!(gamma_plus_oracle(&z, &v, &k), plus, "plus on {}", chi);
            for d in 0..=4 {
                if chi.weight() + d > 6 {
                    continue;
                }
                let minus = gamma_interlacing(&z, &v, &chi, Direction::Minus, d).unwrap();
                assert_eq!(gamma_minus_oracle(&z, &v, &k, d).unwrap(), minus, "minus on {} d={}", chi, d);
            }
        }
    }

    #[test]
    fn vacuum_commutation() {
        let (z, v) = zv();
        let x = MPoly::var(Var::plain('x'));
        let y = MPoly::var(Var::plain('y'));
        let d = 6;
        let vac = FockVector::vacuum();
        let gm = gamma_minus_oracle(&x, &y, &vac, d).unwrap();
        let lhs = gamma_plus_oracle(&z, &v, &gm);
        let value = pair(&DualFockVector::vacuum(), &lhs);
        let geom = |a: &MPoly, b: &MPoly| {
            let mut s = MPoly::zero();
            for k in 0..=d {
                s += &(a * b).pow(k);
            }
            s
        };
        let expected = (&geom(&z, &x) * &geom(&v, &y)).truncate_doubled(2 * d as i32);
        assert_eq!(value.truncate_doubled(2 * d as i32), expected);

        // the reordered product on the vacuum, against every dual of energy <= 3
        let rhs = gamma_minus_oracle(&x, &y, &gamma_plus_oracle(&z, &v, &vac), d).unwrap();
        let scaled = rhs.scale(&(&geom(&z, &x) * &geom(&v, &y)));
        let lhs_t = lhs.with_bound(Some(2 * d as i32));
        for s in states_up_to_energy(3) {
            let bra = DualFockVector::basis(s);
            assert_eq!(pair(&bra, &lhs_t), pair(&bra, &scaled));
        }
    }

    #[test]
    fn conjugation_mode_forms() {
        let (z, v) = zv();
        for kind in [ConjugationKind::Psi, ConjugationKind::PsiStar, ConjugationKind::Phi, ConjugationKind::PhiStar] {
            let r = conjugation_check(kind, &z, &v, 2).unwrap();
            assert!(r.cases > 0);
            assert!(r.holds(), "{:?}: {:?}", kind, r.failures);
        }
    }

    #[test]
    fn conjugation_example_on_vacuum() {
        let (z, v) = zv();
        let vac = FockVector::vacuum().with_bound(Some(6));
        let lhs = gamma_plus_oracle(&z, &v, &vac.apply_mode(ModeOp::psi(-1)));
        let mut rhs = FockVector::zero(Some(6));
        for n in 0..=3 {
            rhs = rhs.add(&gamma_plus_oracle(&z, &v, &vac).apply_mode(ModeOp::psi(-1 + 2 * n)).scale(&z.pow(n as u32)));
        }
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, vac.apply_mode(ModeOp::psi(-1)));
    }
}
