//! Generating-function identities, each checked exactly against enumeration.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactalg::{rat_int, series_inv_one_minus, MPoly, Monomial, Rat, Series, Var};
use crate::fock::{gamma_interlacing, gamma_minus_oracle, gamma_plus_oracle, pair, Direction, DualFockVector, FockState, FockVector};
use crate::partitions::{boxed_plane_partitions, plane_partitions_up_to_weight, BoxDims, TwoPartition};
use crate::phasemodel::{apply_b_direct, map_m, map_m_inverse, PhaseVector};

/// Where two sides first disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    /// The case being compared, for sweeps over many states.
    pub context: Option<String>,
    pub monomial: Monomial,
    pub lhs: Rat,
    pub rhs: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub lhs: MPoly,
    pub rhs: MPoly,
    pub equal: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

fn first_difference(lhs: &MPoly, rhs: &MPoly) -> Option<(Monomial, Rat, Rat)> {
    let monos: BTreeSet<&Monomial> = lhs.terms().chain(rhs.terms()).map(|(m, _)| m).collect();
    monos.into_iter().find_map(|m| {
        let (a, b) = (lhs.coeff(m), rhs.coeff(m));
        (a != b).then(|| (m.clone(), a, b))
    })
}

impl IdentityReport {
    pub fn compare(name: &str, lhs: MPoly, rhs: MPoly) -> Self {
        let first_discrepancy =
            first_difference(&lhs, &rhs).map(|(monomial, l, r)| Discrepancy { context: None, monomial, lhs: l, rhs: r });
        IdentityReport { name: name.into(), equal: first_discrepancy.is_none(), lhs, rhs, first_discrepancy }
    }

    /// Compares many `(label, lhs, rhs)` cases; keeps the first failing pair
    /// (or empty sides when all agree).
    pub fn sweep<I>(name: &str, cases: I) -> Self
    where
        I: IntoIterator<Item = (String, MPoly, MPoly)>,
    {
        for (label, lhs, rhs) in cases {
            if let Some((monomial, l, r)) = first_difference(&lhs, &rhs) {
                let d = Discrepancy { context: Some(label), monomial, lhs: l, rhs: r };
                return IdentityReport { name: name.into(), lhs, rhs, equal: false, first_discrepancy: Some(d) };
            }
        }
        IdentityReport { name: name.into(), lhs: MPoly::zero(), rhs: MPoly::zero(), equal: true, first_discrepancy: None }
    }

    /// Compares two Fock vectors state by state.
    pub fn compare_states(name: &str, lhs: &FockVector, rhs: &FockVector) -> Self {
        let states: BTreeSet<&FockState> = lhs.terms().chain(rhs.terms()).map(|(s, _)| s).collect();
        IdentityReport::sweep(
            name,
            states.into_iter().map(|s| (format!("{:?}", s), lhs.coeff(s), rhs.coeff(s))),
        )
    }
}

pub fn q() -> Var {
    Var::plain('q')
}

pub fn p() -> Var {
    Var::plain('p')
}

fn one_minus_power(v: Var, k: u32) -> MPoly {
    &MPoly::one() - &MPoly::var_pow(v, 2 * k as i32)
}

/// `Π_{i≤N, j≤L} (1 - q^{i+j+M-1}) / (1 - q^{i+j-1})`, as a polynomial in `q`.
pub fn macmahon_box(b: BoxDims) -> MPoly {
    let mut num = MPoly::one();
    let mut den = MPoly::one();
    for i in 1..=b.n as u32 {
        for j in 1..=b.l as u32 {
            num = &num * &one_minus_power(q(), i + j + b.m - 1);
            den = &den * &one_minus_power(q(), i + j - 1);
        }
    }
    num.div_exact(&den).expect("boxed product is a polynomial")
}

/// Largest box volume enumerated by [`verify_macmahon`].
pub const MACMAHON_LIMIT: usize = 64;

/// `Σ_{π ∈ B(N,L,M)} q^{|π|}` by enumeration.
pub fn macmahon_enumerated(b: BoxDims) -> Result<MPoly> {
    if b.cells() > MACMAHON_LIMIT {
        return Err(Error::Usage("box too large to enumerate"));
    }
    let mut counts = vec![0i64; b.cells() + 1];
    for pi in boxed_plane_partitions(b) {
        counts[pi.weight() as usize] += 1;
    }
    Ok(counts_poly(q(), &counts))
}

pub fn verify_macmahon(b: BoxDims) -> Result<IdentityReport> {
    let rhs = macmahon_enumerated(b)?;
    Ok(IdentityReport::compare(&format!("macmahon B({},{},{})", b.n, b.l, b.m), macmahon_box(b), rhs))
}

fn counts_poly(v: Var, counts: &[i64]) -> MPoly {
    let mut out = MPoly::zero();
    for (w, &c) in counts.iter().enumerate() {
        out += &MPoly::var_pow(v, 2 * w as i32).scale(&rat_int(c));
    }
    out
}

/// Number of plane partitions of each weight `0..=d` with base inside
/// `rows × rows`.
pub fn plane_partition_counts(d: u32, rows: usize) -> Vec<i64> {
    let mut counts = vec![0i64; d as usize + 1];
    for pi in plane_partitions_up_to_weight(d, rows, rows) {
        counts[pi.weight() as usize] += 1;
    }
    counts
}

/// `Π_{n≥1} (1 - vⁿ)^{-n}` truncated at degree `d`.
pub fn macmahon_series(v: Var, d: u32) -> Series {
    let mut s = Series::one(d);
    for n in 1..=d {
        let inv = series_inv_one_minus(&MPoly::var_pow(v, 2 * n as i32), d).expect("unit monomial");
        for _ in 0..n {
            s = &s * &inv;
        }
    }
    s
}

/// `Π_n (1-pⁿ)^{-n} Π_m (1-q^m)^{-m}` truncated at total degree `d`.
pub fn uc_product_truncated(d: u32) -> Series {
    &macmahon_series(p(), d) * &macmahon_series(q(), d)
}

fn pair_counts(a: &[i64], b: &[i64], d: u32) -> MPoly {
    let mut out = MPoly::zero();
    for (i, &ca) in a.iter().enumerate() {
        for (j, &cb) in b.iter().enumerate() {
            if (i + j) as u32 <= d {
                let m = Monomial::from_doubled([(p(), 2 * i as i32), (q(), 2 * j as i32)]);
                out.add_term(m, rat_int(ca * cb));
            }
        }
    }
    out
}

/// Pairs of plane partitions with `|π¹| + |π²| <= d` against the truncated
/// product.
pub fn verify_uc_limit(d: u32) -> IdentityReport {
    let counts = plane_partition_counts(d, d as usize);
    IdentityReport::compare(
        &format!("uc-limit D={}", d),
        pair_counts(&counts, &counts, d),
        uc_product_truncated(d).into_poly(),
    )
}

/// `[vⁿ] Π (1-v^k)^{-k}` against the enumerated plane-partition counts.
pub fn verify_macmahon_counts(d: u32) -> IdentityReport {
    let counts = plane_partition_counts(d, d as usize);
    IdentityReport::compare(
        &format!("plane partition counts n<={}", d),
        counts_poly(q(), &counts),
        macmahon_series(q(), d).into_poly(),
    )
}

fn column_product(v: Var, n: u32, d: u32) -> Series {
    let mut s = Series::one(d);
    for i in 1..=n {
        for l in 1..=n {
            s = &s * &series_inv_one_minus(&MPoly::var_pow(v, 2 * (i + l - 1) as i32), d).expect("unit monomial");
        }
    }
    s
}

/// Plane partitions with bases in `N₁ × N₁` and `N₂ × N₂` against
/// `Π 1/(1-p^{l+i-1}) Π 1/(1-q^{j+k-1})`.
pub fn verify_box_columns(n1: u32, n2: u32, d: u32) -> Result<IdentityReport> {
    if n1 > 3 || n2 > 3 || d > 8 {
        return Err(Error::Usage("box-columns needs N1, N2 <= 3 and D <= 8"));
    }
    let a = plane_partition_counts(d, n1 as usize);
    let b = plane_partition_counts(d, n2 as usize);
    let rhs = &column_product(p(), n1, d) * &column_product(q(), n2, d);
    Ok(IdentityReport::compare(
        &format!("box-columns N1={} N2={} D={}", n1, n2, d),
        pair_counts(&a, &b, d),
        rhs.into_poly(),
    ))
}

/// `⟨vac| Γ₊(p^{N-1/2},q^{N-1/2}) ⋯ Γ₊(p^{1/2},q^{1/2}) Γ₋(p^{1/2},q^{1/2}) ⋯
/// Γ₋(p^{N-1/2},q^{N-1/2}) |vac⟩` to degree `d`, against
/// `Π_{i,l≤N} (1-p^{l+i-1})^{-1}` and its `q` mirror.
pub fn verify_specialized_vertex(n: u32, d: u32) -> Result<IdentityReport> {
    if n > 3 || d > 6 {
        return Err(Error::Usage("specialized vertex needs N <= 3 and D <= 6"));
    }
    let half = |v: Var, k: u32| MPoly::var_pow(v, 2 * k as i32 - 1);
    // each Γ₊ lowering the weight by k costs at least p^{k/2}
    let mut ket = FockVector::vacuum().with_bound(Some(2 * d as i32)).with_energy_cost(1);
    for k in (1..=n).rev() {
        ket = gamma_minus_oracle(&half(p(), k), &half(q(), k), &ket, d)?;
    }
    for k in 1..=n {
        ket = gamma_plus_oracle(&half(p(), k), &half(q(), k), &ket);
    }
    let lhs = pair(&DualFockVector::vacuum(), &ket);
    if !lhs.has_integer_exponents() {
        return Err(Error::Domain("vacuum expectation kept a half-integer power"));
    }
    let rhs = &column_product(p(), n, d) * &column_product(q(), n, d);
    Ok(IdentityReport::compare(&format!("specialized vertex N={} D={}", n, d), lhs, rhs.into_poly()))
}

/// `B̄₁(z) B̄₂(v)` on `|n¹, n²⟩ = M⁻¹(ν)` at lattice size `m`, mapped back to
/// partitions and truncated to degree `d`, against `Γ₋(z,v)|ν⟩`. The two
/// agree once `m >= ν₁ + d` in both components.
pub fn verify_b_limit(nu: &TwoPartition, extra_particles: u32, d: u32, m: usize) -> Result<IdentityReport> {
    let z = MPoly::var(Var::plain('z'));
    let v = MPoly::var(Var::plain('v'));
    let sector = |part: &crate::Partition, x: &MPoly| -> Result<Vec<(crate::Partition, MPoly)>> {
        let n = map_m_inverse(part, part.len() as u32 + extra_particles, m)?;
        let out = apply_b_direct(&PhaseVector::basis(n), x);
        Ok(out.terms().map(|(o, c)| (map_m(o), c.clone())).collect())
    };
    let first = sector(&nu.first, &z)?;
    let second = sector(&nu.second, &v)?;
    let mut lhs = FockVector::zero(Some(2 * d as i32));
    for (a, ca) in &first {
        for (b, cb) in &second {
            let s = FockState::from_two_partition(&TwoPartition::new(a.clone(), b.clone()));
            lhs.add_term(s, ca * cb);
        }
    }
    let rhs = gamma_interlacing(&z, &v, nu, Direction::Minus, d)?;
    Ok(IdentityReport::compare_states(&format!("b-limit {} M={} D={}", nu, m, d), &lhs, &rhs))
}
