//! Named verification checks and the suites the CLI runs.

use std::collections::BTreeSet;
use std::thread;

use serde_json::{json, Value};

use ucpp_core::exactalg::{series_inv_one_minus, Var};
use ucpp_core::fock::{
    apply_h, conjugation_check, dual_from_2partition, gamma_interlacing, gamma_minus_oracle, gamma_plus_oracle, pair,
    state_from_2partition, states_up_to_energy, ConjugationKind, Direction, DualFockVector, FockState, FockVector,
    ModeOp,
};
use ucpp_core::genfun::{
    macmahon_box, macmahon_enumerated, verify_b_limit, verify_box_columns, verify_macmahon_counts,
    verify_specialized_vertex, verify_uc_limit, IdentityReport,
};
use ucpp_core::partitions::two_partitions_up_to_weight;
use ucpp_core::phasemodel::{
    apply_b_direct, apply_b_monodromy, apply_b_transfer, apply_c_dual, apply_c_monodromy, apply_c_transfer,
    occupation_vectors, printed_r_matrix, scalar_product_op, scalar_product_pp, scalar_product_schur, verify_rtt,
    DualPhaseVector, OccupationVector, PhaseVector, ScalarArgs, ScalarDims,
};
use ucpp_core::schur::{branch, schur_bialternant, schur_tableaux};
use ucpp_core::{BoxDims, Error, MPoly, Result};

use crate::json::phase_vector_to_json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Macmahon,
    Routes,
    BbCommute,
    TransferRoutes,
    Fock,
    Vertex,
    BoxColumns,
    UcLimit,
    RttDiagnostic,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Macmahon,
        Suite::Routes,
        Suite::BbCommute,
        Suite::TransferRoutes,
        Suite::Fock,
        Suite::Vertex,
        Suite::BoxColumns,
        Suite::UcLimit,
        Suite::RttDiagnostic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Macmahon => "macmahon",
            Suite::Routes => "routes",
            Suite::BbCommute => "bb-commute",
            Suite::TransferRoutes => "lemma34",
            Suite::Fock => "fock",
            Suite::Vertex => "vertex",
            Suite::BoxColumns => "box-columns",
            Suite::UcLimit => "uc-limit",
            Suite::RttDiagnostic => "rtt-diagnostic",
        }
    }
}

/// Knobs for a verification run. `macmahon` is the closed form checked by
/// the macmahon suite; tests swap it to exercise the failure path.
#[derive(Clone, Copy)]
pub struct Config {
    pub max_deg: Option<u32>,
    pub macmahon: fn(BoxDims) -> MPoly,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_deg: None, macmahon: macmahon_box }
    }
}

impl Config {
    fn deg(&self, default: u32) -> u32 {
        self.max_deg.unwrap_or(default)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub reports: Vec<IdentityReport>,
    /// Extra structured output (the RTT residuals).
    pub diagnostic: Option<(String, Value)>,
}

impl SuiteOutcome {
    /// Diagnostics never fail a run; only reports do.
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.equal)
    }
}

fn phase_cases<'a>(
    label: &'a str,
    a: &'a PhaseVector,
    b: &'a PhaseVector,
) -> impl Iterator<Item = (String, MPoly, MPoly)> + 'a {
    let keys: BTreeSet<&OccupationVector> = a.terms().chain(b.terms()).map(|(n, _)| n).collect();
    keys.into_iter().map(move |n| (format!("{} at {:?}", label, n), a.coeff(n), b.coeff(n)))
}

fn dual_cases<'a>(
    label: &'a str,
    a: &'a DualPhaseVector,
    b: &'a DualPhaseVector,
) -> impl Iterator<Item = (String, MPoly, MPoly)> + 'a {
    let keys: BTreeSet<&OccupationVector> = a.terms().chain(b.terms()).map(|(n, _)| n).collect();
    keys.into_iter().map(move |n| (format!("{} at {:?}", label, n), a.coeff(n), b.coeff(n)))
}

fn fock_cases(label: String, a: &FockVector, b: &FockVector) -> Vec<(String, MPoly, MPoly)> {
    let keys: BTreeSet<&FockState> = a.terms().chain(b.terms()).map(|(s, _)| s).collect();
    keys.into_iter().map(|s| (format!("{} at {:?}", label, s), a.coeff(s), b.coeff(s))).collect()
}

fn var(c: char) -> Var {
    Var::plain(c)
}

fn mvar(c: char) -> MPoly {
    MPoly::var(var(c))
}

/// MacMahon's box formula (or `formula`) against enumeration.
pub fn check_macmahon(b: BoxDims, formula: fn(BoxDims) -> MPoly) -> Result<IdentityReport> {
    let rhs = macmahon_enumerated(b)?;
    Ok(IdentityReport::compare(&format!("macmahon B({},{},{})", b.n, b.l, b.m), formula(b), rhs))
}

/// The three scalar-product routes at one size.
pub fn check_routes(dims: ScalarDims) -> Result<Vec<IdentityReport>> {
    let args = ScalarArgs::standard(dims);
    let op = scalar_product_op(dims, &args)?;
    let pp = scalar_product_pp(dims, &args)?;
    let schur = scalar_product_schur(dims, &args)?;
    let tag = format!("N1={} N2={} M1={} M2={}", dims.n1, dims.n2, dims.m1, dims.m2);
    Ok(vec![
        IdentityReport::compare(&format!("routes {} op=pp", tag), op.clone(), pp),
        IdentityReport::compare(&format!("routes {} op=schur", tag), op, schur),
    ])
}

/// `B̄(x)B̄(y) = B̄(y)B̄(x)` and the `C̄` mirror on every state with at most
/// `particles` particles and `M <= max_sites`.
pub fn check_commuting(max_sites: usize, particles: u32) -> IdentityReport {
    let (x, y) = (mvar('x'), mvar('y'));
    let mut cases = Vec::new();
    for m in 0..=max_sites {
        for n in occupation_vectors(m, particles) {
            let s = PhaseVector::basis(n.clone());
            let xy = apply_b_direct(&apply_b_direct(&s, &x), &y);
            let yx = apply_b_direct(&apply_b_direct(&s, &y), &x);
            cases.extend(phase_cases("BB", &xy, &yx).collect::<Vec<_>>());
            let xy_t = apply_b_transfer(&apply_b_transfer(&s, var('x')), var('y'));
            let yx_t = apply_b_transfer(&apply_b_transfer(&s, var('y')), var('x'));
            cases.extend(phase_cases("BB transfer", &xy_t, &yx_t).collect::<Vec<_>>());
            let d = DualPhaseVector::basis(n);
            let xy = apply_c_dual(&apply_c_dual(&d, &x), &y);
            let yx = apply_c_dual(&apply_c_dual(&d, &y), &x);
            cases.extend(dual_cases("CC", &xy, &yx).collect::<Vec<_>>());
            let xy_t = apply_c_transfer(&apply_c_transfer(&d, var('x')), var('y'));
            let yx_t = apply_c_transfer(&apply_c_transfer(&d, var('y')), var('x'));
            cases.extend(dual_cases("CC transfer", &xy_t, &yx_t).collect::<Vec<_>>());
        }
    }
    IdentityReport::sweep(&format!("commuting families M<={} n<={}", max_sites, particles), cases)
}

/// `B̄` and `C̄` from the direct sum, the auxiliary-index transfer and the
/// symbolic monodromy all agree.
pub fn check_transfer_routes(max_sites: usize, particles: u32) -> Result<IdentityReport> {
    let x = mvar('x');
    let mut cases = Vec::new();
    for m in 0..=max_sites {
        for n in occupation_vectors(m, particles) {
            let s = PhaseVector::basis(n.clone());
            let direct = apply_b_direct(&s, &x);
            let transfer = apply_b_transfer(&s, var('x'));
            let mono = apply_b_monodromy(&s, var('x'))?;
            cases.extend(phase_cases("B direct/transfer", &direct, &transfer).collect::<Vec<_>>());
            cases.extend(phase_cases("B direct/monodromy", &direct, &mono).collect::<Vec<_>>());
            let d = DualPhaseVector::basis(n);
            let direct = apply_c_dual(&d, &x);
            let transfer = apply_c_transfer(&d, var('x'));
            let mono = apply_c_monodromy(&d, var('x'))?;
            cases.extend(dual_cases("C direct/transfer", &direct, &transfer).collect::<Vec<_>>());
            cases.extend(dual_cases("C direct/monodromy", &direct, &mono).collect::<Vec<_>>());
        }
    }
    Ok(IdentityReport::sweep(&format!("transfer routes M<={} n<={}", max_sites, particles), cases))
}

fn modes(max_doubled: i32) -> Vec<ModeOp> {
    let mut out = Vec::new();
    for m in (-max_doubled..=max_doubled).step_by(2) {
        out.extend([ModeOp::psi(m), ModeOp::psi_star(m), ModeOp::phi(m), ModeOp::phi_star(m)]);
    }
    out
}

/// Squares vanish, `[ψ_m, ψ*_n]₊ = δ_{m+n,0}` within a sector and the sectors
/// commute, on every state of energy `<= max_energy`, `|m|, |n| <= 7/2`.
pub fn check_anticommutators(max_energy: u32) -> IdentityReport {
    let ops = modes(7);
    let mut cases = Vec::new();
    for s in states_up_to_energy(max_energy) {
        let v = FockVector::basis(s.clone());
        for &a in &ops {
            cases.extend(fock_cases(format!("{:?}²", a), &v.apply_mode(a).apply_mode(a), &FockVector::zero(None)));
            for &b in &ops {
                let ab = v.apply_mode(b).apply_mode(a);
                let ba = v.apply_mode(a).apply_mode(b);
                let (lhs, rhs) = if a.sector == b.sector {
                    let delta = a.starred != b.starred && a.index + b.index == 0;
                    (ab.add(&ba), if delta { v.clone() } else { FockVector::zero(None) })
                } else {
                    (ab, ba)
                };
                cases.extend(fock_cases(format!("{:?},{:?}", a, b), &lhs, &rhs));
            }
        }
    }
    IdentityReport::sweep(&format!("anticommutators energy<={}", max_energy), cases)
}

/// `⟨μ|ν⟩ = δ_{μν}` for 2-partition states with `|χ| <= max_weight`, with
/// two different level choices on the two sides.
pub fn check_orthonormality(max_weight: u32) -> Result<IdentityReport> {
    let all = two_partitions_up_to_weight(max_weight);
    let lv = -(max_weight as i32) - 1;
    let mut cases = Vec::new();
    for a in &all {
        let bra = dual_from_2partition(&a.first, &a.second, lv, lv)?;
        for b in &all {
            let ket = state_from_2partition(&b.first, &b.second, lv - 1, lv)?;
            let want = if a == b { MPoly::one() } else { MPoly::zero() };
            cases.push((format!("⟨{}|{}⟩", a, b), pair(&bra, &ket), want));
        }
    }
    Ok(IdentityReport::sweep(&format!("orthonormality |chi|<={}", max_weight), cases))
}

/// `[H_m, H_n] = m δ_{m+n,0}` in both sectors and `[H_m, H̃_n] = 0`.
pub fn check_heisenberg(max_energy: u32, max_mode: i32) -> IdentityReport {
    let mut cases = Vec::new();
    for s in states_up_to_energy(max_energy) {
        let v = FockVector::basis(s);
        for tilde in [false, true] {
            for m in -max_mode..=max_mode {
                for n in -max_mode..=max_mode {
                    let mn = apply_h(m, tilde, &apply_h(n, tilde, &v));
                    let nm = apply_h(n, tilde, &apply_h(m, tilde, &v));
                    let want = if m + n == 0 { v.scale(&MPoly::int(m as i64)) } else { FockVector::zero(None) };
                    cases.extend(fock_cases(format!("[H{},H{}] tilde={}", m, n, tilde), &mn.sub(&nm), &want));
                    let cross = apply_h(m, !tilde, &apply_h(n, tilde, &v));
                    let cross_rev = apply_h(n, tilde, &apply_h(m, !tilde, &v));
                    cases.extend(fock_cases(format!("[H{},H~{}]", m, n), &cross, &cross_rev));
                }
            }
        }
    }
    IdentityReport::sweep(&format!("heisenberg energy<={} |m|<={}", max_energy, max_mode), cases)
}

/// The interlacing closed forms of `Γ±` against the exponential oracle.
pub fn check_gamma_closed_forms(max_weight: u32, d: u32) -> Result<IdentityReport> {
    let (z, v) = (mvar('z'), mvar('v'));
    let mut cases = Vec::new();
    for chi in two_partitions_up_to_weight(max_weight) {
        let ket = FockVector::basis(FockState::from_two_partition(&chi));
        let plus = gamma_interlacing(&z, &v, &chi, Direction::Plus, d)?;
        cases.extend(fock_cases(format!("Γ+ on {}", chi), &gamma_plus_oracle(&z, &v, &ket), &plus));
        let minus = gamma_interlacing(&z, &v, &chi, Direction::Minus, d)?;
        cases.extend(fock_cases(format!("Γ- on {}", chi), &gamma_minus_oracle(&z, &v, &ket, d)?, &minus));
    }
    Ok(IdentityReport::sweep(&format!("gamma closed forms |chi|<={} D={}", max_weight, d), cases))
}

/// `⟨vac|Γ₊(z,v)Γ₋(x,y)|vac⟩ = 1/((1-zx)(1-vy))` to degree `d`.
pub fn check_vacuum_pairing(d: u32) -> Result<IdentityReport> {
    let (z, v, x, y) = (mvar('z'), mvar('v'), mvar('x'), mvar('y'));
    let ket = gamma_plus_oracle(&z, &v, &gamma_minus_oracle(&x, &y, &FockVector::vacuum(), d)?);
    let lhs = pair(&DualFockVector::vacuum(), &ket);
    let rhs = &series_inv_one_minus(&(&z * &x), d)? * &series_inv_one_minus(&(&v * &y), d)?;
    Ok(IdentityReport::compare(&format!("vacuum pairing D={}", d), lhs, rhs.into_poly()))
}

/// `Γ₊(z,v)Γ₋(x,y)|vac⟩ = (1-zx)⁻¹(1-vy)⁻¹ Γ₋(x,y)Γ₊(z,v)|vac⟩` against
/// every dual of energy `<= dual_energy`.
pub fn check_vertex_commutation(d: u32, dual_energy: u32) -> Result<IdentityReport> {
    let (z, v, x, y) = (mvar('z'), mvar('v'), mvar('x'), mvar('y'));
    let vac = FockVector::vacuum();
    let lhs = gamma_plus_oracle(&z, &v, &gamma_minus_oracle(&x, &y, &vac, d)?);
    let rhs = gamma_minus_oracle(&x, &y, &gamma_plus_oracle(&z, &v, &vac), d)?;
    let factor = &series_inv_one_minus(&(&z * &x), d)? * &series_inv_one_minus(&(&v * &y), d)?;
    let rhs = rhs.scale(factor.poly()).with_bound(Some(2 * d as i32));
    let cases = states_up_to_energy(dual_energy).into_iter().map(|s| {
        let bra = DualFockVector::basis(s.clone());
        (format!("{:?}", s), pair(&bra, &lhs), pair(&bra, &rhs))
    });
    Ok(IdentityReport::sweep(&format!("vertex commutation D={}", d), cases))
}

/// Mode forms of the `Γ±` conjugation rules for all four fermion kinds.
pub fn check_conjugation(d: u32) -> Result<IdentityReport> {
    let (z, v) = (mvar('z'), mvar('v'));
    let mut cases = Vec::new();
    for kind in [ConjugationKind::Psi, ConjugationKind::PsiStar, ConjugationKind::Phi, ConjugationKind::PhiStar] {
        let r = conjugation_check(kind, &z, &v, d)?;
        let failed = r.failures.len() as i64;
        cases.push((format!("{:?}: {} cases, failures {:?}", kind, r.cases, r.failures), MPoly::int(failed), MPoly::zero()));
    }
    Ok(IdentityReport::sweep(&format!("conjugation D={}", d), cases))
}

/// `B̄` on lattice states against `Γ₋` for all `|ν| <= max_weight`, at
/// `M = max(min_sites, ν₁ + d)` and the next size up, with `l(ν)` and
/// `l(ν) + 2` particles.
pub fn check_b_limit(max_weight: u32, d: u32, min_sites: usize) -> Result<IdentityReport> {
    let mut cases = Vec::new();
    for nu in two_partitions_up_to_weight(max_weight) {
        let first = nu.first.largest().max(nu.second.largest()) as usize + d as usize;
        let start = first.max(min_sites);
        for m in start..=start + 1 {
            for extra in [0, 2] {
                let r = verify_b_limit(&nu, extra, d, m)?;
                let detail = r.first_discrepancy.as_ref().map(|x| format!("{:?}", x)).unwrap_or_default();
                let flag = if r.equal { MPoly::zero() } else { MPoly::one() };
                cases.push((format!("{} {}", r.name, detail), flag, MPoly::zero()));
            }
        }
    }
    Ok(IdentityReport::sweep(&format!("b-limit |nu|<={} D={}", max_weight, d), cases))
}

/// Bialternant, tableau sum and branching agree for every `μ ⊆ rows × cols`
/// in `1..=max_vars` variables.
pub fn check_schur(rows: usize, cols: u32, max_vars: usize) -> IdentityReport {
    let mut cases = Vec::new();
    for n in 1..=max_vars {
        let vars = Var::family('x', n);
        for mu in ucpp_core::partitions::partitions_in_box(rows, cols) {
            let bi = schur_bialternant(&mu, &vars);
            cases.push((format!("{} n={} bialternant/tableaux", mu, n), bi.clone(), schur_tableaux(&mu, &vars)));
            cases.push((format!("{} n={} bialternant/branching", mu, n), bi, branch(&mu, &vars)));
        }
    }
    IdentityReport::sweep(&format!("schur {}x{} n<={}", rows, cols, max_vars), cases)
}

fn rtt_diagnostic() -> (String, Value) {
    let report = verify_rtt(&printed_r_matrix(var('x'), var('y')), var('x'), var('y'));
    let entries = report.nonzero_entries();
    let mut text = format!(
        "rtt-diagnostic: printed R-matrix {} the single-site RTT relation; {} nonzero residual entries\n",
        if report.holds() { "satisfies" } else { "does not satisfy" },
        entries.len()
    );
    for &(i, j) in &entries {
        text.push_str(&format!("  residual[{}][{}] = {}\n", i, j, report.residual[i][j]));
    }
    let on_states: Vec<Value> = report
        .on_states
        .iter()
        .map(|(i, j, n, v)| json!({"row": i, "col": j, "n": n, "result": phase_vector_to_json(v)}))
        .collect();
    for (i, j, n, v) in &report.on_states {
        text.push_str(&format!("  residual[{}][{}] |{}⟩ = {:?}\n", i, j, n, v));
    }
    let value = json!({
        "name": "rtt-diagnostic",
        "holds": report.holds(),
        "nonzero_entries": entries.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
        "residual": entries.iter().map(|&(i, j)| json!({"row": i, "col": j, "op": report.residual[i][j].to_string()})).collect::<Vec<_>>(),
        "on_states": on_states,
    });
    (text, value)
}

fn run_suite(suite: Suite, cfg: &Config) -> Result<SuiteOutcome> {
    let mut reports = Vec::new();
    let mut diagnostic = None;
    match suite {
        Suite::Macmahon => {
            for n in 0..=3 {
                for l in 0..=3 {
                    for m in 0..=3 {
                        reports.push(check_macmahon(BoxDims::new(n, l, m), cfg.macmahon)?);
                    }
                }
            }
            reports.push(check_macmahon(BoxDims::new(4, 4, 4), cfg.macmahon)?);
        }
        Suite::Routes => {
            for n1 in 1..=2 {
                for n2 in 1..=2 {
                    for m1 in 1..=3 {
                        for m2 in 1..=3 {
                            reports.extend(check_routes(ScalarDims::new(n1, n2, m1, m2))?);
                        }
                    }
                }
            }
        }
        Suite::BbCommute => reports.push(check_commuting(3, 2)),
        Suite::TransferRoutes => reports.push(check_transfer_routes(3, 3)?),
        Suite::Fock => {
            let d = cfg.deg(4);
            reports.push(check_anticommutators(4));
            reports.push(check_orthonormality(3)?);
            reports.push(check_heisenberg(4, 3));
            reports.push(check_gamma_closed_forms(4, d)?);
            reports.push(check_vacuum_pairing(cfg.deg(6))?);
            reports.push(check_vertex_commutation(cfg.deg(6), 3)?);
            reports.push(check_conjugation(d.min(3))?);
            reports.push(check_b_limit(3, d, 4)?);
        }
        Suite::Vertex => {
            let d = cfg.deg(6).min(6);
            for n in 1..=2 {
                reports.push(verify_specialized_vertex(n, d)?);
            }
        }
        Suite::BoxColumns => {
            let d = cfg.deg(8).min(8);
            for n1 in 1..=2 {
                for n2 in 1..=2 {
                    reports.push(verify_box_columns(n1, n2, d)?);
                }
            }
        }
        Suite::UcLimit => {
            let d = cfg.deg(8);
            reports.push(verify_uc_limit(d));
            reports.push(verify_macmahon_counts(d));
        }
        Suite::RttDiagnostic => diagnostic = Some(rtt_diagnostic()),
    }
    Ok(SuiteOutcome { suite, reports, diagnostic })
}

/// Runs each suite on its own thread; results come back in input order.
pub fn run_suites(suites: &[Suite], cfg: &Config) -> Result<Vec<SuiteOutcome>> {
    thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run_suite(s, cfg))).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or(Err(Error::Domain("verification thread panicked"))))
            .collect()
    })
}
