//! Actions of the normalized creation and annihilation operators.

use alloc::vec::Vec;

use super::ops::{l_matrix_with, monodromy};
use super::{DualPhaseVector, OccupationVector, PhaseVector};
use crate::error::Result;
use crate::exactalg::{MPoly, Var};

/// Every `m ⊳ n` with its weight `Σ_{i>=1} i (m_i - n_i)`.
///
/// Writing `d_i = Σ_i^m - Σ_i^n` with `d_0 = 1` and `d_{M+1} = 0`, each
/// `m_k = n_k + d_k - d_{k+1}`; the weight telescopes to `Σ_{i>=1} d_i`.
pub fn admissible_successors(n: &OccupationVector) -> Vec<(OccupationVector, u32)> {
    let sites = n.sites();
    let mut out = Vec::new();
    let mut d = alloc::vec![0u8; sites + 2];
    d[0] = 1;
    successors_rec(n, 1, &mut d, &mut out);
    out.retain(|(m, _)| m.sites() == sites);
    out
}

fn successors_rec(n: &OccupationVector, i: usize, d: &mut Vec<u8>, out: &mut Vec<(OccupationVector, u32)>) {
    let sites = n.sites();
    if i == sites + 1 {
        let mut m = n.clone();
        for k in 0..=sites {
            let v = n.get(k) as i64 + d[k] as i64 - d[k + 1] as i64;
            if v < 0 {
                return;
            }
            m.set(k, v as u32);
        }
        let w = d[1..=sites].iter().map(|&b| b as u32).sum();
        out.push((m, w));
        return;
    }
    for b in 0..=1u8 {
        d[i] = b;
        // m_{i-1} = n_{i-1} + d_{i-1} - d_i must stay non-negative
        if n.get(i - 1) as i64 + d[i - 1] as i64 - b as i64 >= 0 {
            successors_rec(n, i + 1, d, out);
        }
    }
    d[i] = 0;
}

/// `B̄(x)|n⟩ = Σ_{m ⊳ n} Π_i x^{i(m_i - n_i)} |m⟩`.
pub fn apply_b_direct(state: &PhaseVector, x: &MPoly) -> PhaseVector {
    let mut out = PhaseVector::zero(state.sites());
    for (n, c) in state.terms() {
        for (m, w) in admissible_successors(n) {
            out.add_unchecked(m, c * &x.pow(w));
        }
    }
    out
}

/// `⟨n|C̄(x) = Σ_{n ⊲ m} Π_i x^{i(m_i - n_i)} ⟨m|`.
pub fn apply_c_dual(state: &DualPhaseVector, x: &MPoly) -> DualPhaseVector {
    let mut out = DualPhaseVector::zero(state.sites());
    for (n, c) in state.terms() {
        for (m, w) in admissible_successors(n) {
            out.add_unchecked(m, c * &x.pow(w));
        }
    }
    out
}

/// Site-by-site expansion of `x^{M/2} ⟨↑| L_M(x) ⋯ L_0(x) |↓⟩`.
pub fn apply_b_transfer(state: &PhaseVector, x: Var) -> PhaseVector {
    let sites = state.sites();
    let lo = MPoly::var_pow(x, -1);
    let hi = MPoly::var_pow(x, 1);
    // paths[a] holds the partial state with auxiliary index a after the sites so far
    let mut paths = [PhaseVector::zero(sites), state.clone()];
    for site in 0..=sites {
        let mut next = [PhaseVector::zero(sites), PhaseVector::zero(sites)];
        for (n, c) in paths[0].terms() {
            next[0].add_unchecked(n.clone(), c * &lo);
            if n.get(site) > 0 {
                let mut m = n.clone();
                m.set(site, n.get(site) - 1);
                next[1].add_unchecked(m, c.clone());
            }
        }
        for (n, c) in paths[1].terms() {
            let mut m = n.clone();
            m.set(site, n.get(site) + 1);
            next[0].add_unchecked(m, c.clone());
            next[1].add_unchecked(n.clone(), c * &hi);
        }
        paths = next;
    }
    paths[0].scale(&MPoly::var_pow(x, sites as i32))
}

/// `⟨n| x^{M/2} C(1/x)` expanded site by site over the auxiliary index.
pub fn apply_c_transfer(state: &DualPhaseVector, x: Var) -> DualPhaseVector {
    let sites = state.sites();
    let top = MPoly::var_pow(x, 1);
    let bottom = MPoly::var_pow(x, -1);
    // C = ⟨↓| T |↑⟩; on a bra φ raises and φ† lowers
    let mut paths = [state.clone(), DualPhaseVector::zero(sites)];
    for site in 0..=sites {
        let mut next = [DualPhaseVector::zero(sites), DualPhaseVector::zero(sites)];
        for (n, c) in paths[0].terms() {
            next[0].add_unchecked(n.clone(), c * &top);
            let mut m = n.clone();
            m.set(site, n.get(site) + 1);
            next[1].add_unchecked(m, c.clone());
        }
        for (n, c) in paths[1].terms() {
            if n.get(site) > 0 {
                let mut m = n.clone();
                m.set(site, n.get(site) - 1);
                next[0].add_unchecked(m, c.clone());
            }
            next[1].add_unchecked(n.clone(), c * &bottom);
        }
        paths = next;
    }
    paths[1].scale(&MPoly::var_pow(x, sites as i32))
}

/// `x^{M/2} B(x)` with `B` read off the symbolic monodromy matrix.
pub fn apply_b_monodromy(state: &PhaseVector, x: Var) -> Result<PhaseVector> {
    let b = &monodromy(state.sites(), x).e[0][1];
    Ok(b.apply(state)?.scale(&MPoly::var_pow(x, state.sites() as i32)))
}

/// `x^{M/2} C(1/x)` from the monodromy matrix with inverted argument.
pub fn apply_c_monodromy(state: &DualPhaseVector, x: Var) -> Result<DualPhaseVector> {
    let t = (0..=state.sites() as u16).fold(super::OpMatrix2::identity(), |t, i| {
        l_matrix_with(i, MPoly::var_pow(x, 1), MPoly::var_pow(x, -1)).mul(&t)
    });
    Ok(t.e[1][0].apply_dual(state)?.scale(&MPoly::var_pow(x, state.sites() as i32)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phasemodel::{admissible, map_m, occupation_vectors};
    use crate::schur::skew_single;
    use crate::partitions::interlaces;

    fn occ(n: &[u32]) -> OccupationVector {
        OccupationVector::new(n.to_vec()).unwrap()
    }

    fn xv() -> Var {
        Var::plain('x')
    }

    fn x() -> MPoly {
        MPoly::var(xv())
    }

    fn ket(pairs: &[(&[u32], MPoly)]) -> PhaseVector {
        let mut v = PhaseVector::zero(pairs[0].0.len() - 1);
        for (n, c) in pairs {
            v.add_term(occ(n), c.clone()).unwrap();
        }
        v
    }

    fn bra(pairs: &[(&[u32], MPoly)]) -> DualPhaseVector {
        let mut v = DualPhaseVector::zero(pairs[0].0.len() - 1);
        for (n, c) in pairs {
            v.add_term(occ(n), c.clone()).unwrap();
        }
        v
    }

    #[test]
    fn b_direct_examples() {
        let got = apply_b_direct(&PhaseVector::vacuum(2), &x());
        let want = ket(&[(&[1, 0, 0], MPoly::one()), (&[0, 1, 0], x()), (&[0, 0, 1], x().pow(2))]);
        assert_eq!(got, want);
        let got = apply_b_direct(&PhaseVector::basis(occ(&[0, 1])), &x());
        assert_eq!(got, ket(&[(&[1, 1], MPoly::one()), (&[0, 2], x())]));
        let got = apply_b_direct(&PhaseVector::basis(occ(&[4])), &x());
        assert_eq!(got, ket(&[(&[5], MPoly::one())]));
    }

    #[test]
    fn transfer_examples() {
        let got = apply_b_transfer(&PhaseVector::vacuum(1), xv());
        assert_eq!(got, ket(&[(&[1, 0], MPoly::one()), (&[0, 1], x())]));
        let got = apply_c_transfer(&DualPhaseVector::vacuum(1), xv());
        assert_eq!(got, bra(&[(&[1, 0], MPoly::one()), (&[0, 1], x())]));
    }

    #[test]
    fn c_dual_examples() {
        let got = apply_c_dual(&DualPhaseVector::vacuum(2), &x());
        let want = bra(&[(&[1, 0, 0], MPoly::one()), (&[0, 1, 0], x()), (&[0, 0, 1], x().pow(2))]);
        assert_eq!(got, want);
        let got = apply_c_dual(&DualPhaseVector::basis(occ(&[3])), &x());
        assert_eq!(got, bra(&[(&[4], MPoly::one())]));
    }

    #[test]
    fn successors_match_predicate() {
        for m in 0..=3 {
            let all = occupation_vectors(m, 4);
            for n in occupation_vectors(m, 3) {
                let succ = admissible_successors(&n);
                let brute: Vec<&OccupationVector> = all.iter().filter(|c| admissible(c, &n)).collect();
                assert_eq!(succ.len(), brute.len(), "{:?}", n);
                for (c, w) in &succ {
                    assert!(admissible(c, &n));
                    assert_eq!(*w, c.weight() - n.weight());
                }
            }
        }
    }

    #[test]
    fn three_routes_for_b_agree() {
        for m in 0..=3 {
            for n in occupation_vectors(m, 3) {
                let s = PhaseVector::basis(n.clone());
                let direct = apply_b_direct(&s, &x());
                assert_eq!(direct, apply_b_transfer(&s, xv()), "{:?}", n);
                assert_eq!(direct, apply_b_monodromy(&s, xv()).unwrap(), "{:?}", n);
                let d = DualPhaseVector::basis(n.clone());
                let dual = apply_c_dual(&d, &x());
                assert_eq!(dual, apply_c_transfer(&d, xv()), "{:?}", n);
                assert_eq!(dual, apply_c_monodromy(&d, xv()).unwrap(), "{:?}", n);
            }
        }
    }

    #[test]
    fn creation_count_and_interlacing_image() {
        for m in 0..=3 {
            for n in occupation_vectors(m, 3) {
                let nu = map_m(&n);
                let out = apply_b_direct(&PhaseVector::basis(n.clone()), &x());
                for (k, c) in out.terms() {
                    assert_eq!(k.particles(), n.particles() + 1);
                    let mu = map_m(k);
                    assert!(interlaces(&mu, &nu));
                    assert!(mu.fits(n.particles() as usize + 1, m as u32));
                    // coefficients are single-variable skew Schur values
                    assert_eq!(c, &skew_single(&mu, &nu, xv()));
                }
                let dual = apply_c_dual(&DualPhaseVector::basis(n.clone()), &x());
                assert!(dual.terms().all(|(k, _)| k.particles() == n.particles() + 1));
            }
        }
    }

    #[test]
    fn b_operators_commute() {
        let y = MPoly::var(Var::plain('y'));
        for m in 0..=3 {
            for n in occupation_vectors(m, 2) {
                let s = PhaseVector::basis(n);
                let xy = apply_b_direct(&apply_b_direct(&s, &x()), &y);
                let yx = apply_b_direct(&apply_b_direct(&s, &y), &x());
                assert_eq!(xy, yx);
                let yx_t = apply_b_transfer(&apply_b_transfer(&s, Var::plain('y')), xv());
                assert_eq!(xy, yx_t);
            }
        }
    }
}
