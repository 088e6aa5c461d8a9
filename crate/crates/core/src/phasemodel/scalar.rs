//! The scalar product by three routes.

use alloc::vec::Vec;

use super::{apply_b_direct, apply_c_dual, inner, DualPhaseVector, PhaseVector};
use crate::error::{Error, Result};
use crate::exactalg::{MPoly, Var};
use crate::partitions::{boxed_plane_partitions, partitions_in_box, BoxDims};
use crate::schur::{schur_at, schur_bialternant};

/// Particle counts `N1, N2` and site bounds `M1, M2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ScalarDims {
    pub n1: usize,
    pub n2: usize,
    pub m1: usize,
    pub m2: usize,
}

impl ScalarDims {
    pub fn new(n1: usize, n2: usize, m1: usize, m2: usize) -> Self {
        ScalarDims { n1, n2, m1, m2 }
    }
}

/// Spectral parameters: `xs`, `zs` for the first sector, `ys`, `vs` for the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarArgs {
    pub xs: Vec<MPoly>,
    pub ys: Vec<MPoly>,
    pub zs: Vec<MPoly>,
    pub vs: Vec<MPoly>,
}

impl ScalarArgs {
    /// `x_1…x_{N1}`, `y_1…y_{N2}`, `z_1…z_{N1}`, `v_1…v_{N2}`.
    pub fn standard(dims: ScalarDims) -> Self {
        let fam = |c, n| Var::family(c, n).into_iter().map(MPoly::var).collect();
        ScalarArgs { xs: fam('x', dims.n1), ys: fam('y', dims.n2), zs: fam('z', dims.n1), vs: fam('v', dims.n2) }
    }

    fn check(&self, dims: ScalarDims) -> Result<()> {
        if dims.n1 == 0 || dims.n2 == 0 {
            return Err(Error::Usage("particle counts must be positive"));
        }
        if self.xs.len() != dims.n1 || self.zs.len() != dims.n1 || self.ys.len() != dims.n2 || self.vs.len() != dims.n2 {
            return Err(Error::Usage("argument counts must match N1 and N2"));
        }
        Ok(())
    }
}

fn sector_op(sites: usize, cs: &[MPoly], bs: &[MPoly]) -> Result<MPoly> {
    let ket = bs.iter().fold(PhaseVector::vacuum(sites), |v, z| apply_b_direct(&v, z));
    let bra = cs.iter().fold(DualPhaseVector::vacuum(sites), |v, x| apply_c_dual(&v, x));
    inner(&bra, &ket)
}

/// `⟨0| Π C̄₂(y_j) Π C̄₁(x_i) Π B̄₁(z_l) Π B̄₂(v_k) |0⟩` from the operator actions.
pub fn scalar_product_op(dims: ScalarDims, args: &ScalarArgs) -> Result<MPoly> {
    args.check(dims)?;
    let first = sector_op(dims.m1, &args.xs, &args.zs)?;
    let second = sector_op(dims.m2, &args.ys, &args.vs)?;
    Ok(&first * &second)
}

/// `Σ_{π ⊆ [N,N,M]} Π_i x_i^{|π_{1-i}| - |π_{-i}|} z_i^{|π_{i-1}| - |π_i|}`.
fn sector_pp(n: usize, m: usize, xs: &[MPoly], zs: &[MPoly]) -> MPoly {
    let mut total = MPoly::zero();
    for pi in boxed_plane_partitions(BoxDims::new(n, n, m as u32)) {
        let s = pi.slices();
        let w = |i: i32| s.get(i).weight();
        let mut term = MPoly::one();
        for i in 1..=n {
            let i32_ = i as i32;
            term = &term * &xs[i - 1].pow(w(1 - i32_) - w(-i32_));
            term = &term * &zs[i - 1].pow(w(i32_ - 1) - w(i32_));
        }
        total += term;
    }
    total
}

/// The scalar product as a generating function of boxed UC plane partitions.
pub fn scalar_product_pp(dims: ScalarDims, args: &ScalarArgs) -> Result<MPoly> {
    args.check(dims)?;
    Ok(&sector_pp(dims.n1, dims.m1, &args.xs, &args.zs) * &sector_pp(dims.n2, dims.m2, &args.ys, &args.vs))
}

fn schur_any(mu: &crate::partitions::Partition, xs: &[MPoly]) -> MPoly {
    let vars: Option<Vec<Var>> = xs
        .iter()
        .map(|p| {
            let (m, c) = p.as_term()?;
            match (m.exps(), c == &crate::exactalg::rat_int(1)) {
                ([(v, 2)], true) => Some(*v),
                _ => None,
            }
        })
        .collect();
    match vars {
        Some(vs) => {
            let mut sorted = vs.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() == vs.len() {
                return schur_bialternant(mu, &vs);
            }
            schur_at(mu, xs)
        }
        None => schur_at(mu, xs),
    }
}

fn sector_schur(n: usize, m: usize, xs: &[MPoly], zs: &[MPoly]) -> MPoly {
    let mut total = MPoly::zero();
    for mu in partitions_in_box(n, m as u32) {
        total += &schur_any(&mu, xs) * &schur_any(&mu, zs);
    }
    total
}

/// `Σ_{μ¹ ⊆ [N1,M1]} s_{μ¹}(x) s_{μ¹}(z) · Σ_{μ² ⊆ [N2,M2]} s_{μ²}(y) s_{μ²}(v)`.
pub fn scalar_product_schur(dims: ScalarDims, args: &ScalarArgs) -> Result<MPoly> {
    args.check(dims)?;
    Ok(&sector_schur(dims.n1, dims.m1, &args.xs, &args.zs) * &sector_schur(dims.n2, dims.m2, &args.ys, &args.vs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;
    use crate::exactalg::rat_int;

    fn v(c: char, i: u16) -> MPoly {
        MPoly::var(Var::new(c, i))
    }

    #[test]
    fn smallest_case() {
        let dims = ScalarDims::new(1, 1, 1, 1);
        let args = ScalarArgs::standard(dims);
        let want = &(MPoly::one() + &v('x', 1) * &v('z', 1)) * &(MPoly::one() + &v('y', 1) * &v('v', 1));
        assert_eq!(scalar_product_op(dims, &args).unwrap(), want);
        assert_eq!(scalar_product_pp(dims, &args).unwrap(), want);
        assert_eq!(scalar_product_schur(dims, &args).unwrap(), want);
        let ones: BTreeMap<Var, _> = want.vars().into_iter().map(|v| (v, rat_int(1))).collect();
        assert_eq!(scalar_product_pp(dims, &args).unwrap().eval(&ones).unwrap(), rat_int(4));
    }

    #[test]
    fn two_rows_one_column() {
        let dims = ScalarDims::new(2, 1, 1, 1);
        let args = ScalarArgs::standard(dims);
        let xs = &v('x', 1) + &v('x', 2);
        let zs = &v('z', 1) + &v('z', 2);
        let first = MPoly::one() + &xs * &zs + &(&v('x', 1) * &v('x', 2)) * &(&v('z', 1) * &v('z', 2));
        let want = &first * &(MPoly::one() + &v('y', 1) * &v('v', 1));
        assert_eq!(scalar_product_schur(dims, &args).unwrap(), want);
        assert_eq!(scalar_product_op(dims, &args).unwrap(), want);
    }

    #[test]
    fn trivialized_second_sector() {
        let dims = ScalarDims::new(1, 1, 2, 1);
        let mut args = ScalarArgs::standard(dims);
        args.ys = alloc::vec![MPoly::zero()];
        args.vs = alloc::vec![MPoly::zero()];
        let xz = &v('x', 1) * &v('z', 1);
        let want = MPoly::one() + xz.clone() + xz.pow(2);
        assert_eq!(scalar_product_op(dims, &args).unwrap(), want);
        assert_eq!(scalar_product_pp(dims, &args).unwrap(), want);
    }

    #[test]
    fn vanishing_creation_parameters() {
        for (n1, n2) in [(1, 1), (2, 1), (2, 2)] {
            let dims = ScalarDims::new(n1, n2, 2, 2);
            let mut args = ScalarArgs::standard(dims);
            args.zs.iter_mut().chain(args.vs.iter_mut()).for_each(|z| *z = MPoly::zero());
            assert!(scalar_product_op(dims, &args).unwrap().is_one());
        }
    }

    #[test]
    fn three_routes_small() {
        for n1 in 1..=2 {
            for m1 in 1..=2 {
                let dims = ScalarDims::new(n1, 1, m1, 1);
                let args = ScalarArgs::standard(dims);
                let op = scalar_product_op(dims, &args).unwrap();
                assert_eq!(op, scalar_product_pp(dims, &args).unwrap());
                assert_eq!(op, scalar_product_schur(dims, &args).unwrap());
            }
        }
    }

    #[test]
    fn symmetric_in_each_family() {
        let dims = ScalarDims::new(2, 2, 2, 1);
        let s = scalar_product_op(dims, &ScalarArgs::standard(dims)).unwrap();
        for c in ['x', 'y', 'z', 'v'] {
            let (a, b) = (Var::new(c, 1), Var::new(c, 2));
            assert_eq!(s.rename(|w| if w == a { b } else if w == b { a } else { w }), s);
        }
    }

    #[test]
    fn bad_arguments() {
        let dims = ScalarDims::new(2, 1, 1, 1);
        let args = ScalarArgs::standard(ScalarDims::new(1, 1, 1, 1));
        assert!(scalar_product_op(dims, &args).is_err());
        assert!(scalar_product_op(ScalarDims::new(0, 1, 1, 1), &args).is_err());
    }
}
