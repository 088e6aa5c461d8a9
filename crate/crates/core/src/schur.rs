//! Schur and skew Schur polynomials in finitely many variables.

use alloc::vec;
use alloc::vec::Vec;

use crate::exactalg::{MPoly, Monomial, Var};
use crate::partitions::{interlaces, Partition};

/// `x^{|μ|-|ν|}` when `ν ≺ μ`, otherwise zero.
pub fn skew_single(mu: &Partition, nu: &Partition, x: Var) -> MPoly {
    skew_single_at(mu, nu, &MPoly::var(x))
}

/// [`skew_single`] with the variable replaced by an arbitrary polynomial.
pub fn skew_single_at(mu: &Partition, nu: &Partition, x: &MPoly) -> MPoly {
    if interlaces(mu, nu) {
        x.pow(mu.weight() - nu.weight())
    } else {
        MPoly::zero()
    }
}

fn vandermonde(vars: &[Var]) -> MPoly {
    let mut v = MPoly::one();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            v = &v * &(MPoly::var(vars[i]) - MPoly::var(vars[j]));
        }
    }
    v
}

fn determinant(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    let mut total = MPoly::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = entry * &determinant(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= &term;
        }
    }
    total
}

/// `det(x_i^{μ_j - j + n}) / Π_{i<j}(x_i - x_j)`, zero when `l(μ) > n`.
pub fn schur_bialternant(mu: &Partition, vars: &[Var]) -> MPoly {
    let n = vars.len();
    if mu.len() > n {
        return MPoly::zero();
    }
    if n == 0 {
        return MPoly::one();
    }
    let matrix: Vec<Vec<MPoly>> = vars
        .iter()
        .map(|&x| {
            (1..=n)
                .map(|j| MPoly::var_pow(x, 2 * (mu.part(j - 1) + (n - j) as u32) as i32))
                .collect()
        })
        .collect();
    let alt = determinant(&matrix);
    alt.div_exact(&vandermonde(vars))
        .expect("alternant is divisible by the Vandermonde product")
}

/// Sum over semistandard tableaux of shape `μ` filled from `1..=n`.
pub fn schur_tableaux(mu: &Partition, vars: &[Var]) -> MPoly {
    let cells: Vec<(usize, usize)> = mu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<Vec<usize>> = mu.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut counts = vec![0i32; vars.len()];
    let mut out = MPoly::zero();
    fill(&cells, 0, vars, &mut filling, &mut counts, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    vars: &[Var],
    filling: &mut [Vec<usize>],
    counts: &mut [i32],
    out: &mut MPoly,
) {
    if k == cells.len() {
        let m = Monomial::from_doubled(vars.iter().zip(counts.iter()).map(|(&v, &c)| (v, 2 * c)));
        *out += MPoly::monomial(m);
        return;
    }
    let (r, c) = cells[k];
    let mut lo = if c > 0 { filling[r][c - 1] } else { 0 };
    if r > 0 {
        lo = lo.max(filling[r - 1][c] + 1);
    }
    for e in lo..vars.len() {
        filling[r][c] = e;
        counts[e] += 1;
        fill(cells, k + 1, vars, filling, counts, out);
        counts[e] -= 1;
    }
}

/// `s_μ(x_1…x_n) = Σ_ν s_{μ/ν}(x_n) s_ν(x_1…x_{n-1})`.
pub fn branch(mu: &Partition, vars: &[Var]) -> MPoly {
    let xs: Vec<MPoly> = vars.iter().map(|&v| MPoly::var(v)).collect();
    schur_at(mu, &xs)
}

/// Schur polynomial with each variable replaced by the given polynomial,
/// computed by branching.
pub fn schur_at(mu: &Partition, xs: &[MPoly]) -> MPoly {
    skew_schur_at(mu, &Partition::empty(), xs)
}

/// `s_{μ/ν}` as a sum over interlacing chains from `μ` down to `ν`.
pub fn skew_schur(mu: &Partition, nu: &Partition, vars: &[Var]) -> MPoly {
    let xs: Vec<MPoly> = vars.iter().map(|&v| MPoly::var(v)).collect();
    skew_schur_at(mu, nu, &xs)
}

pub fn skew_schur_at(mu: &Partition, nu: &Partition, xs: &[MPoly]) -> MPoly {
    if !mu.contains(nu) {
        return MPoly::zero();
    }
    let Some((last, rest)) = xs.split_last() else {
        return if mu == nu { MPoly::one() } else { MPoly::zero() };
    };
    if mu.len() > nu.len() + xs.len() {
        return MPoly::zero();
    }
    let mut total = MPoly::zero();
    for kappa in mu.interlacing_predecessors() {
        if kappa.contains(nu) {
            let lower = skew_schur_at(&kappa, nu, rest);
            if !lower.is_zero() {
                total += &lower * &skew_single_at(mu, &kappa, last);
            }
        }
    }
    total
}
