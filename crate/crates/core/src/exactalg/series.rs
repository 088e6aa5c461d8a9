use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_traits::One;

use super::{MPoly, Monomial, Rat, Var};
use crate::error::{Error, Result};

/// A power series truncated at total degree `bound`, optionally with extra
/// per-variable degree caps. Every stored term respects the truncation.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    poly: MPoly,
    bound: u32,
    caps: Vec<(Var, u32)>,
}

impl Series {
    pub fn new(poly: MPoly, bound: u32) -> Result<Self> {
        Series::with_caps(poly, bound, Vec::new())
    }

    pub fn with_caps(poly: MPoly, bound: u32, mut caps: Vec<(Var, u32)>) -> Result<Self> {
        if !poly.is_polynomial() {
            return Err(Error::NonSeriesExponent);
        }
        caps.sort();
        caps.dedup_by(|a, b| {
            if a.0 == b.0 {
                b.1 = b.1.min(a.1);
                true
            } else {
                false
            }
        });
        let mut s = Series { poly, bound, caps };
        s.truncate();
        Ok(s)
    }

    pub fn one(bound: u32) -> Self {
        Series { poly: MPoly::one(), bound, caps: Vec::new() }
    }

    pub fn zero(bound: u32) -> Self {
        Series { poly: MPoly::zero(), bound, caps: Vec::new() }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn caps(&self) -> &[(Var, u32)] {
        &self.caps
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MPoly {
        self.poly
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.poly.coeff(m)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Whether a monomial survives this truncation.
    pub fn admits(&self, m: &Monomial) -> bool {
        m.doubled_degree() <= 2 * self.bound as i32
            && self.caps.iter().all(|&(v, c)| m.exp(v) <= 2 * c as i32)
    }

    /// Re-truncates to a smaller bound.
    pub fn with_bound(&self, bound: u32) -> Series {
        let mut s = Series {
            poly: self.poly.clone(),
            bound: bound.min(self.bound),
            caps: self.caps.clone(),
        };
        s.truncate();
        s
    }

    fn truncate(&mut self) {
        let bound = 2 * self.bound as i32;
        let caps = self.caps.clone();
        self.poly.retain(|m| {
            m.doubled_degree() <= bound && caps.iter().all(|&(v, c)| m.exp(v) <= 2 * c as i32)
        });
    }

    fn joint(&self, other: &Series) -> (u32, Vec<(Var, u32)>) {
        let mut caps = self.caps.clone();
        caps.extend_from_slice(&other.caps);
        (self.bound.min(other.bound), caps)
    }

    fn build(poly: MPoly, bound: u32, caps: Vec<(Var, u32)>) -> Series {
        Series::with_caps(poly, bound, caps).expect("series operands stay polynomial")
    }
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;
    fn add(self, rhs: &'a Series) -> Series {
        let (bound, caps) = self.joint(rhs);
        Series::build(&self.poly + &rhs.poly, bound, caps)
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;
    fn sub(self, rhs: &'a Series) -> Series {
        let (bound, caps) = self.joint(rhs);
        Series::build(&self.poly - &rhs.poly, bound, caps)
    }
}

impl<'a> Mul<&'a Series> for &'a Series {
    type Output = Series;
    fn mul(self, rhs: &'a Series) -> Series {
        let (bound, caps) = self.joint(rhs);
        let probe = Series { poly: MPoly::zero(), bound, caps: caps.clone() };
        let mut out = MPoly::zero();
        for (ma, ca) in self.poly.terms() {
            for (mb, cb) in rhs.poly.terms() {
                let m = ma.mul(mb);
                if probe.admits(&m) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        Series::build(out, bound, caps)
    }
}

/// `1 / (1 - m)` as a geometric series truncated at total degree `bound`.
pub fn series_inv_one_minus(m: &MPoly, bound: u32) -> Result<Series> {
    let (mono, c) = m.as_term().ok_or(Error::NotUnitMonomial)?;
    if !c.is_one() {
        return Err(Error::NotUnitMonomial);
    }
    if !m.is_polynomial() {
        return Err(Error::NonSeriesExponent);
    }
    if mono.is_one() {
        return Err(Error::ConstantSeries);
    }
    let mut out = MPoly::zero();
    let mut power = Monomial::one();
    while power.doubled_degree() <= 2 * bound as i32 {
        out.add_term(power.clone(), Rat::one());
        power = power.mul(mono);
    }
    Series::new(out, bound)
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg {})", self.poly, self.bound + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn geometric_counts_total_degree() {
        let (z, x) = (Var::plain('z'), Var::plain('x'));
        let zx = &MPoly::var(z) * &MPoly::var(x);
        let s = series_inv_one_minus(&zx, 4).unwrap();
        let expected = &(&MPoly::one() + &zx) + &zx.pow(2);
        assert_eq!(s.poly(), &expected);

        let p = MPoly::var(Var::plain('p'));
        let s = series_inv_one_minus(&p, 3).unwrap();
        assert_eq!(s.poly().to_string(), "1 + p + p^2 + p^3");
        let s = series_inv_one_minus(&p.pow(2), 3).unwrap();
        assert_eq!(s.poly().to_string(), "1 + p^2");
    }

    #[test]
    fn inverse_errors() {
        assert_eq!(series_inv_one_minus(&MPoly::one(), 3).unwrap_err(), Error::ConstantSeries);
        assert_eq!(series_inv_one_minus(&MPoly::int(3), 3).unwrap_err(), Error::NotUnitMonomial);
        let two_p = MPoly::var(Var::plain('p')).scale(&super::super::rat_int(2));
        assert_eq!(series_inv_one_minus(&two_p, 3).unwrap_err(), Error::NotUnitMonomial);
    }

    #[test]
    fn inverse_times_one_minus_is_one() {
        let (a, b) = (Var::plain('p'), Var::plain('q'));
        let mut monos = Vec::new();
        for i in 0..=3i32 {
            for j in 0..=3i32 {
                if (1..=3).contains(&(i + j)) {
                    monos.push(Monomial::from_doubled([(a, 2 * i), (b, 2 * j)]));
                }
            }
        }
        for m in monos {
            for bound in 0..6 {
                let mp = MPoly::monomial(m.clone());
                let inv = series_inv_one_minus(&mp, bound).unwrap();
                let one_minus = Series::new(&MPoly::one() - &mp, bound).unwrap();
                assert_eq!(&inv * &one_minus, Series::one(bound), "{} at {}", m, bound);
            }
        }
    }

    #[test]
    fn per_variable_caps() {
        let (p, q) = (Var::plain('p'), Var::plain('q'));
        let poly = (&MPoly::one() + &(&MPoly::var(p) + &MPoly::var(q))).pow(3);
        let s = Series::with_caps(poly, 3, alloc::vec![(p, 1)]).unwrap();
        assert!(s.poly().terms().all(|(m, _)| m.exp(p) <= 2));
        assert_eq!(s.coeff(&Monomial::var(q).pow(3)), super::super::rat_int(1));
    }

    #[test]
    fn rejects_non_series_exponents() {
        let h = MPoly::var_pow(Var::plain('p'), 1);
        assert_eq!(Series::new(h, 2).unwrap_err(), Error::NonSeriesExponent);
    }
}
