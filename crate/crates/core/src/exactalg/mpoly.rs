use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::{rat_int, rat_pow, rat_sqrt, Rat, Var};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial over [`Rat`]; exponents may be negative or
/// half-integral. Terms are kept in graded order and never hold a zero
/// coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn mpoly_arith(a: &MPoly, b: &MPoly, op: ArithOp) -> MPoly {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        MPoly::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Self {
        MPoly::constant(rat_int(n))
    }

    pub fn var(v: Var) -> Self {
        MPoly::term(Monomial::var(v), Rat::one())
    }

    /// `v^(doubled / 2)`
    pub fn var_pow(v: Var, doubled: i32) -> Self {
        MPoly::term(Monomial::var_pow(v, doubled), Rat::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        MPoly::term(m, Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut p = MPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// The single term of a monomial polynomial.
    pub fn as_term(&self) -> Option<(&Monomial, &Rat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Largest doubled total degree among the terms.
    pub fn max_doubled_degree(&self) -> Option<i32> {
        self.terms.keys().map(Monomial::doubled_degree).max()
    }

    pub fn min_doubled_degree(&self) -> Option<i32> {
        self.terms.keys().map(Monomial::doubled_degree).min()
    }

    /// Drops every term whose doubled total degree exceeds `bound`.
    pub fn truncate_doubled(&self, bound: i32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.doubled_degree() <= bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn retain(&mut self, keep: impl Fn(&Monomial) -> bool) {
        self.terms.retain(|m, _| keep(m));
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(Monomial::is_integral)
    }

    /// True when every exponent is a non-negative integer.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.is_integral() && m.is_nonnegative())
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Evaluates at a rational point. A genuine half-integer power needs the
    /// assigned value to be a rational square.
    pub fn eval(&self, at: &BTreeMap<Var, Rat>) -> Result<Rat> {
        let mut roots: BTreeMap<Var, Rat> = BTreeMap::new();
        for m in self.terms.keys() {
            for &(v, e) in m.exps() {
                if e % 2 != 0 && !roots.contains_key(&v) {
                    let value = at.get(&v).ok_or(Error::MissingVariable(v))?;
                    roots.insert(v, rat_sqrt(value).ok_or(Error::NotASquare(v))?);
                }
            }
        }
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.exps() {
                let f = if e % 2 == 0 {
                    let value = at.get(&v).ok_or(Error::MissingVariable(v))?;
                    rat_pow(value, e / 2)
                } else {
                    rat_pow(&roots[&v], e)
                };
                t *= f.ok_or(Error::Domain("negative power of zero"))?;
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluates with `roots[v]` standing for `v^(1/2)`, so that any doubled
    /// exponent `e` contributes `roots[v]^e`.
    pub fn eval_with_roots(&self, roots: &BTreeMap<Var, Rat>) -> Result<Rat> {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.exps() {
                let r = roots.get(&v).ok_or(Error::MissingVariable(v))?;
                t *= rat_pow(r, e).ok_or(Error::Domain("negative power of zero"))?;
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes `v := replacement`. A half-integer power of `v` is only
    /// allowed when the replacement is a monomial with coefficient 1 whose
    /// exponents stay representable.
    pub fn substitute(&self, v: Var, replacement: &MPoly) -> Result<MPoly> {
        let unit_monomial = replacement
            .as_term()
            .filter(|(_, c)| c.is_one())
            .map(|(m, _)| m.clone());
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let rest = m.div(&Monomial::var_pow(v, e));
            let factor = if e == 0 {
                MPoly::one()
            } else if let Some(base) = &unit_monomial {
                if base.exps().iter().any(|&(_, b)| (b * e) % 2 != 0) {
                    return Err(Error::Domain("substitution leaves a quarter-integer power"));
                }
                MPoly::monomial(Monomial::from_doubled(
                    base.exps().iter().map(|&(w, b)| (w, b * e / 2)),
                ))
            } else if e % 2 == 0 && e > 0 {
                replacement.pow((e / 2) as u32)
            } else {
                return Err(Error::Domain("cannot raise a polynomial to this power"));
            };
            out += &factor.mul_monomial(&rest).scale(c);
        }
        Ok(out)
    }

    pub fn rename(&self, f: impl Fn(Var) -> Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.rename(&f), c.clone());
        }
        out
    }

    /// Exact quotient `self / divisor` for polynomials with non-negative
    /// exponents; `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        let lead = |p: &MPoly| -> Option<(Monomial, Rat)> {
            p.terms
                .iter()
                .max_by(|a, b| a.0.lex_cmp(b.0))
                .map(|(m, c)| (m.clone(), c.clone()))
        };
        let (dm, dc) = lead(divisor)?;
        if !self.terms.keys().chain(divisor.terms.keys()).all(Monomial::is_nonnegative) {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = lead(&rem) {
            if !rm.is_divisible_by(&dm) {
                return None;
            }
            let qm = rm.div(&dm);
            let qc = rc / &dc;
            rem = &rem - &divisor.mul_monomial(&qm).scale(&qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl From<Rat> for MPoly {
    fn from(c: Rat) -> Self {
        MPoly::constant(c)
    }
}

impl<'a> AddAssign<&'a MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for MPoly {
    fn add_assign(&mut self, rhs: MPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<'a> SubAssign<&'a MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += rhs;
        self
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
