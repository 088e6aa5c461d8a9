use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::Var;

/// A power product `Π v^(e_v / 2)`, stored as sorted `(var, doubled exponent)`
/// pairs with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(alloc::vec![(v, 2)])
    }

    /// `v^(doubled / 2)`
    pub fn var_pow(v: Var, doubled: i32) -> Self {
        if doubled == 0 {
            Monomial::one()
        } else {
            Monomial(alloc::vec![(v, doubled)])
        }
    }

    /// Builds from arbitrary `(var, doubled exponent)` pairs; repeated
    /// variables accumulate.
    pub fn from_doubled<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m = m.mul(&Monomial::var_pow(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exps(&self) -> &[(Var, i32)] {
        &self.0
    }

    /// Doubled exponent of `v` (zero when absent).
    pub fn exp(&self, v: Var) -> i32 {
        match self.0.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn doubled_degree(&self) -> i32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|&(_, e)| e % 2 == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&(_, e)| e > 0)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.combine(other, 1)
    }

    /// Quotient with possibly negative exponents.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.combine(other, -1)
    }

    /// `true` when `other` divides `self` inside the monoid of non-negative
    /// exponent vectors.
    pub fn is_divisible_by(&self, other: &Monomial) -> bool {
        other.0.iter().all(|&(v, e)| self.exp(v) >= e)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    fn combine(&self, other: &Monomial, sign: i32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        i += 1;
                        (va, ea)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (vb, sign * eb)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, ea + sign * eb)
                    }
                },
                (Some(&(va, ea)), None) => {
                    i += 1;
                    (va, ea)
                }
                (None, Some(&(vb, eb))) => {
                    j += 1;
                    (vb, sign * eb)
                }
                (None, None) => unreachable!(),
            };
            if next.1 != 0 {
                out.push(next);
            }
        }
        Monomial(out)
    }

    /// Pure lexicographic comparison in variable order; used to pick leading
    /// terms in exact division.
    pub(crate) fn lex_cmp(&self, other: &Monomial) -> Ordering {
        first_difference(self, other)
            .map(|(ea, eb)| ea.cmp(&eb))
            .unwrap_or(Ordering::Equal)
    }

    /// Renames variables. The map must be injective on the variables present.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_doubled(self.0.iter().map(|&(v, e)| (f(v), e)))
    }
}

/// Exponents of the first variable (in variable order) where `a` and `b` differ.
fn first_difference(a: &Monomial, b: &Monomial) -> Option<(i32, i32)> {
    let (x, y) = (&a.0, &b.0);
    let (mut i, mut j) = (0, 0);
    loop {
        match (x.get(i), y.get(j)) {
            (None, None) => return None,
            (Some(&(_, ea)), None) => return Some((ea, 0)),
            (None, Some(&(_, eb))) => return Some((0, eb)),
            (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                Ordering::Less => return Some((ea, 0)),
                Ordering::Greater => return Some((0, eb)),
                Ordering::Equal => {
                    if ea != eb {
                        return Some((ea, eb));
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

/// Graded order: lower total degree first; within a degree, the monomial
/// with the larger exponent on the earliest variable comes first, so that
/// `x1 + x2` and `1 + q` print in their natural reading order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.doubled_degree()
            .cmp(&other.doubled_degree())
            .then_with(|| match first_difference(self, other) {
                Some((ea, eb)) => eb.cmp(&ea),
                None => Ordering::Equal,
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn fmt_exponent(f: &mut fmt::Formatter<'_>, doubled: i32) -> fmt::Result {
    if doubled == 2 {
        Ok(())
    } else if doubled % 2 == 0 {
        if doubled > 0 {
            write!(f, "^{}", doubled / 2)
        } else {
            write!(f, "^({})", doubled / 2)
        }
    } else {
        write!(f, "^({}/2)", doubled)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", v)?;
            fmt_exponent(f, e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
