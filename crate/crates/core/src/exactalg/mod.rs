//! Exact coefficient arithmetic.
//!
//! Coefficients are arbitrary-precision rationals ([`Rat`]). Exponents are
//! stored doubled so that half-integer powers such as `x^(1/2)` stay exact;
//! every user-facing result is expected to have even doubled exponents.

mod monomial;
mod mpoly;
mod series;
mod var;

pub use monomial::Monomial;
pub use mpoly::{mpoly_arith, ArithOp, MPoly};
pub use series::{series_inv_one_minus, Series};
pub use var::Var;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact square root of a rational, if it has one.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

pub(crate) fn rat_pow(base: &Rat, exp: i32) -> Option<Rat> {
    if exp >= 0 {
        let mut acc = Rat::one();
        for _ in 0..exp {
            acc *= base;
        }
        Some(acc)
    } else if base.is_zero() {
        None
    } else {
        rat_pow(&base.recip(), -exp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert!(r.denom() > &BigInt::zero());
        assert_eq!(rat(0, 5), Rat::zero());
        assert_eq!(rat(0, 5).denom(), &BigInt::one());
    }

    #[test]
    fn square_roots() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-4, 1)), None);
    }
}
