//! Exact ordered fields.
//!
//! All geometry in this crate is generic over [`Field`], which is implemented
//! for the rationals ([`Rational`]) and for the real quadratic field
//! ℚ(√5) ([`GoldenScalar`]). Nothing here ever rounds: comparisons are decided
//! by integer arithmetic only. The only floating point conversion is
//! [`Field::to_f64`], which exists for drawing pictures.

mod golden;
mod rational;

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

pub use golden::GoldenScalar;
pub use rational::Rational;

use crate::Error;

/// A totally ordered field with exact arithmetic.
///
/// The textual form (`Display`/`FromStr`) is the token syntax used by every
/// file format in the crate.
pub trait Field:
    Clone
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + FromStr<Err = Error>
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Name used in the `field <name>` header of arrangement files.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn signum(&self) -> Ordering {
        self.cmp(&Self::zero())
    }

    /// Multiplicative inverse.
    fn inverse(&self) -> Result<Self, Error>;

    fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self.clone() * rhs.inverse()?)
    }

    fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Approximate value, for rendering only.
    fn to_f64(&self) -> f64;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field_axioms<F: Field>(x: F, y: F, z: F) {
        assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
        assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        assert_eq!(
            x.clone() * (y.clone() + z.clone()),
            x.clone() * y.clone() + x.clone() * z.clone()
        );
        assert_eq!(x.clone() - x.clone(), F::zero());
        if !x.is_zero() {
            assert_eq!(x.clone() * x.inverse().unwrap(), F::one());
        } else {
            assert!(matches!(x.inverse(), Err(Error::DivisionByZero)));
        }
    }

    #[test]
    fn axioms_on_a_few_values() {
        let q = |s: &str| s.parse::<Rational>().unwrap();
        field_axioms(q("3/7"), q("-2"), q("5/3"));
        field_axioms(q("0"), q("1/2"), q("-1/9"));
        let g = |s: &str| s.parse::<GoldenScalar>().unwrap();
        field_axioms(g("1/2~1/2"), g("-3~2/3"), g("7/5"));
        field_axioms(g("0~1"), g("0"), g("-1~-1"));
    }
}
