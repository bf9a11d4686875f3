use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{Field, Rational};
use crate::Error;

/// An element `a + b·√5` of the real quadratic field ℚ(√5).
///
/// Since √5 is irrational the pair `(a, b)` is unique, so structural equality
/// and hashing agree with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenScalar {
    a: Rational,
    b: Rational,
}

impl GoldenScalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        GoldenScalar { a, b }
    }

    /// The rational part `a`.
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// The coefficient `b` of √5.
    pub fn sqrt5_part(&self) -> &Rational {
        &self.b
    }

    pub fn sqrt5() -> Self {
        GoldenScalar::new(Rational::zero(), Rational::one())
    }

    /// The golden ratio (1 + √5)/2.
    pub fn phi() -> Self {
        let half = Rational::new(1, 2).unwrap();
        GoldenScalar::new(half.clone(), half)
    }

    /// Galois conjugate `a - b·√5`.
    pub fn conjugate(&self) -> Self {
        GoldenScalar::new(self.a.clone(), -&self.b)
    }

    /// Field norm `a² - 5b²`.
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) - &(&Rational::from_integer(5) * &(&self.b * &self.b))
    }

    /// Sign of `a + b√5`, decided by comparing `a²` with `5b²` when the two
    /// parts disagree in sign.
    fn sign(&self) -> Ordering {
        let sa = self.a.signum();
        let sb = self.b.signum();
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            _ => {
                // a and b have opposite signs: the term with the larger
                // square wins.
                let a2 = &self.a * &self.a;
                let b2 = &Rational::from_integer(5) * &(&self.b * &self.b);
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => unreachable!("√5 is irrational"),
                }
            }
        }
    }
}

impl Field for GoldenScalar {
    const NAME: &'static str = "golden";

    fn zero() -> Self {
        GoldenScalar::new(Rational::zero(), Rational::zero())
    }

    fn one() -> Self {
        GoldenScalar::new(Rational::one(), Rational::zero())
    }

    fn from_rational(q: Rational) -> Self {
        GoldenScalar::new(q, Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn signum(&self) -> Ordering {
        self.sign()
    }

    fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/(a + b√5) = (a - b√5)/(a² - 5b²); the norm is nonzero for x ≠ 0.
        let n = self.norm();
        Ok(GoldenScalar::new(&self.a / &n, -(&self.b / &n)))
    }

    fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * 5f64.sqrt()
    }
}

impl Ord for GoldenScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign()
    }
}

impl PartialOrd for GoldenScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for GoldenScalar {
    type Output = GoldenScalar;
    fn add(self, rhs: Self) -> Self {
        GoldenScalar::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for GoldenScalar {
    type Output = GoldenScalar;
    fn sub(self, rhs: Self) -> Self {
        GoldenScalar::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for GoldenScalar {
    type Output = GoldenScalar;
    fn mul(self, rhs: Self) -> Self {
        // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
        let five = Rational::from_integer(5);
        let a = &(&self.a * &rhs.a) + &(&five * &(&self.b * &rhs.b));
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        GoldenScalar::new(a, b)
    }
}

impl Neg for GoldenScalar {
    type Output = GoldenScalar;
    fn neg(self) -> Self {
        GoldenScalar::new(-self.a, -self.b)
    }
}

impl From<Rational> for GoldenScalar {
    fn from(q: Rational) -> Self {
        GoldenScalar::from_rational(q)
    }
}

impl fmt::Display for GoldenScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}~{}", self.a, self.b)
        }
    }
}

impl fmt::Debug for GoldenScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GoldenScalar {
    type Err = Error;

    /// `p/q` or `p/q~r/s`, meaning p/q + (r/s)·√5.
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.split_once('~') {
            Some((a, b)) => Ok(GoldenScalar::new(a.parse()?, b.parse()?)),
            None => Ok(GoldenScalar::from_rational(s.parse()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GoldenScalar {
        s.parse().unwrap()
    }

    #[test]
    fn sqrt5_squared_is_five() {
        let r = GoldenScalar::sqrt5();
        assert_eq!(r.clone() * r, g("5"));
    }

    #[test]
    fn golden_ratio_identity() {
        let phi = GoldenScalar::phi();
        assert_eq!(phi.clone() * phi.clone(), phi + GoldenScalar::one());
    }

    #[test]
    fn comparisons() {
        assert_eq!(g("1").cmp(&g("0~1")), Ordering::Less);
        // (9/4)² = 81/16 > 5
        assert_eq!(g("9/4").cmp(&g("0~1")), Ordering::Greater);
        assert_eq!(g("3/2~-1/2").cmp(&g("3/2~-1/2")), Ordering::Equal);
        // φ⁻¹ = φ - 1 ≈ 0.618
        assert_eq!(g("-1/2~1/2").cmp(&g("5/8")), Ordering::Less);
        assert_eq!(g("-1/2~1/2").cmp(&g("3/5")), Ordering::Greater);
    }

    #[test]
    fn inverse_of_phi() {
        let inv = GoldenScalar::phi().inverse().unwrap();
        assert_eq!(inv, g("-1/2~1/2"));
        assert!(matches!(GoldenScalar::zero().inverse(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn token_syntax() {
        assert_eq!(g("1/2~1/2"), GoldenScalar::phi());
        assert_eq!(g("2/4~0").to_string(), "1/2");
        assert_eq!(g("-3~2/6").to_string(), "-3~1/3");
        for bad in ["~1", "1~", "1~2~3", "1 ~2"] {
            assert!(bad.parse::<GoldenScalar>().is_err(), "{bad:?}");
        }
    }
}
