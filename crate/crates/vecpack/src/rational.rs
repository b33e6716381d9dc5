//! Exact rational arithmetic. Every coordinate that flows through the
//! library is a `Rational`; nothing is ever rounded.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// Arbitrary-precision rational in canonical form (gcd 1, positive
/// denominator). Backed by `num::BigRational`, which maintains the
/// canonical form on every operation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Non-negative integer power, exact.
    pub fn pow(&self, exp: u32) -> Self {
        Rational(self.0.pow(exp as i32))
    }

    /// Exact r-th root when the value is a perfect r-th power of a
    /// rational, `None` otherwise.
    pub fn nth_root_exact(&self, r: u32) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let num_root = self.0.numer().nth_root(r);
        let den_root = self.0.denom().nth_root(r);
        let candidate = BigRational::new(num_root, den_root);
        if candidate.pow(r as i32) == self.0 {
            Some(Rational(candidate))
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// True iff the value lies in the closed interval [0, 1].
    pub fn in_unit_interval(&self) -> bool {
        !self.is_negative() && self.0 <= BigRational::one()
    }

    /// Canonical "p/q" rendering, always with explicit denominator.
    pub fn canonical_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }

    /// Parses a canonical "p/q" string. Rejects non-canonical input
    /// (gcd > 1, non-positive denominator, missing slash).
    pub fn parse_canonical(s: &str) -> Result<Self, Error> {
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| Error::BadRational(s.to_string()))?;
        let p = BigInt::from_str(p).map_err(|_| Error::BadRational(s.to_string()))?;
        let q = BigInt::from_str(q).map_err(|_| Error::BadRational(s.to_string()))?;
        if q <= BigInt::zero() {
            return Err(Error::BadRational(s.to_string()));
        }
        if num::integer::gcd(p.clone(), q.clone()) != BigInt::one() {
            return Err(Error::BadRational(s.to_string()));
        }
        Ok(Rational(BigRational::new(p, q)))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.canonical_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rational::parse_canonical(&s).map_err(de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0
            .partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn canonical_string_round_trip() {
        for (p, q) in [(1i64, 2i64), (-3, 7), (0, 1), (5, 1)] {
            let r = Rational::new(p, q);
            let back = Rational::parse_canonical(&r.canonical_string()).unwrap();
            assert_eq!(r, back);
        }
    }

    #[test]
    fn rejects_non_canonical() {
        assert!(Rational::parse_canonical("2/4").is_err());
        assert!(Rational::parse_canonical("1/-2").is_err());
        assert!(Rational::parse_canonical("1/0").is_err());
        assert!(Rational::parse_canonical("3").is_err());
        assert!(Rational::parse_canonical("a/b").is_err());
    }

    #[test]
    fn field_axioms_under_random_operations() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let a = Rational::new(rng.gen_range(-50..=50), rng.gen_range(1..=50));
            let b = Rational::new(rng.gen_range(-50..=50), rng.gen_range(1..=50));
            let c = Rational::new(rng.gen_range(-50..=50), rng.gen_range(1..=50));
            assert_eq!(
                (a.clone() + b.clone()) + c.clone(),
                a.clone() + (b.clone() + c.clone())
            );
            if !a.is_zero() {
                assert_eq!(a.clone() * (Rational::one() / a.clone()), Rational::one());
            }
            // canonical form is stable: re-parsing the rendering is identity
            let s = (a * b).canonical_string();
            assert_eq!(Rational::parse_canonical(&s).unwrap().canonical_string(), s);
        }
    }

    #[test]
    fn exact_roots() {
        assert_eq!(
            Rational::new(4, 9).nth_root_exact(2),
            Some(Rational::new(2, 3))
        );
        assert_eq!(Rational::new(2, 1).nth_root_exact(2), None);
        assert_eq!(
            Rational::new(8, 27).nth_root_exact(3),
            Some(Rational::new(2, 3))
        );
    }
}
