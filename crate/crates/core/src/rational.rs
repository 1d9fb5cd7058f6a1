//! Exact non-negative fractions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse {0:?} as a fraction a/b")]
    Syntax(String),
    #[error("expected a positive value, got {0}")]
    NotPositive(Rational),
}

/// A reduced fraction `num/den` with `den >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self, RationalError> {
        if den == 0 {
            return Err(RationalError::ZeroDenominator);
        }
        let g = gcd(num, den);
        Ok(Rational {
            num: num / g,
            den: den / g,
        })
    }

    /// `num/den` for counts that are known to have `den > 0`.
    pub fn ratio(num: usize, den: usize) -> Self {
        Rational::new(num as u64, den as u64).expect("positive denominator")
    }

    pub const fn integer(k: u64) -> Self {
        Rational { num: k, den: 1 }
    }

    /// Parses `"a/b"` or `"a"`, rejecting zero.
    pub fn parse_positive(text: &str) -> Result<Self, RationalError> {
        let r: Rational = text.parse()?;
        if r.num == 0 {
            return Err(RationalError::NotPositive(r));
        }
        Ok(r)
    }

    #[inline]
    pub fn numer(self) -> u64 {
        self.num
    }

    #[inline]
    pub fn denom(self) -> u64 {
        self.den
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    /// `⌊self · k⌋`.
    pub fn floor_mul(self, k: u64) -> u64 {
        (self.num as u128 * k as u128 / self.den as u128) as u64
    }

    /// `self · k` exactly.
    pub fn mul_int(self, k: u64) -> Rational {
        let g = gcd(k, self.den);
        Rational::new(self.num * (k / g), self.den / g).unwrap()
    }

    /// Whether `count / parts < self`, i.e. `count · den < num · parts`.
    #[inline]
    pub fn exceeds_ratio(self, count: usize, parts: usize) -> bool {
        (count as u128) * (self.den as u128) < (self.num as u128) * (parts as u128)
    }

    /// Whether `count / parts == self`.
    #[inline]
    pub fn equals_ratio(self, count: usize, parts: usize) -> bool {
        (count as u128) * (self.den as u128) == (self.num as u128) * (parts as u128)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || RationalError::Syntax(s.to_string());
        let digits = |t: &str| -> Result<u64, RationalError> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax());
            }
            t.parse().map_err(|_| syntax())
        };
        match s.trim().split_once('/') {
            Some((a, b)) => Rational::new(digits(a)?, digits(b)?),
            None => Ok(Rational::integer(digits(s.trim())?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalises_and_prints() {
        let r = Rational::new(6, 8).unwrap();
        assert_eq!((r.numer(), r.denom()), (3, 4));
        assert_eq!(r.to_string(), "3/4");
        assert_eq!(Rational::integer(2).to_string(), "2/1");
        assert_eq!(Rational::new(0, 5).unwrap(), Rational::ZERO);
        assert_eq!(Rational::new(1, 0), Err(RationalError::ZeroDenominator));
    }

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!("3/2".parse::<Rational>().unwrap(), Rational::new(3, 2).unwrap());
        assert_eq!("4".parse::<Rational>().unwrap(), Rational::integer(4));
        assert_eq!("2/4".parse::<Rational>().unwrap(), Rational::new(1, 2).unwrap());
        for bad in ["", "1.5", "-1/2", "1/", "/2", "a/b", "1/2/3"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad}");
        }
        assert_eq!("1/0".parse::<Rational>(), Err(RationalError::ZeroDenominator));
        assert!(matches!(
            Rational::parse_positive("0/3"),
            Err(RationalError::NotPositive(_))
        ));
    }

    #[test]
    fn arithmetic_helpers() {
        let t = Rational::new(3, 2).unwrap();
        assert_eq!(t.floor_mul(3), 4);
        assert_eq!(t.mul_int(4), Rational::integer(6));
        assert!(t.exceeds_ratio(2, 2));
        assert!(!t.exceeds_ratio(3, 2));
        assert!(t.equals_ratio(3, 2));
    }

    proptest! {
        #[test]
        fn order_matches_cross_multiplication(a in 0u64..1000, b in 1u64..1000, c in 0u64..1000, d in 1u64..1000) {
            let x = Rational::new(a, b).unwrap();
            let y = Rational::new(c, d).unwrap();
            prop_assert_eq!(x.cmp(&y), (a * d).cmp(&(c * b)));
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }
    }
}
