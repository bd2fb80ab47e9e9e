use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// An exact rational number in lowest terms with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(Ratio<i64>);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

impl Rat {
    pub const ZERO: Rat = Rat(Ratio::new_raw(0, 1));
    pub const ONE: Rat = Rat(Ratio::new_raw(1, 1));
    pub const MINUS_ONE: Rat = Rat(Ratio::new_raw(-1, 1));

    /// Builds `num/den` reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rat(Ratio::new(num, den))
    }

    pub fn int(n: i64) -> Self {
        Rat(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    pub fn min(self, other: Rat) -> Rat {
        std::cmp::min(self, other)
    }

    pub fn max(self, other: Rat) -> Rat {
        std::cmp::max(self, other)
    }

    /// Whether the value lies in the closed interval [-1, 1].
    pub fn in_unit_range(&self) -> bool {
        *self >= Rat::MINUS_ONE && *self <= Rat::ONE
    }
}

/// Truncation to [-1, 1]: `min(1, max(-1, x))`.
pub fn clamp(x: Rat) -> Rat {
    Rat::ONE.min(Rat::MINUS_ONE.max(x))
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&Ratio::from_integer(*other)))
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.0 == Ratio::from_integer(*other)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Rat {
    type Err = RatParseError;

    /// Accepts `p` or `p/q`; the unicode minus sign is tolerated.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().replace('\u{2212}', "-");
        if s.is_empty() {
            return Err(RatParseError::Empty);
        }
        let bad = || RatParseError::Invalid(s.clone());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i64>().map_err(|_| bad())?,
                d.trim().parse::<i64>().map_err(|_| bad())?,
            ),
            None => (s.parse::<i64>().map_err(|_| bad())?, 1),
        };
        if den == 0 {
            return Err(RatParseError::ZeroDenominator(s));
        }
        Ok(Rat::new(num, den))
    }
}
