use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use super::rat::{Rat, RatParseError};

/// A point of [-1,1]² with exact rational coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Q2Point {
    pub first: Rat,
    pub second: Rat,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PointError {
    #[error("coordinate {0} lies outside [-1, 1]")]
    Domain(Rat),
    #[error("expected `a,b`, found `{0}`")]
    Shape(String),
    #[error(transparent)]
    Rat(#[from] RatParseError),
}

impl Q2Point {
    pub const ZERO: Q2Point = Q2Point {
        first: Rat::ZERO,
        second: Rat::ZERO,
    };
    pub const ONE: Q2Point = Q2Point {
        first: Rat::ONE,
        second: Rat::ZERO,
    };

    /// A point, rejecting coordinates outside [-1, 1].
    pub fn new(first: Rat, second: Rat) -> Result<Self, PointError> {
        for c in [first, second] {
            if !c.in_unit_range() {
                return Err(PointError::Domain(c));
            }
        }
        Ok(Q2Point { first, second })
    }

    /// A point the caller knows to be in range.
    pub(crate) fn raw(first: Rat, second: Rat) -> Self {
        debug_assert!(first.in_unit_range() && second.in_unit_range());
        Q2Point { first, second }
    }

    pub fn is_valid(&self) -> bool {
        self.first.in_unit_range() && self.second.in_unit_range()
    }
}

impl fmt::Display for Q2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.first, self.second)
    }
}

impl fmt::Debug for Q2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.first, self.second)
    }
}

impl Serialize for Q2Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Q2Point {
    type Err = PointError;

    /// Parses `a,b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| PointError::Shape(s.trim().to_string()))?;
        Q2Point::new(a.parse()?, b.parse()?)
    }
}
