//! The standard models over exact rationals.
//!
//! | model        | carrier    | kind  |
//! |--------------|------------|-------|
//! | [`RModel`]   | [-1,1]     | `mv`  |
//! | [`RstarQmv`] | [-1,1]²    | `qmv` |
//! | [`RstarQw`]  | [-1,1]²    | `qw`  |
//!
//! Every operation uses the truncation [`clamp`]. Binary operations in both
//! R* models discard the second coordinates of their arguments.

mod point;
mod rat;
pub mod sample;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use point::{PointError, Q2Point};
pub use rat::{clamp, Rat, RatParseError};
pub use sample::{sample_check, sample_theory, SampleError, SampleReport, SampleValue, Sampler, DEFAULT_BOUND, GRID_LIMIT};

use crate::algebra::{Kind, Structure};

/// The MV*-algebra on [-1,1] with truncated addition.
#[derive(Clone, Copy, Debug, Default)]
pub struct RModel;

impl Structure for RModel {
    type Value = Rat;

    fn kind(&self) -> Kind {
        Kind::Mv
    }
    fn one(&self) -> Rat {
        Rat::ONE
    }
    fn zero(&self) -> Rat {
        Rat::ZERO
    }
    fn binary(&self, a: Rat, b: Rat) -> Rat {
        clamp(a + b)
    }
    fn neg(&self, a: Rat) -> Rat {
        -a
    }
    fn pos(&self, _: Rat) -> Rat {
        unreachable!("R has no primitive positive part")
    }
    fn negpart(&self, _: Rat) -> Rat {
        unreachable!("R has no primitive negative part")
    }
    fn show(&self, v: Rat) -> String {
        v.to_string()
    }
}

/// The quasi-MV* algebra on [-1,1]².
#[derive(Clone, Copy, Debug, Default)]
pub struct RstarQmv;

impl Structure for RstarQmv {
    type Value = Q2Point;

    fn kind(&self) -> Kind {
        Kind::Qmv
    }
    fn one(&self) -> Q2Point {
        Q2Point::ONE
    }
    fn zero(&self) -> Q2Point {
        Q2Point::ZERO
    }
    fn binary(&self, a: Q2Point, b: Q2Point) -> Q2Point {
        Q2Point::raw(clamp(a.first + b.first), Rat::ZERO)
    }
    fn neg(&self, a: Q2Point) -> Q2Point {
        Q2Point::raw(-a.first, -a.second)
    }
    fn pos(&self, a: Q2Point) -> Q2Point {
        Q2Point::raw(a.first.max(Rat::ZERO), a.second.max(Rat::ZERO))
    }
    fn negpart(&self, a: Q2Point) -> Q2Point {
        Q2Point::raw(a.first.min(Rat::ZERO), a.second.min(Rat::ZERO))
    }
    fn show(&self, v: Q2Point) -> String {
        v.to_string()
    }
}

/// The quasi-Wajsberg* algebra on [-1,1]². Its ⁺ and ⁻ keep the second
/// coordinate, unlike those of [`RstarQmv`].
#[derive(Clone, Copy, Debug, Default)]
pub struct RstarQw;

impl Structure for RstarQw {
    type Value = Q2Point;

    fn kind(&self) -> Kind {
        Kind::Qw
    }
    fn one(&self) -> Q2Point {
        Q2Point::ONE
    }
    fn zero(&self) -> Q2Point {
        unreachable!("0 is the term 1->1 in the implicative signature")
    }
    fn binary(&self, a: Q2Point, b: Q2Point) -> Q2Point {
        Q2Point::raw(clamp(b.first - a.first), Rat::ZERO)
    }
    fn neg(&self, a: Q2Point) -> Q2Point {
        Q2Point::raw(-a.first, -a.second)
    }
    fn pos(&self, a: Q2Point) -> Q2Point {
        Q2Point::raw(a.first.max(Rat::ZERO), a.second)
    }
    fn negpart(&self, a: Q2Point) -> Q2Point {
        Q2Point::raw(a.first.min(Rat::ZERO), a.second)
    }
    fn show(&self, v: Q2Point) -> String {
        v.to_string()
    }
}

impl RstarQw {
    pub fn arrow(&self, a: Q2Point, b: Q2Point) -> Q2Point {
        self.binary(a, b)
    }
}

/// First grid point, in grid order, where the two R* models disagree on ⁺.
pub fn pos_divergence(denominator: i64) -> Option<Q2Point> {
    Q2Point::grid(denominator).into_iter().find(|&x| RstarQmv.pos(x) != RstarQw.pos(x))
}

/// Selector for the three models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelName {
    R,
    RstarQmv,
    RstarQw,
}

impl ModelName {
    pub fn kind(self) -> Kind {
        match self {
            ModelName::R => Kind::Mv,
            ModelName::RstarQmv => Kind::Qmv,
            ModelName::RstarQw => Kind::Qw,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ModelName::R => "r",
            ModelName::RstarQmv => "rstar-qmv",
            ModelName::RstarQw => "rstar-qw",
        }
    }
}

impl fmt::Display for ModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModelName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "r" => Ok(ModelName::R),
            "rstar-qmv" => Ok(ModelName::RstarQmv),
            "rstar-qw" => Ok(ModelName::RstarQw),
            _ => Err(format!("unknown model `{s}` (expected r, rstar-qmv or rstar-qw)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }
    fn p(s: &str) -> Q2Point {
        s.parse().unwrap()
    }

    #[test]
    fn r_plus_clamps() {
        assert_eq!(RModel.binary(r("1/2"), r("3/4")), Rat::ONE);
        assert_eq!(RModel.binary(r("-1/2"), r("1/4")), r("-1/4"));
    }

    #[test]
    fn rstar_qmv_examples() {
        assert_eq!(RstarQmv.binary(p("1/2,1/3"), p("1/4,-1")), p("3/4,0"));
        assert_eq!(RstarQmv.pos(p("-1/2,1/3")), p("0,1/3"));
        assert_eq!(RstarQmv.pos(p("-1/2,-1/3")), p("0,0"));
        assert_eq!(RstarQmv.negpart(p("1/2,-1/3")), p("0,-1/3"));
    }

    #[test]
    fn rstar_qw_examples() {
        assert_eq!(RstarQw.arrow(p("1/2,1/3"), p("-1/4,1")), p("-3/4,0"));
        assert_eq!(RstarQw.pos(p("-1/2,1/3")), p("0,1/3"));
        assert_eq!(RstarQw.pos(p("-1/2,-1/3")), p("0,-1/3"));
        assert_eq!(RstarQw.arrow(p("0,0"), p("3/4,-1/2")), p("3/4,0"));
    }
}
