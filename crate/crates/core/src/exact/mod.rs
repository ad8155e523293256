//! Exact arithmetic over the rationals and real quadratic fields.
//!
//! Nothing in this module touches floating point. Floors of quadratic
//! irrationals are decided by integer square roots: for `b*sqrt(d)` with
//! `b = r/den`, `floor(r*sqrt(d))` is `isqrt(r^2 d)` or `-isqrt(r^2 d) - 1`
//! depending on the sign of `r`, since `r^2 d` is never a perfect square.

mod parse;
mod rational;
mod real;

pub use parse::{parse_real, ParseError, ParseErrorKind};
pub use rational::{ParseRationalError, Rational};
pub use real::{is_squarefree, ExactReal, Quadratic};

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// `{"a": "p/q", "b": "p/q", "d": int}`; rationals carry `b = "0"`, `d = 1`.
impl Serialize for ExactReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ExactReal", 3)?;
        st.serialize_field("a", self.rational_part())?;
        st.serialize_field("b", &self.irrational_coeff())?;
        st.serialize_field("d", &self.radicand().unwrap_or(1))?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExactRealRepr {
    a: Rational,
    b: Rational,
    d: u64,
}

impl<'de> Deserialize<'de> for ExactReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ExactRealRepr { a, b, d } = ExactRealRepr::deserialize(deserializer)?;
        ExactReal::quadratic(a, b, d).map_err(de::Error::custom)
    }
}
