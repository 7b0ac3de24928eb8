//! Exact rationals and the handful of integer-valued maps used throughout
//! the crate (ceiling, fractional part, common denominators).

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = Ratio<i64>;

pub fn q(numer: i64, denom: i64) -> Q {
    Q::new(numer, denom)
}

pub fn int(n: i64) -> Q {
    Q::from_integer(n)
}

/// Least integer `z` with `x <= z`.
pub fn ceil(x: Q) -> i64 {
    x.ceil().to_integer()
}

/// `x - floor(x)`, always in `[0, 1)`.
pub fn frac(x: Q) -> Q {
    x - x.floor()
}

/// Least common multiple of the (reduced) denominators.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Q>>(values: I) -> i64 {
    values.into_iter().fold(1i64, |acc, v| acc.lcm(v.denom()))
}

pub fn is_nonnegative(x: &Q) -> bool {
    !x.is_negative()
}

pub fn sum(values: &[Q]) -> Q {
    values.iter().fold(Q::zero(), |acc, v| acc + v)
}

pub fn is_one(x: &Q) -> bool {
    x.is_one()
}

/// Serialized form of a rational: `[numerator, denominator]`. Reading also
/// accepts a bare integer or a string `"n/d"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational(pub Q);

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [*self.0.numer(), *self.0.denom()].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Pair([i64; 2]),
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(n) => Ok(Rational(int(n))),
            Raw::Pair([n, d]) => checked(n, d).map(Rational).map_err(de::Error::custom),
            Raw::Str(s) => match s.trim().split_once('/') {
                Some((n, d)) => {
                    let (n, d) = (n.trim().parse(), d.trim().parse());
                    match (n, d) {
                        (Ok(n), Ok(d)) => checked(n, d).map(Rational).map_err(de::Error::custom),
                        _ => Err(de::Error::custom(format!("invalid rational {s:?}"))),
                    }
                }
                None => s
                    .trim()
                    .parse()
                    .map(|n| Rational(int(n)))
                    .map_err(|_| de::Error::custom(format!("invalid rational {s:?}"))),
            },
        }
    }
}

pub fn checked(numer: i64, denom: i64) -> Result<Q> {
    if denom == 0 {
        Err(Error::ZeroDenominator)
    } else {
        Ok(q(numer, denom))
    }
}

pub(crate) mod vec_serde {
    use super::{Rational, Q};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(values: &[Q], s: S) -> Result<S::Ok, S::Error> {
        values
            .iter()
            .map(|v| Rational(*v))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        Ok(Vec::<Rational>::deserialize(d)?
            .into_iter()
            .map(|r| r.0)
            .collect())
    }
}
