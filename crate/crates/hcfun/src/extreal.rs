//! Extended reals and closed extended intervals.
//!
//! `ExtReal` is a point of the extended real line with the total order
//! `-inf < finite < +inf`. `Interval` is a closed interval `[lo, hi]` of
//! extended reals with `lo <= hi`; degenerate intervals stand for points.
//! No interval arithmetic is provided, only the order structure, width
//! and modulus.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point of the extended real line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtReal {
    NegInf,
    Finite(f64),
    PosInf,
}

impl ExtReal {
    /// Classifies an `f64`, mapping IEEE infinities to the infinite points.
    /// NaN is rejected.
    pub fn from_f64(x: f64) -> Result<Self> {
        if x.is_nan() {
            return Err(Error::NotANumber("NaN is not an extended real".into()));
        }
        Ok(if x == f64::INFINITY {
            ExtReal::PosInf
        } else if x == f64::NEG_INFINITY {
            ExtReal::NegInf
        } else {
            ExtReal::Finite(x)
        })
    }

    /// A finite value known to be non-NaN. Panics on NaN.
    pub fn finite(x: f64) -> Self {
        assert!(x.is_finite(), "ExtReal::finite requires a finite value, got {x}");
        ExtReal::Finite(x)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    /// The value as an `f64`, with infinities mapped to IEEE infinities.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtReal::NegInf => f64::NEG_INFINITY,
            ExtReal::Finite(x) => x,
            ExtReal::PosInf => f64::INFINITY,
        }
    }

    pub fn abs(self) -> ExtReal {
        match self {
            ExtReal::NegInf | ExtReal::PosInf => ExtReal::PosInf,
            ExtReal::Finite(x) => ExtReal::Finite(x.abs()),
        }
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtReal::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            // Finite values are non-NaN by construction.
            (Finite(a), Finite(b)) => a.partial_cmp(b).unwrap(),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => write!(f, "-inf"),
            ExtReal::PosInf => write!(f, "+inf"),
            ExtReal::Finite(x) => write!(f, "{x}"),
        }
    }
}

// Structured-text form: finite values as numbers, infinities as the
// strings "-inf" / "+inf".
impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtReal::NegInf => serializer.serialize_str("-inf"),
            ExtReal::PosInf => serializer.serialize_str("+inf"),
            ExtReal::Finite(x) => serializer.serialize_f64(*x),
        }
    }
}

struct ExtRealVisitor;

impl<'de> Visitor<'de> for ExtRealVisitor {
    type Value = ExtReal;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a number or one of the strings \"-inf\", \"+inf\"")
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<ExtReal, E> {
        ExtReal::from_f64(v).map_err(|e| E::custom(e.to_string()))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExtReal, E> {
        Ok(ExtReal::Finite(v as f64))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExtReal, E> {
        Ok(ExtReal::Finite(v as f64))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExtReal, E> {
        match v {
            "-inf" => Ok(ExtReal::NegInf),
            "+inf" | "inf" => Ok(ExtReal::PosInf),
            other => Err(E::custom(format!("unrecognized extended real token {other:?}"))),
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_any(ExtRealVisitor)
    }
}

/// A closed extended interval `[lo, hi]`, `lo <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: ExtReal,
    hi: ExtReal,
}

impl Interval {
    pub fn new(lo: ExtReal, hi: ExtReal) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Interval { lo, hi })
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: ExtReal) -> Self {
        Interval { lo: x, hi: x }
    }

    /// Convenience constructor from finite `f64` endpoints.
    pub fn finite(lo: f64, hi: f64) -> Result<Self> {
        Interval::new(ExtReal::from_f64(lo)?, ExtReal::from_f64(hi)?)
    }

    pub fn lo(&self) -> ExtReal {
        self.lo
    }

    pub fn hi(&self) -> ExtReal {
        self.hi
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    /// Width per the convention: finite difference when both endpoints are
    /// finite, `+inf` for any half-infinite or doubly infinite interval, and
    /// `0` for the degenerate intervals at `-inf` or `+inf`.
    pub fn width(&self) -> ExtReal {
        match (self.lo, self.hi) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(b - a),
            (ExtReal::NegInf, ExtReal::NegInf) | (ExtReal::PosInf, ExtReal::PosInf) => {
                ExtReal::Finite(0.0)
            }
            _ => ExtReal::PosInf,
        }
    }

    /// `max(|lo|, |hi|)`.
    pub fn modulus(&self) -> ExtReal {
        self.lo.abs().max(self.hi.abs())
    }

    /// The interval order: `[a_lo, a_hi] <= [b_lo, b_hi]` iff both endpoint
    /// comparisons hold.
    pub fn leq(&self, other: &Interval) -> bool {
        self.lo <= other.lo && self.hi <= other.hi
    }

    /// Set inclusion `self ⊆ other`.
    pub fn subset(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

// Two-element array [lo, hi]; degenerate intervals are written as a bare
// number (or "-inf"/"+inf" token) and accepted in either form.
impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_degenerate() {
            self.lo.serialize(serializer)
        } else {
            let mut seq = serializer.serialize_seq(Some(2))?;
            seq.serialize_element(&self.lo)?;
            seq.serialize_element(&self.hi)?;
            seq.end()
        }
    }
}

struct IntervalVisitor;

impl<'de> Visitor<'de> for IntervalVisitor {
    type Value = Interval;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a two-element array [lo, hi] or a bare extended real")
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Interval, E> {
        ExtRealVisitor.visit_f64(v).map(Interval::point)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Interval, E> {
        ExtRealVisitor.visit_i64(v).map(Interval::point)
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Interval, E> {
        ExtRealVisitor.visit_u64(v).map(Interval::point)
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Interval, E> {
        ExtRealVisitor.visit_str(v).map(Interval::point)
    }

    fn visit_seq<A: de::SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Interval, A::Error> {
        let lo: ExtReal = seq
            .next_element()?
            .ok_or_else(|| de::Error::invalid_length(0, &self))?;
        let hi: ExtReal = seq
            .next_element()?
            .ok_or_else(|| de::Error::invalid_length(1, &self))?;
        if seq.next_element::<ExtReal>()?.is_some() {
            return Err(de::Error::invalid_length(3, &self));
        }
        Interval::new(lo, hi).map_err(|e| de::Error::custom(e.to_string()))
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_any(IntervalVisitor)
    }
}
